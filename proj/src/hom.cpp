#include "rigiduality/hom.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rigiduality {

AlgebraHom AlgebraHom::make(const AlgebraPtr& src, const AlgebraPtr& tgt,
                            const std::vector<Polynomial>& user_images) {
  if (static_cast<int>(user_images.size()) != src->user_vars())
    throw std::invalid_argument("one image polynomial per source variable required");
  AlgebraHom f;
  f.src_ = src;
  f.tgt_ = tgt;
  for (const auto& img : user_images) f.images_.push_back(tgt->nf(img));

  // images of auxiliary inversion variables: invert the image of g
  int naux = static_cast<int>(src->inverted().size());
  for (int j = 0; j < naux; ++j) {
    // inverted()[j] lives over the full source ring but only uses
    // variables below user_vars + j, whose images are known
    std::vector<Polynomial> partial = f.images_;
    for (int k = static_cast<int>(partial.size()); k < src->nvars(); ++k)
      partial.push_back(Polynomial::zero(tgt->ring()));  // unused slots
    Polynomial g_img = tgt->nf(src->inverted()[j].substitute(partial, tgt->ring()));
    Polynomial inv;
    if (!tgt->is_unit(g_img, &inv))
      throw std::invalid_argument("image of inverted element " + src->inverted()[j].str() +
                                  " is not a unit in the target");
    f.images_.push_back(inv);
  }

  // relations must be respected
  for (const auto& r : src->relations()) {
    Polynomial img = tgt->nf(r.substitute(f.images_, tgt->ring()));
    if (!img.is_zero())
      throw std::invalid_argument("source relation " + r.str() +
                                  " maps to nonzero element " + img.str());
  }
  return f;
}

AlgebraHom AlgebraHom::identity(const AlgebraPtr& a) {
  AlgebraHom f;
  f.src_ = a;
  f.tgt_ = a;
  for (int i = 0; i < a->nvars(); ++i) f.images_.push_back(Polynomial::variable(a->ring(), i));
  return f;
}

AlgebraHom AlgebraHom::localization(const AlgebraPtr& src, const Polynomial& g) {
  AlgebraPtr tgt = Algebra::localize(src, g);
  AlgebraHom f;
  f.src_ = src;
  f.tgt_ = tgt;
  for (int i = 0; i < src->nvars(); ++i) {
    int j = tgt->ring()->var_index(src->ring()->vars[i]);
    if (j < 0) throw std::logic_error("localization lost a variable");
    f.images_.push_back(Polynomial::variable(tgt->ring(), j));
  }
  f.localization_ = true;
  f.loc_elem_ = g;
  return f;
}

Polynomial AlgebraHom::apply(const Polynomial& f) const {
  return tgt_->nf(f.substitute(images_, tgt_->ring()));
}

bool AlgebraHom::is_identity() const {
  if (!same_algebra(src_, tgt_)) return false;
  for (int i = 0; i < src_->nvars(); ++i)
    if (!(images_[i] == Polynomial::variable(tgt_->ring(), i))) return false;
  return true;
}

bool AlgebraHom::is_variable_inclusion() const {
  for (int i = 0; i < src_->nvars(); ++i) {
    int j = tgt_->ring()->var_index(src_->ring()->vars[i]);
    if (j < 0 || !(images_[i] == Polynomial::variable(tgt_->ring(), j))) return false;
  }
  return true;
}

bool AlgebraHom::is_surjective_reduction() const {
  return same_ring(src_->ring(), tgt_->ring()) && is_variable_inclusion();
}

KahlerModule kahler_module(const AlgebraHom& f) {
  const AlgebraPtr& b = f.target();
  const auto& ring = b->ring();
  int g = b->nvars();
  PolyMatrix rows;
  for (const auto& rel : b->relations()) {
    std::vector<Polynomial> row(g, Polynomial::zero(ring));
    for (int j = 0; j < g; ++j) row[j] = rel.derivative(j);
    rows.push_back(std::move(row));
  }
  for (const auto& img : f.images()) {
    std::vector<Polynomial> row(g, Polynomial::zero(ring));
    for (int j = 0; j < g; ++j) row[j] = img.derivative(j);
    if (!std::all_of(row.begin(), row.end(), [](const Polynomial& p) { return p.is_zero(); }))
      rows.push_back(std::move(row));
  }
  KahlerModule km;
  km.presentation = FPModule(b, g, std::move(rows));
  for (int j = 0; j < g; ++j) km.dgens.push_back("d" + ring->vars[j]);
  return km;
}

Polynomial det_poly_matrix(const PolyMatrix& mat, const AlgebraPtr& a) {
  int n = static_cast<int>(mat.size());
  const auto& ring = a->ring();
  if (n == 0) return Polynomial::constant(1, ring);
  // subset dynamic program over column sets; works over any quotient ring
  std::vector<Polynomial> dp(std::size_t(1) << n, Polynomial::zero(ring));
  dp[0] = Polynomial::constant(1, ring);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int row = __builtin_popcount(mask);
    if (row == n || dp[mask].is_zero()) continue;
    int seen = 0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      // sign: parity of the number of chosen columns below j
      int below = __builtin_popcount(mask & ((1u << j) - 1));
      Polynomial contrib = dp[mask] * mat[row][j];
      if (below % 2 == 1) contrib = -contrib;
      dp[mask | (1u << j)] = a->nf(dp[mask | (1u << j)] + contrib);
      ++seen;
    }
    (void)seen;
  }
  return dp[(std::size_t(1) << n) - 1];
}

PolyMatrix adjugate_poly_matrix(const PolyMatrix& mat, const AlgebraPtr& a) {
  int n = static_cast<int>(mat.size());
  const auto& ring = a->ring();
  PolyMatrix adj(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PolyMatrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Polynomial> row;
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(mat[r][c]);
        minor.push_back(std::move(row));
      }
      Polynomial m = det_poly_matrix(minor, a);
      if ((i + j) % 2 == 1) m = -m;
      adj[j][i] = m;  // transpose of the cofactor matrix
    }
  return adj;
}

Polynomial resultant_in_var(const Polynomial& f, const Polynomial& g, int var,
                            const AlgebraPtr& a) {
  int df = f.degree_in(var), dg = g.degree_in(var);
  if (df < 0 || dg < 0) throw std::invalid_argument("resultant of a zero polynomial");
  const auto& ring = a->ring();
  int n = df + dg;
  PolyMatrix syl(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k)
      if (r + k < n) syl[r][r + k] = f.coeff_of_power(var, df - k);
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k)
      if (r + k < n) syl[dg + r][r + k] = g.coeff_of_power(var, dg - k);
  return det_poly_matrix(syl, a);
}

namespace {

// all size-k subsets of {0..n-1}, lexicographic; stops when visit returns
// true and reports whether it stopped
bool subsets_of_size(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// ideal of all size m minors of mat
std::vector<Polynomial> minor_ideal(const PolyMatrix& mat, int m, const AlgebraPtr& a) {
  std::vector<Polynomial> out;
  int rows = static_cast<int>(mat.size());
  int cols = rows == 0 ? 0 : static_cast<int>(mat[0].size());
  if (m == 0) {
    out.push_back(Polynomial::constant(1, a->ring()));
    return out;
  }
  if (m > rows || m > cols) return out;  // zero ideal
  subsets_of_size(rows, m, [&](const std::vector<int>& rsel) {
    subsets_of_size(cols, m, [&](const std::vector<int>& csel) {
      PolyMatrix sub;
      for (int r : rsel) {
        std::vector<Polynomial> row;
        for (int c : csel) row.push_back(mat[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial d = a->nf(det_poly_matrix(sub, a));
      if (!d.is_zero()) out.push_back(d);
      return false;
    });
    return false;
  });
  return out;
}

bool ideal_is_unit(const std::vector<Polynomial>& gens, const AlgebraPtr& a) {
  std::vector<Polynomial> all = a->relations();
  all.insert(all.end(), gens.begin(), gens.end());
  return buchberger(all, a->ring()).is_unit_ideal();
}

}  // namespace

SmoothnessResult smoothness_rank(const AlgebraHom& f) {
  SmoothnessResult res;
  KahlerModule km = kahler_module(f);
  const AlgebraPtr& b = f.target();
  const PolyMatrix& p = km.presentation.rows();
  int g = km.presentation.gens();

  int rank = -1;
  for (int k = 0; k <= g; ++k) {
    auto minors = minor_ideal(p, g - k, b);
    if (g - k == 0 || ideal_is_unit(minors, b)) {
      rank = k;
      break;
    }
  }
  if (rank < 0) {
    res.detail = "no Fitting ideal becomes the unit ideal";
    return res;
  }
  if (rank >= 1) {
    auto lower = minor_ideal(p, g - rank + 1, b);
    if (!lower.empty()) {
      std::ostringstream os;
      os << "F_" << rank - 1 << "(Omega^1) is nonzero: (";
      for (std::size_t i = 0; i < lower.size(); ++i) {
        if (i) os << ", ";
        os << lower[i].str();
      }
      os << ")";
      res.detail = os.str();
      return res;
    }
  }
  res.ok = true;
  res.rank = rank;

  // explicit basis when available
  int drop = g - rank;
  if (drop == 0) {
    res.basis = std::vector<int>();
    for (int j = 0; j < g; ++j) res.basis->push_back(j);
    return res;
  }
  int rows = static_cast<int>(p.size());
  bool found = false;
  subsets_of_size(rows, drop, [&](const std::vector<int>& rsel) {
    return subsets_of_size(g, drop, [&](const std::vector<int>& csel) -> bool {
      PolyMatrix sub;
      for (int r : rsel) {
        std::vector<Polynomial> row;
        for (int c : csel) row.push_back(p[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial det = b->nf(det_poly_matrix(sub, b));
      Polynomial det_inv;
      if (!b->is_unit(det, &det_inv)) return false;
      // solve the selected rows for the selected columns
      PolyMatrix adj = adjugate_poly_matrix(sub, b);
      std::vector<int> keep;
      for (int j = 0; j < g; ++j)
        if (std::find(csel.begin(), csel.end(), j) == csel.end()) keep.push_back(j);
      // rewrite[c][k]: d(csel[c]) = sum_k rewrite[c][k] d(keep[k])
      PolyMatrix rewrite(drop, std::vector<Polynomial>(keep.size(), Polynomial::zero(b->ring())));
      for (int c = 0; c < drop; ++c)
        for (std::size_t k = 0; k < keep.size(); ++k) {
          Polynomial acc = Polynomial::zero(b->ring());
          for (int r = 0; r < drop; ++r) acc = acc + adj[c][r] * p[rsel[r]][keep[k]];
          rewrite[c][k] = b->nf(-det_inv * acc);
        }
      // every relation row must vanish after substitution
      for (const auto& row : p) {
        for (std::size_t k = 0; k < keep.size(); ++k) {
          Polynomial acc = row[keep[k]];
          for (int c = 0; c < drop; ++c) acc = acc + row[csel[c]] * rewrite[c][k];
          if (!b->nf(acc).is_zero()) return false;
        }
      }
      res.basis = keep;
      res.nonbasis = csel;
      res.rewrite = rewrite;
      found = true;
      return true;
    });
  });
  if (!found) res.detail = "projective of rank " + std::to_string(rank) + ", no explicit basis found";
  return res;
}

namespace {

std::optional<std::vector<ChainStep>> recognize_chain(const AlgebraHom& f) {
  const AlgebraPtr& a = f.source();
  const AlgebraPtr& b = f.target();
  if (!f.is_variable_inclusion()) return std::nullopt;
  // target variables not coming from the source, in target order
  std::vector<int> extras;
  for (int j = 0; j < b->nvars(); ++j) {
    const std::string& name = b->ring()->vars[j];
    if (a->ring()->var_index(name) < 0) extras.push_back(j);
  }
  // raw images of the source relations (not reduced by the target ideal)
  std::vector<Polynomial> mapped;
  for (const auto& r : a->relations())
    mapped.push_back(r.substitute(f.images(), b->ring()));
  std::vector<ChainStep> chain;
  std::vector<bool> used(b->relations().size(), false);
  for (int e : extras) {
    bool ok = false;
    for (std::size_t ri = 0; ri < b->relations().size(); ++ri) {
      if (used[ri]) continue;
      const Polynomial& rel = b->relations()[ri];
      if (!rel.is_monic_in(e)) continue;
      // triangular: no later extra variable appears
      bool later = false;
      for (int e2 : extras)
        if (e2 > e && rel.degree_in(e2) > 0) later = true;
      if (later) continue;
      used[ri] = true;
      chain.push_back({e, rel, rel.degree_in(e)});
      ok = true;
      break;
    }
    if (!ok) return std::nullopt;
  }
  // all remaining target relations must be consequences of the source ideal
  GroebnerBasis src_side = buchberger(mapped, b->ring());
  for (std::size_t ri = 0; ri < b->relations().size(); ++ri) {
    if (used[ri]) continue;
    if (!src_side.contains(b->relations()[ri])) return std::nullopt;
  }
  return chain;
}

}  // namespace

FinitenessResult finiteness_basis(const AlgebraHom& f) {
  FinitenessResult res;
  const AlgebraPtr& a = f.source();
  const AlgebraPtr& b = f.target();

  if (auto chain = recognize_chain(f)) {
    res.status = FinitenessResult::Status::Free;
    res.chain = *chain;
    // boxed monomial basis, degree-then-order sorted for determinism
    std::vector<Monomial> basis = {Monomial::one(b->nvars())};
    for (const auto& step : *chain) {
      std::vector<Monomial> next;
      for (const auto& m : basis)
        for (int d = 0; d < step.degree; ++d)
          next.push_back(d == 0 ? m : m * Monomial::var(b->nvars(), step.var, d));
      basis = std::move(next);
    }
    std::sort(basis.begin(), basis.end(), [&](const Monomial& x, const Monomial& y) {
      return b->ring()->order.cmp(x, y) < 0;
    });
    res.basis = std::move(basis);
    res.detail = "monogenic chain certificate";
    return res;
  }

  // general elimination certificate: fresh tags for the source variables,
  // target block eliminated first
  int m = b->nvars(), n = a->nvars();
  std::vector<std::string> names;
  for (int j = 0; j < m; ++j) names.push_back(b->ring()->vars[j]);
  for (int i = 0; i < n; ++i) names.push_back("_src" + std::to_string(i));
  auto elim_ring = make_poly_ring(b->field(), names, MonomialOrder::block(m));
  std::vector<int> bmap(m);
  for (int j = 0; j < m; ++j) bmap[j] = j;
  std::vector<Polynomial> gens;
  for (const auto& r : b->relations()) gens.push_back(r.map_variables(bmap, elim_ring));
  for (int i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(elim_ring, m + i) -
                   f.images()[i].map_variables(bmap, elim_ring));
  GroebnerBasis gb = buchberger(gens, elim_ring);

  std::vector<int> pure_deg(m, -1);
  for (const auto& g : gb.gens()) {
    const Monomial& lm = g.leading().mono;
    int var = -1;
    bool pure = true;
    for (int j = 0; j < m + n; ++j) {
      if (lm.exp(j) == 0) continue;
      if (j >= m || var >= 0) {
        pure = false;
        break;
      }
      var = j;
    }
    if (pure && var >= 0)
      pure_deg[var] = pure_deg[var] < 0 ? lm.exp(var) : std::min(pure_deg[var], lm.exp(var));
  }
  bool all = std::all_of(pure_deg.begin(), pure_deg.end(), [](int d) { return d >= 0; });
  if (all) {
    res.status = FinitenessResult::Status::Finite;
    // spanning set: boxed monomials below the pure powers that are not
    // divisible by a target-only leading monomial
    std::vector<Monomial> tgt_leads;
    for (const auto& g : gb.gens()) {
      const Monomial& lm = g.leading().mono;
      bool tgt_only = true;
      for (int i = m; i < m + n; ++i)
        if (lm.exp(i) > 0) tgt_only = false;
      if (tgt_only) tgt_leads.push_back(lm);
    }
    std::vector<Monomial> box = {Monomial::one(m + n)};
    for (int j = 0; j < m; ++j) {
      std::vector<Monomial> next;
      for (const auto& mo : box)
        for (int d = 0; d < pure_deg[j]; ++d)
          next.push_back(d == 0 ? mo : mo * Monomial::var(m + n, j, d));
      box = std::move(next);
    }
    for (const auto& mo : box) {
      bool standard = true;
      for (const auto& lm : tgt_leads)
        if (lm.divides(mo)) standard = false;
      if (!standard) continue;
      Monomial back(b->nvars());
      for (int j = 0; j < m; ++j)
        if (mo.exp(j) > 0) back = back * Monomial::var(b->nvars(), j, mo.exp(j));
      res.basis.push_back(back);
    }
    std::sort(res.basis.begin(), res.basis.end(), [&](const Monomial& x, const Monomial& y) {
      return b->ring()->order.cmp(x, y) < 0;
    });
    res.detail = "elimination-order certificate";
    return res;
  }

  if (f.is_localization() && f.localized_at()) {
    Polynomial inv;
    if (!a->is_unit(*f.localized_at(), &inv)) {
      res.status = FinitenessResult::Status::Infinite;
      res.detail = "localization at a nonunit is never module-finite";
      return res;
    }
  }
  if (b->dim() > a->dim()) {
    res.status = FinitenessResult::Status::Infinite;
    res.detail = "target dimension exceeds source dimension";
    return res;
  }
  res.status = FinitenessResult::Status::Unknown;
  std::ostringstream os;
  os << "no pure-power leading monomial for:";
  for (int j = 0; j < m; ++j)
    if (pure_deg[j] < 0) os << " " << b->ring()->vars[j];
  res.detail = os.str();
  return res;
}

EtaleResult is_etale(const AlgebraHom& f) {
  EtaleResult res;
  SmoothnessResult sm = smoothness_rank(f);
  if (!sm.ok) {
    res.etale = false;
    res.detail = "smoothness certificate failed: " + sm.detail;
    return res;
  }
  res.etale = (sm.rank == 0);
  res.detail = res.etale ? "Omega^1 vanishes (F_0 is the unit ideal)"
                         : "Omega^1 has rank " + std::to_string(sm.rank);
  return res;
}

}  // namespace rigiduality
