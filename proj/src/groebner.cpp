#include "rigiduality/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rigiduality {

namespace {

VecPoly reduce_against(const std::vector<VecPoly>& basis, const PolyRingPtr& ring, int rank,
                       int tag_start, const VecPoly& v, std::vector<Polynomial>* lift) {
  if (lift) lift->assign(basis.size(), Polynomial::zero(ring));
  VecPoly rest = v;
  VecPoly out(ring, rank, tag_start);
  while (!rest.is_zero()) {
    const VecTerm& lt = rest.leading();
    bool hit = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const VecTerm& g = basis[j].leading();
      if (g.comp != lt.comp || !g.mono.divides(lt.mono)) continue;
      Scalar c = lt.coeff / g.coeff;
      Monomial m = lt.mono / g.mono;
      rest = rest - basis[j].multiply_term(c, m);
      if (lift) (*lift)[j] = (*lift)[j] + Polynomial::term(c, m, ring);
      hit = true;
      break;
    }
    if (!hit) {
      VecPoly head = VecPoly::of_terms({lt}, ring, rank, tag_start);
      out = out + head;
      rest = rest - head;
    }
  }
  return out;
}

}  // namespace

VecPoly ModuleGB::reduce(const VecPoly& v, std::vector<Polynomial>* lift) const {
  return reduce_against(elems_, ring_, rank_, tag_start_, v, lift);
}

namespace {

struct Pair {
  std::int64_t lcm_deg;
  int i, j;
  Monomial lcm;
  friend bool operator<(const Pair& a, const Pair& b) {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Full Buchberger on vectors; normal selection strategy, chain criterion,
// product criterion only in the untagged rank-1 case.
std::vector<VecPoly> buchberger_core(std::vector<VecPoly> basis, const PolyRingPtr& ring, int rank,
                                     int tag_start) {
  std::erase_if(basis, [](const VecPoly& v) { return v.is_zero(); });
  for (auto& v : basis) v = v.primitive_part();

  bool allow_product_criterion = (rank == 1 && tag_start < 0);

  std::set<Pair> pending;
  std::set<std::pair<int, int>> known;  // every generated unordered pair
  auto add_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (basis[i].leading().comp != basis[j].leading().comp) continue;
      known.insert({i, j});
      if (allow_product_criterion && basis[i].leading().mono.coprime(basis[j].leading().mono))
        continue;
      Monomial l = basis[i].leading().mono.lcm(basis[j].leading().mono);
      pending.insert({l.degree(), i, j, l});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs(j);

  auto pair_done = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (!known.count({a, b})) return false;  // never formed (e.g. different components)
    return pending.find(Pair{basis[a].leading().mono.lcm(basis[b].leading().mono).degree(), a, b,
                             Monomial()}) == pending.end();
  };

  while (!pending.empty()) {
    Pair p = *pending.begin();
    pending.erase(pending.begin());

    // chain criterion; the strict lcm inequalities keep the elimination
    // acyclic (Gebauer-Moeller)
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis[k].leading().comp != basis[p.i].leading().comp) continue;
      if (!basis[k].leading().mono.divides(p.lcm)) continue;
      Monomial lik = basis[p.i].leading().mono.lcm(basis[k].leading().mono);
      Monomial ljk = basis[p.j].leading().mono.lcm(basis[k].leading().mono);
      if (lik == p.lcm || ljk == p.lcm) continue;
      if (pair_done(p.i, k) && pair_done(p.j, k)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    const VecTerm& lu = basis[p.i].leading();
    const VecTerm& lv = basis[p.j].leading();
    VecPoly s = basis[p.i].multiply_term(lv.coeff, p.lcm / lu.mono) -
                basis[p.j].multiply_term(lu.coeff, p.lcm / lv.mono);
    VecPoly r = reduce_against(basis, ring, rank, tag_start, s, nullptr);
    if (!r.is_zero()) {
      basis.push_back(r.primitive_part());
      add_pairs(static_cast<int>(basis.size()) - 1);
    }
  }
  return basis;
}

std::vector<VecPoly> interreduce(std::vector<VecPoly> basis, const PolyRingPtr& ring, int rank,
                                 int tag_start) {
  // minimalize: drop elements whose leading term another leading term divides
  std::vector<VecPoly> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const auto& a = basis[i].leading();
      const auto& b = basis[j].leading();
      if (b.comp == a.comp && b.mono.divides(a.mono)) {
        if (a.mono == b.mono) {
          // identical leading monomials: keep the earlier one
          if (j < i) {
            drop = true;
            break;
          }
        } else {
          drop = true;
          break;
        }
      }
    }
    if (!drop) kept.push_back(basis[i]);
  }
  // tail-reduce each against the others
  std::vector<VecPoly> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<VecPoly> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    ModuleGB g(ring, rank, tag_start, others);
    VecPoly r = g.reduce(kept[i]);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  // deterministic order: descending leading term
  std::sort(out.begin(), out.end(), [&](const VecPoly& a, const VecPoly& b) {
    return VecPoly::cmp_terms(ring->order, tag_start, a.leading(), b.leading()) > 0;
  });
  return out;
}

}  // namespace

ModuleGB buchberger_module(const std::vector<VecPoly>& gens, const PolyRingPtr& ring, int rank,
                           int tag_start) {
  auto basis = buchberger_core(gens, ring, rank, tag_start);
  basis = interreduce(std::move(basis), ring, rank, tag_start);
  return ModuleGB(ring, rank, tag_start, std::move(basis));
}

KernelData kernel_with_tags(const std::vector<VecPoly>& gens, const PolyRingPtr& ring, int rank) {
  int k = static_cast<int>(gens.size());
  int big_rank = rank + k;
  std::vector<VecPoly> tagged;
  tagged.reserve(k);
  for (int i = 0; i < k; ++i) {
    VecPoly v = gens[i].embed(big_rank, 0, rank);
    v = v + VecPoly::unit(ring, big_rank, rank + i, rank);
    tagged.push_back(std::move(v));
  }
  auto basis = buchberger_core(std::move(tagged), ring, big_rank, rank);
  // do not inter-reduce across the main/tag split: a tag-only element must
  // never rewrite the tag part of a main element
  KernelData out;
  std::vector<VecPoly> main_elems;
  std::vector<std::vector<Polynomial>> reps;
  for (const auto& v : basis) {
    if (v.main_part_zero()) {
      VecPoly syz = v.slice(rank, big_rank);
      if (!syz.is_zero()) out.syzygies.push_back(syz.primitive_part());
    } else {
      main_elems.push_back(v.slice(0, rank));
      reps.push_back(v.slice(rank, big_rank).components());
    }
  }
  // deterministic order
  std::vector<int> idx(main_elems.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return VecPoly::cmp_terms(ring->order, -1, main_elems[a].leading(), main_elems[b].leading()) >
           0;
  });
  std::vector<VecPoly> sorted_main;
  for (int i : idx) {
    sorted_main.push_back(main_elems[i]);
    out.reps.push_back(reps[i]);
  }
  std::sort(out.syzygies.begin(), out.syzygies.end(), [&](const VecPoly& a, const VecPoly& b) {
    return VecPoly::cmp_terms(ring->order, -1, a.leading(), b.leading()) > 0;
  });
  out.gb = ModuleGB(ring, rank, -1, std::move(sorted_main));
  return out;
}

std::optional<std::vector<Polynomial>> lift_through(const std::vector<VecPoly>& gens,
                                                    const PolyRingPtr& ring, int rank,
                                                    const VecPoly& v) {
  int k = static_cast<int>(gens.size());
  int big_rank = rank + k;
  std::vector<VecPoly> tagged;
  tagged.reserve(k);
  for (int i = 0; i < k; ++i) {
    VecPoly t = gens[i].embed(big_rank, 0, rank);
    t = t + VecPoly::unit(ring, big_rank, rank + i, rank);
    tagged.push_back(std::move(t));
  }
  auto basis = buchberger_core(std::move(tagged), ring, big_rank, rank);
  std::vector<VecPoly> main_only;
  for (const auto& b : basis)
    if (!b.main_part_zero()) main_only.push_back(b);
  ModuleGB g(ring, big_rank, rank, main_only);
  VecPoly r = g.reduce(v.embed(big_rank, 0, rank));
  if (!r.main_part_zero()) return std::nullopt;
  // v = r_main + sum q_j (gens_j (+) e_j)  with r_main == 0, so the tag part
  // of r is exactly minus the certificate
  std::vector<Polynomial> cert;
  cert.reserve(k);
  VecPoly tags = r.slice(rank, big_rank);
  for (int i = 0; i < k; ++i) cert.push_back(-tags.component(i));
  return cert;
}

// ---- ideal level ----

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : gens_)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (gens_.empty()) return f;
  return poly_divmod(f, gens_).remainder;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading().mono);
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const PolyRingPtr& ring) {
  std::vector<VecPoly> vecs;
  for (const auto& g : gens)
    if (!g.is_zero()) vecs.push_back(VecPoly::from_components({g}));
  ModuleGB gb = buchberger_module(vecs, ring, 1);
  std::vector<Polynomial> out;
  out.reserve(gb.elems().size());
  for (const auto& v : gb.elems()) out.push_back(v.component(0));
  return GroebnerBasis(ring, std::move(out), true);
}

bool verify_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.gens();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Term& a = g[i].leading();
      const Term& b = g[j].leading();
      Monomial l = a.mono.lcm(b.mono);
      Polynomial s =
          g[i].multiply_term(b.coeff, l / a.mono) - g[j].multiply_term(a.coeff, l / b.mono);
      if (!gb.normal_form(s).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::vector<Polynomial>> syzygy_matrix(const GroebnerBasis& gb) {
  std::vector<VecPoly> vecs;
  for (const auto& g : gb.gens()) vecs.push_back(VecPoly::from_components({g}));
  KernelData kd = kernel_with_tags(vecs, gb.ring(), 1);
  std::vector<std::vector<Polynomial>> out;
  for (const auto& s : kd.syzygies) out.push_back(s.components());
  return out;
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return -1;
  int n = gb.ring()->nvars();
  if (n > 24) throw std::invalid_argument("dimension enumeration limited to 24 variables");
  auto lead = gb.leading_monomials();
  std::vector<std::uint32_t> supports;
  supports.reserve(lead.size());
  for (const auto& m : lead) {
    std::uint32_t s = 0;
    for (int i = 0; i < n; ++i)
      if (m.exp(i) > 0) s |= (1u << i);
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto s : supports) {
      if ((s & ~mask) == 0) {  // support contained in the candidate set
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

bool is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return true;
  std::int64_t d = f.terms()[0].mono.degree();
  for (const auto& t : f.terms())
    if (t.mono.degree() != d) return false;
  return true;
}

namespace {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

void poly_sub_shifted(std::vector<mpz_class>& a, const std::vector<mpz_class>& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {mpz_class(1)};
  for (const auto& m : gens)
    if (m.is_one()) return {};
  // peel off the last generator in a deterministic order
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i < a.nvars(); ++i)
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
    return false;
  });
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q(g.nvars());
    for (int i = 0; i < g.nvars(); ++i) {
      std::int32_t e = g.exp(i) - m.exp(i);
      if (e > 0) q = q * Monomial::var(g.nvars(), i, e);
    }
    colon.push_back(q);
  }
  std::vector<mpz_class> res = hilbert_numerator(gens, nvars);
  std::vector<mpz_class> cres = hilbert_numerator(std::move(colon), nvars);
  poly_sub_shifted(res, cres, static_cast<int>(m.degree()));
  return res;
}

HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  for (const auto& g : gb.gens())
    if (!is_homogeneous(g))
      throw std::invalid_argument("hilbert series requires a homogeneous ideal");
  HilbertSeries hs;
  hs.denom_power = gb.ring()->nvars();
  hs.numer = hilbert_numerator(gb.leading_monomials(), gb.ring()->nvars());
  return hs;
}

namespace {

// multiply by (1 - T)^k
std::vector<mpz_class> mul_one_minus_t(std::vector<mpz_class> a, int k) {
  for (int r = 0; r < k; ++r) {
    std::vector<mpz_class> b(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      b[i] += a[i];
      b[i + 1] -= a[i];
    }
    while (!b.empty() && b.back() == 0) b.pop_back();
    a = std::move(b);
  }
  return a;
}

}  // namespace

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  int k = std::max(a.denom_power, b.denom_power);
  return mul_one_minus_t(a.numer, k - a.denom_power) ==
         mul_one_minus_t(b.numer, k - b.denom_power);
}

std::string HilbertSeries::str() const {
  std::ostringstream os;
  os << "(";
  if (numer.empty()) os << "0";
  bool first = true;
  for (std::size_t i = 0; i < numer.size(); ++i) {
    if (numer[i] == 0) continue;
    mpz_class c = numer[i];
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class ab = abs(c);
    if (ab != 1 || i == 0) os << ab.get_str();
    if (i > 0) {
      if (ab != 1) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  os << ")/(1 - T)^" << denom_power;
  return os.str();
}

}  // namespace rigiduality
