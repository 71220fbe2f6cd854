#include "rigiduality/fpmodule.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rigiduality {

namespace {

bool row_zero(const std::vector<Polynomial>& r) {
  return std::all_of(r.begin(), r.end(), [](const Polynomial& p) { return p.is_zero(); });
}

// relation vectors I * e_j making an R-submodule computation compute over A
std::vector<VecPoly> ideal_padding(const AlgebraPtr& a, int rank) {
  std::vector<VecPoly> out;
  for (const auto& f : a->relations())
    for (int j = 0; j < rank; ++j)
      out.push_back(VecPoly::unit(a->ring(), rank, j).multiply_poly(f));
  return out;
}

VecPoly row_to_vec(const std::vector<Polynomial>& row, const PolyRingPtr& ring) {
  (void)ring;
  return VecPoly::from_components(row);
}

std::vector<Polynomial> nf_row(const AlgebraPtr& a, std::vector<Polynomial> row) {
  for (auto& e : row) e = a->nf(e);
  return row;
}

// drops candidates contained in the span of the previously kept ones
// (always modulo I * e_j)
std::vector<VecPoly> prune_generators(std::vector<VecPoly> cands, const AlgebraPtr& a, int rank) {
  std::vector<VecPoly> base = ideal_padding(a, rank);
  ModuleGB base_gb = buchberger_module(base, a->ring(), rank);
  std::vector<VecPoly> kept;
  for (auto& v : cands) {
    VecPoly r = base_gb.reduce(v);
    if (r.is_zero()) continue;
    if (!kept.empty()) {
      std::vector<VecPoly> span = base;
      span.insert(span.end(), kept.begin(), kept.end());
      if (buchberger_module(span, a->ring(), rank).contains(r)) continue;
    }
    kept.push_back(r.primitive_part());
  }
  return kept;
}

}  // namespace

FPModule::FPModule(AlgebraPtr algebra, int gens, PolyMatrix rows,
                   std::optional<std::vector<int>> degrees)
    : algebra_(std::move(algebra)), gens_(gens), rows_(std::move(rows)),
      degrees_(std::move(degrees)) {
  if (gens_ < 0) throw std::invalid_argument("negative generator count");
  for (auto& r : rows_) {
    if (static_cast<int>(r.size()) != gens_)
      throw std::invalid_argument("presentation row width mismatch");
    for (auto& e : r) e = algebra_->nf(e);
  }
  std::erase_if(rows_, row_zero);
  if (degrees_ && static_cast<int>(degrees_->size()) != gens_)
    throw std::invalid_argument("degree list length mismatch");
}

FPModule FPModule::free_module(const AlgebraPtr& a, int rank) {
  return FPModule(a, rank, {});
}

FPModule FPModule::zero_module(const AlgebraPtr& a) { return FPModule(a, 0, {}); }

FPModule FPModule::cyclic(const AlgebraPtr& a, const std::vector<Polynomial>& rels) {
  PolyMatrix rows;
  for (const auto& f : rels) rows.push_back({f});
  return FPModule(a, 1, std::move(rows));
}

const ModuleGB& FPModule::rel_gb() const {
  std::call_once(cache_->once, [&] {
    std::vector<VecPoly> gens;
    for (const auto& r : rows_) gens.push_back(row_to_vec(r, algebra_->ring()));
    auto pad = ideal_padding(algebra_, gens_);
    gens.insert(gens.end(), pad.begin(), pad.end());
    cache_->gb = buchberger_module(gens, algebra_->ring(), gens_ == 0 ? 1 : gens_);
  });
  return cache_->gb;
}

VecPoly FPModule::nf_vec(const VecPoly& v) const { return rel_gb().reduce(v); }

bool FPModule::is_zero_module() const {
  if (gens_ == 0) return true;
  for (int j = 0; j < gens_; ++j)
    if (!member_zero(VecPoly::unit(algebra_->ring(), gens_, j))) return false;
  return true;
}

std::string FPModule::str() const {
  std::ostringstream os;
  os << "coker(" << rows_.size() << " x " << gens_ << ")";
  if (!rows_.empty()) {
    os << " rows:";
    for (const auto& r : rows_) {
      os << " [";
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) os << ", ";
        os << r[j].str();
      }
      os << "]";
    }
  }
  return os.str();
}

ModuleMap identity_map(const FPModule& m) {
  PolyMatrix mat(m.gens(), std::vector<Polynomial>(m.gens(), Polynomial::zero(m.algebra()->ring())));
  for (int i = 0; i < m.gens(); ++i) mat[i][i] = Polynomial::constant(1, m.algebra()->ring());
  return {m, m, std::move(mat)};
}

bool map_well_defined(const ModuleMap& f) {
  const auto& ring = f.src.algebra()->ring();
  for (const auto& r : f.src.rows()) {
    std::vector<Polynomial> img(f.tgt.gens(), Polynomial::zero(ring));
    for (int i = 0; i < f.src.gens(); ++i)
      for (int j = 0; j < f.tgt.gens(); ++j) img[j] = img[j] + r[i] * f.mat[i][j];
    if (f.tgt.gens() == 0) continue;
    if (!f.tgt.member_zero(VecPoly::from_components(img))) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  const auto& ring = f.src.algebra()->ring();
  PolyMatrix mat(f.src.gens(), std::vector<Polynomial>(g.tgt.gens(), Polynomial::zero(ring)));
  for (int i = 0; i < f.src.gens(); ++i)
    for (int k = 0; k < f.tgt.gens(); ++k)
      for (int j = 0; j < g.tgt.gens(); ++j)
        mat[i][j] = mat[i][j] + f.mat[i][k] * g.mat[k][j];
  for (auto& row : mat)
    for (auto& e : row) e = f.src.algebra()->nf(e);
  return {f.src, g.tgt, std::move(mat)};
}

FPModule kernel(const ModuleMap& f, PolyMatrix* incl) {
  const AlgebraPtr& a = f.src.algebra();
  if (incl) incl->clear();
  if (f.src.gens() == 0) return FPModule::zero_module(a);
  if (f.tgt.gens() == 0) {
    if (incl) *incl = identity_map(f.src).mat;
    return f.src;
  }
  int rank = f.tgt.gens();
  std::vector<VecPoly> stack;
  for (int i = 0; i < f.src.gens(); ++i) stack.push_back(row_to_vec(f.mat[i], a->ring()));
  for (const auto& r : f.tgt.rows()) stack.push_back(row_to_vec(r, a->ring()));
  auto pad = ideal_padding(a, rank);
  stack.insert(stack.end(), pad.begin(), pad.end());

  KernelData kd = kernel_with_tags(stack, a->ring(), rank);
  std::vector<VecPoly> cands;
  for (const auto& s : kd.syzygies) {
    std::vector<Polynomial> head(f.src.gens());
    for (int i = 0; i < f.src.gens(); ++i) head[i] = a->nf(s.component(i));
    if (!row_zero(head)) cands.push_back(VecPoly::from_components(head));
  }
  cands = prune_generators(std::move(cands), a, f.src.gens());
  if (cands.empty()) return FPModule::zero_module(a);

  // relations among the kernel generators, modulo the source presentation
  std::vector<VecPoly> stack2 = cands;
  for (const auto& r : f.src.rows()) stack2.push_back(row_to_vec(r, a->ring()));
  auto pad2 = ideal_padding(a, f.src.gens());
  stack2.insert(stack2.end(), pad2.begin(), pad2.end());
  KernelData kd2 = kernel_with_tags(stack2, a->ring(), f.src.gens());

  int k = static_cast<int>(cands.size());
  PolyMatrix rel_rows;
  for (const auto& s : kd2.syzygies) {
    std::vector<Polynomial> head(k);
    for (int i = 0; i < k; ++i) head[i] = a->nf(s.component(i));
    if (!row_zero(head)) rel_rows.push_back(std::move(head));
  }
  if (incl)
    for (const auto& c : cands) incl->push_back(c.components());
  return FPModule(a, k, std::move(rel_rows));
}

FPModule cokernel(const ModuleMap& f) {
  PolyMatrix rows = f.tgt.rows();
  for (const auto& r : f.mat) rows.push_back(r);
  return FPModule(f.tgt.algebra(), f.tgt.gens(), std::move(rows));
}

FPModule direct_sum_power(const FPModule& m, int copies) {
  const auto& ring = m.algebra()->ring();
  int g = m.gens();
  PolyMatrix rows;
  for (int c = 0; c < copies; ++c)
    for (const auto& r : m.rows()) {
      std::vector<Polynomial> row(g * copies, Polynomial::zero(ring));
      for (int j = 0; j < g; ++j) row[c * g + j] = r[j];
      rows.push_back(std::move(row));
    }
  std::optional<std::vector<int>> degs;
  if (m.degrees()) {
    degs.emplace();
    for (int c = 0; c < copies; ++c)
      degs->insert(degs->end(), m.degrees()->begin(), m.degrees()->end());
  }
  return FPModule(m.algebra(), g * copies, std::move(rows), std::move(degs));
}

std::vector<std::vector<Polynomial>> syzygies_over_algebra(const PolyMatrix& rows, int rank,
                                                           const AlgebraPtr& a) {
  if (rows.empty()) return {};
  if (rank == 0) {
    // every coefficient vector is a syzygy; generated by the unit vectors
    std::vector<std::vector<Polynomial>> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<Polynomial> e(rows.size(), Polynomial::zero(a->ring()));
      e[i] = Polynomial::constant(1, a->ring());
      out.push_back(std::move(e));
    }
    return out;
  }
  std::vector<VecPoly> stack;
  for (const auto& r : rows) stack.push_back(row_to_vec(r, a->ring()));
  auto pad = ideal_padding(a, rank);
  stack.insert(stack.end(), pad.begin(), pad.end());
  KernelData kd = kernel_with_tags(stack, a->ring(), rank);
  int k = static_cast<int>(rows.size());
  std::vector<VecPoly> cands;
  for (const auto& s : kd.syzygies) {
    std::vector<Polynomial> head(k);
    for (int i = 0; i < k; ++i) head[i] = a->nf(s.component(i));
    if (!row_zero(head)) cands.push_back(VecPoly::from_components(head));
  }
  cands = prune_generators(std::move(cands), a, k);
  std::vector<std::vector<Polynomial>> out;
  for (const auto& c : cands) out.push_back(nf_row(a, c.components()));
  return out;
}

FreeComplex free_resolution(const FPModule& m, int length) {
  FreeComplex c;
  c.algebra = m.algebra();
  c.ranks.push_back(m.gens());
  PolyMatrix current = m.rows();
  for (int k = 1; k <= length; ++k) {
    if (current.empty()) {
      c.terminated = true;
      break;
    }
    c.ranks.push_back(static_cast<int>(current.size()));
    c.diffs.push_back(current);
    if (k == length) break;
    current = syzygies_over_algebra(current, c.ranks[k - 1], m.algebra());
    if (m.algebra()->is_polynomial_ring() && k >= m.algebra()->nvars() && !current.empty())
      throw std::logic_error("syzygies past the Hilbert bound over a polynomial ring");
  }
  if (current.empty()) c.terminated = true;
  return c;
}

bool verify_complex(const FreeComplex& c) {
  const auto& a = c.algebra;
  for (std::size_t k = 0; k + 1 < c.diffs.size(); ++k) {
    // d_{k+1} o d_{k+2} = 0
    const PolyMatrix& d1 = c.diffs[k];      // F_{k+1} -> F_k
    const PolyMatrix& d2 = c.diffs[k + 1];  // F_{k+2} -> F_{k+1}
    for (const auto& row : d2) {
      for (int j = 0; j < c.ranks[k]; ++j) {
        Polynomial acc = Polynomial::zero(a->ring());
        for (int t = 0; t < c.ranks[k + 1]; ++t) acc = acc + row[t] * d1[t][j];
        if (!a->nf(acc).is_zero()) return false;
      }
    }
  }
  return true;
}

namespace {

// delta^k : Hom(F_k, N) -> Hom(F_{k+1}, N), phi -> phi o d_{k+1}
ModuleMap hom_differential(const FreeComplex& c, const FPModule& n, int k) {
  const auto& ring = n.algebra()->ring();
  FPModule src = direct_sum_power(n, c.ranks[k]);
  FPModule tgt = direct_sum_power(n, c.ranks[k + 1]);
  PolyMatrix mat(src.gens(), std::vector<Polynomial>(tgt.gens(), Polynomial::zero(ring)));
  const PolyMatrix& d = c.diffs[k];
  for (int s = 0; s < c.ranks[k]; ++s)
    for (int j = 0; j < n.gens(); ++j)
      for (int u = 0; u < c.ranks[k + 1]; ++u)
        mat[s * n.gens() + j][u * n.gens() + j] = d[u][s];
  return {std::move(src), std::move(tgt), std::move(mat)};
}

}  // namespace

FPModule complex_cohomology(const FreeComplex& c, const FPModule& target, int i) {
  const AlgebraPtr& a = target.algebra();
  if (i < 0 || i >= static_cast<int>(c.ranks.size())) return FPModule::zero_module(a);
  if (target.gens() == 0 || c.ranks[i] == 0) return FPModule::zero_module(a);

  FPModule hom_i = direct_sum_power(target, c.ranks[i]);
  FPModule ker = hom_i;
  PolyMatrix incl;
  if (i < static_cast<int>(c.diffs.size())) {
    ModuleMap delta = hom_differential(c, target, i);
    ker = kernel(delta, &incl);
  } else {
    incl = identity_map(hom_i).mat;
  }
  if (i == 0 || ker.gens() == 0) return ker;

  // quotient by the image of delta^{i-1}
  ModuleMap prev = hom_differential(c, target, i - 1);
  std::vector<VecPoly> lift_basis;
  for (const auto& r : incl) lift_basis.push_back(VecPoly::from_components(r));
  for (const auto& r : hom_i.rows()) lift_basis.push_back(VecPoly::from_components(r));
  auto pad = ideal_padding(a, hom_i.gens());
  lift_basis.insert(lift_basis.end(), pad.begin(), pad.end());

  PolyMatrix extra;
  for (const auto& img_row : prev.mat) {
    if (row_zero(img_row)) continue;
    auto cert = lift_through(lift_basis, a->ring(), hom_i.gens(),
                             VecPoly::from_components(img_row));
    if (!cert) throw std::logic_error("image does not lie in the kernel; differential broken");
    std::vector<Polynomial> row(ker.gens());
    for (int t = 0; t < ker.gens(); ++t) row[t] = a->nf((*cert)[t]);
    if (!row_zero(row)) extra.push_back(std::move(row));
  }
  PolyMatrix rows = ker.rows();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return FPModule(a, ker.gens(), std::move(rows));
}

FPModule ext_module(int i, const FPModule& m, const FPModule& n) {
  if (i < 0) throw std::invalid_argument("ext degree must be nonnegative");
  if (!same_algebra(m.algebra(), n.algebra()))
    throw std::invalid_argument("ext requires modules over one algebra");
  FreeComplex c = free_resolution(m, i + 1);
  return complex_cohomology(c, n, i);
}

HomData hom_module(const FPModule& m, const FPModule& n) {
  HomData out;
  const AlgebraPtr& a = m.algebra();
  if (m.gens() == 0 || n.gens() == 0) {
    out.module = FPModule::zero_module(a);
    return out;
  }
  FreeComplex c = free_resolution(m, 1);
  FPModule hom0 = direct_sum_power(n, m.gens());
  PolyMatrix incl;
  if (!c.diffs.empty()) {
    ModuleMap delta = hom_differential(c, n, 0);
    out.module = kernel(delta, &incl);
  } else {
    out.module = hom0;
    incl = identity_map(hom0).mat;
  }
  for (const auto& flat : incl) {
    PolyMatrix mat(m.gens(), std::vector<Polynomial>(n.gens(), Polynomial::zero(a->ring())));
    for (int s = 0; s < m.gens(); ++s)
      for (int j = 0; j < n.gens(); ++j) mat[s][j] = flat[s * n.gens() + j];
    out.generator_maps.push_back(std::move(mat));
  }
  return out;
}

FPModule tensor_product(const FPModule& m, const FPModule& n) {
  if (!same_algebra(m.algebra(), n.algebra()))
    throw std::invalid_argument("tensor requires modules over one algebra");
  const auto& ring = m.algebra()->ring();
  int g = m.gens() * n.gens();
  PolyMatrix rows;
  for (const auto& r : m.rows())
    for (int j = 0; j < n.gens(); ++j) {
      std::vector<Polynomial> row(g, Polynomial::zero(ring));
      for (int i = 0; i < m.gens(); ++i) row[i * n.gens() + j] = r[i];
      rows.push_back(std::move(row));
    }
  for (const auto& q : n.rows())
    for (int i = 0; i < m.gens(); ++i) {
      std::vector<Polynomial> row(g, Polynomial::zero(ring));
      for (int j = 0; j < n.gens(); ++j) row[i * n.gens() + j] = q[j];
      rows.push_back(std::move(row));
    }
  return FPModule(m.algebra(), g, std::move(rows));
}

FPModule base_change(const FPModule& m, const std::vector<Polynomial>& images,
                     const AlgebraPtr& target) {
  PolyMatrix rows;
  for (const auto& r : m.rows()) {
    std::vector<Polynomial> row;
    row.reserve(r.size());
    for (const auto& e : r) row.push_back(target->nf(e.substitute(images, target->ring())));
    rows.push_back(std::move(row));
  }
  return FPModule(target, m.gens(), std::move(rows));
}

namespace {

int scalar_matrix_rank(std::vector<std::vector<Scalar>> mat, const CoeffField& f) {
  if (mat.empty()) return 0;
  std::size_t rows = mat.size(), cols = mat[0].size();
  int rank = 0;
  std::size_t rpos = 0;
  for (std::size_t c = 0; c < cols && rpos < rows; ++c) {
    std::size_t piv = rpos;
    while (piv < rows && mat[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(mat[piv], mat[rpos]);
    Scalar inv = mat[rpos][c].inverse();
    for (std::size_t cc = c; cc < cols; ++cc) mat[rpos][cc] = mat[rpos][cc] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rpos || mat[r][c].is_zero()) continue;
      Scalar factor = mat[r][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        mat[r][cc] = mat[r][cc] - factor * mat[rpos][cc];
    }
    ++rpos;
    ++rank;
  }
  (void)f;
  return rank;
}

}  // namespace

std::vector<int> minimal_betti(const FPModule& m, int length) {
  const AlgebraPtr& a = m.algebra();
  // the residue field at the origin must exist: 1 not in I + (all vars)
  std::vector<Polynomial> probe = a->relations();
  for (int i = 0; i < a->nvars(); ++i) probe.push_back(Polynomial::variable(a->ring(), i));
  if (buchberger(probe, a->ring()).is_unit_ideal())
    throw std::invalid_argument(
        "no distinguished maximal ideal at the origin; minimal Betti numbers undefined");

  FreeComplex c = free_resolution(m, length + 1);
  auto bar = [&](const PolyMatrix& d, int width) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& r : d) {
      std::vector<Scalar> row;
      row.reserve(width);
      for (const auto& e : r) row.push_back(e.constant_coeff());
      out.push_back(std::move(row));
    }
    return out;
  };
  int avail = static_cast<int>(c.diffs.size());
  int top = c.terminated ? length : std::max(0, avail - 1);
  std::vector<int> betti;
  for (int k = 0; k <= std::min(length, top); ++k) {
    if (k >= static_cast<int>(c.ranks.size())) {
      betti.push_back(0);
      continue;
    }
    int rk_d_k = 0, rk_d_k1 = 0;
    if (k >= 1 && k - 1 < avail)
      rk_d_k = scalar_matrix_rank(bar(c.diffs[k - 1], c.ranks[k - 1]), a->field());
    if (k < avail) rk_d_k1 = scalar_matrix_rank(bar(c.diffs[k], c.ranks[k]), a->field());
    betti.push_back(c.ranks[k] - rk_d_k - rk_d_k1);
  }
  return betti;
}

std::optional<ModuleSeries> module_hilbert_series(const FPModule& m) {
  const AlgebraPtr& a = m.algebra();
  for (const auto& r : a->relations())
    if (!is_homogeneous(r)) return std::nullopt;
  if (m.gens() == 0) {
    ModuleSeries s;
    s.series.denom_power = a->nvars();
    return s;
  }
  // infer generator degrees from homogeneity of the rows
  std::vector<int> deg(m.gens(), 0);
  std::vector<int> comp(m.gens(), -1);
  for (const auto& r : m.rows())
    for (const auto& e : r)
      if (!is_homogeneous(e)) return std::nullopt;

  int ncomp = 0;
  for (int start = 0; start < m.gens(); ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    deg[start] = 0;
    std::vector<int> queue = {start};
    while (!queue.empty()) {
      int j = queue.back();
      queue.pop_back();
      for (const auto& r : m.rows()) {
        if (r[j].is_zero()) continue;
        std::int64_t row_deg = r[j].total_degree() + deg[j];
        for (int k = 0; k < m.gens(); ++k) {
          if (r[k].is_zero()) continue;
          int dk = static_cast<int>(row_deg - r[k].total_degree());
          if (comp[k] < 0) {
            comp[k] = ncomp;
            deg[k] = dk;
            queue.push_back(k);
          } else if (deg[k] != dk) {
            return std::nullopt;  // not gradable
          }
        }
      }
    }
    ++ncomp;
  }
  // normalize each connected component to minimum degree zero
  std::vector<int> cmin(ncomp, 0);
  for (int j = 0; j < m.gens(); ++j) cmin[comp[j]] = std::min(cmin[comp[j]], deg[j]);
  for (int j = 0; j < m.gens(); ++j) deg[j] -= cmin[comp[j]];

  if (m.degrees()) deg = *m.degrees();

  const ModuleGB& gb = m.rel_gb();
  std::vector<std::vector<Monomial>> lead(m.gens());
  for (const auto& e : gb.elems()) {
    const auto& lt = e.leading();
    lead[lt.comp].push_back(lt.mono);
  }
  std::vector<mpz_class> numer;
  for (int j = 0; j < m.gens(); ++j) {
    auto nj = hilbert_numerator(lead[j], a->nvars());
    if (numer.size() < nj.size() + deg[j]) numer.resize(nj.size() + deg[j], 0);
    for (std::size_t i = 0; i < nj.size(); ++i) numer[i + deg[j]] += nj[i];
  }
  while (!numer.empty() && numer.back() == 0) numer.pop_back();
  ModuleSeries s;
  s.series.numer = std::move(numer);
  s.series.denom_power = a->nvars();
  s.connected = (ncomp <= 1);
  return s;
}

namespace {

bool surjective_onto(const PolyMatrix& mat, const FPModule& tgt) {
  const AlgebraPtr& a = tgt.algebra();
  std::vector<VecPoly> span;
  for (const auto& r : mat)
    if (!row_zero(r)) span.push_back(VecPoly::from_components(r));
  for (const auto& r : tgt.rows()) span.push_back(VecPoly::from_components(r));
  auto pad = ideal_padding(a, tgt.gens());
  span.insert(span.end(), pad.begin(), pad.end());
  ModuleGB gb = buchberger_module(span, a->ring(), tgt.gens());
  for (int j = 0; j < tgt.gens(); ++j)
    if (!gb.reduce(VecPoly::unit(a->ring(), tgt.gens(), j)).is_zero()) return false;
  return true;
}

PolyMatrix combine_maps(const std::vector<PolyMatrix>& gens, const std::vector<long>& coeffs,
                        int rows, int cols, const AlgebraPtr& a) {
  PolyMatrix out(rows, std::vector<Polynomial>(cols, Polynomial::zero(a->ring())));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (coeffs[g] == 0) continue;
    Scalar c = Scalar::of_int(coeffs[g], a->field());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out[i][j] = out[i][j] + gens[g][i][j].scalar_mul(c);
  }
  for (auto& r : out)
    for (auto& e : r) e = a->nf(e);
  return out;
}

// searches for a surjection src ->> tgt among combinations of Hom generators
std::optional<PolyMatrix> find_surjection(const FPModule& src, const FPModule& tgt,
                                          std::uint64_t seed, int attempts) {
  HomData hom = hom_module(src, tgt);
  if (hom.generator_maps.empty()) return std::nullopt;
  int tried = 0;
  for (const auto& g : hom.generator_maps) {
    if (tried++ >= attempts) return std::nullopt;
    if (surjective_onto(g, tgt)) return g;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-2, 2);
  while (tried++ < attempts) {
    std::vector<long> coeffs(hom.generator_maps.size());
    for (auto& c : coeffs) c = d(rng);
    PolyMatrix cand = combine_maps(hom.generator_maps, coeffs, src.gens(), tgt.gens(),
                                   src.algebra());
    if (surjective_onto(cand, tgt)) return cand;
  }
  return std::nullopt;
}

}  // namespace

IsoResult iso_probe(const FPModule& m, const FPModule& n, std::uint64_t seed, int attempts) {
  if (!same_algebra(m.algebra(), n.algebra()))
    throw std::invalid_argument("iso_probe requires modules over one algebra");
  bool zm = m.is_zero_module(), zn = n.is_zero_module();
  if (zm && zn) return {IsoVerdict::IsoFound, {}, "both zero"};
  if (zm != zn) return {IsoVerdict::HilbertMismatch, {}, "zero against nonzero"};

  auto sm = module_hilbert_series(m);
  auto sn = module_hilbert_series(n);
  bool series_differ = false;
  if (sm && sn && !(sm->series == sn->series)) {
    if (sm->connected && sn->connected)
      return {IsoVerdict::HilbertMismatch, {},
              sm->series.str() + " versus " + sn->series.str()};
    series_differ = true;
  }

  // cheap path: identity-shaped candidate
  if (m.gens() == n.gens()) {
    ModuleMap id{m, n, identity_map(m).mat};
    if (map_well_defined(id) && surjective_onto(id.mat, n)) {
      ModuleMap back{n, m, identity_map(n).mat};
      if (map_well_defined(back) && surjective_onto(back.mat, m))
        return {IsoVerdict::IsoFound, id.mat, "identity matrix"};
    }
  }

  auto fwd = find_surjection(m, n, seed, attempts);
  if (fwd) {
    auto bwd = find_surjection(n, m, seed + 1, attempts);
    if (bwd)
      return {IsoVerdict::IsoFound, *fwd,
              "mutual surjections over a noetherian ring"};
  }
  return {IsoVerdict::Inconclusive, {},
          series_differ ? "graded series differ but gradings are ambiguous" : "budget exhausted"};
}

}  // namespace rigiduality
