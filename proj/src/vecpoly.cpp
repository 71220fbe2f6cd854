#include "rigiduality/vecpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigiduality {

int VecPoly::cmp_terms(const MonomialOrder& o, int tag_start, const VecTerm& a, const VecTerm& b) {
  if (tag_start >= 0) {
    bool main_a = a.comp < tag_start;
    bool main_b = b.comp < tag_start;
    if (main_a != main_b) return main_a ? 1 : -1;
  }
  int c = o.cmp(a.mono, b.mono);
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

VecPoly VecPoly::unit(const PolyRingPtr& r, int rank, int comp, int tag_start) {
  VecPoly v(r, rank, tag_start);
  v.terms_.push_back({Scalar::one(r->field), Monomial::one(r->nvars()), comp});
  return v;
}

VecPoly VecPoly::from_components(const std::vector<Polynomial>& comps, int tag_start) {
  if (comps.empty()) throw std::invalid_argument("from_components needs at least one slot");
  VecPoly v(comps[0].ring(), static_cast<int>(comps.size()), tag_start);
  std::vector<VecTerm> ts;
  for (int c = 0; c < v.rank_; ++c)
    for (const auto& t : comps[c].terms()) ts.push_back({t.coeff, t.mono, c});
  v.terms_ = std::move(ts);
  v.normalize();
  return v;
}

VecPoly VecPoly::of_terms(std::vector<VecTerm> terms, PolyRingPtr ring, int rank, int tag_start) {
  VecPoly v(std::move(ring), rank, tag_start);
  v.terms_ = std::move(terms);
  v.normalize();
  return v;
}

const VecTerm& VecPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero vector");
  return terms_[0];
}

void VecPoly::normalize() {
  const auto& ord = ring_->order;
  int ts = tag_start_;
  std::sort(terms_.begin(), terms_.end(),
            [&](const VecTerm& a, const VecTerm& b) { return cmp_terms(ord, ts, a, b) > 0; });
  std::vector<VecTerm> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono)
      out.back().coeff = out.back().coeff + t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const VecTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

VecPoly VecPoly::operator-() const {
  VecPoly v(*this);
  for (auto& t : v.terms_) t.coeff = -t.coeff;
  return v;
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
  if (rank_ != o.rank_ || tag_start_ != o.tag_start_)
    throw std::invalid_argument("vector shape mismatch");
  VecPoly v(ring_, rank_, tag_start_);
  const auto& ord = ring_->order;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_terms(ord, tag_start_, terms_[i], o.terms_[j]);
    if (c > 0) {
      v.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      v.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) v.terms_.push_back({s, terms_[i].mono, terms_[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) v.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) v.terms_.push_back(o.terms_[j]);
  return v;
}

VecPoly VecPoly::operator-(const VecPoly& o) const { return *this + (-o); }

VecPoly VecPoly::multiply_term(const Scalar& c, const Monomial& m) const {
  VecPoly v(ring_, rank_, tag_start_);
  if (c.is_zero()) return v;
  v.terms_.reserve(terms_.size());
  for (const auto& t : terms_) v.terms_.push_back({t.coeff * c, t.mono * m, t.comp});
  return v;
}

VecPoly VecPoly::multiply_poly(const Polynomial& p) const {
  VecPoly acc(ring_, rank_, tag_start_);
  for (const auto& t : p.terms()) acc = acc + multiply_term(t.coeff, t.mono);
  return acc;
}

VecPoly VecPoly::scalar_mul(const Scalar& c) const {
  return multiply_term(c, Monomial::one(ring_->nvars()));
}

Polynomial VecPoly::component(int c) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == c) ts.push_back({t.coeff, t.mono});
  return Polynomial::of_terms(std::move(ts), ring_);
}

std::vector<Polynomial> VecPoly::components() const {
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (int c = 0; c < rank_; ++c) out.push_back(component(c));
  return out;
}

bool VecPoly::main_part_zero() const {
  if (tag_start_ < 0) return is_zero();
  for (const auto& t : terms_)
    if (t.comp < tag_start_) return false;
  return true;
}

VecPoly VecPoly::slice(int lo, int hi) const {
  VecPoly v(ring_, hi - lo, -1);
  std::vector<VecTerm> ts;
  for (const auto& t : terms_)
    if (t.comp >= lo && t.comp < hi) ts.push_back({t.coeff, t.mono, t.comp - lo});
  v.terms_ = std::move(ts);
  v.normalize();
  return v;
}

VecPoly VecPoly::embed(int new_rank, int shift, int new_tag_start) const {
  VecPoly v(ring_, new_rank, new_tag_start);
  std::vector<VecTerm> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.coeff, t.mono, t.comp + shift});
  v.terms_ = std::move(ts);
  v.normalize();
  return v;
}

VecPoly VecPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  if (!ring_->field.is_rational()) return monic();
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_class d = t.coeff.rational().get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  for (const auto& t : terms_) {
    mpz_class n = t.coeff.rational().get_num() * (den_lcm / t.coeff.rational().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) num_gcd = 1;
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_[0].coeff.rational() < 0) scale = -scale;
  return scalar_mul(Scalar::of_fraction(scale.get_num(), scale.get_den(), ring_->field));
}

VecPoly VecPoly::monic() const {
  if (terms_.empty()) return *this;
  return scalar_mul(terms_[0].coeff.inverse());
}

bool operator==(const VecPoly& a, const VecPoly& b) {
  if (a.rank_ != b.rank_ || !same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.comp != y.comp || x.mono != y.mono || !(x.coeff == y.coeff)) return false;
  }
  return true;
}

}  // namespace rigiduality
