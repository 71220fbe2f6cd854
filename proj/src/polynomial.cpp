#include "rigiduality/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rigiduality {

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

PolyRingPtr make_poly_ring(CoeffField field, std::vector<std::string> vars, MonomialOrder order) {
  auto r = std::make_shared<PolyRing>();
  r->field = field;
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->vars == b->vars && a->order == b->order;
}

static void check_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::constant(const Scalar& c, const PolyRingPtr& r) {
  Polynomial p(r);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial::one(r->nvars())});
  return p;
}

Polynomial Polynomial::constant(long v, const PolyRingPtr& r) {
  return constant(Scalar::of_int(v, r->field), r);
}

Polynomial Polynomial::variable(const PolyRingPtr& r, int i, std::int32_t power) {
  if (i < 0 || i >= r->nvars()) throw std::out_of_range("variable index out of range");
  if (power == 0) return constant(1, r);
  Polynomial p(r);
  p.terms_.push_back({Scalar::one(r->field), Monomial::var(r->nvars(), i, power)});
  return p;
}

Polynomial Polynomial::term(const Scalar& c, const Monomial& m, const PolyRingPtr& r) {
  Polynomial p(r);
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::of_terms(std::vector<Term> terms, const PolyRingPtr& r) {
  Polynomial p(r);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_[0];
}

Scalar Polynomial::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar::zero(ring_->field);
}

void Polynomial::normalize() {
  const auto& ord = ring_->order;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = out.back().coeff + t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(ring_, o.ring_);
  // merge of two sorted term lists
  Polynomial p(ring_);
  const auto& ord = ring_->order;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) p.terms_.push_back({s, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::multiply_term(const Scalar& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono * m});
  return p;
}

Polynomial Polynomial::scalar_mul(const Scalar& c) const {
  return multiply_term(c, Monomial::one(ring_->nvars()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(ring_, o.ring_);
  Polynomial acc(ring_);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prods.push_back({a.coeff * b.coeff, a.mono * b.mono});
  acc.terms_ = std::move(prods);
  acc.normalize();
  return acc;
}

Polynomial Polynomial::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial acc = constant(1, ring_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  if (!ring_->field.is_rational()) return monic();
  // lcm of denominators, then gcd of numerators, sign from the lead
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
  Scalar s = Scalar::of_fraction(scale.get_num(), scale.get_den(), ring_->field);
  return scalar_mul(s);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scalar_mul(terms_[0].coeff.inverse());
}

Polynomial Polynomial::derivative(int var_index) const {
  if (var_index < 0 || var_index >= ring_->nvars())
    throw std::out_of_range("derivative variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::int32_t e = t.mono.exp(var_index);
    if (e == 0) continue;
    Scalar c = t.coeff * Scalar::of_int(e, ring_->field);
    if (c.is_zero()) continue;  // positive characteristic can kill terms
    out.push_back({c, t.mono / Monomial::var(ring_->nvars(), var_index)});
  }
  return of_terms(std::move(out), ring_);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  const PolyRingPtr& target) const {
  if (static_cast<int>(images.size()) != ring_->nvars())
    throw std::invalid_argument("substitute: one image per variable required");
  if (!(ring_->field == target->field))
    throw std::invalid_argument("substitute: characteristic mismatch");
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(t.coeff, target);
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp(i) == 0) continue;
      prod = prod * images[i].pow(t.mono.exp(i));
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::map_variables(const std::vector<int>& var_map,
                                     const PolyRingPtr& target) const {
  if (!(ring_->field == target->field))
    throw std::invalid_argument("map_variables: characteristic mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp(i) == 0) continue;
      int j = var_map[i];
      if (j < 0) throw std::invalid_argument("map_variables: unmapped variable in use");
      m = m * Monomial::var(target->nvars(), j, t.mono.exp(i));
    }
    out.push_back({t.coeff, m});
  }
  return of_terms(std::move(out), target);
}

std::int32_t Polynomial::degree_in(int t) const {
  std::int32_t d = -1;
  for (const auto& term : terms_) d = std::max(d, term.mono.exp(t));
  return d;
}

Polynomial Polynomial::coeff_of_power(int t, std::int32_t k) const {
  std::vector<Term> out;
  for (const auto& term : terms_) {
    if (term.mono.exp(t) != k) continue;
    out.push_back({term.coeff, term.mono / Monomial::var(ring_->nvars(), t, k)});
  }
  return of_terms(std::move(out), ring_);
}

bool Polynomial::is_monic_in(int t) const {
  std::int32_t d = degree_in(t);
  if (d < 0) return false;
  Polynomial lead = coeff_of_power(t, d);
  return lead.is_one();
}

DivmodResult poly_divmod(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  for (const auto& g : divisors)
    if (g.is_zero()) throw std::invalid_argument("zero divisor in division");
  const auto& ring = f.ring();
  DivmodResult res;
  res.quotients.assign(divisors.size(), Polynomial::zero(ring));
  res.remainder = Polynomial::zero(ring);
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term& lt = work.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& dlt = divisors[i].leading();
      if (!dlt.mono.divides(lt.mono)) continue;
      Scalar c = lt.coeff / dlt.coeff;
      Monomial m = lt.mono / dlt.mono;
      res.quotients[i] = res.quotients[i] + Polynomial::term(c, m, ring);
      work = work - divisors[i].multiply_term(c, m);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lead_term = Polynomial::term(lt.coeff, lt.mono, ring);
      res.remainder = res.remainder + lead_term;
      work = work - lead_term;
    }
  }
  return res;
}

UnivarDivmod divmod_univariate(const Polynomial& f, const Polynomial& g, int t) {
  if (!g.is_monic_in(t)) throw std::invalid_argument("univariate division needs a monic divisor");
  const auto& ring = f.ring();
  std::int32_t dg = g.degree_in(t);
  Polynomial q = Polynomial::zero(ring);
  Polynomial r = f;
  Polynomial tvar = Polynomial::variable(ring, t);
  while (true) {
    std::int32_t dr = r.degree_in(t);
    if (dr < dg) break;
    Polynomial c = r.coeff_of_power(t, dr);
    Polynomial shift = c * tvar.pow(dr - dg);
    q = q + shift;
    r = r - shift * g;
  }
  return {q, r};
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool neg = false;
    if (ring_->field.is_rational() && c.rational() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool coeff_one = c.is_one();
    bool printed = false;
    if (!coeff_one || t.mono.is_one()) {
      os << c.str();
      printed = true;
    }
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp(i) == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (t.mono.exp(i) > 1) os << "^" << t.mono.exp(i);
      printed = true;
    }
  }
  return os.str();
}

}  // namespace rigiduality
