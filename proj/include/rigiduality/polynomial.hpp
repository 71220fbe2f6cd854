#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rigiduality/monomial.hpp"
#include "rigiduality/order.hpp"
#include "rigiduality/scalar.hpp"

namespace rigiduality {

// Ambient polynomial ring data shared by all values living in it.
struct PolyRing {
  CoeffField field;
  std::vector<std::string> vars;
  MonomialOrder order;

  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const;  // -1 if absent
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(CoeffField field, std::vector<std::string> vars,
                           MonomialOrder order = MonomialOrder::grevlex());

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

struct Term {
  Scalar coeff;
  Monomial mono;
};

// Sparse exact multivariate polynomial; terms strictly descending in the
// ring's monomial order, no zero coefficients, no duplicate monomials.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const PolyRingPtr& r) { return Polynomial(r); }
  static Polynomial constant(const Scalar& c, const PolyRingPtr& r);
  static Polynomial constant(long v, const PolyRingPtr& r);
  static Polynomial variable(const PolyRingPtr& r, int i, std::int32_t power = 1);
  static Polynomial term(const Scalar& c, const Monomial& m, const PolyRingPtr& r);
  // Builds from an arbitrary term list (sorts and combines).
  static Polynomial of_terms(std::vector<Term> terms, const PolyRingPtr& r);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  bool is_one() const;
  std::int64_t total_degree() const;  // -1 for the zero polynomial

  const Term& leading() const;  // requires nonzero
  Scalar constant_coeff() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial multiply_term(const Scalar& c, const Monomial& m) const;
  Polynomial scalar_mul(const Scalar& c) const;
  Polynomial pow(std::int64_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Scales so that over QQ the coefficients are coprime integers with a
  // positive leading one, over F_p the polynomial is monic.
  Polynomial primitive_part() const;
  Polynomial monic() const;

  Polynomial derivative(int var_index) const;

  // Substitutes images[i] for variable i; the result lives in the ring of
  // the images (which must all agree). Handles the empty polynomial.
  Polynomial substitute(const std::vector<Polynomial>& images,
                        const PolyRingPtr& target) const;

  // Reinterpret in another ring given an index map old->new (-1 forbidden).
  Polynomial map_variables(const std::vector<int>& var_map, const PolyRingPtr& target) const;

  // Views the polynomial as univariate in variable t.
  std::int32_t degree_in(int t) const;
  // Coefficient of t^k, a polynomial in the same ring not involving t.
  Polynomial coeff_of_power(int t, std::int32_t k) const;
  bool is_monic_in(int t) const;

  std::string str() const;

private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;

  void normalize();  // sort + combine + drop zeros
  friend Polynomial divmod_impl(const Polynomial&, const std::vector<Polynomial>&,
                                std::vector<Polynomial>*);
};

// Standard multivariate division: f = sum q_i g_i + r with no term of r
// divisible by any leading monomial of the divisors.
struct DivmodResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivmodResult poly_divmod(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Division of f by g, both viewed as univariate in variable t with g monic
// in t: f = q*g + r, degree_in(r, t) < degree_in(g, t).
struct UnivarDivmod {
  Polynomial quotient;
  Polynomial remainder;
};
UnivarDivmod divmod_univariate(const Polynomial& f, const Polynomial& g, int t);

}  // namespace rigiduality
