#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rigiduality {

// Coefficient field of a computation: QQ when characteristic() == 0,
// otherwise F_p for an odd prime p < 2^31. Fixed per ring.
class CoeffField {
public:
  CoeffField() = default;
  static CoeffField rationals() { return CoeffField(); }
  static CoeffField prime_field(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const CoeffField&, const CoeffField&) = default;

private:
  std::uint32_t p_ = 0;
};

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq canonical form); prime-field residues in [0, p).
class Scalar {
public:
  Scalar() = default;  // zero over QQ

  static Scalar zero(const CoeffField& f);
  static Scalar one(const CoeffField& f);
  static Scalar of_int(long v, const CoeffField& f);
  static Scalar of_mpz(const mpz_class& v, const CoeffField& f);
  static Scalar of_fraction(const mpz_class& num, const mpz_class& den,
                            const CoeffField& f);

  CoeffField field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // o must be nonzero
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // For QQ elements only.
  const mpq_class& rational() const { return q_; }
  // For F_p elements only.
  std::int64_t residue() const { return r_; }

  // "3/2", "-1", "5"
  std::string str() const;

private:
  mpq_class q_;
  std::int64_t r_ = 0;
  std::uint32_t p_ = 0;

  void check_same_field(const Scalar& o) const;
};

}  // namespace rigiduality
