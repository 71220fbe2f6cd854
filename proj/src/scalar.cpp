#include "rigiduality/scalar.hpp"

#include <stdexcept>

namespace rigiduality {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::int64_t p) {
  std::int64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

CoeffField CoeffField::prime_field(std::uint32_t p) {
  if (p == 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("prime field characteristic must be an odd prime < 2^31, got " +
                                std::to_string(p));
  CoeffField f;
  f.p_ = p;
  return f;
}

std::string CoeffField::name() const {
  return p_ == 0 ? "QQ" : "Fp(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const CoeffField& f) {
  Scalar s;
  s.p_ = f.characteristic();
  return s;
}

Scalar Scalar::one(const CoeffField& f) { return of_int(1, f); }

Scalar Scalar::of_int(long v, const CoeffField& f) {
  Scalar s;
  s.p_ = f.characteristic();
  if (s.p_ == 0) {
    s.q_ = v;
  } else {
    s.r_ = v % static_cast<std::int64_t>(s.p_);
    if (s.r_ < 0) s.r_ += s.p_;
  }
  return s;
}

Scalar Scalar::of_mpz(const mpz_class& v, const CoeffField& f) {
  Scalar s;
  s.p_ = f.characteristic();
  if (s.p_ == 0) {
    s.q_ = v;
  } else {
    mpz_class r = v % mpz_class(s.p_);
    s.r_ = r.get_si();
    if (s.r_ < 0) s.r_ += s.p_;
  }
  return s;
}

Scalar Scalar::of_fraction(const mpz_class& num, const mpz_class& den, const CoeffField& f) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (f.is_rational()) {
    Scalar s;
    s.q_ = mpq_class(num) / mpq_class(den);
    s.q_.canonicalize();
    return s;
  }
  return of_mpz(num, f) / of_mpz(den, f);
}

CoeffField Scalar::field() const {
  return p_ == 0 ? CoeffField::rationals() : CoeffField::prime_field(p_);
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalar characteristic mismatch");
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = p_ - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(*this);
  if (p_ == 0)
    s.q_ += o.q_;
  else
    s.r_ = (r_ + o.r_) % p_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(*this);
  if (p_ == 0)
    s.q_ *= o.q_;
  else
    s.r_ = r_ * o.r_ % p_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, p_ - 2, p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace rigiduality
