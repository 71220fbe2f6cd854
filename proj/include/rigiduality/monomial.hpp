#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rigiduality {

// Exponent vector with cached total degree. Length always equals the
// ambient variable count of the owning ring.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {
    for (auto x : e_) deg_ += x;
  }

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial var(int nvars, int i, std::int32_t power = 1) {
    Monomial m(nvars);
    m.e_.at(i) = power;
    m.deg_ = power;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  std::int32_t exp(int i) const { return e_[i]; }
  std::int64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial m(*this);
    for (int i = 0; i < nvars(); ++i) m.e_[i] += o.e_[i];
    m.deg_ += o.deg_;
    return m;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // *this / o; requires o.divides(*this)
  Monomial operator/(const Monomial& o) const {
    Monomial m(*this);
    for (int i = 0; i < nvars(); ++i) {
      m.e_[i] -= o.e_[i];
      if (m.e_[i] < 0) throw std::domain_error("monomial division not exact");
    }
    m.deg_ -= o.deg_;
    return m;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial m(nvars());
    for (int i = 0; i < nvars(); ++i) {
      m.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
      m.deg_ += m.e_[i];
    }
    return m;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<std::int32_t> e_;
  std::int64_t deg_ = 0;
};

}  // namespace rigiduality
