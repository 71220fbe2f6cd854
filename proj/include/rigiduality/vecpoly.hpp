#pragma once

#include <vector>

#include "rigiduality/polynomial.hpp"

namespace rigiduality {

struct VecTerm {
  Scalar coeff;
  Monomial mono;
  int comp;
};

// Element of a free module R^rank over a polynomial ring. Terms are kept
// strictly descending under the module order: ring order on monomials,
// ties broken by component (lower component larger). When tag_start >= 0,
// components >= tag_start rank below every component < tag_start
// regardless of monomial; that block order is what turns Groebner bases
// into kernel/lift computations.
class VecPoly {
public:
  VecPoly() = default;
  VecPoly(PolyRingPtr ring, int rank, int tag_start = -1)
      : ring_(std::move(ring)), rank_(rank), tag_start_(tag_start) {}

  static VecPoly unit(const PolyRingPtr& r, int rank, int comp, int tag_start = -1);
  static VecPoly from_components(const std::vector<Polynomial>& comps, int tag_start = -1);
  static VecPoly of_terms(std::vector<VecTerm> terms, PolyRingPtr ring, int rank,
                          int tag_start = -1);

  const PolyRingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  int tag_start() const { return tag_start_; }
  const std::vector<VecTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VecTerm& leading() const;

  VecPoly operator-() const;
  VecPoly operator+(const VecPoly& o) const;
  VecPoly operator-(const VecPoly& o) const;
  VecPoly multiply_term(const Scalar& c, const Monomial& m) const;
  VecPoly multiply_poly(const Polynomial& p) const;
  VecPoly scalar_mul(const Scalar& c) const;

  Polynomial component(int c) const;
  std::vector<Polynomial> components() const;  // all rank of them
  bool main_part_zero() const;                 // no term with comp < tag_start

  // Sub-vector of components [lo, hi), renumbered from 0, plain order.
  VecPoly slice(int lo, int hi) const;
  // Re-embed into a larger module: component c -> c + shift.
  VecPoly embed(int new_rank, int shift, int new_tag_start = -1) const;

  VecPoly primitive_part() const;
  VecPoly monic() const;

  friend bool operator==(const VecPoly& a, const VecPoly& b);

  static int cmp_terms(const MonomialOrder& o, int tag_start, const VecTerm& a, const VecTerm& b);

private:
  PolyRingPtr ring_;
  int rank_ = 0;
  int tag_start_ = -1;
  std::vector<VecTerm> terms_;

  void normalize();
};

}  // namespace rigiduality
