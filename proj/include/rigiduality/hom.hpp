#pragma once

#include "rigiduality/fpmodule.hpp"

namespace rigiduality {

// Homomorphism of presented algebras, one image polynomial per source
// ambient variable (auxiliary inversion variables get computed images).
// Construction verifies that every source relation maps to zero.
class AlgebraHom {
public:
  static AlgebraHom make(const AlgebraPtr& src, const AlgebraPtr& tgt,
                         const std::vector<Polynomial>& user_images);
  static AlgebraHom identity(const AlgebraPtr& a);
  // Builds the localized target src[1/g] together with the canonical map.
  static AlgebraHom localization(const AlgebraPtr& src, const Polynomial& g);

  const AlgebraPtr& source() const { return src_; }
  const AlgebraPtr& target() const { return tgt_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& f) const;
  bool is_identity() const;
  bool is_localization() const { return localization_; }
  // the inverted element for localization maps
  const std::optional<Polynomial>& localized_at() const { return loc_elem_; }

  // source variables map to same-named target variables
  bool is_variable_inclusion() const;
  // same ambient ring, identity on variables (target has more relations)
  bool is_surjective_reduction() const;

private:
  AlgebraHom() = default;
  AlgebraPtr src_, tgt_;
  std::vector<Polynomial> images_;
  bool localization_ = false;
  std::optional<Polynomial> loc_elem_;
};

// Relative Kaehler differentials Omega^1_{B/A} presented over the target:
// one generator d(t) per target variable, Jacobian rows of the target
// relations plus rows d(image of source variable) = 0.
struct KahlerModule {
  FPModule presentation;
  std::vector<std::string> dgens;
};
KahlerModule kahler_module(const AlgebraHom& f);

// Fitting-ideal certificate that Omega^1 is projective of constant rank;
// when an explicit basis exists it comes with rewrite rows expressing the
// other d-generators over the basis.
struct SmoothnessResult {
  bool ok = false;
  int rank = -1;
  std::optional<std::vector<int>> basis;  // indices of target vars whose d's form a basis
  std::vector<int> nonbasis;
  PolyMatrix rewrite;  // row per nonbasis generator, width = #basis
  std::string detail;
};
SmoothnessResult smoothness_rank(const AlgebraHom& f);

struct ChainStep {
  int var;         // target variable index
  Polynomial rel;  // monic relation for that variable
  int degree;
};

// Module-finiteness certificate. Free means a monogenic chain with the
// boxed monomial basis; Finite is the elimination-order spanning set.
struct FinitenessResult {
  enum class Status { Free, Finite, Infinite, Unknown };
  Status status = Status::Unknown;
  std::vector<Monomial> basis;  // monomials in the target ring
  std::vector<ChainStep> chain;
  std::string detail;

  bool certified_finite() const { return status == Status::Free || status == Status::Finite; }
};
FinitenessResult finiteness_basis(const AlgebraHom& f);

struct EtaleResult {
  bool etale = false;
  std::string detail;
};
EtaleResult is_etale(const AlgebraHom& f);

// det of a square polynomial matrix, entries reduced in the algebra
Polynomial det_poly_matrix(const PolyMatrix& mat, const AlgebraPtr& a);
// adjugate (transpose of cofactors): adj * mat = det * id
PolyMatrix adjugate_poly_matrix(const PolyMatrix& mat, const AlgebraPtr& a);
// resultant of two univariate-in-var polynomials via the Sylvester matrix
Polynomial resultant_in_var(const Polynomial& f, const Polynomial& g, int var,
                            const AlgebraPtr& a);

}  // namespace rigiduality
