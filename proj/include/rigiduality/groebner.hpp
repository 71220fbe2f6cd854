#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigiduality/vecpoly.hpp"

namespace rigiduality {

// Groebner basis of a submodule of R^rank. Elements are monic and
// inter-reduced; order of elements is deterministic for fixed input.
class ModuleGB {
public:
  ModuleGB() = default;
  ModuleGB(PolyRingPtr ring, int rank, int tag_start, std::vector<VecPoly> elems)
      : ring_(std::move(ring)), rank_(rank), tag_start_(tag_start), elems_(std::move(elems)) {}

  const PolyRingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  int tag_start() const { return tag_start_; }
  const std::vector<VecPoly>& elems() const { return elems_; }

  // Full normal form. If lift is non-null it receives one polynomial per
  // basis element with v = nf + sum lift[j] * elems[j].
  VecPoly reduce(const VecPoly& v, std::vector<Polynomial>* lift = nullptr) const;
  bool contains(const VecPoly& v) const { return reduce(v).is_zero(); }

private:
  PolyRingPtr ring_;
  int rank_ = 0;
  int tag_start_ = -1;
  std::vector<VecPoly> elems_;
};

ModuleGB buchberger_module(const std::vector<VecPoly>& gens, const PolyRingPtr& ring, int rank,
                           int tag_start = -1);

// Groebner basis of the span of gens together with a generating set of
// its syzygy module, obtained from one tagged basis computation:
// embed generator i as gens[i] (+) e_i and eliminate the main block.
struct KernelData {
  ModuleGB gb;                     // basis of the span, tags stripped (rank = input rank)
  std::vector<VecPoly> syzygies;   // vectors of rank = #gens
  // representation of each gb element in terms of the input generators
  std::vector<std::vector<Polynomial>> reps;
};
KernelData kernel_with_tags(const std::vector<VecPoly>& gens, const PolyRingPtr& ring, int rank);

// Membership with certificate: if v lies in the span of gens, returns
// coefficients c with v = sum c_i gens[i]; otherwise nullopt.
std::optional<std::vector<Polynomial>> lift_through(const std::vector<VecPoly>& gens,
                                                    const PolyRingPtr& ring, int rank,
                                                    const VecPoly& v);

// ---- ideal level ----

class GroebnerBasis {
public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> gens, bool reduced)
      : ring_(std::move(ring)), gens_(std::move(gens)), reduced_(reduced) {}

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool reduced() const { return reduced_; }
  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return gens_.empty(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  std::vector<Monomial> leading_monomials() const;

private:
  PolyRingPtr ring_;
  std::vector<Polynomial> gens_;
  bool reduced_ = false;
};

// Reduced Groebner basis of the ideal generated by gens; deterministic
// for fixed input and order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const PolyRingPtr& ring);

// Every S-polynomial of basis pairs reduces to zero.
bool verify_buchberger_criterion(const GroebnerBasis& gb);

// Generating set of the syzygy module of the basis: each returned vector s
// satisfies sum s_i * gens[i] == 0.
std::vector<std::vector<Polynomial>> syzygy_matrix(const GroebnerBasis& gb);

// Krull dimension of R/I via maximal independent variable sets modulo the
// initial ideal; -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& gb);

// Hilbert series numer(T) / (1-T)^nvars of a homogeneous quotient.
struct HilbertSeries {
  std::vector<mpz_class> numer;  // coefficient of T^i at index i
  int denom_power = 0;

  std::string str() const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);
};
HilbertSeries hilbert_series(const GroebnerBasis& gb);

// Numerator recursion on a monomial ideal (exposed for module use).
std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, int nvars);

bool is_homogeneous(const Polynomial& f);

}  // namespace rigiduality
