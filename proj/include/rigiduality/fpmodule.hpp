#pragma once

#include <mutex>
#include <optional>

#include "rigiduality/algebra.hpp"

namespace rigiduality {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Finitely presented module over an Algebra: cokernel of the row span of
// a presentation matrix (rows = relations, columns = generators), entries
// kept in normal form. The zero module is the 0x0 presentation.
class FPModule {
public:
  FPModule() = default;
  FPModule(AlgebraPtr algebra, int gens, PolyMatrix rows,
           std::optional<std::vector<int>> degrees = std::nullopt);

  static FPModule free_module(const AlgebraPtr& a, int rank);
  static FPModule zero_module(const AlgebraPtr& a);
  // A / (f_1, ..., f_k)
  static FPModule cyclic(const AlgebraPtr& a, const std::vector<Polynomial>& rels);

  const AlgebraPtr& algebra() const { return algebra_; }
  int gens() const { return gens_; }
  const PolyMatrix& rows() const { return rows_; }
  const std::optional<std::vector<int>>& degrees() const { return degrees_; }

  bool is_zero_module() const;
  // Module Groebner basis of row span + I*e_j over the ambient ring.
  const ModuleGB& rel_gb() const;
  // Normal form of a coordinate vector against rel_gb.
  VecPoly nf_vec(const VecPoly& v) const;
  // Does the class of v vanish in the module?
  bool member_zero(const VecPoly& v) const { return nf_vec(v).is_zero(); }

  std::string str() const;

private:
  AlgebraPtr algebra_;
  int gens_ = 0;
  PolyMatrix rows_;
  std::optional<std::vector<int>> degrees_;

  struct Cache {
    std::once_flag once;
    ModuleGB gb;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Map of modules over one algebra; row i is the image of source generator
// i in target coordinates.
struct ModuleMap {
  FPModule src;
  FPModule tgt;
  PolyMatrix mat;
};

ModuleMap identity_map(const FPModule& m);
bool map_well_defined(const ModuleMap& f);
// f then g
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);

// Kernel of f presented as an FPModule; if incl is non-null it receives
// one row per kernel generator, giving that generator in src coordinates.
FPModule kernel(const ModuleMap& f, PolyMatrix* incl = nullptr);
FPModule cokernel(const ModuleMap& f);
FPModule direct_sum_power(const FPModule& m, int copies);

// Generators of the syzygy module over the algebra: vectors a with
// sum a_i rows[i] == 0 in A^rank.
std::vector<std::vector<Polynomial>> syzygies_over_algebra(const PolyMatrix& rows, int rank,
                                                           const AlgebraPtr& a);

// Bounded free resolution ... -> F_1 -> F_0 -> M -> 0. diffs[k] is the
// matrix of d_{k+1} : F_{k+1} -> F_k. terminated means the last syzygy
// computation came back empty, so the complex is exact beyond its end.
struct FreeComplex {
  AlgebraPtr algebra;
  std::vector<int> ranks;
  std::vector<PolyMatrix> diffs;
  int offset = 0;
  bool terminated = false;

  int length() const { return static_cast<int>(ranks.size()) - 1; }
};

FreeComplex free_resolution(const FPModule& m, int length);
// d_{k+1} o d_{k+2} == 0 for all k, exactly.
bool verify_complex(const FreeComplex& c);

// H^i of Hom(C, target) for a complex C of free modules.
FPModule complex_cohomology(const FreeComplex& c, const FPModule& target, int i);

// Ext^i_A(M, N); ext 0 is Hom.
FPModule ext_module(int i, const FPModule& m, const FPModule& n);

// Hom_A(M, N) together with explicit matrices (src.gens x tgt.gens) for
// each Hom generator.
struct HomData {
  FPModule module;
  std::vector<PolyMatrix> generator_maps;
};
HomData hom_module(const FPModule& m, const FPModule& n);

FPModule tensor_product(const FPModule& m, const FPModule& n);
// M over A pushed along A -> B given by images (one per ambient A-var).
FPModule base_change(const FPModule& m, const std::vector<Polynomial>& images,
                     const AlgebraPtr& target);

// Minimal Betti numbers via Tor with the residue field at the origin.
std::vector<int> minimal_betti(const FPModule& m, int length);

// Standard-graded Hilbert series of the module, when generator degrees
// can be inferred; connected reports whether the inferred grading is
// unique up to one global shift.
struct ModuleSeries {
  HilbertSeries series;
  bool connected = true;
};
std::optional<ModuleSeries> module_hilbert_series(const FPModule& m);

enum class IsoVerdict { IsoFound, HilbertMismatch, Inconclusive };
struct IsoResult {
  IsoVerdict verdict;
  PolyMatrix map;  // filled when IsoFound
  std::string note;
};
IsoResult iso_probe(const FPModule& m, const FPModule& n, std::uint64_t seed = 1,
                    int attempts = 64);

}  // namespace rigiduality
