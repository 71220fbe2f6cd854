#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rigiduality/groebner.hpp"

namespace rigiduality {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  bool allow_zero = false;
};

// Presentation K[t_1..t_n]/I with a list of inverted elements, each
// realized by an auxiliary variable u with relation u*g - 1. Groebner
// data and the Krull dimension are computed at construction and never
// change afterwards.
class Algebra {
public:
  using Options = AlgebraOptions;

  // vars/relations/inverted are given over the user variables only;
  // auxiliary inversion variables are appended internally.
  static AlgebraPtr make(CoeffField field, const std::vector<std::string>& vars,
                         const std::vector<Polynomial>& relations,
                         const std::vector<Polynomial>& inverted = {}, Options opts = {});

  // Adds one more inverted element to an existing algebra.
  static AlgebraPtr localize(const AlgebraPtr& base, const Polynomial& g);

  // Same ambient ring, empty ideal.
  static AlgebraPtr ambient_polynomial_algebra(const Algebra& a);

  const PolyRingPtr& ring() const { return ring_; }
  CoeffField field() const { return ring_->field; }
  int nvars() const { return ring_->nvars(); }
  int user_vars() const { return user_vars_; }
  int dim() const { return dim_; }
  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Polynomial>& inverted() const { return inverted_; }
  bool is_zero_ring() const { return zero_; }
  bool is_polynomial_ring() const { return relations_.empty(); }

  Polynomial nf(const Polynomial& f) const { return gb_.normal_form(f); }
  bool is_unit(const Polynomial& f, Polynomial* inverse = nullptr) const;

  // Parses nothing; renders "QQ[x,y]/(y^2 - x^3)[1/(x)]".
  std::string display() const;

private:
  Algebra() = default;

  PolyRingPtr ring_;
  int user_vars_ = 0;
  std::vector<Polynomial> relations_;  // over ring_, aux relations included
  std::vector<Polynomial> inverted_;   // over ring_
  GroebnerBasis gb_;
  int dim_ = 0;
  bool zero_ = false;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace rigiduality
