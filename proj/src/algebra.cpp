#include "rigiduality/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rigiduality {

AlgebraPtr Algebra::make(CoeffField field, const std::vector<std::string>& vars,
                         const std::vector<Polynomial>& relations,
                         const std::vector<Polynomial>& inverted, Options opts) {
  int nu = static_cast<int>(vars.size());
  std::vector<std::string> all_vars = vars;
  for (std::size_t j = 0; j < inverted.size(); ++j) {
    std::string name = "_u" + std::to_string(j + 1);
    if (std::find(all_vars.begin(), all_vars.end(), name) != all_vars.end())
      throw std::invalid_argument("variable name " + name + " is reserved");
    all_vars.push_back(name);
  }
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->ring_ = make_poly_ring(field, all_vars, opts.order);
  a->user_vars_ = nu;

  std::vector<int> var_map(nu);
  for (int i = 0; i < nu; ++i) var_map[i] = i;
  auto into = [&](const Polynomial& p) {
    if (p.ring()->nvars() != nu)
      throw std::invalid_argument("relation/inverted element not over the user variables");
    return p.map_variables(var_map, a->ring_);
  };

  for (const auto& r : relations) {
    Polynomial q = into(r);
    if (!q.is_zero()) a->relations_.push_back(q);
  }
  GroebnerBasis base_gb = buchberger(a->relations_, a->ring_);
  if (base_gb.is_unit_ideal() && !opts.allow_zero)
    throw std::invalid_argument("1 lies in the ideal; pass allow_zero to accept the zero ring");

  for (std::size_t j = 0; j < inverted.size(); ++j) {
    Polynomial g = into(inverted[j]);
    if (base_gb.normal_form(g).is_zero())
      throw std::invalid_argument("inverted element is zero in the quotient: " + g.str());
    a->inverted_.push_back(g);
    Polynomial u = Polynomial::variable(a->ring_, nu + static_cast<int>(j));
    a->relations_.push_back(u * g - Polynomial::constant(1, a->ring_));
  }

  a->gb_ = buchberger(a->relations_, a->ring_);
  a->zero_ = a->gb_.is_unit_ideal();
  if (a->zero_ && !opts.allow_zero)
    throw std::invalid_argument("localization collapses the ring to zero");
  a->dim_ = krull_dimension(a->gb_);
  return a;
}

AlgebraPtr Algebra::localize(const AlgebraPtr& base, const Polynomial& g) {
  // rebuild over the user variable data of the base
  std::vector<std::string> user(base->ring_->vars.begin(),
                                base->ring_->vars.begin() + base->user_vars_);
  auto user_ring = make_poly_ring(base->field(), user, base->ring_->order);
  std::vector<int> down(base->nvars(), -1);
  for (int i = 0; i < base->user_vars_; ++i) down[i] = i;

  auto demote = [&](const Polynomial& p) { return p.map_variables(down, user_ring); };

  std::vector<Polynomial> rels;
  int naux = static_cast<int>(base->inverted_.size());
  int nrel = static_cast<int>(base->relations_.size()) - naux;
  for (int i = 0; i < nrel; ++i) rels.push_back(demote(base->relations_[i]));
  std::vector<Polynomial> inv;
  for (const auto& f : base->inverted_) inv.push_back(demote(f));
  if (g.ring()->nvars() == base->nvars())
    inv.push_back(demote(g));
  else
    inv.push_back(g);

  Options opts;
  opts.order = base->ring_->order;
  return make(base->field(), user, rels, inv, opts);
}

AlgebraPtr Algebra::ambient_polynomial_algebra(const Algebra& a) {
  auto c = std::shared_ptr<Algebra>(new Algebra());
  c->ring_ = a.ring_;
  c->user_vars_ = a.ring_->nvars();
  c->gb_ = GroebnerBasis(a.ring_, {}, true);
  c->dim_ = a.ring_->nvars();
  return c;
}

bool Algebra::is_unit(const Polynomial& f, Polynomial* inverse) const {
  // f is a unit iff 1 lies in I + (f); the lift gives the inverse
  std::vector<VecPoly> gens;
  gens.push_back(VecPoly::from_components({nf(f)}));
  for (const auto& r : relations_) gens.push_back(VecPoly::from_components({r}));
  auto one = VecPoly::from_components({Polynomial::constant(1, ring_)});
  auto cert = lift_through(gens, ring_, 1, one);
  if (!cert) return false;
  if (inverse) *inverse = nf((*cert)[0]);
  return true;
}

std::string Algebra::display() const {
  std::ostringstream os;
  os << ring_->field.name() << "[";
  for (int i = 0; i < user_vars_; ++i) {
    if (i) os << ",";
    os << ring_->vars[i];
  }
  os << "]";
  int naux = static_cast<int>(inverted_.size());
  int nrel = static_cast<int>(relations_.size()) - naux;
  if (nrel > 0) {
    os << "/(";
    for (int i = 0; i < nrel; ++i) {
      if (i) os << ", ";
      os << relations_[i].str();
    }
    os << ")";
  }
  for (const auto& g : inverted_) os << "[1/(" << g.str() << ")]";
  return os.str();
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (!same_ring(a->ring(), b->ring())) return false;
  if (a->relations().size() != b->relations().size()) return false;
  for (std::size_t i = 0; i < a->relations().size(); ++i)
    if (!(a->relations()[i] == b->relations()[i])) return false;
  return true;
}

}  // namespace rigiduality
