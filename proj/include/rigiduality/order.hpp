#pragma once

#include <string>

#include "rigiduality/monomial.hpp"

namespace rigiduality {

enum class OrderKind { Lex, GrevLex, Block };

// Total order on monomials compatible with multiplication, 1 least.
// Block is a two-block elimination order: variables [0, split) dominate,
// each block compared by graded reverse lexicographic.
class MonomialOrder {
public:
  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }
  static MonomialOrder block(int split) { return MonomialOrder(OrderKind::Block, split); }

  OrderKind kind() const { return kind_; }
  int split() const { return split_; }

  // +1 if a > b, 0 if equal, -1 if a < b
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        return cmp_lex(a, b, 0, a.nvars());
      case OrderKind::GrevLex:
        return cmp_grevlex(a, b, 0, a.nvars());
      case OrderKind::Block: {
        int c = cmp_grevlex(a, b, 0, split_);
        if (c != 0) return c;
        return cmp_grevlex(a, b, split_, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::Lex: return "lex";
      case OrderKind::GrevLex: return "grevlex";
      case OrderKind::Block: return "block(" + std::to_string(split_) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  MonomialOrder(OrderKind k, int s) : kind_(k), split_(s) {}

  static int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    return 0;
  }

  static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
    std::int64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.exp(i);
      db += b.exp(i);
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    return 0;
  }

  OrderKind kind_ = OrderKind::GrevLex;
  int split_ = 0;
};

}  // namespace rigiduality
