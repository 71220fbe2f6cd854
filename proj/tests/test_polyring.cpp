#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rigiduality/polynomial.hpp"

using namespace rigiduality;

namespace {

PolyRingPtr qq_xy() { return make_poly_ring(CoeffField::rationals(), {"x", "y"}); }

Polynomial random_poly(const PolyRingPtr& r, std::mt19937_64& rng, int max_terms = 5,
                       int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::vector<Term> ts;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m(r->nvars());
    for (int v = 0; v < r->nvars(); ++v)
      if (expd(rng) > 1) m = m * Monomial::var(r->nvars(), v, expd(rng));
    ts.push_back({Scalar::of_int(coeff(rng), r->field), m});
  }
  return Polynomial::of_terms(std::move(ts), r);
}

}  // namespace

TEST_CASE("binomial square") {
  auto r = qq_xy();
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  auto f = (x + y) * (x + y);
  auto expect = x * x + Polynomial::constant(2, r) * x * y + y * y;
  CHECK(f == expect);
  CHECK(f.str() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("additive inverse gives the empty term list") {
  auto r = qq_xy();
  auto x = Polynomial::variable(r, 0);
  auto f = x * x + Polynomial::constant(3, r);
  CHECK((f + (-f)).is_zero());
  CHECK((f - f).terms().empty());
}

TEST_CASE("characteristic 2 is rejected, char 3 frobenius-like collapse") {
  CHECK_THROWS(CoeffField::prime_field(2));
  // over F_3, d/dx x^3 = 0
  auto r3 = make_poly_ring(CoeffField::prime_field(3), {"x"});
  auto x = Polynomial::variable(r3, 0);
  CHECK((x * x * x).derivative(0).is_zero());
}

TEST_CASE("freshman dream over F_5 for 5th powers") {
  auto r = make_poly_ring(CoeffField::prime_field(5), {"x", "y"});
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  auto f = (x + y).pow(5);
  CHECK(f == x.pow(5) + y.pow(5));
}

TEST_CASE("ring axioms on random triples") {
  auto r = qq_xy();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    auto f = random_poly(r, rng);
    auto g = random_poly(r, rng);
    auto h = random_poly(r, rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
  }
}

TEST_CASE("leibniz rule on random pairs") {
  auto r = qq_xy();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto f = random_poly(r, rng);
    auto g = random_poly(r, rng);
    for (int v = 0; v < 2; ++v)
      CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST_CASE("partial derivative basics") {
  auto r = make_poly_ring(CoeffField::rationals(), {"t", "s"});
  auto t = Polynomial::variable(r, 0);
  auto s = Polynomial::variable(r, 1);
  for (int n = 2; n <= 5; ++n) {
    auto f = t.pow(n) - s;
    CHECK(f.derivative(0) == Polynomial::constant(n, r) * t.pow(n - 1));
    CHECK(f.derivative(1) == -Polynomial::constant(1, r));
  }
  CHECK(Polynomial::constant(9, r).derivative(0).is_zero());
  CHECK_THROWS(t.derivative(5));
}

TEST_CASE("multivariate division against the multiply-back oracle") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y"}, MonomialOrder::lex());
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);

  // f = x^2 y, divisor xy - 1, lex x > y
  auto f = x * x * y;
  auto g = x * y - Polynomial::constant(1, r);
  auto res = poly_divmod(f, {g});
  CHECK(res.quotients[0] == x);
  CHECK(res.remainder == x);
  CHECK(res.quotients[0] * g + res.remainder == f);

  // trivial cases
  auto r2 = poly_divmod(x, {x});
  CHECK(r2.quotients[0].is_one());
  CHECK(r2.remainder.is_zero());
  auto r3 = poly_divmod(f + y, {Polynomial::constant(1, r)});
  CHECK(r3.remainder.is_zero());
  CHECK(r3.quotients[0] == f + y);

  CHECK_THROWS(poly_divmod(f, {Polynomial::zero(r)}));
}

TEST_CASE("division identity and remainder irreducibility on random input") {
  auto r = qq_xy();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(r, rng, 6, 4);
    std::vector<Polynomial> divs;
    for (int k = 0; k < 2; ++k) {
      auto d = random_poly(r, rng, 3, 2);
      if (!d.is_zero()) divs.push_back(d);
    }
    if (divs.empty()) continue;
    auto res = poly_divmod(f, divs);
    Polynomial back = res.remainder;
    for (std::size_t k = 0; k < divs.size(); ++k) back = back + res.quotients[k] * divs[k];
    CHECK(back == f);
    for (const auto& t : res.remainder.terms())
      for (const auto& d : divs) CHECK_FALSE(d.leading().mono.divides(t.mono));
  }
}

TEST_CASE("univariate division by a monic polynomial") {
  auto r = make_poly_ring(CoeffField::rationals(), {"t", "s"});
  auto t = Polynomial::variable(r, 0);
  auto s = Polynomial::variable(r, 1);
  auto f = t.pow(3) - s;  // monic in t
  auto g = t.pow(7) + s * t;
  auto [q, rem] = divmod_univariate(g, f, 0);
  CHECK(q * f + rem == g);
  CHECK(rem.degree_in(0) < 3);
  CHECK_THROWS(divmod_univariate(g, s * t - Polynomial::constant(1, r), 0));
}

TEST_CASE("string round structure") {
  auto r = qq_xy();
  auto x = Polynomial::variable(r, 0);
  auto y = Polynomial::variable(r, 1);
  auto f = Polynomial::constant(Scalar::of_fraction(3, 2, r->field), r) * x * x * y - y +
           Polynomial::constant(1, r);
  CHECK(f.str() == "3/2*x^2*y - y + 1");
  CHECK(Polynomial::zero(r).str() == "0");
}

TEST_CASE("monomial order sanity") {
  auto grev = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();
  Monomial x = Monomial::var(2, 0), y = Monomial::var(2, 1);
  Monomial x2 = Monomial::var(2, 0, 2);
  CHECK(grev.cmp(x, y) > 0);
  CHECK(grev.cmp(x2, x * y) > 0);
  CHECK(lex.cmp(x, y * y) > 0);       // lex ignores degree
  CHECK(grev.cmp(y * y, x) > 0);      // grevlex is degree first
  CHECK(grev.cmp(x, Monomial::one(2)) > 0);  // 1 is least
  auto blk = MonomialOrder::block(1);
  CHECK(blk.cmp(x, y * y) > 0);  // x-block dominates
}
