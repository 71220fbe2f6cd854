#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rigiduality/groebner.hpp"

using namespace rigiduality;

namespace {

Polynomial pv(const PolyRingPtr& r, int i) { return Polynomial::variable(r, i); }

Polynomial random_poly(const PolyRingPtr& r, std::mt19937_64& rng, int max_terms = 4,
                       int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<long> coeff(-3, 3);
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

TEST_CASE("principal and unit ideals") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  auto x = pv(r, 0);
  auto gb = buchberger({x}, r);
  REQUIRE(gb.gens().size() == 1);
  CHECK(gb.gens()[0] == x);

  auto gbu = buchberger({Polynomial::constant(1, r), x * x + pv(r, 1)}, r);
  REQUIRE(gbu.gens().size() == 1);
  CHECK(gbu.gens()[0].is_one());
  CHECK(gbu.is_unit_ideal());
}

TEST_CASE("twisted cubic under lex: membership and criterion") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"}, MonomialOrder::lex());
  auto x = pv(r, 0), y = pv(r, 1), z = pv(r, 2);
  auto gb = buchberger({y - x * x, z - x * x * x}, r);
  CHECK(verify_buchberger_criterion(gb));

  // xz - y^2 lies in the ideal: substitution oracle y -> x^2, z -> x^3
  auto member = x * z - y * y;
  auto sub = member.substitute({x, x * x, x * x * x}, r);
  REQUIRE(sub.is_zero());
  CHECK(gb.normal_form(member).is_zero());

  // non-member
  CHECK_FALSE(gb.normal_form(x * y - Polynomial::constant(1, r)).is_zero());

  // normal form of generators is zero, and normal form is idempotent
  for (const auto& g : gb.gens()) CHECK(gb.normal_form(g).is_zero());
  auto f = x * y * z + y;
  CHECK(gb.normal_form(gb.normal_form(f)) == gb.normal_form(f));
}

TEST_CASE("x^4 mod GB(x^2) is zero") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x"});
  auto x = pv(r, 0);
  auto gb = buchberger({x * x}, r);
  CHECK(gb.normal_form(x.pow(4)).is_zero());
  CHECK_FALSE(gb.normal_form(x).is_zero());
}

TEST_CASE("normal form is additive modulo normal forms") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  auto gb = buchberger({pv(r, 0).pow(2) - pv(r, 1), pv(r, 1).pow(3)}, r);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(r, rng);
    auto g = random_poly(r, rng);
    CHECK(gb.normal_form(f + g) == gb.normal_form(gb.normal_form(f) + gb.normal_form(g)));
  }
}

TEST_CASE("random bases satisfy the Buchberger criterion") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"});
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      auto f = random_poly(r, rng, 3, 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    auto gb = buchberger(gens, r);
    CHECK(verify_buchberger_criterion(gb));
    for (const auto& g : gens) CHECK(gb.normal_form(g).is_zero());
  }
}

TEST_CASE("syzygies: principal, Koszul, twisted cubic") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  auto x = pv(r, 0), y = pv(r, 1);

  auto principal = buchberger({x}, r);
  CHECK(syzygy_matrix(principal).empty());

  auto koszul = buchberger({x, y}, r);
  auto syz = syzygy_matrix(koszul);
  REQUIRE(syz.size() == 1);
  // (y, -x) up to sign and order of the reduced basis
  Polynomial dot = Polynomial::zero(r);
  for (std::size_t i = 0; i < syz[0].size(); ++i) dot = dot + syz[0][i] * koszul.gens()[i];
  CHECK(dot.is_zero());
  CHECK(syz[0][0].total_degree() == 1);

  auto r3 = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"}, MonomialOrder::lex());
  auto cubic = buchberger({pv(r3, 1) - pv(r3, 0).pow(2), pv(r3, 2) - pv(r3, 0).pow(3)}, r3);
  for (const auto& s : syzygy_matrix(cubic)) {
    Polynomial acc = Polynomial::zero(r3);
    for (std::size_t i = 0; i < s.size(); ++i) acc = acc + s[i] * cubic.gens()[i];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("krull dimension") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  auto x = pv(r, 0), y = pv(r, 1);
  CHECK(krull_dimension(buchberger({}, r)) == 2);
  CHECK(krull_dimension(buchberger({y * y - x * x * x}, r)) == 1);
  CHECK(krull_dimension(buchberger({x, y}, r)) == 0);
  CHECK(krull_dimension(buchberger({Polynomial::constant(2, r)}, r)) == -1);
}

TEST_CASE("random hypersurfaces have dimension n-1") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"});
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    auto f = random_poly(r, rng, 4, 3);
    if (f.is_zero() || f.is_constant()) continue;
    auto gb = buchberger({f}, r);
    if (gb.is_unit_ideal()) continue;
    CHECK(krull_dimension(gb) == 2);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("hilbert series") {
  auto r1 = make_poly_ring(CoeffField::rationals(), {"x"});
  auto hs = hilbert_series(buchberger({}, r1));
  CHECK(hs.numer == std::vector<mpz_class>{1});
  CHECK(hs.denom_power == 1);

  auto hs2 = hilbert_series(buchberger({pv(r1, 0).pow(2)}, r1));
  // 1 + T as a series: numerator (1 - T^2)/(1 - T)
  HilbertSeries expect;
  expect.numer = {1, 1};
  expect.denom_power = 0;
  CHECK(hs2 == expect);

  auto r3 = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"});
  auto quadric = buchberger({pv(r3, 0) * pv(r3, 2) - pv(r3, 1) * pv(r3, 1)}, r3);
  auto hs3 = hilbert_series(quadric);
  HilbertSeries expect3;
  expect3.numer = {1, 0, -1};  // 1 - T^2
  expect3.denom_power = 3;
  CHECK(hs3 == expect3);
  CHECK(hs3.str() == "(1 - T^2)/(1 - T)^3");

  auto inhom = buchberger({pv(r3, 0) - Polynomial::constant(1, r3)}, r3);
  CHECK_THROWS(hilbert_series(inhom));
}

TEST_CASE("module kernel data: lifts and syzygies agree with direct checks") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y"});
  auto x = pv(r, 0), y = pv(r, 1);
  // submodule of R^2 spanned by (x, y), (y, x), (x^2, y^2)
  std::vector<VecPoly> gens = {
      VecPoly::from_components({x, y}),
      VecPoly::from_components({y, x}),
      VecPoly::from_components({x * x, y * y}),
  };
  auto kd = kernel_with_tags(gens, r, 2);
  for (const auto& s : kd.syzygies) {
    VecPoly acc(r, 2);
    for (int i = 0; i < 3; ++i) acc = acc + gens[i].multiply_poly(s.component(i));
    CHECK(acc.is_zero());
  }
  // reps reproduce basis elements
  for (std::size_t e = 0; e < kd.gb.elems().size(); ++e) {
    VecPoly acc(r, 2);
    for (int i = 0; i < 3; ++i) acc = acc + gens[i].multiply_poly(kd.reps[e][i]);
    CHECK(acc == kd.gb.elems()[e]);
  }
  // membership lift
  VecPoly target = gens[0].multiply_poly(x * y) + gens[1].multiply_poly(y - x);
  auto cert = lift_through(gens, r, 2, target);
  REQUIRE(cert.has_value());
  VecPoly acc(r, 2);
  for (int i = 0; i < 3; ++i) acc = acc + gens[i].multiply_poly((*cert)[i]);
  CHECK(acc == target);
  // non-member
  CHECK_FALSE(lift_through(gens, r, 2, VecPoly::unit(r, 2, 0)).has_value());
}

TEST_CASE("groebner output is deterministic") {
  auto r = make_poly_ring(CoeffField::rationals(), {"x", "y", "z"});
  std::vector<Polynomial> gens = {pv(r, 0) * pv(r, 1) - pv(r, 2),
                                  pv(r, 1) * pv(r, 2) - pv(r, 0),
                                  pv(r, 2) * pv(r, 0) - pv(r, 1)};
  auto a = buchberger(gens, r);
  auto b = buchberger(gens, r);
  REQUIRE(a.gens().size() == b.gens().size());
  for (std::size_t i = 0; i < a.gens().size(); ++i) CHECK(a.gens()[i] == b.gens()[i]);
}
