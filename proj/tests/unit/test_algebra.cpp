#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "fixtures.hpp"
#include "thicket/algebra/groebner.hpp"
#include "thicket/algebra/ideal.hpp"
#include "thicket/algebra/syzygy.hpp"
#include "thicket/errors.hpp"
#include "thicket/util/rng.hpp"

using namespace thicket;
using fixtures::I;
using fixtures::M;
using fixtures::P;

TEST_CASE("field arithmetic is exact") {
  Field q = Field::rationals();
  CHECK(q.add(Scalar(1, 3), Scalar(1, 6)) == Scalar(1, 2));
  Field f5 = Field::prime(5);
  CHECK(f5.normalize(Scalar(3)) == -2);
  CHECK(f5.normalize(Scalar(1, 2)) == -2);  // 2 * 3 = 6 = 1
  CHECK(f5.mul(Scalar(2), Scalar(3)) == 1);
  CHECK(f5.inv(Scalar(2)) == -2);
  CHECK_THROWS_AS(Field::prime(6), InputError);
  CHECK_THROWS_AS(f5.inv(Scalar(0)), PreconditionError);
}

TEST_CASE("ring validation") {
  CHECK_THROWS_WITH_AS(GradedRing::create(Field::rationals(), {{"x", 3}}),
                       doctest::Contains("odd weight unsupported"), InputError);
  CHECK_THROWS_AS(GradedRing::create(Field::rationals(), {{"x", 2}, {"x", 2}}), InputError);
  CHECK_THROWS_AS(GradedRing::create(Field::rationals(), {{"1x", 2}}), InputError);
  auto r = fixtures::qxyz();
  CHECK(r->monomials_of_degree(4).size() == 4);  // x^2, xy, y^2, z
  CHECK(r->monomials_of_degree(3).empty());
}

TEST_CASE("polynomial grammar") {
  auto r = fixtures::qxy();
  CHECK(P(r, "x*y + 2x^2 - y^2").to_string() == "2*x^2 + x*y - y^2");
  CHECK(P(r, " - 3/6 * x ").to_string() == "-1/2*x");
  CHECK(P(r, "x*x - x^2").is_zero());
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "1").is_unit());
  CHECK_THROWS_WITH_AS(P(r, "x + z"), doctest::Contains("undeclared variable 'z'"), InputError);
  CHECK_THROWS_WITH_AS(P(r, "x +"), doctest::Contains("column"), InputError);
  CHECK_THROWS_AS(P(r, "x ^"), InputError);
  CHECK_THROWS_AS(P(r, "2/0"), InputError);
  CHECK_FALSE(P(r, "x^2 + y").is_homogeneous());

  // Round trip on random polynomials.
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    Polynomial f = random_homogeneous(r, 2 * rng.range(0, 5), rng, 4);
    CHECK(Polynomial::parse(r, f.to_string()) == f);
  }
}

TEST_CASE("normal_form examples") {
  auto r = fixtures::qxy();
  CHECK(normal_form(P(r, "x*y"), I(r, {"x"})).is_zero());
  CHECK(normal_form(P(r, "1"), I(r, {"x"})) == P(r, "1"));
  CHECK(normal_form(P(r, "x^2"), I(r, {"x - y", "y^2"})).is_zero());
  CHECK(oracle::in_ideal({P(r, "x - y"), P(r, "y^2")}, P(r, "x^2")));
  CHECK_THROWS_AS(normal_form(P(fixtures::qxyz(), "z"), I(r, {"x"})), InputError);
}

TEST_CASE("groebner_basis examples") {
  auto r = fixtures::qxy();
  auto gb = groebner_basis(I(r, {"x", "y"}));
  REQUIRE(gb.size() == 2);
  CHECK(((gb[0] == P(r, "y") && gb[1] == P(r, "x"))));
  auto gb2 = groebner_basis(I(r, {"x - y", "y^2"}));
  REQUIRE(gb2.size() == 2);
  CHECK(gb2[0] == P(r, "x - y"));
  CHECK(gb2[1] == P(r, "y^2"));
  // The S-polynomial of the pair lies in the ideal; confirm with the oracle
  // through degree 6.
  for (int d = 2; d <= 6; d += 2)
    for (const auto& t : r->monomials_of_degree(d)) {
      Polynomial f = Polynomial::term(r, t, Scalar(1));
      CHECK(normal_form(f, I(r, {"x - y", "y^2"})).is_zero() ==
            oracle::in_ideal({P(r, "x - y"), P(r, "y^2")}, f));
    }
  CHECK(groebner_basis(HomIdeal::zero(r)).empty());
  CHECK(HomIdeal(r, {P(r, "3")}).is_unit());
}

TEST_CASE("ideal_contains examples") {
  auto r = fixtures::qxy();
  CHECK(ideal_contains(I(r, {"x", "y"}), I(r, {"x"})));
  CHECK_FALSE(ideal_contains(I(r, {"x"}), I(r, {"x", "y"})));
  CHECK(ideal_contains(I(r, {"x - y"}), I(r, {"x^2 - y^2"})));
  CHECK(P(r, "x^2 - y^2") == P(r, "x + y") * P(r, "x - y"));
}

TEST_CASE("ideal_quotient examples") {
  auto r = fixtures::qxy();
  CHECK(ideal_quotient(I(r, {"x"}), P(r, "x")).is_unit());
  CHECK(groebner_basis(ideal_quotient(HomIdeal::zero(r), P(r, "x"))).empty());
  CHECK(same_ideal(ideal_quotient(I(r, {"x*y"}), P(r, "x")), I(r, {"y"})));
  // Degree-bounded brute force: g x in (xy) for g in degree <= 6 iff g in (y).
  for (int d = 0; d <= 6; d += 2)
    for (const auto& t : r->monomials_of_degree(d)) {
      Polynomial g = Polynomial::term(r, t, Scalar(1));
      CHECK(oracle::in_ideal({P(r, "x*y")}, g * P(r, "x")) ==
            normal_form(g, ideal_quotient(I(r, {"x*y"}), P(r, "x"))).is_zero());
    }
  CHECK_THROWS_AS(ideal_quotient(I(r, {"x"}), P(r, "0")), InputError);
}

TEST_CASE("module_syzygies examples") {
  auto r = fixtures::qxy();
  SyzygyResult s = module_syzygies(M(r, {{"x", "y"}}), {{0}}, {{2, 2}});
  REQUIRE(s.matrix.cols() == 1);
  CHECK(s.degrees.degrees == std::vector<int>{4});
  // (y, -x) up to a scalar.
  Scalar c = s.matrix(0, 0).leading_term().coefficient;
  CHECK(s.matrix(0, 0) == P(r, "y").scaled(c));
  CHECK(s.matrix(1, 0) == P(r, "-x").scaled(c));
  for (int d = 0; d <= 6; d += 2)
    CHECK(oracle::kernel_dimension(M(r, {{"x", "y"}}), {{0}}, {{2, 2}}, d) ==
          oracle::submodule_dimension(r, {{2, 2}}, {s.matrix.column(0)}, s.degrees.degrees, d));

  CHECK(module_syzygies(M(r, {{"1"}}), {{0}}, {{0}}).matrix.cols() == 0);
  SyzygyResult z = module_syzygies(M(r, {{"0"}}), {{0}}, {{0}});
  REQUIRE(z.matrix.cols() == 1);
  CHECK(z.matrix(0, 0).is_unit());

  CHECK_THROWS_AS(module_syzygies(M(r, {{"x", "y^2"}}), {{0}}, {{2, 2}}), InputError);
  CHECK_THROWS_AS(module_syzygies(M(r, {{"x + y^2"}}), {{0}}, {{2}}), InputError);
}

namespace {

std::vector<Polynomial> random_generators(const RingPtr& r, Rng& rng, int count, int max_deg) {
  auto degs = attainable_degrees(*r, max_deg);
  std::vector<Polynomial> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_homogeneous(r, rng.pick(degs), rng, 3));
  return gens;
}

}  // namespace

TEST_CASE("normal_form is idempotent and agrees with the membership oracle") {
  Rng rng(2024);
  std::vector<RingPtr> rings = {fixtures::qxy(), fixtures::qxyz(), fixtures::f5xyz()};
  int agree = 0;
  for (int inst = 0; inst < 100; ++inst) {
    RingPtr r = rings[inst % rings.size()];
    HomIdeal ideal(r, random_generators(r, rng, rng.range(1, 3), 6));
    auto degs = attainable_degrees(*r, 12);
    // Bias half the samples into the ideal so both answers are exercised.
    Polynomial f = random_homogeneous(r, rng.pick(degs), rng, 4);
    if (rng.chance(50) && !ideal.generators().empty()) {
      const Polynomial& g = rng.pick(ideal.generators());
      int dg = *g.degree();
      auto cof = attainable_degrees(*r, 12 - dg);
      cof.insert(cof.begin(), 0);
      int d = rng.pick(cof);
      Polynomial h = d == 0 ? Polynomial::constant(r, Scalar(rng.range(1, 4))) : random_homogeneous(r, d, rng, 3);
      f = h * g;
      if (f.is_zero()) continue;
    }
    Polynomial nf = normal_form(f, ideal);
    CHECK(normal_form(nf, ideal) == nf);
    CHECK(nf.is_zero() == oracle::in_ideal(ideal.generators(), f));
    ++agree;
  }
  CHECK(agree >= 90);
}

TEST_CASE("emitted bases satisfy Buchberger's criterion") {
  Rng rng(7);
  for (int inst = 0; inst < 30; ++inst) {
    RingPtr r = inst % 2 ? fixtures::f5xyz() : fixtures::qxy();
    HomIdeal ideal(r, random_generators(r, rng, rng.range(2, 4), 8));
    const auto& gb = groebner_basis(ideal);
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        const Term& a = gb[i].leading_term();
        const Term& b = gb[j].leading_term();
        Monomial l = lcm(a.monomial, b.monomial, r->weights());
        Polynomial s = gb[i].times_monomial(quotient(l, a.monomial), Scalar(1)) -
                       gb[j].times_monomial(quotient(l, b.monomial), Scalar(1));
        CHECK(normal_form(s, ideal).is_zero());
      }
    // Reduced: monic, and no term divisible by another leading term.
    for (std::size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].leading_term().coefficient == 1);
      for (std::size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : gb[i].terms()) CHECK_FALSE(divides(gb[j].leading_term().monomial, t.monomial));
      }
    }
    // Generators reduce to zero; basis elements lie in the ideal.
    for (const auto& g : ideal.generators()) CHECK(normal_form(g, ideal).is_zero());
    for (const auto& g : gb) CHECK(oracle::in_ideal(ideal.generators(), g));
  }
}

TEST_CASE("syzygies annihilate and generate the kernel") {
  Rng rng(99);
  for (int inst = 0; inst < 40; ++inst) {
    RingPtr r = inst % 3 == 2 ? fixtures::f5xyz() : fixtures::qxy();
    std::size_t rows = static_cast<std::size_t>(rng.range(1, 2));
    std::size_t cols = static_cast<std::size_t>(rng.range(1, 3));
    FreeModuleSpec rd, cd;
    for (std::size_t i = 0; i < rows; ++i) rd.degrees.push_back(2 * rng.range(0, 1));
    for (std::size_t j = 0; j < cols; ++j) cd.degrees.push_back(2 * rng.range(1, 3));
    PolyMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        int d = cd.degrees[j] - rd.degrees[i];
        if (d < 0 || rng.chance(20)) continue;
        m(i, j) = d == 0 ? Polynomial::constant(r, Scalar(rng.range(1, 3)))
                         : random_homogeneous(r, d, rng, 2);
      }
    SyzygyResult s = module_syzygies(m, rd, cd);
    CHECK((m * s.matrix).is_zero());
    std::vector<std::vector<Polynomial>> gens;
    for (std::size_t k = 0; k < s.matrix.cols(); ++k) gens.push_back(s.matrix.column(k));
    for (int d = 0; d <= 10; d += 2)
      CHECK(oracle::kernel_dimension(m, rd, cd, d) ==
            oracle::submodule_dimension(r, cd, gens, s.degrees.degrees, d));
  }
}

TEST_CASE("ideal_quotient is sound and complete on small instances") {
  Rng rng(5);
  for (int inst = 0; inst < 25; ++inst) {
    RingPtr r = inst % 2 ? fixtures::qxyz() : fixtures::qxy();
    HomIdeal ideal(r, random_generators(r, rng, rng.range(1, 3), 6));
    Polynomial f = random_homogeneous(r, rng.pick(attainable_degrees(*r, 4)), rng, 2);
    HomIdeal q = ideal_quotient(ideal, f);
    for (const auto& g : q.generators()) CHECK(normal_form(g * f, ideal).is_zero());
    for (int d = 0; d <= 6; d += 2)
      for (const auto& t : r->monomials_of_degree(d)) {
        Polynomial g = Polynomial::term(r, t, Scalar(1)) + (d > 0 ? random_homogeneous(r, d, rng, 2) : Polynomial(r));
        if (g.is_zero()) continue;
        CHECK(oracle::in_ideal(ideal.generators(), g * f) == normal_form(g, q).is_zero());
      }
  }
}

TEST_CASE("ideal_intersection") {
  auto r = fixtures::qxy();
  CHECK(same_ideal(ideal_intersection(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
  CHECK(same_ideal(ideal_intersection(I(r, {"x", "y"}), I(r, {"x"})), I(r, {"x"})));
  CHECK(ideal_intersection(I(r, {"x"}), HomIdeal::zero(r)).is_zero());
}

TEST_CASE("module Groebner basis with trace block records representations") {
  auto r = fixtures::qxy();
  ModuleOrder order(r, {0, 2, 2}, 1);
  std::vector<ModuleVector> gens = {
      to_module_vector(order, {P(r, "x"), P(r, "1"), P(r, "0")}),
      to_module_vector(order, {P(r, "y"), P(r, "0"), P(r, "1")}),
  };
  GroebnerResult gb = groebner(order, gens);
  REQUIRE(gb.syzygies.size() == 1);
  auto coords = to_coordinates(r, gb.syzygies[0], 1, 2);
  CHECK((P(r, "x") * coords[0] + P(r, "y") * coords[1]).is_zero());
}
