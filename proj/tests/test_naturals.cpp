#include "doctest.h"
#include "oracles.hpp"
#include "solidus/error.hpp"
#include "solidus/naturals.hpp"

using namespace solidus;

namespace {

const PreciseNum r = PreciseNum::rho();
axioms::Generator make_gen(std::uint64_t stream) { return axioms::Generator(axioms::GeneratorConfig{}, stream); }

}  // namespace

TEST_CASE("is_natural examples") {
  CHECK(is_natural(PreciseNum(0)));
  CHECK(is_natural(r * r + PreciseNum(3) * r + PreciseNum(1)));
  CHECK_FALSE(is_natural(PreciseNum::rho_power(Rational(1, 2))));
  CHECK_FALSE(is_natural(r + PreciseNum(Rational(1, 2))));
  CHECK_FALSE(is_natural(PreciseNum(-1)));
  CHECK(is_natural(r - PreciseNum(5)));
  CHECK_FALSE(is_natural(PreciseNum(5) - r));
  CHECK_FALSE(is_natural(r.inverse()));
  CHECK(is_natural((r * r - PreciseNum(1)) / (r + PreciseNum(1))));
  CHECK_THROWS_AS(NaturalWitness(RhoPoly(-2)), Error);
}

TEST_CASE("archimedean_witness examples") {
  CHECK(archimedean_witness(1, ExternalNum::rho()).value() == RhoPoly::monomial(1, 2));
  CHECK(archimedean_witness(1, 2).value() == RhoPoly(3));
  const ExternalNum x(r.inverse());
  const ExternalNum y = ExternalNum(1) + ExternalNum(Neutrix::oslash());
  const NaturalWitness z = archimedean_witness(x, y);
  CHECK(z.value() == RhoPoly::monomial(1, 2));
  CHECK(ext_less(y, ExternalNum(z.precise()) * x));
  CHECK_THROWS_AS(archimedean_witness(2, 1), Error);
  CHECK_THROWS_AS(archimedean_witness(0, 1), Error);
}

TEST_CASE("induction examples") {
  CHECK(induction_spotcheck("add_zero", 50).status == InductionStatus::Pass);
  CHECK(induction_spotcheck("mul_succ", 50).status == InductionStatus::Pass);
  CHECK(induction_spotcheck("predecessor", 50).status == InductionStatus::Pass);
  const InductionReport eo = induction_spotcheck("even_or_odd", 50);
  CHECK(eo.status == InductionStatus::ExpectedFail);
  CHECK(eo.base);
  CHECK(eo.conclusion_standard);
  CHECK_FALSE(eo.conclusion_nonstandard);
  CHECK_THROWS_AS(induction_spotcheck("no_such_formula", 5), Error);
}

TEST_CASE("every catalog formula behaves as documented") {
  for (const auto& f : induction_catalog()) {
    INFO(f.id);
    const InductionReport rep = induction_spotcheck(f.id, 30);
    CHECK(rep.status == (f.expected_to_hold ? InductionStatus::Pass : InductionStatus::ExpectedFail));
    CHECK(rep.samples > 0);
    if (!f.expected_to_hold) CHECK_FALSE(f.note.empty());
  }
}

TEST_CASE("naturals are closed under sum and product") {
  auto g = make_gen(501);
  for (int i = 0; i < 500; ++i) {
    const PreciseNum x = g.gen_natural();
    const PreciseNum y = g.gen_natural();
    CHECK(is_natural(x));
    CHECK(is_natural(x + y));
    CHECK(is_natural(x * y));
    CHECK(is_natural(x + PreciseNum(1)));
    CHECK(oracle::sign(x) >= 0);
  }
}

TEST_CASE("no natural lies strictly between x and x + 1") {
  auto g = make_gen(502);
  for (int i = 0; i < 500; ++i) {
    const PreciseNum x = g.gen_natural();
    // y = x + t for 0 < t < 1, drawn from standard fractions and infinitesimals.
    const PreciseNum t = i % 2 == 0 ? PreciseNum(Rational(g.uniform(1, 8), 9))
                                    : PreciseNum(RhoPoly::monomial(g.coefficient().abs() + Rational(1), g.exponent(-3, Rational(-1, 3))));
    const PreciseNum y = x + t;
    REQUIRE(oracle::sign(y - x) > 0);
    REQUIRE(oracle::sign(x + PreciseNum(1) - y) > 0);
    CHECK_FALSE(is_natural(y));
  }
}

TEST_CASE("archimedean witnesses are natural and sufficient") {
  auto g = make_gen(503);
  int checked = 0;
  while (checked < 500) {
    const ExternalNum x = g.gen_external();
    const ExternalNum y = g.gen_external();
    if (!(ext_less(0, x) && ext_less(x, y)) || y.nx().is_max()) continue;
    ++checked;
    const NaturalWitness z = archimedean_witness(x, y);
    CHECK(is_natural(z.precise()));
    CHECK(ext_less(y, ExternalNum(z.precise()) * x));
  }
}
