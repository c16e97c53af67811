#include "doctest.h"
#include "oracles.hpp"
#include "solidus/error.hpp"
#include "solidus/precise.hpp"

using namespace solidus;

namespace {

const RhoPoly rho = RhoPoly::rho();
RhoPoly mono(const Rational& c, const Rational& e) { return RhoPoly::monomial(c, e); }

axioms::Generator make_gen(std::uint64_t stream) { return axioms::Generator(axioms::GeneratorConfig{}, stream); }

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational(7, -2).str() == "-7/2");
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("poly_arith examples") {
  CHECK(poly_arith(rho + 1, rho - 1, PolyOp::Add) == mono(2, 1));
  CHECK(poly_arith(mono(1, Rational(1, 2)), mono(1, Rational(1, 2)), PolyOp::Mul) == rho);
  const RhoPoly prod = poly_arith(rho + 1, rho - 1, PolyOp::Mul);
  CHECK(prod == mono(1, 2) - 1);
  CHECK(prod.size() == 2);
}

TEST_CASE("precise_arith examples") {
  const PreciseNum r = PreciseNum::rho();
  const PreciseNum one_over = PreciseNum(1) / (r + PreciseNum(1));
  CHECK(precise_arith(one_over, r + PreciseNum(1), FieldOp::Mul) == PreciseNum(1));
  CHECK(precise_arith(r.inverse(), r.inverse(), FieldOp::Add) == PreciseNum(mono(2, -1)));
  const PreciseNum ratio(mono(1, 2) - 1, rho - 1);
  CHECK(ratio == r + PreciseNum(1));
  CHECK(oracle::same_value(ratio, r + PreciseNum(1)));
  CHECK_THROWS_AS(PreciseNum(1) / PreciseNum(0), Error);
}

TEST_CASE("degree examples") {
  CHECK(*degree(PreciseNum(mono(3, 2) + rho)) == Rational(2));
  CHECK_FALSE(degree(PreciseNum()).has_value());
  CHECK(*degree(PreciseNum(rho + 1, mono(1, 3))) == Rational(-2));
}

TEST_CASE("compare_precise examples") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 100);
  CHECK(compare_precise(PreciseNum::rho(), PreciseNum(Rational(big))) == Cmp::GT);
  const PreciseNum x(rho + 3, mono(2, 1) - 1);
  CHECK(compare_precise(x, x) == Cmp::EQ);
  CHECK(compare_precise(PreciseNum(mono(1, -1)), PreciseNum(mono(1, -2))) == Cmp::GT);
  // Oracle: (rho - 1)/rho^2 has a positive sign.
  CHECK(oracle::sign(PreciseNum(mono(1, -1)) - PreciseNum(mono(1, -2))) > 0);
}

TEST_CASE("series_expand examples") {
  const PreciseNum geometric = PreciseNum(1) / (PreciseNum(1) - PreciseNum(mono(1, -1)));
  CHECK(series_expand(geometric, 0, true).is_zero());
  CHECK(series_expand(geometric, 0, false) == RhoPoly(1));
  CHECK(series_expand(geometric, -3, false) == RhoPoly(1) + mono(1, -1) + mono(1, -2) + mono(1, -3));
  CHECK(series_expand(PreciseNum(mono(1, 2) + 1 + mono(1, -1)), 0, false) == mono(1, 2) + 1);
  CHECK(series_expand(PreciseNum(), 5, true).is_zero());
  CHECK(series_expand(PreciseNum(), -5, false).is_zero());
}

TEST_CASE("exact_quotient") {
  CHECK(*exact_quotient(mono(1, 2) - 1, rho - 1) == rho + 1);
  CHECK_FALSE(exact_quotient(RhoPoly(1), rho + 1).has_value());
}

TEST_CASE("rendering") {
  CHECK(PreciseNum(mono(1, 2) - mono(3, Rational(1, 2)) + RhoPoly(Rational(1, 2))).str() == "rho^2 - 3*rho^(1/2) + 1/2");
  CHECK(PreciseNum(mono(-1, -1)).str() == "-rho^(-1)");
  CHECK(PreciseNum(RhoPoly(1), rho + 1).str() == "(1)/(rho + 1)");
  CHECK(PreciseNum().str() == "0");
}

TEST_CASE("field laws agree with the substitution oracle") {
  auto g = make_gen(101);
  for (int i = 0; i < 300; ++i) {
    const PreciseNum a = g.gen_precise();
    const PreciseNum b = g.gen_precise();
    const PreciseNum c = g.gen_precise();
    CHECK(oracle::same_value(a + b, b + a));
    CHECK(oracle::same_value(a * (b + c), a * b + a * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(oracle::same_value(a - b, a + (-b)));
    if (!b.is_zero()) {
      CHECK(oracle::same_value((a / b) * b, a));
      CHECK((a / b) * b == a);
    }
    // Products evaluate like products.
    const mpz_class d = lcm(oracle::exponent_lcm(a), oracle::exponent_lcm(b));
    for (const auto& t : oracle::safe_points({a, b, a * b})) {
      CHECK(oracle::eval(a * b, t, d) == oracle::eval(a, t, d) * oracle::eval(b, t, d));
    }
  }
}

TEST_CASE("order agrees with the sign oracle and is compatible") {
  auto g = make_gen(102);
  for (int i = 0; i < 300; ++i) {
    const PreciseNum a = g.gen_precise();
    const PreciseNum b = g.gen_precise();
    const PreciseNum c = g.gen_precise();
    const int expected = oracle::sign(a - b);
    const Cmp got = compare_precise(a, b);
    CHECK((got == Cmp::LT ? -1 : (got == Cmp::GT ? 1 : 0)) == expected);
    CHECK(compare_precise(b, a) == flip(got));
    if (a < b) {
      CHECK(a + c < b + c);
      if (PreciseNum() < c) CHECK(a * c < b * c);
    }
    if (a <= b && b <= c) CHECK(a <= c);
    if (a <= b && b <= a) CHECK(a == b);
  }
}

TEST_CASE("degree is a valuation") {
  auto g = make_gen(103);
  for (int i = 0; i < 300; ++i) {
    const PreciseNum a = g.gen_nonzero_precise();
    const PreciseNum b = g.gen_nonzero_precise();
    CHECK(*degree(a * b) == *degree(a) + *degree(b));
    const auto sum = degree(a + b);
    const Rational top = std::max(*degree(a), *degree(b));
    if (sum) CHECK(*sum <= top);
    if (*degree(a) != *degree(b)) CHECK(*sum == top);
  }
}

TEST_CASE("series_expand leaves a remainder below the threshold") {
  auto g = make_gen(104);
  for (int i = 0; i < 300; ++i) {
    const PreciseNum x = g.gen_precise();
    const Rational q = g.exponent(-2, 2);
    for (const bool strict : {true, false}) {
      const RhoPoly p = series_expand(x, q, strict);
      for (const auto& [e, c] : p.terms()) CHECK((strict ? e > q : e >= q));
      const auto rest = degree(x - PreciseNum(p));
      if (rest) CHECK((strict ? *rest <= q : *rest < q));
    }
  }
}
