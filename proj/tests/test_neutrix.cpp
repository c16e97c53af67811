#include "doctest.h"
#include "oracles.hpp"
#include "solidus/error.hpp"
#include "solidus/neutrix.hpp"

using namespace solidus;

namespace {

const Neutrix zero = Neutrix::zero();
const Neutrix o = Neutrix::oslash();
const Neutrix L = Neutrix::pound();
const Neutrix M = Neutrix::max();

PreciseNum rho_pow(const Rational& q) { return PreciseNum::rho_power(q); }

axioms::Generator make_gen(std::uint64_t stream) { return axioms::Generator(axioms::GeneratorConfig{}, stream); }

// Probe elements straddling every threshold a generated neutrix can have.
std::vector<PreciseNum> probes(axioms::Generator& g) {
  std::vector<PreciseNum> out{PreciseNum(), PreciseNum(1), PreciseNum(-1000000)};
  for (int i = 0; i < 40; ++i) out.push_back(g.gen_nonzero_precise());
  for (int num = -24; num <= 24; ++num) out.push_back(rho_pow(Rational(num, 6)) * PreciseNum(1 + num % 3));
  return out;
}

// A <= B as sets, decided on probes.
bool sampled_subset(const Neutrix& a, const Neutrix& b, const std::vector<PreciseNum>& ps) {
  for (const auto& p : ps) {
    if (oracle::in_neutrix(a, p) && !oracle::in_neutrix(b, p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rendering") {
  CHECK(zero.str() == "0");
  CHECK(o.str() == "o");
  CHECK(L.str() == "L");
  CHECK(M.str() == "M");
  CHECK(Neutrix::pound(2).str() == "rho^(2)*L");
  CHECK(Neutrix::oslash(Rational(-1, 2)).str() == "rho^(-1/2)*o");
}

TEST_CASE("nx_compare examples") {
  CHECK(nx_compare(o, L) == Cmp::LT);
  CHECK(nx_compare(Neutrix::pound(-1), o) == Cmp::LT);
  CHECK(nx_compare(Neutrix::oslash(3), Neutrix::oslash(3)) == Cmp::EQ);
  CHECK(nx_compare(zero, o) == Cmp::LT);
  CHECK(nx_compare(M, L) == Cmp::GT);
}

TEST_CASE("nx_add examples") {
  CHECK(nx_add(o, L) == L);
  CHECK(nx_add(Neutrix::pound(2), zero) == Neutrix::pound(2));
  CHECK(nx_add(Neutrix::pound(2), Neutrix::oslash(3)) == Neutrix::oslash(3));
}

TEST_CASE("nx_mul examples") {
  CHECK(nx_mul(o, L) == o);
  CHECK(nx_mul(L, L) == L);
  CHECK(nx_mul(o, o) == o);
  CHECK(nx_mul(Neutrix::pound(2), Neutrix::oslash(-1)) == Neutrix::oslash(1));
  CHECK(nx_mul(zero, M) == zero);
  CHECK(nx_mul(L, M) == M);
}

TEST_CASE("nx_scale examples") {
  CHECK(nx_scale(rho_pow(3), L) == Neutrix::pound(3));
  CHECK(nx_scale(PreciseNum(5), o) == o);
  CHECK(nx_scale(PreciseNum(2) / PreciseNum::rho(), L) == Neutrix::pound(-1));
  CHECK_THROWS_AS(nx_scale(PreciseNum(), L), Error);
  CHECK(nx_scale_or_zero(PreciseNum(), L) == zero);
}

TEST_CASE("nx_contains examples") {
  CHECK(nx_contains(L, PreciseNum(1000000)));
  CHECK_FALSE(nx_contains(o, PreciseNum(1)));
  CHECK_FALSE(nx_contains(Neutrix::oslash(2), rho_pow(2)));
  CHECK(nx_contains(Neutrix::pound(2), rho_pow(2)));
}

TEST_CASE("idempotents, maximal ideals, decomposition") {
  CHECK(is_idempotent(L));
  CHECK_FALSE(is_idempotent(Neutrix::pound(1)));
  CHECK(is_idempotent(zero));
  CHECK(maximal_ideal(L) == o);
  CHECK(maximal_ideal(M) == zero);
  CHECK_THROWS_AS(maximal_ideal(Neutrix::pound(1)), Error);
  CHECK_THROWS_AS(maximal_ideal(o), Error);
  {
    const auto [p, i] = decompose(Neutrix::pound(3));
    CHECK(p == rho_pow(3));
    CHECK(i == L);
  }
  {
    const auto [p, i] = decompose(o);
    CHECK(p == PreciseNum(1));
    CHECK(i == o);
  }
  {
    const auto [p, i] = decompose(Neutrix::oslash(Rational(1, 2)));
    CHECK(p == rho_pow(Rational(1, 2)));
    CHECK(i == o);
    CHECK(nx_scale(p, i) == Neutrix::oslash(Rational(1, 2)));
  }
}

TEST_CASE("is_ideal_of") {
  CHECK(is_ideal_of(o, L));
  CHECK(is_ideal_of(zero, L));
  // Ideals of L are the magnitudes below it: every precise 0 <= p < L has
  // degree <= 0, so p * rho^(-1)*o <= rho^(-1)*o.
  CHECK(is_ideal_of(Neutrix::oslash(-1), L));
  CHECK_FALSE(is_ideal_of(Neutrix::pound(1), L));
  CHECK(is_ideal_of(zero, M));
  CHECK(is_ideal_of(M, M));
  CHECK_FALSE(is_ideal_of(L, M));

  // Oracle: the definition with sampled precise 0 <= p < J.
  auto g = make_gen(201);
  std::vector<PreciseNum> ps;
  for (int i = 0; i < 200; ++i) ps.push_back(g.gen_precise().abs());
  for (int i = 0; i < 200; ++i) {
    const Neutrix e = g.gen_neutrix();
    for (const Neutrix& j : {L, M}) {
      bool ideal = nx_leq(e, j);
      for (const auto& p : ps) {
        if (p.is_zero() || !(nx_contains(j, p) || j.is_max())) continue;
        if (j.is_max() || nx_contains(j, p)) {
          if (!nx_leq(nx_scale(p, e), e)) ideal = false;
        }
      }
      CHECK(is_ideal_of(e, j) == ideal);
    }
  }
}

TEST_CASE("order and sums agree with set inclusion") {
  auto g = make_gen(202);
  const auto ps = probes(g);
  for (int i = 0; i < 300; ++i) {
    const Neutrix a = g.gen_neutrix();
    const Neutrix b = g.gen_neutrix();
    CHECK(nx_leq(a, b) == sampled_subset(a, b, ps));
    const Neutrix s = nx_add(a, b);
    CHECK((s == a || s == b));
    CHECK(sampled_subset(a, s, ps));
    CHECK(sampled_subset(b, s, ps));
    for (const auto& p : ps) CHECK(nx_contains(a, p) == oracle::in_neutrix(a, p));
  }
}

TEST_CASE("products are closed under sampled representatives and linearize") {
  auto g = make_gen(203);
  for (int i = 0; i < 300; ++i) {
    const Neutrix a = g.gen_neutrix();
    const Neutrix b = g.gen_neutrix();
    const Neutrix ab = nx_mul(a, b);
    CHECK(ab == nx_mul(b, a));
    for (int k = 0; k < 10; ++k) {
      const PreciseNum x = g.element_of(a);
      const PreciseNum y = g.element_of(b);
      CHECK(oracle::in_neutrix(ab, x * y));
    }
    // pf-or-eq: ab = p*b or ab = p*a with p > 0.
    if (!a.is_zero() && !b.is_zero()) {
      const auto [p, i1] = decompose(a);
      const auto [q, i2] = decompose(b);
      CHECK(p.sign() > 0);
      CHECK(q.sign() > 0);
      CHECK((ab == nx_scale(p, b) || ab == nx_scale(q, a)));
    }
  }
}

TEST_CASE("product of idempotents follows the table") {
  const std::vector<Neutrix> ids{zero, o, L, M};
  for (const auto& a : ids) {
    for (const auto& b : ids) {
      const Neutrix e = nx_leq(a, b) ? a : b;
      const Neutrix f = nx_leq(a, b) ? b : a;
      const bool f_small = f.is_zero() || f == o;
      const Neutrix expected = f_small || nx_leq(e, maximal_ideal(f)) ? e : f;
      CHECK(nx_mul(a, b) == expected);
    }
  }
}

TEST_CASE("order consistency and decompose uniqueness") {
  auto g = make_gen(204);
  for (const Neutrix& j : {L, M}) {
    const Neutrix i = maximal_ideal(j);
    CHECK(nx_mul(i, j) == i);
    for (int k = 0; k < 200; ++k) {
      const PreciseNum p = g.gen_positive_precise();
      const PreciseNum q = g.gen_positive_precise();
      // p < I as external numbers means p is inside I's range below it: p in I.
      const bool p_below_i = !i.is_zero() && nx_contains(i, p);
      const bool q_above_i = !nx_contains(i, q);
      if (p_below_i && q_above_i) {
        CHECK(nx_less(nx_scale(p, j), nx_mul(i, j)));
        CHECK(nx_less(nx_mul(i, j), nx_scale(q, j)));
      }
    }
  }
  for (int k = 0; k < 200; ++k) {
    const Neutrix a = g.gen_neutrix();
    const auto [p, i] = decompose(a);
    CHECK(nx_scale(p, i) == a);
    CHECK(is_idempotent(i));
    const PreciseNum c = g.gen_nonzero_precise();
    // Any other scaling p' * I' = a with I' idempotent has I' = I.
    for (const Neutrix& other : {zero, o, L, M}) {
      if (!a.is_zero() && nx_scale(c, other) == a) CHECK(other == i);
    }
  }
}

TEST_CASE("neutrices are convex subgroups") {
  auto g = make_gen(205);
  for (int k = 0; k < 200; ++k) {
    const Neutrix a = g.gen_neutrix();
    const PreciseNum x = g.element_of(a);
    const PreciseNum y = g.element_of(a);
    CHECK(nx_contains(a, x + y));
    CHECK(nx_contains(a, -x));
    const PreciseNum b = x.abs();
    const PreciseNum t = g.gen_precise().abs();
    if (t <= b) CHECK(nx_contains(a, t));
  }
}
