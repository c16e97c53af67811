#pragma once

// Independent oracles used by the unit and acceptance tests.

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "solidus/axioms/generator.hpp"

namespace oracle {

using solidus::ExternalNum;
using solidus::Neutrix;
using solidus::PreciseNum;
using solidus::Rational;
using solidus::RhoPoly;

inline mpz_class exponent_lcm(const RhoPoly& p) {
  mpz_class d = 1;
  for (const auto& [e, c] : p.terms()) d = lcm(d, mpz_class(e.denominator()));
  return d;
}

inline mpz_class exponent_lcm(const PreciseNum& p) { return lcm(exponent_lcm(p.num()), exponent_lcm(p.den())); }

/// p at rho = t^d, exactly. With d a multiple of every exponent denominator
/// this is a ring homomorphism into Q.
inline mpq_class eval_poly(const RhoPoly& p, const mpq_class& t, const mpz_class& d) {
  mpq_class total = 0;
  for (const auto& [e, c] : p.terms()) {
    const mpq_class scaled = mpq_class(e.numerator(), e.denominator()) * d;
    const mpz_class k = scaled.get_num();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), t.get_num_mpz_t(), mpz_class(abs(k)).get_ui());
    mpz_pow_ui(den.get_mpz_t(), t.get_den_mpz_t(), mpz_class(abs(k)).get_ui());
    mpq_class power = k >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    power.canonicalize();
    total += mpq_class(c.numerator(), c.denominator()) * power;
  }
  return total;
}

inline mpq_class eval(const PreciseNum& p, const mpq_class& t, const mpz_class& d) {
  return eval_poly(p.num(), t, d) / eval_poly(p.den(), t, d);
}

inline mpq_class eval(const PreciseNum& p, unsigned long t) { return eval(p, mpq_class(t), exponent_lcm(p)); }

/// Past the Cauchy bound 1 + max|c_i / c_lead| a polynomial in t has the sign
/// of its leading coefficient; multiplying by a power of t makes a Laurent
/// polynomial an ordinary one without changing the sign for t > 0.
inline mpq_class cauchy_point(const RhoPoly& p) {
  mpq_class bound = 1;
  if (p.is_zero()) return bound;
  const Rational lead = p.terms().begin()->second;
  const mpq_class l(lead.numerator(), lead.denominator());
  for (const auto& [e, c] : p.terms()) {
    mpq_class r = mpq_class(c.numerator(), c.denominator()) / l;
    r = abs(r);
    if (r > bound) bound = r;
  }
  return bound + 1;
}

/// Substitution points beyond every root of the given denominators.
inline std::vector<mpq_class> safe_points(std::initializer_list<PreciseNum> xs) {
  mpq_class base = 1;
  for (const auto& x : xs) base = std::max(base, cauchy_point(x.den()));
  return {base + 1, base + 2, base + 5};
}

/// Identity test at three substitution points.
inline bool same_value(const PreciseNum& a, const PreciseNum& b) {
  const mpz_class d = lcm(exponent_lcm(a), exponent_lcm(b));
  for (const auto& t : safe_points({a, b})) {
    if (eval(a, t, d) != eval(b, t, d)) return false;
  }
  return true;
}

/// Sign for rho "infinitely large", read off a numeric evaluation.
inline int sign(const PreciseNum& p) {
  const mpz_class d = exponent_lcm(p);
  mpq_class t = std::max(cauchy_point(p.num()), cauchy_point(p.den()));
  return sgn(eval_poly(p.num(), t, d)) * sgn(eval_poly(p.den(), t, d));
}

/// Membership in a neutrix straight from the set definitions, using the
/// leading exponent read off the terms.
inline bool in_neutrix(const Neutrix& n, const PreciseNum& p) {
  if (p.is_zero()) return true;
  switch (n.kind()) {
    case Neutrix::Kind::Zero: return false;
    case Neutrix::Kind::Max: return true;
    default: break;
  }
  const Rational deg = p.num().terms().begin()->first - p.den().terms().begin()->first;
  return n.kind() == Neutrix::Kind::Oslash ? deg < n.exponent() : deg <= n.exponent();
}

inline bool member(const PreciseNum& x, const ExternalNum& a) { return in_neutrix(a.nx(), x - a.rep()); }

/// Definition order on sampled representatives: every x in a has some y in b
/// with x <= y.
inline bool sampled_leq(const ExternalNum& a, const ExternalNum& b, solidus::axioms::Generator& g, std::size_t k = 20) {
  const auto xs = solidus::axioms::sample_members(a, k, g);
  const auto ys = solidus::axioms::sample_members(b, k, g);
  return std::all_of(xs.begin(), xs.end(), [&](const PreciseNum& x) {
    return std::any_of(ys.begin(), ys.end(), [&](const PreciseNum& y) { return sign(y - x) >= 0; });
  });
}

}  // namespace oracle
