#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "solidus/rational.hpp"

namespace solidus {

/// Finite formal sum  sum_i c_i * rho^{q_i}  with rational coefficients and
/// rational exponents, where rho is a positive infinitely large symbol.
///
/// Terms are kept in strictly decreasing exponent order and no stored
/// coefficient is zero; the zero polynomial has no terms.
class RhoPoly {
 public:
  using Terms = std::map<Rational, Rational, std::greater<>>;

  RhoPoly() = default;
  RhoPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  RhoPoly(long constant) : RhoPoly(Rational(constant)) {}  // NOLINT
  RhoPoly(int constant) : RhoPoly(Rational(constant)) {}   // NOLINT

  static RhoPoly monomial(const Rational& coefficient, const Rational& exponent);
  static RhoPoly rho() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest exponent; nullopt for the zero polynomial.
  std::optional<Rational> degree() const;
  /// Smallest exponent; nullopt for the zero polynomial.
  std::optional<Rational> low_degree() const;
  /// Coefficient of the largest exponent (0 for the zero polynomial).
  Rational leading_coefficient() const;
  /// Sign of the value: the sign of the leading coefficient.
  int sign() const;

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  Rational coefficient(const Rational& exponent) const;

  /// Keeps the terms with exponent > threshold (strict) or >= threshold.
  RhoPoly truncated(const Rational& threshold, bool strict) const;
  /// Multiplies by rho^shift.
  RhoPoly shifted(const Rational& shift) const;
  RhoPoly scaled(const Rational& factor) const;

  /// Least common multiple of the exponent denominators (1 for zero).
  mpz_class exponent_denominator_lcm() const;

  RhoPoly operator-() const;
  RhoPoly& operator+=(const RhoPoly& rhs);
  RhoPoly& operator-=(const RhoPoly& rhs);
  friend RhoPoly operator+(RhoPoly a, const RhoPoly& b) { return a += b; }
  friend RhoPoly operator-(RhoPoly a, const RhoPoly& b) { return a -= b; }
  friend RhoPoly operator*(const RhoPoly& a, const RhoPoly& b);

  friend bool operator==(const RhoPoly& a, const RhoPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: `rho^2 - 3*rho^(1/2) + 1/2`.
  std::string str() const;

 private:
  void add_term(const Rational& exponent, const Rational& coefficient);

  Terms terms_;
};

/// Renders rho^q the way polynomial terms print it: `rho`, `rho^2`,
/// `rho^(1/2)`, `rho^(-1)`.
std::string rho_power_text(const Rational& exponent);

}  // namespace solidus
