#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "solidus/rho_poly.hpp"

namespace solidus {

enum class Cmp { LT, EQ, GT };

std::string_view to_string(Cmp c);

inline Cmp flip(Cmp c) { return c == Cmp::LT ? Cmp::GT : (c == Cmp::GT ? Cmp::LT : Cmp::EQ); }

/// Element of the precise field: a ratio of two rho-polynomials.
///
/// Stored with a denominator whose leading coefficient is 1 at exponent 0;
/// when the denominator divides the numerator (in particular when it is a
/// monomial) the value is stored as a plain polynomial. Equality is decided by
/// cross-multiplication, so the stored form is not required to be unique.
class PreciseNum {
 public:
  PreciseNum() : den_(1) {}
  PreciseNum(RhoPoly poly) : num_(std::move(poly)), den_(1) {}  // NOLINT
  PreciseNum(const Rational& r) : num_(r), den_(1) {}          // NOLINT
  PreciseNum(long v) : PreciseNum(Rational(v)) {}              // NOLINT
  PreciseNum(int v) : PreciseNum(Rational(v)) {}               // NOLINT
  /// Throws Error(DivisionByZero) when `den` is zero.
  PreciseNum(RhoPoly num, RhoPoly den);

  static PreciseNum rho() { return RhoPoly::rho(); }
  static PreciseNum rho_power(const Rational& q) { return RhoPoly::monomial(1, q); }

  const RhoPoly& num() const { return num_; }
  const RhoPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the stored denominator is 1.
  bool is_polynomial() const { return den_ == RhoPoly(1); }
  int sign() const { return num_.sign(); }
  PreciseNum abs() const { return sign() < 0 ? -*this : *this; }
  PreciseNum inverse() const;

  PreciseNum operator-() const;
  friend PreciseNum operator+(const PreciseNum& a, const PreciseNum& b);
  friend PreciseNum operator-(const PreciseNum& a, const PreciseNum& b);
  friend PreciseNum operator*(const PreciseNum& a, const PreciseNum& b);
  friend PreciseNum operator/(const PreciseNum& a, const PreciseNum& b);

  friend bool operator==(const PreciseNum& a, const PreciseNum& b);
  friend bool operator<(const PreciseNum& a, const PreciseNum& b);
  friend bool operator>(const PreciseNum& a, const PreciseNum& b) { return b < a; }
  friend bool operator<=(const PreciseNum& a, const PreciseNum& b) { return !(b < a); }
  friend bool operator>=(const PreciseNum& a, const PreciseNum& b) { return !(a < b); }

  /// `<num>` when the denominator is 1, `(<num>)/(<den>)` otherwise.
  std::string str() const;

 private:
  void normalize();

  RhoPoly num_;
  RhoPoly den_;
};

enum class PolyOp { Add, Sub, Mul };
enum class FieldOp { Add, Sub, Mul, Div };

RhoPoly poly_arith(const RhoPoly& a, const RhoPoly& b, PolyOp op);
PreciseNum precise_arith(const PreciseNum& a, const PreciseNum& b, FieldOp op);

/// degree(num) - degree(den); nullopt stands for -infinity (the zero value).
std::optional<Rational> degree(const PreciseNum& x);

/// Sign of a - b from leading terms.
Cmp compare_precise(const PreciseNum& a, const PreciseNum& b);

/// Quotient num/den when it is a finite rho-polynomial, nullopt otherwise.
std::optional<RhoPoly> exact_quotient(const RhoPoly& num, const RhoPoly& den);

/// Leading part of the descending expansion of x: the polynomial p whose
/// terms all have exponent > cutoff (strict) or >= cutoff (non-strict) and
/// such that degree(x - p) lies below that threshold.
RhoPoly series_expand(const PreciseNum& x, const Rational& cutoff, bool strict);

}  // namespace solidus
