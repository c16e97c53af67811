#include "solidus/precise.hpp"

#include "solidus/error.hpp"

namespace solidus {

std::string_view to_string(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

namespace {

// Long division of `num` by `den` producing descending exponents.
//
// Every exponent that can appear in the remainder lies in (1/D)Z, D being the
// lcm of the exponent denominators of num and den, so each step lowers the
// remainder's degree by at least 1/D. The loop therefore ends after at most
// (first_exponent - stop) * D + 1 steps; exceeding that bound is a bug.
struct Division {
  RhoPoly quotient;
  RhoPoly remainder;
};

template <typename StopBefore>
Division long_divide(const RhoPoly& num, const RhoPoly& den, const Rational& stop,
                     StopBefore stop_before) {
  Division d{RhoPoly{}, num};
  if (num.is_zero()) return d;
  const Rational lead_exp = *den.degree();
  const Rational lead_coef = den.leading_coefficient();
  const Rational first = *num.degree() - lead_exp;
  const mpz_class denom = lcm(num.exponent_denominator_lcm(), den.exponent_denominator_lcm());
  mpz_class budget = 2;
  if (first > stop) budget += ((first - stop) * Rational(denom)).ceil();

  while (!d.remainder.is_zero()) {
    const Rational e = *d.remainder.degree() - lead_exp;
    if (stop_before(e)) break;
    if (budget-- <= 0) {
      throw Error(ErrorCode::Internal, "long division exceeded its step bound");
    }
    const RhoPoly term = RhoPoly::monomial(d.remainder.leading_coefficient() / lead_coef, e);
    d.quotient += term;
    d.remainder -= term * den;
  }
  return d;
}

}  // namespace

std::optional<RhoPoly> exact_quotient(const RhoPoly& num, const RhoPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (num.is_zero()) return RhoPoly{};
  // A polynomial quotient's lowest exponent is low(num) - low(den).
  const Rational lowest = *num.low_degree() - *den.low_degree();
  Division d = long_divide(num, den, lowest, [&](const Rational& e) { return e < lowest; });
  if (!d.remainder.is_zero()) return std::nullopt;
  return std::move(d.quotient);
}

RhoPoly series_expand(const PreciseNum& x, const Rational& cutoff, bool strict) {
  if (x.is_polynomial()) return x.num().truncated(cutoff, strict);
  return long_divide(x.num(), x.den(), cutoff, [&](const Rational& e) {
           return strict ? e <= cutoff : e < cutoff;
         }).quotient;
}

PreciseNum::PreciseNum(RhoPoly num, RhoPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void PreciseNum::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (num_.is_zero()) {
    den_ = RhoPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    const Rational c = den_.leading_coefficient();
    const Rational e = *den_.degree();
    num_ = num_.scaled(c.inverse()).shifted(-e);
    den_ = RhoPoly(1);
    return;
  }
  if (auto q = exact_quotient(num_, den_)) {
    num_ = std::move(*q);
    den_ = RhoPoly(1);
    return;
  }
  // Make the denominator's leading term exactly 1.
  const Rational c = den_.leading_coefficient().inverse();
  const Rational e = -*den_.degree();
  num_ = num_.scaled(c).shifted(e);
  den_ = den_.scaled(c).shifted(e);
}

PreciseNum PreciseNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return PreciseNum(den_, num_);
}

PreciseNum PreciseNum::operator-() const {
  PreciseNum r = *this;
  r.num_ = -r.num_;
  return r;
}

PreciseNum operator+(const PreciseNum& a, const PreciseNum& b) {
  if (a.den_ == b.den_) return PreciseNum(a.num_ + b.num_, a.den_);
  return PreciseNum(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PreciseNum operator-(const PreciseNum& a, const PreciseNum& b) { return a + (-b); }

PreciseNum operator*(const PreciseNum& a, const PreciseNum& b) {
  if (a.is_polynomial() && b.is_polynomial()) return PreciseNum(a.num_ * b.num_);
  return PreciseNum(a.num_ * b.num_, a.den_ * b.den_);
}

PreciseNum operator/(const PreciseNum& a, const PreciseNum& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return PreciseNum(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const PreciseNum& a, const PreciseNum& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool operator<(const PreciseNum& a, const PreciseNum& b) {
  return compare_precise(a, b) == Cmp::LT;
}

std::string PreciseNum::str() const {
  if (is_polynomial()) return num_.str();
  // Print with the denominator's lowest exponent moved to 0.
  const Rational shift = -*den_.low_degree();
  return "(" + num_.shifted(shift).str() + ")/(" + den_.shifted(shift).str() + ")";
}

RhoPoly poly_arith(const RhoPoly& a, const RhoPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return {};
}

PreciseNum precise_arith(const PreciseNum& a, const PreciseNum& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  return {};
}

std::optional<Rational> degree(const PreciseNum& x) {
  if (x.is_zero()) return std::nullopt;
  return *x.num().degree() - *x.den().degree();
}

Cmp compare_precise(const PreciseNum& a, const PreciseNum& b) {
  // The stored denominator always has a positive leading coefficient, so the
  // sign of a - b is the sign of the leading coefficient of its numerator.
  const RhoPoly diff_num =
      a.den() == b.den() ? a.num() - b.num() : a.num() * b.den() - b.num() * a.den();
  const int s = diff_num.sign();
  return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ);
}

}  // namespace solidus
