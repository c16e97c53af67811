#include "solidus/rational.hpp"

#include <ostream>

#include "solidus/error.hpp"

namespace solidus {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotAboveUnity: return "NotAboveUnity";
    case ErrorCode::NotZeroless: return "NotZeroless";
    case ErrorCode::NotLimited: return "NotLimited";
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotStrictlyOrdered: return "NotStrictlyOrdered";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownFormula: return "UnknownFormula";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::EvalError: return "EvalError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') return false;
  }
  return out.set_str(std::string(text), 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  mpz_class num;
  mpz_class den = 1;
  const auto slash = text.find('/');
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den) && den > 0;
  if (!ok) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational");
  return Rational(q_.get_den(), q_.get_num());
}

std::string Rational::str() const { return q_.get_str(10); }

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace solidus
