#include "solidus/neutrix.hpp"

#include "solidus/error.hpp"

namespace solidus {

std::string Neutrix::str() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Max: return "M";
    case Kind::Oslash:
      return q_.is_zero() ? "o" : "rho^(" + q_.str() + ")*o";
    case Kind::Pound:
      return q_.is_zero() ? "L" : "rho^(" + q_.str() + ")*L";
  }
  return "?";
}

Cmp nx_compare(const Neutrix& a, const Neutrix& b) {
  // Scaled neutrices are ordered by (q, kind) with Oslash < Pound:
  // rho^q*o < rho^q*L < rho^q'*o whenever q < q'.
  auto rank = [](Neutrix::Kind k) {
    switch (k) {
      case Neutrix::Kind::Zero: return 0;
      case Neutrix::Kind::Oslash:
      case Neutrix::Kind::Pound: return 1;
      case Neutrix::Kind::Max: return 2;
    }
    return 0;
  };
  const int ra = rank(a.kind());
  const int rb = rank(b.kind());
  if (ra != rb) return ra < rb ? Cmp::LT : Cmp::GT;
  if (ra != 1) return Cmp::EQ;
  if (a.exponent() != b.exponent()) return a.exponent() < b.exponent() ? Cmp::LT : Cmp::GT;
  if (a.kind() == b.kind()) return Cmp::EQ;
  return a.kind() == Neutrix::Kind::Oslash ? Cmp::LT : Cmp::GT;
}

Neutrix nx_add(const Neutrix& a, const Neutrix& b) { return nx_less(a, b) ? b : a; }

Neutrix nx_mul(const Neutrix& a, const Neutrix& b) {
  using K = Neutrix::Kind;
  if (a.is_zero() || b.is_zero()) return Neutrix::zero();
  if (a.is_max() || b.is_max()) return Neutrix::max();
  const Rational q = a.exponent() + b.exponent();
  // o*o = o, L*L = L and o*L = o, each rescaled by the product of the scales.
  if (a.kind() == K::Pound && b.kind() == K::Pound) return Neutrix::pound(q);
  return Neutrix::oslash(q);
}

Neutrix nx_scale(const PreciseNum& p, const Neutrix& a) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroScalar, "scaling a neutrix by zero");
  const Rational d = *degree(p);
  switch (a.kind()) {
    case Neutrix::Kind::Oslash: return Neutrix::oslash(a.exponent() + d);
    case Neutrix::Kind::Pound: return Neutrix::pound(a.exponent() + d);
    default: return a;
  }
}

Neutrix nx_scale_or_zero(const PreciseNum& p, const Neutrix& a) {
  return p.is_zero() ? Neutrix::zero() : nx_scale(p, a);
}

bool nx_contains(const Neutrix& a, const PreciseNum& p) {
  switch (a.kind()) {
    case Neutrix::Kind::Zero: return p.is_zero();
    case Neutrix::Kind::Max: return true;
    case Neutrix::Kind::Oslash: return p.is_zero() || *degree(p) < a.exponent();
    case Neutrix::Kind::Pound: return p.is_zero() || *degree(p) <= a.exponent();
  }
  return false;
}

bool is_idempotent(const Neutrix& a) {
  return !a.is_scaled() || a.exponent().is_zero();
}

namespace {

void require_idempotent_above_unity(const Neutrix& j) {
  if (!is_idempotent(j)) {
    throw Error(ErrorCode::NotIdempotent, j.str() + " is not idempotent");
  }
  if (j.is_zero() || j.kind() == Neutrix::Kind::Oslash) {
    throw Error(ErrorCode::NotAboveUnity, j.str() + " is not above 1");
  }
}

}  // namespace

Neutrix maximal_ideal(const Neutrix& j) {
  require_idempotent_above_unity(j);
  return j.is_max() ? Neutrix::zero() : Neutrix::oslash();
}

std::pair<PreciseNum, Neutrix> decompose(const Neutrix& a) {
  switch (a.kind()) {
    case Neutrix::Kind::Oslash: return {PreciseNum::rho_power(a.exponent()), Neutrix::oslash()};
    case Neutrix::Kind::Pound: return {PreciseNum::rho_power(a.exponent()), Neutrix::pound()};
    default: return {PreciseNum(1), a};
  }
}

bool is_ideal_of(const Neutrix& e, const Neutrix& j) {
  require_idempotent_above_unity(j);
  if (j.is_max()) return e.is_zero() || e.is_max();
  // Every precise 0 <= p < L is limited (degree <= 0), so p*e <= e for every
  // e <= L: the ideals of L are exactly the magnitudes below it.
  return nx_leq(e, j);
}

}  // namespace solidus
