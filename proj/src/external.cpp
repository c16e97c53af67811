#include "solidus/external.hpp"

#include "solidus/error.hpp"

namespace solidus {

ExternalNum::ExternalNum(const PreciseNum& rep, Neutrix nx) : nx_(std::move(nx)) {
  switch (nx_.kind()) {
    case Neutrix::Kind::Zero: rep_ = rep; break;
    case Neutrix::Kind::Max: rep_ = PreciseNum(); break;
    // rho^q*o does not contain rho^q, so a term at exponent q survives.
    case Neutrix::Kind::Oslash: rep_ = series_expand(rep, nx_.exponent(), false); break;
    case Neutrix::Kind::Pound: rep_ = series_expand(rep, nx_.exponent(), true); break;
  }
}

std::string ExternalNum::str() const {
  if (nx_.is_zero()) return rep_.str();
  if (rep_.is_zero()) return nx_.str();
  return rep_.str() + " + " + nx_.str();
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Precise: return "Precise";
    case Classification::PureNeutrix: return "PureNeutrix";
    case Classification::ZerolessNonPrecise: return "ZerolessNonPrecise";
  }
  return "?";
}

ExternalNum canonicalize(const PreciseNum& rep, const Neutrix& nx) { return ExternalNum(rep, nx); }

ExternalNum ext_add(const ExternalNum& a, const ExternalNum& b) {
  return ExternalNum(a.rep() + b.rep(), nx_add(a.nx(), b.nx()));
}

ExternalNum ext_neg(const ExternalNum& a) { return ExternalNum(-a.rep(), a.nx()); }

ExternalNum ext_sub(const ExternalNum& a, const ExternalNum& b) { return ext_add(a, ext_neg(b)); }

ExternalNum ext_mul(const ExternalNum& a, const ExternalNum& b) {
  // (a + A)(b + B) = ab + aB + bA + AB
  const Neutrix nx = nx_add(nx_add(nx_scale_or_zero(a.rep(), b.nx()), nx_scale_or_zero(b.rep(), a.nx())),
                            nx_mul(a.nx(), b.nx()));
  return ExternalNum(a.rep() * b.rep(), nx);
}

ExternalNum ext_inv(const ExternalNum& b) {
  if (!is_zeroless(b)) {
    throw Error(ErrorCode::NotZeroless, "cannot invert " + b.str() + ": it contains 0");
  }
  const PreciseNum inv = b.rep().inverse();
  if (b.is_precise()) return inv;
  return ExternalNum(inv, nx_scale(inv * inv, b.nx()));
}

ExternalNum ext_div(const ExternalNum& a, const ExternalNum& b) { return ext_mul(a, ext_inv(b)); }

ExternalNum ext_abs(const ExternalNum& a) { return a.rep().sign() < 0 ? ext_neg(a) : a; }

Cmp ext_compare(const ExternalNum& a, const ExternalNum& b) {
  const PreciseNum delta = a.rep() - b.rep();
  const Neutrix joint = nx_add(a.nx(), b.nx());
  if (nx_contains(joint, delta)) {
    // Overlapping sets are nested; the smaller neutrix lies below.
    return nx_compare(a.nx(), b.nx());
  }
  return delta.sign() < 0 ? Cmp::LT : Cmp::GT;
}

Neutrix neutrix_part(const ExternalNum& a) { return a.nx(); }

bool is_zeroless(const ExternalNum& a) { return !nx_contains(a.nx(), a.rep()); }

ExternalNum unity(const ExternalNum& a) {
  if (!is_zeroless(a)) {
    throw Error(ErrorCode::NotZeroless, "unity of " + a.str() + " is undefined: it contains 0");
  }
  if (a.is_precise()) return ExternalNum(1);
  return ExternalNum(PreciseNum(1), nx_scale(a.rep().inverse(), a.nx()));
}

Classification classify(const ExternalNum& a) {
  if (a.nx().is_zero()) return Classification::Precise;
  if (nx_contains(a.nx(), a.rep())) return Classification::PureNeutrix;
  return Classification::ZerolessNonPrecise;
}

bool ext_member(const PreciseNum& y, const ExternalNum& a) {
  return nx_contains(a.nx(), y - a.rep());
}

bool ext_subset(const ExternalNum& a, const ExternalNum& b) {
  return nx_leq(a.nx(), b.nx()) && ext_member(a.rep(), b);
}

bool is_limited(const ExternalNum& a) {
  if (!nx_leq(a.nx(), Neutrix::pound())) return false;
  const auto d = degree(a.rep());
  return !d || *d <= 0;
}

ExternalNum shadow(const ExternalNum& a) {
  if (!is_limited(a)) throw Error(ErrorCode::NotLimited, a.str() + " is not limited");
  return ExternalNum(a.rep(), nx_add(a.nx(), Neutrix::oslash()));
}

}  // namespace solidus
