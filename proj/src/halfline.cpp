#include "solidus/halfline.hpp"

#include "solidus/error.hpp"

namespace solidus {

std::string_view to_string(Halfline::Kind k) {
  switch (k) {
    case Halfline::Kind::Closed: return "Closed";
    case Halfline::Kind::Open: return "Open";
    case Halfline::Kind::StronglyOpen: return "StronglyOpen";
  }
  return "?";
}

Halfline::Halfline(Side side, Kind kind, ExternalNum bound)
    : side_(side), kind_(kind), bound_(std::move(bound)) {
  if (bound_.nx().is_max()) {
    const bool empty = (side_ == Side::Lower && kind_ == Kind::StronglyOpen) ||
                       (side_ == Side::Upper && kind_ == Kind::Open);
    if (empty) throw Error(ErrorCode::DegenerateDomain, "halfline " + str() + " is empty");
  }
}

bool Halfline::is_full_domain() const {
  if (!bound_.nx().is_max()) return false;
  return (side_ == Side::Lower && kind_ == Kind::Closed) ||
         (side_ == Side::Upper && kind_ == Kind::StronglyOpen);
}

std::string Halfline::str() const {
  const std::string b = bound_.str();
  if (side_ == Side::Lower) {
    switch (kind_) {
      case Kind::Closed: return "(-inf, " + b + "]";
      case Kind::Open: return "(-inf, " + b + ")";
      case Kind::StronglyOpen: return "(-inf, " + b + "[[";
    }
  }
  switch (kind_) {
    case Kind::Closed: return "[" + b + ", +inf)";
    case Kind::Open: return "(" + b + ", +inf)";
    case Kind::StronglyOpen: return "]]" + b + ", +inf)";
  }
  return "?";
}

namespace {

// x lies below the whole hole tau: x + e(tau) < tau. By the precise-witness
// propositions this is equivalent to x < t for every precise t with
// t + e(tau) = tau.
bool below_hole(const ExternalNum& x, const ExternalNum& tau) {
  return ext_less(ext_add(x, magnitude(tau)), tau);
}

}  // namespace

bool hl_member(const Halfline& h, const ExternalNum& x) {
  const ExternalNum& b = h.bound();
  if (h.side() == Halfline::Side::Lower) {
    switch (h.kind()) {
      case Halfline::Kind::Closed: return ext_leq(x, b);
      case Halfline::Kind::Open: return ext_less(x, b);
      case Halfline::Kind::StronglyOpen: return below_hole(x, b);
    }
  }
  switch (h.kind()) {
    case Halfline::Kind::Closed: return ext_leq(b, x);
    case Halfline::Kind::Open: return ext_less(b, x);
    case Halfline::Kind::StronglyOpen: return !below_hole(x, b);
  }
  return false;
}

Halfline hl_complement(const Halfline& h) {
  if (h.is_full_domain()) {
    throw Error(ErrorCode::DegenerateDomain, "the complement of " + h.str() + " is empty");
  }
  const auto other = h.side() == Halfline::Side::Lower ? Halfline::Side::Upper : Halfline::Side::Lower;
  switch (h.kind()) {
    case Halfline::Kind::Closed: return {other, Halfline::Kind::Open, h.bound()};
    case Halfline::Kind::Open: return {other, Halfline::Kind::Closed, h.bound()};
    case Halfline::Kind::StronglyOpen: return {other, Halfline::Kind::StronglyOpen, h.bound()};
  }
  return h;
}

ExternalNum zup(const Halfline& h) {
  if (h.side() != Halfline::Side::Lower) {
    throw Error(ErrorCode::PreconditionFailed, "zup needs a lower halfline");
  }
  return h.bound();
}

ExternalNum winf(const Halfline& h) {
  if (h.side() != Halfline::Side::Upper) {
    throw Error(ErrorCode::PreconditionFailed, "winf needs an upper halfline");
  }
  return h.bound();
}

namespace {

template <typename Better>
const ExternalNum& extreme(std::span<const ExternalNum> values, Better better) {
  if (values.empty()) throw Error(ErrorCode::EmptySet, "zup/winf of an empty set");
  const ExternalNum* best = &values.front();
  for (const auto& v : values.subspan(1)) {
    if (better(v, *best)) best = &v;
  }
  return *best;
}

}  // namespace

Halfline zup_finite(std::span<const ExternalNum> values) {
  const auto& m = extreme(values, [](const auto& a, const auto& b) { return ext_less(b, a); });
  return Halfline::lower(Halfline::Kind::Closed, m);
}

Halfline winf_finite(std::span<const ExternalNum> values) {
  const auto& m = extreme(values, [](const auto& a, const auto& b) { return ext_less(a, b); });
  return Halfline::upper(Halfline::Kind::Closed, m);
}

namespace {

// A positive power of rho lying in `outer` but not in `inner`, for neutrices
// inner < outer.
PreciseNum gap_witness(const Neutrix& inner, const Neutrix& outer) {
  using K = Neutrix::Kind;
  if (outer.is_max()) {
    return inner.is_zero() ? PreciseNum(1) : PreciseNum::rho_power(inner.exponent() + 1);
  }
  const Rational& r = outer.exponent();
  Rational e;
  if (inner.is_zero()) {
    e = outer.kind() == K::Pound ? r : r - 1;
  } else if (outer.kind() == K::Pound) {
    e = r;  // inner is rho^q*o with q <= r or rho^q*L with q < r
  } else if (inner.kind() == K::Oslash) {
    e = inner.exponent();
  } else {
    e = (inner.exponent() + r) / 2;
  }
  return PreciseNum::rho_power(e);
}

}  // namespace

PreciseNum separate_precise(const ExternalNum& x, const ExternalNum& y) {
  if (!ext_less(x, y)) {
    throw Error(ErrorCode::NotStrictlyOrdered, x.str() + " is not below " + y.str());
  }
  const PreciseNum delta = y.rep() - x.rep();
  if (!nx_contains(nx_add(x.nx(), y.nx()), delta)) {
    // Disjoint: half of an element outside a convex divisible group is still
    // outside it, so the midpoint clears both sets.
    return (x.rep() + y.rep()) / PreciseNum(2);
  }
  // Nested with x inside y: step up from x by an element of e(y) outside e(x).
  return x.rep() + gap_witness(x.nx(), y.nx());
}

PreciseNum separate_from_hole(const ExternalNum& x, const ExternalNum& tau) {
  if (!below_hole(x, tau)) {
    throw Error(ErrorCode::PreconditionFailed, x.str() + " is not below the hole " + tau.str());
  }
  auto valid = [&](const PreciseNum& p) { return ext_less(x, p) && below_hole(p, tau); };
  const PreciseNum half = tau.rep() / PreciseNum(2);
  if (valid(half)) return half;
  return (x.rep() + tau.rep()) / PreciseNum(2);
}

}  // namespace solidus
