#pragma once

#include <span>
#include <string>
#include <string_view>

#include "solidus/external.hpp"

namespace solidus {

/// A represented halfline of external numbers.
///
///   Lower/Closed(b)        x <= b          (-inf, b]
///   Lower/Open(b)          x <  b          (-inf, b)
///   Lower/StronglyOpen(t)  x + e(t) < t    (-inf, t[[
///   Upper/Closed(b)        b <= y          [b, +inf)
///   Upper/Open(b)          b <  y          (b, +inf)
///   Upper/StronglyOpen(t)  some precise s with s + e(t) = t has s <= y
///                                          ]]t, +inf)
///
/// Empty halflines (Lower/StronglyOpen(M), Upper/Open(M)) are rejected.
class Halfline {
 public:
  enum class Side { Lower, Upper };
  enum class Kind { Closed, Open, StronglyOpen };

  /// Throws DegenerateDomain when the halfline would be empty.
  Halfline(Side side, Kind kind, ExternalNum bound);

  static Halfline lower(Kind kind, ExternalNum bound) { return {Side::Lower, kind, std::move(bound)}; }
  static Halfline upper(Kind kind, ExternalNum bound) { return {Side::Upper, kind, std::move(bound)}; }

  Side side() const { return side_; }
  Kind kind() const { return kind_; }
  const ExternalNum& bound() const { return bound_; }

  /// True for the halflines equal to the whole domain: (-inf, M] and ]]M, +inf).
  bool is_full_domain() const;

  friend bool operator==(const Halfline&, const Halfline&) = default;

  std::string str() const;

 private:
  Side side_;
  Kind kind_;
  ExternalNum bound_;
};

std::string_view to_string(Halfline::Kind k);

bool hl_member(const Halfline& h, const ExternalNum& x);
/// Complementary halfline. Throws DegenerateDomain for the full domain.
Halfline hl_complement(const Halfline& h);
/// Weak least upper bound of a lower halfline. Throws PreconditionFailed for
/// upper halflines.
ExternalNum zup(const Halfline& h);
/// Weak greatest lower bound of an upper halfline.
ExternalNum winf(const Halfline& h);

/// zup of the lower halfline generated by a finite set: its maximum; the
/// halfline is closed. Throws EmptySet.
Halfline zup_finite(std::span<const ExternalNum> values);
/// winf of the upper halfline generated by a finite set: its minimum.
Halfline winf_finite(std::span<const ExternalNum> values);

/// Precise p with x < p < y. Throws NotStrictlyOrdered unless x < y.
PreciseNum separate_precise(const ExternalNum& x, const ExternalNum& y);
/// Precise p with x < p and p below every precise t with t + e(tau) = tau.
/// Throws PreconditionFailed unless x + e(tau) < tau.
PreciseNum separate_from_hole(const ExternalNum& x, const ExternalNum& tau);

}  // namespace solidus
