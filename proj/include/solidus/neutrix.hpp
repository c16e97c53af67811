#pragma once

#include <string>
#include <utility>

#include "solidus/precise.hpp"

namespace solidus {

/// A magnitude: one of {0}, rho^q * o, rho^q * L, or the whole field M.
///
///   rho^q * o = { x precise : degree(x) <  q }
///   rho^q * L = { x precise : degree(x) <= q }
///
/// o (q = 0) is the set of infinitesimals and L (q = 0) the limited numbers.
class Neutrix {
 public:
  enum class Kind { Zero, Oslash, Pound, Max };

  Neutrix() = default;

  static Neutrix zero() { return Neutrix(Kind::Zero, 0); }
  static Neutrix max() { return Neutrix(Kind::Max, 0); }
  static Neutrix oslash(const Rational& q = 0) { return Neutrix(Kind::Oslash, q); }
  static Neutrix pound(const Rational& q = 0) { return Neutrix(Kind::Pound, q); }

  Kind kind() const { return kind_; }
  /// Scale exponent; meaningful only for Oslash and Pound.
  const Rational& exponent() const { return q_; }

  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_max() const { return kind_ == Kind::Max; }
  bool is_scaled() const { return kind_ == Kind::Oslash || kind_ == Kind::Pound; }

  friend bool operator==(const Neutrix& a, const Neutrix& b) {
    return a.kind_ == b.kind_ && (!a.is_scaled() || a.q_ == b.q_);
  }

  /// `0`, `o`, `L`, `M`, `rho^(q)*o`, `rho^(q)*L`.
  std::string str() const;

 private:
  Neutrix(Kind k, Rational q) : kind_(k), q_(std::move(q)) {}

  Kind kind_ = Kind::Zero;
  Rational q_;
};

Cmp nx_compare(const Neutrix& a, const Neutrix& b);
inline bool nx_less(const Neutrix& a, const Neutrix& b) { return nx_compare(a, b) == Cmp::LT; }
inline bool nx_leq(const Neutrix& a, const Neutrix& b) { return nx_compare(a, b) != Cmp::GT; }

/// Magnitude of a sum: the larger of the two.
Neutrix nx_add(const Neutrix& a, const Neutrix& b);
Neutrix nx_mul(const Neutrix& a, const Neutrix& b);
/// p * A. Only degree(p) matters. Throws ZeroScalar for p = 0.
Neutrix nx_scale(const PreciseNum& p, const Neutrix& a);
/// nx_scale with the convention 0 * A = 0.
Neutrix nx_scale_or_zero(const PreciseNum& p, const Neutrix& a);
bool nx_contains(const Neutrix& a, const PreciseNum& p);

bool is_idempotent(const Neutrix& a);
/// Maximal ideal of an idempotent J > 1: L -> o, M -> 0.
Neutrix maximal_ideal(const Neutrix& j);
/// A = p * I with I idempotent; p = rho^q for scaled neutrices, 1 otherwise.
std::pair<PreciseNum, Neutrix> decompose(const Neutrix& a);
/// Whether e is an ideal of the idempotent J > 1.
bool is_ideal_of(const Neutrix& e, const Neutrix& j);

}  // namespace solidus
