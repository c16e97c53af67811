#pragma once

#include <string>
#include <string_view>

#include "solidus/neutrix.hpp"

namespace solidus {

/// External number a + A: a precise representative plus a neutrix.
///
/// Always held in canonical form, so two values are equal iff their parts are
/// equal:
///   - A = 0: a is any precise number;
///   - A = M: a = 0;
///   - otherwise a is a polynomial with no term absorbed by A (rho^q*o absorbs
///     exponents < q, rho^q*L absorbs exponents <= q).
class ExternalNum {
 public:
  ExternalNum() = default;
  ExternalNum(PreciseNum p) : rep_(std::move(p)) {}          // NOLINT
  ExternalNum(const Rational& r) : rep_(r) {}                 // NOLINT
  ExternalNum(long v) : rep_(v) {}                            // NOLINT
  ExternalNum(int v) : rep_(v) {}                             // NOLINT
  ExternalNum(Neutrix n) : ExternalNum(PreciseNum(), std::move(n)) {}  // NOLINT
  ExternalNum(const PreciseNum& rep, Neutrix nx);

  static ExternalNum rho() { return PreciseNum::rho(); }

  const PreciseNum& rep() const { return rep_; }
  const Neutrix& nx() const { return nx_; }
  bool is_precise() const { return nx_.is_zero(); }

  friend bool operator==(const ExternalNum& a, const ExternalNum& b) {
    return a.nx_ == b.nx_ && a.rep_ == b.rep_;
  }

  /// `<poly> + <neutrix>`; precise values omit the neutrix, pure neutrices
  /// omit the representative.
  std::string str() const;

 private:
  PreciseNum rep_;
  Neutrix nx_;
};

enum class Classification { Precise, PureNeutrix, ZerolessNonPrecise };
std::string_view to_string(Classification c);

ExternalNum canonicalize(const PreciseNum& rep, const Neutrix& nx);

ExternalNum ext_add(const ExternalNum& a, const ExternalNum& b);
ExternalNum ext_neg(const ExternalNum& a);
ExternalNum ext_sub(const ExternalNum& a, const ExternalNum& b);
ExternalNum ext_mul(const ExternalNum& a, const ExternalNum& b);
/// Throws NotZeroless when 0 is a member of b.
ExternalNum ext_inv(const ExternalNum& b);
ExternalNum ext_div(const ExternalNum& a, const ExternalNum& b);
/// rep-sign based absolute value, neutrix unchanged.
ExternalNum ext_abs(const ExternalNum& a);

inline ExternalNum operator+(const ExternalNum& a, const ExternalNum& b) { return ext_add(a, b); }
inline ExternalNum operator-(const ExternalNum& a, const ExternalNum& b) { return ext_sub(a, b); }
inline ExternalNum operator-(const ExternalNum& a) { return ext_neg(a); }
inline ExternalNum operator*(const ExternalNum& a, const ExternalNum& b) { return ext_mul(a, b); }
inline ExternalNum operator/(const ExternalNum& a, const ExternalNum& b) { return ext_div(a, b); }

Cmp ext_compare(const ExternalNum& a, const ExternalNum& b);
inline bool ext_less(const ExternalNum& a, const ExternalNum& b) { return ext_compare(a, b) == Cmp::LT; }
inline bool ext_leq(const ExternalNum& a, const ExternalNum& b) { return ext_compare(a, b) != Cmp::GT; }

Neutrix neutrix_part(const ExternalNum& a);
/// e(a) as an external number: 0 + A.
inline ExternalNum magnitude(const ExternalNum& a) { return ExternalNum(a.nx()); }
bool is_zeroless(const ExternalNum& a);
/// u(a) = 1 + A/a. Throws NotZeroless.
ExternalNum unity(const ExternalNum& a);
Classification classify(const ExternalNum& a);
bool ext_member(const PreciseNum& y, const ExternalNum& a);
/// Set inclusion a ⊆ b.
bool ext_subset(const ExternalNum& a, const ExternalNum& b);
/// |a| bounded by a limited number: degree(rep) <= 0 and A <= L.
bool is_limited(const ExternalNum& a);
/// a + o for limited a. Throws NotLimited.
ExternalNum shadow(const ExternalNum& a);

}  // namespace solidus
