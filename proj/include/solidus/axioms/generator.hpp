#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "solidus/external.hpp"

namespace solidus::axioms {

/// Sampling parameters. The defaults cluster exponents around neutrix
/// thresholds so absorption boundaries are exercised; all of them are
/// tunable.
struct GeneratorConfig {
  std::uint64_t seed = 20260101;
  int max_terms = 3;
  int coeff_bound = 9;
  int exponent_denominator_bound = 3;
  Rational exponent_min = -3;
  Rational exponent_max = 3;
  Rational neutrix_q_min = -2;
  Rational neutrix_q_max = 2;

  /// Throws PreconditionFailed when a bound is not positive or a range is
  /// empty.
  void validate() const;
};

/// Deterministic random source of field elements, neutrices and external
/// numbers.
class Generator {
 public:
  explicit Generator(const GeneratorConfig& cfg);
  Generator(const GeneratorConfig& cfg, std::uint64_t stream);

  const GeneratorConfig& config() const { return cfg_; }
  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi);
  bool chance(double p);

  Rational exponent(const Rational& lo, const Rational& hi);
  /// Nonzero coefficient in [-coeff_bound, coeff_bound], occasionally with a
  /// small denominator.
  Rational coefficient();
  /// Nonzero polynomial with exponents in [lo, hi].
  RhoPoly poly(const Rational& lo, const Rational& hi);

  PreciseNum gen_precise();
  PreciseNum gen_nonzero_precise();
  PreciseNum gen_positive_precise();
  /// Limited precise number (degree <= 0).
  PreciseNum gen_limited_precise();
  Neutrix gen_neutrix();
  Neutrix gen_idempotent();
  ExternalNum gen_external();
  /// Resamples until 0 is not a member.
  ExternalNum gen_zeroless();
  /// Natural number of the model, standard or rho-polynomial.
  PreciseNum gen_natural();

  /// Random precise element of the neutrix, with degrees near its threshold.
  PreciseNum element_of(const Neutrix& n);
  /// Random precise member of a.
  PreciseNum member_of(const ExternalNum& a) { return a.rep() + element_of(a.nx()); }

 private:
  ExternalNum fresh_external();
  ExternalNum related_external();

  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
  // Recent draws; reused (negated, perturbed) so that samples contain
  // cancelling and overlapping values.
  std::vector<ExternalNum> recent_;
};

/// Extreme elements of a neutrix: +-(large coefficient) * rho^(threshold or
/// just below it). Together with 0 they dominate every generated element.
std::vector<PreciseNum> extreme_elements(const Neutrix& n);

/// k sampled members of a: the representative, the extremes and random
/// members.
std::vector<PreciseNum> sample_members(const ExternalNum& a, std::size_t k, Generator& g);

}  // namespace solidus::axioms
