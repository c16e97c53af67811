#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "solidus/external.hpp"

namespace solidus {

/// A natural number of the model: a rho-polynomial with integer coefficients
/// and nonnegative integer exponents whose value is >= 0.
///
/// This interpretation of N satisfies the natural-number and Archimedean
/// axioms but not the full induction scheme: no computable interpretation
/// can. `induction_catalog()` lists which instances hold.
class NaturalWitness {
 public:
  /// Throws PreconditionFailed when `value` is not natural.
  explicit NaturalWitness(RhoPoly value);

  const RhoPoly& value() const { return value_; }
  PreciseNum precise() const { return value_; }

 private:
  RhoPoly value_;
};

bool is_natural(const PreciseNum& p);
/// The polynomial form of p when p is natural.
std::optional<RhoPoly> as_natural(const PreciseNum& p);

/// Natural z with z*x > y, for 0 < x < y and y below M.
NaturalWitness archimedean_witness(const ExternalNum& x, const ExternalNum& y);

struct InductionFormula {
  std::string id;
  std::string text;
  std::size_t parameters = 0;
  bool expected_to_hold = true;
  /// Why an instance is expected to fail in this interpretation.
  std::string note;
  bool (*holds)(const PreciseNum& x, std::span<const PreciseNum> params) = nullptr;
};

const std::vector<InductionFormula>& induction_catalog();

enum class InductionStatus { Pass, Fail, ExpectedFail, UnexpectedPass };
std::string_view to_string(InductionStatus s);

struct InductionReport {
  std::string formula_id;
  std::string text;
  bool base = false;
  bool step = false;
  bool conclusion_standard = false;
  bool conclusion_nonstandard = false;
  std::size_t samples = 0;
  InductionStatus status = InductionStatus::Fail;
  /// First failing instance, rendered, when any part fails.
  std::string detail;
};

/// Checks A(0), A(x) -> A(x+1) on sampled naturals (standard and
/// rho-polynomial), and the conclusion on 0..bound and on sampled nonstandard
/// naturals. Parameters range over the standard naturals 0..4.
/// Throws UnknownFormula.
InductionReport induction_spotcheck(std::string_view formula_id, std::size_t bound,
                                    std::uint64_t seed = 1);

}  // namespace solidus
