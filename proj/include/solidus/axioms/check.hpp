#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "solidus/axioms/generator.hpp"

namespace solidus::axioms {

/// What a check input must be. Shrinking keeps candidates of the same kind.
enum class InputKind {
  External,
  Zeroless,
  Precise,
  NonzeroPrecise,
  PositivePrecise,
  LimitedPrecise,
  Neutrix,
  ScaledNeutrix,
  Idempotent,
  Natural,
};

bool accepts(InputKind kind, const ExternalNum& v);

struct Input {
  std::string name;
  InputKind kind = InputKind::External;
};

using Sample = std::vector<ExternalNum>;

/// Result of one predicate evaluation; `expected` and `observed` are only
/// meaningful when !ok.
struct Outcome {
  bool ok = true;
  std::string expected;
  std::string observed;
};

struct CheckDef {
  std::string id;
  std::string statement;
  std::vector<Input> inputs;
  std::function<Outcome(const Sample&)> predicate;
  /// Custom sampler; inputs are drawn by kind when empty.
  std::function<Sample(Generator&)> generate;
  /// Fixed instance list; when set the sample count argument is ignored.
  std::function<std::vector<Sample>()> enumerate;
};

struct Failure {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string expected;
  std::string observed;
};

struct CheckReport {
  std::string check_id;
  std::size_t samples = 0;
  /// Number of failing samples; `failures` holds their shrunk forms without
  /// duplicates.
  std::size_t failing_samples = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

/// The reference catalog: every axiom and in-scope theorem.
const std::vector<CheckDef>& check_catalog();
/// Deliberately wrong predicates, run only on request.
const std::vector<CheckDef>& mutant_catalog();
/// Looks in both catalogs. Throws UnknownCheck.
const CheckDef& find_check(std::string_view id);

/// Evaluates the check on n generated samples. The sample stream depends only
/// on (cfg.seed, id), so single checks reproduce catalog runs.
CheckReport check(std::string_view id, const GeneratorConfig& cfg, std::size_t n);
CheckReport run_check(const CheckDef& def, const GeneratorConfig& cfg, std::size_t n);
std::vector<CheckReport> run_catalog(const GeneratorConfig& cfg, std::size_t n);

/// Greedy shrink of a failing sample: fewer terms and smaller exponent
/// denominators first, then smaller coefficients.
Sample shrink(const CheckDef& def, Sample failing);

enum class MinkowskiOp { Add, Mul };

/// Samples k members of each operand and asserts that every pointwise result
/// lies in the computed sum or product.
CheckReport minkowski_oracle(const ExternalNum& a, const ExternalNum& b, MinkowskiOp op,
                             std::size_t k, std::uint64_t seed = 1);

/// `id<TAB>PASS|FAIL<TAB>samples<TAB>failures` followed by one block per
/// counterexample.
std::string render_report(const CheckReport& r);

}  // namespace solidus::axioms
