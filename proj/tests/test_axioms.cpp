#include "doctest.h"
#include "solidus/axioms/check.hpp"
#include "solidus/error.hpp"

#include <set>

using namespace solidus;
using namespace solidus::axioms;

TEST_CASE("generator covers every neutrix tag") {
  Generator g(GeneratorConfig{});
  std::set<Neutrix::Kind> seen;
  for (int i = 0; i < 10000; ++i) seen.insert(g.gen_neutrix().kind());
  CHECK(seen.size() == 4);
}

TEST_CASE("zeroless draws are zeroless") {
  Generator g(GeneratorConfig{});
  for (int i = 0; i < 2000; ++i) {
    const ExternalNum x = g.gen_zeroless();
    const Classification c = classify(x);
    const bool ok = c == Classification::ZerolessNonPrecise || (c == Classification::Precise && !x.rep().is_zero());
    CHECK(ok);
  }
}

TEST_CASE("same seed gives the same sequence") {
  GeneratorConfig cfg;
  cfg.seed = 77;
  Generator a(cfg, 5);
  Generator b(cfg, 5);
  Generator c(cfg, 6);
  bool differs = false;
  for (int i = 0; i < 500; ++i) {
    const ExternalNum x = a.gen_external();
    CHECK(x == b.gen_external());
    if (!(x == c.gen_external())) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("generator configuration is validated") {
  GeneratorConfig cfg;
  cfg.max_terms = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = GeneratorConfig{};
  cfg.exponent_min = 2;
  cfg.exponent_max = 1;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("generated values respect their input kinds") {
  Generator g(GeneratorConfig{});
  for (int i = 0; i < 500; ++i) {
    CHECK(accepts(InputKind::PositivePrecise, g.gen_positive_precise()));
    CHECK(accepts(InputKind::NonzeroPrecise, g.gen_nonzero_precise()));
    CHECK(accepts(InputKind::LimitedPrecise, g.gen_limited_precise()));
    CHECK(accepts(InputKind::Idempotent, ExternalNum(g.gen_idempotent())));
    CHECK(accepts(InputKind::Natural, g.gen_natural()));
    const Neutrix n = g.gen_neutrix();
    CHECK(nx_contains(n, g.element_of(n)));
  }
}

TEST_CASE("check examples") {
  GeneratorConfig cfg;
  const CheckReport dist = check("axiom.distributivity", cfg, 1000);
  CHECK(dist.passed());
  CHECK(dist.samples == 1000);
  const CheckReport op = check("thm.oslash_pound", cfg, 1);
  CHECK(op.passed());
  const CheckReport naive = check("axiom.distributivity_naive", cfg, 1000);
  CHECK_FALSE(naive.passed());
  REQUIRE_FALSE(naive.failures.empty());
  CHECK(naive.failing_samples >= naive.failures.size());
  CHECK(naive.failures.front().inputs.size() == 3);
  CHECK_THROWS_AS(check("axiom.nonexistent", cfg, 1), Error);
}

TEST_CASE("the naive distributivity counterexample from the text fails") {
  const ExternalNum x = ExternalNum(1) + ExternalNum(Neutrix::oslash());
  const ExternalNum y = 1;
  const ExternalNum z = -1;
  CHECK_FALSE(x * y + x * z == x * (y + z));
  CHECK(x * y + x * z == x * (y + z) + magnitude(x) * y + magnitude(x) * z);
}

TEST_CASE("the mutant idempotent table is caught") {
  const CheckReport r = check("mutant.nx_mul_oslash_pound", GeneratorConfig{}, 1);
  CHECK_FALSE(r.passed());
}

TEST_CASE("the whole catalog passes") {
  const auto reports = run_catalog(GeneratorConfig{}, 150);
  CHECK(reports.size() == check_catalog().size());
  for (const auto& r : reports) {
    INFO(render_report(r));
    CHECK(r.passed());
  }
}

TEST_CASE("catalog ids are unique and carry statements") {
  std::set<std::string> ids;
  for (const auto* cat : {&check_catalog(), &mutant_catalog()}) {
    for (const auto& def : *cat) {
      CHECK(ids.insert(def.id).second);
      CHECK_FALSE(def.statement.empty());
      CHECK(&find_check(def.id) == &def);
    }
  }
  for (const char* id : {"axiom.add_assoc", "axiom.distributivity", "axiom.dedekind_scheme", "axiom.induction",
                         "thm.lemma_lp.6", "thm.oslash_pound", "thm.tricotomia", "thm.shadow_field",
                         "thm.unity_product"}) {
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("reports are reproducible") {
  GeneratorConfig cfg;
  cfg.seed = 99;
  const auto a = render_report(check("axiom.distributivity_naive", cfg, 300));
  const auto b = render_report(check("axiom.distributivity_naive", cfg, 300));
  CHECK(a == b);
  // A single check reproduces its slice of a catalog run.
  const auto reports = run_catalog(cfg, 20);
  CHECK(render_report(reports.front()) == render_report(check(reports.front().check_id, cfg, 20)));
}

TEST_CASE("report format") {
  const CheckReport pass = check("thm.oslash_pound", GeneratorConfig{}, 1);
  CHECK(render_report(pass) == "thm.oslash_pound\tPASS\t1\t0\n");
  const CheckReport fail = check("axiom.distributivity_naive", GeneratorConfig{}, 200);
  const std::string text = render_report(fail);
  CHECK(text.rfind("axiom.distributivity_naive\tFAIL\t200\t", 0) == 0);
  CHECK(text.find("  counterexample 1:") != std::string::npos);
  CHECK(text.find("expected:") != std::string::npos);
  CHECK(text.find("observed:") != std::string::npos);
}

TEST_CASE("shrinking reaches small counterexamples") {
  const CheckReport r = check("axiom.distributivity_naive", GeneratorConfig{}, 1000);
  REQUIRE_FALSE(r.failures.empty());
  // Every shrunk input is a single term plus a neutrix or a small constant.
  for (const auto& f : r.failures) {
    for (const auto& [name, value] : f.inputs) CHECK(value.size() <= 24);
  }
}

TEST_CASE("minkowski oracle examples") {
  const ExternalNum one_o = ExternalNum(1) + ExternalNum(Neutrix::oslash());
  CHECK(minkowski_oracle(one_o, one_o, MinkowskiOp::Mul, 20).passed());
  const ExternalNum r = ExternalNum::rho() + ExternalNum(Neutrix::pound());
  const CheckReport rr = minkowski_oracle(r, r, MinkowskiOp::Mul, 20);
  CHECK(rr.passed());
  CHECK(r * r == ExternalNum(PreciseNum::rho_power(2), Neutrix::pound(1)));
  CHECK(minkowski_oracle(r, 0, MinkowskiOp::Add, 20).passed());
  CHECK_THROWS_AS(minkowski_oracle(r, r, MinkowskiOp::Add, 0), Error);
}
