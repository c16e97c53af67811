#include "solidus/axioms/check.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "solidus/error.hpp"
#include "solidus/naturals.hpp"

namespace solidus::axioms {

std::vector<CheckDef> axiom_checks();
std::vector<CheckDef> theorem_checks();
std::vector<CheckDef> mutant_checks();

bool accepts(InputKind kind, const ExternalNum& v) {
  switch (kind) {
    case InputKind::External: return true;
    case InputKind::Zeroless: return is_zeroless(v);
    case InputKind::Precise: return v.is_precise();
    case InputKind::NonzeroPrecise: return v.is_precise() && !v.rep().is_zero();
    case InputKind::PositivePrecise: return v.is_precise() && v.rep().sign() > 0;
    case InputKind::LimitedPrecise: return v.is_precise() && is_limited(v);
    case InputKind::Neutrix: return v.rep().is_zero();
    case InputKind::ScaledNeutrix: return v.rep().is_zero() && v.nx().is_scaled();
    case InputKind::Idempotent: return v.rep().is_zero() && is_idempotent(v.nx());
    case InputKind::Natural: return v.is_precise() && is_natural(v.rep());
  }
  return false;
}

namespace {

ExternalNum draw(InputKind kind, Generator& g) {
  switch (kind) {
    case InputKind::External: return g.gen_external();
    case InputKind::Zeroless: return g.gen_zeroless();
    case InputKind::Precise: return g.gen_precise();
    case InputKind::NonzeroPrecise: return g.gen_nonzero_precise();
    case InputKind::PositivePrecise: return g.gen_positive_precise();
    case InputKind::LimitedPrecise: return g.gen_limited_precise();
    case InputKind::Neutrix: return g.gen_neutrix();
    case InputKind::ScaledNeutrix: {
      Neutrix n = g.gen_neutrix();
      while (!n.is_scaled()) n = g.gen_neutrix();
      return n;
    }
    case InputKind::Idempotent: return g.gen_idempotent();
    case InputKind::Natural: return g.gen_natural();
  }
  return {};
}

std::uint64_t stream_of(std::string_view id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

Outcome evaluate(const CheckDef& def, const Sample& s) {
  try {
    return def.predicate(s);
  } catch (const Error& e) {
    return {false, "no error", std::string(to_string(e.code())) + ": " + e.what()};
  }
}

// Size measure driving the shrinker; candidates are accepted only when it
// strictly decreases, so shrinking terminates.
struct Size {
  std::size_t terms = 0;
  mpz_class denominators = 0;
  int neutrix = 0;
  mpz_class coefficients = 0;

  auto key() const { return std::tie(terms, denominators, neutrix, coefficients); }
  friend bool operator<(const Size& a, const Size& b) { return a.key() < b.key(); }
};

void add_poly(Size& s, const RhoPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    ++s.terms;
    s.denominators += e.denominator() - 1;
    s.coefficients += abs(c.numerator()) + c.denominator() - 1;
  }
}

Size size_of(const Sample& sample) {
  Size s;
  for (const auto& v : sample) {
    add_poly(s, v.rep().num());
    if (!v.rep().is_polynomial()) add_poly(s, v.rep().den());
    const Neutrix& n = v.nx();
    if (n.is_scaled()) {
      ++s.terms;
      s.denominators += n.exponent().denominator() - 1;
      s.neutrix += n.exponent().is_zero() ? 1 : 2;
      s.coefficients += abs(n.exponent().numerator());
    } else if (n.is_max()) {
      ++s.terms;
      s.neutrix += 1;
    }
  }
  return s;
}

std::vector<RhoPoly> poly_candidates(const RhoPoly& p) {
  std::vector<RhoPoly> out;
  if (!p.is_zero()) out.emplace_back();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(p - RhoPoly::monomial(c, e));
  }
  for (const auto& [e, c] : p.terms()) {
    if (e.is_integer()) continue;
    const RhoPoly rest = p - RhoPoly::monomial(c, e);
    out.push_back(rest + RhoPoly::monomial(c, Rational(e.floor())));
    out.push_back(rest + RhoPoly::monomial(c, Rational(e.ceil())));
  }
  for (const auto& [e, c] : p.terms()) {
    const RhoPoly rest = p - RhoPoly::monomial(c, e);
    if (!e.is_zero()) out.push_back(rest + RhoPoly::monomial(c, 0));
    if (c != Rational(c.sign())) out.push_back(rest + RhoPoly::monomial(c.sign(), e));
    if (!c.is_integer()) out.push_back(rest + RhoPoly::monomial(Rational(c.numerator()), e));
    const mpz_class half = c.numerator() / 2;
    if (half != 0 && c.is_integer()) out.push_back(rest + RhoPoly::monomial(Rational(half), e));
  }
  return out;
}

std::vector<PreciseNum> precise_candidates(const PreciseNum& p) {
  std::vector<PreciseNum> out;
  if (!p.is_polynomial()) {
    out.emplace_back(p.num());
    for (const auto& d : poly_candidates(p.den())) {
      if (!d.is_zero()) out.emplace_back(p.num(), d);
    }
  }
  for (const auto& n : poly_candidates(p.num())) {
    out.push_back(p.is_polynomial() ? PreciseNum(n) : PreciseNum(n, p.den()));
  }
  return out;
}

std::vector<Neutrix> neutrix_candidates(const Neutrix& n) {
  std::vector<Neutrix> out{Neutrix::zero()};
  if (n.is_max()) {
    out.push_back(Neutrix::pound());
    out.push_back(Neutrix::oslash());
  }
  if (n.is_scaled()) {
    const Rational& q = n.exponent();
    const bool pound = n.kind() == Neutrix::Kind::Pound;
    auto make = [&](const Rational& e) { return pound ? Neutrix::pound(e) : Neutrix::oslash(e); };
    if (!q.is_integer()) {
      out.push_back(make(Rational(q.floor())));
      out.push_back(make(Rational(q.ceil())));
    }
    if (!q.is_zero()) out.push_back(make(0));
    if (pound) out.push_back(Neutrix::oslash(q));
  }
  return out;
}

std::vector<ExternalNum> value_candidates(const ExternalNum& v) {
  std::vector<ExternalNum> out;
  for (const auto& n : neutrix_candidates(v.nx())) out.push_back(canonicalize(v.rep(), n));
  for (const auto& p : precise_candidates(v.rep())) out.push_back(canonicalize(p, v.nx()));
  return out;
}

std::string render_inputs(const Failure& f) {
  std::string s;
  for (const auto& [name, value] : f.inputs) s += name + "=" + value + ";";
  return s;
}

}  // namespace

Sample shrink(const CheckDef& def, Sample failing) {
  Size current = size_of(failing);
  for (int step = 0; step < 400; ++step) {
    bool improved = false;
    for (std::size_t i = 0; i < failing.size() && !improved; ++i) {
      for (const auto& candidate : value_candidates(failing[i])) {
        if (i < def.inputs.size() && !accepts(def.inputs[i].kind, candidate)) continue;
        Sample trial = failing;
        trial[i] = candidate;
        const Size size = size_of(trial);
        if (!(size < current)) continue;
        if (evaluate(def, trial).ok) continue;
        failing = std::move(trial);
        current = size;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return failing;
}

const std::vector<CheckDef>& check_catalog() {
  static const std::vector<CheckDef> catalog = [] {
    std::vector<CheckDef> all = axiom_checks();
    for (auto& c : theorem_checks()) all.push_back(std::move(c));
    return all;
  }();
  return catalog;
}

const std::vector<CheckDef>& mutant_catalog() {
  static const std::vector<CheckDef> catalog = mutant_checks();
  return catalog;
}

const CheckDef& find_check(std::string_view id) {
  for (const auto* catalog : {&check_catalog(), &mutant_catalog()}) {
    for (const auto& c : *catalog) {
      if (c.id == id) return c;
    }
  }
  throw Error(ErrorCode::UnknownCheck, "unknown check '" + std::string(id) + "'");
}

CheckReport check(std::string_view id, const GeneratorConfig& cfg, std::size_t n) {
  return run_check(find_check(id), cfg, n);
}

CheckReport run_check(const CheckDef& def, const GeneratorConfig& cfg, std::size_t n) {
  std::vector<Sample> samples;
  if (def.enumerate) {
    samples = def.enumerate();
  } else if (def.inputs.empty()) {
    samples.emplace_back();
  } else {
    Generator g(cfg, stream_of(def.id));
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (def.generate) {
        samples.push_back(def.generate(g));
      } else {
        Sample s;
        for (const auto& in : def.inputs) s.push_back(draw(in.kind, g));
        samples.push_back(std::move(s));
      }
    }
  }

  CheckReport report;
  report.check_id = def.id;
  report.samples = samples.size();
  std::set<std::string> seen;
  for (const auto& s : samples) {
    if (evaluate(def, s).ok) continue;
    ++report.failing_samples;
    const Sample small = shrink(def, s);
    const Outcome outcome = evaluate(def, small);
    Failure f;
    for (std::size_t i = 0; i < small.size(); ++i) {
      const std::string name = i < def.inputs.size() ? def.inputs[i].name : "v" + std::to_string(i);
      f.inputs.emplace_back(name, small[i].str());
    }
    f.expected = outcome.expected;
    f.observed = outcome.observed;
    if (seen.insert(render_inputs(f)).second) report.failures.push_back(std::move(f));
  }
  return report;
}

std::vector<CheckReport> run_catalog(const GeneratorConfig& cfg, std::size_t n) {
  std::vector<CheckReport> out;
  for (const auto& def : check_catalog()) out.push_back(run_check(def, cfg, n));
  return out;
}

CheckReport minkowski_oracle(const ExternalNum& a, const ExternalNum& b, MinkowskiOp op,
                             std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error(ErrorCode::PreconditionFailed, "minkowski_oracle needs k >= 1");
  GeneratorConfig cfg;
  cfg.seed = seed;
  Generator g(cfg, stream_of(a.str() + "|" + b.str()));
  const bool add = op == MinkowskiOp::Add;
  const ExternalNum result = add ? a + b : a * b;
  const auto xs = sample_members(a, k, g);
  const auto ys = sample_members(b, k, g);

  CheckReport report;
  report.check_id = add ? "minkowski.add" : "minkowski.mul";
  report.samples = xs.size() * ys.size();
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      const PreciseNum z = add ? x + y : x * y;
      if (ext_member(z, result)) continue;
      ++report.failing_samples;
      if (report.failures.size() < 5) {
        report.failures.push_back({{{"a", x.str()}, {"b", y.str()}},
                                   (add ? "a + b in " : "a * b in ") + result.str(),
                                   z.str()});
      }
    }
  }
  return report;
}

std::string render_report(const CheckReport& r) {
  std::ostringstream out;
  out << r.check_id << '\t' << (r.passed() ? "PASS" : "FAIL") << '\t' << r.samples << '\t'
      << r.failing_samples << '\n';
  std::size_t index = 0;
  for (const auto& f : r.failures) {
    out << "  counterexample " << ++index << ":\n";
    for (const auto& [name, value] : f.inputs) out << "    " << name << " = " << value << '\n';
    out << "    expected: " << f.expected << '\n';
    out << "    observed: " << f.observed << '\n';
  }
  return out.str();
}

}  // namespace solidus::axioms
