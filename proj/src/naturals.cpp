#include "solidus/naturals.hpp"

#include <algorithm>
#include <random>

#include "solidus/error.hpp"

namespace solidus {

std::optional<RhoPoly> as_natural(const PreciseNum& p) {
  std::optional<RhoPoly> poly;
  if (p.is_polynomial()) {
    poly = p.num();
  } else {
    poly = exact_quotient(p.num(), p.den());
  }
  if (!poly || poly->sign() < 0) return std::nullopt;
  for (const auto& [e, c] : poly->terms()) {
    if (!e.is_integer() || e.sign() < 0 || !c.is_integer()) return std::nullopt;
  }
  return poly;
}

bool is_natural(const PreciseNum& p) { return as_natural(p).has_value(); }

NaturalWitness::NaturalWitness(RhoPoly value) : value_(std::move(value)) {
  if (!is_natural(value_)) {
    throw Error(ErrorCode::PreconditionFailed, value_.str() + " is not a natural number");
  }
}

namespace {

// Largest degree reached by elements of y (y > 0, y below M).
Rational upper_degree(const ExternalNum& y) {
  std::optional<Rational> d = degree(y.rep());
  if (y.nx().is_scaled() && (!d || y.nx().exponent() > *d)) d = y.nx().exponent();
  return d.value_or(0);
}

// Degree of the elements that dominate x (x > 0 is zeroless or a scaled
// neutrix).
Rational lower_degree(const ExternalNum& x) {
  if (is_zeroless(x)) return *degree(x.rep());
  return x.nx().exponent();
}

}  // namespace

NaturalWitness archimedean_witness(const ExternalNum& x, const ExternalNum& y) {
  const ExternalNum zero;
  if (!ext_less(zero, x) || !ext_less(x, y)) {
    throw Error(ErrorCode::PreconditionFailed,
                "archimedean_witness needs 0 < x < y, got x = " + x.str() + ", y = " + y.str());
  }
  if (y.nx().is_max()) {
    throw Error(ErrorCode::PreconditionFailed, "no element exceeds " + y.str());
  }
  const mpz_class k = (upper_degree(y) - lower_degree(x)).ceil();
  RhoPoly z;
  if (k <= 0) {
    mpz_class c = 1;
    if (!x.rep().is_zero() && !y.rep().is_zero()) {
      const Rational ratio = y.rep().num().leading_coefficient() / x.rep().num().leading_coefficient();
      c = ratio.abs().floor() + 1;
    }
    z = RhoPoly(Rational(c));
  } else {
    z = RhoPoly::monomial(1, Rational(mpz_class(k + 1)));
  }
  // Neutrix parts can swallow the leading term; each extra factor rho raises
  // z*x by one full degree.
  for (int step = 0; step < 64; ++step) {
    if (ext_less(y, ext_mul(ExternalNum(PreciseNum(z)), x))) return NaturalWitness(z);
    z = z.shifted(1);
  }
  throw Error(ErrorCode::Internal, "archimedean_witness did not converge");
}

std::string_view to_string(InductionStatus s) {
  switch (s) {
    case InductionStatus::Pass: return "PASS";
    case InductionStatus::Fail: return "FAIL";
    case InductionStatus::ExpectedFail: return "EXPECTED-FAIL";
    case InductionStatus::UnexpectedPass: return "UNEXPECTED-PASS";
  }
  return "?";
}

namespace {

using Params = std::span<const PreciseNum>;

const PreciseNum kOne{1};

bool predecessor(const PreciseNum& x, Params) {
  return x.is_zero() || is_natural(x - kOne);
}

bool nonneg_square(const PreciseNum& x, Params) { return is_natural(x * x - x); }

bool even_or_odd(const PreciseNum& x, Params) {
  const PreciseNum half = x / PreciseNum(2);
  return is_natural(half) || is_natural(half - PreciseNum(Rational(1, 2)));
}

std::vector<InductionFormula> build_catalog() {
  std::vector<InductionFormula> c;
  c.push_back({"add_zero", "x + 0 = x", 0, true, "",
               [](const PreciseNum& x, Params) { return x + PreciseNum(0) == x; }});
  c.push_back({"zero_add", "0 + x = x", 0, true, "",
               [](const PreciseNum& x, Params) { return PreciseNum(0) + x == x; }});
  c.push_back({"mul_one", "x*1 = x", 0, true, "",
               [](const PreciseNum& x, Params) { return x * kOne == x; }});
  c.push_back({"mul_zero", "x*0 = 0", 0, true, "",
               [](const PreciseNum& x, Params) { return (x * PreciseNum(0)).is_zero(); }});
  c.push_back({"mul_succ", "x*(y+1) = x*y + x", 1, true, "",
               [](const PreciseNum& x, Params p) { return x * (p[0] + kOne) == x * p[0] + x; }});
  c.push_back({"add_succ_assoc", "(x+y)+1 = x+(y+1)", 1, true, "",
               [](const PreciseNum& x, Params p) { return (x + p[0]) + kOne == x + (p[0] + kOne); }});
  c.push_back({"add_comm", "x + y = y + x", 1, true, "",
               [](const PreciseNum& x, Params p) { return x + p[0] == p[0] + x; }});
  c.push_back({"mul_comm", "x*y = y*x", 1, true, "",
               [](const PreciseNum& x, Params p) { return x * p[0] == p[0] * x; }});
  c.push_back({"square_succ", "(x+1)*(x+1) = x*x + (1+1)*x + 1", 0, true, "",
               [](const PreciseNum& x, Params) {
                 return (x + kOne) * (x + kOne) == x * x + (kOne + kOne) * x + kOne;
               }});
  c.push_back({"distrib", "x*(y+z) = x*y + x*z", 2, true, "",
               [](const PreciseNum& x, Params p) { return x * (p[0] + p[1]) == x * p[0] + x * p[1]; }});
  c.push_back({"predecessor", "x = 0 or exists y (N(y) and x = y + 1)", 0, true, "", predecessor});
  c.push_back({"nonneg_square", "exists w (N(w) and x*x = x + w)", 0, true, "", nonneg_square});
  c.push_back({"even_or_odd", "exists y (N(y) and (x = y + y or x = y + y + 1))", 0, false,
               "fails at x = rho: neither rho/2 nor (rho-1)/2 has integer coefficients, so "
               "this N is not closed under halving; the full induction scheme cannot hold in "
               "a computable model",
               even_or_odd});
  return c;
}

std::vector<PreciseNum> nonstandard_naturals(std::uint64_t seed) {
  const RhoPoly rho = RhoPoly::rho();
  const RhoPoly rho2 = RhoPoly::monomial(1, 2);
  std::vector<PreciseNum> out = {
      rho, rho - RhoPoly(1), rho + RhoPoly(1), rho.scaled(2), rho.scaled(2) + RhoPoly(1),
      rho2, rho2 - rho, rho2.scaled(3) + RhoPoly(5), RhoPoly::monomial(1, 3) - rho.scaled(2) + RhoPoly(7),
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(1, 4);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> lead(1, 9);
  for (int i = 0; i < 24; ++i) {
    const int d = deg(rng);
    RhoPoly p = RhoPoly::monomial(lead(rng), d);
    for (int e = 0; e < d; ++e) p += RhoPoly::monomial(coef(rng), e);
    out.emplace_back(std::move(p));
  }
  return out;
}

// Enumerates every parameter tuple over the standard naturals 0..4.
template <typename Fn>
bool for_all_params(std::size_t arity, Fn&& fn) {
  std::vector<PreciseNum> params(arity);
  std::vector<int> idx(arity, 0);
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) params[i] = PreciseNum(idx[i]);
    if (!fn(std::span<const PreciseNum>(params))) return false;
    std::size_t i = 0;
    while (i < arity && ++idx[i] > 4) idx[i++] = 0;
    if (i == arity) return true;
  }
}

}  // namespace

const std::vector<InductionFormula>& induction_catalog() {
  static const std::vector<InductionFormula> catalog = build_catalog();
  return catalog;
}

InductionReport induction_spotcheck(std::string_view formula_id, std::size_t bound,
                                    std::uint64_t seed) {
  const auto& catalog = induction_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const InductionFormula& f) { return f.id == formula_id; });
  if (it == catalog.end()) {
    throw Error(ErrorCode::UnknownFormula, "unknown induction formula '" + std::string(formula_id) + "'");
  }
  const InductionFormula& f = *it;
  InductionReport r;
  r.formula_id = f.id;
  r.text = f.text;

  std::vector<PreciseNum> standard;
  for (std::size_t n = 0; n <= bound; ++n) standard.emplace_back(static_cast<long>(n));
  const std::vector<PreciseNum> nonstandard = nonstandard_naturals(seed);

  auto note_failure = [&](const std::string& what, const PreciseNum& x) {
    if (r.detail.empty()) r.detail = what + " fails at x = " + x.str();
  };

  r.base = for_all_params(f.parameters, [&](auto p) { return f.holds(PreciseNum(0), p); });
  if (!r.base) note_failure("base case", PreciseNum(0));

  r.step = true;
  auto check_step = [&](const PreciseNum& x) {
    ++r.samples;
    const bool ok = for_all_params(f.parameters, [&](auto p) {
      return !f.holds(x, p) || f.holds(x + kOne, p);
    });
    if (!ok) {
      r.step = false;
      note_failure("inductive step", x);
    }
  };
  for (const auto& x : standard) check_step(x);
  for (const auto& x : nonstandard) check_step(x);

  auto conclusion = [&](const std::vector<PreciseNum>& xs, const char* what) {
    bool all = true;
    for (const auto& x : xs) {
      if (!for_all_params(f.parameters, [&](auto p) { return f.holds(x, p); })) {
        all = false;
        note_failure(what, x);
      }
    }
    return all;
  };
  r.conclusion_standard = conclusion(standard, "conclusion");
  r.conclusion_nonstandard = conclusion(nonstandard, "conclusion");

  const bool all = r.base && r.step && r.conclusion_standard && r.conclusion_nonstandard;
  if (f.expected_to_hold) {
    r.status = all ? InductionStatus::Pass : InductionStatus::Fail;
  } else {
    // The documented failure: premises hold, the conclusion breaks only on
    // nonstandard naturals.
    const bool documented = r.base && r.step && r.conclusion_standard && !r.conclusion_nonstandard;
    r.status = all ? InductionStatus::UnexpectedPass
                   : (documented ? InductionStatus::ExpectedFail : InductionStatus::Fail);
    if (documented) r.detail += "; " + f.note;
  }
  return r;
}

}  // namespace solidus
