#include "solidus/axioms/generator.hpp"

#include "solidus/error.hpp"

namespace solidus::axioms {

void GeneratorConfig::validate() const {
  if (max_terms <= 0 || coeff_bound <= 0 || exponent_denominator_bound <= 0) {
    throw Error(ErrorCode::PreconditionFailed, "generator bounds must be positive");
  }
  if (exponent_max < exponent_min || neutrix_q_max < neutrix_q_min) {
    throw Error(ErrorCode::PreconditionFailed, "generator ranges must be nonempty");
  }
}

Generator::Generator(const GeneratorConfig& cfg) : Generator(cfg, 0) {}

Generator::Generator(const GeneratorConfig& cfg, std::uint64_t stream) : cfg_(cfg) {
  cfg_.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

int Generator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Generator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Generator::exponent(const Rational& lo, const Rational& hi) {
  const int d = uniform(1, cfg_.exponent_denominator_bound);
  const mpz_class first = (lo * Rational(d)).ceil();
  const mpz_class last = (hi * Rational(d)).floor();
  if (last < first) return lo;
  const mpz_class span = last - first;
  const long offset = std::uniform_int_distribution<long>(0, span.get_si())(rng_);
  return Rational(mpz_class(first + offset), mpz_class(d));
}

Rational Generator::coefficient() {
  int c = 0;
  while (c == 0) c = uniform(-cfg_.coeff_bound, cfg_.coeff_bound);
  if (chance(0.2)) return Rational(c, uniform(2, 3));
  return c;
}

RhoPoly Generator::poly(const Rational& lo, const Rational& hi) {
  RhoPoly p;
  const int terms = uniform(1, cfg_.max_terms);
  for (int i = 0; i < terms; ++i) p += RhoPoly::monomial(coefficient(), exponent(lo, hi));
  if (p.is_zero()) p = RhoPoly::monomial(coefficient(), exponent(lo, hi));
  return p;
}

PreciseNum Generator::gen_precise() {
  if (chance(0.06)) return {};
  const RhoPoly num = poly(cfg_.exponent_min, cfg_.exponent_max);
  if (chance(0.12)) {
    RhoPoly den;
    while (den.is_zero()) {
      den = RhoPoly::monomial(coefficient(), exponent(-1, 1)) + RhoPoly::monomial(coefficient(), exponent(-1, 1));
    }
    return PreciseNum(num, den);
  }
  return num;
}

PreciseNum Generator::gen_nonzero_precise() {
  PreciseNum p;
  while (p.is_zero()) p = gen_precise();
  return p;
}

PreciseNum Generator::gen_positive_precise() { return gen_nonzero_precise().abs(); }

PreciseNum Generator::gen_limited_precise() {
  if (chance(0.05)) return {};
  RhoPoly p = poly(cfg_.exponent_min, 0);
  if (chance(0.7)) p += RhoPoly(coefficient());
  return p;
}

Neutrix Generator::gen_neutrix() {
  const int r = uniform(0, 99);
  if (r < 25) return Neutrix::zero();
  if (r < 85) {
    const Rational q = chance(0.25) ? Rational(0) : exponent(cfg_.neutrix_q_min, cfg_.neutrix_q_max);
    return r < 55 ? Neutrix::oslash(q) : Neutrix::pound(q);
  }
  return Neutrix::max();
}

Neutrix Generator::gen_idempotent() {
  switch (uniform(0, 3)) {
    case 0: return Neutrix::zero();
    case 1: return Neutrix::oslash();
    case 2: return Neutrix::pound();
    default: return Neutrix::max();
  }
}

ExternalNum Generator::gen_external() {
  ExternalNum x;
  const int r = uniform(0, 99);
  if (r < 15 && !recent_.empty()) {
    x = related_external();
  } else if (r < 22) {
    x = ExternalNum(uniform(-3, 3));
    if (chance(0.4)) x = x + ExternalNum(chance(0.5) ? Neutrix::oslash() : Neutrix::pound());
  } else {
    x = fresh_external();
  }
  if (recent_.size() >= 6) recent_.erase(recent_.begin());
  recent_.push_back(x);
  return x;
}

ExternalNum Generator::related_external() {
  const ExternalNum& base = recent_[static_cast<std::size_t>(uniform(0, static_cast<int>(recent_.size()) - 1))];
  switch (uniform(0, 3)) {
    case 0: return ext_neg(base);
    case 1: return base;
    case 2: return canonicalize(-base.rep() + PreciseNum(RhoPoly::monomial(coefficient(), exponent(cfg_.exponent_min, 0))),
                                base.nx());
    default: return canonicalize(-base.rep(), gen_neutrix());
  }
}

ExternalNum Generator::fresh_external() {
  const Neutrix n = gen_neutrix();
  if (n.is_zero()) return gen_precise();
  if (n.is_max()) return n;
  if (chance(0.25)) return n;
  // Representative terms straddle the neutrix threshold.
  const Rational& q = n.exponent();
  RhoPoly rep = poly(q - 2, q + 2);
  if (chance(0.3)) rep += RhoPoly::monomial(coefficient(), q);
  return ExternalNum(PreciseNum(rep), n);
}

ExternalNum Generator::gen_zeroless() {
  while (true) {
    ExternalNum x = gen_external();
    if (is_zeroless(x)) return x;
  }
}

PreciseNum Generator::gen_natural() {
  if (chance(0.4)) return PreciseNum(uniform(0, 30));
  const int d = uniform(1, 3);
  RhoPoly p = RhoPoly::monomial(uniform(1, cfg_.coeff_bound), d);
  for (int e = 0; e < d; ++e) p += RhoPoly::monomial(uniform(-cfg_.coeff_bound, cfg_.coeff_bound), e);
  return p;
}

PreciseNum Generator::element_of(const Neutrix& n) {
  switch (n.kind()) {
    case Neutrix::Kind::Zero: return {};
    case Neutrix::Kind::Max:
      return RhoPoly::monomial(coefficient(), exponent(cfg_.exponent_min, cfg_.exponent_max + 4));
    default: break;
  }
  if (chance(0.1)) return {};
  const Rational& q = n.exponent();
  RhoPoly p;
  const int terms = uniform(1, 2);
  for (int i = 0; i < terms; ++i) {
    Rational e = exponent(q - 3, q);
    if (n.kind() == Neutrix::Kind::Oslash && e >= q) {
      e = q - Rational(1, uniform(2, 12));
    }
    p += RhoPoly::monomial(coefficient(), e);
  }
  return p;
}

std::vector<PreciseNum> extreme_elements(const Neutrix& n) {
  switch (n.kind()) {
    case Neutrix::Kind::Zero: return {PreciseNum()};
    case Neutrix::Kind::Max: {
      const PreciseNum big = PreciseNum::rho_power(1000);
      return {big, -big};
    }
    case Neutrix::Kind::Oslash: {
      const PreciseNum big = RhoPoly::monomial(1000000, n.exponent() - Rational(1, 997));
      return {big, -big};
    }
    case Neutrix::Kind::Pound: {
      const PreciseNum big = RhoPoly::monomial(1000000000, n.exponent());
      return {big, -big};
    }
  }
  return {};
}

std::vector<PreciseNum> sample_members(const ExternalNum& a, std::size_t k, Generator& g) {
  std::vector<PreciseNum> out{a.rep()};
  for (const auto& e : extreme_elements(a.nx())) {
    if (out.size() < k) out.push_back(a.rep() + e);
  }
  while (out.size() < k) out.push_back(g.member_of(a));
  return out;
}

}  // namespace solidus::axioms
