#include "solidus/rho_poly.hpp"

namespace solidus {

RhoPoly::RhoPoly(const Rational& constant) { add_term(0, constant); }

RhoPoly RhoPoly::monomial(const Rational& coefficient, const Rational& exponent) {
  RhoPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void RhoPoly::add_term(const Rational& exponent, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Rational> RhoPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Rational> RhoPoly::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Rational RhoPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int RhoPoly::sign() const { return terms_.empty() ? 0 : terms_.begin()->second.sign(); }

bool RhoPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational RhoPoly::coefficient(const Rational& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

RhoPoly RhoPoly::truncated(const Rational& threshold, bool strict) const {
  RhoPoly out;
  for (const auto& [e, c] : terms_) {
    if (strict ? e <= threshold : e < threshold) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

RhoPoly RhoPoly::shifted(const Rational& shift) const {
  RhoPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

RhoPoly RhoPoly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  RhoPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
  return out;
}

mpz_class RhoPoly::exponent_denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& [e, c] : terms_) l = lcm(l, e.denominator());
  return l;
}

RhoPoly RhoPoly::operator-() const { return scaled(-1); }

RhoPoly& RhoPoly::operator+=(const RhoPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

RhoPoly& RhoPoly::operator-=(const RhoPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

RhoPoly operator*(const RhoPoly& a, const RhoPoly& b) {
  RhoPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string rho_power_text(const Rational& exponent) {
  if (exponent == 1) return "rho";
  if (exponent.is_integer() && exponent.sign() > 0) return "rho^" + exponent.str();
  return "rho^(" + exponent.str() + ")";
}

std::string RhoPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (e.is_zero()) {
      out += mag.str();
    } else if (mag == 1) {
      out += rho_power_text(e);
    } else {
      out += mag.str() + "*" + rho_power_text(e);
    }
  }
  return out;
}

}  // namespace solidus
