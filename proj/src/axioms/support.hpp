#pragma once

#include <initializer_list>
#include <string>

#include "solidus/axioms/check.hpp"

namespace solidus::axioms::support {

using X = ExternalNum;

inline Outcome pass() { return {}; }

inline Outcome require(bool cond, std::string expected, std::string observed) {
  if (cond) return {};
  return {false, std::move(expected), std::move(observed)};
}

inline Outcome same(const X& lhs, const X& rhs, std::string relation) {
  return require(lhs == rhs, std::move(relation), "lhs = " + lhs.str() + ", rhs = " + rhs.str());
}

/// First failing outcome, or pass.
inline Outcome first_failure(std::initializer_list<Outcome> outcomes) {
  for (const auto& o : outcomes) {
    if (!o.ok) return o;
  }
  return {};
}

inline X e(const X& x) { return magnitude(x); }
inline X nx(const Neutrix& n) { return X(n); }
inline bool le(const X& a, const X& b) { return ext_leq(a, b); }
inline bool lt(const X& a, const X& b) { return ext_less(a, b); }
inline std::string cmp_text(const X& a, const X& b) {
  return a.str() + " vs " + b.str() + ": " + std::string(to_string(ext_compare(a, b)));
}

/// A neutrix not above `bound`, drawn from the generator.
inline Neutrix neutrix_at_most(Generator& g, const Neutrix& bound) {
  for (int i = 0; i < 20; ++i) {
    const Neutrix n = g.gen_neutrix();
    if (nx_leq(n, bound)) return n;
  }
  return bound;
}

/// A value whose set lies inside the neutrix `bound`.
inline X inside(Generator& g, const Neutrix& bound) {
  const Neutrix n = neutrix_at_most(g, bound);
  return canonicalize(g.element_of(bound), n);
}

/// Sorts ascending by the external order (insertion sort; no strict weak
/// ordering is assumed).
inline void sort_values(std::vector<X>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && lt(v[j], v[j - 1]); --j) std::swap(v[j], v[j - 1]);
  }
}

inline std::vector<Neutrix> idempotents() {
  return {Neutrix::zero(), Neutrix::oslash(), Neutrix::pound(), Neutrix::max()};
}

}  // namespace solidus::axioms::support
