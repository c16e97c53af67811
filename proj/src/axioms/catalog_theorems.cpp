// Theorems about magnitudes, external numbers, halflines and shadows, plus
// the deliberately wrong mutants.

#include <algorithm>
#include <optional>

#include "solidus/error.hpp"
#include "solidus/halfline.hpp"
#include "support.hpp"

namespace solidus::axioms {

using namespace support;

namespace {

using K = InputKind;

const X kOslash = Neutrix::oslash();
const X kPound = Neutrix::pound();
const X kMax = Neutrix::max();

X inv(const X& x) { return ext_inv(x); }

std::vector<CheckDef> oslash_pound() {
  std::vector<CheckDef> c;
  c.push_back({"thm.zerobar_one_pound", "0 < o < 1 < L < M", {},
               [](const Sample&) {
                 const std::vector<X> chain{X(0), kOslash, X(1), kPound, kMax};
                 for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                   if (!lt(chain[i], chain[i + 1])) return Outcome{false, "0 < o < 1 < L < M", cmp_text(chain[i], chain[i + 1])};
                 }
                 return pass();
               },
               {}, {}});
  c.push_back({"thm.no_magnitude_between", "no magnitude n with o < n < L", {{"n", K::Neutrix}},
               [](const Sample& s) {
                 return require(!(lt(kOslash, s[0]) && lt(s[0], kPound)), "not (o < n < L)", s[0].str());
               },
               {}, {}});
  c.push_back({"thm.lemma_lp.1", "L < p iff 1/p < o", {{"p", K::PositivePrecise}},
               [](const Sample& s) {
                 return require(lt(kPound, s[0]) == lt(inv(s[0]), kOslash), "L < p iff 1/p < o", "1/p = " + inv(s[0]).str());
               },
               {}, {}});
  c.push_back({"thm.lemma_lp.2", "o < p iff 1/p < L", {{"p", K::PositivePrecise}},
               [](const Sample& s) {
                 return require(lt(kOslash, s[0]) == lt(inv(s[0]), kPound), "o < p iff 1/p < L", "1/p = " + inv(s[0]).str());
               },
               {}, {}});
  c.push_back({"thm.lemma_lp.3", "p < o -> sqrt(p) < o", {{"sqrt_p", K::PositivePrecise}},
               [](const Sample& s) {
                 const X p = s[0] * s[0];
                 return require(!lt(p, kOslash) || lt(s[0], kOslash), "sqrt(p) < o", "p = " + p.str());
               },
               {}, {}});
  c.push_back({"thm.lemma_lp.4", "L < p -> L < sqrt(p)", {{"sqrt_p", K::PositivePrecise}},
               [](const Sample& s) {
                 const X p = s[0] * s[0];
                 return require(!lt(kPound, p) || lt(kPound, s[0]), "L < sqrt(p)", "p = " + p.str());
               },
               {}, {}});
  c.push_back({"thm.lemma_lp.5", "o < p < L -> o < p^2 < L", {{"p", K::PositivePrecise}},
               [](const Sample& s) {
                 const X p2 = s[0] * s[0];
                 const bool premise = lt(kOslash, s[0]) && lt(s[0], kPound);
                 return require(!premise || (lt(kOslash, p2) && lt(p2, kPound)), "o < p^2 < L", "p^2 = " + p2.str());
               },
               [](Generator& g) {
                 X p = g.gen_positive_precise();
                 if (g.chance(0.6)) p = X(g.gen_limited_precise()).rep().abs() + PreciseNum(g.uniform(1, 5));
                 return Sample{p};
               },
               {}});
  c.push_back({"thm.lemma_lp.6", "o = sup{p : L < 1/p} and L = inf{1/p : p < o}",
               {{"p", K::PositivePrecise}, {"n", K::Neutrix}},
               [](const Sample& s) {
                 const X& p = s[0];
                 const X& n = s[1];
                 // Bounds.
                 if (lt(kPound, inv(p)) && !le(p, kOslash)) return Outcome{false, "p <= o when L < 1/p", "p = " + p.str()};
                 if (lt(p, kOslash) && !le(kPound, inv(p))) return Outcome{false, "L <= 1/p when p < o", "p = " + p.str()};
                 // Nothing smaller than o bounds the set, nothing larger than L.
                 if (lt(n, kOslash)) {
                   const X w = separate_precise(n, kOslash);
                   if (!(lt(kPound, inv(w)) && lt(n, w))) return Outcome{false, "some p with L < 1/p exceeds n", "p = " + w.str()};
                 }
                 if (lt(kPound, n)) {
                   const X w = separate_precise(kPound, n);
                   const X q = inv(w);
                   if (!(lt(q, kOslash) && lt(inv(q), n))) return Outcome{false, "some q < o has 1/q below n", "q = " + q.str()};
                 }
                 return pass();
               },
               {}, {}});
  c.push_back({"thm.oslash_oslash", "oo = o", {}, [](const Sample&) { return same(kOslash * kOslash, kOslash, "oo = o"); }, {}, {}});
  c.push_back({"thm.pound_pound", "LL = L", {}, [](const Sample&) { return same(kPound * kPound, kPound, "LL = L"); }, {}, {}});
  c.push_back({"thm.oslash_pound", "oL = o", {}, [](const Sample&) { return same(kOslash * kPound, kOslash, "oL = o"); }, {}, {}});
  return c;
}

Outcome product_idempotents_outcome(const Neutrix& a, const Neutrix& b,
                                    Neutrix (*mul)(const Neutrix&, const Neutrix&)) {
  const Neutrix e = nx_leq(a, b) ? a : b;
  const Neutrix f = nx_leq(a, b) ? b : a;
  Neutrix expected = f;
  if (lt(nx(f), 1) || (lt(1, nx(f)) && nx_leq(e, maximal_ideal(f)))) expected = e;
  const Neutrix got = mul(a, b);
  return require(got == expected, a.str() + " * " + b.str() + " = " + expected.str(), got.str());
}

Outcome pf_or_eq_outcome(const Neutrix& e, const Neutrix& f) {
  const X ev = e;
  const X fv = f;
  const X ef = ev * fv;
  if (!(ef == fv * ev)) return {false, "ef = fe", ef.str()};
  if (e.is_zero() || f.is_zero()) return same(ef, X(0), "ef = 0");
  const auto [p, i] = decompose(e);
  const auto [q, j] = decompose(f);
  if (p.sign() <= 0 || q.sign() <= 0) return {false, "positive scale factors", p.str() + ", " + q.str()};
  const Neutrix ij = nx_mul(i, j);
  if (ij == j) return same(ef, X(p) * fv, "ef = pf with p = " + p.str());
  if (ij == i) return same(ef, X(q) * ev, "ef = qe with q = " + q.str());
  return {false, "IJ in {I, J}", ij.str()};
}

std::vector<Sample> idempotent_pairs() {
  std::vector<Sample> out;
  for (const auto& a : idempotents()) {
    for (const auto& b : idempotents()) out.push_back({X(a), X(b)});
  }
  return out;
}

std::vector<CheckDef> ideals() {
  std::vector<CheckDef> c;
  c.push_back({"thm.max_ideal", "the maximal ideal of J is sup{1/w : J < |w|}",
               {{"w", K::NonzeroPrecise}, {"n", K::Neutrix}},
               [](const Sample& s) {
                 if (!(maximal_ideal(Neutrix::pound()) == Neutrix::oslash()) || !(maximal_ideal(Neutrix::max()) == Neutrix::zero())) {
                   return Outcome{false, "I(L) = o and I(M) = 0", "table mismatch"};
                 }
                 const X w = X(s[0].rep().abs());
                 const X& n = s[1];
                 for (const auto& jn : {Neutrix::pound(), Neutrix::max()}) {
                   const X j = jn;
                   const X i = maximal_ideal(jn);
                   if (lt(j, w) && !lt(inv(w), i)) return Outcome{false, "1/w < I for J < |w|", "J = " + j.str() + ", w = " + w.str()};
                   if (lt(n, i)) {
                     const X w2 = inv(separate_precise(n, i));
                     if (!(lt(j, w2) && lt(n, inv(w2)))) {
                       return Outcome{false, "some w with J < |w| has n < 1/w", "J = " + j.str() + ", w = " + w2.str()};
                     }
                   }
                   if (!(is_ideal_of(i.nx(), jn) && lt(i, j))) return Outcome{false, "I is an ideal of J below J", i.str()};
                   if (is_ideal_of(n.nx(), jn) && !(le(n, i) || n == j)) {
                     return Outcome{false, "ideals of J are <= I or = J", "J = " + j.str() + ", ideal " + n.str()};
                   }
                   if (!jn.is_max() && !(lt(0, i) && le(i, kOslash))) return Outcome{false, "0 < I <= o", i.str()};
                 }
                 return pass();
               },
               [](Generator& g) {
                 PreciseNum w = RhoPoly::monomial(g.coefficient(), g.exponent(-6, 6));
                 if (g.chance(0.5)) w = w + g.gen_precise();
                 if (w.is_zero()) w = PreciseNum(1);
                 return Sample{w, g.gen_neutrix()};
               },
               {}});
  c.push_back({"thm.product_idempotents", "ef = e if f < 1 or e <= I(f), otherwise ef = f",
               {{"e", K::Idempotent}, {"f", K::Idempotent}},
               [](const Sample& s) {
                 return first_failure({product_idempotents_outcome(s[0].nx(), s[1].nx(), nx_mul),
                                       pf_or_eq_outcome(s[0].nx(), s[1].nx())});
               },
               {}, idempotent_pairs});
  c.push_back({"thm.unicity_idempotent", "pI = qJ != 0 with I, J idempotent -> I = J",
               {{"p", K::NonzeroPrecise}, {"q", K::NonzeroPrecise}},
               [](const Sample& s) {
                 for (const auto& i : idempotents()) {
                   for (const auto& j : idempotents()) {
                     const Neutrix a = nx_scale(s[0].rep(), i);
                     const Neutrix b = nx_scale(s[1].rep(), j);
                     if (a == b && !a.is_zero() && !(i == j)) return Outcome{false, "I = J", "I = " + i.str() + ", J = " + j.str()};
                   }
                 }
                 return pass();
               },
               [](Generator& g) {
                 const PreciseNum p = g.gen_nonzero_precise();
                 const PreciseNum q = g.chance(0.5) ? p * PreciseNum(g.coefficient()) : g.gen_nonzero_precise();
                 return Sample{p, q};
               },
               {}});
  c.push_back({"thm.pf_or_eq", "ef = pf or ef = qe with p, q positive precise",
               {{"e", K::ScaledNeutrix}, {"f", K::ScaledNeutrix}},
               [](const Sample& s) { return pf_or_eq_outcome(s[0].nx(), s[1].nx()); }, {}, {}});
  c.push_back({"thm.max_ideal_order", "for precise p > 0: pJ < I if p < I; pJ = J iff I < p < J; J < pI if J < p; pI = I iff I < p < J",
               {{"p", K::PositivePrecise}, {"J", K::Idempotent}},
               [](const Sample& s) {
                 const X& p = s[0];
                 const X& j = s[1];
                 if (!lt(1, j)) return pass();
                 const X i = maximal_ideal(j.nx());
                 const bool between = lt(i, p) && lt(p, j);
                 return first_failure({require(!lt(p, i) || lt(p * j, i), "pJ < I", (p * j).str()),
                                       require(!lt(i, p) || le(j, p * j), "J <= pJ", (p * j).str()),
                                       require((p * j == j) == between, "pJ = J iff I < p < J", (p * j).str()),
                                       require(!lt(j, p) || lt(j, p * i), "J < pI", (p * i).str()),
                                       require(!lt(p, j) || le(p * i, i), "pI <= I", (p * i).str()),
                                       require((p * i == i) == between, "pI = I iff I < p < J", (p * i).str()),
                                       require(!(p * i == j), "pI != J", (p * i).str())});
               },
               {}, {}});
  c.push_back({"thm.consistency_order", "p < I < q -> pJ < IJ < qJ; p < J < q -> Ip <= IJ < Iq",
               {{"p", K::PositivePrecise}, {"q", K::PositivePrecise}, {"J", K::Idempotent}},
               [](const Sample& s) {
                 const X& p = s[0];
                 const X& q = s[1];
                 const X& j = s[2];
                 if (!lt(1, j)) return pass();
                 const X i = maximal_ideal(j.nx());
                 const X ij = i * j;
                 const bool part1 = !(lt(p, i) && lt(i, q)) || (lt(p * j, ij) && lt(ij, q * j));
                 const bool part2 = !(lt(p, j) && lt(j, q)) || (le(i * p, ij) && lt(ij, i * q));
                 return first_failure({require(part1, "pJ < IJ < qJ", (p * j).str() + ", " + ij.str() + ", " + (q * j).str()),
                                       require(part2, "Ip <= IJ < Iq", (i * p).str() + ", " + ij.str() + ", " + (i * q).str())});
               },
               [](Generator& g) {
                 std::vector<X> v{g.gen_positive_precise(), g.gen_positive_precise()};
                 sort_values(v);
                 return Sample{v[0], v[1], X(g.gen_idempotent())};
               },
               {}});
  c.push_back({"thm.consistency_sup", "I = IJ = sup{pJ : |p| < I} = max{Iq : |q| < J}; J = inf{pI : J < p} = min{qJ : I < q}",
               {{"p", K::NonzeroPrecise}, {"n", K::Neutrix}, {"J", K::Idempotent}},
               [](const Sample& s) {
                 const X p = X(s[0].rep().abs());
                 const X& n = s[1];
                 const X& j = s[2];
                 if (!lt(1, j)) return pass();
                 const X i = maximal_ideal(j.nx());
                 const X ij = i * j;
                 if (!(ij == i)) return Outcome{false, "IJ = I", ij.str()};
                 // sup{pJ : |p| < I} = IJ: an upper bound, approached from below.
                 if (lt(p, i) && !le(p * j, ij)) return Outcome{false, "pJ <= IJ for |p| < I", (p * j).str()};
                 if (lt(n, i)) {
                   const X w = separate_precise(n, i);
                   if (!(lt(w, i) && lt(n, w * j))) return Outcome{false, "some |p| < I has n < pJ", "p = " + w.str()};
                 }
                 // max{Iq : |q| < J} = IJ, attained at q = 1.
                 if (lt(p, j) && !le(i * p, ij)) return Outcome{false, "Iq <= IJ for |q| < J", (i * p).str()};
                 if (!(i * X(1) == ij)) return Outcome{false, "I1 = IJ", (i * X(1)).str()};
                 // inf{pI : J < p} = J: a lower bound, approached from above.
                 if (lt(j, p) && !le(j, p * i)) return Outcome{false, "J <= pI for J < p", (p * i).str()};
                 if (lt(j, n)) {
                   const X w = separate_precise(j, n);
                   if (!(lt(j, w) && lt(w * i, n))) return Outcome{false, "some p > J has pI < n", "p = " + w.str()};
                 }
                 // min{qJ : I < q} = J, attained at q = 1.
                 if (lt(i, p) && !le(j, p * j)) return Outcome{false, "J <= qJ for I < q", (p * j).str()};
                 return pass();
               },
               {}, {}});
  return c;
}

std::vector<CheckDef> externals() {
  std::vector<CheckDef> c;
  c.push_back({"thm.formula_dist_total", "ab + ag = a(b+g) + Ab + Ag",
               {{"alpha", K::External}, {"beta", K::External}, {"gamma", K::External}},
               [](const Sample& s) {
                 const X& a = s[0];
                 const X ap = a.rep();
                 const X am = e(a);
                 const X lhs = a * s[1] + a * s[2];
                 return first_failure({same(lhs, a * (s[1] + s[2]) + am * s[1] + am * s[2], "ab + ag = a(b+g) + Ab + Ag"),
                                       same(lhs, ap * s[1] + ap * s[2] + am * s[1] + am * s[2], "ab + ag = ab + ag + Ab + Ag (a precise)"),
                                       same(a * (s[1] + s[2]), ap * (s[1] + s[2]) + am * (s[1] + s[2]), "(a+A)(b+g) = a(b+g) + A(b+g)")});
               },
               {}, {}});
  c.push_back({"thm.subdistributivity", "a(b+g) is contained in ab + ag",
               {{"alpha", K::External}, {"beta", K::External}, {"gamma", K::External}},
               [](const Sample& s) {
                 const X whole = s[0] * (s[1] + s[2]);
                 const X split = s[0] * s[1] + s[0] * s[2];
                 if (!ext_subset(whole, split)) return Outcome{false, "a(b+g) in ab+ag", whole.str() + " vs " + split.str()};
                 Generator g(GeneratorConfig{}, 11);
                 const auto xs = sample_members(s[0], 4, g);
                 const auto ys = sample_members(s[1], 4, g);
                 const auto zs = sample_members(s[2], 4, g);
                 for (std::size_t i = 0; i < xs.size(); ++i) {
                   for (const auto& y : ys) {
                     for (const auto& z : zs) {
                       const PreciseNum v = xs[i] * (y + z);
                       if (!ext_member(v, whole)) return Outcome{false, "x(y+z) in a(b+g)", v.str()};
                       const PreciseNum w = xs[i] * y + xs[(i + 1) % xs.size()] * z;
                       if (!ext_member(w, split)) return Outcome{false, "xy + x'z in ab+ag", w.str()};
                     }
                   }
                 }
                 return pass();
               },
               {}, {}});
  c.push_back({"thm.tricotomia", "a and b are disjoint or one contains the other",
               {{"alpha", K::External}, {"beta", K::External}},
               [](const Sample& s) {
                 const X& a = s[0];
                 const X& b = s[1];
                 const bool meet = nx_contains(nx_add(a.nx(), b.nx()), a.rep() - b.rep());
                 const bool ab = ext_subset(a, b);
                 const bool ba = ext_subset(b, a);
                 const bool eq = a == b;
                 const int cases = int(!meet) + int(ab && !eq) + int(ba && !eq) + int(eq);
                 if (cases != 1 || meet != (ab || ba)) {
                   return Outcome{false, "exactly one of disjoint, a < b as sets, b < a as sets, a = b",
                                  std::string("meet=") + (meet ? "1" : "0") + " a<=b=" + (ab ? "1" : "0") + " b<=a=" + (ba ? "1" : "0")};
                 }
                 if (!meet) {
                   // Disjoint sets lie entirely on one side of each other.
                   Generator g(GeneratorConfig{}, 13);
                   const bool below = lt(a, b);
                   for (const auto& x : sample_members(a, 6, g)) {
                     for (const auto& y : sample_members(b, 6, g)) {
                       if ((x < y) != below) return Outcome{false, "members ordered like the sets", x.str() + " vs " + y.str()};
                     }
                   }
                 }
                 return pass();
               },
               [](Generator& g) {
                 X a = g.gen_external();
                 const int r = g.uniform(0, 3);
                 if (r == 0) return Sample{a, canonicalize(g.member_of(a), neutrix_at_most(g, a.nx()))};
                 if (r == 1) return Sample{a, X(g.member_of(a)) + g.gen_neutrix()};
                 if (r == 2) return Sample{a, canonicalize(g.member_of(a), a.nx())};
                 return Sample{a, g.gen_external()};
               },
               {}});
  c.push_back({"thm.order_sampling", "a <= b iff every sampled x in a has a sampled y in b with x <= y",
               {{"alpha", K::External}, {"beta", K::External}},
               [](const Sample& s) {
                 Generator g(GeneratorConfig{}, 17);
                 const auto xs = sample_members(s[0], 20, g);
                 const auto ys = sample_members(s[1], 20, g);
                 const bool sampled = std::all_of(xs.begin(), xs.end(), [&](const PreciseNum& x) {
                   return std::any_of(ys.begin(), ys.end(), [&](const PreciseNum& y) { return x <= y; });
                 });
                 return require(sampled == le(s[0], s[1]), "ext_compare agrees with sampled order",
                                cmp_text(s[0], s[1]) + ", sampled <= is " + (sampled ? "true" : "false"));
               },
               [](Generator& g) {
                 X a = g.gen_external();
                 const int r = g.uniform(0, 4);
                 if (r == 0) return Sample{a, canonicalize(g.member_of(a), g.gen_neutrix())};
                 if (r == 1) return Sample{a, a + inside(g, a.nx())};
                 if (r == 2) return Sample{a, canonicalize(g.member_of(a), a.nx())};
                 return Sample{a, g.gen_external()};
               },
               {}});
  c.push_back({"thm.minkowski_add", "sums of members lie in the sum", {{"alpha", K::External}, {"beta", K::External}},
               [](const Sample& s) {
                 const CheckReport r = minkowski_oracle(s[0], s[1], MinkowskiOp::Add, 20);
                 if (r.passed()) return pass();
                 return Outcome{false, r.failures.front().expected, r.failures.front().observed};
               },
               {}, {}});
  c.push_back({"thm.minkowski_mul", "products of members lie in the product", {{"alpha", K::External}, {"beta", K::External}},
               [](const Sample& s) {
                 const CheckReport r = minkowski_oracle(s[0], s[1], MinkowskiOp::Mul, 20);
                 if (r.passed()) return pass();
                 return Outcome{false, r.failures.front().expected, r.failures.front().observed};
               },
               {}, {}});
  c.push_back({"thm.lemma_rational", "every external number is q + N with q a finite rho-polynomial",
               {{"x", K::External}, {"r", K::Precise}, {"n", K::Neutrix}},
               [](const Sample& s) {
                 const X& x = s[0];
                 if (!x.is_precise() && !x.rep().is_polynomial()) return Outcome{false, "polynomial representative", x.str()};
                 const Neutrix& n = x.nx();
                 if (n.is_scaled()) {
                   for (const auto& [exp, coef] : x.rep().num().terms()) {
                     const bool absorbed = n.kind() == Neutrix::Kind::Oslash ? exp < n.exponent() : exp <= n.exponent();
                     if (absorbed) return Outcome{false, "no absorbed term", x.str()};
                   }
                 }
                 Generator g(GeneratorConfig{}, 19);
                 for (int i = 0; i < 4; ++i) {
                   const X moved = canonicalize(g.member_of(x), n);
                   if (!(moved == x)) return Outcome{false, "independent of the representative", moved.str()};
                 }
                 const X y = canonicalize(s[1].rep(), s[2].nx());
                 if (!ext_member(s[1].rep(), y)) return Outcome{false, "r in canonical(r + n)", y.str()};
                 if (!y.is_precise() && !y.rep().is_polynomial()) return Outcome{false, "polynomial representative", y.str()};
                 return pass();
               },
               {}, {}});
  c.push_back({"thm.unity_product", "u(xy) = u(x)u(y)", {{"x", K::Zeroless}, {"y", K::Zeroless}},
               [](const Sample& s) { return same(unity(s[0] * s[1]), unity(s[0]) * unity(s[1]), "u(xy) = u(x)u(y)"); },
               {}, {}});
  c.push_back({"thm.inverse_contract", "b d(b) = u(b) and e(u(b)) = B/b", {{"beta", K::Zeroless}},
               [](const Sample& s) {
                 const X& b = s[0];
                 return first_failure({same(b * inv(b), unity(b), "b * inv(b) = u(b)"),
                                       same(e(unity(b)), nx(nx_scale(b.rep().inverse(), b.nx())), "e(u(b)) = B/b")});
               },
               {}, {}});
  c.push_back({"thm.shadow_field", "shadows p + o of limited precise p form an ordered field",
               {{"x", K::LimitedPrecise}, {"y", K::LimitedPrecise}, {"z", K::LimitedPrecise}},
               [](const Sample& s) {
                 const X x = shadow(s[0]);
                 const X y = shadow(s[1]);
                 const X z = shadow(s[2]);
                 const X zero = kOslash;
                 const X one = X(1) + kOslash;
                 const bool closed = (x + y).nx() == Neutrix::oslash() && (x * y).nx() == Neutrix::oslash();
                 Outcome inverse = pass();
                 if (!(x == zero)) inverse = same(x * shadow(x.rep().inverse()), one, "x * x^-1 = 1 + o");
                 const bool ordered = !(lt(zero, x) && lt(zero, y)) || lt(zero, x * y);
                 return first_failure({require(closed, "sums and products are shadows", (x + y).str() + ", " + (x * y).str()),
                                       same(shadow(s[0] + s[1]), x + y, "shadow(p+q) = shadow(p) + shadow(q)"),
                                       same(shadow(s[0] * s[1]), x * y, "shadow(pq) = shadow(p) shadow(q)"),
                                       same(x + zero, x, "x + o = x"), same(x + (-x), zero, "x - x = o"),
                                       same(x * one, x, "x(1+o) = x"), inverse,
                                       same(x * (y + z), x * y + x * z, "x(y+z) = xy + xz"),
                                       same(x * (y * z), (x * y) * z, "x(yz) = (xy)z"),
                                       require(le(x, y) || le(y, x), "x <= y or y <= x", cmp_text(x, y)),
                                       require(!le(x, y) || le(x + z, y + z), "x+z <= y+z", cmp_text(x + z, y + z)),
                                       require(ordered, "0 < x, 0 < y -> 0 < xy", (x * y).str())});
               },
               {}, {}});
  return c;
}

std::vector<X> probes_near(const X& b, Generator& g) {
  std::vector<X> out;
  for (const auto& p : sample_members(b, 8, g)) out.emplace_back(p);
  out.push_back(b);
  out.push_back(e(b));
  out.push_back(b + kOslash);
  out.push_back(b + kPound);
  out.push_back(b + g.gen_external());
  for (int i = 0; i < 6; ++i) out.push_back(g.gen_external());
  return out;
}

std::vector<CheckDef> halflines() {
  std::vector<CheckDef> c;
  c.push_back({"thm.three_cases", "for a non-precise bound b, (-inf,b], (-inf,b) and (-inf,b[[ are distinct",
               {{"b", K::External}},
               [](const Sample& s) {
                 const X& b = s[0];
                 if (b.is_precise() || b.nx().is_max()) return pass();
                 const Halfline closed = Halfline::lower(Halfline::Kind::Closed, b);
                 const Halfline open = Halfline::lower(Halfline::Kind::Open, b);
                 const Halfline strong = Halfline::lower(Halfline::Kind::StronglyOpen, b);
                 const X rep = b.rep();
                 if (!(hl_member(closed, b) && !hl_member(open, b))) return Outcome{false, "b separates closed from open", b.str()};
                 if (!(hl_member(open, rep) && !hl_member(strong, rep))) return Outcome{false, "rep(b) separates open from strongly open", rep.str()};
                 if (hl_member(strong, b)) return Outcome{false, "b separates closed from strongly open", b.str()};
                 Generator g(GeneratorConfig{}, 23);
                 for (const auto& x : probes_near(b, g)) {
                   const bool in_strong = hl_member(strong, x);
                   const bool in_open = hl_member(open, x);
                   if ((in_strong && !in_open) || (in_open && !hl_member(closed, x))) {
                     return Outcome{false, "strongly open in open in closed", "x = " + x.str()};
                   }
                 }
                 return pass();
               },
               [](Generator& g) { return Sample{g.gen_zeroless().is_precise() ? X(g.gen_neutrix()) : g.gen_zeroless()}; },
               {}});
  c.push_back({"thm.dedekind_precise", "for a precise bound, open and strongly open lower halflines coincide",
               {{"b", K::Precise}},
               [](const Sample& s) {
                 const X& b = s[0];
                 Generator g(GeneratorConfig{}, 29);
                 const Halfline open = Halfline::lower(Halfline::Kind::Open, b);
                 const Halfline strong = Halfline::lower(Halfline::Kind::StronglyOpen, b);
                 for (const auto& x : probes_near(b, g)) {
                   if (hl_member(open, x) != hl_member(strong, x)) return Outcome{false, open.str() + " = " + strong.str(), "x = " + x.str()};
                 }
                 return pass();
               },
               {}, {}});
  c.push_back({"thm.halfline_complement", "a halfline and its complement partition the external numbers",
               {{"b", K::External}},
               [](const Sample& s) {
                 Generator g(GeneratorConfig{}, 31);
                 for (const auto side : {Halfline::Side::Lower, Halfline::Side::Upper}) {
                   for (int k = 0; k < 3; ++k) {
                     const auto kind = static_cast<Halfline::Kind>(k);
                     std::optional<Halfline> h;
                     try {
                       h.emplace(side, kind, s[0]);
                     } catch (const Error&) {
                       continue;
                     }
                     if (h->is_full_domain()) continue;
                     const Halfline co = hl_complement(*h);
                     if (!(hl_complement(co) == *h)) return Outcome{false, "complement is an involution", co.str()};
                     for (const auto& x : probes_near(s[0], g)) {
                       if (hl_member(*h, x) == hl_member(co, x)) return Outcome{false, "exactly one of " + h->str() + ", " + co.str(), "x = " + x.str()};
                     }
                   }
                 }
                 return pass();
               },
               {}, {}});
  c.push_back({"thm.separation", "x < y has a precise p between; x below a hole of tau has p below tau",
               {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) {
                 const X& x = s[0];
                 const X& y = s[1];
                 if (lt(x, y)) {
                   const X p = separate_precise(x, y);
                   if (!(lt(x, p) && lt(p, y))) return Outcome{false, "x < p < y", "p = " + p.str()};
                 }
                 const Halfline hole = Halfline::lower(Halfline::Kind::StronglyOpen, y.nx().is_max() ? X(0) : y);
                 if (!y.nx().is_max() && hl_member(hole, x)) {
                   const X p = separate_from_hole(x, y);
                   if (!(lt(x, p) && hl_member(hole, p))) return Outcome{false, "x < p and p + e(tau) < tau", "p = " + p.str()};
                 }
                 return pass();
               },
               [](Generator& g) {
                 std::vector<X> v{g.gen_external(), g.gen_external()};
                 if (g.chance(0.8)) sort_values(v);
                 return Sample{v[0], v[1]};
               },
               {}});
  return c;
}

// nx_mul with the wrong entry oL = L.
Neutrix mutant_mul(const Neutrix& a, const Neutrix& b) {
  const bool pair = (a == Neutrix::oslash() && b == Neutrix::pound()) || (a == Neutrix::pound() && b == Neutrix::oslash());
  return pair ? Neutrix::pound() : nx_mul(a, b);
}

}  // namespace

std::vector<CheckDef> theorem_checks() {
  std::vector<CheckDef> all;
  for (auto group : {oslash_pound(), ideals(), externals(), halflines()}) {
    for (auto& c : group) all.push_back(std::move(c));
  }
  return all;
}

std::vector<CheckDef> mutant_checks() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.distributivity_naive", "xy + xz = x(y+z)",
               {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) { return same(s[0] * s[1] + s[0] * s[2], s[0] * (s[1] + s[2]), "xy + xz = x(y+z)"); },
               {}, {}});
  c.push_back({"mutant.nx_mul_oslash_pound", "product table of idempotents with oL = L",
               {{"e", K::Idempotent}, {"f", K::Idempotent}},
               [](const Sample& s) { return product_idempotents_outcome(s[0].nx(), s[1].nx(), mutant_mul); }, {},
               idempotent_pairs});
  return c;
}

}  // namespace solidus::axioms
