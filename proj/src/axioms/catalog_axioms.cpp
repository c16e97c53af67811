// Axiom groups 1-6, the completeness scheme and the arithmetical axioms.

#include <algorithm>

#include "solidus/halfline.hpp"
#include "solidus/naturals.hpp"
#include "support.hpp"

namespace solidus::axioms {

using namespace support;

namespace {

using K = InputKind;

std::vector<CheckDef> addition() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.add_assoc", "x+(y+z) = (x+y)+z",
               {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) { return same(s[0] + (s[1] + s[2]), (s[0] + s[1]) + s[2], "x+(y+z) = (x+y)+z"); },
               {}, {}});
  c.push_back({"axiom.add_comm", "x+y = y+x", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) { return same(s[0] + s[1], s[1] + s[0], "x+y = y+x"); }, {}, {}});
  c.push_back({"axiom.add_neutral", "x+e(x) = x and (x+f = x -> e(x)+f = e(x))",
               {{"x", K::External}, {"f", K::External}},
               [](const Sample& s) {
                 const X& x = s[0];
                 const X& f = s[1];
                 return first_failure({same(x + e(x), x, "x + e(x) = x"),
                                       require(!(x + f == x) || e(x) + f == e(x), "x+f = x -> e(x)+f = e(x)",
                                               "x+f = " + (x + f).str() + ", e(x)+f = " + (e(x) + f).str())});
               },
               [](Generator& g) {
                 X x = g.gen_external();
                 X f = g.chance(0.5) ? inside(g, x.nx()) : g.gen_external();
                 return Sample{x, f};
               },
               {}});
  c.push_back({"axiom.add_symmetric", "x + s(x) = e(x) and e(s(x)) = e(x)", {{"x", K::External}},
               [](const Sample& s) {
                 const X& x = s[0];
                 return first_failure({same(x + (-x), e(x), "x + (-x) = e(x)"), same(e(-x), e(x), "e(-x) = e(x)")});
               },
               {}, {}});
  c.push_back({"axiom.add_magnitude", "e(x+y) = e(x) or e(x+y) = e(y)", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) {
                 const X m = e(s[0] + s[1]);
                 return require(m == e(s[0]) || m == e(s[1]), "e(x+y) in {e(x), e(y)}",
                                "e(x+y) = " + m.str() + ", e(x) = " + e(s[0]).str() + ", e(y) = " + e(s[1]).str());
               },
               {}, {}});
  return c;
}

std::vector<CheckDef> multiplication() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.mul_assoc", "x(yz) = (xy)z", {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) { return same(s[0] * (s[1] * s[2]), (s[0] * s[1]) * s[2], "x(yz) = (xy)z"); },
               {}, {}});
  c.push_back({"axiom.mul_comm", "xy = yx", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) { return same(s[0] * s[1], s[1] * s[0], "xy = yx"); }, {}, {}});
  c.push_back({"axiom.mul_unity", "x u(x) = x and (xv = x -> u(x)v = u(x)) for x != e(x)",
               {{"x", K::Zeroless}, {"v", K::External}},
               [](const Sample& s) {
                 const X& x = s[0];
                 const X& v = s[1];
                 const X u = unity(x);
                 return first_failure({same(x * u, x, "x u(x) = x"),
                                       require(!(x * v == x) || u * v == u, "xv = x -> u(x)v = u(x)",
                                               "xv = " + (x * v).str() + ", u(x)v = " + (u * v).str())});
               },
               [](Generator& g) {
                 X x = g.gen_zeroless();
                 const Neutrix un = unity(x).nx();
                 X v = g.chance(0.6) ? X(1) + inside(g, un) : g.gen_external();
                 return Sample{x, v};
               },
               {}});
  c.push_back({"axiom.mul_inverse", "x d(x) = u(x) and u(d(x)) = u(x) for x != e(x)", {{"x", K::Zeroless}},
               [](const Sample& s) {
                 const X& x = s[0];
                 const X d = ext_inv(x);
                 return first_failure({same(x * d, unity(x), "x d(x) = u(x)"), same(unity(d), unity(x), "u(d(x)) = u(x)")});
               },
               {}, {}});
  c.push_back({"axiom.mul_unity_choice", "u(xy) = u(x) or u(xy) = u(y)", {{"x", K::Zeroless}, {"y", K::Zeroless}},
               [](const Sample& s) {
                 const X u = unity(s[0] * s[1]);
                 return require(u == unity(s[0]) || u == unity(s[1]), "u(xy) in {u(x), u(y)}",
                                "u(xy) = " + u.str() + ", u(x) = " + unity(s[0]).str() + ", u(y) = " + unity(s[1]).str());
               },
               {}, {}});
  return c;
}

Sample ordered(Generator& g, std::size_t n, std::size_t sorted_prefix, double p) {
  Sample s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(g.gen_external());
  if (g.chance(p)) {
    std::vector<X> head(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(sorted_prefix));
    sort_values(head);
    std::copy(head.begin(), head.end(), s.begin());
  }
  return s;
}

std::vector<CheckDef> order() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.order_reflexive", "x <= x", {{"x", K::External}},
               [](const Sample& s) { return require(le(s[0], s[0]), "x <= x", cmp_text(s[0], s[0])); }, {}, {}});
  c.push_back({"axiom.order_antisymmetric", "x <= y and y <= x -> x = y", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) {
                 const bool premise = le(s[0], s[1]) && le(s[1], s[0]);
                 return require(!premise || s[0] == s[1], "x = y", cmp_text(s[0], s[1]));
               },
               [](Generator& g) {
                 X x = g.gen_external();
                 if (g.chance(0.4)) return Sample{x, canonicalize(g.member_of(x), x.nx())};
                 if (g.chance(0.3)) return Sample{x, x + inside(g, x.nx())};
                 return Sample{x, g.gen_external()};
               },
               {}});
  c.push_back({"axiom.order_transitive", "x <= y and y <= z -> x <= z",
               {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) {
                 const bool premise = le(s[0], s[1]) && le(s[1], s[2]);
                 return require(!premise || le(s[0], s[2]), "x <= z", cmp_text(s[0], s[2]));
               },
               [](Generator& g) { return ordered(g, 3, 3, 0.7); }, {}});
  c.push_back({"axiom.order_total", "x <= y or y <= x", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) { return require(le(s[0], s[1]) || le(s[1], s[0]), "x <= y or y <= x", cmp_text(s[0], s[1])); },
               {}, {}});
  c.push_back({"axiom.order_add_compat", "x <= y -> x+z <= y+z",
               {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) {
                 return require(!le(s[0], s[1]) || le(s[0] + s[2], s[1] + s[2]), "x+z <= y+z",
                                cmp_text(s[0] + s[2], s[1] + s[2]));
               },
               [](Generator& g) { return ordered(g, 3, 2, 0.8); }, {}});
  c.push_back({"axiom.order_magnitude_bound", "y + e(x) = e(x) -> y <= e(x) and -y <= e(x)",
               {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) {
                 const X m = e(s[0]);
                 const X& y = s[1];
                 const bool premise = y + m == m;
                 return require(!premise || (le(y, m) && le(-y, m)), "y <= e(x) and -y <= e(x)",
                                cmp_text(y, m) + "; " + cmp_text(-y, m));
               },
               [](Generator& g) {
                 X x = g.gen_external();
                 X y = g.chance(0.6) ? inside(g, x.nx()) : g.gen_external();
                 return Sample{x, y};
               },
               {}});
  c.push_back({"axiom.order_mul_compat", "e(x) < x and y <= z -> xy <= xz",
               {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) {
                 const X& x = s[0];
                 const bool premise = lt(e(x), x) && le(s[1], s[2]);
                 return require(!premise || le(x * s[1], x * s[2]), "xy <= xz", cmp_text(x * s[1], x * s[2]));
               },
               [](Generator& g) {
                 Sample s = ordered(g, 3, 0, 0);
                 s[0] = ext_abs(g.gen_zeroless());
                 std::vector<X> yz{s[1], s[2]};
                 if (g.chance(0.8)) sort_values(yz);
                 return Sample{s[0], yz[0], yz[1]};
               },
               {}});
  c.push_back({"axiom.order_amplification", "e(y) <= y <= z -> e(x)y <= e(x)z",
               {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) {
                 const X m = e(s[0]);
                 const X& y = s[1];
                 const X& z = s[2];
                 const bool premise = le(e(y), y) && le(y, z);
                 return require(!premise || le(m * y, m * z), "e(x)y <= e(x)z", cmp_text(m * y, m * z));
               },
               [](Generator& g) {
                 X x = g.gen_external();
                 X y = ext_abs(g.gen_external());
                 X z = g.chance(0.8) ? y + ext_abs(g.gen_external()) : g.gen_external();
                 return Sample{x, y, z};
               },
               {}});
  return c;
}

std::vector<CheckDef> mixed() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.scale_magnitude", "e(x)y is a magnitude", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) {
                 const X w = e(s[0]) * s[1];
                 return same(w, e(w), "e(x)y = e(e(x)y)");
               },
               {}, {}});
  c.push_back({"axiom.product_magnitude", "e(xy) = e(x)y + e(y)x", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) { return same(e(s[0] * s[1]), e(s[0]) * s[1] + e(s[1]) * s[0], "e(xy) = e(x)y + e(y)x"); },
               {}, {}});
  c.push_back({"axiom.unity_magnitude", "e(u(x)) = e(x)/x for x != e(x)", {{"x", K::Zeroless}},
               [](const Sample& s) { return same(e(unity(s[0])), e(s[0]) / s[0], "e(u(x)) = e(x)/x"); }, {}, {}});
  c.push_back({"axiom.distributivity", "xy + xz = x(y+z) + e(x)y + e(x)z",
               {{"x", K::External}, {"y", K::External}, {"z", K::External}},
               [](const Sample& s) {
                 const X& x = s[0];
                 return same(x * s[1] + x * s[2], x * (s[1] + s[2]) + e(x) * s[1] + e(x) * s[2],
                             "xy + xz = x(y+z) + e(x)y + e(x)z");
               },
               {}, {}});
  c.push_back({"axiom.neg_product", "-(xy) = (-x)y", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) { return same(-(s[0] * s[1]), (-s[0]) * s[1], "-(xy) = (-x)y"); }, {}, {}});
  return c;
}

std::vector<CheckDef> existence() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.exists_zero", "m + x = x with m = 0", {{"x", K::External}},
               [](const Sample& s) { return first_failure({same(X(0) + s[0], s[0], "0 + x = x"), same(e(0), X(0), "e(0) = 0")}); },
               {}, {}});
  c.push_back({"axiom.exists_one", "ux = x with u = 1", {{"x", K::External}},
               [](const Sample& s) { return first_failure({same(X(1) * s[0], s[0], "1x = x"), same(e(1), X(0), "e(1) = 0")}); },
               {}, {}});
  c.push_back({"axiom.exists_max", "e(x) + M = M", {{"x", K::External}},
               [](const Sample& s) {
                 const X m = Neutrix::max();
                 return first_failure({same(e(s[0]) + m, m, "e(x) + M = M"), same(e(m), m, "e(M) = M")});
               },
               {}, {}});
  c.push_back({"axiom.exists_neutrix", "some x has e(x) != 0 and e(x) != M", {},
               [](const Sample&) {
                 const X w = Neutrix::oslash();
                 return require(!(e(w) == X(0)) && !(e(w) == X(Neutrix::max())), "e(o) not in {0, M}", e(w).str());
               },
               {}, {}});
  c.push_back({"axiom.decomposition", "x = a + e(x) with e(a) = 0", {{"x", K::External}},
               [](const Sample& s) {
                 const X a = s[0].rep();
                 return first_failure({same(a + e(s[0]), s[0], "a + e(x) = x"), same(e(a), X(0), "e(a) = 0")});
               },
               {}, {}});
  c.push_back({"axiom.neutrix_separation", "magnitudes x < y are separated by a zeroless z",
               {{"x", K::Neutrix}, {"y", K::Neutrix}},
               [](const Sample& s) {
                 if (!lt(s[0], s[1])) return pass();
                 const X z = separate_precise(s[0], s[1]);
                 return require(!(z == e(z)) && lt(s[0], z) && lt(z, s[1]), "z != e(z) and x < z < y", "z = " + z.str());
               },
               [](Generator& g) {
                 std::vector<X> v{g.gen_neutrix(), g.gen_neutrix()};
                 if (g.chance(0.9)) sort_values(v);
                 return Sample{v[0], v[1]};
               },
               {}});
  return c;
}

std::vector<CheckDef> magnitude_product() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.maximal_ideal_product", "xy = x for x the maximal ideal of idempotent y > 1",
               {{"y", K::Idempotent}},
               [](const Sample& s) {
                 const Neutrix& y = s[0].nx();
                 if (!lt(1, s[0])) return pass();
                 const X x = maximal_ideal(y);
                 return first_failure({same(x * s[0], x, "xy = x"), require(is_ideal_of(x.nx(), y) && lt(x, s[0]),
                                                                            "x is an ideal of y below y", x.str())});
               },
               {}, {}});
  c.push_back({"axiom.scale_to_ring", "x = py with p precise and y idempotent", {{"x", K::Neutrix}},
               [](const Sample& s) {
                 const auto [p, y] = decompose(s[0].nx());
                 const X yv = y;
                 return first_failure({same(X(p) * yv, s[0], "x = py"), same(yv * yv, yv, "yy = y"),
                                       require(!p.is_zero(), "p != 0", p.str())});
               },
               {}, {}});
  return c;
}

// The lower halfline of precise x described by h: membership for lower
// halflines, non-membership for upper ones.
bool lower_formula(const Halfline& h, const PreciseNum& x) {
  const bool member = hl_member(h, x);
  return h.side() == Halfline::Side::Lower ? member : !member;
}

CheckDef dedekind() {
  return {"axiom.dedekind_scheme",
          "a lower halfline A of precise x has the form x <= sigma or x < every t with t + e(tau) = tau",
          {{"bound", K::External}},
          [](const Sample& s) {
            const X& b = s[0];
            Generator g(GeneratorConfig{}, 7);
            std::vector<PreciseNum> probes = sample_members(b, 12, g);
            for (int i = 0; i < 8; ++i) probes.push_back(g.gen_precise());
            for (int i = 0; i < 3; ++i) {
              for (const auto side : {Halfline::Side::Lower, Halfline::Side::Upper}) {
                const auto kind = static_cast<Halfline::Kind>(i);
                if ((side == Halfline::Side::Lower && kind == Halfline::Kind::StronglyOpen && b.nx().is_max()) ||
                    (side == Halfline::Side::Upper && kind == Halfline::Kind::Open && b.nx().is_max())) {
                  continue;
                }
                const Halfline h(side, kind, b);
                if (h.side() == Halfline::Side::Upper && h.is_full_domain()) continue;
                // Lower-closure of the formula on probe pairs.
                std::vector<bool> holds;
                for (const auto& x : probes) holds.push_back(lower_formula(h, x));
                for (std::size_t xi = 0; xi < probes.size(); ++xi) {
                  for (std::size_t yi = 0; yi < probes.size(); ++yi) {
                    if (holds[xi] && !holds[yi] && probes[yi] < probes[xi]) {
                      return Outcome{false, "A lower-closed in " + h.str(),
                                     "A(" + probes[xi].str() + ") but not A(" + probes[yi].str() + ")"};
                    }
                  }
                }
                // Witness: sigma = b for the first form, tau = b for the second.
                const Halfline lower = side == Halfline::Side::Lower ? h : hl_complement(h);
                const bool first_form = lower.kind() == Halfline::Kind::Closed ||
                                        (lower.kind() == Halfline::Kind::Open && !b.is_precise());
                const auto witness_members = sample_members(b, 12, g);
                for (std::size_t xi = 0; xi < probes.size(); ++xi) {
                  const PreciseNum& x = probes[xi];
                  bool form;
                  if (first_form) {
                    form = std::any_of(witness_members.begin(), witness_members.end(),
                                       [&](const PreciseNum& y) { return x <= y; });
                  } else {
                    form = std::all_of(witness_members.begin(), witness_members.end(),
                                       [&](const PreciseNum& t) { return x < t; });
                  }
                  if (form != holds[xi]) {
                    return Outcome{false, std::string(first_form ? "A(x) <-> x <= sigma" : "A(x) <-> x below tau") +
                                              " for " + h.str(),
                                   "x = " + x.str() + ", A(x) = " + (holds[xi] ? "true" : "false")};
                  }
                }
              }
            }
            return pass();
          },
          {}, {}};
}

std::vector<CheckDef> arithmetical() {
  std::vector<CheckDef> c;
  c.push_back({"axiom.natural_numbers", "N(0), not N(-1), N(x) -> N(x+1), and no natural strictly between x and x+1",
               {{"x", K::Natural}, {"y", K::Precise}},
               [](const Sample& s) {
                 const PreciseNum& x = s[0].rep();
                 const PreciseNum& y = s[1].rep();
                 const bool between = x < y && y < x + PreciseNum(1);
                 return first_failure({require(is_natural(0) && !is_natural(-1), "N(0) and not N(-1)", "violated"),
                                       require(!is_natural(x) || is_natural(x + PreciseNum(1)), "N(x+1)", (x + PreciseNum(1)).str()),
                                       require(!is_natural(x) || !between || !is_natural(y), "not N(y) for x < y < x+1",
                                               "y = " + y.str()),
                                       require(!is_natural(x) || x == PreciseNum(0) || is_natural(x - PreciseNum(1)),
                                               "N(x-1) for x > 0", (x - PreciseNum(1)).str())});
               },
               [](Generator& g) {
                 const PreciseNum x = g.gen_natural();
                 PreciseNum y = g.gen_precise();
                 const int r = g.uniform(0, 3);
                 if (r == 0) y = x + PreciseNum(Rational(g.uniform(1, 9), 10));
                 if (r == 1) y = x + PreciseNum(RhoPoly::monomial(g.coefficient(), g.exponent(-3, -1)));
                 if (r == 2) y = x + PreciseNum(1) + PreciseNum(RhoPoly::monomial(-1, -1));
                 return Sample{x, y};
               },
               {}});
  c.push_back({"axiom.induction", "induction instances of the curated catalog", {},
               [](const Sample&) {
                 for (const auto& f : induction_catalog()) {
                   const InductionReport r = induction_spotcheck(f.id, 50);
                   const bool ok = r.status == InductionStatus::Pass || r.status == InductionStatus::ExpectedFail;
                   if (!ok) return Outcome{false, f.id + ": " + f.text, std::string(to_string(r.status)) + " " + r.detail};
                 }
                 return pass();
               },
               {}, {}});
  c.push_back({"axiom.archimedean", "0 < x < y -> some natural z has zx > y", {{"x", K::External}, {"y", K::External}},
               [](const Sample& s) {
                 const X& x = s[0];
                 const X& y = s[1];
                 if (!(lt(0, x) && lt(x, y)) || y.nx().is_max()) return pass();
                 const NaturalWitness z = archimedean_witness(x, y);
                 const X zx = X(z.precise()) * x;
                 return require(is_natural(z.precise()) && lt(y, zx), "N(z) and zx > y", "z = " + z.value().str() + ", zx = " + zx.str());
               },
               [](Generator& g) {
                 X x = ext_abs(g.gen_zeroless());
                 X y = x + ext_abs(g.gen_zeroless());
                 if (y.nx().is_max()) y = x + X(g.gen_positive_precise());
                 return Sample{x, y};
               },
               {}});
  return c;
}

}  // namespace

std::vector<CheckDef> axiom_checks() {
  std::vector<CheckDef> all;
  for (auto group : {addition(), multiplication(), order(), mixed(), existence(), magnitude_product()}) {
    for (auto& c : group) all.push_back(std::move(c));
  }
  all.push_back(dedekind());
  for (auto& c : arithmetical()) all.push_back(std::move(c));
  return all;
}

}  // namespace solidus::axioms
