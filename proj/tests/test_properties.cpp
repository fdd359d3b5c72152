/*
   Copyright 2026 The bicanon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Randomized property suites. Every generator is seeded, so failures
// reproduce.

#include <gtest/gtest.h>

#include <bicanon/bicanon.hpp>

#include "random.hpp"

using namespace bicanon;
using bicanon::testing::Gen;
using bicanon::testing::kInstances;
using bicanon::testing::var;

namespace {

const std::vector<std::size_t> &yz() {
    static const std::vector<std::size_t> v = {var("y"), var("z")};
    return v;
}

RatFunc random_ratfunc(Gen &g) { return RatFunc(g.nonzero_poly(yz(), 2, 2), g.nonzero_poly(yz(), 2, 2)); }

/// Polynomial over a monomial: keeps composite degrees small.
RatFunc random_laurent(Gen &g) {
    Exponent e(VarTable::standard()->size(), 0);
    for (auto v : yz()) e[v] = static_cast<std::uint16_t>(g.integer(0, 1));
    return RatFunc(g.nonzero_poly(yz(), 2, 2), MPoly::monomial(VarTable::standard(), e, 1));
}

Mobius random_mobius(Gen &g) {
    for (;;) {
        const FieldElem a = g.integer(-3, 3), b = g.integer(-3, 3), c = g.integer(-3, 3), d = g.integer(-3, 3);
        if (!(a * d - b * c).is_zero()) return Mobius(a, b, c, d);
    }
}

Mobius finite_order_mobius(Gen &g) {
    const FieldElem s = FieldElem::zeta_pow(g.integer(1, 7));
    return g.integer(0, 1) ? Mobius::scale(s) : Mobius::reciprocal(s);
}

} // namespace

TEST(FieldProperties, Axioms) {
    Gen g(1001);
    for (int n = 0; n < kInstances; ++n) {
        const FieldElem a = g.field(), b = g.field(), c = g.field();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        const FieldElem u = g.nonzero_field();
        EXPECT_EQ(u * u.inverse(), FieldElem(1));
        EXPECT_EQ((a / u) * u, a);
        EXPECT_EQ(FieldElem::decode(a.encode()), a);
    }
}

TEST(FieldProperties, SquareRootsSquareBack) {
    Gen g(1002);
    for (int n = 0; n < kInstances; ++n) {
        const FieldElem a = g.field();
        const auto r = (a * a).sqrt();
        ASSERT_TRUE(r);
        EXPECT_EQ(*r * *r, a * a);
    }
}

TEST(FieldProperties, RootOfUnityOrderOfPowers) {
    Gen g(1003);
    for (int n = 0; n < kInstances; ++n) {
        const FieldElem a = FieldElem::zeta_pow(g.integer(0, 7)) * (g.integer(0, 1) ? FieldElem(1) : FieldElem(-1));
        const long k = g.integer(-10, 10);
        const auto oa = root_of_unity_order(a), ok = root_of_unity_order(a.pow(k));
        ASSERT_TRUE(oa && ok);
        EXPECT_EQ(*oa % *ok, 0);
    }
}

TEST(PolyProperties, SubstitutionIsRingHomomorphism) {
    Gen g(2001);
    for (int n = 0; n < kInstances; ++n) {
        const MPoly p = g.poly(yz(), 3, 2), q = g.poly(yz(), 3, 2);
        const Assignment a = {{var("y"), random_ratfunc(g)}, {var("z"), random_ratfunc(g)}};
        EXPECT_EQ(poly_substitute(p * q, a), poly_substitute(p, a) * poly_substitute(q, a));
        EXPECT_EQ(poly_substitute(p + q, a), poly_substitute(p, a) + poly_substitute(q, a));
    }
}

TEST(PolyProperties, ExactDivideRoundTrip) {
    Gen g(2002);
    const std::vector<std::size_t> vars = {var("y"), var("z"), var("A")};
    for (int n = 0; n < kInstances; ++n) {
        const MPoly p = g.poly(vars), q = g.nonzero_poly(vars);
        EXPECT_EQ(exact_divide(p * q, q), p);
    }
}

TEST(PolyProperties, LeibnizRule) {
    Gen g(2003);
    for (int n = 0; n < kInstances; ++n) {
        const MPoly p = g.poly(yz()), q = g.poly(yz());
        for (auto v : yz()) EXPECT_EQ((p * q).derivative(v), p * q.derivative(v) + q * p.derivative(v));
        const RatFunc r = random_ratfunc(g), s = random_ratfunc(g);
        EXPECT_EQ((r * s).derivative(var("y")), r * s.derivative(var("y")) + s * r.derivative(var("y")));
    }
}

TEST(PolyProperties, JacobianChainRule) {
    Gen g(2004);
    const auto y = var("y"), z = var("z");
    for (int n = 0; n < kInstances; ++n) {
        const RatFunc pu = random_laurent(g), pv = random_laurent(g);
        const RatFunc su = random_laurent(g), sv = random_laurent(g);
        const Assignment psi = {{y, su}, {z, sv}};
        // phi o psi
        const RatFunc cu = ratfunc_substitute(pu, psi), cv = ratfunc_substitute(pv, psi);
        const RatFunc lhs = jacobian_det2(cu, cv, y, z);
        const RatFunc rhs = ratfunc_substitute(jacobian_det2(pu, pv, y, z), psi) * jacobian_det2(su, sv, y, z);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(PolyProperties, JacobianChainRuleOnQuadricMaps) {
    const auto Y = var("Y"), Z = var("Z");
    const std::vector<QAut> pool = {qauts::iota(), qauts::phi1(), qauts::iota_phi1(), qauts::phi2(1), qauts::phi2(-1)};
    Gen g(2005);
    for (int n = 0; n < kInstances; ++n) {
        const auto &a = pool[static_cast<std::size_t>(g.integer(0, 4))];
        const auto &b = pool[static_cast<std::size_t>(g.integer(0, 4))];
        const BirMap phi = qaut_to_birmap(a), psi = qaut_to_birmap(b);
        const BirMap c = compose(phi, psi);
        const RatFunc lhs = jacobian_det2(c.u(), c.v(), Y, Z);
        const RatFunc rhs = ratfunc_substitute(jacobian_det2(phi.u(), phi.v(), Y, Z), {{Y, psi.u()}, {Z, psi.v()}}) *
                            jacobian_det2(psi.u(), psi.v(), Y, Z);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(PolyProperties, ParsePrintRoundTrip) {
    Gen g(2006);
    const std::vector<std::size_t> vars = {var("y"), var("z"), var("W"), var("B")};
    for (int n = 0; n < kInstances; ++n) {
        MPoly p = g.poly(vars);
        p *= g.field();
        EXPECT_EQ(parse_poly(p.to_string()), p);
        const RatFunc r = random_ratfunc(g);
        EXPECT_EQ(parse_ratfunc(r.to_string()), r);
    }
}

TEST(CoverProperties, RingAxioms) {
    Gen g(3001);
    const auto fam = family(2);
    for (int n = 0; n < kInstances; ++n) {
        auto el = [&] { return cover_element(fam, RatFunc(g.poly(yz(), 2, 2)), RatFunc(g.poly(yz(), 2, 2))); };
        const auto a = el(), b = el(), c = el();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        // reduced product = reduction of the expanded product
        const RatFunc w = RatFunc::variable(fam.vars(), var("w"));
        const RatFunc expanded = (a.a() + a.b() * w) * (b.a() + b.b() * w);
        EXPECT_EQ(cover_reduce(expanded, fam), a * b);
    }
}

TEST(CoverProperties, BisConditionStableUnderSpecialization) {
    Gen g(3002);
    const auto f1 = family(1);
    const std::vector<std::string> params = f1.parameters;
    for (int n = 0; n < kInstances; ++n) {
        std::map<std::string, MPoly> sub;
        for (const auto &p : params) {
            MPoly v = MPoly::constant(f1.vars(), FieldElem(g.integer(-2, 2)));
            for (const auto &q : params)
                if (g.integer(0, 2) == 0) v += MPoly::variable(f1.vars(), q) * FieldElem::zeta_pow(g.integer(0, 7));
            sub.emplace(p, v);
        }
        const auto s = specialize(f1, sub);
        EXPECT_TRUE(check_bis_condition(k3_cover(s).branch, BisCondition::reciprocal_negation));
        EXPECT_TRUE(check_equation_invariance(s, maps::sigma1()).holds);
    }
}

TEST(LefschetzProperties, FixedPointCountIsTwoPlusTrace) {
    Gen g(4001);
    int tested = 0;
    while (tested < kInstances) {
        const bool swap = g.integer(0, 1);
        QAut q{swap ? QAutShape::swap : QAutShape::direct, finite_order_mobius(g), finite_order_mobius(g), "q"};
        // conjugate by a random direct automorphism
        const Mobius h1 = random_mobius(g), h2 = random_mobius(g);
        const QAut h{QAutShape::direct, h1, h2, "h"};
        q = compose(h, compose(q, qaut_inverse(h)));
        if (q.is_identity()) continue;
        const bool trivial = swap ? (q.m1 * q.m2).is_identity() : (q.m1.is_identity() || q.m2.is_identity());
        if (trivial) continue;
        ASSERT_TRUE(qaut_order(q, 64));
        const auto fp = qaut_fixed_points(q);
        ASSERT_FALSE(fp.parabolic);
        EXPECT_EQ(static_cast<long>(fp.count), topological_lefschetz_count(qaut_ns_trace(q)));
        if (fp.points) {
            for (const auto &[a, b] : *fp.points) {
                if (q.shape == QAutShape::direct) {
                    EXPECT_EQ(q.m1.apply(a), a);
                    EXPECT_EQ(q.m2.apply(b), b);
                } else {
                    EXPECT_EQ(q.m1.apply(b), a);
                    EXPECT_EQ(q.m2.apply(a), b);
                }
            }
        }
        ++tested;
    }
}

TEST(SerializationProperties, FamilyRoundTrip) {
    Gen g(5001);
    const auto support_set = horikawa_support();
    const std::vector<std::pair<int, int>> support(support_set.begin(), support_set.end());
    const std::vector<std::string> params = {"A", "B", "C", "D", "E", "F"};
    for (int n = 0; n < kInstances; ++n) {
        const auto vars = VarTable::standard();
        MPoly f(vars);
        std::set<std::string> used;
        const int terms = static_cast<int>(g.integer(1, 8));
        for (int t = 0; t < terms; ++t) {
            const auto [i, j] = support[static_cast<std::size_t>(g.integer(0, 12))];
            Exponent e(vars->size(), 0);
            e[var("y")] = static_cast<std::uint16_t>(i);
            e[var("z")] = static_cast<std::uint16_t>(j);
            if (g.integer(0, 3)) {
                const auto &p = params[static_cast<std::size_t>(g.integer(0, 5))];
                e[var(p.c_str())] = 1;
                used.insert(p);
            }
            f.add_term(e, g.nonzero_field());
        }
        SurfaceFamily fam{"random" + std::to_string(n), FamilyKind::enriques_horikawa, f,
                          std::vector<std::string>(used.begin(), used.end())};
        InputBundle b{vars, {{fam, {homothety(fam)}}}, {{maps::sigma1(), fam.name}}};
        const InputBundle back = ingest_json(bundle_to_json(b));
        ASSERT_EQ(back.families.size(), 1u);
        EXPECT_EQ(back.families[0].family, fam);
        ASSERT_EQ(back.families[0].actions.size(), 1u);
        EXPECT_EQ(back.families[0].actions[0].weights, b.families[0].actions[0].weights);
        EXPECT_TRUE(maps_equal(back.maps[0].map, maps::sigma1()));
        EXPECT_EQ(bundle_to_json(back), bundle_to_json(b));
    }
}
