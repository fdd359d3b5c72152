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

#include <numeric>

#include <gtest/gtest.h>

#include <bicanon/bicanon.hpp>

using namespace bicanon;

namespace {

// Independent enumeration: every M with entries in [-b, b], M^T G M = G.
std::vector<IntMatrix> brute_isometries(const IntMatrix &g, std::int64_t b) {
    std::vector<IntMatrix> out;
    for (std::int64_t a = -b; a <= b; ++a)
        for (std::int64_t c = -b; c <= b; ++c)
            for (std::int64_t d = -b; d <= b; ++d)
                for (std::int64_t e = -b; e <= b; ++e) {
                    const IntMatrix m = {{a, c}, {d, e}};
                    bool ok = true;
                    for (int i = 0; i < 2 && ok; ++i)
                        for (int j = 0; j < 2 && ok; ++j) {
                            std::int64_t s = 0;
                            for (int k = 0; k < 2; ++k)
                                for (int l = 0; l < 2; ++l) s += m[k][i] * g[k][l] * m[l][j];
                            ok = s == g[i][j];
                        }
                    if (ok) out.push_back(m);
                }
    return out;
}

long phi_by_counting(long n) {
    long c = 0;
    for (long k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

} // namespace

TEST(Lattice, Invariants) {
    auto u = lattice_invariants(GramLattice::U());
    EXPECT_EQ(u.rank, 2u);
    EXPECT_EQ(u.determinant, -1);
    u = lattice_invariants(GramLattice::U2());
    EXPECT_EQ(u.rank, 2u);
    EXPECT_EQ(u.determinant, -4);
    u = lattice_invariants(GramLattice());
    EXPECT_EQ(u.rank, 0u);
    EXPECT_EQ(u.determinant, 1);
    u = lattice_invariants(GramLattice({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
    EXPECT_EQ(u.rank, 3u);
    EXPECT_EQ(u.determinant, 4);
    u = lattice_invariants(GramLattice({{1, 1}, {1, 1}}));
    EXPECT_EQ(u.rank, 1u);
    EXPECT_EQ(u.determinant, 0);
}

TEST(Lattice, RejectsBadGram) {
    EXPECT_THROW(GramLattice({{0, 1}, {2, 0}}), invariant_error);
    EXPECT_THROW(GramLattice({{0, 1, 0}, {1, 0}}), invariant_error);
}

TEST(Lattice, TraceTwoIsometryIsIdentity) {
    const auto found = isometries_with_trace(GramLattice::U2(), 2, 2);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found.front(), (IntMatrix{{1, 0}, {0, 1}}));
}

TEST(Lattice, MatchesIndependentEnumeration) {
    const auto all = brute_isometries(GramLattice::U2().gram(), 2);
    for (std::int64_t t = -5; t <= 5; ++t) {
        std::vector<IntMatrix> expected;
        for (const auto &m : all)
            if (m[0][0] + m[1][1] == t) expected.push_back(m);
        auto got = isometries_with_trace(GramLattice::U2(), t, 2);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected) << "trace " << t;
    }
    EXPECT_FALSE(isometries_with_trace(GramLattice::U2(), 0, 2).empty());
    EXPECT_TRUE(isometries_with_trace(GramLattice::U2(), 5, 2).empty());
}

TEST(Lefschetz, IsolatedCase) {
    EXPECT_EQ(holomorphic_lefschetz_case_b(Sign::plus), 4);
    EXPECT_EQ(holomorphic_lefschetz_case_b(Sign::minus), 4);
}

TEST(Lefschetz, CurveCaseIsInconsistent) {
    const FixedCurveData c{9, 16};
    EXPECT_TRUE(c.satisfies_adjunction());
    const auto plus = holomorphic_lefschetz_case_a(Sign::plus, c);
    EXPECT_EQ(plus.lhs, FieldElem(1) - FieldElem::imag());
    EXPECT_EQ(plus.rhs, FieldElem(4) - FieldElem(4) * FieldElem::imag());
    EXPECT_FALSE(plus.equal);
    EXPECT_FALSE(holomorphic_lefschetz_case_a(Sign::minus, c).equal);
}

TEST(Lefschetz, DegenerateControl) {
    const auto r = holomorphic_lefschetz_case_a(Sign::plus, {1, 0});
    EXPECT_TRUE(r.rhs.is_zero());
    EXPECT_FALSE(r.equal);
}

TEST(Lefschetz, TopologicalCountMatchesFixedPoints) {
    EXPECT_EQ(topological_lefschetz_count(2), 4);
    EXPECT_EQ(topological_lefschetz_count(0), 2);
    for (const QAut &g : {qauts::iota(), qauts::phi1(), qauts::iota_phi1(), qauts::phi2(1), qauts::phi2(-1)})
        EXPECT_EQ(static_cast<long>(qaut_fixed_points(g).count), topological_lefschetz_count(qaut_ns_trace(g))) << g.label;
    // N = 4 points and trace 2 on NS: the action on U(2) has trace 2, hence is the identity
    EXPECT_EQ(topological_lefschetz_count(2), holomorphic_lefschetz_case_b(Sign::plus));
    EXPECT_EQ(isometries_with_trace(GramLattice::U2(), 2, 2).size(), 1u);
}

TEST(Arithmetic, EulerPhi) {
    EXPECT_EQ(euler_phi(4), 2);
    EXPECT_EQ(euler_phi(8), 4);
    EXPECT_EQ(euler_phi(1), 1);
    for (long n = 1; n <= 200; ++n) EXPECT_EQ(euler_phi(n), phi_by_counting(n)) << n;
    EXPECT_THROW(euler_phi(0), invariant_error);
}

TEST(Arithmetic, ModuliDimension) {
    EXPECT_EQ(moduli_dimension(12, 4), 5);
    EXPECT_EQ(moduli_dimension(12, 8), 2);
    EXPECT_EQ(moduli_dimension(6, 4), 2);
    EXPECT_THROW(moduli_dimension(6, 8), invariant_error);
    const auto b = picard_bound_for_82();
    EXPECT_EQ(moduli_dimension(b.rank_t_bound, 4), 2);
}

TEST(Arithmetic, PicardBound) {
    EXPECT_EQ(ade_rank("A3"), 3);
    EXPECT_EQ(ade_rank("A1"), 1);
    EXPECT_EQ(ade_rank("E8"), 8);
    EXPECT_THROW(ade_rank("D2"), schema_error);
    EXPECT_THROW(ade_rank("X1"), schema_error);
    const auto b = picard_bound_for_82();
    EXPECT_EQ(b.exceptional_rank, 14);
    EXPECT_EQ(b.with_ample, 15);
    EXPECT_EQ(b.rho_bound, 16);
    EXPECT_EQ(b.rank_t_bound, 6);
}

TEST(Arithmetic, HodgeData) {
    EXPECT_TRUE((NumericalHodgeData{12, 10, 4, 2}.valid()));
    EXPECT_FALSE((NumericalHodgeData{12, 9, 4, 2}.valid()));
    EXPECT_FALSE((NumericalHodgeData{12, 10, 6, 4}.valid()));
}

TEST(Classification, AdmissiblePairs) {
    const auto r = admissible_pairs();
    EXPECT_EQ(r.admissible, (std::set<OrderIndex>{{4, 2}, {8, 4}, {8, 2}}));
    EXPECT_EQ(r.trace.size() + r.admissible.size(), r.candidates.size());
    std::map<std::pair<int, int>, std::string> by;
    for (const auto &t : r.trace) {
        EXPECT_FALSE(t.citation.empty());
        by[{t.candidate.order, t.candidate.index}] = t.rule_id;
    }
    EXPECT_EQ(by.at({12, 2}), "index2-square-order6");
    EXPECT_EQ(by.at({6, 2}), "odd-order");
    EXPECT_EQ(by.at({2, 2}), "odd-order");
    EXPECT_EQ(by.at({16, 4}), "index4-square-order8");
    EXPECT_EQ(by.at({24, 4}), "index-halving");
    EXPECT_EQ(by.at({12, 4}), "index-halving");
    EXPECT_EQ(by.at({8, 8}), "index-halving");
}

TEST(Classification, EveryRuleHasCitation) {
    std::set<std::string> ids;
    for (const auto &rule : classification_rules()) {
        EXPECT_FALSE(rule.citation.empty());
        EXPECT_TRUE(ids.insert(rule.id).second);
    }
    EXPECT_THROW(admissible_pairs({1}), invariant_error);
}

TEST(Classification, PairsWitnessedByFamilies) {
    std::set<OrderIndex> seen;
    for (int k = 1; k <= 3; ++k) {
        const auto n = map_order(maps::sigma(k), family(k));
        ASSERT_TRUE(n);
        seen.insert({static_cast<int>(*n), index_of(bitwoform_pullback_ratio(family(k), maps::sigma(k)))});
    }
    EXPECT_EQ(seen, admissible_pairs().admissible);
}

TEST(Classification, AllowedOrders) {
    const auto s = allowed_orders();
    EXPECT_EQ(s, (std::set<int>{1, 2, 3, 4, 5, 6, 8}));
    EXPECT_FALSE(s.contains(7));
    EXPECT_TRUE(admissible_pairs().admissible.contains({8, 4}));
}
