#include <gtest/gtest.h>

#include <cmath>

#include "irdom/constructions.hpp"
#include "irdom/graph6.hpp"
#include "irdom/params.hpp"
#include "oracle.hpp"

namespace irdom {
namespace {

auto params(int r, int t, int n = 0, int k = 0, std::string variant = {}) -> FamilyParams
{
    FamilyParams p;
    p.r = r;
    p.t = t;
    p.n = n;
    p.k = k;
    p.variant = std::move(variant);
    return p;
}

auto expect_ok(const Construction &c)
{
    EXPECT_TRUE(c.ok()) << c.metadata();
    EXPECT_EQ(parse_graph6(write_graph6(c.graph)), c.graph) << c.metadata();
}

auto degree_span(const Graph &g) -> int { return oracle::span(g); }

auto min_degree(const Graph &g) -> int
{
    int d = g.order();
    for (int v = 0; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

TEST(ExampleTest, ModStarOneTwo)
{
    const auto g = build_modstar({1, 2});
    EXPECT_EQ(g.order(), 4);
    EXPECT_EQ(min_degree(g), 1);
    EXPECT_EQ(oracle::max_cut(g).size, 3);
    EXPECT_EQ(oracle::alpha_ir(g).size, 2);
}

TEST(ExampleTest, ProductFive)
{
    const auto g = build_product_extremal(5);
    EXPECT_EQ(oracle::alpha_ir(g).size * oracle::alpha_reg(g).size, 6);
}

TEST(ExampleTest, MetadataLine)
{
    const auto c = build("clique_union", params(2, 2));
    EXPECT_EQ(c.metadata(), "# clique_union r=2 t=2 | alpha_ir=2 alpha_ir=Delta-delta+1=2");
    EXPECT_EQ(c.graph, disjoint_union(complete_graph(2), complete_graph(3)));
}

TEST(StaircaseTest, Layouts)
{
    const auto asc = make_staircase({3, 3, StaircaseKind::Ascending, 0}, Assignment::Prefix);
    EXPECT_EQ(asc.order(), 6);
    EXPECT_EQ(asc.size(), 6);
    EXPECT_EQ(asc.degree(0), 3);
    EXPECT_EQ(asc.degree(2), 1);
    const auto cyc = make_staircase({3, 2, StaircaseKind::Ascending, 1}, Assignment::RoundRobin);
    // v_1 takes u_0 u_1, v_2 takes u_2 u_0 u_1.
    EXPECT_EQ(cyc.neighbours(3), VertexSet::of({0, 1}));
    EXPECT_EQ(cyc.neighbours(4), VertexSet::of({0, 1, 2}));
    EXPECT_THROW(make_staircase({2, 3, StaircaseKind::Ascending, 0}, Assignment::Prefix), std::invalid_argument);
}

TEST(ScheduleTest, PrefixSums)
{
    const ModStarSchedule s{2, 3};
    EXPECT_EQ(s.k(), 4);
    EXPECT_EQ(s.s(0), 0);
    EXPECT_EQ(s.s(1), 2);
    EXPECT_EQ(s.s(3), 2 + 3 + 4);
}

TEST(RangeTest, InvalidParametersRejected)
{
    EXPECT_THROW(build_alpha_sharp_bipartite(3, 3), std::invalid_argument);
    EXPECT_THROW(build_alpha_sharp_clique(2, 3), std::invalid_argument);
    EXPECT_THROW(build_product_extremal(3), std::invalid_argument);
    EXPECT_THROW(build_sum_extremal(4, 6), std::invalid_argument);
    EXPECT_THROW(build_relation_extremal(6, "sideways"), std::invalid_argument);
    EXPECT_THROW(find_family("petersen"), std::invalid_argument);
    EXPECT_THROW(build_multipartite_span(11), std::invalid_argument);
}

TEST(SharpnessTest, CliqueUnion)
{
    for (int r = 1; r <= 4; ++r)
        for (int t = 1; t <= 4; ++t) {
            const auto c = assess("clique_union", params(r, t));
            expect_ok(c);
            EXPECT_EQ(oracle::alpha_ir(c.graph).size, t);
            EXPECT_EQ(degree_span(c.graph), t);
        }
}

TEST(SharpnessTest, ModStarAndBipartite)
{
    int built = 0;
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 6; ++t) {
            if (t * (t - 1) < 2 * r * (r - 1)) {
                EXPECT_THROW(build_modstar({r, t}), std::invalid_argument);
                continue;
            }
            ++built;
            const auto m = assess("modstar", params(r, t));
            const auto b = assess("alpha_sharp_bipartite", params(r, t));
            expect_ok(m);
            expect_ok(b);
            EXPECT_EQ(m.graph, b.graph);
            const int n = m.graph.order();
            const int edges = t * (2 * r + t - 1) / 2;
            EXPECT_EQ(m.graph.size(), edges);
            EXPECT_EQ(oracle::max_cut(m.graph).size, edges);
            EXPECT_EQ(min_degree(m.graph), r);
            EXPECT_EQ(oracle::alpha_ir(m.graph).size, t);
            EXPECT_EQ(t, (n - r + 1) / 2);
        }
    EXPECT_GE(built, 10);
}

TEST(SharpnessTest, StaircaseHalfOrder)
{
    for (int n = 2; n <= 14; ++n) {
        const int k = (n + 1) / 2;
        const auto c = assess("staircase", params(0, n - k, 0, k, "asc"));
        expect_ok(c);
        EXPECT_EQ(oracle::gamma_ir(c.graph).size, k);
        EXPECT_EQ(c.claims.size(), 5U);
    }
}

TEST(SharpnessTest, StaircaseDegreeAndCut)
{
    for (int n = 2; n <= 10; ++n)
        for (int k = (n + 1) / 2; k <= n - 1; ++k) {
            const auto c = assess("staircase", params(0, n - k, 0, k, "asc"));
            expect_ok(c);
            const int delta_max = std::max(k == 0 ? 0 : c.graph.degree(0), n - k);
            EXPECT_EQ(oracle::gamma_ir(c.graph).size, n - delta_max);
            const int np = n - k;
            EXPECT_EQ(oracle::max_cut(c.graph).size, np * (np + 1) / 2);
        }
}

TEST(SharpnessTest, OtherStaircaseCasesCarryLayoutOnly)
{
    for (const char *v : {"asc0", "desc"}) {
        const auto c = assess("staircase", params(0, 4, 0, 4, v));
        expect_ok(c);
        EXPECT_EQ(c.claims.size(), 1U);
    }
}

TEST(SharpnessTest, AlphaSharpClique)
{
    for (int r = 1; r <= 5; ++r)
        for (int t = 1; t <= r; ++t) {
            const auto c = assess("alpha_sharp_clique", params(r, t));
            expect_ok(c);
            const int n = r + t;
            const int m = c.graph.size();
            EXPECT_EQ(oracle::alpha_ir(c.graph).size, t);
            EXPECT_NEAR((1 + std::sqrt(2.0 * n * n - 2.0 * n - 4.0 * m + 1)) / 2, t, 1e-9);
        }
}

TEST(SharpnessTest, ProductExtremal)
{
    for (int n = 4; n <= 12; ++n) {
        const auto c = assess("product_extremal", params(0, 0, n));
        expect_ok(c);
        EXPECT_EQ(oracle::alpha_ir(c.graph).size * oracle::alpha_reg(c.graph).size, (n / 2) * ((n + 1) / 2)) << n;
    }
}

TEST(SharpnessTest, SumExtremal)
{
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= n + 1; ++k) {
            const auto c = assess("sum_extremal", params(0, 0, n, k));
            expect_ok(c);
            EXPECT_EQ(oracle::alpha_ir(c.graph).size + oracle::alpha_reg(c.graph).size, k);
        }
}

TEST(SharpnessTest, NordhausGaddumIndependence)
{
    for (int n = 2; n <= 12; ++n) {
        const auto c = assess("ng_alpha", params(0, 0, n));
        expect_ok(c);
        const int a = oracle::alpha_ir(c.graph).size;
        const int b = oracle::alpha_ir(complement(c.graph)).size;
        EXPECT_EQ(a + b, n);
        EXPECT_EQ(a * b, (n / 2) * ((n + 1) / 2));
    }
}

TEST(SharpnessTest, NordhausGaddumDomination)
{
    for (int n = 3; n <= 12; ++n) {
        const auto c = assess("ng_gamma", params(0, 0, n));
        expect_ok(c);
        const int a = oracle::gamma_ir(c.graph).size;
        const int b = oracle::gamma_ir(complement(c.graph)).size;
        const int half = (n + 1) / 2;
        EXPECT_EQ(a + b, 2 * half) << n;
        EXPECT_EQ(a * b, half * half) << n;
    }
}

TEST(SharpnessTest, RelationExtremal)
{
    for (int n = 2; n <= 12; ++n) {
        for (const char *v : {"delta_pos", "delta_zero", "complement"}) {
            const auto c = assess("relation_extremal", params(0, 0, n, 0, v));
            expect_ok(c);
            const std::string id = v;
            const int a = oracle::alpha_ir(c.graph).size;
            const int gi = id == "complement" ? oracle::gamma_ir(complement(c.graph)).size
                                              : oracle::gamma_ir(c.graph).size;
            if (id == "delta_pos") {
                EXPECT_GE(min_degree(c.graph), 1);
                EXPECT_EQ(a + gi, n);
                EXPECT_EQ(a * gi, (n / 2) * ((n + 1) / 2));
            } else {
                if (id == "delta_zero")
                    EXPECT_EQ(min_degree(c.graph), 0);
                EXPECT_EQ(a + gi, n + 1) << id << ' ' << n;
                EXPECT_EQ(a * gi, ((n + 1) / 2) * ((n + 2) / 2)) << id << ' ' << n;
            }
        }
    }
}

TEST(SharpnessTest, MultipartiteSpan)
{
    for (int k = 1; k <= 5; ++k) {
        const auto c = assess("multipartite_span", params(0, 0, 0, k));
        expect_ok(c);
        EXPECT_EQ(oracle::alpha_ir(c.graph).size, 1);
        EXPECT_EQ(degree_span(c.graph), k);
    }
}

TEST(NegativeControlTest, DegreeMutationCaughtAtThree)
{
    const BoundFormulas mutated{Mutation::DegreeCeilThird};
    const auto c = assess("staircase", params(0, 1, 0, 2, "asc"), mutated);
    EXPECT_FALSE(c.ok()) << c.metadata();
}

TEST(NegativeControlTest, HalfFloorMutationCaught)
{
    const BoundFormulas mutated{Mutation::HalfFloorTightened};
    EXPECT_FALSE(assess("alpha_sharp_bipartite", params(1, 2), mutated).ok());
}

TEST(NegativeControlTest, CorruptedConstructionCaught)
{
    const Tamper drop = [](const Graph &g) { return without_edge(g, 0, 1); };
    const auto c = assess("ng_gamma", params(0, 0, 4), {}, drop);
    EXPECT_FALSE(c.ok());
    EXPECT_NE(c.metadata().find("claimed 4, computed"), std::string::npos) << c.metadata();
}

} // namespace
} // namespace irdom
