#include <gtest/gtest.h>

#include <random>

#include "irdom/graph6.hpp"
#include "irdom/params.hpp"
#include "oracle.hpp"

namespace irdom {
namespace {

auto expect_matches(const Optimum &got, const oracle::Best &want, const Graph &g, const char *what)
{
    EXPECT_EQ(got.size, want.size) << what << " on " << write_graph6(g);
    EXPECT_EQ(got.witness.mask(), want.witness) << what << " witness on " << write_graph6(g);
}

auto check_against_oracle(const Graph &g)
{
    expect_matches(alpha(g), oracle::alpha(g), g, "alpha");
    expect_matches(alpha_ir(g), oracle::alpha_ir(g), g, "alpha_ir");
    expect_matches(alpha_reg(g), oracle::alpha_reg(g), g, "alpha_reg");
    expect_matches(gamma_ir(g), oracle::gamma_ir(g), g, "gamma_ir");
    expect_matches(gamma_reg(g), oracle::gamma_reg(g), g, "gamma_reg");
    expect_matches(max_cut(g), oracle::max_cut(g), g, "max_cut");
}

TEST(PredicateTest, IrregularIndependent)
{
    const auto p4 = path_graph(4);
    EXPECT_TRUE(is_irregular_independent(p4, VertexSet::of({0, 2})));
    EXPECT_TRUE(is_irregular_independent(p4, VertexSet{}));
    EXPECT_FALSE(is_irregular_independent(star_graph(3), VertexSet::of({1, 2})));
    EXPECT_FALSE(is_irregular_independent(p4, VertexSet::of({0, 1})));
    EXPECT_TRUE(is_regular_independent(star_graph(3), VertexSet::of({1, 2, 3})));
}

TEST(PredicateTest, IrregularDominating)
{
    const auto p4 = path_graph(4);
    EXPECT_TRUE(is_irregular_dominating(p4, VertexSet::of({0, 2})));
    EXPECT_TRUE(is_irregular_dominating(p4, p4.vertices()));
    EXPECT_FALSE(is_irregular_dominating(cycle_graph(4), VertexSet::of({0})));
    EXPECT_TRUE(is_dominating(cycle_graph(4), VertexSet::of({0, 2})));
    EXPECT_TRUE(is_regular_dominating(cycle_graph(4), VertexSet::of({0, 2})));
    EXPECT_FALSE(is_irregular_dominating(cycle_graph(4), VertexSet::of({0, 2})));
}

TEST(PredicateTest, CutSize)
{
    EXPECT_EQ(cut_size(cycle_graph(4), VertexSet::of({0, 2})), 4);
    EXPECT_EQ(cut_size(complete_graph(4), VertexSet::of({0})), 3);
}

TEST(SolverTest, PathOnFourVertices)
{
    const auto r = full_report(path_graph(4));
    EXPECT_EQ(r.alpha.size, 2);
    EXPECT_EQ(r.alpha_ir.size, 2);
    EXPECT_EQ(r.alpha_reg.size, 2);
    EXPECT_EQ(r.gamma_ir.size, 2);
    EXPECT_EQ(r.beta.size, 3);
    EXPECT_EQ(r.span, 2);
    EXPECT_DOUBLE_EQ(r.average_degree(), 1.5);
    EXPECT_EQ(r.gamma_ir.witness, VertexSet::of({0, 2}));
}

TEST(SolverTest, CompleteGraph)
{
    const auto r = full_report(complete_graph(4));
    EXPECT_EQ(r.alpha.size, 1);
    EXPECT_EQ(r.alpha_ir.size, 1);
    EXPECT_EQ(r.gamma_ir.size, 3);
    EXPECT_EQ(r.gamma_reg.size, 1);
    EXPECT_EQ(r.beta.size, 4);
}

TEST(SolverTest, OddCycleCut)
{
    EXPECT_EQ(max_cut(cycle_graph(5)).size, 4);
    EXPECT_EQ(gamma_ir(cycle_graph(4)).size, 3);
}

TEST(SolverTest, EmptyGraphRejected)
{
    EXPECT_THROW(alpha_ir(Graph()), std::invalid_argument);
    EXPECT_THROW(gamma_ir(Graph()), std::invalid_argument);
    EXPECT_THROW(max_cut(Graph()), std::invalid_argument);
}

TEST(SolverTest, LimitsEnforced)
{
    EXPECT_THROW(gamma_ir(cycle_graph(27)), SolverLimitExceeded);
    EXPECT_THROW(max_cut(cycle_graph(27)), SolverLimitExceeded);
    EXPECT_EQ(gamma_ir(cycle_graph(8), SolverLimits{8}).size, gamma_ir(cycle_graph(8)).size);
    EXPECT_THROW(gamma_reg(cycle_graph(8), SolverLimits{7}), SolverLimitExceeded);
    // The independence solvers have no subset enumeration and run past the limit.
    EXPECT_EQ(alpha(cycle_graph(40)).size, 20);
}

TEST(OracleAgreementTest, AllGraphsUpToFiveVertices)
{
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < limit; ++mask)
            check_against_oracle(Graph::from_pair_mask(n, mask));
    }
}

TEST(OracleAgreementTest, SeededRandomGraphs)
{
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 6 + trial % 6;
        const double p = 0.1 + 0.8 * (trial % 9) / 8.0;
        check_against_oracle(oracle::random_graph(n, p, rng));
    }
}

TEST(ReportInvariantTest, OrderingOfParameters)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 10;
        const auto g = oracle::random_graph(n, 0.5, rng);
        const auto r = full_report(g);
        EXPECT_LE(1, r.alpha_ir.size);
        EXPECT_LE(r.alpha_ir.size, r.alpha.size);
        EXPECT_LE(r.alpha.size, n);
        EXPECT_LE(1, r.alpha_reg.size);
        EXPECT_LE(r.alpha_reg.size, r.alpha.size);
        EXPECT_LE((n + 1) / 2, r.gamma_ir.size);
        EXPECT_LE(r.gamma_ir.size, n);
        EXPECT_LE(r.beta.size, r.m);
        EXPECT_TRUE(is_irregular_independent(g, r.alpha_ir.witness));
        EXPECT_TRUE(is_irregular_dominating(g, r.gamma_ir.witness));
        EXPECT_TRUE(is_regular_independent(g, r.alpha_reg.witness));
        EXPECT_TRUE(is_regular_dominating(g, r.gamma_reg.witness));
        EXPECT_EQ(cut_size(g, r.beta.witness), r.beta.size);
    }
}

} // namespace
} // namespace irdom
