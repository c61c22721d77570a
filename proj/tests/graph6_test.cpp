#include <gtest/gtest.h>

#include "irdom/graph6.hpp"

namespace irdom {
namespace {

TEST(Graph6Test, HandPackedEncodings)
{
    EXPECT_EQ(parse_graph6("C?"), empty_graph(4));
    EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
    EXPECT_EQ(write_graph6(path_graph(4)), "Ch");
    EXPECT_EQ(write_graph6(empty_graph(4)), "C?");
    EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
}

TEST(Graph6Test, PetersenMatchesReferenceEncoder)
{
    // Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    EXPECT_EQ(write_graph6(Graph::from_edges(10, edges)), "IheA@GUAo");
}

TEST(Graph6Test, RoundTripAllSmallGraphs)
{
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            const auto g = Graph::from_pair_mask(n, mask);
            const auto text = write_graph6(g);
            EXPECT_EQ(parse_graph6(text), g);
            EXPECT_EQ(write_graph6(parse_graph6(text)), text);
        }
    }
}

TEST(Graph6Test, LargestShortForm)
{
    const auto g = cycle_graph(62);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
}

TEST(Graph6Test, RejectsMalformedInput)
{
    EXPECT_THROW(parse_graph6(""), Graph6Error);
    EXPECT_THROW(parse_graph6("~?@A"), Graph6Error);
    EXPECT_THROW(parse_graph6("C"), Graph6Error);
    EXPECT_THROW(parse_graph6("Chh"), Graph6Error);
    EXPECT_THROW(parse_graph6("C "), Graph6Error);
    // K_3 is "Bw" (bits 111 000); "Bx" sets a padding bit.
    EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
    EXPECT_THROW(parse_graph6("Bx"), Graph6Error);
    EXPECT_THROW(parse_graph6("\x7f"), Graph6Error);
}

TEST(Graph6Test, SingleVertexAndEdge)
{
    EXPECT_EQ(parse_graph6("@"), Graph(1));
    EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
}

} // namespace
} // namespace irdom
