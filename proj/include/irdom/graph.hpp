#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace irdom {

/// A subset of the vertex set [0, n) packed into a 64-bit mask.
///
/// Ordering compares the raw masks as unsigned integers; solvers use it to
/// pick a canonical witness among optimal sets.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

    static VertexSet of(std::initializer_list<int> vertices);
    /// The set {0, ..., n-1}.
    static constexpr VertexSet prefix(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr auto mask() const -> std::uint64_t { return mask_; }
    constexpr auto size() const -> int { return std::popcount(mask_); }
    constexpr auto empty() const -> bool { return mask_ == 0; }
    constexpr auto contains(int v) const -> bool { return (mask_ >> v) & 1U; }
    /// Lowest member; undefined on the empty set.
    constexpr auto first() const -> int { return std::countr_zero(mask_); }

    constexpr auto with(int v) const -> VertexSet { return VertexSet(mask_ | (std::uint64_t{1} << v)); }
    constexpr auto without(int v) const -> VertexSet { return VertexSet(mask_ & ~(std::uint64_t{1} << v)); }

    auto members() const -> std::vector<int>;
    auto to_string() const -> std::string;

    constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(mask_ & o.mask_); }
    constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(mask_ | o.mask_); }
    /// Set difference.
    constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(mask_ & ~o.mask_); }

    constexpr auto operator==(const VertexSet &) const -> bool = default;
    constexpr auto operator<=>(const VertexSet &) const -> std::strong_ordering = default;

private:
    std::uint64_t mask_ = 0;
};

struct Edge {
    int u;
    int v;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    static constexpr int max_order = 62;

    /// The graph with no vertices.
    Graph() = default;
    /// The empty (edgeless) graph E_n.
    explicit Graph(int n);

    /// Duplicate pairs collapse; throws std::invalid_argument on a self-loop
    /// or an endpoint outside [0, n).
    static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
    static auto from_edges(int n, std::initializer_list<Edge> edges) -> Graph;

    /// Bit p of `mask` is the pair (i, j), i < j, with p = j(j-1)/2 + i, which
    /// is the graph6 bit order. Requires n(n-1)/2 <= 64.
    static auto from_pair_mask(int n, std::uint64_t mask) -> Graph;
    auto pair_mask() const -> std::uint64_t;

    auto order() const -> int { return n_; }
    auto size() const -> int { return m_; }
    auto vertices() const -> VertexSet { return VertexSet::prefix(n_); }

    auto adjacent(int u, int v) const -> bool { return (rows_[u] >> v) & 1U; }
    auto neighbours(int v) const -> VertexSet { return VertexSet(rows_[v]); }
    auto degree(int v) const -> int { return std::popcount(rows_[v]); }
    auto edges() const -> std::vector<Edge>;

    auto operator==(const Graph &) const -> bool = default;

private:
    explicit Graph(std::vector<std::uint64_t> rows);
    friend auto complement(const Graph &g) -> Graph;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> rows_;
};

auto complement(const Graph &g) -> Graph;
/// Vertices of `h` are shifted by g.order(); no edges between the parts.
auto disjoint_union(const Graph &g, const Graph &h) -> Graph;
/// Disjoint union plus every edge between the two parts.
auto join(const Graph &g, const Graph &h) -> Graph;
/// Subgraph induced by `keep`, relabelled in increasing vertex order.
auto induced_subgraph(const Graph &g, VertexSet keep) -> Graph;
auto without_edge(const Graph &g, int u, int v) -> Graph;

auto empty_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
/// K_{1,leaves}, centre 0.
auto star_graph(int leaves) -> Graph;
auto complete_bipartite(int a, int b) -> Graph;
auto complete_multipartite(std::span<const int> part_sizes) -> Graph;
/// t disjoint copies of K_2.
auto matching_graph(int t) -> Graph;

struct DegreeClassification {
    std::vector<int> degrees;
    /// D(G), ascending.
    std::vector<int> distinct;
    std::map<int, VertexSet> classes;
    int span = 0;
    int min_degree = 0;
    int max_degree = 0;

    auto class_of(int degree) const -> VertexSet;
    auto class_size(int degree) const -> int { return class_of(degree).size(); }
};

/// Throws std::invalid_argument for the graph with no vertices.
auto classify_degrees(const Graph &g) -> DegreeClassification;

auto is_regular(const Graph &g) -> bool;
auto is_connected(const Graph &g) -> bool;

/// Backtracking search with degree-class pruning; intended for small orders.
auto is_isomorphic(const Graph &g, const Graph &h) -> bool;

} // namespace irdom
