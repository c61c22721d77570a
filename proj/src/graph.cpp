#include "irdom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace irdom {

namespace {

auto check_order(int n) -> void
{
    if (n < 0 || n > Graph::max_order)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                    std::to_string(Graph::max_order) + "]");
}

auto bit(int v) -> std::uint64_t { return std::uint64_t{1} << v; }

} // namespace

auto VertexSet::of(std::initializer_list<int> vertices) -> VertexSet
{
    VertexSet s;
    for (int v : vertices)
        s = s.with(v);
    return s;
}

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

auto VertexSet::to_string() const -> std::string
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : members()) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

Graph::Graph(int n)
{
    check_order(n);
    n_ = n;
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows))
{
    n_ = static_cast<int>(rows_.size());
    check_order(n_);
    int twice = 0;
    for (auto r : rows_)
        twice += std::popcount(r);
    m_ = twice / 2;
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    check_order(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        rows[u] |= bit(v);
        rows[v] |= bit(u);
    }
    return Graph(std::move(rows));
}

auto Graph::from_edges(int n, std::initializer_list<Edge> edges) -> Graph
{
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

auto Graph::from_pair_mask(int n, std::uint64_t mask) -> Graph
{
    if (n < 0 || n * (n - 1) / 2 > 64)
        throw std::invalid_argument("pair mask cannot describe a graph of order " + std::to_string(n));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if ((mask >> p) & 1U) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
    return Graph(std::move(rows));
}

auto Graph::pair_mask() const -> std::uint64_t
{
    if (n_ * (n_ - 1) / 2 > 64)
        throw std::logic_error("graph too large for a pair mask");
    std::uint64_t mask = 0;
    int p = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (adjacent(i, j))
                mask |= std::uint64_t{1} << p;
    return mask;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t r = rows_[u] & ~((bit(u) << 1) - 1); r != 0; r &= r - 1)
            out.push_back({u, std::countr_zero(r)});
    return out;
}

auto complement(const Graph &g) -> Graph
{
    const auto all = VertexSet::prefix(g.order()).mask();
    std::vector<std::uint64_t> rows(g.rows_.size());
    for (std::size_t v = 0; v < rows.size(); ++v)
        rows[v] = ~g.rows_[v] & all & ~bit(static_cast<int>(v));
    return Graph(std::move(rows));
}

auto disjoint_union(const Graph &g, const Graph &h) -> Graph
{
    auto edges = g.edges();
    const int shift = g.order();
    for (auto [u, v] : h.edges())
        edges.push_back({u + shift, v + shift});
    return Graph::from_edges(g.order() + h.order(), edges);
}

auto join(const Graph &g, const Graph &h) -> Graph
{
    auto edges = disjoint_union(g, h).edges();
    const int shift = g.order();
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            edges.push_back({u, v + shift});
    return Graph::from_edges(g.order() + h.order(), edges);
}

auto induced_subgraph(const Graph &g, VertexSet keep) -> Graph
{
    const auto kept = keep.members();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        index[kept[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.push_back({index[u], index[v]});
    return Graph::from_edges(static_cast<int>(kept.size()), edges);
}

auto without_edge(const Graph &g, int u, int v) -> Graph
{
    auto edges = g.edges();
    std::erase_if(edges, [&](const Edge &e) { return (e.u == u && e.v == v) || (e.u == v && e.v == u); });
    return Graph::from_edges(g.order(), edges);
}

auto empty_graph(int n) -> Graph { return Graph(n); }

auto complete_graph(int n) -> Graph { return complement(Graph(n)); }

auto path_graph(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, edges);
}

auto star_graph(int leaves) -> Graph { return join(Graph(1), Graph(leaves)); }

auto complete_bipartite(int a, int b) -> Graph { return join(Graph(a), Graph(b)); }

auto complete_multipartite(std::span<const int> part_sizes) -> Graph
{
    Graph g;
    for (int size : part_sizes)
        g = join(g, Graph(size));
    return g;
}

auto matching_graph(int t) -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        edges.push_back({2 * i, 2 * i + 1});
    return Graph::from_edges(2 * t, edges);
}

auto DegreeClassification::class_of(int degree) const -> VertexSet
{
    auto it = classes.find(degree);
    return it == classes.end() ? VertexSet{} : it->second;
}

auto classify_degrees(const Graph &g) -> DegreeClassification
{
    if (g.order() == 0)
        throw std::invalid_argument("degree classification of the graph with no vertices");
    DegreeClassification c;
    c.degrees.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        c.degrees[v] = g.degree(v);
        c.classes[c.degrees[v]] = c.classes[c.degrees[v]].with(v);
    }
    for (const auto &[d, members] : c.classes)
        c.distinct.push_back(d);
    c.span = static_cast<int>(c.distinct.size());
    c.min_degree = c.distinct.front();
    c.max_degree = c.distinct.back();
    return c;
}

auto is_regular(const Graph &g) -> bool
{
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != g.degree(0))
            return false;
    return true;
}

auto is_connected(const Graph &g) -> bool
{
    if (g.order() == 0)
        return true;
    VertexSet seen = VertexSet::of({0});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier.members())
            next = next | g.neighbours(v);
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == g.vertices();
}

namespace {

struct IsoSearch {
    const Graph &g;
    const Graph &h;
    std::vector<int> order;   // vertices of g in assignment order
    std::vector<int> image;   // g-vertex -> h-vertex
    std::uint64_t used = 0;   // h-vertices taken

    auto extend(std::size_t depth) -> bool
    {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        for (int w = 0; w < h.order(); ++w) {
            if ((used >> w) & 1U || g.degree(v) != h.degree(w))
                continue;
            bool consistent = true;
            for (std::size_t k = 0; k < depth && consistent; ++k) {
                const int u = order[k];
                consistent = g.adjacent(u, v) == h.adjacent(image[u], w);
            }
            if (!consistent)
                continue;
            image[v] = w;
            used |= std::uint64_t{1} << w;
            if (extend(depth + 1))
                return true;
            used &= ~(std::uint64_t{1} << w);
        }
        return false;
    }
};

} // namespace

auto is_isomorphic(const Graph &g, const Graph &h) -> bool
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::ranges::sort(dg);
    std::ranges::sort(dh);
    if (dg != dh)
        return false;

    // Assign vertices in BFS order from high-degree roots so adjacency checks bite early.
    IsoSearch search{g, h, {}, std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
    VertexSet placed;
    while (placed.size() < g.order()) {
        int root = -1;
        for (int v : (g.vertices() - placed).members())
            if (root < 0 || g.degree(v) > g.degree(root))
                root = v;
        std::vector<int> queue{root};
        placed = placed.with(root);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            search.order.push_back(queue[i]);
            for (int w : (g.neighbours(queue[i]) - placed).members()) {
                placed = placed.with(w);
                queue.push_back(w);
            }
        }
    }
    return search.extend(0);
}

} // namespace irdom
