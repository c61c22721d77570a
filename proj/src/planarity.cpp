#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "irdom/recognizers.hpp"

namespace irdom {

namespace {

using Mask = std::uint64_t;

auto bit(int v) -> Mask { return Mask{1} << v; }

/// Vertex sets of the biconnected components with at least three vertices.
class BlockFinder {
public:
    explicit BlockFinder(const Graph &g)
        : g_(g), discovered_(static_cast<std::size_t>(g.order()), -1), low_(discovered_)
    {
        for (int v = 0; v < g.order(); ++v)
            if (discovered_[v] < 0)
                visit(v, -1);
    }

    auto blocks() const -> const std::vector<VertexSet> & { return blocks_; }

private:
    auto visit(int u, int parent) -> void
    {
        discovered_[u] = low_[u] = clock_++;
        for (int v : g_.neighbours(u).members()) {
            if (discovered_[v] < 0) {
                stack_.push_back({u, v});
                visit(v, u);
                low_[u] = std::min(low_[u], low_[v]);
                if (low_[v] >= discovered_[u])
                    pop_block(u, v);
            } else if (v != parent && discovered_[v] < discovered_[u]) {
                stack_.push_back({u, v});
                low_[u] = std::min(low_[u], discovered_[v]);
            }
        }
    }

    auto pop_block(int u, int v) -> void
    {
        VertexSet block;
        while (true) {
            const Edge e = stack_.back();
            stack_.pop_back();
            block = block.with(e.u).with(e.v);
            if (e.u == u && e.v == v)
                break;
        }
        if (block.size() >= 3)
            blocks_.push_back(block);
    }

    const Graph &g_;
    std::vector<int> discovered_;
    std::vector<int> low_;
    std::vector<Edge> stack_;
    std::vector<VertexSet> blocks_;
    int clock_ = 0;
};

/// A bridge of the embedded subgraph: a chord between embedded vertices, or a
/// component of the unembedded vertices together with its attachments.
struct Fragment {
    Mask attachments = 0;
    Mask interior = 0; // empty for a chord
};

/// Face-by-face embedding of a biconnected graph.
class Embedder {
public:
    explicit Embedder(const Graph &g) : g_(g), embedded_edges_(static_cast<std::size_t>(g.order()), 0) {}

    auto planar() -> bool
    {
        embed_initial_cycle();
        while (embedded_edge_count_ < g_.size()) {
            const auto fragments = find_fragments();
            std::optional<std::size_t> chosen_fragment;
            std::size_t chosen_face = 0;
            for (std::size_t i = 0; i < fragments.size(); ++i) {
                const auto faces = admissible_faces(fragments[i]);
                if (faces.empty())
                    return false;
                if (!chosen_fragment || faces.size() == 1) {
                    chosen_fragment = i;
                    chosen_face = faces.front();
                    if (faces.size() == 1)
                        break;
                }
            }
            embed_path(chosen_face, path_through(fragments[*chosen_fragment]));
        }
        return true;
    }

private:
    auto embed_initial_cycle() -> void
    {
        // A biconnected graph on >= 3 vertices has a cycle through any edge.
        const int u = 0;
        const int v = g_.neighbours(u).first();
        std::vector<int> parent(static_cast<std::size_t>(g_.order()), -1);
        std::vector<int> queue{v};
        parent[v] = v;
        for (std::size_t i = 0; i < queue.size() && parent[u] < 0; ++i)
            for (int w : g_.neighbours(queue[i]).members()) {
                if (parent[w] >= 0 || (queue[i] == v && w == u))
                    continue;
                parent[w] = queue[i];
                queue.push_back(w);
            }
        std::vector<int> cycle;
        for (int w = u; w != v; w = parent[w])
            cycle.push_back(w);
        cycle.push_back(v);
        for (std::size_t i = 0; i < cycle.size(); ++i)
            add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        faces_ = {cycle, cycle};
    }

    auto add_edge(int a, int b) -> void
    {
        embedded_ |= bit(a) | bit(b);
        embedded_edges_[a] |= bit(b);
        embedded_edges_[b] |= bit(a);
        ++embedded_edge_count_;
    }

    auto find_fragments() const -> std::vector<Fragment>
    {
        std::vector<Fragment> out;
        for (Mask e = embedded_; e != 0; e &= e - 1) {
            const int a = std::countr_zero(e);
            Mask chords = g_.neighbours(a).mask() & embedded_ & ~embedded_edges_[a] & ~(bit(a + 1) - 1);
            for (; chords != 0; chords &= chords - 1)
                out.push_back({bit(a) | bit(std::countr_zero(chords)), 0});
        }
        Mask rest = g_.vertices().mask() & ~embedded_;
        while (rest != 0) {
            Mask component = bit(std::countr_zero(rest));
            Mask frontier = component;
            while (frontier != 0) {
                Mask next = 0;
                for (; frontier != 0; frontier &= frontier - 1)
                    next |= g_.neighbours(std::countr_zero(frontier)).mask();
                next &= ~embedded_ & ~component;
                component |= next;
                frontier = next;
            }
            Mask attachments = 0;
            for (Mask c = component; c != 0; c &= c - 1)
                attachments |= g_.neighbours(std::countr_zero(c)).mask() & embedded_;
            out.push_back({attachments, component});
            rest &= ~component;
        }
        return out;
    }

    auto admissible_faces(const Fragment &f) const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            Mask boundary = 0;
            for (int v : faces_[i])
                boundary |= bit(v);
            if ((f.attachments & ~boundary) == 0)
                out.push_back(i);
        }
        return out;
    }

    /// Path between two distinct attachments through the fragment interior.
    auto path_through(const Fragment &f) const -> std::vector<int>
    {
        const int a = std::countr_zero(f.attachments);
        if (f.interior == 0)
            return {a, 63 - std::countl_zero(f.attachments)};
        const Mask others = f.attachments & ~bit(a);
        std::vector<int> parent(static_cast<std::size_t>(g_.order()), -1);
        std::vector<int> queue;
        for (int s : VertexSet(g_.neighbours(a).mask() & f.interior).members()) {
            parent[s] = a;
            queue.push_back(s);
        }
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const int x = queue[i];
            const Mask exits = g_.neighbours(x).mask() & others;
            if (exits != 0) {
                std::vector<int> path{std::countr_zero(exits)};
                for (int w = x; w != a; w = parent[w])
                    path.push_back(w);
                path.push_back(a);
                std::ranges::reverse(path);
                return path;
            }
            for (int w : VertexSet(g_.neighbours(x).mask() & f.interior).members())
                if (parent[w] < 0) {
                    parent[w] = x;
                    queue.push_back(w);
                }
        }
        throw std::logic_error("fragment with a single attachment in a biconnected graph");
    }

    auto embed_path(std::size_t face_index, const std::vector<int> &path) -> void
    {
        const auto face = faces_[face_index];
        const auto k = face.size();
        const auto i = static_cast<std::size_t>(std::ranges::find(face, path.front()) - face.begin());
        const auto j = static_cast<std::size_t>(std::ranges::find(face, path.back()) - face.begin());
        std::vector<int> first, second;
        for (auto p = i;; p = (p + 1) % k) {
            first.push_back(face[p]);
            if (p == j)
                break;
        }
        first.insert(first.end(), path.rbegin() + 1, path.rend() - 1);
        for (auto p = j;; p = (p + 1) % k) {
            second.push_back(face[p]);
            if (p == i)
                break;
        }
        second.insert(second.end(), path.begin() + 1, path.end() - 1);
        faces_[face_index] = std::move(first);
        faces_.push_back(std::move(second));
        for (std::size_t p = 0; p + 1 < path.size(); ++p)
            add_edge(path[p], path[p + 1]);
    }

    const Graph &g_;
    Mask embedded_ = 0;
    std::vector<Mask> embedded_edges_;
    int embedded_edge_count_ = 0;
    std::vector<std::vector<int>> faces_;
};

} // namespace

auto is_planar(const Graph &g) -> bool
{
    const int n = g.order();
    if (n <= 4)
        return true;
    if (g.size() > 3 * n - 6)
        return false;
    const BlockFinder finder(g);
    for (auto block : finder.blocks()) {
        const auto b = induced_subgraph(g, block);
        if (b.size() > 3 * b.order() - 6 || !Embedder(b).planar())
            return false;
    }
    return true;
}

auto is_outerplanar(const Graph &g) -> bool
{
    if (g.order() + 1 > Graph::max_order)
        throw std::invalid_argument("outerplanarity test limited to n <= " + std::to_string(Graph::max_order - 1));
    return is_planar(join(Graph(1), g));
}

} // namespace irdom
