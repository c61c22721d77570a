#include "irdom/params.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

namespace irdom {

namespace {

using Mask = std::uint64_t;

auto bit(int v) -> Mask { return Mask{1} << v; }

auto require_vertices(const Graph &g) -> void
{
    if (g.order() == 0)
        throw std::invalid_argument("parameter of the graph with no vertices");
}

auto require_within(const Graph &g, SolverLimits limits, const char *what) -> void
{
    if (g.order() > limits.max_order)
        throw SolverLimitExceeded(std::string(what) + " refuses n = " + std::to_string(g.order()) +
                                  " (limit " + std::to_string(limits.max_order) + ")");
}

/// Bitmask of the degrees occurring among `set`.
auto degree_signature(const Graph &g, Mask set) -> Mask
{
    Mask degrees = 0;
    for (; set != 0; set &= set - 1)
        degrees |= bit(g.degree(std::countr_zero(set)));
    return degrees;
}

auto same_degree_as(const Graph &g, int v, Mask within) -> Mask
{
    Mask out = 0;
    for (; within != 0; within &= within - 1) {
        const int w = std::countr_zero(within);
        if (g.degree(w) == g.degree(v))
            out |= bit(w);
    }
    return out;
}

/// First independent set of exactly `target` vertices drawn from `candidates`
/// in increasing mask order. Vertices are decided from the highest index
/// down, excluding before including, so the first hit has the smallest mask.
class OrderedIndependentSearch {
public:
    OrderedIndependentSearch(const Graph &g, int target, bool distinct_degrees)
        : g_(g), target_(target), distinct_(distinct_degrees)
    {
    }

    auto find(Mask candidates) -> std::optional<Mask>
    {
        if (descend(0, 0, candidates))
            return found_;
        return std::nullopt;
    }

private:
    auto bound(Mask candidates) const -> int
    {
        return distinct_ ? std::popcount(degree_signature(g_, candidates)) : std::popcount(candidates);
    }

    auto descend(Mask chosen, int size, Mask candidates) -> bool
    {
        if (size == target_) {
            found_ = chosen;
            return true;
        }
        if (size + bound(candidates) < target_)
            return false;
        const int v = 63 - std::countl_zero(candidates);
        if (descend(chosen, size, candidates & ~bit(v)))
            return true;
        Mask rest = candidates & ~bit(v) & ~g_.neighbours(v).mask();
        if (distinct_)
            rest &= ~same_degree_as(g_, v, rest);
        return descend(chosen | bit(v), size + 1, rest);
    }

    const Graph &g_;
    int target_;
    bool distinct_;
    Mask found_ = 0;
};

/// Size of a maximum independent set inside `candidates`.
class IndependenceBound {
public:
    explicit IndependenceBound(const Graph &g) : g_(g) {}

    auto solve(Mask candidates) -> int
    {
        best_ = 0;
        descend(0, candidates);
        return best_;
    }

private:
    auto descend(int size, Mask candidates) -> void
    {
        best_ = std::max(best_, size);
        if (size + std::popcount(candidates) <= best_)
            return;
        // Branch on the candidate with most candidate neighbours.
        int pivot = -1;
        int pivot_degree = -1;
        for (Mask c = candidates; c != 0; c &= c - 1) {
            const int v = std::countr_zero(c);
            const int d = std::popcount(g_.neighbours(v).mask() & candidates);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot_degree == 0) {
            best_ = std::max(best_, size + std::popcount(candidates));
            return;
        }
        descend(size + 1, candidates & ~bit(pivot) & ~g_.neighbours(pivot).mask());
        descend(size, candidates & ~bit(pivot));
    }

    const Graph &g_;
    int best_ = 0;
};

/// Irregular independence number by branching over degree classes, highest
/// class degree first, taking at most one vertex from each class.
class IrregularIndependenceBound {
public:
    explicit IrregularIndependenceBound(const Graph &g) : g_(g)
    {
        const auto classes = classify_degrees(g).classes;
        for (auto it = classes.rbegin(); it != classes.rend(); ++it)
            classes_.push_back(it->second.mask());
    }

    auto solve() -> int
    {
        best_ = 0;
        descend(0, 0, g_.vertices().mask());
        return best_;
    }

private:
    auto descend(std::size_t next, int size, Mask candidates) -> void
    {
        best_ = std::max(best_, size);
        int reachable = 0;
        for (std::size_t j = next; j < classes_.size(); ++j)
            reachable += (classes_[j] & candidates) != 0 ? 1 : 0;
        if (size + reachable <= best_)
            return;
        for (Mask c = classes_[next] & candidates; c != 0; c &= c - 1) {
            const int v = std::countr_zero(c);
            descend(next + 1, size + 1, candidates & ~classes_[next] & ~g_.neighbours(v).mask());
        }
        descend(next + 1, size, candidates & ~classes_[next]);
    }

    const Graph &g_;
    std::vector<Mask> classes_;
    int best_ = 0;
};

/// Next mask with the same popcount (Gosper's hack).
auto next_same_popcount(Mask x) -> Mask
{
    const Mask lowest = x & (~x + 1);
    const Mask ripple = x + lowest;
    return (((ripple ^ x) >> 2) / lowest) | ripple;
}

template <class Accept>
auto smallest_accepted(const Graph &g, int from_size, Accept accept) -> Optimum
{
    const int n = g.order();
    const Mask limit = bit(n);
    for (int s = from_size; s <= n; ++s) {
        if (s == 0) {
            if (accept(Mask{0}))
                return {0, VertexSet{}};
            continue;
        }
        for (Mask d = bit(s) - 1; d < limit; d = next_same_popcount(d))
            if (accept(d))
                return {s, VertexSet(d)};
    }
    throw std::logic_error("no acceptable set found; V(G) should always qualify");
}

} // namespace

auto is_independent(const Graph &g, VertexSet a) -> bool
{
    for (int v : a.members())
        if (!(g.neighbours(v) & a).empty())
            return false;
    return true;
}

auto is_irregular_independent(const Graph &g, VertexSet a) -> bool
{
    if (!is_independent(g, a))
        return false;
    Mask seen = 0;
    for (int v : a.members()) {
        if ((seen >> g.degree(v)) & 1U)
            return false;
        seen |= bit(g.degree(v));
    }
    return true;
}

auto is_regular_independent(const Graph &g, VertexSet a) -> bool
{
    return is_independent(g, a) && std::popcount(degree_signature(g, a.mask())) <= 1;
}

auto is_dominating(const Graph &g, VertexSet d) -> bool
{
    for (int v : (g.vertices() - d).members())
        if ((g.neighbours(v) & d).empty())
            return false;
    return true;
}

auto is_irregular_dominating(const Graph &g, VertexSet d) -> bool
{
    Mask seen = 0;
    for (Mask out = (g.vertices() - d).mask(); out != 0; out &= out - 1) {
        const int count = (g.neighbours(std::countr_zero(out)) & d).size();
        if (count == 0 || ((seen >> count) & 1U))
            return false;
        seen |= bit(count);
    }
    return true;
}

auto is_regular_dominating(const Graph &g, VertexSet d) -> bool
{
    int shared = -1;
    for (Mask out = (g.vertices() - d).mask(); out != 0; out &= out - 1) {
        const int count = (g.neighbours(std::countr_zero(out)) & d).size();
        if (count == 0 || (shared >= 0 && count != shared))
            return false;
        shared = count;
    }
    return true;
}

auto cut_size(const Graph &g, VertexSet side) -> int
{
    int cut = 0;
    for (int v : side.members())
        cut += (g.neighbours(v) - side).size();
    return cut;
}

auto alpha(const Graph &g) -> Optimum
{
    require_vertices(g);
    const int size = IndependenceBound(g).solve(g.vertices().mask());
    const auto witness = OrderedIndependentSearch(g, size, false).find(g.vertices().mask());
    return {size, VertexSet(*witness)};
}

auto alpha_ir(const Graph &g) -> Optimum
{
    require_vertices(g);
    const int size = IrregularIndependenceBound(g).solve();
    const auto witness = OrderedIndependentSearch(g, size, true).find(g.vertices().mask());
    return {size, VertexSet(*witness)};
}

auto alpha_reg(const Graph &g) -> Optimum
{
    require_vertices(g);
    const auto classes = classify_degrees(g).classes;
    IndependenceBound solver(g);
    int best = 0;
    std::vector<Mask> best_classes;
    for (const auto &[degree, members] : classes) {
        const int size = solver.solve(members.mask());
        if (size > best) {
            best = size;
            best_classes.clear();
        }
        if (size == best)
            best_classes.push_back(members.mask());
    }
    Mask witness = ~Mask{0};
    for (Mask c : best_classes)
        witness = std::min(witness, *OrderedIndependentSearch(g, best, false).find(c));
    return {best, VertexSet(witness)};
}

auto gamma_ir(const Graph &g, SolverLimits limits) -> Optimum
{
    require_vertices(g);
    require_within(g, limits, "gamma_ir");
    const int n = g.order();
    int max_degree = 0;
    for (int v = 0; v < n; ++v)
        max_degree = std::max(max_degree, g.degree(v));
    const int lower = std::max((n + 1) / 2, n - max_degree);
    return smallest_accepted(g, lower, [&](Mask d) { return is_irregular_dominating(g, VertexSet(d)); });
}

auto gamma_reg(const Graph &g, SolverLimits limits) -> Optimum
{
    require_vertices(g);
    require_within(g, limits, "gamma_reg");
    return smallest_accepted(g, 1, [&](Mask d) { return is_regular_dominating(g, VertexSet(d)); });
}

auto max_cut(const Graph &g, SolverLimits limits) -> Optimum
{
    require_vertices(g);
    require_within(g, limits, "max_cut");
    const int n = g.order();
    const Mask all = g.vertices().mask();
    Mask side = 0;
    int cut = 0;
    Optimum best{0, VertexSet{}};
    const Mask steps = bit(n - 1);
    for (Mask i = 1; i < steps; ++i) {
        const int v = std::countr_zero(i);
        const Mask nbrs = g.neighbours(v).mask();
        const Mask same = (side >> v) & 1U ? side : (all & ~side);
        cut += std::popcount(nbrs & same) - std::popcount(nbrs & ~same);
        side ^= bit(v);
        if (cut > best.size || (cut == best.size && side < best.witness.mask()))
            best = {cut, VertexSet(side)};
    }
    return best;
}

auto full_report(const Graph &g, SolverLimits limits) -> ParameterReport
{
    const auto degrees = classify_degrees(g);
    ParameterReport r;
    r.n = g.order();
    r.m = g.size();
    r.min_degree = degrees.min_degree;
    r.max_degree = degrees.max_degree;
    r.span = degrees.span;
    r.alpha = alpha(g);
    r.alpha_ir = alpha_ir(g);
    r.alpha_reg = alpha_reg(g);
    r.gamma_ir = gamma_ir(g, limits);
    r.gamma_reg = gamma_reg(g, limits);
    r.beta = max_cut(g, limits);
    return r;
}

} // namespace irdom
