#pragma once

#include <stdexcept>

#include "irdom/graph.hpp"

namespace irdom {

/// Optimal value of a set parameter with one optimal set attaining it.
///
/// Among all optimal sets the witness is the one with the smallest vertex
/// mask (VertexSet ordering).
struct Optimum {
    int size = 0;
    VertexSet witness;

    auto operator==(const Optimum &) const -> bool = default;
};

/// Orders above which the exponential enumerations refuse to run.
struct SolverLimits {
    int max_order = 26;
};

class SolverLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

auto is_independent(const Graph &g, VertexSet a) -> bool;
/// Independent, and members have pairwise distinct degrees in g.
auto is_irregular_independent(const Graph &g, VertexSet a) -> bool;
/// Independent, and all members share one degree.
auto is_regular_independent(const Graph &g, VertexSet a) -> bool;
auto is_dominating(const Graph &g, VertexSet d) -> bool;
/// Dominating, and |N(v) & d| is pairwise distinct over v outside d.
auto is_irregular_dominating(const Graph &g, VertexSet d) -> bool;
/// Dominating, and |N(v) & d| is the same for every v outside d.
auto is_regular_dominating(const Graph &g, VertexSet d) -> bool;
/// Number of edges with exactly one end in `side`.
auto cut_size(const Graph &g, VertexSet side) -> int;

// Every solver below throws std::invalid_argument on the graph with no vertices.

auto alpha(const Graph &g) -> Optimum;
/// Branch and bound over degree classes, at most one vertex per class.
auto alpha_ir(const Graph &g) -> Optimum;
/// Best independent set inside a single degree class.
auto alpha_reg(const Graph &g) -> Optimum;
/// Subset enumeration by increasing size, starting at max{ceil(n/2), n - Delta}.
auto gamma_ir(const Graph &g, SolverLimits limits = {}) -> Optimum;
auto gamma_reg(const Graph &g, SolverLimits limits = {}) -> Optimum;
/// Gray-code sweep over the 2^(n-1) bipartitions that keep vertex n-1 outside
/// the witness side.
auto max_cut(const Graph &g, SolverLimits limits = {}) -> Optimum;

struct ParameterReport {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    int span = 0;
    Optimum alpha;
    Optimum alpha_ir;
    Optimum alpha_reg;
    Optimum gamma_ir;
    Optimum gamma_reg;
    Optimum beta;

    /// d = 2m/n.
    auto average_degree() const -> double { return 2.0 * m / n; }
};

auto full_report(const Graph &g, SolverLimits limits = {}) -> ParameterReport;

} // namespace irdom
