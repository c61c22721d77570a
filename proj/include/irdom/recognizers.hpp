#pragma once

#include <string>

#include "irdom/graph.hpp"

namespace irdom {

/// Exact planarity: the blocks of g are embedded face by face
/// (Demoucron-Malgrange-Pertuiset), after an m <= 3n - 6 prescreen.
auto is_planar(const Graph &g) -> bool;

/// K_1 + g is planar. Throws std::invalid_argument when the apex graph would
/// exceed Graph::max_order.
auto is_outerplanar(const Graph &g) -> bool;

/// Every two vertices of different degree are adjacent, and each degree class
/// N_k induces a (k + n_k - n)-regular subgraph.
auto has_alpha_ir_one_structure(const Graph &g) -> bool;

enum class Family {
    None,
    // alpha_ir = 1 planar families, in precedence order.
    RegularPlanar,
    Star,
    CompleteBipartite2,
    K2JoinEmpty,
    K2JoinMatching,
    E2JoinMatching,
    E2JoinCycle,
    Windmill,
    K1JoinCycles,
    // alpha_ir = 1 outerplanar families (Star and Windmill shared).
    CycleUnion,
    Empty,
    PerfectMatching,
    K22,
    K2JoinE2,
    // gamma_ir in {n, n - 1}.
    IsolatedPlusStar,
    IsolatedPlusRegular,
};

auto family_name(Family f) -> std::string;

/// Family membership with its integer parameters. `t` and `r` mean:
/// RegularPlanar r = degree; Star r = leaves; CompleteBipartite2, K2JoinEmpty
/// r = n - 2; K2JoinMatching, E2JoinMatching, PerfectMatching, Windmill
/// r = number of K_2 copies; E2JoinCycle r = cycle length; K1JoinCycles,
/// CycleUnion r = number of cycles; Empty r = n; IsolatedPlusStar t isolated
/// vertices and r leaves; IsolatedPlusRegular t isolated vertices and r the
/// degree of the regular part.
struct FamilyTag {
    Family family = Family::None;
    int n = 0;
    int t = 0;
    int r = 0;

    auto matched() const -> bool { return family != Family::None; }
    auto to_string() const -> std::string;
    auto operator==(const FamilyTag &) const -> bool = default;
};

/// Structural match against the planar alpha_ir = 1 family list; the first
/// matching family in list order wins.
auto classify_planar_alpha1(const Graph &g) -> FamilyTag;
auto classify_outerplanar_alpha1(const Graph &g) -> FamilyTag;
/// Empty for E_n; IsolatedPlusStar / IsolatedPlusRegular for tK_1 u K_{1,r}
/// and tK_1 u H with H r-regular (r >= 1); None otherwise.
auto classify_gamma_extremal(const Graph &g) -> FamilyTag;

} // namespace irdom
