#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irdom/bounds.hpp"
#include "irdom/graph.hpp"

namespace irdom {

/// A claimed parameter value about a construction, re-computed by the solvers.
struct Claim {
    std::string name;
    double claimed = 0;
    double computed = 0;
    /// 0 for integer claims, radical_tolerance for radical-valued ones.
    double tolerance = 0;

    auto holds() const -> bool;
    /// "name=claimed" or, when it fails, "name: claimed C, computed X".
    auto to_string() const -> std::string;
};

/// Raised by the build_* functions when a claim does not hold.
class ConstructionFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Parameters shared by every family; each family reads only its own.
struct FamilyParams {
    int r = 0;
    int t = 0;
    int n = 0;
    int k = 0;
    /// staircase: asc | asc0 | desc; relation_extremal: delta_pos | delta_zero | complement.
    std::string variant;
};

struct Construction {
    std::string family;
    /// "r=1 t=3" style, in the family's parameter order.
    std::string parameters;
    Graph graph;
    std::vector<Claim> claims;

    auto ok() const -> bool;
    /// "# <family> <parameters> | <claim>=<value> ...".
    auto metadata() const -> std::string;
};

struct FamilySpec {
    std::string id;
    /// Flags the family reads, in order, e.g. {"r", "t"}.
    std::vector<std::string> parameters;
    /// Throws std::invalid_argument when the parameters are out of range.
    std::function<Graph(const FamilyParams &)> make;
    std::function<std::vector<Claim>(const FamilyParams &, const Graph &, const BoundFormulas &)> check;
};

auto family_registry() -> const std::vector<FamilySpec> &;
/// Throws std::invalid_argument for an unknown id.
auto find_family(std::string_view id) -> const FamilySpec &;

/// Optional edit applied to a graph between make and check.
using Tamper = std::function<Graph(const Graph &)>;

/// Builds and evaluates every claim; never throws on a failing claim.
auto assess(std::string_view family, const FamilyParams &params, const BoundFormulas &formulas = {},
            const Tamper &tamper = {}) -> Construction;
/// assess, throwing ConstructionFailed if any claim fails.
auto build(std::string_view family, const FamilyParams &params) -> Construction;

enum class StaircaseKind {
    /// v_i receives i hub neighbours.
    Ascending,
    /// v_i receives i - 1 hub neighbours.
    AscendingFromZero,
    /// v_i receives k - i + 1 hub neighbours.
    Descending,
};

enum class Assignment {
    /// Lowest-index hub vertices.
    Prefix,
    /// Consecutive hub vertices continuing cyclically from where v_{i-1} stopped.
    RoundRobin,
};

/// Hub vertices u_1..u_k are 0..k-1 and v_1..v_t are k..k+t-1.
struct StaircaseProfile {
    int k = 0;
    int t = 0;
    StaircaseKind kind = StaircaseKind::Ascending;
    /// Added to every v degree.
    int offset = 0;

    auto degree_of(int i) const -> int;
};

/// Consecutive-interval schedule with k = r + t - 1 hub vertices, where v_i
/// takes the next r + i - 1 hub vertices cyclically.
struct ModStarSchedule {
    int r = 0;
    int t = 0;

    auto k() const -> int { return r + t - 1; }
    /// s_i = sum_{j<i} (r + j).
    auto s(int i) const -> int;
};

/// Bipartite staircase; throws std::invalid_argument if some degree_of(i)
/// falls outside [0, k].
auto make_staircase(const StaircaseProfile &profile, Assignment assignment) -> Graph;

// Each build_* returns the graph after checking its claims with the exact
// solvers; failures raise ConstructionFailed.

/// K_r u K_{r+1} u ... u K_{r+t-1}.
auto build_clique_union(int r, int t) -> Graph;
auto build_staircase(const StaircaseProfile &profile, Assignment assignment) -> Graph;
/// Requires t(t-1) >= 2r(r-1).
auto build_alpha_sharp_bipartite(int r, int t) -> Graph;
/// Requires r >= t >= 1.
auto build_alpha_sharp_clique(int r, int t) -> Graph;
auto build_modstar(const ModStarSchedule &schedule) -> Graph;
auto build_product_extremal(int n) -> Graph;
/// E_{k-2} u K_{n-k+2}; requires 2 <= k <= n + 1.
auto build_sum_extremal(int n, int k) -> Graph;
auto build_ng_alpha(int n) -> Graph;
auto build_ng_gamma(int n) -> Graph;
/// case_id: delta_pos | delta_zero | complement.
auto build_relation_extremal(int n, std::string_view case_id) -> Graph;
/// K_{1,2,...,k}.
auto build_multipartite_span(int k) -> Graph;

} // namespace irdom
