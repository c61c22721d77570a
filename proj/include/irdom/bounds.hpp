#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace irdom {

/// Slack used whenever a radical-valued bound is compared with an integer.
inline constexpr double radical_tolerance = 1e-9;

/// Graph statistics every closed-form bound is written in.
struct BoundInputs {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    int beta = 0;
    int span = 0;

    auto average_degree() const -> double { return n == 0 ? 0.0 : 2.0 * m / n; }
};

/// Known diagonal Ramsey numbers R(k,k).
class RamseyTable {
public:
    RamseyTable();

    /// Throws std::out_of_range for k without a known value.
    auto at(int k) const -> int;
    auto entries() const -> const std::map<int, int> & { return values_; }

private:
    std::map<int, int> values_;
};

auto ceil_half(int x) -> int;
auto floor_half(int x) -> int;

// Upper bounds on alpha_ir.

/// min{Delta - delta + 1, floor((n - delta + 1)/2), (1 + sqrt(2n^2 - 2n - 4m + 1))/2}.
auto ub_alpha_ir_degree(const BoundInputs &in) -> double;
/// The radical term of ub_alpha_ir_degree alone.
auto ub_alpha_ir_radical(const BoundInputs &in) -> double;
/// (-2 delta + 1 + sqrt((2 delta - 1)^2 + 8m)) / 2.
auto ub_alpha_ir_size(const BoundInputs &in) -> double;
/// Same form as ub_alpha_ir_size with the maximum cut in place of m.
auto ub_alpha_ir_cut(const BoundInputs &in) -> double;
/// Span bound for graphs with alpha_ir = 1: (1 + sqrt(1 + 8 delta)) / 2.
auto ub_span_alpha_ir_one(int min_degree) -> double;

// Lower bounds on gamma_ir.

auto lb_gamma_ir_degree(int n, int max_degree) -> int;
/// n + (1 - sqrt(1 + 8 beta)) / 2.
auto lb_gamma_ir_cut(int n, int beta) -> double;
/// n - sqrt(d n).
auto lb_gamma_ir_average(int n, double average_degree) -> double;

/// Smallest upper bound on gamma_ir obtainable from the Ramsey rule
/// (span >= R(k,k) and delta >= k gives n - k, for tabulated k) and the
/// span >= 5, delta >= 3 rule (n - 3); nullopt when neither applies.
auto ub_gamma_ir_span(int n, int span, int min_degree, const RamseyTable &ramsey = RamseyTable{})
    -> std::optional<int>;

/// Deliberate corruptions of single bound terms, used as negative controls.
enum class Mutation {
    None,
    /// ceil(n/2) becomes ceil(n/3) in the degree lower bound on gamma_ir.
    DegreeCeilThird,
    /// floor((n - delta + 1)/2) becomes floor((n - delta)/2) in the alpha_ir bound.
    HalfFloorTightened,
};

auto mutation_name(Mutation m) -> std::string;
/// Throws std::invalid_argument on an unknown name.
auto parse_mutation(std::string_view name) -> Mutation;

/// The bound formulas as seen by the checks, with an optional mutation applied.
struct BoundFormulas {
    Mutation mutation = Mutation::None;

    /// ceil(n/2), the order term of lb_gamma_ir_degree.
    auto gamma_ir_half_term(int n) const -> int;
    auto gamma_ir_degree(int n, int max_degree) const -> int;
    /// floor((n - delta + 1)/2), the middle term of ub_alpha_ir_degree.
    auto alpha_ir_half_term(int n, int min_degree) const -> int;
    auto alpha_ir_degree(const BoundInputs &in) const -> double;
};

} // namespace irdom
