#include "irdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace irdom {

RamseyTable::RamseyTable() : values_{{1, 1}, {2, 2}, {3, 6}, {4, 18}} {}

auto RamseyTable::at(int k) const -> int
{
    auto it = values_.find(k);
    if (it == values_.end())
        throw std::out_of_range("R(" + std::to_string(k) + "," + std::to_string(k) + ") is not tabulated");
    return it->second;
}

auto ceil_half(int x) -> int { return (x + 1) / 2; }
auto floor_half(int x) -> int { return x / 2; }

auto ub_alpha_ir_radical(const BoundInputs &in) -> double
{
    const double n = in.n;
    return (1.0 + std::sqrt(2.0 * n * n - 2.0 * n - 4.0 * in.m + 1.0)) / 2.0;
}

auto ub_alpha_ir_degree(const BoundInputs &in) -> double { return BoundFormulas{}.alpha_ir_degree(in); }

namespace {

auto quadratic_root(int min_degree, int edges) -> double
{
    const double twice = 2.0 * min_degree - 1.0;
    return (-twice + std::sqrt(twice * twice + 8.0 * edges)) / 2.0;
}

} // namespace

auto ub_alpha_ir_size(const BoundInputs &in) -> double { return quadratic_root(in.min_degree, in.m); }

auto ub_alpha_ir_cut(const BoundInputs &in) -> double { return quadratic_root(in.min_degree, in.beta); }

auto ub_span_alpha_ir_one(int min_degree) -> double
{
    return (1.0 + std::sqrt(1.0 + 8.0 * min_degree)) / 2.0;
}

auto lb_gamma_ir_degree(int n, int max_degree) -> int { return BoundFormulas{}.gamma_ir_degree(n, max_degree); }

auto lb_gamma_ir_cut(int n, int beta) -> double
{
    return n + (1.0 - std::sqrt(1.0 + 8.0 * beta)) / 2.0;
}

auto lb_gamma_ir_average(int n, double average_degree) -> double
{
    return n - std::sqrt(average_degree * n);
}

auto ub_gamma_ir_span(int n, int span, int min_degree, const RamseyTable &ramsey) -> std::optional<int>
{
    std::optional<int> best;
    auto offer = [&](int bound) { best = best ? std::min(*best, bound) : bound; };
    for (const auto &[k, r] : ramsey.entries())
        if (span >= r && min_degree >= k)
            offer(n - k);
    if (span >= 5 && min_degree >= 3)
        offer(n - 3);
    return best;
}

auto mutation_name(Mutation m) -> std::string
{
    switch (m) {
    case Mutation::None: return "none";
    case Mutation::DegreeCeilThird: return "degree-ceil-third";
    case Mutation::HalfFloorTightened: return "half-floor-tightened";
    }
    return "unknown";
}

auto parse_mutation(std::string_view name) -> Mutation
{
    for (auto m : {Mutation::None, Mutation::DegreeCeilThird, Mutation::HalfFloorTightened})
        if (mutation_name(m) == name)
            return m;
    throw std::invalid_argument("unknown mutation '" + std::string(name) + "'");
}

auto BoundFormulas::gamma_ir_half_term(int n) const -> int
{
    return mutation == Mutation::DegreeCeilThird ? (n + 2) / 3 : ceil_half(n);
}

auto BoundFormulas::gamma_ir_degree(int n, int max_degree) const -> int
{
    return std::max(gamma_ir_half_term(n), n - max_degree);
}

auto BoundFormulas::alpha_ir_half_term(int n, int min_degree) const -> int
{
    return mutation == Mutation::HalfFloorTightened ? floor_half(n - min_degree) : floor_half(n - min_degree + 1);
}

auto BoundFormulas::alpha_ir_degree(const BoundInputs &in) const -> double
{
    const int spread = in.max_degree - in.min_degree + 1;
    const int halved = alpha_ir_half_term(in.n, in.min_degree);
    return std::min({static_cast<double>(spread), static_cast<double>(halved), ub_alpha_ir_radical(in)});
}

} // namespace irdom
