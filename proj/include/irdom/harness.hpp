#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irdom/bounds.hpp"
#include "irdom/constructions.hpp"
#include "irdom/graph.hpp"

namespace irdom {

/// Ids of every checked statement, in report order.
auto theorem_ids() -> const std::vector<std::string> &;

/// Largest order the sweep accepts.
inline constexpr int max_sweep_order = 8;

/// 2^C(n,2); throws std::invalid_argument outside [0, max_sweep_order].
auto labeled_graph_count(int n) -> std::uint64_t;
/// Calls visit on every labeled graph of order n in pair-mask order.
auto enumerate_labeled_graphs(int n, const std::function<void(const Graph &)> &visit) -> void;

enum class Status { Pass, Fail, NotApplicable };

auto status_name(Status s) -> std::string;

struct Verdict {
    std::string id;
    Status status = Status::NotApplicable;
    /// The instantiated statement; set for failures.
    std::string witness;
};

/// Parameters of a graph and of its complement used by the checks.
struct SweepParameters {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    int span = 0;
    int alpha = 0;
    int alpha_ir = 0;
    int alpha_reg = 0;
    int gamma_ir = 0;
    int beta = 0;
    int complement_alpha_ir = 0;
    int complement_gamma_ir = 0;

    auto to_string() const -> std::string;
};

struct TheoremReport {
    std::string graph;
    SweepParameters parameters;
    /// One entry per theorem id, in theorem_ids() order.
    std::vector<Verdict> verdicts;

    auto failed() const -> bool;
    auto verdict(const std::string &id) const -> const Verdict &;
};

/// Evaluates every statement on g; the order-0 graph gets not_applicable throughout.
auto theorem_report(const Graph &g, const BoundFormulas &formulas = {}) -> TheoremReport;

struct Counts {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t not_applicable = 0;
};

struct Failure {
    std::string id;
    std::string witness;
};

struct Violation {
    std::string graph;
    std::vector<Failure> failures;
    std::string parameters;
};

struct SweepOptions {
    int n_max = 0;
    int workers = 1;
    BoundFormulas formulas;
    /// Violations kept in the summary (smallest graph6 first); the total is always counted.
    std::size_t max_violations = 1000;
};

struct SweepSummary {
    int n_max = 0;
    std::string mutation;
    std::uint64_t graphs_checked = 0;
    /// Keyed by theorem id, in theorem_ids() order.
    std::vector<std::pair<std::string, Counts>> per_theorem;
    /// Per order: the least gamma_ir must equal the half term of the degree bound.
    Counts order_checks;
    std::uint64_t violations_total = 0;
    std::vector<Violation> violations;
    double wall_time_ms = 0;

    auto clean() const -> bool { return violations_total == 0; }
};

/// Sweeps every labeled graph of order 0..n_max; the summary (apart from
/// wall_time_ms) does not depend on the worker count.
auto verify_range(const SweepOptions &options) -> SweepSummary;

struct SharpnessCase {
    std::string family;
    FamilyParams params;
};

/// Every default grid, in a fixed order.
auto default_sharpness_grid() -> std::vector<SharpnessCase>;

struct SharpnessFailure {
    std::string family;
    std::string parameters;
    std::string graph;
    std::string detail;
};

struct SharpnessSummary {
    std::string mutation;
    std::uint64_t cases_checked = 0;
    /// Keyed by family id, in registry order.
    std::vector<std::pair<std::string, Counts>> per_family;
    std::vector<SharpnessFailure> violations;
    double wall_time_ms = 0;

    auto clean() const -> bool { return violations.empty(); }
};

struct SharpnessOptions {
    std::vector<SharpnessCase> grid = default_sharpness_grid();
    BoundFormulas formulas;
    /// Applied to the graph of a case when `corrupt` returns true for it.
    std::function<bool(const SharpnessCase &)> corrupt;
    Tamper tamper;
};

auto sharpness_suite(const SharpnessOptions &options) -> SharpnessSummary;

/// The fixed negative control: ng_gamma on 4 vertices with edge {0,1} removed.
auto corrupted_path_options(SharpnessOptions options) -> SharpnessOptions;

auto to_json(const TheoremReport &report) -> nlohmann::ordered_json;
auto to_json(const SweepSummary &summary) -> nlohmann::ordered_json;
auto to_json(const SharpnessSummary &summary) -> nlohmann::ordered_json;

} // namespace irdom
