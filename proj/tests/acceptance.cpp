// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "irdom/bounds.hpp"
#include "irdom/constructions.hpp"
#include "irdom/graph6.hpp"
#include "irdom/harness.hpp"
#include "irdom/params.hpp"
#include "irdom/recognizers.hpp"
#include "oracle.hpp"

namespace {

using namespace irdom;

struct Outcome {
    bool pass = true;
    std::string detail;
};

auto degree_range(const Graph &g) -> std::pair<int, int>
{
    int lo = g.order();
    int hi = 0;
    for (int v = 0; v < g.order(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi};
}

auto workers() -> int { return std::max(1U, std::thread::hardware_concurrency()); }

auto exhaustive_sweep() -> Outcome
{
    const auto s = verify_range({7, workers()});
    std::uint64_t applied = 0;
    bool complete = s.per_theorem.size() == theorem_ids().size();
    for (const auto &[id, c] : s.per_theorem) {
        applied += c.pass;
        complete = complete && c.pass + c.fail + c.not_applicable == s.graphs_checked;
    }
    std::ostringstream d;
    d << s.graphs_checked << " graphs, " << applied << " passing checks, " << s.violations_total << " violations, "
      << s.order_checks.pass << "/7 order checks";
    return {s.clean() && complete && s.graphs_checked == 2131020 && s.order_checks.pass == 7, d.str()};
}

auto oracle_equivalence() -> Outcome
{
    std::uint64_t mismatches = 0;
    std::uint64_t compared = 0;
    auto compare = [&](const Graph &g) {
        const auto a = alpha_ir(g);
        const auto b = oracle::alpha_ir(g);
        const auto c = gamma_ir(g);
        const auto d = oracle::gamma_ir(g);
        mismatches += (a.size != b.size || a.witness.mask() != b.witness) ? 1 : 0;
        mismatches += (c.size != d.size || c.witness.mask() != d.witness) ? 1 : 0;
        ++compared;
    };
    enumerate_labeled_graphs(6, compare);
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int i = 0; i < 1000; ++i)
        compare(oracle::random_graph(10, density(rng), rng));
    std::ostringstream d;
    d << compared << " graphs, " << mismatches << " mismatches";
    return {mismatches == 0 && compared == 32768 + 1000, d.str()};
}

auto sharpness_contracts() -> Outcome
{
    const auto suite = sharpness_suite({});
    int checked = 0;
    int wrong = 0;
    auto expect = [&](bool ok) {
        ++checked;
        wrong += ok ? 0 : 1;
    };
    for (int r = 1; r <= 4; ++r)
        for (int t = 1; t <= 4; ++t) {
            const auto g = build_clique_union(r, t);
            const auto [lo, hi] = degree_range(g);
            expect(oracle::alpha_ir(g).size == hi - lo + 1);
        }
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 6; ++t) {
            if (t * (t - 1) < 2 * r * (r - 1))
                continue;
            const auto g = build_modstar({r, t});
            const auto [lo, hi] = degree_range(g);
            const BoundInputs in{g.order(), g.size(), lo, hi, oracle::max_cut(g).size, 0};
            expect(std::abs(ub_alpha_ir_cut(in) - oracle::alpha_ir(g).size) <= 1e-9);
        }
    for (int n = 2; n <= 14; ++n) {
        const int k = ceil_half(n);
        const auto g = build_staircase({k, n - k, StaircaseKind::Ascending}, Assignment::Prefix);
        expect(g.order() == n && oracle::gamma_ir(g).size == k);
    }
    for (int n = 3; n <= 12; ++n) {
        const auto g = build_ng_gamma(n);
        expect(g.order() == n && oracle::gamma_ir(g).size + oracle::gamma_ir(complement(g)).size == 2 * ceil_half(n));
    }
    std::ostringstream d;
    d << suite.cases_checked << " grid cases with " << suite.violations.size() << " failures; " << checked
      << " oracle rechecks with " << wrong << " failures";
    return {suite.clean() && wrong == 0, d.str()};
}

struct Characterizations {
    std::uint64_t graphs = 0;
    std::uint64_t structure = 0;
    std::uint64_t planar = 0;
    std::uint64_t outerplanar = 0;
    std::uint64_t extremal = 0;
    std::uint64_t equality_mismatches = 0;
    std::uint64_t equality_graphs = 0;
};

auto scan_small_graphs() -> Characterizations
{
    Characterizations c;
    for (int n = 1; n <= 7; ++n)
        enumerate_labeled_graphs(n, [&](const Graph &g) {
            ++c.graphs;
            const bool one = alpha_ir(g).size == 1;
            c.structure += has_alpha_ir_one_structure(g) != one ? 1 : 0;
            c.planar += classify_planar_alpha1(g).matched() != (one && is_planar(g)) ? 1 : 0;
            c.outerplanar += classify_outerplanar_alpha1(g).matched() != (one && is_outerplanar(g)) ? 1 : 0;
            const int gi = gamma_ir(g).size;
            c.extremal += classify_gamma_extremal(g).matched() != (gi >= n - 1) ? 1 : 0;
            const double bound = lb_gamma_ir_average(n, 2.0 * g.size() / n);
            const bool equal = std::abs(gi - bound) <= 1e-9;
            c.equality_graphs += equal ? 1 : 0;
            c.equality_mismatches += equal != (g.size() == 0) ? 1 : 0;
        });
    return c;
}

auto characterizations(const Characterizations &c) -> Outcome
{
    std::ostringstream d;
    d << c.graphs << " graphs; mismatches: structure " << c.structure << ", planar " << c.planar << ", outerplanar "
      << c.outerplanar << ", gamma-extremal " << c.extremal;
    return {c.graphs == 2131019 && c.structure + c.planar + c.outerplanar + c.extremal == 0, d.str()};
}

auto equality_case(const Characterizations &c) -> Outcome
{
    std::ostringstream d;
    d << c.equality_graphs << " graphs attain n - sqrt(dn), " << c.equality_mismatches << " of them non-empty or missed";
    return {c.equality_mismatches == 0 && c.equality_graphs == 7, d.str()};
}

auto has_triangle_or_independent_triple(const Graph &g) -> bool
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int edges = int(g.adjacent(a, b)) + int(g.adjacent(a, c)) + int(g.adjacent(b, c));
                if (edges == 0 || edges == 3)
                    return true;
            }
    return false;
}

auto ramsey() -> Outcome
{
    std::uint64_t escaping = 0;
    enumerate_labeled_graphs(6, [&](const Graph &g) { escaping += has_triangle_or_independent_triple(g) ? 0 : 1; });
    const bool pentagon = has_triangle_or_independent_triple(cycle_graph(5));
    std::ostringstream d;
    d << escaping << " of 32768 six-vertex graphs avoid both; C_5 " << (pentagon ? "contains one" : "avoids both");
    return {escaping == 0 && !pentagon && RamseyTable{}.at(3) == 6, d.str()};
}

auto format_fidelity() -> Outcome
{
    std::uint64_t graphs = 0;
    std::uint64_t broken = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_labeled_graphs(n, [&](const Graph &g) {
            ++graphs;
            const auto text = write_graph6(g);
            broken += parse_graph6(text) == g && write_graph6(parse_graph6(text)) == text ? 0 : 1;
        });
    const bool hand = parse_graph6("C?") == empty_graph(4) && parse_graph6("C~") == complete_graph(4) &&
                      parse_graph6("Ch") == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}) &&
                      write_graph6(empty_graph(4)) == "C?" && write_graph6(complete_graph(4)) == "C~" &&
                      write_graph6(path_graph(4)) == "Ch";
    std::ostringstream d;
    d << graphs << " round trips, " << broken << " broken; C? C~ Ch " << (hand ? "match" : "differ");
    return {broken == 0 && hand && graphs == 1099, d.str()};
}

auto negative_controls() -> Outcome
{
    SweepOptions o{5, workers()};
    o.formulas.mutation = Mutation::DegreeCeilThird;
    const auto sweep = verify_range(o);
    bool sweep_ok = !sweep.clean() && !sweep.violations.empty();
    std::string sweep_witness;
    if (sweep_ok) {
        // The weakened bound claims some graph of order n has gamma_ir = ceil(n/3);
        // the witness has order 3 and no graph of that order goes below 2.
        const auto &v = sweep.violations.front();
        const auto g = parse_graph6(v.graph);
        int least = g.order();
        enumerate_labeled_graphs(g.order(), [&](const Graph &h) { least = std::min(least, oracle::gamma_ir(h).size); });
        sweep_ok = oracle::gamma_ir(g).size == least && least > (g.order() + 2) / 3;
        sweep_witness = v.graph + " (" + v.failures.front().id + ")";
    }
    const auto corrupted = sharpness_suite(corrupted_path_options({}));
    bool corrupt_ok = corrupted.violations.size() == 1;
    std::string corrupt_witness;
    if (corrupt_ok) {
        const auto g = parse_graph6(corrupted.violations.front().graph);
        corrupt_ok = oracle::gamma_ir(g).size + oracle::gamma_ir(complement(g)).size != 4;
        corrupt_witness = corrupted.violations.front().graph;
    }
    std::ostringstream d;
    d << "weakened bound: " << sweep.violations_total << " violations, witness " << sweep_witness
      << "; corrupted construction: " << corrupted.violations.size() << " violation, witness " << corrupt_witness;
    return {sweep_ok && corrupt_ok, d.str()};
}

} // namespace

auto main() -> int
{
    bool all = true;
    auto report = [&](int id, const std::function<Outcome()> &criterion) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criterion();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("criterion %d: %s  %s  [%.1f s]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
        std::fflush(stdout);
    };
    report(1, exhaustive_sweep);
    report(2, oracle_equivalence);
    report(3, sharpness_contracts);
    Characterizations scan;
    report(4, [&] {
        scan = scan_small_graphs();
        return characterizations(scan);
    });
    report(5, [&] { return equality_case(scan); });
    report(6, ramsey);
    report(7, format_fidelity);
    report(8, negative_controls);
    return all ? 0 : 1;
}
