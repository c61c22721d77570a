#include "irdom/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "irdom/graph6.hpp"
#include "irdom/params.hpp"
#include "irdom/recognizers.hpp"

namespace irdom {

namespace {

constexpr std::size_t theorem_count = 28;

auto num(double x) -> std::string
{
    if (std::abs(x - std::round(x)) < 1e-12)
        return std::to_string(static_cast<long long>(std::llround(x)));
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

auto yes_no(bool b) -> std::string { return b ? "true" : "false"; }

/// Collects verdicts in theorem_ids() order; witnesses are only built on failure.
class Verdicts {
public:
    explicit Verdicts(std::vector<Verdict> &out) : out_(out) {}

    auto not_applicable(const char *id) -> void { out_.push_back({id, Status::NotApplicable, {}}); }

    template <class Witness>
    auto check(const char *id, bool holds, Witness witness) -> void
    {
        if (holds)
            out_.push_back({id, Status::Pass, {}});
        else
            out_.push_back({id, Status::Fail, witness()});
    }

    template <class Witness>
    auto check_if(const char *id, bool applicable, bool holds, Witness witness) -> void
    {
        if (applicable)
            check(id, holds, witness);
        else
            not_applicable(id);
    }

private:
    std::vector<Verdict> &out_;
};

auto measure(const Graph &g, const DegreeClassification &d) -> SweepParameters
{
    SweepParameters p;
    p.n = g.order();
    p.m = g.size();
    p.min_degree = d.min_degree;
    p.max_degree = d.max_degree;
    p.span = d.span;
    p.alpha = alpha(g).size;
    p.alpha_ir = alpha_ir(g).size;
    p.alpha_reg = alpha_reg(g).size;
    p.gamma_ir = gamma_ir(g).size;
    p.beta = max_cut(g).size;
    const auto c = complement(g);
    p.complement_alpha_ir = alpha_ir(c).size;
    p.complement_gamma_ir = gamma_ir(c).size;
    return p;
}

auto evaluate(const Graph &g, const DegreeClassification &d, const SweepParameters &p, const BoundFormulas &f,
              std::vector<Verdict> &out) -> void
{
    constexpr double tol = radical_tolerance;
    const int n = p.n;
    const int m = p.m;
    const int a = p.alpha_ir;
    const int reg = p.alpha_reg;
    const int gi = p.gamma_ir;
    const bool empty = m == 0;
    const bool complete = m == n * (n - 1) / 2;
    const BoundInputs in{n, m, p.min_degree, p.max_degree, p.beta, p.span};
    Verdicts v(out);

    // Independence bounds.
    const double t21 = f.alpha_ir_degree(in);
    v.check("T2.1", 1 <= a && a <= t21 + tol, [&] {
        return "1 <= alpha_ir=" + num(a) + " <= min{Delta-delta+1=" + num(p.max_degree - p.min_degree + 1) +
               ", floor((n-delta+1)/2)=" + num(f.alpha_ir_half_term(n, p.min_degree)) +
               ", (1+sqrt(2n^2-2n-4m+1))/2=" + num(ub_alpha_ir_radical(in)) + "} = " + num(t21);
    });
    const double e1 = ub_alpha_ir_size(in);
    v.check("E1", a <= e1 + tol, [&] {
        return "alpha_ir=" + num(a) + " <= (-2delta+1+sqrt((2delta-1)^2+8m))/2=" + num(e1);
    });
    const double t22 = ub_alpha_ir_cut(in);
    v.check("T2.2", a <= t22 + tol, [&] {
        return "alpha_ir=" + num(a) + " <= (-2delta+1+sqrt((2delta-1)^2+8beta))/2=" + num(t22);
    });

    // alpha_ir against alpha_reg.
    const int sum = a + reg;
    const int prod = a * reg;
    const int half_product = floor_half(n) * ceil_half(n);
    v.check("T2.3i", 2 <= sum && sum <= n + 1, [&] {
        return "2 <= alpha_ir+alpha_reg=" + num(sum) + " <= n+1=" + num(n + 1);
    });
    v.check("T2.3ii", p.alpha <= prod && prod <= p.alpha * p.alpha, [&] {
        return "alpha=" + num(p.alpha) + " <= alpha_ir*alpha_reg=" + num(prod) + " <= alpha^2=" +
               num(p.alpha * p.alpha);
    });
    v.check_if("T2.3iii", n >= 4, 1 <= prod && prod <= half_product, [&] {
        return "1 <= alpha_ir*alpha_reg=" + num(prod) + " <= floor(n/2)ceil(n/2)=" + num(half_product);
    });
    v.check("T2.3b", (sum == n + 1) == empty, [&] {
        return "alpha_ir+alpha_reg=" + num(sum) + " (n+1=" + num(n + 1) + ") but empty=" + yes_no(empty);
    });
    v.check_if("C2.4", n >= 4, prod <= std::min(p.alpha * p.alpha, half_product), [&] {
        return "alpha_ir*alpha_reg=" + num(prod) + " <= min{alpha^2=" + num(p.alpha * p.alpha) +
               ", floor(n/2)ceil(n/2)=" + num(half_product) + "}";
    });

    // alpha_ir = 1 structure and its planar families.
    const bool structure = has_alpha_ir_one_structure(g);
    v.check("L3.1", structure == (a == 1), [&] {
        return "degree-class structure=" + yes_no(structure) + " but alpha_ir=" + num(a);
    });
    int short_class = -1;
    if (a == 1)
        for (int k : d.distinct)
            if (d.class_size(k) < n - k) {
                short_class = k;
                break;
            }
    v.check_if("T3.2i", a == 1, short_class < 0, [&] {
        return "n_" + num(short_class) + "=" + num(d.class_size(short_class)) + " >= n-k=" + num(n - short_class);
    });
    const double span_bound = ub_span_alpha_ir_one(p.min_degree);
    v.check_if("T3.2ii", a == 1, p.span <= span_bound + tol, [&] {
        return "span=" + num(p.span) + " <= (1+sqrt(1+8delta))/2=" + num(span_bound);
    });
    const auto planar_tag = classify_planar_alpha1(g);
    const bool planar_one = a == 1 && is_planar(g);
    v.check("T3.3", planar_one == planar_tag.matched(), [&] {
        return "planar and alpha_ir=1 is " + yes_no(planar_one) + " but planar family=" + planar_tag.to_string();
    });
    const auto outer_tag = classify_outerplanar_alpha1(g);
    const bool outer_one = a == 1 && is_outerplanar(g);
    v.check("C3.6", outer_one == outer_tag.matched(), [&] {
        return "outerplanar and alpha_ir=1 is " + yes_no(outer_one) +
               " but outerplanar family=" + outer_tag.to_string();
    });

    // Domination bounds.
    const int t41 = f.gamma_ir_degree(n, p.max_degree);
    v.check("T4.1", gi >= t41, [&] {
        return "gamma_ir=" + num(gi) + " >= max{half term=" + num(f.gamma_ir_half_term(n)) +
               ", n-Delta=" + num(n - p.max_degree) + "}";
    });
    const double t42 = lb_gamma_ir_cut(n, p.beta);
    v.check("T4.2", gi + tol >= t42, [&] {
        return "gamma_ir=" + num(gi) + " >= n+(1-sqrt(1+8beta))/2=" + num(t42);
    });
    const double c43 = lb_gamma_ir_average(n, in.average_degree());
    const bool c43_equal = std::abs(gi - c43) <= tol;
    v.check("C4.3", gi + tol >= c43 && c43_equal == empty, [&] {
        return "gamma_ir=" + num(gi) + " >= n-sqrt(dn)=" + num(c43) + ", equality=" + yes_no(c43_equal) +
               " iff empty=" + yes_no(empty);
    });
    const auto extremal = classify_gamma_extremal(g);
    const bool tag_empty = extremal.family == Family::Empty;
    const bool tag_minus_one =
        extremal.family == Family::IsolatedPlusStar || extremal.family == Family::IsolatedPlusRegular;
    v.check("T4.4i", (gi == n) == tag_empty, [&] {
        return "gamma_ir=" + num(gi) + " = n=" + num(n) + " iff family=" + extremal.to_string() + " is empty";
    });
    v.check("T4.4ii", (gi == n - 1) == tag_minus_one, [&] {
        return "gamma_ir=" + num(gi) + " = n-1=" + num(n - 1) + " iff family=" + extremal.to_string() +
               " is tK1 u K1,r or tK1 u H";
    });
    const RamseyTable ramsey;
    int ramsey_k = 0;
    int ramsey_failed = 0;
    for (const auto &[k, r] : ramsey.entries())
        if (p.span >= r && p.min_degree >= k) {
            ramsey_k = k;
            if (gi > n - k && ramsey_failed == 0)
                ramsey_failed = k;
        }
    v.check_if("T4.5i", ramsey_k > 0, ramsey_failed == 0, [&] {
        return "span=" + num(p.span) + " >= R(k,k)=" + num(ramsey.at(ramsey_failed)) + " and delta=" +
               num(p.min_degree) + " >= k=" + num(ramsey_failed) + " but gamma_ir=" + num(gi) +
               " > n-k=" + num(n - ramsey_failed);
    });
    v.check_if("T4.5ii", p.span >= 5 && p.min_degree >= 3, gi <= n - 3, [&] {
        return "span=" + num(p.span) + " >= 5 and delta=" + num(p.min_degree) + " >= 3 but gamma_ir=" + num(gi) +
               " > n-3=" + num(n - 3);
    });

    // alpha_ir against gamma_ir.
    const bool isolated = p.min_degree == 0;
    const int t51_sum = isolated ? n + 1 : n;
    const int t51_prod = isolated ? floor_half(n + 1) * ceil_half(n + 1) : half_product;
    const int plus_one_product = floor_half(n + 1) * ceil_half(n + 1);
    v.check("T5.1i", a + gi <= t51_sum, [&] {
        return "alpha_ir+gamma_ir=" + num(a + gi) + " <= " + num(t51_sum) + " (delta=" + num(p.min_degree) + ")";
    });
    v.check("T5.1ii", a * gi <= t51_prod, [&] {
        return "alpha_ir*gamma_ir=" + num(a * gi) + " <= " + num(t51_prod) + " (delta=" + num(p.min_degree) + ")";
    });
    const int cg = p.complement_gamma_ir;
    v.check("T5.1iii", a + cg <= n + 1, [&] {
        return "alpha_ir+gamma_ir(complement)=" + num(a + cg) + " <= n+1=" + num(n + 1);
    });
    v.check("T5.1iv", a * cg <= plus_one_product, [&] {
        return "alpha_ir*gamma_ir(complement)=" + num(a * cg) + " <= floor((n+1)/2)ceil((n+1)/2)=" +
               num(plus_one_product);
    });

    // Nordhaus-Gaddum pairs.
    const bool pair = n >= 2;
    const int ca = p.complement_alpha_ir;
    const int ng_alpha_product = floor_half(n) * floor_half(n + 1);
    v.check_if("T6.1i", pair, 2 <= a + ca && a + ca <= n, [&] {
        return "2 <= alpha_ir+alpha_ir(complement)=" + num(a + ca) + " <= n=" + num(n);
    });
    v.check_if("T6.1ii", pair, 1 <= a * ca && a * ca <= ng_alpha_product, [&] {
        return "1 <= alpha_ir*alpha_ir(complement)=" + num(a * ca) + " <= floor(n/2)floor((n+1)/2)=" +
               num(ng_alpha_product);
    });
    const int half = f.gamma_ir_half_term(n);
    const int gsum = gi + cg;
    const int gprod = gi * cg;
    const bool trivial = empty || complete;
    v.check_if("T6.2i", pair, 2 * half <= gsum && gsum <= 2 * n - 1 && (gsum == 2 * n - 1) == trivial, [&] {
        return num(2 * half) + " <= gamma_ir+gamma_ir(complement)=" + num(gsum) + " <= 2n-1=" + num(2 * n - 1) +
               ", equality iff empty or complete=" + yes_no(trivial);
    });
    v.check_if("T6.2ii", pair, half * half <= gprod && gprod <= n * (n - 1) && (gprod == n * (n - 1)) == trivial,
               [&] {
                   return num(half * half) + " <= gamma_ir*gamma_ir(complement)=" + num(gprod) +
                          " <= n(n-1)=" + num(n * (n - 1)) + ", equality iff empty or complete=" + yes_no(trivial);
               });
}

/// Per-theorem counts, indexed like theorem_ids().
using CountTable = std::array<Counts, theorem_count>;

auto tally(CountTable &table, const std::vector<Verdict> &verdicts) -> void
{
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        auto &c = table[i];
        switch (verdicts[i].status) {
        case Status::Pass: ++c.pass; break;
        case Status::Fail: ++c.fail; break;
        case Status::NotApplicable: ++c.not_applicable; break;
        }
    }
}

auto to_violation(const TheoremReport &r) -> Violation
{
    Violation out{r.graph, {}, r.parameters.to_string()};
    for (const auto &v : r.verdicts)
        if (v.status == Status::Fail)
            out.failures.push_back({v.id, v.witness});
    return out;
}

auto by_graph(const Violation &a, const Violation &b) -> bool { return a.graph < b.graph; }

/// Keeps the `limit` smallest violations by graph6.
auto trim(std::vector<Violation> &list, std::size_t limit) -> void
{
    std::sort(list.begin(), list.end(), by_graph);
    if (list.size() > limit)
        list.resize(limit);
}

struct Job {
    int n = 0;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

struct JobResult {
    CountTable counts{};
    std::uint64_t graphs = 0;
    std::uint64_t violations_total = 0;
    std::vector<Violation> violations;
    /// Least gamma_ir in the chunk and the smallest pair mask attaining it.
    int least_gamma = -1;
    std::uint64_t least_mask = 0;
};

auto run_job(const Job &job, const SweepOptions &options) -> JobResult
{
    JobResult out;
    for (std::uint64_t mask = job.begin; mask < job.end; ++mask) {
        const auto g = Graph::from_pair_mask(job.n, mask);
        auto report = theorem_report(g, options.formulas);
        ++out.graphs;
        tally(out.counts, report.verdicts);
        if (report.failed()) {
            ++out.violations_total;
            out.violations.push_back(to_violation(report));
            if (out.violations.size() > 2 * options.max_violations)
                trim(out.violations, options.max_violations);
        }
        const int gi = report.parameters.gamma_ir;
        if (job.n > 0 && (out.least_gamma < 0 || gi < out.least_gamma)) {
            out.least_gamma = gi;
            out.least_mask = mask;
        }
    }
    trim(out.violations, options.max_violations);
    return out;
}

auto make_jobs(int n_max) -> std::vector<Job>
{
    constexpr std::uint64_t chunk = 2048;
    std::vector<Job> jobs;
    for (int n = 0; n <= n_max; ++n) {
        const auto total = labeled_graph_count(n);
        for (std::uint64_t b = 0; b < total; b += chunk)
            jobs.push_back({n, b, std::min(total, b + chunk)});
    }
    return jobs;
}

auto elapsed_ms(std::chrono::steady_clock::time_point start) -> double
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

auto counts_json(const Counts &c) -> nlohmann::ordered_json
{
    return {{"pass", c.pass}, {"fail", c.fail}, {"not_applicable", c.not_applicable}};
}

auto sharpness_grid() -> std::vector<SharpnessCase>
{
    std::vector<SharpnessCase> grid;
    auto add = [&](const char *family, int r, int t, int n, int k, const char *variant = "") {
        FamilyParams p;
        p.r = r;
        p.t = t;
        p.n = n;
        p.k = k;
        p.variant = variant;
        grid.push_back({family, p});
    };
    for (int r = 1; r <= 4; ++r)
        for (int t = 1; t <= 4; ++t)
            add("clique_union", r, t, 0, 0);
    for (int n = 2; n <= 14; ++n)
        add("staircase", 0, n - ceil_half(n), 0, ceil_half(n), "asc");
    for (int n = 2; n <= 10; ++n)
        for (int k = ceil_half(n) + 1; k <= n - 1; ++k)
            add("staircase", 0, n - k, 0, k, "asc");
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 6; ++t)
            if (t * (t - 1) >= 2 * r * (r - 1))
                add("alpha_sharp_bipartite", r, t, 0, 0);
    for (int r = 1; r <= 5; ++r)
        for (int t = 1; t <= r; ++t)
            add("alpha_sharp_clique", r, t, 0, 0);
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 6; ++t)
            if (t * (t - 1) >= 2 * r * (r - 1))
                add("modstar", r, t, 0, 0);
    for (int n = 4; n <= 12; ++n)
        add("product_extremal", 0, 0, n, 0);
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= n + 1; ++k)
            add("sum_extremal", 0, 0, n, k);
    for (int n = 2; n <= 12; ++n)
        add("ng_alpha", 0, 0, n, 0);
    for (int n = 3; n <= 12; ++n)
        add("ng_gamma", 0, 0, n, 0);
    for (int n = 2; n <= 12; ++n)
        for (const char *c : {"delta_pos", "delta_zero", "complement"})
            add("relation_extremal", 0, 0, n, 0, c);
    for (int k = 1; k <= 5; ++k)
        add("multipartite_span", 0, 0, 0, k);
    return grid;
}

} // namespace

auto theorem_ids() -> const std::vector<std::string> &
{
    static const std::vector<std::string> ids{
        "T2.1",  "E1",    "T2.2",  "T2.3i",  "T2.3ii", "T2.3iii", "T2.3b",   "C2.4",   "L3.1",  "T3.2i",
        "T3.2ii", "T3.3", "C3.6",  "T4.1",   "T4.2",   "C4.3",    "T4.4i",   "T4.4ii", "T4.5i", "T4.5ii",
        "T5.1i", "T5.1ii", "T5.1iii", "T5.1iv", "T6.1i", "T6.1ii", "T6.2i", "T6.2ii"};
    return ids;
}

auto labeled_graph_count(int n) -> std::uint64_t
{
    if (n < 0 || n > max_sweep_order)
        throw std::invalid_argument("labeled graph enumeration supports 0 <= n <= " +
                                    std::to_string(max_sweep_order) + ", got " + std::to_string(n));
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

auto enumerate_labeled_graphs(int n, const std::function<void(const Graph &)> &visit) -> void
{
    const auto total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        visit(Graph::from_pair_mask(n, mask));
}

auto status_name(Status s) -> std::string
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

auto SweepParameters::to_string() const -> std::string
{
    return "n=" + num(n) + " m=" + num(m) + " delta=" + num(min_degree) + " Delta=" + num(max_degree) +
           " span=" + num(span) + " alpha=" + num(alpha) + " alpha_ir=" + num(alpha_ir) +
           " alpha_reg=" + num(alpha_reg) + " gamma_ir=" + num(gamma_ir) + " beta=" + num(beta) +
           " alpha_ir(complement)=" + num(complement_alpha_ir) +
           " gamma_ir(complement)=" + num(complement_gamma_ir);
}

auto TheoremReport::failed() const -> bool
{
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return v.status == Status::Fail; });
}

auto TheoremReport::verdict(const std::string &id) const -> const Verdict &
{
    for (const auto &v : verdicts)
        if (v.id == id)
            return v;
    throw std::out_of_range("unknown theorem id '" + id + "'");
}

auto theorem_report(const Graph &g, const BoundFormulas &formulas) -> TheoremReport
{
    TheoremReport r;
    r.verdicts.reserve(theorem_count);
    // graph6 has no encoding for the order-0 graph.
    if (g.order() == 0) {
        for (const auto &id : theorem_ids())
            r.verdicts.push_back({id, Status::NotApplicable, {}});
        return r;
    }
    r.graph = write_graph6(g);
    const auto d = classify_degrees(g);
    r.parameters = measure(g, d);
    evaluate(g, d, r.parameters, formulas, r.verdicts);
    return r;
}

auto verify_range(const SweepOptions &options) -> SweepSummary
{
    const auto start = std::chrono::steady_clock::now();
    labeled_graph_count(options.n_max);
    const auto jobs = make_jobs(options.n_max);
    std::vector<JobResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            results[i] = run_job(jobs[i], options);
    };
    const int workers = std::max(1, options.workers);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto &t : pool)
        t.join();

    SweepSummary s;
    s.n_max = options.n_max;
    s.mutation = mutation_name(options.formulas.mutation);
    CountTable counts{};
    std::vector<int> least(options.n_max + 1, -1);
    std::vector<std::uint64_t> least_mask(options.n_max + 1, 0);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        auto &r = results[i];
        s.graphs_checked += r.graphs;
        for (std::size_t t = 0; t < theorem_count; ++t) {
            counts[t].pass += r.counts[t].pass;
            counts[t].fail += r.counts[t].fail;
            counts[t].not_applicable += r.counts[t].not_applicable;
        }
        s.violations_total += r.violations_total;
        s.violations.insert(s.violations.end(), std::make_move_iterator(r.violations.begin()),
                            std::make_move_iterator(r.violations.end()));
        const int n = jobs[i].n;
        if (r.least_gamma >= 0 &&
            (least[n] < 0 || r.least_gamma < least[n] || (r.least_gamma == least[n] && r.least_mask < least_mask[n]))) {
            least[n] = r.least_gamma;
            least_mask[n] = r.least_mask;
        }
    }
    for (std::size_t t = 0; t < theorem_count; ++t)
        s.per_theorem.emplace_back(theorem_ids()[t], counts[t]);

    // The half term of the degree bound is attained at every order.
    for (int n = 1; n <= options.n_max; ++n) {
        const int half = options.formulas.gamma_ir_half_term(n);
        if (least[n] == half) {
            ++s.order_checks.pass;
            continue;
        }
        ++s.order_checks.fail;
        ++s.violations_total;
        const auto g = Graph::from_pair_mask(n, least_mask[n]);
        const auto report = theorem_report(g, options.formulas);
        s.violations.push_back({report.graph,
                                {{"T4.1", "no graph on n=" + num(n) + " vertices attains gamma_ir = half term = " +
                                              num(half) + "; least gamma_ir = " + num(least[n]) +
                                              " (this graph is the first attaining it)"}},
                                report.parameters.to_string()});
    }
    trim(s.violations, options.max_violations);
    s.wall_time_ms = elapsed_ms(start);
    return s;
}

auto default_sharpness_grid() -> std::vector<SharpnessCase> { return sharpness_grid(); }

auto sharpness_suite(const SharpnessOptions &options) -> SharpnessSummary
{
    const auto start = std::chrono::steady_clock::now();
    SharpnessSummary s;
    s.mutation = mutation_name(options.formulas.mutation);
    for (const auto &f : family_registry())
        s.per_family.emplace_back(f.id, Counts{});
    for (const auto &c : options.grid) {
        ++s.cases_checked;
        const bool tampered = options.corrupt && options.tamper && options.corrupt(c);
        SharpnessFailure failure{c.family, {}, {}, {}};
        bool ok = true;
        try {
            const auto built = assess(c.family, c.params, options.formulas, tampered ? options.tamper : Tamper{});
            failure.parameters = built.parameters;
            failure.graph = write_graph6(built.graph);
            for (const auto &claim : built.claims)
                if (!claim.holds()) {
                    ok = false;
                    failure.detail += (failure.detail.empty() ? "" : "; ") + claim.to_string();
                }
        } catch (const std::exception &e) {
            ok = false;
            failure.detail = e.what();
        }
        if (tampered)
            failure.detail = "corrupted: " + failure.detail;
        auto slot = std::find_if(s.per_family.begin(), s.per_family.end(),
                                 [&](const auto &entry) { return entry.first == c.family; });
        if (slot == s.per_family.end())
            slot = s.per_family.insert(s.per_family.end(), {c.family, Counts{}});
        if (ok) {
            ++slot->second.pass;
        } else {
            ++slot->second.fail;
            s.violations.push_back(std::move(failure));
        }
    }
    s.wall_time_ms = elapsed_ms(start);
    return s;
}

auto corrupted_path_options(SharpnessOptions options) -> SharpnessOptions
{
    options.corrupt = [](const SharpnessCase &c) { return c.family == "ng_gamma" && c.params.n == 4; };
    options.tamper = [](const Graph &g) { return without_edge(g, 0, 1); };
    return options;
}

auto to_json(const TheoremReport &report) -> nlohmann::ordered_json
{
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    for (const auto &v : report.verdicts) {
        nlohmann::ordered_json entry{{"id", v.id}, {"status", status_name(v.status)}};
        if (!v.witness.empty())
            entry["witness"] = v.witness;
        verdicts.push_back(std::move(entry));
    }
    return {{"schema", 1},
            {"graph", report.graph},
            {"parameters", report.parameters.to_string()},
            {"verdicts", std::move(verdicts)}};
}

auto to_json(const SweepSummary &summary) -> nlohmann::ordered_json
{
    nlohmann::ordered_json per_theorem = nlohmann::ordered_json::object();
    for (const auto &[id, c] : summary.per_theorem)
        per_theorem[id] = counts_json(c);
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto &v : summary.violations) {
        nlohmann::ordered_json failures = nlohmann::ordered_json::array();
        for (const auto &f : v.failures)
            failures.push_back({{"theorem", f.id}, {"inequality", f.witness}});
        violations.push_back({{"graph", v.graph}, {"failures", std::move(failures)}, {"parameters", v.parameters}});
    }
    nlohmann::ordered_json order_checks{{"pass", summary.order_checks.pass}, {"fail", summary.order_checks.fail}};
    return {{"schema", 1},
            {"command", "verify"},
            {"n_max", summary.n_max},
            {"mutation", summary.mutation},
            {"graphs_checked", summary.graphs_checked},
            {"per_theorem", std::move(per_theorem)},
            {"order_checks", std::move(order_checks)},
            {"violations_total", summary.violations_total},
            {"violations", std::move(violations)},
            {"wall_time_ms", summary.wall_time_ms}};
}

auto to_json(const SharpnessSummary &summary) -> nlohmann::ordered_json
{
    nlohmann::ordered_json per_family = nlohmann::ordered_json::object();
    for (const auto &[id, c] : summary.per_family)
        per_family[id] = {{"pass", c.pass}, {"fail", c.fail}};
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto &v : summary.violations)
        violations.push_back(
            {{"family", v.family}, {"parameters", v.parameters}, {"graph", v.graph}, {"claims", v.detail}});
    return {{"schema", 1},
            {"command", "sharpness"},
            {"mutation", summary.mutation},
            {"cases_checked", summary.cases_checked},
            {"per_family", std::move(per_family)},
            {"violations", std::move(violations)},
            {"wall_time_ms", summary.wall_time_ms}};
}

} // namespace irdom
