#include "irdom/constructions.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "irdom/params.hpp"

namespace irdom {

namespace {

auto require(bool ok, const std::string &what) -> void
{
    if (!ok)
        throw std::invalid_argument(what);
}

auto exact(std::string name, double claimed, double computed) -> Claim
{
    return {std::move(name), claimed, computed, 0.0};
}

auto approx(std::string name, double claimed, double computed) -> Claim
{
    return {std::move(name), claimed, computed, radical_tolerance};
}

auto format_number(double x) -> std::string
{
    if (std::abs(x - std::round(x)) < 1e-12)
        return std::to_string(static_cast<long long>(std::llround(x)));
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

/// Parameters of g computed on demand, each at most once.
class Measured {
public:
    explicit Measured(const Graph &g) : g_(g), degrees_(classify_degrees(g)) {}

    auto n() const -> int { return g_.order(); }
    auto m() const -> int { return g_.size(); }
    auto min_degree() const -> int { return degrees_.min_degree; }
    auto max_degree() const -> int { return degrees_.max_degree; }
    auto span() const -> int { return degrees_.span; }
    auto alpha_ir() -> int { return cached(alpha_ir_, [&] { return irdom::alpha_ir(g_).size; }); }
    auto alpha_reg() -> int { return cached(alpha_reg_, [&] { return irdom::alpha_reg(g_).size; }); }
    auto gamma_ir() -> int { return cached(gamma_ir_, [&] { return irdom::gamma_ir(g_).size; }); }
    auto beta() -> int { return cached(beta_, [&] { return max_cut(g_).size; }); }

    auto inputs() -> BoundInputs { return {n(), m(), min_degree(), max_degree(), beta(), span()}; }

private:
    template <class F>
    static auto cached(std::optional<int> &slot, F compute) -> int
    {
        if (!slot)
            slot = compute();
        return *slot;
    }

    const Graph &g_;
    DegreeClassification degrees_;
    std::optional<int> alpha_ir_, alpha_reg_, gamma_ir_, beta_;
};

auto parse_kind(std::string_view variant) -> StaircaseKind
{
    if (variant.empty() || variant == "asc")
        return StaircaseKind::Ascending;
    if (variant == "asc0")
        return StaircaseKind::AscendingFromZero;
    if (variant == "desc")
        return StaircaseKind::Descending;
    throw std::invalid_argument("unknown staircase case '" + std::string(variant) + "' (asc, asc0, desc)");
}

// ---- graph makers --------------------------------------------------------

auto make_clique_union(const FamilyParams &p) -> Graph
{
    require(p.r >= 1 && p.t >= 1, "clique_union needs r >= 1 and t >= 1");
    require(p.t * (2 * p.r + p.t - 1) / 2 <= Graph::max_order, "clique_union exceeds the graph capacity");
    Graph g;
    for (int i = 0; i < p.t; ++i)
        g = disjoint_union(g, complete_graph(p.r + i));
    return g;
}

auto staircase_profile(const FamilyParams &p) -> StaircaseProfile
{
    return {p.k, p.t, parse_kind(p.variant), 0};
}

auto make_staircase_family(const FamilyParams &p) -> Graph
{
    require(p.k >= 1 && p.t >= 0, "staircase needs k >= 1 and t >= 0");
    return make_staircase(staircase_profile(p), Assignment::Prefix);
}

auto require_balanced(int r, int t) -> void
{
    require(r >= 1 && t >= 1, "needs r >= 1 and t >= 1");
    require(t * (t - 1) >= 2 * r * (r - 1), "needs t(t-1) >= 2r(r-1)");
}

auto make_alpha_sharp_bipartite(const FamilyParams &p) -> Graph
{
    require_balanced(p.r, p.t);
    return make_staircase({p.r + p.t - 1, p.t, StaircaseKind::AscendingFromZero, p.r}, Assignment::RoundRobin);
}

auto make_alpha_sharp_clique(const FamilyParams &p) -> Graph
{
    require(p.r >= p.t && p.t >= 1, "alpha_sharp_clique needs r >= t >= 1");
    require(p.r + p.t <= Graph::max_order, "alpha_sharp_clique exceeds the graph capacity");
    std::vector<Edge> edges = complete_graph(p.r).edges();
    int next = 0;
    for (int i = 1; i <= p.t; ++i) {
        const int v = p.r + i - 1;
        for (int c = 0; c < p.r - p.t + i; ++c, next = (next + 1) % p.r)
            edges.push_back({next, v});
    }
    return Graph::from_edges(p.r + p.t, edges);
}

auto make_modstar(const FamilyParams &p) -> Graph
{
    require_balanced(p.r, p.t);
    const ModStarSchedule sched{p.r, p.t};
    const int k = sched.k();
    require(k + p.t <= Graph::max_order, "modstar exceeds the graph capacity");
    std::vector<Edge> edges;
    for (int i = 1; i <= p.t; ++i)
        for (int j = sched.s(i - 1) + 1; j <= sched.s(i); ++j)
            edges.push_back({(j - 1) % k, k + i - 1}); // w_{j mod* k}
    return Graph::from_edges(k + p.t, edges);
}

/// X (irregular independent) and Y (regular independent) of the product construction.
auto product_sides(int n) -> std::pair<VertexSet, VertexSet>
{
    int x = 0;
    int y_from = 0;
    switch (n % 4) {
    case 0: x = n / 2; y_from = n / 2; break;
    case 1: x = (n - 1) / 2; y_from = (n - 1) / 2; break;
    case 2: x = n / 2; y_from = n / 2; break;
    default: x = (n + 1) / 2; y_from = (n + 1) / 2; break;
    }
    return {VertexSet::prefix(x), VertexSet::prefix(n) - VertexSet::prefix(y_from)};
}

auto make_product_extremal(const FamilyParams &p) -> Graph
{
    const int n = p.n;
    require(n >= 4 && n <= Graph::max_order, "product_extremal needs 4 <= n <= 62");
    const auto [xs, ys] = product_sides(n);
    const std::vector<int> y = ys.members();
    const int x = xs.size();
    std::vector<Edge> edges;
    // v (1-based) takes the lowest `count` vertices of Y, its partner the rest.
    auto split = [&](int v, int count, int partner) {
        for (int c = 0; c < static_cast<int>(y.size()); ++c)
            edges.push_back({c < count ? v - 1 : partner - 1, y[c]});
    };
    switch (n % 4) {
    case 0:
        for (int j = 1; j <= n / 4; ++j)
            split(j, j - 1, x - j + 1);
        break;
    case 1:
        for (int j = 1; j <= (n - 1) / 4; ++j)
            split(j, j, x - j + 1);
        break;
    case 2:
        for (int c : y)
            edges.push_back({x - 1, c});
        for (int j = 1; j <= (n - 2) / 4; ++j)
            split(j, j, x - j);
        break;
    default:
        for (int j = 1; j <= (n + 1) / 4; ++j)
            split(j, j - 1, x - j + 1);
        break;
    }
    return Graph::from_edges(n, edges);
}

auto make_sum_extremal(const FamilyParams &p) -> Graph
{
    require(p.n >= 1 && p.n <= Graph::max_order, "sum_extremal needs 1 <= n <= 62");
    require(p.k >= 2 && p.k <= p.n + 1, "sum_extremal needs 2 <= k <= n + 1");
    return disjoint_union(Graph(p.k - 2), complete_graph(p.n - p.k + 2));
}

auto make_ng_alpha(const FamilyParams &p) -> Graph
{
    const int n = p.n;
    require(n >= 2 && n <= Graph::max_order, "ng_alpha needs 2 <= n <= 62");
    const int k = (n + 1) / 2;
    const int l = n / 2;
    std::vector<Edge> edges = complete_graph(l).edges();
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j < i - 1; ++j)
            edges.push_back({l + i - 1, j});
    return Graph::from_edges(n, edges);
}

auto make_ng_gamma(const FamilyParams &p) -> Graph
{
    const int n = p.n;
    require(n >= 3 && n <= Graph::max_order, "ng_gamma needs 3 <= n <= 62");
    std::vector<Edge> edges;
    if (n % 2 == 1) {
        // v_1..v_{k+1} are 0..k, u_i is k + i.
        const int k = (n - 1) / 2;
        for (int i = 1; i <= k; ++i)
            for (int j = 0; j < i; ++j)
                edges.push_back({k + i, j});
    } else if (n == 4) {
        return path_graph(4);
    } else if (n == 6) {
        // u_1..u_3 are 0..2, v_1..v_3 are 3..5.
        edges = {{0, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
    } else {
        // u_i is i - 1, v_i is k + i - 1.
        const int k = n / 2;
        auto u = [](int i) { return i - 1; };
        auto v = [k](int i) { return k + i - 1; };
        for (int i = 1; i <= k; ++i)
            if (i != 2)
                for (int j = 1; j <= i; ++j)
                    edges.push_back({u(i), v(j)});
        edges.push_back({u(2), v(2)});
        edges.push_back({u(2), v(3)});
        for (int j = 4; j <= k; ++j) {
            edges.push_back({v(2), v(j)});
            edges.push_back({v(3), v(j)});
        }
    }
    return Graph::from_edges(n, edges);
}

enum class RelationCase { DeltaPositive, DeltaZero, Complement };

auto parse_relation_case(std::string_view id) -> RelationCase
{
    if (id == "delta_pos")
        return RelationCase::DeltaPositive;
    if (id == "delta_zero")
        return RelationCase::DeltaZero;
    if (id == "complement")
        return RelationCase::Complement;
    throw std::invalid_argument("unknown relation_extremal case '" + std::string(id) +
                                "' (delta_pos, delta_zero, complement)");
}

auto make_relation_extremal(const FamilyParams &p) -> Graph
{
    const int n = p.n;
    require(n >= 2 && n <= Graph::max_order, "relation_extremal needs 2 <= n <= 62");
    switch (parse_relation_case(p.variant)) {
    case RelationCase::DeltaPositive: {
        const int k = (n + 1) / 2;
        return make_staircase({k, n - k, StaircaseKind::Descending, 0}, Assignment::Prefix);
    }
    case RelationCase::DeltaZero: {
        const int k = n / 2;
        return make_staircase({k, n - k, StaircaseKind::AscendingFromZero, 0}, Assignment::Prefix);
    }
    case RelationCase::Complement: {
        // The descending staircase reaches n + 1 only for odd n; for even n a
        // universal vertex is added to the odd case on n - 1 vertices, which
        // keeps alpha_ir and adds an isolated vertex to the complement.
        const int odd = n % 2 == 1 ? n : n - 1;
        const int k = odd / 2;
        auto g = make_staircase({k, odd - k, StaircaseKind::Descending, 0}, Assignment::Prefix);
        return odd == n ? g : join(Graph(1), g);
    }
    }
    return {};
}

auto make_multipartite_span(const FamilyParams &p) -> Graph
{
    require(p.k >= 1 && p.k * (p.k + 1) / 2 <= Graph::max_order, "multipartite_span needs 1 <= k <= 10");
    std::vector<int> parts;
    for (int i = 1; i <= p.k; ++i)
        parts.push_back(i);
    return complete_multipartite(parts);
}

// ---- claims --------------------------------------------------------------

using Claims = std::vector<Claim>;

auto check_clique_union(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    Measured m(g);
    return {exact("alpha_ir", p.t, m.alpha_ir()),
            exact("alpha_ir=Delta-delta+1", m.max_degree() - m.min_degree() + 1, m.alpha_ir())};
}

/// Mismatches between g and the bipartite staircase layout of `profile`.
auto staircase_mismatches(const StaircaseProfile &profile, const Graph &g) -> int
{
    if (g.order() != profile.k + profile.t)
        return 1 + std::abs(g.order() - profile.k - profile.t);
    const auto hub = VertexSet::prefix(profile.k);
    int bad = 0;
    for (int v = 0; v < g.order(); ++v) {
        const bool in_hub = hub.contains(v);
        const auto same_side = in_hub ? hub : g.vertices() - hub;
        bad += (g.neighbours(v) & same_side).empty() ? 0 : 1;
        if (!in_hub)
            bad += (g.neighbours(v) & hub).size() == profile.degree_of(v - profile.k + 1) ? 0 : 1;
    }
    return bad;
}

auto check_staircase(const FamilyParams &p, const Graph &g, const BoundFormulas &f) -> Claims
{
    const auto profile = staircase_profile(p);
    Claims out{exact("layout_mismatches", 0, staircase_mismatches(profile, g))};
    if (profile.kind != StaircaseKind::Ascending || p.t > p.k || g.order() == 0)
        return out;
    // The hub dominates irregularly and n - Delta = k.
    Measured m(g);
    const int n = m.n();
    out.push_back(exact("gamma_ir", p.k, m.gamma_ir()));
    out.push_back(exact("gamma_ir=n-Delta", n - m.max_degree(), m.gamma_ir()));
    out.push_back(approx("gamma_ir=n+(1-sqrt(1+8beta))/2", lb_gamma_ir_cut(n, m.beta()), m.gamma_ir()));
    if (p.k == ceil_half(n))
        out.push_back(exact("gamma_ir=ceil(n/2)", f.gamma_ir_half_term(n), m.gamma_ir()));
    return out;
}

auto check_alpha_sharp_bipartite(const FamilyParams &p, const Graph &g, const BoundFormulas &f) -> Claims
{
    Measured m(g);
    return {exact("delta", p.r, m.min_degree()), exact("alpha_ir", p.t, m.alpha_ir()),
            exact("alpha_ir=floor((n-delta+1)/2)", f.alpha_ir_half_term(m.n(), m.min_degree()), m.alpha_ir())};
}

auto check_alpha_sharp_clique(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    Measured m(g);
    return {exact("alpha_ir", p.t, m.alpha_ir()),
            approx("alpha_ir=(1+sqrt(2n^2-2n-4m+1))/2", ub_alpha_ir_radical(m.inputs()), m.alpha_ir())};
}

auto check_modstar(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    Measured m(g);
    const int edges = p.t * (2 * p.r + p.t - 1) / 2;
    return {exact("delta", p.r, m.min_degree()),
            exact("m", edges, m.m()),
            exact("beta", edges, m.beta()),
            exact("alpha_ir", p.t, m.alpha_ir()),
            approx("alpha_ir=(-2delta+1+sqrt((2delta-1)^2+8beta))/2", ub_alpha_ir_cut(m.inputs()), m.alpha_ir())};
}

auto check_product_extremal(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    Measured m(g);
    const auto [x, y] = product_sides(p.n);
    return {exact("X_irregular_independent", 1, is_irregular_independent(g, x) ? 1 : 0),
            exact("Y_regular_independent", 1, is_regular_independent(g, y) ? 1 : 0),
            exact("alpha_ir*alpha_reg", floor_half(p.n) * ceil_half(p.n), m.alpha_ir() * m.alpha_reg())};
}

auto check_sum_extremal(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    Measured m(g);
    return {exact("alpha_ir+alpha_reg", p.k, m.alpha_ir() + m.alpha_reg())};
}

auto check_ng_alpha(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    const int a = alpha_ir(g).size;
    const int b = alpha_ir(complement(g)).size;
    return {exact("alpha_ir+alpha_ir(complement)", p.n, a + b),
            exact("alpha_ir*alpha_ir(complement)", floor_half(p.n) * floor_half(p.n + 1), a * b)};
}

auto check_ng_gamma(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    const int a = gamma_ir(g).size;
    const int b = gamma_ir(complement(g)).size;
    const int half = ceil_half(p.n);
    return {exact("gamma_ir+gamma_ir(complement)", 2 * half, a + b),
            exact("gamma_ir*gamma_ir(complement)", half * half, a * b)};
}

auto check_relation_extremal(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    Measured m(g);
    const int n = p.n;
    const int lo = floor_half(n) * ceil_half(n);
    const int hi = floor_half(n + 1) * ceil_half(n + 1);
    switch (parse_relation_case(p.variant)) {
    case RelationCase::DeltaPositive:
        return {exact("delta>=1", 1, m.min_degree() >= 1 ? 1 : 0),
                exact("alpha_ir+gamma_ir", n, m.alpha_ir() + m.gamma_ir()),
                exact("alpha_ir*gamma_ir", lo, m.alpha_ir() * m.gamma_ir())};
    case RelationCase::DeltaZero:
        return {exact("delta", 0, m.min_degree()),
                exact("alpha_ir+gamma_ir", n + 1, m.alpha_ir() + m.gamma_ir()),
                exact("alpha_ir*gamma_ir", hi, m.alpha_ir() * m.gamma_ir())};
    case RelationCase::Complement: {
        const int c = gamma_ir(complement(g)).size;
        return {exact("alpha_ir+gamma_ir(complement)", n + 1, m.alpha_ir() + c),
                exact("alpha_ir*gamma_ir(complement)", hi, m.alpha_ir() * c)};
    }
    }
    return {};
}

auto check_multipartite_span(const FamilyParams &p, const Graph &g, const BoundFormulas &) -> Claims
{
    Measured m(g);
    return {exact("alpha_ir", 1, m.alpha_ir()), exact("span", p.k, m.span()),
            approx("span=(1+sqrt(1+8delta))/2", ub_span_alpha_ir_one(m.min_degree()), m.span())};
}

auto registry() -> std::vector<FamilySpec>
{
    return {
        {"clique_union", {"r", "t"}, make_clique_union, check_clique_union},
        {"staircase", {"k", "t", "case"}, make_staircase_family, check_staircase},
        {"alpha_sharp_bipartite", {"r", "t"}, make_alpha_sharp_bipartite, check_alpha_sharp_bipartite},
        {"alpha_sharp_clique", {"r", "t"}, make_alpha_sharp_clique, check_alpha_sharp_clique},
        {"modstar", {"r", "t"}, make_modstar, check_modstar},
        {"product_extremal", {"n"}, make_product_extremal, check_product_extremal},
        {"sum_extremal", {"n", "k"}, make_sum_extremal, check_sum_extremal},
        {"ng_alpha", {"n"}, make_ng_alpha, check_ng_alpha},
        {"ng_gamma", {"n"}, make_ng_gamma, check_ng_gamma},
        {"relation_extremal", {"n", "case"}, make_relation_extremal, check_relation_extremal},
        {"multipartite_span", {"k"}, make_multipartite_span, check_multipartite_span},
    };
}

auto describe(const FamilySpec &spec, const FamilyParams &p) -> std::string
{
    std::string out;
    for (const auto &name : spec.parameters) {
        if (!out.empty())
            out += ' ';
        out += name + '=';
        if (name == "r")
            out += std::to_string(p.r);
        else if (name == "t")
            out += std::to_string(p.t);
        else if (name == "n")
            out += std::to_string(p.n);
        else if (name == "k")
            out += std::to_string(p.k);
        else
            out += p.variant.empty() ? "asc" : p.variant;
    }
    return out;
}

auto construct_checked(const FamilySpec &spec, const FamilyParams &p) -> Graph
{
    auto c = assess(spec.id, p);
    if (!c.ok()) {
        std::string failed;
        for (const auto &claim : c.claims)
            if (!claim.holds())
                failed += "; " + claim.to_string();
        throw ConstructionFailed(spec.id + " " + c.parameters + failed);
    }
    return c.graph;
}

auto with_rt(int r, int t) -> FamilyParams
{
    FamilyParams p;
    p.r = r;
    p.t = t;
    return p;
}

} // namespace

auto Claim::holds() const -> bool { return std::abs(claimed - computed) <= tolerance; }

auto Claim::to_string() const -> std::string
{
    if (holds())
        return name + '=' + format_number(claimed);
    return name + ": claimed " + format_number(claimed) + ", computed " + format_number(computed);
}

auto Construction::ok() const -> bool
{
    for (const auto &c : claims)
        if (!c.holds())
            return false;
    return true;
}

auto Construction::metadata() const -> std::string
{
    std::string out = "# " + family + ' ' + parameters + " |";
    for (const auto &c : claims)
        out += ' ' + c.to_string();
    return out;
}

auto StaircaseProfile::degree_of(int i) const -> int
{
    switch (kind) {
    case StaircaseKind::Ascending: return i + offset;
    case StaircaseKind::AscendingFromZero: return i - 1 + offset;
    case StaircaseKind::Descending: return k - i + 1 + offset;
    }
    return 0;
}

auto ModStarSchedule::s(int i) const -> int
{
    int total = 0;
    for (int j = 0; j < i; ++j)
        total += r + j;
    return total;
}

auto make_staircase(const StaircaseProfile &profile, Assignment assignment) -> Graph
{
    const int k = profile.k;
    require(k >= 0 && profile.t >= 0 && k + profile.t <= Graph::max_order, "staircase order outside [0, 62]");
    std::vector<Edge> edges;
    int next = 0;
    for (int i = 1; i <= profile.t; ++i) {
        const int d = profile.degree_of(i);
        require(d >= 0 && d <= k, "staircase degree " + std::to_string(d) + " of v_" + std::to_string(i) +
                                      " outside [0, " + std::to_string(k) + "]");
        const int v = k + i - 1;
        for (int c = 0; c < d; ++c) {
            if (assignment == Assignment::Prefix) {
                edges.push_back({c, v});
            } else {
                edges.push_back({next, v});
                next = (next + 1) % k;
            }
        }
    }
    return Graph::from_edges(k + profile.t, edges);
}

auto family_registry() -> const std::vector<FamilySpec> &
{
    static const auto families = registry();
    return families;
}

auto find_family(std::string_view id) -> const FamilySpec &
{
    for (const auto &f : family_registry())
        if (f.id == id)
            return f;
    std::string known;
    for (const auto &f : family_registry())
        known += (known.empty() ? "" : ", ") + f.id;
    throw std::invalid_argument("unknown family '" + std::string(id) + "' (" + known + ")");
}

auto assess(std::string_view family, const FamilyParams &params, const BoundFormulas &formulas, const Tamper &tamper)
    -> Construction
{
    const auto &spec = find_family(family);
    Construction c;
    c.family = spec.id;
    c.parameters = describe(spec, params);
    c.graph = spec.make(params);
    if (tamper)
        c.graph = tamper(c.graph);
    c.claims = spec.check(params, c.graph, formulas);
    return c;
}

auto build(std::string_view family, const FamilyParams &params) -> Construction
{
    auto c = assess(family, params);
    if (!c.ok())
        construct_checked(find_family(family), params);
    return c;
}

auto build_clique_union(int r, int t) -> Graph { return construct_checked(find_family("clique_union"), with_rt(r, t)); }

auto build_staircase(const StaircaseProfile &profile, Assignment assignment) -> Graph
{
    if (profile.offset == 0 && assignment == Assignment::Prefix) {
        const char *variant = profile.kind == StaircaseKind::Ascending          ? "asc"
                              : profile.kind == StaircaseKind::AscendingFromZero ? "asc0"
                                                                                 : "desc";
        FamilyParams p;
        p.k = profile.k;
        p.t = profile.t;
        p.variant = variant;
        return construct_checked(find_family("staircase"), p);
    }
    // Offset or cyclic layouts carry only the layout claim.
    auto g = make_staircase(profile, assignment);
    if (assignment == Assignment::Prefix && staircase_mismatches(profile, g) != 0)
        throw ConstructionFailed("staircase layout does not match its profile");
    return g;
}

auto build_alpha_sharp_bipartite(int r, int t) -> Graph
{
    return construct_checked(find_family("alpha_sharp_bipartite"), with_rt(r, t));
}

auto build_alpha_sharp_clique(int r, int t) -> Graph
{
    return construct_checked(find_family("alpha_sharp_clique"), with_rt(r, t));
}

auto build_modstar(const ModStarSchedule &schedule) -> Graph
{
    return construct_checked(find_family("modstar"), with_rt(schedule.r, schedule.t));
}

auto build_product_extremal(int n) -> Graph
{
    FamilyParams p;
    p.n = n;
    return construct_checked(find_family("product_extremal"), p);
}

auto build_sum_extremal(int n, int k) -> Graph
{
    FamilyParams p;
    p.n = n;
    p.k = k;
    return construct_checked(find_family("sum_extremal"), p);
}

auto build_ng_alpha(int n) -> Graph
{
    FamilyParams p;
    p.n = n;
    return construct_checked(find_family("ng_alpha"), p);
}

auto build_ng_gamma(int n) -> Graph
{
    FamilyParams p;
    p.n = n;
    return construct_checked(find_family("ng_gamma"), p);
}

auto build_relation_extremal(int n, std::string_view case_id) -> Graph
{
    FamilyParams p;
    p.n = n;
    p.variant = std::string(case_id);
    return construct_checked(find_family("relation_extremal"), p);
}

auto build_multipartite_span(int k) -> Graph
{
    FamilyParams p;
    p.k = k;
    return construct_checked(find_family("multipartite_span"), p);
}

} // namespace irdom
