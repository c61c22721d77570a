#include "irdom/recognizers.hpp"

#include <bit>
#include <functional>
#include <optional>

namespace irdom {

namespace {

using Mask = std::uint64_t;

auto bit(int v) -> Mask { return Mask{1} << v; }

/// Common degree of g[within], or nullopt if g[within] is not regular.
auto induced_regularity(const Graph &g, Mask within) -> std::optional<int>
{
    std::optional<int> degree;
    for (Mask w = within; w != 0; w &= w - 1) {
        const int d = std::popcount(g.neighbours(std::countr_zero(w)).mask() & within);
        if (degree && *degree != d)
            return std::nullopt;
        degree = d;
    }
    return degree.value_or(0);
}

auto induced_components(const Graph &g, Mask within) -> int
{
    int count = 0;
    while (within != 0) {
        Mask component = bit(std::countr_zero(within));
        Mask frontier = component;
        while (frontier != 0) {
            Mask next = 0;
            for (; frontier != 0; frontier &= frontier - 1)
                next |= g.neighbours(std::countr_zero(frontier)).mask();
            next &= within & ~component;
            component |= next;
            frontier = next;
        }
        within &= ~component;
        ++count;
    }
    return count;
}

/// Every vertex of `part` is adjacent to every vertex outside it.
auto fully_joined(const Graph &g, Mask part) -> bool
{
    const Mask rest = g.vertices().mask() & ~part;
    for (Mask p = part; p != 0; p &= p - 1)
        if ((g.neighbours(std::countr_zero(p)).mask() & rest) != rest)
            return false;
    return true;
}

/// Shape of g as X + Y with |X| in {1, 2}: whether X carries its edge and how
/// the remainder Y looks.
struct JoinShape {
    int apexes = 0;         // |X|
    bool apex_edge = false; // X = K_2 rather than E_2
    Mask rest = 0;
    std::optional<int> rest_degree;
    int rest_components = 0;
    int rest_size = 0;
};

auto join_shapes(const Graph &g) -> std::vector<JoinShape>
{
    const int n = g.order();
    std::vector<JoinShape> out;
    auto record = [&](Mask x, int apexes, bool apex_edge) {
        JoinShape s;
        s.apexes = apexes;
        s.apex_edge = apex_edge;
        s.rest = g.vertices().mask() & ~x;
        s.rest_degree = induced_regularity(g, s.rest);
        s.rest_components = induced_components(g, s.rest);
        s.rest_size = std::popcount(s.rest);
        out.push_back(s);
    };
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            record(bit(v), 1, false);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (g.degree(v) >= n - 2 && g.degree(w) >= n - 2 && fully_joined(g, bit(v) | bit(w)))
                record(bit(v) | bit(w), 2, g.adjacent(v, w));
    return out;
}

auto first_shape(const std::vector<JoinShape> &shapes, const std::function<bool(const JoinShape &)> &pred)
    -> std::optional<JoinShape>
{
    for (const auto &s : shapes)
        if (pred(s))
            return s;
    return std::nullopt;
}

auto isolated_count(const Graph &g) -> int
{
    int t = 0;
    for (int v = 0; v < g.order(); ++v)
        t += g.degree(v) == 0 ? 1 : 0;
    return t;
}

struct Rule {
    Family family;
    std::function<std::optional<FamilyTag>(const Graph &, const std::vector<JoinShape> &)> match;
};

auto tag(Family f, const Graph &g, int t, int r) -> FamilyTag { return {f, g.order(), t, r}; }

auto star_rule() -> Rule
{
    return {Family::Star, [](const Graph &g, const auto &shapes) -> std::optional<FamilyTag> {
                if (g.order() >= 2 && first_shape(shapes, [](const JoinShape &s) {
                        return s.apexes == 1 && s.rest_degree == 0 && s.rest_size >= 1;
                    }))
                    return tag(Family::Star, g, 0, g.order() - 1);
                return std::nullopt;
            }};
}

auto windmill_rule() -> Rule
{
    return {Family::Windmill, [](const Graph &g, const auto &shapes) -> std::optional<FamilyTag> {
                if (auto s = first_shape(shapes, [](const JoinShape &s) {
                        return s.apexes == 1 && s.rest_degree == 1 && s.rest_size >= 4;
                    }))
                    return tag(Family::Windmill, g, 0, s->rest_size / 2);
                return std::nullopt;
            }};
}

/// Rule for X + Y with |X| = 2, the given apex edge state, and a predicate on Y.
auto pair_rule(Family family, bool apex_edge, std::function<bool(const JoinShape &)> rest_ok,
               std::function<int(const JoinShape &)> param) -> Rule
{
    return {family, [=](const Graph &g, const auto &shapes) -> std::optional<FamilyTag> {
                if (auto s = first_shape(shapes, [&](const JoinShape &s) {
                        return s.apexes == 2 && s.apex_edge == apex_edge && rest_ok(s);
                    }))
                    return tag(family, g, 0, param(*s));
                return std::nullopt;
            }};
}

auto classify(const Graph &g, const std::vector<Rule> &rules) -> FamilyTag
{
    if (g.order() == 0)
        return {};
    const auto shapes = join_shapes(g);
    for (const auto &rule : rules)
        if (auto t = rule.match(g, shapes))
            return *t;
    return {};
}

auto independent_rest(const JoinShape &s) -> bool { return s.rest_degree == 0 && s.rest_size >= 1; }
auto matching_rest(const JoinShape &s) -> bool { return s.rest_degree == 1; }
auto half_rest(const JoinShape &s) -> int { return s.rest_size / 2; }
auto rest_size(const JoinShape &s) -> int { return s.rest_size; }

} // namespace

auto has_alpha_ir_one_structure(const Graph &g) -> bool
{
    if (g.order() == 0)
        return true;
    const auto degrees = classify_degrees(g);
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        const Mask non_neighbours = g.vertices().mask() & ~g.neighbours(v).mask() & ~bit(v);
        if ((non_neighbours & ~degrees.class_of(g.degree(v)).mask()) != 0)
            return false;
    }
    for (const auto &[k, members] : degrees.classes)
        if (induced_regularity(g, members.mask()) != k + members.size() - n)
            return false;
    return true;
}

auto family_name(Family f) -> std::string
{
    switch (f) {
    case Family::None: return "none";
    case Family::RegularPlanar: return "regular-planar";
    case Family::Star: return "star";
    case Family::CompleteBipartite2: return "K2,n-2";
    case Family::K2JoinEmpty: return "K2+E";
    case Family::K2JoinMatching: return "K2+matching";
    case Family::E2JoinMatching: return "E2+matching";
    case Family::E2JoinCycle: return "E2+cycle";
    case Family::Windmill: return "windmill";
    case Family::K1JoinCycles: return "K1+cycles";
    case Family::CycleUnion: return "cycle-union";
    case Family::Empty: return "empty";
    case Family::PerfectMatching: return "perfect-matching";
    case Family::K22: return "K2,2";
    case Family::K2JoinE2: return "K2+E2";
    case Family::IsolatedPlusStar: return "isolated+star";
    case Family::IsolatedPlusRegular: return "isolated+regular";
    }
    return "unknown";
}

auto FamilyTag::to_string() const -> std::string
{
    if (family == Family::None)
        return "none";
    return family_name(family) + " n=" + std::to_string(n) + " t=" + std::to_string(t) + " r=" + std::to_string(r);
}

auto classify_planar_alpha1(const Graph &g) -> FamilyTag
{
    static const std::vector<Rule> rules = {
        {Family::RegularPlanar,
         [](const Graph &g, const auto &) -> std::optional<FamilyTag> {
             if (is_regular(g) && is_planar(g))
                 return tag(Family::RegularPlanar, g, 0, g.degree(0));
             return std::nullopt;
         }},
        star_rule(),
        pair_rule(Family::CompleteBipartite2, false, independent_rest, rest_size),
        pair_rule(Family::K2JoinEmpty, true, independent_rest, rest_size),
        pair_rule(Family::K2JoinMatching, true, matching_rest, half_rest),
        pair_rule(Family::E2JoinMatching, false, matching_rest, half_rest),
        pair_rule(Family::E2JoinCycle, false,
                  [](const JoinShape &s) { return s.rest_degree == 2 && s.rest_components == 1; }, rest_size),
        windmill_rule(),
        {Family::K1JoinCycles,
         [](const Graph &g, const auto &shapes) -> std::optional<FamilyTag> {
             if (auto s = first_shape(shapes, [](const JoinShape &s) {
                     return s.apexes == 1 && s.rest_degree == 2 && s.rest_size >= 3;
                 }))
                 return tag(Family::K1JoinCycles, g, 0, s->rest_components);
             return std::nullopt;
         }},
    };
    return classify(g, rules);
}

auto classify_outerplanar_alpha1(const Graph &g) -> FamilyTag
{
    static const std::vector<Rule> rules = {
        {Family::CycleUnion,
         [](const Graph &g, const auto &) -> std::optional<FamilyTag> {
             if (g.order() >= 3 && is_regular(g) && g.degree(0) == 2)
                 return tag(Family::CycleUnion, g, 0, induced_components(g, g.vertices().mask()));
             return std::nullopt;
         }},
        {Family::Empty,
         [](const Graph &g, const auto &) -> std::optional<FamilyTag> {
             if (g.size() == 0)
                 return tag(Family::Empty, g, 0, g.order());
             return std::nullopt;
         }},
        {Family::PerfectMatching,
         [](const Graph &g, const auto &) -> std::optional<FamilyTag> {
             if (is_regular(g) && g.degree(0) == 1)
                 return tag(Family::PerfectMatching, g, 0, g.order() / 2);
             return std::nullopt;
         }},
        star_rule(),
        pair_rule(Family::K22, false, [](const JoinShape &s) { return s.rest_size == 2 && s.rest_degree == 0; },
                  rest_size),
        pair_rule(Family::K2JoinE2, true, [](const JoinShape &s) { return s.rest_size == 2 && s.rest_degree == 0; },
                  rest_size),
        windmill_rule(),
    };
    return classify(g, rules);
}

auto classify_gamma_extremal(const Graph &g) -> FamilyTag
{
    const int n = g.order();
    const int t = isolated_count(g);
    if (t == n)
        return tag(Family::Empty, g, 0, n);
    Mask core = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0)
            core |= bit(v);
    const int core_size = std::popcount(core);
    int centres = 0;
    int leaves = 0;
    for (Mask c = core; c != 0; c &= c - 1) {
        const int d = g.degree(std::countr_zero(c));
        centres += d == core_size - 1 ? 1 : 0;
        leaves += d == 1 ? 1 : 0;
    }
    // K_{1,r}: one centre joined to r leaves (K_2 counts both ends as leaves).
    if (g.size() == core_size - 1 && centres >= 1 && leaves == core_size - 1 + (core_size == 2 ? 1 : 0))
        return tag(Family::IsolatedPlusStar, g, t, core_size - 1);
    if (auto r = induced_regularity(g, core); r && *r >= 1)
        return tag(Family::IsolatedPlusRegular, g, t, *r);
    return {};
}

} // namespace irdom
