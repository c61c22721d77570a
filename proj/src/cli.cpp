#include "irdom/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "irdom/constructions.hpp"
#include "irdom/graph6.hpp"
#include "irdom/harness.hpp"
#include "irdom/params.hpp"
#include "irdom/recognizers.hpp"

namespace irdom::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

auto parse_format(const std::string &s) -> Format { return s == "json" ? Format::Json : Format::Text; }

auto trim(std::string_view s) -> std::string_view
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

/// A graph6 line source: inline arguments, a file, or the input stream.
struct Source {
    std::vector<std::string> inline_graphs;
    std::string path;
};

/// Calls on_graph for each graph line and on_comment for each '#' line;
/// malformed lines are reported on err with their line number. Returns false
/// when any line was rejected or the file could not be opened.
template <class OnGraph, class OnComment>
auto for_each_line(const Source &src, std::istream &in, std::ostream &err, OnGraph on_graph, OnComment on_comment)
    -> bool
{
    bool ok = true;
    auto handle = [&](std::size_t line_no, std::string_view raw) {
        const auto line = trim(raw);
        if (line.empty())
            return;
        if (line.front() == '#') {
            on_comment(raw);
            return;
        }
        try {
            on_graph(line, parse_graph6(line));
        } catch (const std::exception &e) {
            err << "line " << line_no << ": " << e.what() << '\n';
            ok = false;
        }
    };
    if (!src.inline_graphs.empty()) {
        for (std::size_t i = 0; i < src.inline_graphs.size(); ++i)
            handle(i + 1, src.inline_graphs[i]);
        return ok;
    }
    std::ifstream file;
    std::istream *stream = &in;
    if (!src.path.empty() && src.path != "-") {
        file.open(src.path);
        if (!file) {
            err << "cannot open " << src.path << '\n';
            return false;
        }
        stream = &file;
    }
    std::string line;
    for (std::size_t line_no = 1; std::getline(*stream, line); ++line_no)
        handle(line_no, line);
    return ok;
}

auto witness_json(const Optimum &o) -> Json { return {{"size", o.size}, {"witness", o.witness.members()}}; }

auto report_json(std::string_view g6, const ParameterReport &r) -> Json
{
    return {{"graph", std::string(g6)},
            {"n", r.n},
            {"m", r.m},
            {"delta", r.min_degree},
            {"Delta", r.max_degree},
            {"span", r.span},
            {"average_degree", r.average_degree()},
            {"alpha", witness_json(r.alpha)},
            {"alpha_ir", witness_json(r.alpha_ir)},
            {"alpha_reg", witness_json(r.alpha_reg)},
            {"gamma_ir", witness_json(r.gamma_ir)},
            {"gamma_reg", witness_json(r.gamma_reg)},
            {"beta", witness_json(r.beta)}};
}

auto report_text(std::string_view g6, const ParameterReport &r) -> std::string
{
    auto field = [](const char *name, const Optimum &o) {
        return std::string(" ") + name + '=' + std::to_string(o.size) + ' ' + o.witness.to_string();
    };
    return std::string(g6) + " n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) +
           " delta=" + std::to_string(r.min_degree) + " Delta=" + std::to_string(r.max_degree) +
           " span=" + std::to_string(r.span) + field("alpha", r.alpha) + field("alpha_ir", r.alpha_ir) +
           field("alpha_reg", r.alpha_reg) + field("gamma_ir", r.gamma_ir) + field("gamma_reg", r.gamma_reg) +
           field("beta", r.beta);
}

auto run_compute(const Source &src, Format format, int max_order, std::istream &in, std::ostream &out,
                 std::ostream &err) -> int
{
    const SolverLimits limits{max_order};
    const bool ok = for_each_line(
        src, in, err,
        [&](std::string_view g6, const Graph &g) {
            if (g.order() == 0)
                throw std::invalid_argument("graph has no vertices");
            const auto r = full_report(g, limits);
            if (format == Format::Json)
                out << report_json(g6, r).dump() << '\n';
            else
                out << report_text(g6, r) << '\n';
        },
        [&](std::string_view comment) { out << comment << '\n'; });
    return ok ? exit_ok : exit_input_error;
}

struct ConstructArgs {
    std::string family;
    FamilyParams params;
};

auto run_construct(const ConstructArgs &a, Format format, std::ostream &out, std::ostream &err) -> int
{
    Construction c;
    try {
        c = assess(a.family, a.params);
    } catch (const SolverLimitExceeded &e) {
        err << e.what() << '\n';
        return exit_input_error;
    } catch (const std::invalid_argument &e) {
        err << e.what() << '\n';
        return exit_input_error;
    }
    const auto g6 = write_graph6(c.graph);
    if (format == Format::Json) {
        Json claims = Json::array();
        for (const auto &claim : c.claims)
            claims.push_back({{"name", claim.name},
                              {"claimed", claim.claimed},
                              {"computed", claim.computed},
                              {"holds", claim.holds()}});
        out << Json{{"schema", 1},
                    {"family", c.family},
                    {"parameters", c.parameters},
                    {"graph", g6},
                    {"claims", std::move(claims)}}
                   .dump()
            << '\n';
    } else {
        out << c.metadata() << '\n' << g6 << '\n';
    }
    if (!c.ok()) {
        err << "construction claims failed: " << c.metadata() << '\n';
        return exit_violation;
    }
    return exit_ok;
}

auto recognize_properties() -> const std::vector<std::string> &
{
    static const std::vector<std::string> ids{"planar",           "outerplanar",         "alpha-ir-one-structure",
                                              "planar-alpha-ir-one", "outerplanar-alpha-ir-one", "gamma-extremal"};
    return ids;
}

auto recognize(const std::string &property, const Graph &g) -> std::string
{
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
    if (property == "planar")
        return flag(is_planar(g));
    if (property == "outerplanar")
        return flag(is_outerplanar(g));
    if (property == "alpha-ir-one-structure")
        return flag(has_alpha_ir_one_structure(g));
    if (property == "planar-alpha-ir-one")
        return classify_planar_alpha1(g).to_string();
    if (property == "outerplanar-alpha-ir-one")
        return classify_outerplanar_alpha1(g).to_string();
    return classify_gamma_extremal(g).to_string();
}

auto run_recognize(const std::string &property, const Source &src, Format format, std::istream &in,
                   std::ostream &out, std::ostream &err) -> int
{
    const auto &known = recognize_properties();
    if (std::find(known.begin(), known.end(), property) == known.end()) {
        err << "unknown property '" << property << "'\n";
        return exit_input_error;
    }
    const bool ok = for_each_line(
        src, in, err,
        [&](std::string_view g6, const Graph &g) {
            if (g.order() == 0)
                throw std::invalid_argument("graph has no vertices");
            const auto answer = recognize(property, g);
            if (format == Format::Json)
                out << Json{{"graph", std::string(g6)}, {"property", property}, {"result", answer}}.dump() << '\n';
            else
                out << g6 << ' ' << answer << '\n';
        },
        [&](std::string_view comment) { out << comment << '\n'; });
    return ok ? exit_ok : exit_input_error;
}

auto counts_line(const std::string &key, const Counts &c) -> std::string
{
    return key + " pass=" + std::to_string(c.pass) + " fail=" + std::to_string(c.fail) +
           " not_applicable=" + std::to_string(c.not_applicable);
}

auto print_sweep(const SweepSummary &s, Format format, std::ostream &out) -> void
{
    if (format == Format::Json) {
        out << to_json(s).dump(2) << '\n';
        return;
    }
    out << "n_max " << s.n_max << " mutation " << s.mutation << " graphs_checked " << s.graphs_checked << '\n';
    for (const auto &[id, c] : s.per_theorem)
        out << counts_line(id, c) << '\n';
    out << "order_checks pass=" << s.order_checks.pass << " fail=" << s.order_checks.fail << '\n';
    for (const auto &v : s.violations)
        for (const auto &f : v.failures)
            out << "violation " << v.graph << ' ' << f.id << ": " << f.witness << " [" << v.parameters << "]\n";
    out << "violations " << s.violations_total << '\n';
}

auto print_sharpness(const SharpnessSummary &s, Format format, std::ostream &out) -> void
{
    if (format == Format::Json) {
        out << to_json(s).dump(2) << '\n';
        return;
    }
    out << "mutation " << s.mutation << " cases_checked " << s.cases_checked << '\n';
    for (const auto &[family, c] : s.per_family)
        out << family << " pass=" << c.pass << " fail=" << c.fail << '\n';
    for (const auto &v : s.violations)
        out << "violation " << v.family << ' ' << v.parameters << ' ' << v.graph << ": " << v.detail << '\n';
    out << "violations " << s.violations.size() << '\n';
}

auto parse_int_list(const std::string &text) -> std::vector<int>
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        out.push_back(std::stoi(text.substr(pos, comma - pos)));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

auto run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) -> int
{
    CLI::App app{"Exact irregular independence and domination numbers, bound checks and constructions.", "irdom"};
    app.require_subcommand(1);
    std::string format_name = "text";
    const auto format_check = CLI::IsMember({"text", "json"});

    Source compute_src;
    int max_order = SolverLimits{}.max_order;
    auto *compute = app.add_subcommand("compute", "Parameter report for each graph6 line ('#' lines pass through).");
    compute->add_option("graphs", compute_src.inline_graphs, "graph6 strings (default: read lines from --input)");
    compute->add_option("-i,--input", compute_src.path, "graph6 file, one graph per line ('-' for stdin)");
    compute->add_option("--max-order", max_order, "largest order for the subset-enumeration solvers")
        ->check(CLI::Range(1, Graph::max_order));
    compute->add_option("--format", format_name, "text or json")->check(format_check);

    ConstructArgs construct_args;
    auto *construct = app.add_subcommand("construct", "Build a construction, print its metadata and graph6.");
    construct->add_option("family", construct_args.family, "family id")->required();
    construct->add_option("--r", construct_args.params.r, "r parameter");
    construct->add_option("--t", construct_args.params.t, "t parameter");
    construct->add_option("--n", construct_args.params.n, "n parameter");
    construct->add_option("--k", construct_args.params.k, "k parameter");
    construct->add_option("--case", construct_args.params.variant,
                          "staircase: asc|asc0|desc; relation_extremal: delta_pos|delta_zero|complement");
    construct->add_option("--format", format_name, "text or json")->check(format_check);

    std::string property;
    Source recognize_src;
    auto *recognize_cmd = app.add_subcommand("recognize", "Evaluate a structural property on each graph6 line.");
    recognize_cmd
        ->add_option("property", property,
                     "planar | outerplanar | alpha-ir-one-structure | planar-alpha-ir-one | "
                     "outerplanar-alpha-ir-one | gamma-extremal")
        ->required();
    recognize_cmd->add_option("graphs", recognize_src.inline_graphs, "graph6 strings");
    recognize_cmd->add_option("-i,--input", recognize_src.path, "graph6 file ('-' for stdin)");
    recognize_cmd->add_option("--format", format_name, "text or json")->check(format_check);

    SweepOptions sweep;
    sweep.n_max = 6;
    sweep.workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    std::string mutation_name_arg = "none";
    const auto mutation_check = CLI::IsMember({"none", "degree-ceil-third", "half-floor-tightened"});
    auto *verify = app.add_subcommand("verify", "Check every statement on all labeled graphs up to --n-max.");
    verify->add_option("--n-max", sweep.n_max, "largest order")->check(CLI::Range(0, max_sweep_order));
    verify->add_option("--workers", sweep.workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--max-violations", sweep.max_violations, "violations listed in the summary");
    verify->add_option("--mutation", mutation_name_arg, "negative control: weaken or tighten a bound")
        ->check(mutation_check);
    verify->add_option("--format", format_name, "text or json")->check(format_check);

    std::vector<std::string> families;
    std::string n_list;
    bool corrupt = false;
    auto *sharpness = app.add_subcommand("sharpness", "Build every construction grid and check its claims.");
    sharpness->add_option("--family", families, "restrict to these family ids");
    sharpness->add_option("--n", n_list, "keep only cases whose n parameter is listed, comma separated");
    sharpness->add_option("--mutation", mutation_name_arg, "negative control")->check(mutation_check);
    sharpness->add_flag("--corrupt", corrupt, "remove edge {0,1} from the ng_gamma n=4 graph");
    sharpness->add_option("--format", format_name, "text or json")->check(format_check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }
    // compute, construct and recognize default to text; verify and sharpness to json.
    const bool text_default = compute->parsed() || construct->parsed() || recognize_cmd->parsed();
    auto chosen = [&](CLI::App *cmd) {
        return cmd->count("--format") > 0 ? parse_format(format_name)
                                           : (text_default ? Format::Text : Format::Json);
    };

    try {
        if (compute->parsed())
            return run_compute(compute_src, chosen(compute), max_order, in, out, err);
        if (construct->parsed())
            return run_construct(construct_args, chosen(construct), out, err);
        if (recognize_cmd->parsed())
            return run_recognize(property, recognize_src, chosen(recognize_cmd), in, out, err);
        const auto mutation = parse_mutation(mutation_name_arg);
        if (verify->parsed()) {
            sweep.formulas.mutation = mutation;
            const auto s = verify_range(sweep);
            print_sweep(s, chosen(verify), out);
            return s.clean() ? exit_ok : exit_violation;
        }
        SharpnessOptions options;
        options.formulas.mutation = mutation;
        if (!families.empty()) {
            for (const auto &f : families)
                find_family(f);
            std::erase_if(options.grid, [&](const SharpnessCase &c) {
                return std::find(families.begin(), families.end(), c.family) == families.end();
            });
        }
        if (!n_list.empty()) {
            const auto ns = parse_int_list(n_list);
            std::erase_if(options.grid, [&](const SharpnessCase &c) {
                return std::find(ns.begin(), ns.end(), c.params.n) == ns.end();
            });
        }
        if (corrupt)
            options = corrupted_path_options(std::move(options));
        const auto s = sharpness_suite(options);
        print_sharpness(s, chosen(sharpness), out);
        return s.clean() ? exit_ok : exit_violation;
    } catch (const std::logic_error &e) {
        // Unknown ids, out-of-range parameters and solver limits.
        err << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace irdom::cli
