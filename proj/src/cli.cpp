#include "idom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "idom/digraph.hpp"
#include "idom/errors.hpp"
#include "idom/generators.hpp"
#include "idom/solvers.hpp"
#include "idom/structure.hpp"

namespace idom::cli {

namespace {

using nlohmann::json;

// Raised for conditions that map to the usage exit code with a message.
struct UsageError : Error {
    using Error::Error;
};

std::string list_to_string(const std::vector<std::size_t> &xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s + "]";
}

std::string vertices_to_string(const std::vector<Vertex> &xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

VertexSet parse_set(const std::string &text, std::size_t n) {
    VertexSet s(n);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string_view item(text.data() + pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) {
            if (text.find_first_not_of(' ') == std::string::npos) return s;
            throw UsageError("malformed set '" + text + "': empty member");
        }
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw UsageError("malformed set member '" + std::string(item) + "'");
        if (v >= n)
            throw UsageError("set member " + std::to_string(v) + " out of range for n=" +
                             std::to_string(n));
        s.insert(static_cast<Vertex>(v));
        pos = comma + 1;
    }
    return s;
}

Digraph load(const std::string &path, std::ostream &err) {
    auto parsed = read_digraph_file(path);
    if (parsed.duplicate_arcs > 0)
        err << "warning: " << parsed.duplicate_arcs << " duplicate arc(s) collapsed in " << path
            << "\n";
    return std::move(parsed.graph);
}

std::uint64_t budget_from_env() {
    const char *raw = std::getenv("IDOM_BUDGET");
    if (raw == nullptr || *raw == '\0') return SolveOptions{}.budget;
    std::uint64_t value = 0;
    const std::string_view s(raw);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0)
        throw UsageError("IDOM_BUDGET must be a positive integer, got '" + std::string(s) + "'");
    return value;
}

int cmd_analyze(const std::string &file, bool as_json, std::ostream &out, std::ostream &err) {
    const auto d = load(file, err);
    const auto cond = condensation(d);
    const auto h = period(d);
    std::vector<std::vector<Vertex>> sources;
    for (auto c : cond.source_components()) sources.push_back(cond.sccs.components[c]);
    const bool strong = d.size() >= 2 && cond.sccs.count() == 1;
    std::optional<std::vector<std::size_t>> layer_sizes;
    if (strong) layer_sizes = layer_decomposition(d).layer_sizes();

    if (as_json) {
        json j;
        j["vertices"] = d.size();
        j["arcs"] = d.arc_count();
        j["period"] = h;
        j["sccs"] = cond.sccs.count();
        j["source_sccs"] = sources;
        j["strongly_connected"] = strong;
        if (layer_sizes) j["layers"] = *layer_sizes;
        out << j.dump() << "\n";
        return kOk;
    }
    out << "period=" << h << "\n";
    out << "sccs=" << cond.sccs.count() << "\n";
    out << "source_sccs=";
    for (std::size_t i = 0; i < sources.size(); ++i)
        out << (i ? ";" : "") << "{" << vertices_to_string(sources[i]) << "}";
    out << "\n";
    if (layer_sizes) out << "layers=" << list_to_string(*layer_sizes) << "\n";
    return kOk;
}

struct SolveArgs {
    std::string file;
    std::string method = "auto";
    bool json = false;
    bool status_exit = false;
    std::size_t cap = 20;
    unsigned threads = 1;
};

int cmd_solve(const SolveArgs &a, std::ostream &out, std::ostream &err) {
    const auto d = load(a.file, err);
    SolveOptions opts;
    opts.budget = budget_from_env();
    opts.threads = std::max(1u, a.threads);

    SolveOutcome r;
    if (a.method == "auto") r = solve_auto(d, opts);
    else if (a.method == "dag") r = solve_dag(d);
    else if (a.method == "even") r = solve_even_period(d);
    else if (a.method == "bipartite") r = solve_bipartite(d);
    else if (a.method == "layers") r = solve_strong_by_layers(d, opts);
    else if (a.method == "exact") r = solve_exact(d, opts);
    else if (a.method == "brute") r = brute_force_solve(d, a.cap);
    else throw UsageError("unknown method '" + a.method + "'");

    if (a.json) {
        json j;
        j["status"] = to_string(r.status);
        if (r.found()) j["set"] = r.set.members();
        j["method"] = to_string(r.method);
        j["seeds_explored"] = r.stats.seeds_explored;
        j["subsets_explored"] = r.stats.subsets_explored;
        j["elapsed_ms"] = r.stats.elapsed_ms;
        out << j.dump() << "\n";
    } else {
        out << "status=" << to_string(r.status);
        if (r.found()) out << " set=" << r.set.to_string();
        out << "\n";
        out << "method=" << to_string(r.method) << "\n";
        out << "seeds_explored=" << r.stats.seeds_explored
            << " subsets_explored=" << r.stats.subsets_explored
            << " elapsed_ms=" << r.stats.elapsed_ms << "\n";
    }
    if (r.status == SolveStatus::BudgetExceeded) {
        err << "error: work budget exhausted\n";
        return kLimit;
    }
    if (a.status_exit && r.status == SolveStatus::NoneExists) return kNegative;
    return kOk;
}

int cmd_verify(const std::string &file, const std::string &set_text, bool as_json,
               std::ostream &out, std::ostream &err) {
    const auto d = load(file, err);
    const auto s = parse_set(set_text, d.size());
    const auto report = is_ids(d, s);
    if (as_json) {
        json arcs = json::array();
        for (const auto &[u, v] : report.independence_violations) arcs.push_back({u, v});
        json j;
        j["independent"] = report.independent;
        j["dominating"] = report.dominating;
        j["ids"] = report.ids();
        j["violations"] = {{"arcs", arcs}, {"undominated", report.domination_violations}};
        out << j.dump() << "\n";
        return kOk;
    }
    out << std::boolalpha;
    out << "independent=" << report.independent << "\n";
    out << "dominating=" << report.dominating << "\n";
    out << "ids=" << report.ids() << "\n";
    if (!report.independence_violations.empty()) {
        out << "arcs_inside=";
        for (std::size_t i = 0; i < report.independence_violations.size(); ++i) {
            const auto &[u, v] = report.independence_violations[i];
            out << (i ? "," : "") << u << "->" << v;
        }
        out << "\n";
    }
    if (!report.domination_violations.empty())
        out << "undominated=" << vertices_to_string(report.domination_violations) << "\n";
    return kOk;
}

int cmd_brute(const std::string &file, const std::string &what, std::size_t cap, bool as_json,
              std::ostream &out, std::ostream &err) {
    const auto d = load(file, err);
    json value;
    if (what == "exist") {
        value = brute_force_solve(d, cap).found();
    } else if (what == "i") {
        const auto i = min_ids_size_brute(d, cap);
        value = i ? json(*i) : json(nullptr);
    } else if (what == "gamma") {
        value = min_dom_size_brute(d, cap);
    } else if (what == "idomatic") {
        value = idomatic_brute(d, cap);
    } else {
        throw UsageError("unknown --what '" + what + "'");
    }
    if (as_json) {
        out << json{{"what", what}, {"value", value}}.dump() << "\n";
    } else {
        out << what << "=" << (value.is_null() ? "none" : value.dump()) << "\n";
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Independent dominating sets in directed graphs"};
    app.require_subcommand(1);

    bool as_json = false;

    std::string analyze_file;
    auto *analyze = app.add_subcommand("analyze", "Period, SCCs and layer sizes of a graph");
    analyze->add_option("file", analyze_file, "Arc-list file")->required();
    analyze->add_flag("--json", as_json, "JSON output");

    SolveArgs solve_args;
    auto *solve = app.add_subcommand("solve", "Find an independent dominating set");
    solve->add_option("file", solve_args.file, "Arc-list file")->required();
    solve->add_option("--method", solve_args.method, "auto|dag|even|bipartite|layers|exact|brute")
        ->check(CLI::IsMember({"auto", "dag", "even", "bipartite", "layers", "exact", "brute"}));
    solve->add_flag("--json", solve_args.json, "JSON output");
    solve->add_flag("--status-exit", solve_args.status_exit, "Exit 1 when no set exists");
    solve->add_option("--cap", solve_args.cap, "Vertex cap for --method brute");
    solve->add_option("--threads", solve_args.threads, "Threads for layer seed evaluation");

    std::string verify_file, verify_set;
    auto *verify = app.add_subcommand("verify", "Check a vertex set");
    verify->add_option("file", verify_file, "Arc-list file")->required();
    verify->add_option("--set", verify_set, "Comma-separated vertex ids")->required();
    verify->add_flag("--json", as_json, "JSON output");

    std::string brute_file, brute_what = "exist";
    std::size_t brute_cap = 20;
    auto *brute = app.add_subcommand("brute", "Brute-force oracle values");
    brute->add_option("file", brute_file, "Arc-list file")->required();
    brute->add_option("--what", brute_what, "exist|i|gamma|idomatic")
        ->check(CLI::IsMember({"exist", "i", "gamma", "idomatic"}));
    brute->add_option("--cap", brute_cap, "Refuse graphs with more vertices");
    brute->add_flag("--json", as_json, "JSON output");

    // gen: one subcommand per family, each leaving the graph in `generated`.
    auto *gen = app.add_subcommand("gen", "Generate a graph family as an arc list");
    gen->require_subcommand(1);
    std::optional<Digraph> generated;
    std::optional<UndirectedGraph> generated_undirected;
    std::string set_only;
    std::size_t n = 0, a = 0, b = 0, h = 0, k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string variant = "free", rules = "text", file_a, file_b;
    std::vector<std::function<void()>> builders;

    auto family = [&](const std::string &name, const std::string &desc) {
        return gen->add_subcommand(name, desc);
    };
    auto *g_cycle = family("cycle", "Directed cycle C_n");
    g_cycle->add_option("n", n)->required();
    g_cycle->callback([&] { generated = gen_cycle(n); });
    auto *g_path = family("path", "Directed path on n vertices");
    g_path->add_option("n", n)->required();
    g_path->callback([&] { generated = gen_path(n); });
    auto *g_wheel = family("wheel", "Directed wheel W_n' (centre is vertex n)");
    g_wheel->add_option("n", n)->required();
    g_wheel->callback([&] { generated = gen_wheel(n); });
    auto *g_paw = family("paw", "Oriented paw P'");
    g_paw->callback([&] { generated = gen_paw(); });
    auto *g_dhk = family("dhk", "Layered family D_{h,k}");
    g_dhk->add_option("period", h)->required();
    g_dhk->add_option("k", k)->required();
    g_dhk->add_option("--variant", variant)->check(CLI::IsMember({"free", "ids"}));
    g_dhk->add_option("--rules", rules)->check(CLI::IsMember({"text", "figure"}));
    g_dhk->callback([&] {
        DhkSpec spec{h, k, variant == "free" ? DhkVariant::IdsFree : DhkVariant::WithIds,
                     rules == "text" ? DhkRules::Text : DhkRules::Figure};
        generated = gen_dhk(spec).graph;
    });
    auto *g_product = family("product", "Cartesian product of two arc-list files");
    g_product->add_option("a", file_a)->required();
    g_product->add_option("b", file_b)->required();
    g_product->callback([&] { generated = cartesian_product(load(file_a, err), load(file_b, err)); });
    auto *g_double = family("double", "Antiparallel doubling of an undirected edge list");
    g_double->add_option("g", file_a)->required();
    g_double->callback([&] {
        std::ifstream in(file_a, std::ios::binary);
        if (!in) throw Error("cannot open " + file_a);
        std::ostringstream buf;
        buf << in.rdbuf();
        generated = double_edges(parse_undirected(buf.str()));
    });
    auto *g_cn = family("cn-ids", "The explicit independent dominating set of C_n x C_n");
    g_cn->add_option("n", n)->required();
    g_cn->callback([&] { set_only = cn_box_cn_ids(n).to_string(); });

    auto *g_rd = family("random-digraph", "Each ordered pair is an arc with probability p");
    g_rd->add_option("n", n)->required();
    g_rd->add_option("p", p)->required();
    g_rd->add_option("--seed", seed);
    g_rd->callback([&] { generated = random_digraph(n, p, seed); });
    auto *g_rdag = family("random-dag", "Random acyclic digraph");
    g_rdag->add_option("n", n)->required();
    g_rdag->add_option("p", p)->required();
    g_rdag->add_option("--seed", seed);
    g_rdag->callback([&] { generated = random_dag(n, p, seed); });
    auto *g_rbip = family("random-bipartite", "Random oriented bipartite digraph");
    g_rbip->add_option("a", a)->required();
    g_rbip->add_option("b", b)->required();
    g_rbip->add_option("p", p)->required();
    g_rbip->add_option("--seed", seed);
    g_rbip->callback([&] { generated = random_oriented_bipartite(a, b, p, seed); });
    auto *g_rlay = family("random-layered", "Random strongly connected digraph of period h");
    g_rlay->add_option("period", h)->required();
    g_rlay->add_option("size", n)->required();
    g_rlay->add_option("p", p)->required();
    g_rlay->add_option("--seed", seed);
    g_rlay->callback([&] { generated = random_layered_strong(h, n, p, seed); });
    auto *g_rund = family("random-undirected", "Random undirected edge list (input for double)");
    g_rund->add_option("n", n)->required();
    g_rund->add_option("p", p)->required();
    g_rund->add_option("--seed", seed);
    g_rund->callback([&] { generated_undirected = random_undirected(n, p, seed); });

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const CapExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kLimit;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_file, as_json, out, err);
        if (*solve) return cmd_solve(solve_args, out, err);
        if (*verify) return cmd_verify(verify_file, verify_set, as_json, out, err);
        if (*brute) return cmd_brute(brute_file, brute_what, brute_cap, as_json, out, err);
        if (*gen) {
            if (!set_only.empty()) out << set_only << "\n";
            else if (generated) out << format_digraph(*generated);
            else if (generated_undirected) {
                const auto &g = *generated_undirected;
                out << g.size() << " " << g.edges().size() << "\n";
                for (const auto &[u, v] : g.edges()) out << u << " " << v << "\n";
            }
            return kOk;
        }
    } catch (const CapExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kLimit;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace idom::cli
