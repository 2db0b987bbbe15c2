#include "idom/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "idom/errors.hpp"

namespace idom {

namespace {

void check_endpoint(Vertex v, std::size_t n) {
    if (v >= n)
        throw RangeError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) +
                         ")");
}

void check_members(const Digraph &d, const VertexSet &s) {
    if (s.universe() != d.size())
        throw RangeError("vertex set universe " + std::to_string(s.universe()) +
                         " does not match graph order " + std::to_string(d.size()));
}

} // namespace

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs)
    : arcs_(arcs.begin(), arcs.end()), out_(n), in_(n) {
    for (const auto &[u, v] : arcs_) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    }
    std::sort(arcs_.begin(), arcs_.end());
    const auto last = std::unique(arcs_.begin(), arcs_.end());
    duplicates_ = static_cast<std::size_t>(arcs_.end() - last);
    arcs_.erase(last, arcs_.end());
    for (const auto &[u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    // arcs_ is sorted by tail so out_ is already sorted; in_ is filled in tail order too.
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u >= size() || v >= size()) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

VertexSet Digraph::out_neighbours(const VertexSet &s) const {
    check_members(*this, s);
    VertexSet result(size());
    s.for_each([&](Vertex u) {
        for (Vertex v : out_[u]) result.insert(v);
    });
    return result;
}

VertexSet Subgraph::lift(const VertexSet &s, std::size_t parent_size) const {
    VertexSet out(parent_size);
    s.for_each([&](Vertex v) { out.insert(old_id.at(v)); });
    return out;
}

Subgraph induced_subgraph(const Digraph &d, const VertexSet &s) {
    check_members(d, s);
    Subgraph sub;
    sub.old_id = s.members();
    std::vector<Vertex> new_id(d.size(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < sub.old_id.size(); ++i)
        new_id[sub.old_id[i]] = static_cast<Vertex>(i);
    std::vector<Arc> arcs;
    for (const auto &[u, v] : d.arcs())
        if (s.contains(u) && s.contains(v)) arcs.emplace_back(new_id[u], new_id[v]);
    sub.graph = Digraph(sub.old_id.size(), arcs);
    return sub;
}

Subgraph out_closed_removal(const Digraph &d, const VertexSet &s) {
    check_members(d, s);
    const VertexSet keep = VertexSet::full(d.size()) - s - d.out_neighbours(s);
    return induced_subgraph(d, keep);
}

IndependenceCheck is_independent(const Digraph &d, const VertexSet &s) {
    check_members(d, s);
    IndependenceCheck result{true, {}};
    s.for_each([&](Vertex u) {
        for (Vertex v : d.out(u))
            if (s.contains(v)) result.violations.emplace_back(u, v);
    });
    result.independent = result.violations.empty();
    return result;
}

DominationCheck is_dominating(const Digraph &d, const VertexSet &s) {
    check_members(d, s);
    DominationCheck result{true, {}};
    for (Vertex v = 0; v < d.size(); ++v) {
        if (s.contains(v)) continue;
        const auto preds = d.in(v);
        const bool covered =
            std::any_of(preds.begin(), preds.end(), [&](Vertex u) { return s.contains(u); });
        if (!covered) result.undominated.push_back(v);
    }
    result.dominating = result.undominated.empty();
    return result;
}

IdsReport is_ids(const Digraph &d, const VertexSet &s) {
    auto ind = is_independent(d, s);
    auto dom = is_dominating(d, s);
    IdsReport report;
    report.independent = ind.independent;
    report.dominating = dom.dominating;
    report.independence_violations = std::move(ind.violations);
    report.domination_violations = std::move(dom.undominated);
    return report;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Parses exactly two non-negative decimal integers separated by whitespace.
bool parse_pair(std::string_view line, std::uint64_t &a, std::uint64_t &b) {
    const char *p = line.data();
    const char *end = line.data() + line.size();
    auto skip_ws = [&] {
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
    };
    skip_ws();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == p) return false;
    p = r1.ptr;
    if (p == end || (*p != ' ' && *p != '\t')) return false;
    skip_ws();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr == p) return false;
    p = r2.ptr;
    skip_ws();
    return p == end;
}

struct RawArcList {
    std::size_t n = 0;
    std::vector<Arc> arcs;
};

RawArcList parse_arc_list(std::string_view text) {
    RawArcList raw;
    bool have_header = false;
    std::size_t expected = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        std::uint64_t a = 0, b = 0;
        if (!have_header) {
            if (!parse_pair(line, a, b)) throw ParseError(line_no, "malformed header, expected 'n m'");
            if (a > (std::uint64_t{1} << 31)) throw ParseError(line_no, "vertex count too large");
            raw.n = static_cast<std::size_t>(a);
            expected = static_cast<std::size_t>(b);
            raw.arcs.reserve(std::min<std::size_t>(expected, 1u << 20));
            have_header = true;
            continue;
        }
        if (!parse_pair(line, a, b)) throw ParseError(line_no, "malformed arc line, expected 'u v'");
        if (raw.arcs.size() == expected)
            throw ParseError(line_no, "more arc lines than the header's m=" + std::to_string(expected));
        if (a >= raw.n || b >= raw.n)
            throw ParseError(line_no, "vertex id out of range for n=" + std::to_string(raw.n));
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        raw.arcs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw ParseError(line_no, "missing header 'n m'");
    if (raw.arcs.size() != expected)
        throw ParseError(line_no, "header announces " + std::to_string(expected) + " arcs, found " +
                                      std::to_string(raw.arcs.size()));
    return raw;
}

} // namespace

ParsedDigraph parse_digraph(std::string_view text) {
    auto raw = parse_arc_list(text);
    ParsedDigraph parsed;
    parsed.graph = Digraph(raw.n, raw.arcs);
    parsed.duplicate_arcs = parsed.graph.duplicates_collapsed();
    return parsed;
}

ParsedDigraph read_digraph_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_digraph(buf.str());
}

std::string format_digraph(const Digraph &d) {
    std::string out = std::to_string(d.size()) + " " + std::to_string(d.arc_count()) + "\n";
    for (const auto &[u, v] : d.arcs()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

UndirectedGraph::UndirectedGraph(std::size_t n, std::span<const Arc> edges) : n_(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

UndirectedGraph parse_undirected(std::string_view text) {
    auto raw = parse_arc_list(text);
    return UndirectedGraph(raw.n, raw.arcs);
}

} // namespace idom
