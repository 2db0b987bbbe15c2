#include "idom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "idom/errors.hpp"

namespace idom {

Digraph gen_cycle(std::size_t n) {
    if (n < 2) throw PreconditionError("cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i) arcs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Digraph(n, arcs);
}

Digraph gen_path(std::size_t n) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, arcs);
}

Digraph gen_wheel(std::size_t n) {
    if (n < 3) throw PreconditionError("wheel needs n >= 3");
    std::vector<Arc> arcs;
    const auto centre = static_cast<Vertex>(n);
    for (Vertex i = 0; i < n; ++i) {
        arcs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
        arcs.emplace_back(centre, i);
    }
    return Digraph(n + 1, arcs);
}

Digraph gen_paw() {
    return Digraph(4, {{kPawPendant, kPawT3}, {kPawT1, kPawT2}, {kPawT2, kPawT3}, {kPawT3, kPawT1}});
}

std::string_view to_string(DhkVariant v) {
    return v == DhkVariant::IdsFree ? "free" : "ids";
}

std::string_view to_string(DhkRules r) {
    return r == DhkRules::Text ? "text" : "figure";
}

namespace {

enum class LayerKind { Labels, Subsets };

// How a vertex of one layer connects to a vertex of the next.
enum class Rule {
    Member,    // label in subset (either direction)
    NonMember, // label not in subset
    Copy,      // subset equals subset
};

LayerKind kind_of(std::size_t layer) {
    if (layer == 0) return LayerKind::Labels;
    if (layer <= 2) return LayerKind::Subsets;
    return layer % 2 == 1 ? LayerKind::Labels : LayerKind::Subsets;
}

// Rule for arcs S_i -> S_{i+1 mod h}.
Rule rule_of(const DhkSpec &spec, std::size_t i) {
    const std::size_t h = spec.h;
    const bool flip = spec.variant == DhkVariant::WithIds;
    auto flipped = [](Rule r) { return r == Rule::Member ? Rule::NonMember : Rule::Member; };
    if (h == 3) {
        if (i == 0) return flip ? Rule::NonMember : Rule::Member;
        if (i == 1) return Rule::Copy;
        return Rule::Member;
    }
    if (i == 0) return spec.rules == DhkRules::Figure ? Rule::NonMember : Rule::Member;
    if (i == 1) return Rule::Copy;
    if (i == 2) return Rule::NonMember;
    if (i == h - 2) return flip ? flipped(Rule::Member) : Rule::Member;
    if (i == h - 1) return Rule::NonMember;
    return Rule::NonMember;
}

} // namespace

std::size_t DhkGraph::layer_offset(std::size_t layer) const {
    const std::size_t subsets = (std::size_t{1} << spec.k) - 2;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < layer; ++i)
        offset += kind_of(i) == LayerKind::Labels ? spec.k : subsets;
    return offset;
}

Vertex DhkGraph::label_vertex(std::size_t layer, std::size_t label) const {
    if (layer >= spec.h || kind_of(layer) != LayerKind::Labels)
        throw RangeError("layer " + std::to_string(layer) + " is not a label layer");
    if (label < 1 || label > spec.k) throw RangeError("label out of range");
    return static_cast<Vertex>(layer_offset(layer) + label - 1);
}

DhkGraph gen_dhk(const DhkSpec &spec) {
    if (spec.h < 3 || spec.h % 2 == 0) throw PreconditionError("D_{h,k} needs odd h >= 3");
    if (spec.k < 2) throw PreconditionError("D_{h,k} needs k >= 2");
    if (spec.k > 16) throw PreconditionError("D_{h,k}: k > 16 is too large to build");

    DhkGraph out;
    out.spec = spec;
    const std::size_t h = spec.h;
    const std::size_t full = (std::size_t{1} << spec.k) - 1;

    // Per layer: the payload of each vertex (label index 0..k-1, or subset mask).
    std::vector<std::vector<std::size_t>> payload(h);
    for (std::size_t i = 0; i < h; ++i) {
        if (kind_of(i) == LayerKind::Labels) {
            for (std::size_t l = 0; l < spec.k; ++l) payload[i].push_back(l);
        } else {
            for (std::size_t m = 1; m < full; ++m) payload[i].push_back(m);
        }
    }
    std::vector<std::size_t> offset(h + 1, 0);
    for (std::size_t i = 0; i < h; ++i) offset[i + 1] = offset[i] + payload[i].size();
    const std::size_t n = offset[h];

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t j = (i + 1) % h;
        const Rule rule = rule_of(spec, i);
        const bool from_labels = kind_of(i) == LayerKind::Labels;
        const bool to_labels = kind_of(j) == LayerKind::Labels;
        for (std::size_t a = 0; a < payload[i].size(); ++a) {
            for (std::size_t b = 0; b < payload[j].size(); ++b) {
                const std::size_t pa = payload[i][a], pb = payload[j][b];
                bool arc = false;
                if (rule == Rule::Copy) {
                    arc = !from_labels && !to_labels && pa == pb;
                } else {
                    if (from_labels == to_labels)
                        throw std::logic_error("membership rule between layers of one kind");
                    const std::size_t label = from_labels ? pa : pb;
                    const std::size_t mask = from_labels ? pb : pa;
                    const bool member = (mask >> label) & 1u;
                    arc = rule == Rule::Member ? member : !member;
                }
                if (arc)
                    arcs.emplace_back(static_cast<Vertex>(offset[i] + a),
                                      static_cast<Vertex>(offset[j] + b));
            }
        }
    }
    out.graph = Digraph(n, arcs);

    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t v = offset[i]; v < offset[i + 1]; ++v) labels[v] = i;
    try {
        out.layering = LayerDecomposition::from_labels(out.graph, h, std::move(labels));
    } catch (const PreconditionError &e) {
        throw ConstructionError(std::string("D_{h,k} layering broken: ") + e.what());
    }

    out.strongly_connected = is_strongly_connected(out.graph);
    out.period = period(out.graph);
    const std::string name = "D_{" + std::to_string(h) + "," + std::to_string(spec.k) + "} (" +
                             std::string(to_string(spec.variant)) + ", " +
                             std::string(to_string(spec.rules)) + ")";
    if (out.period == 0 || out.period % h != 0)
        throw ConstructionError(name + ": period " + std::to_string(out.period) +
                                " is not a multiple of " + std::to_string(h));
    if (spec.k >= 3 && (!out.strongly_connected || out.period != h))
        throw ConstructionError(name + ": expected a strongly connected graph of period " +
                                std::to_string(h) + ", got " +
                                (out.strongly_connected ? "strongly connected" : "disconnected") +
                                " with period " + std::to_string(out.period));
    return out;
}

Digraph cartesian_product(const Digraph &g, const Digraph &h, std::size_t max_vertices) {
    const std::size_t ng = g.size(), nh = h.size();
    if (ng != 0 && nh > max_vertices / ng)
        throw Error("product of " + std::to_string(ng) + " and " + std::to_string(nh) +
                    " vertices exceeds the limit of " + std::to_string(max_vertices));
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count() * nh + ng * h.arc_count());
    for (const auto &[x, y] : g.arcs())
        for (Vertex u = 0; u < nh; ++u)
            arcs.emplace_back(static_cast<Vertex>(x * nh + u), static_cast<Vertex>(y * nh + u));
    for (Vertex x = 0; x < ng; ++x)
        for (const auto &[u, v] : h.arcs())
            arcs.emplace_back(static_cast<Vertex>(x * nh + u), static_cast<Vertex>(x * nh + v));
    return Digraph(ng * nh, arcs);
}

Digraph double_edges(const UndirectedGraph &g) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.edges().size());
    for (const auto &[u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.size(), arcs);
}

namespace {

VertexSet cn_box_cn_set(std::size_t n, std::size_t j_count) {
    if (n < 3 || n % 2 == 0) throw PreconditionError("C_n x C_n construction needs odd n >= 3");
    VertexSet s(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < j_count; ++j)
            s.insert(static_cast<Vertex>(i * n + (i + 2 * j) % n));
    return s;
}

} // namespace

VertexSet cn_box_cn_ids(std::size_t n) {
    auto s = cn_box_cn_set(n, n / 2);
    const auto product = cartesian_product(gen_cycle(n), gen_cycle(n));
    if (!is_ids(product, s).ids())
        throw ConstructionError("C_n x C_n set failed verification for n=" + std::to_string(n));
    return s;
}

VertexSet cn_box_cn_inclusive_set(std::size_t n) {
    return cn_box_cn_set(n, n / 2 + 1);
}

namespace {

void check_prob(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("probability must lie in [0, 1]");
}

} // namespace

Digraph random_digraph(std::size_t n, double arc_prob, std::uint64_t seed) {
    check_prob(arc_prob);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

Digraph random_dag(std::size_t n, double arc_prob, std::uint64_t seed) {
    check_prob(arc_prob);
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) arcs.emplace_back(order[i], order[j]);
    return Digraph(n, arcs);
}

Digraph random_oriented_bipartite(std::size_t a, std::size_t b, double arc_prob, std::uint64_t seed) {
    check_prob(arc_prob);
    if (a == 0 || b == 0) throw PreconditionError("both parts must be nonempty");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_prob), forward(0.5);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < a; ++u) {
        for (std::size_t j = 0; j < b; ++j) {
            const auto v = static_cast<Vertex>(a + j);
            if (!coin(rng)) continue;
            if (forward(rng))
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    }
    return Digraph(a + b, arcs);
}

Digraph random_layered_strong(std::size_t h, std::size_t layer_size, double arc_prob,
                              std::uint64_t seed) {
    check_prob(arc_prob);
    if (h < 1 || layer_size < 1) throw PreconditionError("layer count and size must be positive");
    if (h == 1 && layer_size < 2) throw PreconditionError("h = 1 needs at least two vertices");
    const std::size_t n = h * layer_size;
    auto id = [&](std::size_t layer, std::size_t i) {
        return static_cast<Vertex>(layer * layer_size + i);
    };
    constexpr int kAttempts = 1000;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_prob);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Arc> arcs;
        // Hamiltonian cycle through (0,0),(1,0),...,(h-1,0),(0,1),...
        for (std::size_t i = 0; i < layer_size; ++i) {
            for (std::size_t t = 0; t + 1 < h; ++t) arcs.emplace_back(id(t, i), id(t + 1, i));
            arcs.emplace_back(id(h - 1, i), id(0, (i + 1) % layer_size));
        }
        for (std::size_t t = 0; t < h; ++t)
            for (std::size_t i = 0; i < layer_size; ++i)
                for (std::size_t j = 0; j < layer_size; ++j)
                    if (coin(rng)) {
                        const Vertex u = id(t, i), v = id((t + 1) % h, j);
                        if (u != v) arcs.emplace_back(u, v);
                    }
        Digraph d(n, arcs);
        if (scc_period(d) == h) return d;
    }
    throw ConstructionError("random_layered_strong: no graph of period " + std::to_string(h) +
                            " after " + std::to_string(kAttempts) + " attempts");
}

UndirectedGraph random_undirected(std::size_t n, double edge_prob, std::uint64_t seed) {
    check_prob(edge_prob);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Arc> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return UndirectedGraph(n, edges);
}

} // namespace idom
