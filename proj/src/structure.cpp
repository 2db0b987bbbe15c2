#include "idom/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "idom/errors.hpp"

namespace idom {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Iterative Tarjan. Components come out in reverse topological order.
std::vector<std::vector<Vertex>> tarjan(const Digraph &d) {
    const std::size_t n = d.size();
    std::vector<std::size_t> index(n, kUnset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> out;
    std::size_t counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &frame = call.back();
            const Vertex v = frame.v;
            const auto succ = d.out(v);
            if (frame.next < succ.size()) {
                const Vertex w = succ[frame.next++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) {
                const Vertex parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return out;
}

// BFS levels from root; kUnset for unreachable vertices.
std::vector<std::size_t> bfs_levels(const Digraph &d, Vertex root) {
    std::vector<std::size_t> level(d.size(), kUnset);
    std::queue<Vertex> q;
    level[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        for (Vertex v : d.out(u)) {
            if (level[v] == kUnset) {
                level[v] = level[u] + 1;
                q.push(v);
            }
        }
    }
    return level;
}

} // namespace

SccDecomposition sccs(const Digraph &d) {
    auto raw = tarjan(d);
    const std::size_t c = raw.size();
    std::vector<std::size_t> raw_of(d.size());
    for (std::size_t i = 0; i < c; ++i)
        for (Vertex v : raw[i]) raw_of[v] = i;

    // Kahn's algorithm on the quotient, keyed by smallest member vertex.
    std::vector<std::vector<std::size_t>> succ(c);
    std::vector<std::size_t> indeg(c, 0);
    for (const auto &[u, v] : d.arcs()) {
        const auto a = raw_of[u], b = raw_of[v];
        if (a != b) succ[a].push_back(b);
    }
    for (auto &s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (auto b : s) ++indeg[b];
    }
    using Key = std::pair<Vertex, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (std::size_t i = 0; i < c; ++i)
        if (indeg[i] == 0) ready.emplace(raw[i].front(), i);

    SccDecomposition result;
    result.component_of.assign(d.size(), 0);
    result.components.reserve(c);
    while (!ready.empty()) {
        const auto i = ready.top().second;
        ready.pop();
        const std::size_t id = result.components.size();
        for (Vertex v : raw[i]) result.component_of[v] = id;
        result.components.push_back(std::move(raw[i]));
        for (auto b : succ[i])
            if (--indeg[b] == 0) ready.emplace(raw[b].front(), b);
    }
    return result;
}

std::vector<std::size_t> Condensation::source_components() const {
    std::vector<std::size_t> out;
    for (Vertex c = 0; c < dag.size(); ++c)
        if (dag.in_degree(c) == 0) out.push_back(c);
    return out;
}

Condensation condensation(const Digraph &d) {
    Condensation cond;
    cond.sccs = sccs(d);
    std::vector<Arc> arcs;
    for (const auto &[u, v] : d.arcs()) {
        const auto a = cond.sccs.component_of[u], b = cond.sccs.component_of[v];
        if (a != b) arcs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    cond.dag = Digraph(cond.sccs.count(), arcs);
    return cond;
}

bool is_strongly_connected(const Digraph &d) {
    if (d.size() == 0) return false;
    return sccs(d).count() == 1;
}

bool is_acyclic(const Digraph &d) {
    return sccs(d).count() == d.size();
}

std::size_t scc_period(const Digraph &d, Vertex root) {
    if (d.size() < 2) throw PreconditionError("period needs a strongly connected graph with a cycle");
    if (root >= d.size()) throw RangeError("BFS root out of range");
    const auto level = bfs_levels(d, root);
    if (std::any_of(level.begin(), level.end(), [](auto l) { return l == kUnset; }) ||
        !is_strongly_connected(d))
        throw PreconditionError("graph is not strongly connected");
    std::size_t h = 0;
    for (const auto &[u, v] : d.arcs()) {
        // level(v) <= level(u) + 1 for every arc of a BFS tree.
        h = std::gcd(h, level[u] + 1 - level[v]);
    }
    return h;
}

std::size_t period(const Digraph &d) {
    const auto decomposition = sccs(d);
    std::size_t h = 0;
    for (const auto &comp : decomposition.components) {
        if (comp.size() < 2) continue;
        const auto sub = induced_subgraph(d, VertexSet(d.size(), comp));
        h = std::gcd(h, scc_period(sub.graph));
    }
    return h;
}

std::vector<std::size_t> LayerDecomposition::layer_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(layers.size());
    for (const auto &l : layers) out.push_back(l.size());
    return out;
}

std::size_t LayerDecomposition::smallest_layer() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < layers.size(); ++i)
        if (layers[i].size() < layers[best].size()) best = i;
    return best;
}

LayerDecomposition LayerDecomposition::from_labels(const Digraph &d, std::size_t h,
                                                   std::vector<std::size_t> labels) {
    if (h == 0) throw PreconditionError("layer count must be positive");
    if (labels.size() != d.size()) throw PreconditionError("one label per vertex required");
    LayerDecomposition out;
    out.period = h;
    out.layers.assign(h, VertexSet(d.size()));
    for (Vertex v = 0; v < d.size(); ++v) {
        if (labels[v] >= h) throw PreconditionError("layer label out of range");
        out.layers[labels[v]].insert(v);
    }
    for (std::size_t i = 0; i < h; ++i)
        if (out.layers[i].empty())
            throw PreconditionError("layer " + std::to_string(i) + " is empty");
    for (const auto &[u, v] : d.arcs())
        if (labels[v] != (labels[u] + 1) % h)
            throw PreconditionError("arc " + std::to_string(u) + "->" + std::to_string(v) +
                                    " does not advance the layer index");
    out.layer_of = std::move(labels);
    return out;
}

LayerDecomposition layer_decomposition(const Digraph &d) {
    const std::size_t h = scc_period(d, 0);
    const auto level = bfs_levels(d, 0);
    std::vector<std::size_t> labels(d.size());
    for (Vertex v = 0; v < d.size(); ++v) labels[v] = level[v] % h;
    return LayerDecomposition::from_labels(d, h, std::move(labels));
}

std::size_t cycle_gcd_oracle(const Digraph &d, std::size_t max_vertices) {
    const std::size_t n = d.size();
    if (n > max_vertices)
        throw CapExceeded("cycle enumeration limited to " + std::to_string(max_vertices) +
                          " vertices, graph has " + std::to_string(n));
    std::size_t g = 0;
    std::vector<bool> on_path(n, false);
    // Each simple cycle is enumerated once, from its smallest vertex `start`.
    std::function<void(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex v,
                                                               std::size_t depth) {
        for (Vertex w : d.out(v)) {
            if (g == 1) return;
            if (w == start) {
                g = std::gcd(g, depth + 1);
            } else if (w > start && !on_path[w]) {
                on_path[w] = true;
                dfs(start, w, depth + 1);
                on_path[w] = false;
            }
        }
    };
    for (Vertex s = 0; s < n && g != 1; ++s) {
        on_path[s] = true;
        dfs(s, s, 0);
        on_path[s] = false;
    }
    return g;
}

} // namespace idom
