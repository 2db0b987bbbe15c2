#include "idom/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <queue>
#include <stdexcept>
#include <thread>

#include "idom/errors.hpp"

namespace idom {

std::string_view to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::NoneExists: return "none";
    case SolveStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::DagGreedy: return "dag-greedy";
    case Method::EvenPeriod: return "even-period";
    case Method::Bipartite: return "bipartite";
    case Method::Layers: return "layers";
    case Method::Exact: return "exact";
    case Method::Brute: return "brute";
    }
    return "?";
}

bool LayerSearch::within_bound() const {
    if (period == 0) return false;
    const std::size_t exponent = (vertices + period - 1) / period;
    if (exponent >= 64) return true;
    return seeds <= (std::uint64_t{1} << exponent);
}

namespace {

struct BudgetExhausted {};

class WorkMeter {
public:
    explicit WorkMeter(std::uint64_t limit) : limit_(limit) {}
    void charge(std::uint64_t units) {
        if (used_.fetch_add(units, std::memory_order_relaxed) + units > limit_) throw BudgetExhausted{};
    }
    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Every Found answer is re-checked against the plain verifier before it leaves the library.
SolveOutcome finish(const Digraph &d, SolveOutcome out, const Stopwatch &clock) {
    out.stats.elapsed_ms = clock.elapsed_ms();
    if (out.found() && !is_ids(d, out.set).ids())
        throw std::logic_error("solver " + std::string(to_string(out.method)) +
                               " produced a set that is not an independent dominating set: " +
                               out.set.to_string());
    return out;
}

SolveOutcome found(VertexSet set, Method m) {
    SolveOutcome out;
    out.status = SolveStatus::Found;
    out.set = std::move(set);
    out.method = m;
    return out;
}

SolveOutcome none(std::size_t n, Method m) {
    SolveOutcome out;
    out.status = SolveStatus::NoneExists;
    out.set = VertexSet(n);
    out.method = m;
    return out;
}

void require_strong(const Digraph &d) {
    if (d.size() < 2 || !is_strongly_connected(d))
        throw PreconditionError("graph must be strongly connected with at least two vertices");
}

VertexSet seed_from_mask(std::size_t n, const std::vector<Vertex> &layer, std::uint64_t mask) {
    VertexSet seed(n);
    for (std::size_t i = 0; i < layer.size(); ++i)
        if ((mask >> i) & 1u) seed.insert(layer[i]);
    return seed;
}

/// Backtracking over independent sets for period-1 components, visiting
/// subsets in increasing bitmask order (vertex n-1 is the most significant
/// bit, excluded before included). Subtrees are cut as soon as an included
/// pair is adjacent or a fully decided excluded vertex has no included
/// in-neighbour. `visit` is called for each independent dominating set and
/// returns true to stop.
class IdsBacktracker {
public:
    IdsBacktracker(const Digraph &d, WorkMeter &meter) : d_(d), meter_(meter), chosen_(d.size()) {
        const std::size_t n = d.size();
        // A vertex can be judged once it and all its in-neighbours are decided.
        ready_at_.assign(n, {});
        for (Vertex u = 0; u < n; ++u) {
            Vertex lowest = u;
            for (Vertex p : d.in(u)) lowest = std::min(lowest, p);
            ready_at_[lowest].push_back(u);
        }
    }

    template <typename Visit>
    bool run(Visit &&visit) {
        if (d_.size() == 0) return visit(chosen_);
        return descend(static_cast<Vertex>(d_.size() - 1), visit);
    }

    std::uint64_t leaves() const { return leaves_; }

private:
    bool dominated(Vertex u) const {
        if (chosen_.contains(u)) return true;
        for (Vertex p : d_.in(u))
            if (chosen_.contains(p)) return true;
        return false;
    }

    bool can_include(Vertex v) const {
        for (Vertex w : d_.out(v))
            if (chosen_.contains(w)) return false;
        for (Vertex w : d_.in(v))
            if (chosen_.contains(w)) return false;
        return true;
    }

    template <typename Visit>
    bool after_decision(Vertex v, Visit &visit) {
        for (Vertex u : ready_at_[v])
            if (!dominated(u)) return false;
        if (v == 0) {
            ++leaves_;
            return visit(chosen_);
        }
        return descend(v - 1, visit);
    }

    template <typename Visit>
    bool descend(Vertex v, Visit &visit) {
        meter_.charge(1);
        if (after_decision(v, visit)) return true;
        if (can_include(v)) {
            chosen_.insert(v);
            const bool stop = after_decision(v, visit);
            chosen_.erase(v);
            if (stop) return true;
        }
        return false;
    }

    const Digraph &d_;
    WorkMeter &meter_;
    VertexSet chosen_;
    std::vector<std::vector<Vertex>> ready_at_;
    std::uint64_t leaves_ = 0;
};

constexpr std::size_t kMaxSeedBits = 62;

/// Enumerates independent dominating sets of a strongly connected graph and
/// hands each to `visit` (return true to stop). Records one LayerSearch.
template <typename Visit>
bool enumerate_strong_ids(const Digraph &c, WorkMeter &meter, SolverStats &stats, Visit &&visit) {
    const auto layers = layer_decomposition(c);
    LayerSearch record;
    record.vertices = c.size();
    record.period = layers.period;
    bool stopped = false;
    if (layers.period == 1) {
        record.seed_layer_size = c.size();
        IdsBacktracker bt(c, meter);
        try {
            stopped = bt.run([&](const VertexSet &s) { return visit(s); });
        } catch (const BudgetExhausted &) {
            record.seeds = bt.leaves();
            stats.seeds_explored += bt.leaves();
            stats.layer_searches.push_back(record);
            throw;
        }
        record.seeds = bt.leaves();
    } else {
        const std::size_t k = layers.smallest_layer();
        const auto seed_layer = layers.layers[k].members();
        record.seed_layer_size = seed_layer.size();
        if (seed_layer.size() > kMaxSeedBits) throw BudgetExhausted{};
        const std::uint64_t total = std::uint64_t{1} << seed_layer.size();
        for (std::uint64_t mask = 0; mask < total && !stopped; ++mask) {
            ++record.seeds;
            const auto res =
                propagate_layer_seed(c, layers, k, seed_from_mask(c.size(), seed_layer, mask));
            meter.charge(res.steps);
            if (res.consistent) stopped = visit(res.set);
        }
    }
    stats.seeds_explored += record.seeds;
    stats.layer_searches.push_back(record);
    return stopped;
}

struct ExactSearch {
    WorkMeter &meter;
    SolverStats &stats;

    std::optional<VertexSet> solve(const Digraph &d, std::size_t depth) {
        stats.recursion_depth = std::max(stats.recursion_depth, depth);
        meter.charge(1);
        if (d.size() == 0) return VertexSet(0);

        auto closure = forced_sources_closure(d);
        const auto &residual = closure.residual;
        if (residual.graph.size() == 0) return closure.forced;

        // A source component has no arcs entering it, so an IDS restricted to it
        // is an IDS of the component on its own.
        const auto decomposition = sccs(residual.graph);
        const auto &first = decomposition.components.front();
        const auto comp = induced_subgraph(residual.graph, VertexSet(residual.graph.size(), first));

        std::optional<VertexSet> answer;
        enumerate_strong_ids(comp.graph, meter, stats, [&](const VertexSet &local) {
            const VertexSet in_residual = comp.lift(local, residual.graph.size());
            const auto rest = out_closed_removal(residual.graph, in_residual);
            auto sub = solve(rest.graph, depth + 1);
            if (!sub) return false;
            VertexSet combined = in_residual | rest.lift(*sub, residual.graph.size());
            answer = closure.forced | residual.lift(combined, d.size());
            return true;
        });
        return answer;
    }
};

} // namespace

ForcedClosure forced_sources_closure(const Digraph &d) {
    ForcedClosure out;
    out.forced = VertexSet(d.size());
    Subgraph current;
    current.graph = d;
    current.old_id.resize(d.size());
    for (Vertex v = 0; v < d.size(); ++v) current.old_id[v] = v;

    while (true) {
        VertexSet sources(current.graph.size());
        for (Vertex v = 0; v < current.graph.size(); ++v)
            if (current.graph.in_degree(v) == 0) sources.insert(v);
        if (sources.empty()) break;
        out.forced |= current.lift(sources, d.size());
        auto next = out_closed_removal(current.graph, sources);
        for (auto &id : next.old_id) id = current.old_id[id];
        current = std::move(next);
    }
    out.residual = std::move(current);
    return out;
}

SolveOutcome solve_dag(const Digraph &d) {
    Stopwatch clock;
    if (!is_acyclic(d)) throw PreconditionError("solve_dag: graph has a directed cycle");
    auto closure = forced_sources_closure(d);
    if (closure.residual.graph.size() != 0)
        throw std::logic_error("source closure left vertices in an acyclic graph");
    return finish(d, found(std::move(closure.forced), Method::DagGreedy), clock);
}

namespace {

LayerDecomposition even_layers(const Digraph &d) {
    require_strong(d);
    auto layers = layer_decomposition(d);
    if (layers.period % 2 != 0)
        throw PreconditionError("period " + std::to_string(layers.period) + " is odd");
    return layers;
}

} // namespace

SolveOutcome solve_even_period(const Digraph &d) {
    Stopwatch clock;
    const auto layers = even_layers(d);
    VertexSet set(d.size());
    for (std::size_t i = 0; i < layers.period; i += 2) set |= layers.layers[i];
    return finish(d, found(std::move(set), Method::EvenPeriod), clock);
}

std::pair<VertexSet, VertexSet> two_disjoint_ids(const Digraph &d) {
    const auto layers = even_layers(d);
    VertexSet even(d.size()), odd(d.size());
    for (std::size_t i = 0; i < layers.period; ++i) (i % 2 == 0 ? even : odd) |= layers.layers[i];
    if (!is_ids(d, even).ids() || !is_ids(d, odd).ids())
        throw std::logic_error("layer parity classes failed verification");
    return {std::move(even), std::move(odd)};
}

SolveOutcome solve_bipartite(const Digraph &d, const std::optional<std::vector<int>> &sides) {
    Stopwatch clock;
    const std::size_t n = d.size();
    std::vector<int> side;
    if (sides) {
        side = *sides;
        if (side.size() != n) throw PreconditionError("bipartition must label every vertex");
        for (int s : side)
            if (s != 0 && s != 1) throw PreconditionError("bipartition labels must be 0 or 1");
    } else {
        side.assign(n, -1);
        for (Vertex root = 0; root < n; ++root) {
            if (side[root] != -1) continue;
            side[root] = 0;
            std::queue<Vertex> q;
            q.push(root);
            while (!q.empty()) {
                const Vertex u = q.front();
                q.pop();
                auto visit = [&](Vertex w) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        q.push(w);
                    }
                };
                for (Vertex w : d.out(u)) visit(w);
                for (Vertex w : d.in(u)) visit(w);
            }
        }
    }
    for (const auto &[u, v] : d.arcs())
        if (side[u] == side[v])
            throw PreconditionError("not bipartite: arc " + std::to_string(u) + "->" +
                                    std::to_string(v) + " inside one side");

    auto closure = forced_sources_closure(d);
    VertexSet set = closure.forced;
    const auto &res = closure.residual;
    for (Vertex v = 0; v < res.graph.size(); ++v)
        if (side[res.old_id[v]] == 0) set.insert(res.old_id[v]);
    return finish(d, found(std::move(set), Method::Bipartite), clock);
}

PropagationResult propagate_layer_seed(const Digraph &d, const LayerDecomposition &layers,
                                       std::size_t k, const VertexSet &seed) {
    const std::size_t h = layers.period;
    if (layers.layer_of.size() != d.size() || layers.layers.size() != h)
        throw PreconditionError("layer decomposition does not belong to this graph");
    if (k >= h) throw PreconditionError("layer index out of range");
    if (seed.universe() != d.size()) throw RangeError("seed universe does not match graph order");
    if (!seed.is_subset_of(layers.layers[k]))
        throw PreconditionError("seed is not contained in layer " + std::to_string(k));

    bool every_vertex_has_pred = true;
    for (Vertex v = 0; v < d.size() && every_vertex_has_pred; ++v)
        every_vertex_has_pred = d.in_degree(v) > 0;
    // With odd h and no sources an empty layer intersection can never close up.
    const bool empty_is_fatal = h % 2 == 1 && h > 1 && every_vertex_has_pred;

    PropagationResult out;
    out.set = seed;
    VertexSet current = seed;
    for (std::size_t t = 1; t <= h; ++t) {
        const std::size_t idx = (k + t) % h;
        VertexSet next = layers.layers[idx] - d.out_neighbours(current);
        ++out.steps;
        if (t == h) {
            out.consistent = next == seed;
            if (!out.consistent) out.failing_step = t;
            break;
        }
        if (empty_is_fatal && next.empty()) {
            out.failing_step = t;
            break;
        }
        out.set |= next;
        current = std::move(next);
    }
    if (out.consistent) {
        if (!is_ids(d, out.set).ids())
            throw std::logic_error("consistent propagation is not an independent dominating set");
    } else {
        out.set = VertexSet(d.size());
    }
    return out;
}

std::vector<VertexSet> all_ids_by_layers(const Digraph &d, const SolveOptions &opts) {
    require_strong(d);
    WorkMeter meter(opts.budget);
    SolverStats stats;
    std::vector<VertexSet> out;
    try {
        enumerate_strong_ids(d, meter, stats, [&](const VertexSet &s) {
            out.push_back(s);
            return false;
        });
    } catch (const BudgetExhausted &) {
        throw Error("work budget exhausted while enumerating independent dominating sets");
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Seeds in blocks; each block is split across threads, and the lowest
// consistent mask of the first block that has one is reported, so the answer
// matches the sequential scan.
std::optional<std::pair<std::uint64_t, PropagationResult>>
parallel_seed_scan(const Digraph &d, const LayerDecomposition &layers, std::size_t k,
                   const std::vector<Vertex> &seed_layer, unsigned threads, WorkMeter &meter) {
    const std::uint64_t total = std::uint64_t{1} << seed_layer.size();
    const std::uint64_t block = std::uint64_t{threads} * 256;
    for (std::uint64_t base = 0; base < total; base += block) {
        const std::uint64_t end = std::min(total, base + block);
        std::vector<std::optional<std::pair<std::uint64_t, PropagationResult>>> best(threads);
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::uint64_t mask = base + t; mask < end; mask += threads) {
                            auto res = propagate_layer_seed(
                                d, layers, k, seed_from_mask(d.size(), seed_layer, mask));
                            meter.charge(res.steps);
                            if (res.consistent) {
                                best[t].emplace(mask, std::move(res));
                                return;
                            }
                        }
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        std::optional<std::pair<std::uint64_t, PropagationResult>> winner;
        for (unsigned t = 0; t < threads; ++t)
            if (best[t] && (!winner || best[t]->first < winner->first)) winner = std::move(best[t]);
        if (winner) return winner;
        for (auto &e : errors)
            if (e) std::rethrow_exception(e);
    }
    return std::nullopt;
}

} // namespace

SolveOutcome solve_strong_by_layers(const Digraph &d, const SolveOptions &opts) {
    Stopwatch clock;
    require_strong(d);
    const auto layers = layer_decomposition(d);
    if (layers.period % 2 == 0) return solve_even_period(d);

    WorkMeter meter(opts.budget);
    SolveOutcome out = none(d.size(), Method::Layers);
    try {
        if (opts.threads > 1 && layers.period > 1) {
            const std::size_t k = layers.smallest_layer();
            const auto seed_layer = layers.layers[k].members();
            if (seed_layer.size() > kMaxSeedBits) throw BudgetExhausted{};
            LayerSearch record{d.size(), layers.period, seed_layer.size(), 0};
            auto hit = parallel_seed_scan(d, layers, k, seed_layer, opts.threads, meter);
            record.seeds = hit ? hit->first + 1 : (std::uint64_t{1} << seed_layer.size());
            out.stats.seeds_explored = record.seeds;
            out.stats.layer_searches.push_back(record);
            if (hit) {
                out.status = SolveStatus::Found;
                out.set = std::move(hit->second.set);
            }
        } else {
            enumerate_strong_ids(d, meter, out.stats, [&](const VertexSet &s) {
                out.status = SolveStatus::Found;
                out.set = s;
                return true;
            });
        }
    } catch (const BudgetExhausted &) {
        out.status = SolveStatus::BudgetExceeded;
    }
    out.stats.work = meter.used();
    return finish(d, std::move(out), clock);
}

SolveOutcome solve_exact(const Digraph &d, const SolveOptions &opts) {
    Stopwatch clock;
    WorkMeter meter(opts.budget);
    SolveOutcome out = none(d.size(), Method::Exact);
    try {
        ExactSearch search{meter, out.stats};
        if (auto set = search.solve(d, 0)) {
            out.status = SolveStatus::Found;
            out.set = std::move(*set);
        }
    } catch (const BudgetExhausted &) {
        out.status = SolveStatus::BudgetExceeded;
    }
    out.stats.work = meter.used();
    return finish(d, std::move(out), clock);
}

SolveOutcome solve_auto(const Digraph &d, const SolveOptions &opts) {
    if (is_acyclic(d)) return solve_dag(d);
    if (d.size() >= 2 && is_strongly_connected(d) && scc_period(d) % 2 == 0)
        return solve_even_period(d);
    return solve_exact(d, opts);
}

namespace {

constexpr std::size_t kMaxBruteBits = 30;

// Closed in/out masks for word-sized brute force.
struct MaskGraph {
    std::size_t n;
    std::vector<std::uint64_t> out, in;

    MaskGraph(const Digraph &d, std::size_t cap) : n(d.size()), out(d.size(), 0), in(d.size(), 0) {
        if (n > cap || n > kMaxBruteBits)
            throw CapExceeded("brute force limited to " + std::to_string(std::min(cap, kMaxBruteBits)) +
                              " vertices, graph has " + std::to_string(n));
        for (const auto &[u, v] : d.arcs()) {
            out[u] |= std::uint64_t{1} << v;
            in[v] |= std::uint64_t{1} << u;
        }
    }

    bool independent(std::uint64_t s) const {
        for (std::uint64_t rest = s; rest; rest &= rest - 1)
            if (out[std::countr_zero(rest)] & s) return false;
        return true;
    }

    bool dominating(std::uint64_t s) const {
        const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        for (std::uint64_t rest = all & ~s; rest; rest &= rest - 1)
            if ((in[std::countr_zero(rest)] & s) == 0) return false;
        return true;
    }

    std::uint64_t count() const { return std::uint64_t{1} << n; }
};

VertexSet to_set(std::size_t n, std::uint64_t mask) {
    VertexSet s(n);
    for (; mask; mask &= mask - 1) s.insert(static_cast<Vertex>(std::countr_zero(mask)));
    return s;
}

std::vector<std::uint64_t> all_ids_masks(const MaskGraph &g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < g.count(); ++s)
        if (g.independent(s) && g.dominating(s)) out.push_back(s);
    return out;
}

} // namespace

SolveOutcome brute_force_solve(const Digraph &d, std::size_t cap) {
    Stopwatch clock;
    const MaskGraph g(d, cap);
    SolveOutcome out = none(d.size(), Method::Brute);
    for (std::uint64_t s = 0; s < g.count(); ++s) {
        ++out.stats.subsets_explored;
        if (g.independent(s) && g.dominating(s)) {
            out.status = SolveStatus::Found;
            out.set = to_set(d.size(), s);
            break;
        }
    }
    return finish(d, std::move(out), clock);
}

std::vector<VertexSet> all_ids_brute(const Digraph &d, std::size_t cap) {
    const MaskGraph g(d, cap);
    std::vector<VertexSet> out;
    for (auto m : all_ids_masks(g)) out.push_back(to_set(d.size(), m));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> min_ids_size_brute(const Digraph &d, std::size_t cap) {
    const MaskGraph g(d, cap);
    std::optional<std::size_t> best;
    for (std::uint64_t s = 0; s < g.count(); ++s) {
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (best && size >= *best) continue;
        if (g.independent(s) && g.dominating(s)) best = size;
    }
    return best;
}

std::size_t min_dom_size_brute(const Digraph &d, std::size_t cap) {
    const MaskGraph g(d, cap);
    std::size_t best = d.size();
    for (std::uint64_t s = 0; s < g.count(); ++s) {
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (size < best && g.dominating(s)) best = size;
    }
    return best;
}

std::size_t idomatic_brute(const Digraph &d, std::size_t cap) {
    const MaskGraph g(d, cap);
    const auto family = all_ids_masks(g);
    if (family.empty()) return 0;
    std::size_t smallest = d.size();
    for (auto m : family) smallest = std::min<std::size_t>(smallest, std::popcount(m));

    std::size_t best = 0;
    // Packing search; the remaining vertices bound how many more sets can fit.
    auto search = [&](auto &&self, std::size_t from, std::uint64_t used, std::size_t count) -> void {
        best = std::max(best, count);
        const std::size_t free_vertices = d.size() - static_cast<std::size_t>(std::popcount(used));
        if (smallest == 0 || count + free_vertices / smallest <= best) return;
        for (std::size_t i = from; i < family.size(); ++i)
            if ((family[i] & used) == 0) self(self, i + 1, used | family[i], count + 1);
    };
    search(search, 0, 0, 0);
    return best;
}

} // namespace idom
