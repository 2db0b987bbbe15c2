#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "idom/digraph.hpp"
#include "idom/structure.hpp"

namespace idom {

enum class SolveStatus { Found, NoneExists, BudgetExceeded };

enum class Method { DagGreedy, EvenPeriod, Bipartite, Layers, Exact, Brute };

std::string_view to_string(SolveStatus s);
// "dag-greedy", "even-period", "bipartite", "layers", "exact", "brute"
std::string_view to_string(Method m);

// One exhaustive seed search over the smallest layer of a strongly connected graph.
struct LayerSearch {
    std::size_t vertices = 0;
    std::size_t period = 0;
    std::size_t seed_layer_size = 0;
    std::uint64_t seeds = 0;

    // The bound 2^ceil(n/h) the seed count must respect.
    bool within_bound() const;
};

struct SolverStats {
    std::uint64_t seeds_explored = 0;
    std::uint64_t subsets_explored = 0;
    // Layer propagation steps plus backtracking nodes; this is what the budget meters.
    std::uint64_t work = 0;
    std::size_t recursion_depth = 0;
    double elapsed_ms = 0.0;
    std::vector<LayerSearch> layer_searches;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::NoneExists;
    // Meaningful iff status == Found.
    VertexSet set;
    Method method = Method::Exact;
    SolverStats stats;

    bool found() const { return status == SolveStatus::Found; }
};

struct SolveOptions {
    // Work units (propagation steps and search nodes) before giving up.
    std::uint64_t budget = 100'000'000;
    // Seed evaluation threads for the layer search. Results do not depend on it.
    unsigned threads = 1;
};

struct ForcedClosure {
    // Ids of the input graph.
    VertexSet forced;
    // Source-free remainder, with the map back to input ids.
    Subgraph residual;
};

/// Source-greedy closure: take every current source, delete its closed
/// out-neighbourhood, repeat until no source is left.
ForcedClosure forced_sources_closure(const Digraph &d);

// Throws PreconditionError unless d is acyclic.
SolveOutcome solve_dag(const Digraph &d);

// Union of the even-indexed layers. Throws PreconditionError unless d is
// strongly connected with even period.
SolveOutcome solve_even_period(const Digraph &d);

// Even-layer union and odd-layer union; same preconditions as solve_even_period.
std::pair<VertexSet, VertexSet> two_disjoint_ids(const Digraph &d);

// sides[v] in {0,1}; when absent a 2-colouring of the underlying undirected
// graph is computed, giving each component's smallest vertex side 0.
// Throws PreconditionError when the graph (or the given split) is not bipartite.
SolveOutcome solve_bipartite(const Digraph &d,
                             const std::optional<std::vector<int>> &sides = std::nullopt);

struct PropagationResult {
    bool consistent = false;
    // Full independent dominating set when consistent.
    VertexSet set;
    // Propagation step (1..h) at which the seed was rejected when inconsistent.
    std::size_t failing_step = 0;
    std::uint64_t steps = 0;
};

/// Fixes I ∩ S_k = seed and derives every other layer:
/// I ∩ S_{k+t+1} = S_{k+t+1} \ N+(I ∩ S_{k+t}), indices mod h.
/// Consistent iff the wrap-around recomputation of layer k reproduces the seed.
/// `layers` may be any cyclic layering of d (validated through from_labels or
/// layer_decomposition). Throws PreconditionError if seed is not inside S_k.
PropagationResult propagate_layer_seed(const Digraph &d, const LayerDecomposition &layers,
                                       std::size_t k, const VertexSet &seed);

// Every independent dominating set of a strongly connected graph, obtained by
// propagating all seeds of its smallest layer (or by backtracking when h = 1).
std::vector<VertexSet> all_ids_by_layers(const Digraph &d, const SolveOptions &opts = {});

/// Strongly connected input. Even period delegates to solve_even_period.
/// Otherwise seeds X ⊆ S_k of the smallest layer are tried in increasing
/// bitmask order (bit i = i-th smallest vertex of S_k); first consistent wins.
SolveOutcome solve_strong_by_layers(const Digraph &d, const SolveOptions &opts = {});

/// Complete decision procedure for arbitrary digraphs.
SolveOutcome solve_exact(const Digraph &d, const SolveOptions &opts = {});

// acyclic -> solve_dag, strongly connected with even period -> solve_even_period,
// anything else -> solve_exact.
SolveOutcome solve_auto(const Digraph &d, const SolveOptions &opts = {});

// Brute-force oracles: all 2^n subsets, refused above cap.
SolveOutcome brute_force_solve(const Digraph &d, std::size_t cap = 20);
std::vector<VertexSet> all_ids_brute(const Digraph &d, std::size_t cap = 20);
// i(D); nullopt when D has no independent dominating set.
std::optional<std::size_t> min_ids_size_brute(const Digraph &d, std::size_t cap = 20);
// gamma(D)
std::size_t min_dom_size_brute(const Digraph &d, std::size_t cap = 20);
// Maximum number of pairwise disjoint independent dominating sets.
std::size_t idomatic_brute(const Digraph &d, std::size_t cap = 14);

} // namespace idom
