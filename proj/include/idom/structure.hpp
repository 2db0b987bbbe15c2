#pragma once

#include <cstddef>
#include <vector>

#include "idom/digraph.hpp"

namespace idom {

/// Strongly connected components.
///
/// Components are listed in topological order of the condensation: every arc
/// between two different components goes from a lower index to a higher one.
/// Among components that are simultaneously available the one holding the
/// smallest vertex comes first, so numbering is fully deterministic. Each
/// component's vertex list is ascending.
struct SccDecomposition {
    std::vector<std::size_t> component_of;
    std::vector<std::vector<Vertex>> components;

    std::size_t count() const { return components.size(); }
};

struct Condensation {
    SccDecomposition sccs;
    // Vertex i of dag is component i of sccs.
    Digraph dag;

    // Components with no incoming arc in the dag, ascending.
    std::vector<std::size_t> source_components() const;
};

/// Partition S_0..S_{h-1} such that every arc goes from S_i to S_{i+1 mod h}.
struct LayerDecomposition {
    std::size_t period = 1;
    std::vector<std::size_t> layer_of;
    std::vector<VertexSet> layers;

    std::vector<std::size_t> layer_sizes() const;
    // Index of the smallest layer, lowest index on ties.
    std::size_t smallest_layer() const;

    // Builds from explicit labels and checks the partition and arc rule.
    // Throws PreconditionError when the labelling is not a cyclic layering of d.
    static LayerDecomposition from_labels(const Digraph &d, std::size_t period,
                                          std::vector<std::size_t> labels);
};

SccDecomposition sccs(const Digraph &d);
Condensation condensation(const Digraph &d);
bool is_strongly_connected(const Digraph &d);
bool is_acyclic(const Digraph &d);

// Period of a strongly connected digraph with at least two vertices.
// BFS from root; gcd over arcs of level(u) + 1 - level(v).
std::size_t scc_period(const Digraph &d, Vertex root = 0);

// gcd of scc_period over all components of size >= 2; 0 when acyclic.
std::size_t period(const Digraph &d);

// Requires strong connectivity and at least two vertices. S_0 holds the BFS
// root (vertex 0); layer_of(v) is the BFS level of v reduced mod h.
LayerDecomposition layer_decomposition(const Digraph &d);

// Independent period oracle: gcd of the lengths of all simple directed cycles,
// by exhaustive DFS enumeration. Refuses graphs with more than max_vertices.
std::size_t cycle_gcd_oracle(const Digraph &d, std::size_t max_vertices = 12);

} // namespace idom
