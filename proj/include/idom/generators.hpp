#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "idom/digraph.hpp"
#include "idom/structure.hpp"

namespace idom {

// Arcs i -> i+1 mod n. n >= 2 (n = 2 is the antiparallel pair).
Digraph gen_cycle(std::size_t n);
// Arcs i -> i+1. n >= 1.
Digraph gen_path(std::size_t n);
// Outer directed cycle 0..n-1 plus centre n with an arc to every outer vertex. n >= 3.
Digraph gen_wheel(std::size_t n);

// Oriented paw: p = 0, triangle t1 = 1, t2 = 2, t3 = 3.
// Arcs p->t3, t1->t2, t2->t3, t3->t1.
Digraph gen_paw();
inline constexpr Vertex kPawPendant = 0;
inline constexpr Vertex kPawT1 = 1;
inline constexpr Vertex kPawT2 = 2;
inline constexpr Vertex kPawT3 = 3;

enum class DhkVariant { IdsFree, WithIds };
enum class DhkRules { Text, Figure };

std::string_view to_string(DhkVariant v);
std::string_view to_string(DhkRules r);

struct DhkSpec {
    std::size_t h = 5;
    std::size_t k = 3;
    DhkVariant variant = DhkVariant::IdsFree;
    DhkRules rules = DhkRules::Text;
};

/// Layered family with h layers alternating between "label" layers (k
/// vertices named 1..k) and "subset" layers (one vertex per nonempty proper
/// subset of {1..k}).
///
/// Layer pattern: S_0 labels, S_1 and S_2 subsets, then S_3, S_5, ..., S_{h-2}
/// labels and S_4, S_6, ..., S_{h-1} subsets. For h = 3 the pattern is labels,
/// subsets, subsets. Arc rules between consecutive layers:
///
///   S_0 -> S_1        u -> X  iff u in X      (Figure rules, h >= 5: u not in X)
///   S_1 -> S_2        X -> Y  iff X = Y
///   S_2 -> S_3        Y -> v  iff v not in Y  (h = 3: v in Y, and S_3 = S_0)
///   S_j -> S_{j+1}    l -> Z  iff l not in Z  (odd 3 <= j < h-2)
///   S_{j+1} -> S_{j+2} Z -> m iff m not in Z  (same j)
///   S_{h-2} -> S_{h-1} u -> X iff u in X
///   S_{h-1} -> S_0    Y -> v  iff v not in Y
///
/// The with-ids variant negates the membership test of the last
/// labels-to-subsets step (S_{h-2} -> S_{h-1}; for h = 3 that step is S_0 -> S_1).
///
/// Vertex ids are assigned layer by layer. Inside a label layer label i has
/// offset i-1; inside a subset layer subsets are ordered by their bitmask
/// (bit i-1 for label i).
struct DhkGraph {
    DhkSpec spec;
    Digraph graph;
    // The construction's own layering (S_i as built). Always a valid cyclic layering.
    LayerDecomposition layering;
    bool strongly_connected = false;
    std::size_t period = 0;

    // Id of label `label` (1-based) in label layer `layer`.
    Vertex label_vertex(std::size_t layer, std::size_t label) const;
    std::size_t layer_offset(std::size_t layer) const;
};

/// Throws PreconditionError for even h, h < 3 or k < 2, and ConstructionError
/// when the built graph fails its structural checks: the period must be a
/// multiple of h, and for k >= 3 the graph must be strongly connected with
/// period exactly h. With k = 2 the construction can fall apart into disjoint
/// cycles or stretch to period 2h; that shape is reported in the
/// strongly_connected/period fields instead of being rejected, unless the
/// period is not a multiple of h.
DhkGraph gen_dhk(const DhkSpec &spec);

// Vertex (x,u) has id x*|V(h)| + u. Arcs move along one coordinate at a time.
// Throws Error if the product would exceed max_vertices.
Digraph cartesian_product(const Digraph &g, const Digraph &h, std::size_t max_vertices = 1u << 24);
inline Vertex product_vertex(const Digraph &, const Digraph &h, Vertex x, Vertex u) {
    return static_cast<Vertex>(x * h.size() + u);
}

// Both orientations of every undirected edge.
Digraph double_edges(const UndirectedGraph &g);

/// IDS of C_n □ C_n for odd n >= 3: {(v_i, u_{i+2j}) : 0 <= i < n, 0 <= j < floor(n/2)}.
VertexSet cn_box_cn_ids(std::size_t n);
/// Same formula with j running to floor(n/2) inclusive. Not independent for n >= 5.
VertexSet cn_box_cn_inclusive_set(std::size_t n);

Digraph random_digraph(std::size_t n, double arc_prob, std::uint64_t seed);
// Arcs only go forward along a random vertex order.
Digraph random_dag(std::size_t n, double arc_prob, std::uint64_t seed);
// Parts are 0..a-1 and a..a+b-1; each cross pair gets one arc with probability
// arc_prob, orientation uniform.
Digraph random_oriented_bipartite(std::size_t a, std::size_t b, double arc_prob, std::uint64_t seed);
/// h layers of layer_size vertices (vertex id = layer*layer_size + index),
/// a Hamiltonian cycle threading all layers in order, then random arcs between
/// consecutive layers. Resampled until scc_period is exactly h.
Digraph random_layered_strong(std::size_t h, std::size_t layer_size, double arc_prob,
                              std::uint64_t seed);
UndirectedGraph random_undirected(std::size_t n, double edge_prob, std::uint64_t seed);

} // namespace idom
