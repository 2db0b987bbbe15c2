#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idom/vertex_set.hpp"

namespace idom {

using Arc = std::pair<Vertex, Vertex>;

/// Finite simple directed graph on vertices 0..n-1.
///
/// No self-loops and no repeated arcs; antiparallel pairs (u,v),(v,u) are fine.
/// Immutable once built. Adjacency lists are sorted ascending.
class Digraph {
public:
    Digraph() = default;
    // Throws RangeError on out-of-range endpoints and Error on self-loops.
    // Duplicate arcs are collapsed; the number dropped is available from
    // duplicates_collapsed().
    Digraph(std::size_t n, std::span<const Arc> arcs);
    Digraph(std::size_t n, std::initializer_list<Arc> arcs)
        : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    std::size_t size() const { return out_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    // Sorted by (tail, head).
    const std::vector<Arc> &arcs() const { return arcs_; }
    std::span<const Vertex> out(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in(Vertex v) const { return in_[v]; }
    std::size_t out_degree(Vertex v) const { return out_[v].size(); }
    std::size_t in_degree(Vertex v) const { return in_[v].size(); }

    bool has_arc(Vertex u, Vertex v) const;

    std::size_t duplicates_collapsed() const { return duplicates_; }

    // Out-neighbourhood of a set, N+(S), not including S itself.
    VertexSet out_neighbours(const VertexSet &s) const;

    bool operator==(const Digraph &other) const {
        return size() == other.size() && arcs_ == other.arcs_;
    }

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t duplicates_ = 0;
};

/// A graph carved out of a parent graph. old_id[i] is the parent id of vertex i.
struct Subgraph {
    Digraph graph;
    std::vector<Vertex> old_id;

    VertexSet lift(const VertexSet &s, std::size_t parent_size) const;
};

// Induced subgraph on S, relabelled in ascending parent order.
Subgraph induced_subgraph(const Digraph &d, const VertexSet &s);

// Induced subgraph on V \ (S u N+(S)).
Subgraph out_closed_removal(const Digraph &d, const VertexSet &s);

struct IdsReport {
    bool independent = true;
    bool dominating = true;
    std::vector<Arc> independence_violations;
    std::vector<Vertex> domination_violations;

    bool ids() const { return independent && dominating; }
};

struct IndependenceCheck {
    bool independent;
    std::vector<Arc> violations;
};

struct DominationCheck {
    bool dominating;
    std::vector<Vertex> undominated;
};

// No arc has both endpoints in S.
IndependenceCheck is_independent(const Digraph &d, const VertexSet &s);

// Every vertex outside S has an in-neighbour inside S.
DominationCheck is_dominating(const Digraph &d, const VertexSet &s);

IdsReport is_ids(const Digraph &d, const VertexSet &s);

// Arc-list text format: '#' comment lines, a header "n m", then m lines "u v".
struct ParsedDigraph {
    Digraph graph;
    std::size_t duplicate_arcs = 0;
};

ParsedDigraph parse_digraph(std::string_view text);
ParsedDigraph read_digraph_file(const std::string &path);

// Normalised form: header then arcs sorted by (tail, head), each newline-terminated.
std::string format_digraph(const Digraph &d);

/// Simple undirected graph; edges stored as (min, max), sorted, no repeats.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    // Self-loops throw; repeated edges (in either orientation) collapse.
    UndirectedGraph(std::size_t n, std::span<const Arc> edges);

    std::size_t size() const { return n_; }
    const std::vector<Arc> &edges() const { return edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Arc> edges_;
};

// Same text format as parse_digraph; each "u v" line is an undirected edge.
UndirectedGraph parse_undirected(std::string_view text);

} // namespace idom
