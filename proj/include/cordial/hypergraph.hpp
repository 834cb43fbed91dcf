#pragma once

#include <vector>

#include "cordial/errors.hpp"

namespace cordial {

// Immutable hypergraph. Vertices are dense 1-based ids 1..n, edges are
// 1-based ids 1..m; every edge is a set of at least two distinct vertices.
class Hypergraph {
public:
    Hypergraph() = default;  // trivial hypergraph: no vertices, no edges
    Hypergraph(int vertex_count, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Members of edge e, sorted ascending.
    const std::vector<int>& edge(int e) const;
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    int degree(int v) const;
    // Ids of edges containing v, ascending.
    const std::vector<int>& incident_edges(int v) const;

    bool edge_contains(int e, int v) const;
    // True iff u and v share an edge (u != v).
    bool adjacent(int u, int v) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incident_;  // per vertex, index 0 unused
};

struct StructureReport {
    bool is_connected = false;
    bool has_cycle = false;
    bool is_hypertree = false;
    std::vector<int> isolated_vertices;
};

// Structural analysis of the bipartite incidence graph: connectivity and
// acyclicity over all vertex-side and edge-side nodes. A hypergraph is a
// hypertree iff that graph is a tree (connected and acyclic); the empty
// hypergraph and a single isolated vertex qualify.
StructureReport analyze(const Hypergraph& h);

// Edges containing at most one vertex of degree greater than 1, ascending.
std::vector<int> leaf_edges(const Hypergraph& h);

// Degree-1 vertices of edge e, ascending. For a leaf-edge these are its
// leaves.
std::vector<int> edge_leaves(const Hypergraph& h, int e);

// Result of removing vertices and/or edges, with id translations between the
// original and the compacted value (0 = removed).
struct RemovalResult {
    Hypergraph result;
    std::vector<int> vertex_to_old;    // index 1..n', value = old id
    std::vector<int> edge_to_old;      // index 1..m', value = old id
    std::vector<int> old_vertex_to_new;  // index 1..n, 0 if removed
    std::vector<int> old_edge_to_new;    // index 1..m, 0 if removed
};

// Remove the vertices in w (dragging every edge that meets w), then the
// edges in f. If prune_isolated, vertices left with degree 0 are dropped too.
RemovalResult remove(const Hypergraph& h, const std::vector<int>& w,
                     const std::vector<int>& f, bool prune_isolated);

// m = 1 + sum_v (d(v) - 1), which holds exactly for non-trivial hypertrees.
bool edge_count_identity(const Hypergraph& t);

// Every pair of edges shares at most one vertex (holds in any hypertree).
bool linear(const Hypergraph& h);

}  // namespace cordial
