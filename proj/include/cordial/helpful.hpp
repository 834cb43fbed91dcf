#pragma once

#include <vector>

#include "cordial/hypergraph.hpp"

namespace cordial {

// Pivot set for the strong labeling with k = 3: either a single vertex u
// with d(u) = 0 (mod 3), or a pair of a leaf u1 and a non-adjacent vertex u2
// with d(u2) = 2 (mod 3) whose residual edge set has size 0 (mod 3).
struct HelpfulConfiguration {
    enum class Kind { One, Two };
    Kind kind = Kind::One;
    int u = 0;        // One
    int u1 = 0;       // Two: the leaf
    int u2 = 0;       // Two: the degree = 2 (mod 3) vertex
    std::vector<int> residual_edges;  // P_T(A), empty for One

    std::vector<int> vertices() const {
        if (kind == Kind::One) return {u};
        return {u1, u2};
    }
};

// d(v) = 1 and v's edge is a leaf-edge.
bool is_leaf_vertex(const Hypergraph& t, int v);

// Smallest-id vertex of even degree. Every hypertree with an even number of
// edges has one; absence raises InternalError.
int find_even_degree_vertex(const Hypergraph& t);

// Edges that belong to components of t - u2 not containing u1, ascending.
// {u1, u2} must be a helpful 2-set: u1 a leaf, d(u2) = 2 (mod 3),
// non-adjacent.
std::vector<int> residual_edges(const Hypergraph& t, int u1, int u2);

// First helpful configuration in deterministic order: the smallest-id vertex
// with degree divisible by 3, else the lexicographically smallest (u2, u1)
// pair forming a helpful 2-configuration. Every hypertree with m = 0 (mod 3)
// has one; absence raises InternalError.
HelpfulConfiguration find_helpful_configuration(const Hypergraph& t);

// Re-checks the configuration's defining conditions in t.
bool is_helpful_configuration(const Hypergraph& t, const HelpfulConfiguration& a);

}  // namespace cordial
