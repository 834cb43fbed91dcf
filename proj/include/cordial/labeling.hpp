#pragma once

#include <vector>

#include "cordial/hypergraph.hpp"

namespace cordial {

// Vertex labeling over Z_k. Labels are residues 0..k-1; `unset` marks a
// vertex not labeled yet (partial labelings appear while a construction is
// in flight).
class Labeling {
public:
    static constexpr int unset = -1;

    Labeling() = default;
    Labeling(int k, int n);
    // Labels listed for vertices 1..n in order.
    static Labeling from_list(int k, const std::vector<int>& labels);

    int modulus() const { return k_; }
    int size() const { return static_cast<int>(labels_.size()) - 1; }
    int at(int v) const;
    void set(int v, int value);
    bool is_set(int v) const { return at(v) != unset; }
    bool complete() const;

    bool operator==(const Labeling& other) const = default;

private:
    int k_ = 2;
    std::vector<int> labels_;  // index 0 unused
};

struct LabelHistogram {
    std::vector<long long> vertex_counts;  // index = residue
    std::vector<long long> edge_counts;
};

// Sum of the member labels of edge e, modulo k.
int induced_edge_label(const Hypergraph& h, const Labeling& f, int e);

LabelHistogram histogram(const Hypergraph& h, const Labeling& f);

// Both balance conditions: vertex counts and induced edge counts each differ
// by at most 1 across residues.
bool is_k_cordial(const Hypergraph& h, const Labeling& f);

// Cordial, the vertices of a carry pairwise distinct labels, and for every
// residue the number of edges meeting a with that induced label is the same.
// a must be pairwise non-adjacent (ContractViolation otherwise).
bool is_strong_on(const Hypergraph& h, const Labeling& f, const std::vector<int>& a);

// g(v) = f(v) + x (mod k) for v in a, unchanged elsewhere.
Labeling add_on_set(const Labeling& f, const std::vector<int>& a, int x);

// Extend a cordial labeling of h_small over extra isolated vertices.
// `isolated` lists the ids, in the enlarged hypergraph, of the added
// vertices (the remaining ids, ascending, correspond to h_small's vertices
// 1..n in order). Each added vertex receives, in list order, the smallest
// residue with minimum current vertex count. `a` (enlarged ids) is the set
// the labeling must stay strong on; empty means plain cordiality.
Labeling extend_to_isolated(const Hypergraph& h_small, const Labeling& f,
                            const std::vector<int>& isolated, const std::vector<int>& a);

// Smallest residue whose count is minimal; the greedy rule shared by
// extend_to_isolated and the labeler's fill steps.
int least_loaded_residue(const std::vector<long long>& counts);

}  // namespace cordial
