#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cordial/hypergraph.hpp"

namespace cordial {

// Ordered tuple of k edges and k vertices with v_i in e_i and every edge
// incident with any v_i among the tuple's edges.
struct Sprig {
    std::vector<int> edges;     // e_1..e_k
    std::vector<int> vertices;  // v_1..v_k
    int order() const { return static_cast<int>(edges.size()); }
};

// k x k binary matrix, entry (i,j) = 1 iff v_j is a member of e_i.
class SprigMatrix {
public:
    explicit SprigMatrix(int order);
    int order() const { return k_; }
    int at(int i, int j) const { return cells_[i][j]; }  // 0-based
    void set(int i, int j, int value);
    bool operator==(const SprigMatrix& other) const = default;

private:
    int k_ = 0;
    std::array<std::array<int, 3>, 3> cells_{};
};

// The fixed matrix patterns the constructions use. Order 2 has M1 (identity)
// and M2 (chain); order 3 has M1 (identity), M2 (v2 shared by e2 and e3),
// M3 (v1 shared by all three edges) and M4 (two-link chain).
enum class MatrixId { M1 = 1, M2 = 2, M3 = 3, M4 = 4 };

SprigMatrix standard_matrix(int order, MatrixId id);
std::vector<SprigMatrix> standard_matrices(int order);
std::string matrix_name(const SprigMatrix& m);

enum class IncidenceRelation { Containing, FullyIncident, NonIncident, Other };

std::string relation_name(IncidenceRelation r);

// Validates the sprig axioms and returns M(S). Throws ValidationError if S
// is not a sprig in h.
SprigMatrix adjacency_matrix(const Hypergraph& h, const Sprig& s);

// Containing: every sprig vertex lies in a. FullyIncident: no sprig vertex
// lies in a and every sprig edge meets a. NonIncident: no sprig edge meets
// a. Other: none of the above.
IncidenceRelation classify_relation(const Hypergraph& h, const Sprig& s,
                                    const std::vector<int>& a);

// True iff removing s's edges leaves at most one component that still
// contains an edge. For a valid sprig this matches removing s's vertices,
// since those end up isolated.
bool is_pendant(const Hypergraph& t, const Sprig& s);

// Accept/reject hook evaluated on candidate sprigs before they are returned.
using SprigFilter = std::function<bool(const Sprig&)>;

// Deterministic backtracking search for a pendant sprig whose matrix is one
// of `allowed` (tried in order) and whose relation to `a` is `relation`
// (NonIncident or FullyIncident). Edge tuples are built by peeling
// leaf-edges of the shrinking hypertree in ascending id order; vertices are
// assigned ascending. `restrict_to` confines peels to the given edges.
// Throws SearchExhausted when no candidate survives.
Sprig find_pendant_sprig(const Hypergraph& t, const std::vector<int>& a,
                         IncidenceRelation relation,
                         const std::vector<SprigMatrix>& allowed,
                         const std::optional<std::vector<int>>& restrict_to = std::nullopt,
                         const SprigFilter& post_filter = {});

}  // namespace cordial
