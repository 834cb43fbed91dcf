#include "cordial/sprig.hpp"

#include <algorithm>
#include <set>

namespace cordial {

SprigMatrix::SprigMatrix(int order) : k_(order) {
    if (order != 2 && order != 3) throw ValidationError("sprig order must be 2 or 3");
}

void SprigMatrix::set(int i, int j, int value) {
    if (i < 0 || i >= k_ || j < 0 || j >= k_)
        throw ValidationError("matrix index out of range");
    if (value != 0 && value != 1) throw ValidationError("matrix entries are binary");
    cells_[i][j] = value;
}

SprigMatrix standard_matrix(int order, MatrixId id) {
    SprigMatrix m(order);
    for (int i = 0; i < order; ++i) m.set(i, i, 1);
    if (order == 2) {
        switch (id) {
            case MatrixId::M1: return m;
            case MatrixId::M2: m.set(1, 0, 1); return m;
            default: throw ValidationError("order-2 sprigs use M1 or M2");
        }
    }
    switch (id) {
        case MatrixId::M1: return m;
        case MatrixId::M2: m.set(2, 1, 1); return m;
        case MatrixId::M3: m.set(1, 0, 1); m.set(2, 0, 1); return m;
        case MatrixId::M4: m.set(1, 0, 1); m.set(2, 1, 1); return m;
    }
    throw ValidationError("unknown matrix id");
}

std::vector<SprigMatrix> standard_matrices(int order) {
    std::vector<SprigMatrix> all;
    all.push_back(standard_matrix(order, MatrixId::M1));
    all.push_back(standard_matrix(order, MatrixId::M2));
    if (order == 3) {
        all.push_back(standard_matrix(order, MatrixId::M3));
        all.push_back(standard_matrix(order, MatrixId::M4));
    }
    return all;
}

std::string matrix_name(const SprigMatrix& m) {
    const auto all = standard_matrices(m.order());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == m) return "M" + std::to_string(i + 1);
    std::string text = "[";
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) text += std::to_string(m.at(i, j));
        if (i + 1 < m.order()) text += ";";
    }
    return text + "]";
}

std::string relation_name(IncidenceRelation r) {
    switch (r) {
        case IncidenceRelation::Containing: return "containing";
        case IncidenceRelation::FullyIncident: return "fully-incident";
        case IncidenceRelation::NonIncident: return "non-incident";
        case IncidenceRelation::Other: return "other";
    }
    return "?";
}

SprigMatrix adjacency_matrix(const Hypergraph& h, const Sprig& s) {
    const int k = s.order();
    if (k != 2 && k != 3) throw ValidationError("not a sprig: order must be 2 or 3");
    if (static_cast<int>(s.vertices.size()) != k)
        throw ValidationError("not a sprig: needs as many vertices as edges");
    std::set<int> edge_set(s.edges.begin(), s.edges.end());
    if (static_cast<int>(edge_set.size()) != k)
        throw ValidationError("not a sprig: repeated edge");
    std::set<int> vertex_set(s.vertices.begin(), s.vertices.end());
    if (static_cast<int>(vertex_set.size()) != k)
        throw ValidationError("not a sprig: repeated vertex");
    for (int i = 0; i < k; ++i) {
        if (!h.edge_contains(s.edges[i], s.vertices[i]))
            throw ValidationError("not a sprig: vertex " + std::to_string(s.vertices[i]) +
                                  " does not lie in edge " + std::to_string(s.edges[i]));
        for (int e : h.incident_edges(s.vertices[i]))
            if (!edge_set.count(e))
                throw ValidationError("not a sprig: vertex " + std::to_string(s.vertices[i]) +
                                      " is not isolated after removing the sprig edges");
    }
    SprigMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.set(i, j, h.edge_contains(s.edges[i], s.vertices[j]) ? 1 : 0);
    return m;
}

IncidenceRelation classify_relation(const Hypergraph& h, const Sprig& s,
                                    const std::vector<int>& a) {
    std::set<int> a_set(a.begin(), a.end());
    bool all_vertices_in = true;
    bool no_vertex_in = true;
    for (int v : s.vertices) {
        if (a_set.count(v))
            no_vertex_in = false;
        else
            all_vertices_in = false;
    }
    bool every_edge_meets = true;
    bool no_edge_meets = true;
    for (int e : s.edges) {
        bool meets = false;
        for (int v : h.edge(e))
            if (a_set.count(v)) meets = true;
        if (meets)
            no_edge_meets = false;
        else
            every_edge_meets = false;
    }
    if (all_vertices_in) return IncidenceRelation::Containing;
    if (no_vertex_in && every_edge_meets) return IncidenceRelation::FullyIncident;
    if (no_edge_meets) return IncidenceRelation::NonIncident;
    return IncidenceRelation::Other;
}

bool is_pendant(const Hypergraph& t, const Sprig& s) {
    RemovalResult rr = remove(t, {}, s.edges, /*prune_isolated=*/true);
    if (rr.result.edge_count() == 0) return true;
    // After pruning, every remaining vertex has degree >= 1, so every
    // component of the remainder contains an edge: at most one non-trivial
    // component means the remainder is connected.
    return analyze(rr.result).is_connected;
}

namespace {

// Search state for find_pendant_sprig: peel leaf-edges of the shrinking
// hypertree, then try to realize an allowed matrix on the peeled edge set.
class SprigSearch {
public:
    SprigSearch(const Hypergraph& t, const std::vector<int>& a, IncidenceRelation relation,
                const std::vector<SprigMatrix>& allowed,
                const std::optional<std::vector<int>>& restrict_to,
                const SprigFilter& post_filter)
        : t_(t), relation_(relation), allowed_(allowed), post_filter_(post_filter) {
        order_ = allowed.front().order();
        in_a_.assign(t.vertex_count() + 1, 0);
        for (int v : a) in_a_[v] = 1;
        edge_allowed_.assign(t.edge_count() + 1, restrict_to ? 0 : 1);
        if (restrict_to)
            for (int e : *restrict_to) edge_allowed_[e] = 1;
        removed_.assign(t.edge_count() + 1, 0);
        degree_.assign(t.vertex_count() + 1, 0);
        for (int v = 1; v <= t.vertex_count(); ++v) degree_[v] = t.degree(v);
    }

    std::optional<Sprig> run() { return extend({}); }

private:
    bool edge_meets_a(int e) const {
        for (int v : t_.edge(e))
            if (in_a_[v]) return true;
        return false;
    }

    bool peelable(int e) const {
        if (removed_[e] || !edge_allowed_[e]) return false;
        if (relation_ == IncidenceRelation::NonIncident && edge_meets_a(e)) return false;
        if (relation_ == IncidenceRelation::FullyIncident && !edge_meets_a(e)) return false;
        int high_degree = 0;
        for (int v : t_.edge(e))
            if (degree_[v] > 1) ++high_degree;
        return high_degree <= 1;
    }

    std::optional<Sprig> extend(std::vector<int> peeled) {
        if (static_cast<int>(peeled.size()) == order_) return realize(peeled);
        for (int e = 1; e <= t_.edge_count(); ++e) {
            if (!peelable(e)) continue;
            std::vector<int> key = peeled;
            key.push_back(e);
            std::sort(key.begin(), key.end());
            if (!seen_.insert(key).second) continue;
            removed_[e] = 1;
            for (int v : t_.edge(e)) --degree_[v];
            peeled.push_back(e);
            if (auto s = extend(peeled)) return s;
            peeled.pop_back();
            removed_[e] = 0;
            for (int v : t_.edge(e)) ++degree_[v];
        }
        return std::nullopt;
    }

    // Try every allowed matrix and every ordering of the peeled edges.
    std::optional<Sprig> realize(const std::vector<int>& peeled) {
        std::vector<int> ordered = peeled;
        std::sort(ordered.begin(), ordered.end());
        do {
            for (const SprigMatrix& m : allowed_) {
                std::vector<int> vertices;
                if (assign_vertices(m, ordered, 0, vertices)) {
                    Sprig s{ordered, vertices};
                    if (!is_pendant(t_, s))
                        throw InternalError("peeled edge set is not pendant");
                    if (post_filter_ && !post_filter_(s)) continue;
                    return s;
                }
            }
        } while (std::next_permutation(ordered.begin(), ordered.end()));
        return std::nullopt;
    }

    bool assign_vertices(const SprigMatrix& m, const std::vector<int>& edges, int column,
                         std::vector<int>& vertices) {
        if (column == order_) return true;
        for (int v : t_.edge(edges[column])) {
            if (std::find(vertices.begin(), vertices.end(), v) != vertices.end()) continue;
            if (relation_ == IncidenceRelation::FullyIncident && in_a_[v]) continue;
            bool ok = true;
            // All of v's edges must be sprig edges (isolation)...
            for (int e : t_.incident_edges(v))
                if (!removed_[e]) ok = false;
            // ...and membership must match the matrix column exactly.
            for (int i = 0; ok && i < order_; ++i)
                if ((m.at(i, column) == 1) != t_.edge_contains(edges[i], v)) ok = false;
            if (!ok) continue;
            vertices.push_back(v);
            if (assign_vertices(m, edges, column + 1, vertices)) return true;
            vertices.pop_back();
        }
        return false;
    }

    const Hypergraph& t_;
    IncidenceRelation relation_;
    const std::vector<SprigMatrix>& allowed_;
    const SprigFilter& post_filter_;
    int order_ = 0;
    std::vector<char> in_a_;
    std::vector<char> edge_allowed_;
    std::vector<char> removed_;
    std::vector<int> degree_;
    std::set<std::vector<int>> seen_;
};

}  // namespace

Sprig find_pendant_sprig(const Hypergraph& t, const std::vector<int>& a,
                         IncidenceRelation relation, const std::vector<SprigMatrix>& allowed,
                         const std::optional<std::vector<int>>& restrict_to,
                         const SprigFilter& post_filter) {
    if (relation != IncidenceRelation::NonIncident &&
        relation != IncidenceRelation::FullyIncident)
        throw ContractViolation("sprig search supports NonIncident and FullyIncident only");
    if (allowed.empty()) throw ContractViolation("no matrices allowed");
    for (const SprigMatrix& m : allowed) {
        if (m.order() != allowed.front().order())
            throw ContractViolation("allowed matrices must share one order");
        for (int i = 0; i < m.order(); ++i)
            if (m.at(i, i) != 1) throw ContractViolation("sprig matrices have unit diagonals");
    }
    SprigSearch search(t, a, relation, allowed, restrict_to, post_filter);
    if (auto s = search.run()) return *s;
    throw SearchExhausted("no pendant sprig with the requested matrix and relation exists");
}

}  // namespace cordial
