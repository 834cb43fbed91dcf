#include "cordial/helpful.hpp"

#include <numeric>
#include <string>

namespace cordial {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int x, int y) { parent_[find(x)] = find(y); }

private:
    std::vector<int> parent_;
};

void require_helpful_2_set(const Hypergraph& t, int u1, int u2) {
    if (u1 == u2) throw ContractViolation("the two pivot vertices must differ");
    if (!is_leaf_vertex(t, u1))
        throw ContractViolation("vertex " + std::to_string(u1) + " is not a leaf");
    if (t.degree(u2) % 3 != 2)
        throw ContractViolation("vertex " + std::to_string(u2) +
                                " does not have degree = 2 (mod 3)");
    if (t.adjacent(u1, u2))
        throw ContractViolation("pivot vertices " + std::to_string(u1) + " and " +
                                std::to_string(u2) + " are adjacent");
}

}  // namespace

bool is_leaf_vertex(const Hypergraph& t, int v) {
    if (t.degree(v) != 1) return false;
    int e = t.incident_edges(v)[0];
    int high_degree = 0;
    for (int w : t.edge(e))
        if (t.degree(w) > 1) ++high_degree;
    return high_degree <= 1;
}

int find_even_degree_vertex(const Hypergraph& t) {
    for (int v = 1; v <= t.vertex_count(); ++v)
        if (t.degree(v) % 2 == 0) return v;
    throw InternalError("hypertree with an even edge count has no even-degree vertex");
}

std::vector<int> residual_edges(const Hypergraph& t, int u1, int u2) {
    require_helpful_2_set(t, u1, u2);
    // Components of t - u2: join vertices within every edge avoiding u2.
    DisjointSets sets(t.vertex_count());
    for (int e = 1; e <= t.edge_count(); ++e) {
        if (t.edge_contains(e, u2)) continue;
        const auto& members = t.edge(e);
        for (std::size_t i = 1; i < members.size(); ++i) sets.unite(members[0], members[i]);
    }
    const int u1_root = sets.find(u1);
    std::vector<int> result;
    for (int e = 1; e <= t.edge_count(); ++e) {
        if (t.edge_contains(e, u2)) continue;
        if (sets.find(t.edge(e)[0]) != u1_root) result.push_back(e);
    }
    return result;
}

HelpfulConfiguration find_helpful_configuration(const Hypergraph& t) {
    for (int v = 1; v <= t.vertex_count(); ++v) {
        if (t.degree(v) % 3 == 0) {
            HelpfulConfiguration a;
            a.kind = HelpfulConfiguration::Kind::One;
            a.u = v;
            return a;
        }
    }
    for (int u2 = 1; u2 <= t.vertex_count(); ++u2) {
        if (t.degree(u2) % 3 != 2) continue;
        for (int u1 = 1; u1 <= t.vertex_count(); ++u1) {
            if (u1 == u2 || !is_leaf_vertex(t, u1) || t.adjacent(u1, u2)) continue;
            std::vector<int> p = residual_edges(t, u1, u2);
            if (p.size() % 3 != 0) continue;
            HelpfulConfiguration a;
            a.kind = HelpfulConfiguration::Kind::Two;
            a.u1 = u1;
            a.u2 = u2;
            a.residual_edges = std::move(p);
            return a;
        }
    }
    throw InternalError("hypertree with m = 0 (mod 3) has no helpful configuration");
}

bool is_helpful_configuration(const Hypergraph& t, const HelpfulConfiguration& a) {
    if (a.kind == HelpfulConfiguration::Kind::One)
        return a.u >= 1 && a.u <= t.vertex_count() && t.degree(a.u) % 3 == 0;
    if (a.u1 < 1 || a.u1 > t.vertex_count() || a.u2 < 1 || a.u2 > t.vertex_count())
        return false;
    if (a.u1 == a.u2 || !is_leaf_vertex(t, a.u1) || t.degree(a.u2) % 3 != 2 ||
        t.adjacent(a.u1, a.u2))
        return false;
    return residual_edges(t, a.u1, a.u2).size() % 3 == 0;
}

}  // namespace cordial
