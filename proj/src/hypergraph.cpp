#include "cordial/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cordial {

namespace {

// Union-find over 0-based nodes.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if x and y were already joined.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent_[x] = y;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw ValidationError("vertex count must be non-negative");
    for (int e = 1; e <= static_cast<int>(edges_.size()); ++e) {
        auto& members = edges_[e - 1];
        if (members.size() < 2)
            throw ValidationError("edge " + std::to_string(e) + " has fewer than 2 vertices", e);
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] < 1 || members[i] > n_)
                throw ValidationError("edge " + std::to_string(e) + " contains vertex id " +
                                          std::to_string(members[i]) + " out of range 1.." +
                                          std::to_string(n_),
                                      e);
            if (i > 0 && members[i] == members[i - 1])
                throw ValidationError("edge " + std::to_string(e) + " repeats vertex " +
                                          std::to_string(members[i]),
                                      e);
        }
    }
    incident_.assign(n_ + 1, {});
    for (int e = 1; e <= static_cast<int>(edges_.size()); ++e)
        for (int v : edges_[e - 1]) incident_[v].push_back(e);
}

void Hypergraph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw ValidationError("vertex id " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
}

const std::vector<int>& Hypergraph::edge(int e) const {
    if (e < 1 || e > edge_count())
        throw ValidationError("edge id " + std::to_string(e) + " out of range 1.." +
                              std::to_string(edge_count()));
    return edges_[e - 1];
}

int Hypergraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(incident_[v].size());
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
    check_vertex(v);
    return incident_[v];
}

bool Hypergraph::edge_contains(int e, int v) const {
    const auto& members = edge(e);
    return std::binary_search(members.begin(), members.end(), v);
}

bool Hypergraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    for (int e : incident_[u])
        if (edge_contains(e, v)) return true;
    return false;
}

StructureReport analyze(const Hypergraph& h) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    StructureReport report;

    // Incidence-graph nodes: vertices map to 0..n-1, edges to n..n+m-1.
    DisjointSets sets(n + m);
    int components = n + m;
    bool cycle = false;
    for (int e = 1; e <= m; ++e) {
        for (int v : h.edge(e)) {
            if (sets.unite(v - 1, n + e - 1))
                --components;
            else
                cycle = true;
        }
    }
    report.has_cycle = cycle;
    report.is_connected = components <= 1;
    report.is_hypertree = report.is_connected && !report.has_cycle;
    for (int v = 1; v <= n; ++v)
        if (h.degree(v) == 0) report.isolated_vertices.push_back(v);
    return report;
}

std::vector<int> leaf_edges(const Hypergraph& h) {
    std::vector<int> result;
    for (int e = 1; e <= h.edge_count(); ++e) {
        int high_degree = 0;
        for (int v : h.edge(e))
            if (h.degree(v) > 1) ++high_degree;
        if (high_degree <= 1) result.push_back(e);
    }
    return result;
}

std::vector<int> edge_leaves(const Hypergraph& h, int e) {
    std::vector<int> result;
    for (int v : h.edge(e))
        if (h.degree(v) == 1) result.push_back(v);
    return result;
}

RemovalResult remove(const Hypergraph& h, const std::vector<int>& w,
                     const std::vector<int>& f, bool prune_isolated) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    std::vector<char> vertex_removed(n + 1, 0);
    std::vector<char> edge_removed(m + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n)
            throw ValidationError("vertex id " + std::to_string(v) + " out of range");
        vertex_removed[v] = 1;
        for (int e : h.incident_edges(v)) edge_removed[e] = 1;
    }
    for (int e : f) {
        if (e < 1 || e > m)
            throw ValidationError("edge id " + std::to_string(e) + " out of range");
        edge_removed[e] = 1;
    }
    if (prune_isolated) {
        std::vector<int> live_degree(n + 1, 0);
        for (int e = 1; e <= m; ++e)
            if (!edge_removed[e])
                for (int v : h.edge(e)) ++live_degree[v];
        for (int v = 1; v <= n; ++v)
            if (live_degree[v] == 0) vertex_removed[v] = 1;
    }

    RemovalResult rr;
    rr.old_vertex_to_new.assign(n + 1, 0);
    rr.old_edge_to_new.assign(m + 1, 0);
    rr.vertex_to_old.assign(1, 0);
    rr.edge_to_old.assign(1, 0);
    for (int v = 1; v <= n; ++v) {
        if (vertex_removed[v]) continue;
        rr.vertex_to_old.push_back(v);
        rr.old_vertex_to_new[v] = static_cast<int>(rr.vertex_to_old.size()) - 1;
    }
    std::vector<std::vector<int>> new_edges;
    for (int e = 1; e <= m; ++e) {
        if (edge_removed[e]) continue;
        std::vector<int> members;
        for (int v : h.edge(e)) members.push_back(rr.old_vertex_to_new[v]);
        new_edges.push_back(std::move(members));
        rr.edge_to_old.push_back(e);
        rr.old_edge_to_new[e] = static_cast<int>(rr.edge_to_old.size()) - 1;
    }
    rr.result = Hypergraph(static_cast<int>(rr.vertex_to_old.size()) - 1, std::move(new_edges));
    return rr;
}

bool edge_count_identity(const Hypergraph& t) {
    long long sum = 0;
    for (int v = 1; v <= t.vertex_count(); ++v) sum += t.degree(v) - 1;
    return t.edge_count() == 1 + sum;
}

bool linear(const Hypergraph& h) {
    for (int e = 1; e <= h.edge_count(); ++e) {
        for (int g = e + 1; g <= h.edge_count(); ++g) {
            const auto& a = h.edge(e);
            const auto& b = h.edge(g);
            int common = 0;
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j])
                    ++i;
                else if (a[i] > b[j])
                    ++j;
                else {
                    ++common;
                    ++i;
                    ++j;
                }
            }
            if (common > 1) return false;
        }
    }
    return true;
}

}  // namespace cordial
