#include "cordial/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "cordial/errors.hpp"

namespace cordial {

namespace {

bool balanced(const std::vector<long long>& counts) {
    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    return *hi - *lo <= 1;
}

struct Searcher {
    const Hypergraph& h;
    int k;
    unsigned long long budget;  // 0 = unlimited
    bool count_all;

    std::vector<int> order;  // position -> vertex id, high degree first
    std::vector<int> label;
    std::vector<int> edge_remaining;
    std::vector<int> edge_sum;
    std::vector<long long> vcount, ecount;
    long long vcap, ecap;

    long long found = 0;
    unsigned long long nodes = 0;
    bool out_of_budget = false;
    std::optional<Labeling> witness;

    Searcher(const Hypergraph& h_, int k_, unsigned long long budget_, bool count_all_)
        : h(h_), k(k_), budget(budget_), count_all(count_all_) {
        const int n = h.vertex_count();
        const int m = h.edge_count();
        order.resize(n);
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
            return a < b;
        });
        label.assign(n + 1, -1);
        edge_remaining.assign(m + 1, 0);
        edge_sum.assign(m + 1, 0);
        for (int e = 1; e <= m; ++e)
            edge_remaining[e] = static_cast<int>(h.edge(e).size());
        vcount.assign(k, 0);
        ecount.assign(k, 0);
        vcap = (n + k - 1) / k;
        ecap = (m + k - 1) / k;
    }

    // Returns true to stop the whole search (witness found in decision mode).
    bool dfs(int pos) {
        if (pos == h.vertex_count()) {
            if (balanced(vcount) && balanced(ecount)) {
                ++found;
                if (!count_all) {
                    Labeling w(k, h.vertex_count());
                    for (int v = 1; v <= h.vertex_count(); ++v) w.set(v, label[v]);
                    witness = std::move(w);
                    return true;
                }
            }
            return false;
        }
        const int v = order[pos];
        const auto& inc = h.incident_edges(v);
        for (int r = 0; r < k; ++r) {
            if (budget != 0 && nodes >= budget) {
                out_of_budget = true;
                return false;
            }
            ++vcount[r];
            bool ok = vcount[r] <= vcap;
            for (int e : inc) {
                edge_sum[e] = (edge_sum[e] + r) % k;
                if (--edge_remaining[e] == 0) {
                    ++ecount[edge_sum[e]];
                    if (ecount[edge_sum[e]] > ecap) ok = false;
                }
            }
            label[v] = r;
            if (ok) ++nodes;
            if (ok && dfs(pos + 1)) return true;
            label[v] = -1;
            for (int e : inc) {
                if (edge_remaining[e] == 0) --ecount[edge_sum[e]];
                ++edge_remaining[e];
                edge_sum[e] = (edge_sum[e] - r % k + k) % k;
            }
            --vcount[r];
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

OracleResult exists_k_cordial(const Hypergraph& h, int k, unsigned long long budget) {
    if (k < 2) throw ValidationError("modulus must be at least 2");
    Searcher s(h, k, budget, /*count_all=*/false);
    s.dfs(0);
    OracleResult result;
    result.nodes_explored = s.nodes;
    if (s.witness) {
        result.decision = OracleResult::Decision::WitnessFound;
        result.witness = std::move(s.witness);
    } else if (s.out_of_budget) {
        result.decision = OracleResult::Decision::Indeterminate;
    } else {
        result.decision = OracleResult::Decision::ExhaustedUnsat;
    }
    return result;
}

long long count_k_cordial(const Hypergraph& h, int k) {
    if (k < 2) throw ValidationError("modulus must be at least 2");
    if (h.vertex_count() > 16)
        throw ValidationError("counting is limited to hypergraphs with at most 16 vertices");
    Searcher s(h, k, /*budget=*/0, /*count_all=*/true);
    s.dfs(0);
    return s.found;
}

}  // namespace cordial
