#include "cordial/labeling.hpp"

#include <algorithm>
#include <string>

namespace cordial {

Labeling::Labeling(int k, int n) : k_(k), labels_(n + 1, unset) {
    if (k < 2) throw ValidationError("modulus must be at least 2");
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    labels_[0] = 0;
}

Labeling Labeling::from_list(int k, const std::vector<int>& labels) {
    Labeling f(k, static_cast<int>(labels.size()));
    for (int v = 1; v <= f.size(); ++v) f.set(v, labels[v - 1]);
    return f;
}

int Labeling::at(int v) const {
    if (v < 1 || v > size())
        throw ValidationError("vertex id " + std::to_string(v) + " out of range 1.." +
                              std::to_string(size()));
    return labels_[v];
}

void Labeling::set(int v, int value) {
    if (v < 1 || v > size())
        throw ValidationError("vertex id " + std::to_string(v) + " out of range 1.." +
                              std::to_string(size()));
    if (value != unset && (value < 0 || value >= k_))
        throw ValidationError("label " + std::to_string(value) + " out of range 0.." +
                              std::to_string(k_ - 1));
    labels_[v] = value;
}

bool Labeling::complete() const {
    for (int v = 1; v <= size(); ++v)
        if (labels_[v] == unset) return false;
    return true;
}

namespace {

void require_complete_on(const Hypergraph& h, const Labeling& f) {
    if (f.size() != h.vertex_count())
        throw ContractViolation("labeling covers " + std::to_string(f.size()) +
                                " vertices, hypergraph has " +
                                std::to_string(h.vertex_count()));
    for (int v = 1; v <= h.vertex_count(); ++v)
        if (!f.is_set(v))
            throw ContractViolation("vertex " + std::to_string(v) + " is unlabeled");
}

bool balanced(const std::vector<long long>& counts) {
    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    return *hi - *lo <= 1;
}

}  // namespace

int induced_edge_label(const Hypergraph& h, const Labeling& f, int e) {
    int sum = 0;
    for (int v : h.edge(e)) {
        if (!f.is_set(v))
            throw ContractViolation("vertex " + std::to_string(v) + " is unlabeled");
        sum = (sum + f.at(v)) % f.modulus();
    }
    return sum;
}

LabelHistogram histogram(const Hypergraph& h, const Labeling& f) {
    require_complete_on(h, f);
    LabelHistogram hist;
    hist.vertex_counts.assign(f.modulus(), 0);
    hist.edge_counts.assign(f.modulus(), 0);
    for (int v = 1; v <= h.vertex_count(); ++v) ++hist.vertex_counts[f.at(v)];
    for (int e = 1; e <= h.edge_count(); ++e) ++hist.edge_counts[induced_edge_label(h, f, e)];
    return hist;
}

bool is_k_cordial(const Hypergraph& h, const Labeling& f) {
    LabelHistogram hist = histogram(h, f);
    return balanced(hist.vertex_counts) && balanced(hist.edge_counts);
}

bool is_strong_on(const Hypergraph& h, const Labeling& f, const std::vector<int>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] == a[j])
                throw ContractViolation("set contains vertex " + std::to_string(a[i]) +
                                        " twice");
            if (h.adjacent(a[i], a[j]))
                throw ContractViolation("vertices " + std::to_string(a[i]) + " and " +
                                        std::to_string(a[j]) + " are adjacent");
        }
    if (!is_k_cordial(h, f)) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (f.at(a[i]) == f.at(a[j])) return false;
    std::vector<long long> meeting(f.modulus(), 0);
    for (int e = 1; e <= h.edge_count(); ++e) {
        bool meets = false;
        for (int v : a)
            if (h.edge_contains(e, v)) meets = true;
        if (meets) ++meeting[induced_edge_label(h, f, e)];
    }
    return std::all_of(meeting.begin(), meeting.end(),
                       [&](long long c) { return c == meeting[0]; });
}

Labeling add_on_set(const Labeling& f, const std::vector<int>& a, int x) {
    Labeling g = f;
    const int k = f.modulus();
    const int shift = ((x % k) + k) % k;
    for (int v : a) {
        if (!f.is_set(v))
            throw ContractViolation("vertex " + std::to_string(v) + " is unlabeled");
        g.set(v, (f.at(v) + shift) % k);
    }
    return g;
}

int least_loaded_residue(const std::vector<long long>& counts) {
    int best = 0;
    for (int r = 1; r < static_cast<int>(counts.size()); ++r)
        if (counts[r] < counts[best]) best = r;
    return best;
}

Labeling extend_to_isolated(const Hypergraph& h_small, const Labeling& f,
                            const std::vector<int>& isolated, const std::vector<int>& a) {
    const int n_small = h_small.vertex_count();
    const int n_big = n_small + static_cast<int>(isolated.size());
    std::vector<char> is_new(n_big + 1, 0);
    for (int v : isolated) {
        if (v < 1 || v > n_big)
            throw ContractViolation("isolated vertex id " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n_big));
        if (is_new[v])
            throw ContractViolation("isolated vertex id " + std::to_string(v) + " repeated");
        is_new[v] = 1;
    }

    // Place h_small's vertex j at the j-th enlarged id not claimed by an
    // isolated vertex.
    std::vector<int> small_to_big;
    small_to_big.push_back(0);
    for (int v = 1; v <= n_big; ++v)
        if (!is_new[v]) small_to_big.push_back(v);

    std::vector<int> big_to_small(n_big + 1, 0);
    for (int j = 1; j <= n_small; ++j) big_to_small[small_to_big[j]] = j;

    if (!is_k_cordial(h_small, f))
        throw ContractViolation("labeling is not cordial before extension");
    std::vector<int> a_small;
    for (int v : a)
        if (big_to_small[v] != 0) a_small.push_back(big_to_small[v]);
    if (!a.empty() && !is_strong_on(h_small, f, a_small))
        throw ContractViolation("labeling is not strong on the given set before extension");

    Labeling g(f.modulus(), n_big);
    for (int j = 1; j <= n_small; ++j) g.set(small_to_big[j], f.at(j));
    std::vector<long long> counts = histogram(h_small, f).vertex_counts;
    for (int v : isolated) {
        int r = least_loaded_residue(counts);
        g.set(v, r);
        ++counts[r];
    }

    std::vector<std::vector<int>> big_edges;
    for (int e = 1; e <= h_small.edge_count(); ++e) {
        std::vector<int> members;
        for (int v : h_small.edge(e)) members.push_back(small_to_big[v]);
        big_edges.push_back(std::move(members));
    }
    Hypergraph h_big(n_big, std::move(big_edges));
    if (!is_strong_on(h_big, g, a))
        throw ContractViolation("extension failed to stay strong on the given set");
    return g;
}

}  // namespace cordial
