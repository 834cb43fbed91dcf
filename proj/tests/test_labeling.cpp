#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cordial/hypergraph.hpp"
#include "cordial/labeling.hpp"
#include "doctest.h"

using namespace cordial;

namespace {

Hypergraph path3() { return Hypergraph(3, {{1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("labeling accessors and bounds") {
    Labeling f(3, 2);
    CHECK(f.modulus() == 3);
    CHECK(f.size() == 2);
    CHECK_FALSE(f.is_set(1));
    CHECK_FALSE(f.complete());
    f.set(1, 2);
    f.set(2, 0);
    CHECK(f.complete());
    CHECK(f.at(1) == 2);
    CHECK_THROWS_AS(f.set(1, 3), ValidationError);
    CHECK_THROWS_AS(f.at(0), ValidationError);
    CHECK(Labeling::from_list(2, {0, 1}) == Labeling::from_list(2, {0, 1}));
}

TEST_CASE("induced_edge_label sums member labels mod k") {
    Hypergraph h3(3, {{1, 2, 3}});
    CHECK(induced_edge_label(h3, Labeling::from_list(3, {1, 2, 2}), 1) == 2);

    Hypergraph h2(2, {{1, 2}});
    CHECK(induced_edge_label(h2, Labeling::from_list(3, {0, 0}), 1) == 0);
    CHECK(induced_edge_label(h2, Labeling::from_list(2, {1, 1}), 1) == 0);
    CHECK_THROWS_AS(induced_edge_label(h2, Labeling::from_list(2, {1, 1}), 2),
                    ValidationError);
}

TEST_CASE("histogram counts vertices and induced edges") {
    LabelHistogram h = histogram(path3(), Labeling::from_list(2, {0, 1, 0}));
    CHECK(h.vertex_counts == std::vector<long long>{2, 1});
    CHECK(h.edge_counts == std::vector<long long>{0, 2});

    LabelHistogram iso =
        histogram(Hypergraph(4, {}), Labeling::from_list(2, {0, 1, 0, 1}));
    CHECK(iso.vertex_counts == std::vector<long long>{2, 2});
    CHECK(iso.edge_counts == std::vector<long long>{0, 0});

    LabelHistogram single =
        histogram(Hypergraph(2, {{1, 2}}), Labeling::from_list(2, {0, 1}));
    CHECK(single.vertex_counts == std::vector<long long>{1, 1});
    CHECK(single.edge_counts == std::vector<long long>{0, 1});
}

TEST_CASE("is_k_cordial basics") {
    CHECK(is_k_cordial(Hypergraph(2, {{1, 2}}), Labeling::from_list(2, {0, 1})));
    CHECK(is_k_cordial(Hypergraph(), Labeling(2, 0)));
    CHECK_FALSE(is_k_cordial(path3(), Labeling::from_list(2, {0, 0, 0})));
}

TEST_CASE("two disjoint 2-edges admit no 2-cordial labeling at all") {
    Hypergraph forest(4, {{1, 2}, {3, 4}});
    for (int bits = 0; bits < 16; ++bits) {
        Labeling f = Labeling::from_list(
            2, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1});
        CHECK_FALSE(is_k_cordial(forest, f));
    }
}

TEST_CASE("is_strong_on") {
    CHECK(is_strong_on(Hypergraph(2, {}), Labeling::from_list(2, {0, 1}), {1}));

    Hypergraph star(3, {{1, 2}, {1, 3}});
    CHECK(is_strong_on(star, Labeling::from_list(2, {0, 0, 1}), {1}));
    CHECK_FALSE(is_strong_on(star, Labeling::from_list(2, {0, 0, 0}), {1}));
    CHECK_THROWS_AS(is_strong_on(star, Labeling::from_list(2, {0, 0, 1}), {1, 2}),
                    ContractViolation);
    CHECK_THROWS_AS(is_strong_on(star, Labeling::from_list(2, {0, 0, 1}), {2, 2}),
                    ContractViolation);
}

TEST_CASE("add_on_set shifts exactly the chosen vertices") {
    Labeling f = Labeling::from_list(3, {0, 1, 2});
    CHECK(add_on_set(f, {1, 3}, 1) == Labeling::from_list(3, {1, 1, 0}));
    CHECK(add_on_set(f, {1, 3}, 0) == f);
    CHECK(add_on_set(Labeling::from_list(2, {0, 1}), {1, 2}, 1) ==
          Labeling::from_list(2, {1, 0}));
    CHECK(add_on_set(f, {2}, 5) == Labeling::from_list(3, {0, 0, 2}));
}

TEST_CASE("add_on_set moves edge labels only through the touched vertices") {
    Hypergraph h(5, {{1, 2}, {2, 3}, {4, 5}});
    Labeling f = Labeling::from_list(3, {0, 1, 2, 0, 1});
    Labeling g = add_on_set(f, {2}, 2);
    CHECK(induced_edge_label(h, g, 3) == induced_edge_label(h, f, 3));
    CHECK(induced_edge_label(h, g, 1) == (induced_edge_label(h, f, 1) + 2) % 3);
    CHECK(induced_edge_label(h, g, 2) == (induced_edge_label(h, f, 2) + 2) % 3);
}

TEST_CASE("least_loaded_residue prefers the smallest minimum") {
    CHECK(least_loaded_residue({2, 1, 1}) == 1);
    CHECK(least_loaded_residue({0, 0}) == 0);
    CHECK(least_loaded_residue({3, 2, 0}) == 2);
}

TEST_CASE("extend_to_isolated fills greedily") {
    Hypergraph small(2, {{1, 2}});
    Labeling f = Labeling::from_list(2, {0, 1});
    Labeling g = extend_to_isolated(small, f, {3, 4}, {});
    CHECK(g == Labeling::from_list(2, {0, 1, 0, 1}));

    CHECK(extend_to_isolated(small, f, {}, {}) == f);

    Labeling h = extend_to_isolated(Hypergraph(), Labeling(3, 0), {1, 2, 3, 4}, {});
    CHECK(h == Labeling::from_list(3, {0, 1, 2, 0}));
}

TEST_CASE("extend_to_isolated keeps balance and rejects a broken input") {
    Hypergraph small(3, {{1, 2}, {2, 3}});
    Labeling f = Labeling::from_list(2, {0, 1, 0});
    // Edge labels are (1, 1): not 2-cordial, so the precondition fails.
    CHECK_THROWS_AS(extend_to_isolated(small, f, {4}, {}), ContractViolation);

    Labeling ok = Labeling::from_list(2, {0, 1, 1});
    for (int extra = 0; extra <= 5; ++extra) {
        std::vector<int> isolated(extra);
        std::iota(isolated.begin(), isolated.end(), 4);
        Labeling g = extend_to_isolated(small, ok, isolated, {});
        Hypergraph big(3 + extra, {{1, 2}, {2, 3}});
        LabelHistogram before = histogram(small, ok);
        LabelHistogram after = histogram(big, g);
        CHECK(after.edge_counts == before.edge_counts);
        auto [lo, hi] = std::minmax_element(after.vertex_counts.begin(),
                                            after.vertex_counts.end());
        CHECK(*hi - *lo <= 1);
    }
}

TEST_CASE("extend_to_isolated places small-graph labels at the surviving ids") {
    // Enlarged ids 2 and 4 are the isolated ones; small vertices 1,2,3 land
    // at enlarged 1,3,5.
    Hypergraph small(3, {{1, 2}, {2, 3}});
    Labeling f = Labeling::from_list(2, {0, 1, 1});
    Labeling g = extend_to_isolated(small, f, {2, 4}, {});
    CHECK(g.size() == 5);
    CHECK(g.at(1) == 0);
    CHECK(g.at(3) == 1);
    CHECK(g.at(5) == 1);
}

TEST_CASE("is_k_cordial is invariant under consistent vertex renumbering") {
    Hypergraph h(5, {{1, 2}, {2, 3}, {3, 4, 5}});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> labels(5);
        for (int& x : labels) x = static_cast<int>(rng() % 3);
        Labeling f = Labeling::from_list(3, labels);

        std::vector<int> perm{1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);  // perm[old-1] = new id
        std::vector<std::vector<int>> edges;
        for (const auto& e : h.edges()) {
            std::vector<int> mapped;
            for (int v : e) mapped.push_back(perm[v - 1]);
            edges.push_back(mapped);
        }
        std::vector<int> relabeled(5);
        for (int v = 1; v <= 5; ++v) relabeled[perm[v - 1] - 1] = labels[v - 1];
        CHECK(is_k_cordial(h, f) ==
              is_k_cordial(Hypergraph(5, edges), Labeling::from_list(3, relabeled)));
    }
}
