#include <vector>

#include "cordial/helpful.hpp"
#include "cordial/hypergraph.hpp"
#include "cordial/io.hpp"
#include "doctest.h"

using namespace cordial;

namespace {

Hypergraph hyperpath3() { return Hypergraph(4, {{1, 2}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("is_leaf_vertex") {
    Hypergraph t = hyperpath3();
    CHECK(is_leaf_vertex(t, 1));
    CHECK(is_leaf_vertex(t, 4));
    CHECK_FALSE(is_leaf_vertex(t, 2));

    // Degree 1, but the host edge has two busy vertices, so it is not a
    // leaf-edge and its members are not leaves.
    Hypergraph y(5, {{1, 2, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(is_leaf_vertex(y, 3));
}

TEST_CASE("find_even_degree_vertex picks the smallest id") {
    CHECK(find_even_degree_vertex(Hypergraph(3, {{1, 2}, {2, 3}})) == 2);
    CHECK(find_even_degree_vertex(Hypergraph(1, {})) == 1);
    CHECK(find_even_degree_vertex(Hypergraph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})) == 1);
}

TEST_CASE("residual_edges on hyperpaths is empty") {
    Hypergraph t = hyperpath3();
    CHECK(residual_edges(t, 4, 2).empty());
    CHECK(residual_edges(t, 1, 3).empty());
}

TEST_CASE("residual_edges drops branches hanging off the far side") {
    // Two edges at vertex 1; the branch through 3 continues away from the
    // leaf 5, so its far edge survives the removal of vertex 1.
    Hypergraph t(7, {{1, 2}, {1, 3}, {2, 4}, {4, 5}, {3, 6}});
    CHECK(residual_edges(t, 5, 1) == std::vector<int>{5});

    // A star whose other branches are single edges at u2: they vanish with
    // u2, leaving nothing.
    Hypergraph star_leg(4, {{1, 2}, {2, 3}, {1, 4}});
    CHECK(residual_edges(star_leg, 3, 1).empty());
}

TEST_CASE("residual_edges rejects invalid helpful 2-sets") {
    Hypergraph t = hyperpath3();
    // u1 = 2 is not a leaf.
    CHECK_THROWS_AS(residual_edges(t, 2, 3), ContractViolation);
    // d(u2) = 1, not 2 mod 3.
    CHECK_THROWS_AS(residual_edges(t, 4, 1), ContractViolation);
    // Adjacent pair.
    CHECK_THROWS_AS(residual_edges(t, 1, 2), ContractViolation);
    // Identical pair.
    CHECK_THROWS_AS(residual_edges(t, 2, 2), ContractViolation);
}

TEST_CASE("find_helpful_configuration prefers a degree-divisible vertex") {
    Hypergraph star3(4, {{1, 2}, {1, 3}, {1, 4}});
    HelpfulConfiguration a = find_helpful_configuration(star3);
    CHECK(a.kind == HelpfulConfiguration::Kind::One);
    CHECK(a.u == 1);
    CHECK(a.residual_edges.empty());
    CHECK(is_helpful_configuration(star3, a));
}

TEST_CASE("find_helpful_configuration falls back to a leaf pair on a hyperpath") {
    HelpfulConfiguration a = find_helpful_configuration(hyperpath3());
    CHECK(a.kind == HelpfulConfiguration::Kind::Two);
    CHECK(a.u1 == 4);
    CHECK(a.u2 == 2);
    CHECK(a.residual_edges.empty());
    CHECK(a.vertices() == std::vector<int>{4, 2});
    CHECK(is_helpful_configuration(hyperpath3(), a));
}

TEST_CASE("find_helpful_configuration on the edgeless one-vertex hypertree") {
    HelpfulConfiguration a = find_helpful_configuration(Hypergraph(1, {}));
    CHECK(a.kind == HelpfulConfiguration::Kind::One);
    CHECK(a.u == 1);
}

TEST_CASE("is_helpful_configuration rejects broken configurations") {
    Hypergraph t = hyperpath3();
    HelpfulConfiguration bad;
    bad.kind = HelpfulConfiguration::Kind::One;
    bad.u = 2;  // degree 2, not divisible by 3
    CHECK_FALSE(is_helpful_configuration(t, bad));

    HelpfulConfiguration pair;
    pair.kind = HelpfulConfiguration::Kind::Two;
    pair.u1 = 1;
    pair.u2 = 2;  // adjacent to u1
    CHECK_FALSE(is_helpful_configuration(t, pair));
}

TEST_CASE("existence on random hypertrees with matching edge residues") {
    Rng rng(2024);
    int even_checked = 0;
    int triple_checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        GenParams p;
        p.seed = rng.next_word();
        p.edges = 1 + static_cast<int>(rng.next_below(30));
        p.size_min = 2;
        p.size_max = 5;
        Hypergraph t = random_hypertree(p);

        if (t.edge_count() % 2 == 0) {
            int u = find_even_degree_vertex(t);
            CHECK(t.degree(u) % 2 == 0);
            ++even_checked;
        }
        if (t.edge_count() % 3 == 0) {
            HelpfulConfiguration a = find_helpful_configuration(t);
            CHECK(is_helpful_configuration(t, a));
            if (a.kind == HelpfulConfiguration::Kind::Two && a.residual_edges.empty()) {
                // With nothing residual, removing the pivot pair leaves at
                // most one piece that still carries an edge.
                RemovalResult rr = remove(t, a.vertices(), {}, true);
                CHECK((rr.result.edge_count() == 0 || analyze(rr.result).is_connected));
            }
            ++triple_checked;
        }
    }
    CHECK(even_checked > 50);
    CHECK(triple_checked > 30);
}
