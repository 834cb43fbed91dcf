#include <algorithm>
#include <string>
#include <vector>

#include "cordial/helpful.hpp"
#include "cordial/io.hpp"
#include "cordial/labeler.hpp"
#include "cordial/oracle.hpp"
#include "doctest.h"

using namespace cordial;

namespace {

Hypergraph hyperpath(int edges) {
    std::vector<std::vector<int>> es;
    for (int e = 1; e <= edges; ++e) es.push_back({e, e + 1});
    return Hypergraph(edges + 1, es);
}

}  // namespace

TEST_CASE("label handles the one-edge hypertree for k = 2") {
    Hypergraph t(2, {{1, 2}});
    auto [f, trace] = label(t, 2);
    CHECK(is_k_cordial(t, f));
    CHECK(trace.k == 2);
    CHECK(trace.n == 2);
    CHECK(trace.strong_on.empty());
    CHECK(replay_trace(trace) == f);
}

TEST_CASE("label handles a 3-edge hyperpath for k = 3") {
    Hypergraph t = hyperpath(3);
    OracleResult ground = exists_k_cordial(t, 3);
    CHECK(ground.decision == OracleResult::Decision::WitnessFound);

    auto [f, trace] = label(t, 3);
    CHECK(is_k_cordial(t, f));
    LabelHistogram h = histogram(t, f);
    CHECK(h.edge_counts == std::vector<long long>{1, 1, 1});
    CHECK(*std::max_element(h.vertex_counts.begin(), h.vertex_counts.end()) == 2);
    CHECK(trace.strong_on.size() == 2);
    CHECK(is_strong_on(t, f, trace.strong_on));
    CHECK(replay_trace(trace) == f);
}

TEST_CASE("label is strong on the even-degree pivot of a 2-edge star") {
    Hypergraph t(3, {{1, 2}, {1, 3}});
    auto [f, trace] = label(t, 2);
    CHECK(trace.strong_on == std::vector<int>{1});
    CHECK(is_strong_on(t, f, {1}));
}

TEST_CASE("label peels a 4-edge hyperstar in two fully-incident rounds") {
    Hypergraph t(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    auto [f, trace] = label(t, 2);
    CHECK(is_strong_on(t, f, {1}));
    int sprig_steps = 0;
    for (const TraceStep& step : trace.steps)
        if (!step.sprig_edges.empty()) {
            ++sprig_steps;
            CHECK(step.matrix == "M1");
            CHECK(step.relation == "fully-incident");
            CHECK(step.config_vertices == std::vector<int>{1});
        }
    CHECK(sprig_steps == 2);
    CHECK(trace.steps.back().depth == 0);
    CHECK(replay_trace(trace) == f);
}

TEST_CASE("label_strong builds a strong labeling around a found configuration") {
    Hypergraph t = hyperpath(6);
    HelpfulConfiguration a = find_helpful_configuration(t);
    CHECK(a.kind == HelpfulConfiguration::Kind::Two);
    Labeling f = label_strong(t, 3, a);
    CHECK(is_strong_on(t, f, a.vertices()));
}

TEST_CASE("label_strong base case on an edgeless pair of vertices") {
    Hypergraph t(2, {});
    HelpfulConfiguration a;
    a.kind = HelpfulConfiguration::Kind::One;
    a.u = 2;
    Labeling f = label_strong(t, 3, a);
    CHECK(f.at(2) == 0);
    CHECK(f.at(1) == 1);
    CHECK(is_strong_on(t, f, {2}));

    CHECK_THROWS_AS(label_strong(t, 3, 1), ValidationError);
    CHECK_THROWS_AS(label_strong(t, 2, a), ValidationError);
}

TEST_CASE("label_strong rejects a bad pivot") {
    Hypergraph t = hyperpath(2);
    CHECK_THROWS_AS(label_strong(t, 2, 1), ContractViolation);   // odd degree
    CHECK_THROWS_AS(label_strong(t, 2, 9), ContractViolation);   // no such vertex
    CHECK_THROWS_AS(label_strong(hyperpath(3), 2, 2), ContractViolation);  // odd m
}

TEST_CASE("label validates its inputs") {
    CHECK_THROWS_AS(label(hyperpath(1), 4), ValidationError);
    CHECK_THROWS_AS(label(Hypergraph(4, {{1, 2}, {3, 4}}), 2), ValidationError);
    CHECK_THROWS_AS(label(Hypergraph(2, {{1, 2}, {1, 2}}), 2), ValidationError);
}

TEST_CASE("label of the empty and the edgeless hypertree") {
    auto [f0, t0] = label(Hypergraph(), 3);
    CHECK(f0.size() == 0);

    Hypergraph lone(1, {});
    auto [f1, t1] = label(lone, 3);
    CHECK(is_k_cordial(lone, f1));
    CHECK(t1.strong_on == std::vector<int>{1});
}

TEST_CASE("every residue of m is reached and replayed exactly") {
    for (int edges = 1; edges <= 7; ++edges) {
        Hypergraph t = hyperpath(edges);
        for (int k : {2, 3}) {
            auto [f, trace] = label(t, k);
            CHECK(is_k_cordial(t, f));
            CHECK(replay_trace(trace) == f);
            if (t.edge_count() % k == 0) {
                CHECK_FALSE(trace.strong_on.empty());
                CHECK(is_strong_on(t, f, trace.strong_on));
            } else {
                CHECK(trace.strong_on.empty());
            }
        }
    }
}

TEST_CASE("the two-leaf finish agrees with the enumerating fallback") {
    Rng rng(505);
    int seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        GenParams p;
        p.seed = rng.next_word();
        p.edges = 2 + static_cast<int>(rng.next_below(20));
        p.size_min = 2;
        p.size_max = 4;
        if (p.edges % 3 != 2) continue;
        Hypergraph t = random_hypertree(p);
        ++seen;
        auto [f, trace] = label(t, 3);
        LabelerOptions alt;
        alt.case3_enumerate = true;
        auto [g, trace2] = label(t, 3, alt);
        CHECK(is_k_cordial(t, f));
        CHECK(is_k_cordial(t, g));
    }
    CHECK(seen > 5);
}

TEST_CASE("a cyclically sorted residue always exists in a balanced histogram") {
    for (int base = 0; base <= 2; ++base)
        for (int bits = 0; bits < 8; ++bits) {
            std::vector<long long> counts{base + (bits & 1), base + ((bits >> 1) & 1),
                                          base + ((bits >> 2) & 1)};
            bool found = false;
            for (int a = 0; a < 3 && !found; ++a)
                found = counts[a] <= counts[(a + 1) % 3] &&
                        counts[(a + 1) % 3] <= counts[(a + 2) % 3];
            CHECK(found);
        }
}

TEST_CASE("recursion depth matches the edge count") {
    Hypergraph t = hyperpath(6);
    auto [f, trace] = label(t, 3);
    int sprig_steps = 0;
    for (const TraceStep& step : trace.steps)
        if (!step.sprig_edges.empty()) ++sprig_steps;
    CHECK(sprig_steps == 2);

    std::string text = format_trace(trace);
    CHECK(text.find("strong on") != std::string::npos);
    CHECK(text.find("step 1") != std::string::npos);
}

TEST_CASE("labeler output is deterministic") {
    GenParams p;
    p.seed = 321;
    p.edges = 12;
    p.size_min = 2;
    p.size_max = 3;
    Hypergraph t = random_hypertree(p);
    auto [f1, t1] = label(t, 3);
    auto [f2, t2] = label(t, 3);
    CHECK(f1 == f2);
    CHECK(format_trace(t1) == format_trace(t2));
}

TEST_CASE("labeler agrees with the oracle on a seeded batch") {
    Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        GenParams p;
        p.seed = rng.next_word();
        p.edges = 1 + static_cast<int>(rng.next_below(6));
        p.size_min = 2;
        p.size_max = 3;
        Hypergraph t = random_hypertree(p);
        for (int k : {2, 3}) {
            auto [f, trace] = label(t, k);
            CHECK(is_k_cordial(t, f));
            if (t.vertex_count() <= 10) {
                OracleResult o = exists_k_cordial(t, k);
                CHECK(o.decision == OracleResult::Decision::WitnessFound);
            }
        }
    }
}
