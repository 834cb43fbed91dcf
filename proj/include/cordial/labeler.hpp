#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cordial/helpful.hpp"
#include "cordial/hypergraph.hpp"
#include "cordial/labeling.hpp"

namespace cordial {

// One primitive labeling action. Assign sets a single vertex's label; Shift
// adds delta (mod k) to every vertex in the set.
struct TraceOp {
    enum class Kind { Assign, Shift };
    Kind kind = Kind::Assign;
    std::vector<int> vertices;
    int value = 0;  // Assign: the label; Shift: the delta
};

// One construction step, recorded in the ids of the hypergraph the labeler
// was called on. Steps appear in construction order, deepest level first.
struct TraceStep {
    int depth = 0;
    std::string note;
    std::vector<int> sprig_edges;      // empty when the step removed no sprig
    std::vector<int> sprig_vertices;
    std::string matrix;                // "M1".."M4", empty without a sprig
    std::string relation;
    std::vector<int> config_vertices;  // pivot set at this level
    std::vector<TraceOp> ops;
};

struct LabelerTrace {
    int k = 0;
    int n = 0;
    std::vector<TraceStep> steps;
    std::vector<int> strong_on;  // top-level pivot; empty when m % k != 0
};

struct LabelerOptions {
    // Replace the two-leaf finishing table with a first-fit scan over all
    // nine label pairs (differential-testing hook).
    bool case3_enumerate = false;
};

// Constructs a k-cordial labeling of the hypertree t, k in {2, 3}, together
// with a replayable record of every step. Throws ValidationError when t is
// not a hypertree or k is unsupported.
std::pair<Labeling, LabelerTrace> label(const Hypergraph& t, int k,
                                        const LabelerOptions& options = {});

// Strong construction for m = 0 (mod k): k = 2 around an even-degree vertex
// u, k = 3 around a helpful configuration. The result is k-cordial and
// strong on the pivot set.
Labeling label_strong(const Hypergraph& t, int k, int u);
Labeling label_strong(const Hypergraph& t, int k, const HelpfulConfiguration& a);

// Folds the trace ops, in order, into a fresh labeling; reproduces the
// labeling the trace was recorded for exactly.
Labeling replay_trace(const LabelerTrace& trace);

std::string format_trace(const LabelerTrace& trace);

}  // namespace cordial
