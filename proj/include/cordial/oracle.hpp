#pragma once

#include <optional>

#include "cordial/hypergraph.hpp"
#include "cordial/labeling.hpp"

namespace cordial {

// Exhaustive backtracking search for k-cordial labelings, used as an
// independent check of the constructive labeler.
struct OracleResult {
    enum class Decision { WitnessFound, ExhaustedUnsat, Indeterminate };
    Decision decision = Decision::Indeterminate;
    std::optional<Labeling> witness;
    unsigned long long nodes_explored = 0;
};

// Searches for any k-cordial labeling of h. A node is a vertex assignment
// that survives the balance prechecks (so nodes_explored never exceeds the
// k^n assignment space); when the budget is hit before the space is
// exhausted the result is Indeterminate. Budget 0 means unlimited.
OracleResult exists_k_cordial(const Hypergraph& h, int k,
                              unsigned long long budget = 100'000'000ULL);

// Counts all k-cordial labelings of h. Rejects vertex counts above 16,
// where the label space stops being enumerable in reasonable time.
long long count_k_cordial(const Hypergraph& h, int k);

}  // namespace cordial
