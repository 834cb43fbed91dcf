#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cordial/hypergraph.hpp"
#include "cordial/labeling.hpp"

namespace cordial {

// Seeded random source: mt19937_64 with bounded draws by masked rejection
// (keep the low bits that cover the bound, retry values past it), so equal
// seeds give equal corpora on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next_word() { return engine_(); }
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

struct GenParams {
    std::uint64_t seed = 0;
    int edges = 1;
    int size_min = 2;
    int size_max = 3;
};

// Builds a hypertree edge by edge: the first edge takes size_min..size_max
// fresh vertices; every later edge picks a uniform existing vertex as its
// anchor plus fresh vertices. Per edge the draws are size first, then
// anchor. Fully determined by the seed.
Hypergraph random_hypertree(const GenParams& p);

// All labeled hypertrees the anchored-attachment grammar reaches with at
// most max_m edges and edge sizes from `sizes` (subset of {2,3}),
// deduplicated by their sorted edge lists. max_m is capped at 5.
std::vector<Hypergraph> enumerate_small_hypertrees(int max_m, const std::vector<int>& sizes);

// ".ht" text format: line 1 "n m", then m lines of space-separated vertex
// ids; "#" starts a comment anywhere on a line; blank lines are skipped.
Hypergraph parse_ht(const std::string& text);
std::string write_ht(const Hypergraph& h);

// Labeling text format: line 1 "k", then n lines "vertex_id residue", then
// m lines "edge_index residue" (induced labels, informational on output and
// cross-checked by the verifier on input).
struct ParsedLabeling {
    Labeling labeling;
    std::vector<int> edge_residues;  // index = edge id, [0] unused
};

ParsedLabeling parse_labeling(const std::string& text, int n, int m);
std::string write_labeling(const Hypergraph& h, const Labeling& f);

// Incidence structure as an undirected DOT graph: circles for vertices,
// boxes for edge nodes, one arc per membership; residues in the captions
// when f is given. Stable output for equal input.
std::string to_dot(const Hypergraph& h, const Labeling* f = nullptr);

}  // namespace cordial
