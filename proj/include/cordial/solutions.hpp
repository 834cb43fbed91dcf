#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cordial/helpful.hpp"
#include "cordial/labeling.hpp"
#include "cordial/sprig.hpp"

namespace cordial {

// Length-3 residue vector over Z_3.
using ResidueVector = std::array<int, 3>;

// P: all three coordinates distinct. D: exactly two distinct values.
// Neither: constant.
enum class VectorClass { P, D, Neither };

VectorClass classify_vector(const ResidueVector& x);

// All vectors of the given class, lexicographically ascending.
const std::vector<ResidueVector>& class_p();
const std::vector<ResidueVector>& class_d();

// y + Mx over Z_3 for an order-3 matrix.
ResidueVector apply(const SprigMatrix& m, const ResidueVector& y, const ResidueVector& x);

// Lexicographically smallest x in P with y + Mx in P, if any.
std::optional<ResidueVector> find_simple_solution(const SprigMatrix& m,
                                                  const ResidueVector& y);

enum class ComposedKind { One = 1, Two = 2, Full = 3 };

// Three vectors from D, each with y + Mx in P, covering an extra condition:
// kind One - for every residue a some member has two coordinates equal to a;
// kind Two - for every residue a some member avoids a entirely;
// kind Full - both.
struct ComposedSolution {
    std::array<ResidueVector, 3> members;  // lexicographically ascending
    ComposedKind kind = ComposedKind::One;
};

// First 3-subset of D (in lexicographic order) meeting conditions for the
// requested kind (1 or 2). The returned kind is upgraded to Full when the
// found set happens to satisfy both coverage conditions.
std::optional<ComposedSolution> find_composed_solution(const SprigMatrix& m,
                                                       const ResidueVector& y, int kind);

// First 3-subset of D meeting both coverage conditions.
std::optional<ComposedSolution> find_full_composed_solution(const SprigMatrix& m,
                                                            const ResidueVector& y);

// Residual sums per sprig edge: y_j = sum of f over e_j minus the sprig
// vertices, modulo k. Every residual member must be labeled.
struct SprigContext {
    std::vector<int> residual_sums;
};

SprigContext sprig_context(const Hypergraph& h, const Labeling& f, const Sprig& s);

// What an extension step did, for tracing.
struct SprigExtension {
    Labeling result;
    std::vector<int> shifted;            // vertices relabeled by +delta
    int delta = 0;                       // 0 when no relabeling happened
    std::vector<int> assigned_values;    // value given to v_1..v_k
    bool used_composed = false;
};

// Label the vertices of an order-2 sprig, given a 2-cordial labeling of
// h - S strong on {u} (sprig vertices unset in f). d(u) must be even; the
// sprig must be an M1-sprig non- or fully-incident with {u}, or an M2-sprig
// non-incident with {u}. The result is 2-cordial strong on {u}.
SprigExtension extend_sprig_k2(const Hypergraph& h, const Labeling& f, const Sprig& s,
                               int u);

// Label the vertices of an order-3 sprig, given a 3-cordial labeling of
// h - S (strong on A unless the sprig's vertex set contains A, the
// "containing" arrangement). Accepts M1..M4 non-incident with A, M1
// fully-incident, or M2 with A among the sprig vertices. The result is
// 3-cordial strong on A's vertices.
SprigExtension extend_sprig_k3(const Hypergraph& h, const Labeling& f, const Sprig& s,
                               const HelpfulConfiguration& a);

}  // namespace cordial
