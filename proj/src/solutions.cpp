#include "cordial/solutions.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cordial {

namespace {

std::vector<ResidueVector> vectors_of_class(VectorClass c) {
    std::vector<ResidueVector> result;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int d = 0; d < 3; ++d) {
                ResidueVector x{a, b, d};
                if (classify_vector(x) == c) result.push_back(x);
            }
    return result;
}

bool two_coordinates_equal(const ResidueVector& x, int a) {
    return std::count(x.begin(), x.end(), a) == 2;
}

bool avoids(const ResidueVector& x, int a) {
    return std::count(x.begin(), x.end(), a) == 0;
}

bool covers_doubles(const std::array<ResidueVector, 3>& xs) {
    for (int a = 0; a < 3; ++a) {
        bool found = false;
        for (const auto& x : xs)
            if (two_coordinates_equal(x, a)) found = true;
        if (!found) return false;
    }
    return true;
}

bool covers_missing(const std::array<ResidueVector, 3>& xs) {
    for (int a = 0; a < 3; ++a) {
        bool found = false;
        for (const auto& x : xs)
            if (avoids(x, a)) found = true;
        if (!found) return false;
    }
    return true;
}

std::optional<ComposedSolution> composed_search(const SprigMatrix& m, const ResidueVector& y,
                                                bool need_doubles, bool need_missing) {
    // Members must come from D and give y + Mx in P; restricting the pool
    // first preserves the lexicographic order of candidate triples.
    std::vector<ResidueVector> pool;
    for (const ResidueVector& x : class_d())
        if (classify_vector(apply(m, y, x)) == VectorClass::P) pool.push_back(x);
    const int p = static_cast<int>(pool.size());
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            for (int l = j + 1; l < p; ++l) {
                std::array<ResidueVector, 3> xs{pool[i], pool[j], pool[l]};
                if (need_doubles && !covers_doubles(xs)) continue;
                if (need_missing && !covers_missing(xs)) continue;
                ComposedSolution sol;
                sol.members = xs;
                const bool full = covers_doubles(xs) && covers_missing(xs);
                sol.kind = full          ? ComposedKind::Full
                           : need_doubles ? ComposedKind::One
                                          : ComposedKind::Two;
                return sol;
            }
    return std::nullopt;
}

}  // namespace

VectorClass classify_vector(const ResidueVector& x) {
    std::set<int> distinct(x.begin(), x.end());
    if (distinct.size() == 3) return VectorClass::P;
    if (distinct.size() == 2) return VectorClass::D;
    return VectorClass::Neither;
}

const std::vector<ResidueVector>& class_p() {
    static const std::vector<ResidueVector> p = vectors_of_class(VectorClass::P);
    return p;
}

const std::vector<ResidueVector>& class_d() {
    static const std::vector<ResidueVector> d = vectors_of_class(VectorClass::D);
    return d;
}

ResidueVector apply(const SprigMatrix& m, const ResidueVector& y, const ResidueVector& x) {
    if (m.order() != 3) throw ContractViolation("solution algebra is over order-3 matrices");
    ResidueVector z{};
    for (int i = 0; i < 3; ++i) {
        int sum = y[i];
        for (int j = 0; j < 3; ++j) sum += m.at(i, j) * x[j];
        z[i] = sum % 3;
    }
    return z;
}

std::optional<ResidueVector> find_simple_solution(const SprigMatrix& m,
                                                  const ResidueVector& y) {
    for (const ResidueVector& x : class_p())
        if (classify_vector(apply(m, y, x)) == VectorClass::P) return x;
    return std::nullopt;
}

std::optional<ComposedSolution> find_composed_solution(const SprigMatrix& m,
                                                       const ResidueVector& y, int kind) {
    if (kind != 1 && kind != 2) throw ContractViolation("composed kind must be 1 or 2");
    return composed_search(m, y, kind == 1, kind == 2);
}

std::optional<ComposedSolution> find_full_composed_solution(const SprigMatrix& m,
                                                            const ResidueVector& y) {
    return composed_search(m, y, true, true);
}

SprigContext sprig_context(const Hypergraph& h, const Labeling& f, const Sprig& s) {
    const int k = f.modulus();
    std::set<int> sprig_vertices(s.vertices.begin(), s.vertices.end());
    SprigContext ctx;
    for (int e : s.edges) {
        int sum = 0;
        for (int v : h.edge(e)) {
            if (sprig_vertices.count(v)) continue;
            if (!f.is_set(v))
                throw ContractViolation("residual vertex " + std::to_string(v) +
                                        " of edge " + std::to_string(e) + " is unlabeled");
            sum = (sum + f.at(v)) % k;
        }
        ctx.residual_sums.push_back(sum);
    }
    return ctx;
}

namespace {

// Checks that f (sprig vertices unset) is cordial on h - S, and strong on
// the translated pivot set when requested.
void check_reduced_labeling(const Hypergraph& h, const Labeling& f, const Sprig& s,
                            const std::vector<int>& pivot, bool need_strong) {
    RemovalResult rr = remove(h, s.vertices, {}, /*prune_isolated=*/false);
    Labeling reduced(f.modulus(), rr.result.vertex_count());
    for (int v = 1; v <= rr.result.vertex_count(); ++v) {
        int old_id = rr.vertex_to_old[v];
        if (!f.is_set(old_id))
            throw ContractViolation("vertex " + std::to_string(old_id) +
                                    " outside the sprig is unlabeled");
        reduced.set(v, f.at(old_id));
    }
    if (!is_k_cordial(rr.result, reduced))
        throw ContractViolation("labeling of the sprig-free part is not cordial");
    if (need_strong) {
        std::vector<int> translated;
        for (int v : pivot) translated.push_back(rr.old_vertex_to_new[v]);
        if (!is_strong_on(rr.result, reduced, translated))
            throw ContractViolation("labeling of the sprig-free part is not strong");
    }
}

}  // namespace

SprigExtension extend_sprig_k2(const Hypergraph& h, const Labeling& f, const Sprig& s,
                               int u) {
    if (f.modulus() != 2) throw ContractViolation("order-2 extension needs modulus 2");
    const SprigMatrix m = adjacency_matrix(h, s);
    if (m.order() != 2) throw ContractViolation("order-2 extension needs an order-2 sprig");
    const IncidenceRelation rel = classify_relation(h, s, {u});
    const bool m1 = m == standard_matrix(2, MatrixId::M1);
    const bool m2 = m == standard_matrix(2, MatrixId::M2);
    if (m1) {
        if (rel != IncidenceRelation::NonIncident && rel != IncidenceRelation::FullyIncident)
            throw ContractViolation("M1 extension needs a non- or fully-incident sprig");
    } else if (m2) {
        if (rel != IncidenceRelation::NonIncident)
            throw ContractViolation("M2 extension needs a non-incident sprig");
    } else {
        throw ContractViolation("order-2 extension handles M1 and M2 sprigs");
    }
    if (h.degree(u) % 2 != 0)
        throw ContractViolation("pivot vertex must have even degree");
    check_reduced_labeling(h, f, s, {u}, /*need_strong=*/true);

    const SprigContext ctx = sprig_context(h, f, s);
    const int y1 = ctx.residual_sums[0];
    const int y2 = ctx.residual_sums[1];
    SprigExtension ext;
    ext.result = f;
    if (m1 && y1 != y2) {
        const int a = f.at(u);
        ext.result = add_on_set(f, {u}, 1);
        ext.shifted = {u};
        ext.delta = 1;
        ext.assigned_values = {a, a};
    } else if (y1 == y2) {
        // Same row for M1 and M2: labels 0 and 1 give distinct edge labels.
        ext.assigned_values = {0, 1};
    } else {
        // M2 with y2 = y1 + 1.
        ext.assigned_values = {1, 0};
    }
    ext.result.set(s.vertices[0], ext.assigned_values[0]);
    ext.result.set(s.vertices[1], ext.assigned_values[1]);
    if (!is_strong_on(h, ext.result, {u}))
        throw InternalError("order-2 sprig extension lost cordiality or strongness");
    return ext;
}

SprigExtension extend_sprig_k3(const Hypergraph& h, const Labeling& f, const Sprig& s,
                               const HelpfulConfiguration& a) {
    if (f.modulus() != 3) throw ContractViolation("order-3 extension needs modulus 3");
    const SprigMatrix m = adjacency_matrix(h, s);
    if (m.order() != 3) throw ContractViolation("order-3 extension needs an order-3 sprig");
    const std::vector<int> pivot = a.vertices();
    const IncidenceRelation rel = classify_relation(h, s, pivot);

    std::set<int> sprig_vertices(s.vertices.begin(), s.vertices.end());
    const bool pivot_inside =
        std::all_of(pivot.begin(), pivot.end(),
                    [&](int v) { return sprig_vertices.count(v) > 0; });
    bool every_edge_meets_pivot = true;
    for (int e : s.edges) {
        bool meets = false;
        for (int v : pivot)
            if (h.edge_contains(e, v)) meets = true;
        if (!meets) every_edge_meets_pivot = false;
    }
    const bool containing_mode = pivot_inside && every_edge_meets_pivot;

    const auto standard = standard_matrices(3);
    if (rel == IncidenceRelation::NonIncident) {
        if (std::find(standard.begin(), standard.end(), m) == standard.end())
            throw ContractViolation("non-incident extension handles M1..M4 sprigs");
    } else if (rel == IncidenceRelation::FullyIncident) {
        if (!(m == standard_matrix(3, MatrixId::M1)))
            throw ContractViolation("fully-incident extension handles M1 sprigs");
    } else if (containing_mode) {
        if (!(m == standard_matrix(3, MatrixId::M2)))
            throw ContractViolation("containing extension handles M2 sprigs");
    } else {
        throw ContractViolation("sprig relation unsupported by the extension");
    }
    check_reduced_labeling(h, f, s, pivot, /*need_strong=*/!containing_mode);

    const SprigContext ctx = sprig_context(h, f, s);
    const ResidueVector y{ctx.residual_sums[0], ctx.residual_sums[1], ctx.residual_sums[2]};

    SprigExtension ext;
    ext.result = f;
    ResidueVector x{};
    if (auto simple = find_simple_solution(m, y)) {
        x = *simple;
    } else if (containing_mode) {
        throw InternalError("no simple solution for a containing M2-sprig");
    } else if (a.kind == HelpfulConfiguration::Kind::One) {
        auto sol = find_full_composed_solution(m, y);
        if (!sol) sol = find_composed_solution(m, y, 1);
        if (!sol) throw InternalError("no 1-composed solution exists");
        const int a_val = f.at(a.u);
        const ResidueVector* pick = nullptr;
        for (const ResidueVector& cand : sol->members)
            if (two_coordinates_equal(cand, a_val)) {
                pick = &cand;
                break;
            }
        if (!pick) throw InternalError("1-composed solution misses a doubled value");
        x = *pick;
        int b = 0;
        for (int r = 0; r < 3; ++r)
            if (avoids(x, r)) b = r;
        ext.delta = ((b - a_val) % 3 + 3) % 3;
        ext.shifted = {a.u};
        ext.used_composed = true;
        ext.result = add_on_set(f, ext.shifted, ext.delta);
    } else {
        auto sol = find_full_composed_solution(m, y);
        if (!sol) sol = find_composed_solution(m, y, 2);
        if (!sol) throw InternalError("no 2-composed solution exists");
        int missing = 0;
        for (int r = 0; r < 3; ++r)
            if (r != f.at(a.u1) && r != f.at(a.u2)) missing = r;
        const ResidueVector* pick = nullptr;
        for (const ResidueVector& cand : sol->members)
            if (avoids(cand, missing)) {
                pick = &cand;
                break;
            }
        if (!pick) throw InternalError("2-composed solution misses an avoiding member");
        x = *pick;
        int single = 0;
        for (int r = 0; r < 3; ++r)
            if (std::count(x.begin(), x.end(), r) == 1) single = r;
        ext.delta = ((missing - single) % 3 + 3) % 3;
        ext.shifted = pivot;
        ext.used_composed = true;
        ext.result = add_on_set(f, ext.shifted, ext.delta);
    }
    for (int i = 0; i < 3; ++i) {
        ext.result.set(s.vertices[i], x[i]);
        ext.assigned_values.push_back(x[i]);
    }
    if (!is_strong_on(h, ext.result, pivot))
        throw InternalError("order-3 sprig extension lost cordiality or strongness");
    return ext;
}

}  // namespace cordial
