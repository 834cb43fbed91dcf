#include "cordial/labeler.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cordial/solutions.hpp"
#include "cordial/sprig.hpp"

namespace cordial {

namespace {

// local id -> id of the hypergraph label() was called on
struct IdMaps {
    std::vector<int> vmap;
    std::vector<int> emap;
};

IdMaps identity_maps(const Hypergraph& t) {
    IdMaps maps;
    maps.vmap.resize(t.vertex_count() + 1);
    std::iota(maps.vmap.begin(), maps.vmap.end(), 0);
    maps.emap.resize(t.edge_count() + 1);
    std::iota(maps.emap.begin(), maps.emap.end(), 0);
    return maps;
}

IdMaps compose(const IdMaps& outer, const RemovalResult& rr) {
    IdMaps inner;
    inner.vmap.resize(rr.result.vertex_count() + 1, 0);
    for (int v = 1; v <= rr.result.vertex_count(); ++v)
        inner.vmap[v] = outer.vmap[rr.vertex_to_old[v]];
    inner.emap.resize(rr.result.edge_count() + 1, 0);
    for (int e = 1; e <= rr.result.edge_count(); ++e)
        inner.emap[e] = outer.emap[rr.edge_to_old[e]];
    return inner;
}

std::vector<int> to_original(const std::vector<int>& ids, const std::vector<int>& map) {
    std::vector<int> out;
    for (int id : ids) out.push_back(map[id]);
    return out;
}

void push_assign(std::vector<TraceOp>& ops, int vertex, int value) {
    ops.push_back({TraceOp::Kind::Assign, {vertex}, value});
}

void push_shift(std::vector<TraceOp>& ops, std::vector<int> vertices, int delta) {
    ops.push_back({TraceOp::Kind::Shift, std::move(vertices), delta});
}

class Builder {
public:
    Builder(int k, LabelerTrace& trace, const LabelerOptions& options)
        : k_(k), trace_(trace), options_(options) {}

    Labeling strong2(const Hypergraph& t, int u, const IdMaps& maps, int depth);
    Labeling strong3(const Hypergraph& t, const HelpfulConfiguration& a, const IdMaps& maps,
                     int depth);
    Labeling peel_one(const Hypergraph& t, const IdMaps& maps);
    Labeling peel_two(const Hypergraph& t, const IdMaps& maps);

private:
    using ChildLabeler = std::function<Labeling(
        const Hypergraph& t2, const IdMaps& maps2, const std::vector<int>& pivot2, int depth2)>;
    using Extender = std::function<SprigExtension(const Labeling& f1)>;

    Labeling base_case(const Hypergraph& t, const std::vector<int>& pivot, const IdMaps& maps,
                       int depth);
    Labeling unwind(const Hypergraph& t, const Sprig& s, IncidenceRelation rel,
                    const std::vector<int>& pivot, bool containing, const IdMaps& maps,
                    int depth, const ChildLabeler& child, const Extender& extend);

    int k_;
    LabelerTrace& trace_;
    LabelerOptions options_;
};

Labeling Builder::base_case(const Hypergraph& t, const std::vector<int>& pivot,
                            const IdMaps& maps, int depth) {
    TraceStep step;
    step.depth = depth;
    step.note = "base assignment";
    step.config_vertices = to_original(pivot, maps.vmap);
    Labeling f(k_, t.vertex_count());
    std::vector<long long> counts(k_, 0);
    int next = 0;
    for (int v : pivot) {
        f.set(v, next);
        ++counts[next];
        push_assign(step.ops, maps.vmap[v], next);
        ++next;
    }
    for (int v = 1; v <= t.vertex_count(); ++v) {
        if (f.is_set(v)) continue;
        const int r = least_loaded_residue(counts);
        f.set(v, r);
        ++counts[r];
        push_assign(step.ops, maps.vmap[v], r);
    }
    trace_.steps.push_back(std::move(step));
    if (!is_strong_on(t, f, pivot)) throw InternalError("base assignment is not strong");
    return f;
}

Labeling Builder::unwind(const Hypergraph& t, const Sprig& s, IncidenceRelation rel,
                         const std::vector<int>& pivot, bool containing, const IdMaps& maps,
                         int depth, const ChildLabeler& child, const Extender& extend) {
    TraceStep step;
    step.depth = depth;
    step.note = "peel pendant sprig";
    step.sprig_edges = to_original(s.edges, maps.emap);
    step.sprig_vertices = to_original(s.vertices, maps.vmap);
    step.matrix = matrix_name(adjacency_matrix(t, s));
    step.relation = relation_name(rel);
    step.config_vertices = to_original(pivot, maps.vmap);

    RemovalResult rr_p = remove(t, {}, s.edges, /*prune_isolated=*/true);
    RemovalResult rr_s = remove(t, s.vertices, {}, /*prune_isolated=*/false);
    const int n_ts = rr_s.result.vertex_count();

    Labeling g_ts(k_, n_ts);
    if (rr_p.result.vertex_count() > 0) {
        std::vector<int> pivot2;
        if (!containing)
            for (int v : pivot) {
                const int nv = rr_p.old_vertex_to_new[v];
                if (nv == 0) throw InternalError("pivot vertex vanished with the sprig");
                pivot2.push_back(nv);
            }
        Labeling f2 = child(rr_p.result, compose(maps, rr_p), pivot2, depth + 1);
        std::vector<int> isolated;
        for (int v = 1; v <= n_ts; ++v)
            if (rr_s.result.degree(v) == 0) isolated.push_back(v);
        std::vector<int> a_ts;
        if (!containing)
            for (int v : pivot) a_ts.push_back(rr_s.old_vertex_to_new[v]);
        g_ts = extend_to_isolated(rr_p.result, f2, isolated, a_ts);
        for (int v : isolated)
            push_assign(step.ops, maps.vmap[rr_s.vertex_to_old[v]], g_ts.at(v));
    } else {
        std::vector<long long> counts(k_, 0);
        for (int v = 1; v <= n_ts; ++v) {
            const int r = least_loaded_residue(counts);
            g_ts.set(v, r);
            ++counts[r];
            push_assign(step.ops, maps.vmap[rr_s.vertex_to_old[v]], r);
        }
    }

    Labeling f1(k_, t.vertex_count());
    for (int v = 1; v <= n_ts; ++v) f1.set(rr_s.vertex_to_old[v], g_ts.at(v));
    SprigExtension ext = extend(f1);
    if (ext.delta != 0)
        push_shift(step.ops, to_original(ext.shifted, maps.vmap), ext.delta);
    for (int i = 0; i < s.order(); ++i)
        push_assign(step.ops, maps.vmap[s.vertices[i]], ext.assigned_values[i]);
    trace_.steps.push_back(std::move(step));
    return ext.result;
}

Labeling Builder::strong2(const Hypergraph& t, int u, const IdMaps& maps, int depth) {
    if (u < 1 || u > t.vertex_count())
        throw ContractViolation("pivot vertex " + std::to_string(u) + " does not exist");
    if (t.degree(u) % 2 != 0)
        throw ContractViolation("pivot vertex must have even degree");
    if (t.edge_count() % 2 != 0)
        throw ContractViolation("strong construction needs an even edge count");
    if (t.edge_count() == 0) return base_case(t, {u}, maps, depth);

    Sprig s;
    IncidenceRelation rel;
    if (t.edge_count() > t.degree(u)) {
        rel = IncidenceRelation::NonIncident;
        s = find_pendant_sprig(t, {u}, rel, standard_matrices(2));
    } else {
        // All edges pass through u; peel two of them with one leaf each.
        rel = IncidenceRelation::FullyIncident;
        s = find_pendant_sprig(t, {u}, rel, {standard_matrix(2, MatrixId::M1)});
    }
    const auto child = [this](const Hypergraph& t2, const IdMaps& maps2,
                              const std::vector<int>& pivot2, int depth2) {
        return strong2(t2, pivot2[0], maps2, depth2);
    };
    const auto extend = [&](const Labeling& f1) { return extend_sprig_k2(t, f1, s, u); };
    return unwind(t, s, rel, {u}, /*containing=*/false, maps, depth, child, extend);
}

Labeling Builder::strong3(const Hypergraph& t, const HelpfulConfiguration& a0,
                          const IdMaps& maps, int depth) {
    if (t.edge_count() % 3 != 0)
        throw ContractViolation("strong construction needs an edge count divisible by 3");
    HelpfulConfiguration a = a0;

    if (a.kind == HelpfulConfiguration::Kind::One) {
        if (a.u < 1 || a.u > t.vertex_count())
            throw ContractViolation("pivot vertex " + std::to_string(a.u) + " does not exist");
        if (t.degree(a.u) % 3 != 0)
            throw ContractViolation("pivot vertex must have degree divisible by 3");
        if (t.edge_count() == 0) return base_case(t, {a.u}, maps, depth);

        Sprig s;
        IncidenceRelation rel;
        if (t.edge_count() > t.degree(a.u)) {
            rel = IncidenceRelation::NonIncident;
            s = find_pendant_sprig(t, {a.u}, rel, standard_matrices(3));
        } else {
            rel = IncidenceRelation::FullyIncident;
            s = find_pendant_sprig(t, {a.u}, rel, {standard_matrix(3, MatrixId::M1)});
        }
        const auto child = [this](const Hypergraph& t2, const IdMaps& maps2,
                                  const std::vector<int>& pivot2, int depth2) {
            HelpfulConfiguration a2;
            a2.kind = HelpfulConfiguration::Kind::One;
            a2.u = pivot2[0];
            return strong3(t2, a2, maps2, depth2);
        };
        const auto extend = [&](const Labeling& f1) { return extend_sprig_k3(t, f1, s, a); };
        return unwind(t, s, rel, {a.u}, /*containing=*/false, maps, depth, child, extend);
    }

    // Two-vertex pivot: recompute the residual edges in this hypergraph
    // (the stored ones belong to an ancestor); this also re-validates the
    // defining conditions.
    a.residual_edges = residual_edges(t, a.u1, a.u2);
    if (a.residual_edges.size() % 3 != 0)
        throw ContractViolation("residual edge count is not divisible by 3");
    const std::vector<int> pivot = {a.u1, a.u2};
    Sprig s;
    const auto extend = [&](const Labeling& f1) { return extend_sprig_k3(t, f1, s, a); };

    if (!a.residual_edges.empty()) {
        const IncidenceRelation rel = IncidenceRelation::NonIncident;
        s = find_pendant_sprig(t, pivot, rel, standard_matrices(3), a.residual_edges);
        const auto child = [this](const Hypergraph& t2, const IdMaps& maps2,
                                  const std::vector<int>& pivot2, int depth2) {
            HelpfulConfiguration a2;
            a2.kind = HelpfulConfiguration::Kind::Two;
            a2.u1 = pivot2[0];
            a2.u2 = pivot2[1];
            return strong3(t2, a2, maps2, depth2);
        };
        return unwind(t, s, rel, pivot, /*containing=*/false, maps, depth, child, extend);
    }

    if (t.degree(a.u2) > 2) {
        // Three leaf-edges at u2 whose removal keeps the pivot helpful (in
        // particular keeps u1's edge).
        const IncidenceRelation rel = IncidenceRelation::FullyIncident;
        const auto keeps_pivot_helpful = [&](const Sprig& cand) {
            RemovalResult rr = remove(t, {}, cand.edges, /*prune_isolated=*/true);
            HelpfulConfiguration a2;
            a2.kind = HelpfulConfiguration::Kind::Two;
            a2.u1 = rr.old_vertex_to_new[a.u1];
            a2.u2 = rr.old_vertex_to_new[a.u2];
            if (a2.u1 == 0 || a2.u2 == 0) return false;
            return is_helpful_configuration(rr.result, a2);
        };
        s = find_pendant_sprig(t, pivot, rel, {standard_matrix(3, MatrixId::M1)},
                                std::nullopt, keeps_pivot_helpful);
        const auto child = [this](const Hypergraph& t2, const IdMaps& maps2,
                                  const std::vector<int>& pivot2, int depth2) {
            HelpfulConfiguration a2;
            a2.kind = HelpfulConfiguration::Kind::Two;
            a2.u1 = pivot2[0];
            a2.u2 = pivot2[1];
            return strong3(t2, a2, maps2, depth2);
        };
        return unwind(t, s, rel, pivot, /*containing=*/false, maps, depth, child, extend);
    }

    // d(u2) = 2 and no residual edges: the sprig is u1's edge plus both
    // edges at u2, with the third vertex a leaf of the all-leaf u2-edge.
    const int e1 = t.incident_edges(a.u1)[0];
    const auto& at_u2 = t.incident_edges(a.u2);
    int e3 = 0;
    for (int e : at_u2) {
        bool all_leaves = true;
        for (int w : t.edge(e))
            if (w != a.u2 && t.degree(w) > 1) all_leaves = false;
        if (all_leaves) {
            e3 = e;
            break;
        }
    }
    if (e3 == 0) throw InternalError("no all-leaf edge at the two-vertex pivot");
    const int e2 = at_u2[0] == e3 ? at_u2[1] : at_u2[0];
    int v3 = 0;
    for (int w : t.edge(e3))
        if (w != a.u2) {
            v3 = w;
            break;
        }
    if (v3 == 0) throw InternalError("all-leaf edge has no leaf");
    s = Sprig{{e1, e2, e3}, {a.u1, a.u2, v3}};
    if (!(adjacency_matrix(t, s) == standard_matrix(3, MatrixId::M2)))
        throw InternalError("containing sprig is not an M2-sprig");
    if (!is_pendant(t, s)) throw InternalError("containing sprig is not pendant");
    const auto child = [this](const Hypergraph& t2, const IdMaps& maps2,
                              const std::vector<int>&, int depth2) {
        return strong3(t2, find_helpful_configuration(t2), maps2, depth2);
    };
    return unwind(t, s, IncidenceRelation::Containing, pivot, /*containing=*/true, maps,
                  depth, child, extend);
}

Labeling Builder::peel_one(const Hypergraph& t, const IdMaps& maps) {
    const std::vector<int> leaves = leaf_edges(t);
    if (leaves.empty()) throw InternalError("hypertree has no leaf-edge");
    const int e = leaves.front();
    RemovalResult rr = remove(t, {}, {e}, /*prune_isolated=*/true);

    TraceStep step;
    step.depth = 0;
    step.note = "set aside leaf-edge " + std::to_string(maps.emap[e]);

    Labeling f2(k_, 0);
    if (rr.result.vertex_count() > 0) {
        const IdMaps maps2 = compose(maps, rr);
        if (k_ == 2) {
            f2 = strong2(rr.result, find_even_degree_vertex(rr.result), maps2, 1);
        } else {
            f2 = strong3(rr.result, find_helpful_configuration(rr.result), maps2, 1);
        }
    }
    std::vector<int> isolated;
    for (int v = 1; v <= t.vertex_count(); ++v)
        if (rr.old_vertex_to_new[v] == 0) isolated.push_back(v);
    Labeling f = extend_to_isolated(rr.result, f2, isolated, {});
    for (int v : isolated) push_assign(step.ops, maps.vmap[v], f.at(v));
    trace_.steps.push_back(std::move(step));
    if (!is_k_cordial(t, f)) throw InternalError("leaf-edge step lost cordiality");
    return f;
}

Labeling Builder::peel_two(const Hypergraph& t, const IdMaps& maps) {
    const std::vector<int> leaves = leaf_edges(t);
    if (leaves.size() < 2) throw InternalError("hypertree lacks two leaf-edges");
    const int e1 = leaves[0];
    const int e2 = leaves[1];
    const auto lowest_leaf_of = [&](int e) {
        for (int w : t.edge(e))
            if (t.degree(w) == 1) return w;
        throw InternalError("leaf-edge has no degree-1 member");
    };
    const int v1 = lowest_leaf_of(e1);
    const int v2 = lowest_leaf_of(e2);

    RemovalResult rr1 = remove(t, {}, {e1}, /*prune_isolated=*/true);
    const int e2_inner = rr1.old_edge_to_new[e2];
    RemovalResult rr2 = remove(rr1.result, {}, {e2_inner}, /*prune_isolated=*/true);

    TraceStep step;
    step.depth = 0;
    step.note = "set aside leaf-edges " + std::to_string(maps.emap[e1]) + " and " +
                std::to_string(maps.emap[e2]);

    Labeling f(k_, t.vertex_count());
    if (rr2.result.vertex_count() > 0) {
        const IdMaps maps2 = compose(compose(maps, rr1), rr2);
        Labeling f2 = strong3(rr2.result, find_helpful_configuration(rr2.result), maps2, 1);
        for (int v = 1; v <= rr2.result.vertex_count(); ++v)
            f.set(rr1.vertex_to_old[rr2.vertex_to_old[v]], f2.at(v));
    }
    std::vector<long long> counts(k_, 0);
    for (int v = 1; v <= t.vertex_count(); ++v)
        if (f.is_set(v)) ++counts[f.at(v)];
    for (int v = 1; v <= t.vertex_count(); ++v) {
        if (f.is_set(v) || v == v1 || v == v2) continue;
        const int r = least_loaded_residue(counts);
        f.set(v, r);
        ++counts[r];
        push_assign(step.ops, maps.vmap[v], r);
    }

    int x1 = 0, x2 = 0;
    if (options_.case3_enumerate) {
        bool done = false;
        for (x1 = 0; x1 < 3 && !done; ++x1)
            for (x2 = 0; x2 < 3 && !done; ++x2) {
                f.set(v1, x1);
                f.set(v2, x2);
                if (is_k_cordial(t, f)) done = true;
            }
        if (!done) throw InternalError("no finishing pair balances the labeling");
        x1 = f.at(v1);
        x2 = f.at(v2);
    } else {
        const auto residual_sum = [&](int e, int skip) {
            int sum = 0;
            for (int w : t.edge(e))
                if (w != skip) sum = (sum + f.at(w)) % 3;
            return sum;
        };
        const int y1 = residual_sum(e1, v1);
        const int y2 = residual_sum(e2, v2);
        int a = -1;
        for (int cand = 0; cand < 3 && a < 0; ++cand)
            if (counts[cand] <= counts[(cand + 1) % 3] &&
                counts[(cand + 1) % 3] <= counts[(cand + 2) % 3])
                a = cand;
        if (a < 0) throw InternalError("vertex histogram has no cyclic ordering point");
        // The two new vertices take a and a+1; which edge gets which depends
        // on y2 - y1 so the two new edge labels differ.
        if ((y2 - y1 + 3) % 3 == 2) {
            x1 = (a + 1) % 3;
            x2 = a;
        } else {
            x1 = a;
            x2 = (a + 1) % 3;
        }
        f.set(v1, x1);
        f.set(v2, x2);
    }
    push_assign(step.ops, maps.vmap[v1], x1);
    push_assign(step.ops, maps.vmap[v2], x2);
    trace_.steps.push_back(std::move(step));
    if (!is_k_cordial(t, f)) throw InternalError("two-leaf finish lost cordiality");
    return f;
}

}  // namespace

std::pair<Labeling, LabelerTrace> label(const Hypergraph& t, int k,
                                        const LabelerOptions& options) {
    if (k != 2 && k != 3) throw ValidationError("k must be 2 or 3");
    LabelerTrace trace;
    trace.k = k;
    trace.n = t.vertex_count();
    if (t.vertex_count() == 0) return {Labeling(k, 0), trace};
    const StructureReport report = analyze(t);
    if (!report.is_hypertree)
        throw ValidationError(report.is_connected
                                  ? "incidence structure has a cycle"
                                  : "hypergraph is not connected");

    Builder builder(k, trace, options);
    const IdMaps maps = identity_maps(t);
    const int m = t.edge_count();
    Labeling f(k, t.vertex_count());
    try {
        if (m % k == 0) {
            if (k == 2) {
                const int u = find_even_degree_vertex(t);
                trace.strong_on = {u};
                f = builder.strong2(t, u, maps, 0);
            } else {
                const HelpfulConfiguration a = find_helpful_configuration(t);
                trace.strong_on = a.vertices();
                f = builder.strong3(t, a, maps, 0);
            }
            if (!is_strong_on(t, f, trace.strong_on))
                throw InternalError("strong construction result is not strong");
        } else if (m % k == 1) {
            f = builder.peel_one(t, maps);
        } else {
            f = builder.peel_two(t, maps);
        }
        if (!is_k_cordial(t, f)) throw InternalError("construction result is not cordial");
    } catch (const InternalError& ex) {
        throw InternalError(std::string(ex.what()) + "\npartial trace:\n" +
                            format_trace(trace));
    } catch (const ContractViolation& ex) {
        throw ContractViolation(std::string(ex.what()) + "\npartial trace:\n" +
                                format_trace(trace));
    } catch (const SearchExhausted& ex) {
        throw SearchExhausted(std::string(ex.what()) + "\npartial trace:\n" +
                              format_trace(trace));
    }
    return {f, trace};
}

Labeling label_strong(const Hypergraph& t, int k, int u) {
    if (k != 2) throw ValidationError("a single even-degree pivot applies to k = 2");
    LabelerTrace trace;
    trace.k = 2;
    trace.n = t.vertex_count();
    LabelerOptions options;
    Builder builder(2, trace, options);
    return builder.strong2(t, u, identity_maps(t), 0);
}

Labeling label_strong(const Hypergraph& t, int k, const HelpfulConfiguration& a) {
    if (k != 3) throw ValidationError("a helpful-configuration pivot applies to k = 3");
    LabelerTrace trace;
    trace.k = 3;
    trace.n = t.vertex_count();
    LabelerOptions options;
    Builder builder(3, trace, options);
    return builder.strong3(t, a, identity_maps(t), 0);
}

Labeling replay_trace(const LabelerTrace& trace) {
    Labeling f(trace.k, trace.n);
    for (const TraceStep& step : trace.steps)
        for (const TraceOp& op : step.ops) {
            if (op.kind == TraceOp::Kind::Assign) {
                f.set(op.vertices[0], op.value);
            } else {
                for (int v : op.vertices) f.set(v, (f.at(v) + op.value) % trace.k);
            }
        }
    return f;
}

namespace {

std::string join(const std::vector<int>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out << ' ';
        out << ids[i];
    }
    return out.str();
}

}  // namespace

std::string format_trace(const LabelerTrace& trace) {
    std::ostringstream out;
    out << trace.k << "-cordial construction on " << trace.n << " vertices\n";
    if (!trace.strong_on.empty()) out << "strong on {" << join(trace.strong_on) << "}\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        out << "step " << i << " depth " << step.depth << ": " << step.note;
        if (!step.sprig_edges.empty())
            out << " | sprig edges {" << join(step.sprig_edges) << "} vertices {"
                << join(step.sprig_vertices) << "} matrix " << step.matrix << " relation "
                << step.relation;
        if (!step.config_vertices.empty())
            out << " | pivot {" << join(step.config_vertices) << "}";
        out << '\n';
        for (const TraceOp& op : step.ops) {
            if (op.kind == TraceOp::Kind::Assign)
                out << "  assign " << op.vertices[0] << " <- " << op.value << '\n';
            else
                out << "  shift {" << join(op.vertices) << "} by " << op.value << '\n';
        }
    }
    return out.str();
}

}  // namespace cordial
