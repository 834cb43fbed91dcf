#include "cordial/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "cordial/errors.hpp"

namespace cordial {

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw ContractViolation("bound must be positive");
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        const std::uint64_t word = engine_() & mask;
        if (word < bound) return word;
    }
}

Hypergraph random_hypertree(const GenParams& p) {
    if (p.edges < 1) throw ValidationError("edge count must be at least 1");
    if (p.size_min < 2) throw ValidationError("minimum edge size must be at least 2");
    if (p.size_max < p.size_min) throw ValidationError("edge size range is empty");

    Rng rng(p.seed);
    const auto next_size = [&] {
        return p.size_min +
               static_cast<int>(rng.next_below(
                   static_cast<std::uint64_t>(p.size_max - p.size_min) + 1));
    };
    std::vector<std::vector<int>> edges;
    int n = 0;
    for (int e = 0; e < p.edges; ++e) {
        const int s = next_size();
        std::vector<int> edge;
        if (n == 0) {
            for (int v = 1; v <= s; ++v) edge.push_back(v);
            n = s;
        } else {
            const int anchor = 1 + static_cast<int>(rng.next_below(n));
            edge.push_back(anchor);
            for (int i = 1; i < s; ++i) edge.push_back(++n);
        }
        edges.push_back(std::move(edge));
    }
    Hypergraph h(n, std::move(edges));
    if (!analyze(h).is_hypertree || !edge_count_identity(h))
        throw InternalError("generated hypergraph is not a hypertree");
    return h;
}

namespace {

std::vector<std::vector<int>> canonical_edges(const Hypergraph& h) {
    std::vector<std::vector<int>> edges = h.edges();
    std::sort(edges.begin(), edges.end());
    return edges;
}

void grow(std::vector<std::vector<int>>& edges, int n, int max_m,
          const std::vector<int>& sizes, std::set<std::vector<std::vector<int>>>& seen,
          std::vector<Hypergraph>& out) {
    Hypergraph h(n, edges);
    if (seen.insert(canonical_edges(h)).second) out.push_back(h);
    if (static_cast<int>(edges.size()) == max_m) return;
    for (int anchor = 1; anchor <= n; ++anchor)
        for (int s : sizes) {
            std::vector<int> edge{anchor};
            for (int i = 1; i < s; ++i) edge.push_back(n + i);
            edges.push_back(std::move(edge));
            grow(edges, n + s - 1, max_m, sizes, seen, out);
            edges.pop_back();
        }
}

}  // namespace

std::vector<Hypergraph> enumerate_small_hypertrees(int max_m, const std::vector<int>& sizes) {
    if (max_m < 1 || max_m > 5)
        throw ValidationError("enumeration handles 1 to 5 edges");
    if (sizes.empty()) throw ValidationError("no edge sizes given");
    std::vector<int> ordered(sizes);
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
    for (int s : ordered)
        if (s != 2 && s != 3)
            throw ValidationError("enumeration handles edge sizes 2 and 3");

    std::vector<Hypergraph> out;
    std::set<std::vector<std::vector<int>>> seen;
    for (int s : ordered) {
        std::vector<int> first;
        for (int v = 1; v <= s; ++v) first.push_back(v);
        std::vector<std::vector<int>> edges{first};
        grow(edges, s, max_m, ordered, seen, out);
    }
    return out;
}

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;  // 1-based
};

// Non-blank lines after comment stripping, tokenized with positions.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> rows;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::vector<Token> row;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            row.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
            i = j;
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] void parse_fail(const Token& tok, const std::string& what) {
    throw ValidationError("line " + std::to_string(tok.line) + ", column " +
                          std::to_string(tok.column) + ": " + what);
}

long long parse_int(const Token& tok) {
    long long value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        parse_fail(tok, "expected an integer, got '" + tok.text + "'");
    return value;
}

void expect_width(const std::vector<Token>& row, std::size_t width, const std::string& what) {
    if (row.size() < width) {
        const Token& last = row.back();
        throw ValidationError("line " + std::to_string(last.line) + ": " + what);
    }
    if (row.size() > width) parse_fail(row[width], "unexpected extra token");
}

}  // namespace

Hypergraph parse_ht(const std::string& text) {
    const auto rows = tokenize(text);
    if (rows.empty()) throw ValidationError("line 1: missing 'n m' header");
    expect_width(rows[0], 2, "header must be 'n m'");
    const long long n = parse_int(rows[0][0]);
    const long long m = parse_int(rows[0][1]);
    if (n < 0) parse_fail(rows[0][0], "vertex count must be non-negative");
    if (m < 0) parse_fail(rows[0][1], "edge count must be non-negative");
    if (static_cast<long long>(rows.size()) - 1 < m)
        throw ValidationError("expected " + std::to_string(m) + " edge lines, found " +
                              std::to_string(rows.size() - 1));
    if (static_cast<long long>(rows.size()) - 1 > m)
        parse_fail(rows[m + 1][0],
                   "unexpected content after " + std::to_string(m) + " edge lines");

    std::vector<std::vector<int>> edges;
    for (long long e = 1; e <= m; ++e) {
        const auto& row = rows[e];
        if (row.size() < 2) {
            const Token& tok = row[0];
            throw ValidationError("line " + std::to_string(tok.line) +
                                  ": edge has fewer than 2 vertices");
        }
        std::vector<int> members;
        std::set<long long> distinct;
        for (const Token& tok : row) {
            const long long id = parse_int(tok);
            if (id < 1 || id > n)
                parse_fail(tok, "vertex id " + std::to_string(id) + " out of range 1.." +
                                    std::to_string(n));
            if (!distinct.insert(id).second)
                parse_fail(tok, "duplicate vertex " + std::to_string(id) + " in edge");
            members.push_back(static_cast<int>(id));
        }
        edges.push_back(std::move(members));
    }
    return Hypergraph(static_cast<int>(n), std::move(edges));
}

std::string write_ht(const Hypergraph& h) {
    std::ostringstream out;
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (int e = 1; e <= h.edge_count(); ++e) {
        const auto& members = h.edge(e);
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i > 0) out << ' ';
            out << members[i];
        }
        out << '\n';
    }
    return out.str();
}

ParsedLabeling parse_labeling(const std::string& text, int n, int m) {
    const auto rows = tokenize(text);
    if (rows.empty()) throw ValidationError("line 1: missing modulus line");
    expect_width(rows[0], 1, "first line must hold the modulus");
    const long long k = parse_int(rows[0][0]);
    if (k < 2) parse_fail(rows[0][0], "modulus must be at least 2");
    const long long expected = 1 + n + m;
    if (static_cast<long long>(rows.size()) < expected)
        throw ValidationError("expected " + std::to_string(n) + " vertex lines and " +
                              std::to_string(m) + " edge lines, found " +
                              std::to_string(rows.size() - 1));
    if (static_cast<long long>(rows.size()) > expected)
        parse_fail(rows[expected][0], "unexpected content after the labeling");

    ParsedLabeling parsed{Labeling(static_cast<int>(k), n), std::vector<int>(m + 1, 0)};
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[1 + i];
        expect_width(row, 2, "vertex line must be 'vertex_id residue'");
        const long long v = parse_int(row[0]);
        const long long r = parse_int(row[1]);
        if (v < 1 || v > n)
            parse_fail(row[0], "vertex id " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(n));
        if (r < 0 || r >= k)
            parse_fail(row[1], "residue " + std::to_string(r) + " out of range 0.." +
                                   std::to_string(k - 1));
        if (parsed.labeling.is_set(static_cast<int>(v)))
            parse_fail(row[0], "vertex " + std::to_string(v) + " labeled twice");
        parsed.labeling.set(static_cast<int>(v), static_cast<int>(r));
    }
    std::vector<char> edge_seen(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        const auto& row = rows[1 + n + i];
        expect_width(row, 2, "edge line must be 'edge_index residue'");
        const long long e = parse_int(row[0]);
        const long long r = parse_int(row[1]);
        if (e < 1 || e > m)
            parse_fail(row[0], "edge index " + std::to_string(e) + " out of range 1.." +
                                   std::to_string(m));
        if (r < 0 || r >= k)
            parse_fail(row[1], "residue " + std::to_string(r) + " out of range 0.." +
                                   std::to_string(k - 1));
        if (edge_seen[e]) parse_fail(row[0], "edge " + std::to_string(e) + " labeled twice");
        edge_seen[e] = 1;
        parsed.edge_residues[e] = static_cast<int>(r);
    }
    return parsed;
}

std::string write_labeling(const Hypergraph& h, const Labeling& f) {
    std::ostringstream out;
    out << f.modulus() << '\n';
    for (int v = 1; v <= h.vertex_count(); ++v) out << v << ' ' << f.at(v) << '\n';
    for (int e = 1; e <= h.edge_count(); ++e)
        out << e << ' ' << induced_edge_label(h, f, e) << '\n';
    return out.str();
}

std::string to_dot(const Hypergraph& h, const Labeling* f) {
    std::ostringstream out;
    out << "graph incidence {\n";
    for (int v = 1; v <= h.vertex_count(); ++v) {
        out << "  v" << v << " [shape=circle, label=\"v" << v;
        if (f != nullptr) out << "\\n" << f->at(v);
        out << "\"];\n";
    }
    for (int e = 1; e <= h.edge_count(); ++e) {
        out << "  e" << e << " [shape=box, label=\"e" << e;
        if (f != nullptr) out << "\\n" << induced_edge_label(h, *f, e);
        out << "\"];\n";
    }
    for (int e = 1; e <= h.edge_count(); ++e)
        for (int v : h.edge(e)) out << "  v" << v << " -- e" << e << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace cordial
