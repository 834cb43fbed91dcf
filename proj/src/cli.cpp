#include "cordial/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cordial/errors.hpp"
#include "cordial/io.hpp"
#include "cordial/labeler.hpp"
#include "cordial/oracle.hpp"

namespace cordial {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot write file '" + path + "'");
    file << content;
}

// splitmix64 finalizer; derives independent per-trial seeds from one base
// seed so trials stay reproducible under any parallel schedule.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void run_indexed(int count, const std::function<void(int)>& job) {
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(count)));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                job(i);
            }
        });
    for (std::thread& t : pool) t.join();
}

std::string counts_line(const std::vector<long long>& counts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) out << ' ';
        out << counts[i];
    }
    return out.str();
}

int run_gen(std::uint64_t seed, int edges, int size_min, int size_max,
            const std::string& out_path, std::ostream& out) {
    GenParams params{seed, edges, size_min, size_max};
    const Hypergraph h = random_hypertree(params);
    write_output(out_path, write_ht(h), out);
    return 0;
}

int run_label(int k, const std::string& in_path, const std::string& out_path, bool trace_on,
              std::ostream& out, std::ostream& err) {
    const Hypergraph h = parse_ht(read_file(in_path));
    auto [f, trace] = label(h, k);
    write_output(out_path, write_labeling(h, f), out);
    if (trace_on) {
        err << format_trace(trace);
        err << to_dot(h, &f);
    }
    return 0;
}

int run_verify(int k, const std::string& in_path, const std::string& labels_path,
               std::ostream& out) {
    const Hypergraph h = parse_ht(read_file(in_path));
    const ParsedLabeling parsed =
        parse_labeling(read_file(labels_path), h.vertex_count(), h.edge_count());
    if (parsed.labeling.modulus() != k)
        throw ValidationError("labeling file uses modulus " +
                              std::to_string(parsed.labeling.modulus()) +
                              ", but --k is " + std::to_string(k));
    for (int e = 1; e <= h.edge_count(); ++e) {
        const int induced = induced_edge_label(h, parsed.labeling, e);
        if (parsed.edge_residues[e] != induced)
            throw ValidationError("edge " + std::to_string(e) + ": file says " +
                                  std::to_string(parsed.edge_residues[e]) +
                                  ", the vertex labels induce " + std::to_string(induced));
    }
    const LabelHistogram hist = histogram(h, parsed.labeling);
    out << "vertex counts: " << counts_line(hist.vertex_counts) << '\n';
    out << "edge counts: " << counts_line(hist.edge_counts) << '\n';
    const bool ok = is_k_cordial(h, parsed.labeling);
    out << "verdict: " << (ok ? "" : "not ") << k << "-cordial\n";
    return ok ? 0 : 1;
}

int run_oracle(int k, const std::string& in_path, std::uint64_t budget, bool count_mode,
               std::ostream& out) {
    const Hypergraph h = parse_ht(read_file(in_path));
    if (count_mode) {
        const long long count = count_k_cordial(h, k);
        out << "count: " << count << '\n';
        return count > 0 ? 0 : 1;
    }
    const OracleResult result = exists_k_cordial(h, k, budget);
    switch (result.decision) {
        case OracleResult::Decision::WitnessFound:
            out << "decision: witness-found\n";
            out << "nodes: " << result.nodes_explored << '\n';
            out << write_labeling(h, *result.witness);
            return 0;
        case OracleResult::Decision::ExhaustedUnsat:
            out << "decision: exhausted-unsat\n";
            out << "nodes: " << result.nodes_explored << '\n';
            return 1;
        case OracleResult::Decision::Indeterminate:
        default:
            out << "decision: indeterminate\n";
            out << "nodes: " << result.nodes_explored << '\n';
            out << "budget exhausted before the search completed\n";
            return 1;
    }
}

struct TrialReport {
    bool ok = true;
    bool internal = false;
    std::string text;
};

int run_stress(int k, int trials, std::uint64_t seed, int max_edges, std::ostream& out) {
    if (trials < 1) throw ValidationError("trial count must be at least 1");
    if (max_edges < 1) throw ValidationError("maximum edge count must be at least 1");
    std::vector<TrialReport> reports(trials);
    run_indexed(trials, [&](int i) {
        TrialReport& report = reports[i];
        GenParams params;
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        params.edges = 1 + static_cast<int>(rng.next_below(max_edges));
        params.seed = rng.next_word();
        params.size_min = 2;
        params.size_max = 6;
        std::string stage = "generate";
        try {
            const Hypergraph h = random_hypertree(params);
            stage = "label";
            const auto [f, trace] = label(h, k);
            stage = "verify";
            if (!is_k_cordial(h, f)) throw InternalError("labeling failed verification");
            if (!trace.strong_on.empty() && !is_strong_on(h, f, trace.strong_on))
                throw InternalError("labeling is not strong on the recorded pivot");
            if (!(replay_trace(trace) == f))
                throw InternalError("trace replay deviates from the labeling");
        } catch (const std::exception& ex) {
            report.ok = false;
            report.internal = true;
            std::ostringstream text;
            text << "trial " << i << " (seed " << params.seed << ", " << params.edges
                 << " edges) failed at stage " << stage << ": " << ex.what() << '\n';
            try {
                text << write_ht(random_hypertree(params));
            } catch (const std::exception&) {
                // generation itself failed; nothing to dump
            }
            report.text = text.str();
        }
    });
    int verified = 0;
    bool internal = false;
    for (const TrialReport& report : reports) {
        if (report.ok) {
            ++verified;
        } else {
            out << report.text;
            internal = internal || report.internal;
        }
    }
    out << "verified " << verified << "/" << trials << " trials (k = " << k << ")\n";
    if (verified == trials) return 0;
    return internal ? 3 : 1;
}

int run_probe(int k, int trials, std::uint64_t seed, std::ostream& out) {
    if (trials < 1) throw ValidationError("trial count must be at least 1");
    constexpr std::uint64_t probe_budget = 10'000'000ULL;
    std::vector<TrialReport> reports(trials);
    std::vector<int> decisions(trials, 0);  // 0 witness, 1 unsat, 2 indeterminate
    run_indexed(trials, [&](int i) {
        GenParams params;
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        params.edges = 1 + static_cast<int>(rng.next_below(6));
        params.seed = rng.next_word();
        params.size_min = 2;
        params.size_max = 3;
        const Hypergraph h = random_hypertree(params);
        const OracleResult result = exists_k_cordial(h, k, probe_budget);
        if (result.decision == OracleResult::Decision::ExhaustedUnsat) {
            decisions[i] = 1;
            std::ostringstream text;
            text << "trial " << i << ": no " << k << "-cordial labeling exists for\n";
            text << write_ht(h);
            reports[i].text = text.str();
        } else if (result.decision == OracleResult::Decision::Indeterminate) {
            decisions[i] = 2;
        }
    });
    int witness = 0, unsat = 0, indeterminate = 0;
    for (int i = 0; i < trials; ++i) {
        if (decisions[i] == 0) ++witness;
        if (decisions[i] == 1) {
            ++unsat;
            out << reports[i].text;
        }
        if (decisions[i] == 2) ++indeterminate;
    }
    out << "trials: " << trials << ", witness: " << witness << ", unsat: " << unsat
        << ", indeterminate: " << indeterminate << '\n';
    return unsat > 0 ? 1 : 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-cordial labelings of hypertrees: construction, verification, search"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int edges = 1;
    int size_min = 2;
    int size_max = 3;
    std::string in_path, out_path, labels_path;
    int k = 2;
    bool trace_on = false;
    std::uint64_t budget = 100'000'000ULL;
    bool count_mode = false;
    int trials = 1;
    int max_edges = 1;

    CLI::App* gen = app.add_subcommand("gen", "generate a random hypertree");
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--edges", edges, "number of edges")->required();
    gen->add_option("--size-min", size_min, "smallest edge size")->required();
    gen->add_option("--size-max", size_max, "largest edge size")->required();
    gen->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* lab = app.add_subcommand("label", "construct a k-cordial labeling");
    lab->add_option("--k", k, "modulus")->required()->check(CLI::IsMember({2, 3}));
    lab->add_option("--in", in_path, "input .ht file")->required();
    lab->add_option("--out", out_path, "output file (default stdout)");
    lab->add_flag("--trace", trace_on, "print the construction trace and DOT to stderr");

    CLI::App* ver = app.add_subcommand("verify", "check a labeling for k-cordiality");
    ver->add_option("--k", k, "modulus")->required()->check(CLI::PositiveNumber);
    ver->add_option("--in", in_path, "input .ht file")->required();
    ver->add_option("--labels", labels_path, "labeling file")->required();

    CLI::App* ora = app.add_subcommand("oracle", "exhaustive search for a labeling");
    ora->add_option("--k", k, "modulus")->required()->check(CLI::PositiveNumber);
    ora->add_option("--in", in_path, "input .ht file")->required();
    ora->add_option("--budget", budget, "node budget (0 = unlimited)");
    ora->add_flag("--count", count_mode, "count all labelings instead");

    CLI::App* str = app.add_subcommand("stress", "label + verify across random hypertrees");
    str->add_option("--k", k, "modulus")->required()->check(CLI::IsMember({2, 3}));
    str->add_option("--trials", trials, "number of trials")->required();
    str->add_option("--seed", seed, "base seed")->required();
    str->add_option("--max-edges", max_edges, "edge count upper bound")->required();

    CLI::App* pro = app.add_subcommand("probe", "oracle sweep over small hypertrees");
    pro->add_option("--k", k, "modulus")->required()->check(CLI::PositiveNumber);
    pro->add_option("--trials", trials, "number of trials")->required();
    pro->add_option("--seed", seed, "base seed")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(seed, edges, size_min, size_max, out_path, out);
        if (lab->parsed()) return run_label(k, in_path, out_path, trace_on, out, err);
        if (ver->parsed()) return run_verify(k, in_path, labels_path, out);
        if (ora->parsed()) return run_oracle(k, in_path, budget, count_mode, out);
        if (str->parsed()) return run_stress(k, trials, seed, max_edges, out);
        if (pro->parsed()) return run_probe(k, trials, seed, out);
        err << "error: no subcommand given\n";
        return 2;
    } catch (const ValidationError& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        return 3;
    }
}

}  // namespace cordial
