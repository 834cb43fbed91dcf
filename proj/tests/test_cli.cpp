#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cordial/cli.hpp"
#include "cordial/io.hpp"
#include "cordial/labeling.hpp"
#include "doctest.h"

using namespace cordial;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "cordial_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string file_at(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void put_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("gen, label, verify pipeline round trips through files") {
    for (int k : {2, 3}) {
        fs::path ht = scratch_dir() / ("pipeline_" + std::to_string(k) + ".ht");
        fs::path lab = scratch_dir() / ("pipeline_" + std::to_string(k) + ".lab");

        RunResult gen = run({"gen", "--seed", "5", "--edges", "6", "--size-min", "2",
                             "--size-max", "4", "--out", ht.string()});
        CHECK(gen.code == 0);

        RunResult label = run({"label", "--k", std::to_string(k), "--in", ht.string(),
                               "--out", lab.string()});
        CHECK(label.code == 0);

        RunResult verify = run({"verify", "--k", std::to_string(k), "--in", ht.string(),
                                "--labels", lab.string()});
        CHECK(verify.code == 0);
        CHECK(verify.out.find("vertex counts: ") != std::string::npos);
        CHECK(verify.out.find("edge counts: ") != std::string::npos);
        CHECK(verify.out.find("verdict: " + std::to_string(k) + "-cordial") !=
              std::string::npos);
    }
}

TEST_CASE("gen without --out streams the hypertree to stdout") {
    RunResult gen = run({"gen", "--seed", "11", "--edges", "4", "--size-min", "2",
                         "--size-max", "3"});
    CHECK(gen.code == 0);
    Hypergraph h = parse_ht(gen.out);
    CHECK(h.edge_count() == 4);

    RunResult again = run({"gen", "--seed", "11", "--edges", "4", "--size-min", "2",
                           "--size-max", "3"});
    CHECK(again.out == gen.out);
}

TEST_CASE("verify flags an unbalanced labeling with exit 1") {
    fs::path ht = scratch_dir() / "unbalanced.ht";
    fs::path lab = scratch_dir() / "unbalanced.lab";
    put_file(ht, "3 2\n1 2\n2 3\n");
    put_file(lab, "2\n1 0\n2 0\n3 0\n1 0\n2 0\n");

    RunResult verify = run({"verify", "--k", "2", "--in", ht.string(), "--labels",
                            lab.string()});
    CHECK(verify.code == 1);
    CHECK(verify.out.find("verdict: not 2-cordial") != std::string::npos);
}

TEST_CASE("verify rejects stated residues that contradict the vertex labels") {
    fs::path ht = scratch_dir() / "contradict.ht";
    fs::path lab = scratch_dir() / "contradict.lab";
    put_file(ht, "3 2\n1 2\n2 3\n");
    put_file(lab, "2\n1 0\n2 0\n3 1\n1 1\n2 1\n");  // edge 1 induces 0, file says 1

    RunResult verify = run({"verify", "--k", "2", "--in", ht.string(), "--labels",
                            lab.string()});
    CHECK(verify.code == 2);
    CHECK(verify.err.find("edge 1") != std::string::npos);
}

TEST_CASE("verify rejects a modulus mismatch") {
    fs::path ht = scratch_dir() / "modulus.ht";
    fs::path lab = scratch_dir() / "modulus.lab";
    put_file(ht, "2 1\n1 2\n");
    put_file(lab, "3\n1 0\n2 1\n1 1\n");

    RunResult verify = run({"verify", "--k", "2", "--in", ht.string(), "--labels",
                            lab.string()});
    CHECK(verify.code == 2);
    CHECK(verify.err.find("modulus") != std::string::npos);
}

TEST_CASE("oracle reports witness-found with a checkable labeling") {
    fs::path ht = scratch_dir() / "path.ht";
    put_file(ht, "3 2\n1 2\n2 3\n");

    RunResult oracle = run({"oracle", "--k", "2", "--in", ht.string()});
    CHECK(oracle.code == 0);
    CHECK(oracle.out.find("decision: witness-found") != std::string::npos);
    CHECK(oracle.out.find("nodes: ") != std::string::npos);

    // The labeling follows the two report lines; it must verify.
    std::size_t second_newline = oracle.out.find('\n', oracle.out.find('\n') + 1);
    std::string labeling_text = oracle.out.substr(second_newline + 1);
    ParsedLabeling parsed = parse_labeling(labeling_text, 3, 2);
    Hypergraph h = parse_ht(file_at(ht));
    CHECK(is_k_cordial(h, parsed.labeling));
}

TEST_CASE("oracle reports exhausted-unsat with exit 1") {
    fs::path ht = scratch_dir() / "forest.ht";
    put_file(ht, "4 2\n1 2\n3 4\n");

    RunResult oracle = run({"oracle", "--k", "2", "--in", ht.string()});
    CHECK(oracle.code == 1);
    CHECK(oracle.out.find("decision: exhausted-unsat") != std::string::npos);
}

TEST_CASE("oracle reports indeterminate when the budget runs out") {
    fs::path ht = scratch_dir() / "budget.ht";
    put_file(ht, "3 2\n1 2\n2 3\n");

    RunResult oracle = run({"oracle", "--k", "2", "--in", ht.string(), "--budget", "1"});
    CHECK(oracle.code == 1);
    CHECK(oracle.out.find("decision: indeterminate") != std::string::npos);
}

TEST_CASE("oracle --count prints the number of labelings") {
    fs::path ht = scratch_dir() / "count.ht";
    put_file(ht, "3 2\n1 2\n2 3\n");
    RunResult count = run({"oracle", "--k", "2", "--in", ht.string(), "--count"});
    CHECK(count.code == 0);
    CHECK(count.out == "count: 4\n");

    fs::path forest = scratch_dir() / "count0.ht";
    put_file(forest, "4 2\n1 2\n3 4\n");
    RunResult zero = run({"oracle", "--k", "2", "--in", forest.string(), "--count"});
    CHECK(zero.code == 1);
    CHECK(zero.out == "count: 0\n");
}

TEST_CASE("label --trace mirrors the construction and DOT to stderr") {
    fs::path ht = scratch_dir() / "trace.ht";
    put_file(ht, "4 3\n1 2\n2 3\n3 4\n");

    RunResult label = run({"label", "--k", "3", "--in", ht.string(), "--trace"});
    CHECK(label.code == 0);
    CHECK(!label.err.empty());
    CHECK(label.err.find("graph incidence {") != std::string::npos);
    ParsedLabeling parsed = parse_labeling(label.out, 4, 3);
    CHECK(is_k_cordial(parse_ht(file_at(ht)), parsed.labeling));
}

TEST_CASE("stress verifies every trial") {
    RunResult stress = run({"stress", "--k", "2", "--trials", "20", "--seed", "1",
                            "--max-edges", "8"});
    CHECK(stress.code == 0);
    CHECK(stress.out.find("verified 20/20 trials (k = 2)") != std::string::npos);

    RunResult stress3 = run({"stress", "--k", "3", "--trials", "20", "--seed", "2",
                             "--max-edges", "8"});
    CHECK(stress3.code == 0);
    CHECK(stress3.out.find("verified 20/20 trials (k = 3)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"label", "--k", "4", "--in", "x.ht"}).code == 2);  // k outside {2,3}
    CHECK(run({"label", "--in", "x.ht"}).code == 2);              // missing --k
    CHECK(run({"gen", "--seed", "1", "--edges", "0", "--size-min", "2", "--size-max",
               "3"})
              .code == 2);  // rejected by the generator
    RunResult missing = run({"label", "--k", "2", "--in",
                             (scratch_dir() / "no_such_file.ht").string()});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot read file") != std::string::npos);
}

TEST_CASE("--help exits 0 and lists the subcommands") {
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    for (const char* name : {"gen", "label", "verify", "oracle", "stress", "probe"})
        CHECK(help.out.find(name) != std::string::npos);
}
