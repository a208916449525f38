#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kclique/cnf.hpp"
#include "kclique/graph.hpp"
#include "kclique/proof.hpp"

#ifndef KCLIQUE_BIN
#define KCLIQUE_BIN "kclique"
#endif

using namespace kclique;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("kclique-test-" + std::to_string((long long)::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    std::string cmd = std::string(KCLIQUE_BIN) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("full pipeline: gen-graph, gen-cnf, build-proof, verify") {
    TempDir tmp;
    std::string g = tmp.file("g.col"), f = tmp.file("f.cnf"), p = tmp.file("p.txt"),
                r = tmp.file("p.robp");
    CHECK(run("gen-graph --n 9 --k 3 --xi 1.5 --seed 5 -o " + g) == 0);
    CHECK(run("gen-cnf --graph " + g + " --encoding weak --k 3 -o " + f) == 0);
    CHECK(run("build-proof --graph " + g + " --k 3 --method alg1 -o " + p + " --robp " + r) == 0);
    CHECK(run("verify --cnf " + f + " --proof " + p + " --robp " + r) == 0);

    // a corrupted proof file fails verification with exit 1
    ResolutionProof pi = read_proof_file(p);
    ResolutionProof broken;
    for (int i = 0; i < pi.size() - 1; ++i) {
        const ProofStep& st = pi.step(i);
        if (st.axiom)
            broken.add_axiom(st.clause);
        else
            broken.add_resolvent(st.clause, st.ante1, st.ante2, st.var);
    }
    std::ofstream out(tmp.file("broken.txt"));
    write_proof(out, broken);
    out.close();
    CHECK(run("verify --cnf " + f + " --proof " + tmp.file("broken.txt")) == 1);

    // usage errors exit with 2
    CHECK(run("verify") == 2);
    CHECK(run("no-such-command") == 2);
}

TEST_CASE("gen-graph is deterministic in its seed") {
    TempDir tmp;
    std::string a = tmp.file("a.col"), b = tmp.file("b.col"), c = tmp.file("c.col");
    CHECK(run("gen-graph --n 15 --k 4 --xi 1.2 --seed 42 -o " + a) == 0);
    CHECK(run("gen-graph --n 15 --k 4 --xi 1.2 --seed 42 -o " + b) == 0);
    CHECK(run("gen-graph --n 15 --k 4 --xi 1.2 --seed 43 -o " + c) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));
}

TEST_CASE("solve, extraction and path sampling round trip through files") {
    TempDir tmp;
    std::string g = tmp.file("g.col"), f = tmp.file("f.cnf"), r = tmp.file("x.robp"),
                csv = tmp.file("paths.csv");
    CHECK(run("gen-graph --n 10 --k 3 --p 0.15 --seed 4 -o " + g) == 0);
    CHECK(run("solve --graph " + g) == 0);
    CHECK(run("solve --graph " + g + " --algo bb") == 0);
    CHECK(run("solve --graph " + g + " --k 3 --blocks --extract " + r) == 0);
    CHECK(run("gen-cnf --graph " + g + " --encoding block --k 3 -o " + f) == 0);
    CHECK(run("verify --cnf " + f + " --robp " + r) == 0);
    CHECK(run("sample-paths --robp " + r + " --cnf " + f + " --s 3 --epsilon 0.2 --samples 20 "
              "--seed 1 -o " + csv) == 0);
    std::string data = slurp(csv);
    CHECK(data.find("sample,ones,sink_clause,forced_ones,useful_pair") == 0);
}

TEST_CASE("check-dense and experiment produce their reports") {
    TempDir tmp;
    std::string g = tmp.file("g.col"), rep = tmp.file("dense.txt"), cfg = tmp.file("cfg.json"),
                csv = tmp.file("rows.csv");
    CHECK(run("gen-graph --n 9 --k 3 --p 0.5 --seed 6 -o " + g) == 0);
    CHECK(run("check-dense --graph " + g + " --k 3 --t 1 --r 1 --q 0.5 --epsilon 0.2 -o " +
              rep) == 0);
    CHECK(slurp(rep).find("property1") != std::string::npos);

    std::ofstream c(cfg);
    c << R"({"ns": [8, 10], "ks": [3], "xi": 1.5, "seeds": [1, 2, 3], "algo": "cliquer",)"
      << R"( "extract": true, "jobs": 2})";
    c.close();
    CHECK(run("experiment --config " + cfg + " -o " + csv) == 0);
    std::string data = slurp(csv);
    CHECK(data.find("n,k,xi,seed,algo,treenodes,robp_nodes,proof_len,verified") == 0);
    // 2 x 1 x 3 instances plus the header
    int lines = 0;
    for (char ch : data)
        if (ch == '\n') ++lines;
    CHECK(lines == 7);
}
