#include "kclique/experiment.hpp"

#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kclique/er.hpp"
#include "kclique/proof.hpp"

namespace kclique {

namespace {

ExperimentRow run_instance(int n, int k, double xi, uint64_t seed, SolverAlgo algo,
                           bool extract) {
    ExperimentRow row;
    row.n = n;
    row.k = k;
    row.xi = xi;
    row.seed = seed;
    row.algo = algo == SolverAlgo::cliquer ? "cliquer" : "bb";
    try {
        Graph g = sample_er(ErParams::from_xi(n, k, xi, seed));
        Partition part = balanced_partition(n, k);
        if (has_transversal_clique(g, part)) {
            row.verified = "skipped";
            return row;
        }
        if (!extract) {
            SearchStats stats;
            clique_decision(g, k, &part, algo, &stats);
            row.treenodes = stats.nodes_visited;
            row.verified = "true";
            return row;
        }
        ExtractionResult ex = algo == SolverAlgo::cliquer ? extract_robp_cliquer(g, part)
                                                          : extract_robp_maxclique(g, part);
        row.treenodes = ex.tree_nodes;
        row.robp_nodes = ex.program.size();
        Verdict sv = verify_search_program(ex.program, ex.formula);
        ResolutionProof pi = robp_to_refutation(ex.program, ex.formula);
        row.proof_len = pi.length();
        Verdict pv = verify_refutation(pi, ex.formula, /*require_regular=*/true);
        row.verified = (sv.ok && pv.ok) ? "true" : "false";
    } catch (const std::exception& e) {
        row.verified = std::string("error: ") + e.what();
    }
    return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    struct Task {
        int n, k;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int k : cfg.ks)
        for (int n : cfg.ns)
            for (uint64_t seed : cfg.seeds) tasks.push_back(Task{n, k, seed});
    std::vector<ExperimentRow> rows(tasks.size());
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            rows[i] = run_instance(tasks[i].n, tasks[i].k, cfg.xi, tasks[i].seed, cfg.algo,
                                   cfg.extract);
        return rows;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            rows[i] = run_instance(tasks[i].n, tasks[i].k, cfg.xi, tasks[i].seed, cfg.algo,
                                   cfg.extract);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

std::string experiment_csv_header() {
    return "n,k,xi,seed,algo,treenodes,robp_nodes,proof_len,verified";
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << experiment_csv_header() << "\n";
    for (const auto& r : rows) {
        out << r.n << "," << r.k << "," << r.xi << "," << r.seed << "," << r.algo << ",";
        if (r.treenodes >= 0) out << r.treenodes;
        out << ",";
        if (r.robp_nodes >= 0) out << r.robp_nodes;
        out << ",";
        if (r.proof_len >= 0) out << r.proof_len;
        out << "," << r.verified << "\n";
    }
}

ExperimentConfig experiment_config_from_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    ExperimentConfig cfg;
    cfg.ns = j.at("ns").get<std::vector<int>>();
    cfg.ks = j.at("ks").get<std::vector<int>>();
    cfg.xi = j.value("xi", 1.5);
    if (j.contains("seeds")) {
        cfg.seeds = j.at("seeds").get<std::vector<uint64_t>>();
    } else {
        int num = j.value("num_seeds", 30);
        for (int s = 1; s <= num; ++s) cfg.seeds.push_back((uint64_t)s);
    }
    std::string algo = j.value("algo", std::string("cliquer"));
    if (algo == "cliquer")
        cfg.algo = SolverAlgo::cliquer;
    else if (algo == "bb")
        cfg.algo = SolverAlgo::bb;
    else
        throw std::invalid_argument("experiment config: algo must be 'cliquer' or 'bb'");
    cfg.extract = j.value("extract", true);
    cfg.jobs = j.value("jobs", 1);
    return cfg;
}

}  // namespace kclique
