#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kclique/solvers.hpp"

namespace kclique {

struct ExperimentConfig {
    std::vector<int> ns;
    std::vector<int> ks;
    double xi = 1.5;
    std::vector<uint64_t> seeds;
    SolverAlgo algo = SolverAlgo::cliquer;
    bool extract = true;
    int jobs = 1;
};

struct ExperimentRow {
    int n = 0;
    int k = 0;
    double xi = 0;
    uint64_t seed = 0;
    std::string algo;
    long long treenodes = -1;
    long long robp_nodes = -1;
    long long proof_len = -1;
    std::string verified;  // "true" / "false" / "skipped" / "error: ..."
};

// Per instance: sample, reject when a transversal k-clique exists, run the
// decision solver, optionally extract + convert + verify.  Instances run
// independently across `jobs` threads; per-instance failures are recorded in
// the row and the run continues.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

std::string experiment_csv_header();
void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

// JSON config: {"ns": [...], "ks": [...], "xi": 1.5, "seeds": [...] or
// "num_seeds": 30, "algo": "cliquer"|"bb", "extract": true, "jobs": 1}
ExperimentConfig experiment_config_from_json(std::istream& in);

}  // namespace kclique
