#include <doctest.h>

#include <sstream>

#include "kclique/experiment.hpp"

using namespace kclique;

TEST_CASE("zero-instance config yields just the CSV header") {
    ExperimentConfig cfg;  // no ns/ks/seeds
    auto rows = run_experiment(cfg);
    CHECK(rows.empty());
    std::stringstream ss;
    write_experiment_csv(ss, rows);
    CHECK(ss.str() == experiment_csv_header() + "\n");
}

TEST_CASE("experiment rows verify and respect the simulation overhead") {
    ExperimentConfig cfg;
    cfg.ns = {10, 12};
    cfg.ks = {3};
    cfg.xi = 1.5;
    cfg.seeds = {1, 2, 3, 4, 5};
    cfg.extract = true;
    for (SolverAlgo algo : {SolverAlgo::cliquer, SolverAlgo::bb}) {
        cfg.algo = algo;
        auto rows = run_experiment(cfg);
        CHECK(rows.size() == 10);
        for (const auto& row : rows) {
            if (row.verified == "skipped") continue;
            CHECK(row.verified == "true");
            CHECK(row.proof_len <= row.robp_nodes);
            long long overhead = (1LL << row.k) * row.k * row.k * (long long)row.n * row.n;
            CHECK(row.treenodes >= row.robp_nodes / overhead);
        }
    }
}

TEST_CASE("experiment json config parsing") {
    std::stringstream ss(R"({"ns":[4,6],"ks":[2],"xi":2.0,"num_seeds":3,"algo":"bb",)"
                         R"("extract":false,"jobs":2})");
    ExperimentConfig cfg = experiment_config_from_json(ss);
    CHECK(cfg.ns == std::vector<int>{4, 6});
    CHECK(cfg.ks == std::vector<int>{2});
    CHECK(cfg.xi == doctest::Approx(2.0));
    CHECK(cfg.seeds.size() == 3);
    CHECK(cfg.algo == SolverAlgo::bb);
    CHECK(!cfg.extract);
    CHECK(cfg.jobs == 2);
    std::stringstream bad(R"({"ns":[4],"ks":[2],"algo":"nope"})");
    CHECK_THROWS_AS(experiment_config_from_json(bad), std::invalid_argument);
}
