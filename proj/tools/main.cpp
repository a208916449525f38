// Command-line front end: graph/CNF generation, proof construction and
// verification, the two solvers with trace extraction, density checking,
// path sampling, and the scaling experiment harness.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kclique/bottleneck.hpp"
#include "kclique/construct.hpp"
#include "kclique/er.hpp"
#include "kclique/experiment.hpp"
#include "kclique/proof.hpp"

using namespace kclique;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    writer(out);
}

// The block encoding's clique axioms are its only all-positive clauses, so a
// block CNF determines its partition.
Partition partition_from_block_cnf(const CnfFormula& f) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < f.size(); ++i) {
        bool all_pos = f.clause(i).width() > 0;
        for (Lit l : f.clause(i))
            if (!lit_positive(l)) all_pos = false;
        if (!all_pos) continue;
        std::vector<int> blk;
        for (Lit l : f.clause(i)) blk.push_back(l - 1);
        blocks.push_back(std::move(blk));
    }
    return make_partition(f.num_vars(), blocks);
}

int cmd_gen_graph(int n, int k, double xi, uint64_t seed, double p_override,
                  const std::string& out) {
    ErParams params = p_override >= 0 ? ErParams::with_p(n, p_override, seed)
                                      : ErParams::from_xi(n, k, xi, seed);
    Graph g = sample_er(params);
    emit(out, [&](std::ostream& os) {
        os << "c er n=" << params.n << " p=" << params.p << " seed=" << params.seed << "\n";
        write_dimacs_graph(os, g);
    });
    return kExitOk;
}

int cmd_gen_cnf(const std::string& graph_path, const std::string& encoding, int k,
                const std::string& out) {
    Graph g = read_dimacs_graph_file(graph_path);
    CnfFormula f;
    if (encoding == "map") {
        f = encode_clique(g, k, true);
    } else if (encoding == "weak") {
        f = encode_clique(g, k, false);
    } else if (encoding == "block") {
        f = encode_clique_block(g, balanced_partition(g.n(), k));
    } else {
        throw CLI::ValidationError("--encoding must be map, weak or block");
    }
    emit(out, [&](std::ostream& os) { write_dimacs(os, f); });
    return kExitOk;
}

int cmd_build_proof(const std::string& graph_path, int k, const std::string& method,
                    const std::string& target_path, const std::string& map_path,
                    const std::string& proof_out, const std::string& robp_out) {
    Graph g = read_dimacs_graph_file(graph_path);
    ResolutionProof pi;
    if (method == "alg1") {
        BranchingProgram prog = build_search_program(g, k);
        if (!robp_out.empty()) emit(robp_out, [&](std::ostream& os) { write_robp(os, prog); });
        pi = robp_to_refutation(prog, encode_clique(g, k, false));
    } else if (method == "colour") {
        std::vector<int> colouring = greedy_colouring(g);
        int classes = 0;
        for (int c : colouring) classes = std::max(classes, c + 1);
        if (classes > k - 1)
            throw std::runtime_error("greedy colouring needs " + std::to_string(classes) +
                                     " colours; not (k-1)-colourable this way");
        pi = refute_colourable(g, colouring, k);
    } else if (method == "hom") {
        if (target_path.empty() || map_path.empty())
            throw CLI::ValidationError("--method hom needs --target and --map");
        Graph h = read_dimacs_graph_file(target_path);
        Homomorphism hom(g.n(), -1);
        std::ifstream mf(map_path);
        if (!mf) throw std::runtime_error("cannot open map file: " + map_path);
        int v, hv;
        while (mf >> v >> hv) hom.at(v) = hv;
        pi = refute_homomorphic(g, h, hom, k);
    } else {
        throw CLI::ValidationError("--method must be alg1, colour or hom");
    }
    emit(proof_out, [&](std::ostream& os) { write_proof(os, pi); });
    std::cerr << "proof length " << pi.length() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& cnf_path, const std::string& proof_path,
               const std::string& robp_path, bool regular) {
    CnfFormula f = read_dimacs_file(cnf_path);
    bool ok = true;
    if (!proof_path.empty()) {
        Verdict v = verify_refutation(read_proof_file(proof_path), f, regular);
        if (!v) std::cerr << "refutation rejected: " << v.message << "\n";
        ok = ok && v.ok;
    }
    if (!robp_path.empty()) {
        Verdict v = verify_search_program(read_robp_file(robp_path), f);
        if (!v) std::cerr << "search program rejected: " << v.message << "\n";
        ok = ok && v.ok;
    }
    std::cout << (ok ? "verified" : "FAILED") << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_solve(const std::string& graph_path, const std::string& algo, int k, bool blocks,
              const std::string& extract_path) {
    Graph g = read_dimacs_graph_file(graph_path);
    SolverAlgo a = algo == "bb" ? SolverAlgo::bb : SolverAlgo::cliquer;
    if (!extract_path.empty()) {
        if (!blocks || k <= 0) throw CLI::ValidationError("--extract needs --blocks and --k");
        Partition part = balanced_partition(g.n(), k);
        ExtractionResult ex = a == SolverAlgo::cliquer ? extract_robp_cliquer(g, part)
                                                       : extract_robp_maxclique(g, part);
        emit(extract_path, [&](std::ostream& os) { write_robp(os, ex.program); });
        Verdict v = verify_search_program(ex.program, ex.formula);
        std::cout << "treenodes " << ex.tree_nodes << " robp_nodes " << ex.program.size()
                  << " verified " << (v.ok ? "true" : "false") << "\n";
        return v.ok ? kExitOk : kExitVerifyFail;
    }
    if (k > 0) {
        Partition part = blocks ? balanced_partition(g.n(), k) : Partition{};
        SearchStats stats;
        bool found = clique_decision(g, k, blocks ? &part : nullptr, a, &stats);
        std::cout << (found ? "clique found" : "no clique") << " nodes " << stats.nodes_visited
                  << "\n";
        return kExitOk;
    }
    CliqueResult res = a == SolverAlgo::cliquer ? cliquer(g) : max_clique_bb(g);
    std::cout << "max clique size " << res.clique.size() << " nodes " << res.stats.nodes_visited
              << "\nclique:";
    for (int v : res.clique) std::cout << " " << v;
    std::cout << "\n";
    return kExitOk;
}

int cmd_check_dense(const std::string& graph_path, int k, double xi, double epsilon, double t,
                    double r, double q, double q_prime, double s, bool exhaustive,
                    const std::string& w_file, long long budget, const std::string& out) {
    Graph g = read_dimacs_graph_file(graph_path);
    DensenessParams params;
    if (t > 0 || r > 0 || q > 0) {
        // user-supplied override mode: the property quantifies over r, q
        params.k = k;
        params.t = t > 0 ? t : 1.0;
        params.r = r > 0 ? r : 1.0;
        params.r_prime = params.t * params.r;
        params.s = s > 0 ? s : std::sqrt((double)g.n());
        params.epsilon = epsilon;
        params.xi = xi;
        params.q = q;
        params.q_prime = q_prime > 0 ? q_prime
                                     : epsilon * params.r * std::pow(params.s, 1.0 + epsilon) *
                                           std::log(params.s);
        params.delta = k >= 2 ? 2.0 * xi / (k - 1) : 0.0;
    } else {
        params = derive_parameters(g.n(), k, xi, epsilon);
    }
    Partition part = balanced_partition(g.n(), k);
    WCandidates cand;
    cand.exhaustive = exhaustive;
    if (!w_file.empty()) {
        std::ifstream wf(w_file);
        if (!wf) throw std::runtime_error("cannot open W file: " + w_file);
        std::string line;
        while (std::getline(wf, line)) {
            if (line.empty() || line[0] == 'c') continue;
            std::istringstream ss(line);
            VertexSet w(g.n());
            int v;
            while (ss >> v) w.set(v);
            cand.list.push_back(w);
        }
    }
    DensenessReport rep = is_clique_dense(g, part, params, cand, budget);
    emit(out, [&](std::ostream& os) {
        os << "params t=" << params.t << " r=" << params.r << " r'=" << params.r_prime
           << " s=" << params.s << " q=" << params.q << " q'=" << params.q_prime
           << " delta=" << params.delta << "\n";
        for (const auto& b : rep.blocks) {
            os << "block " << b.block << " (t*r,t*q)-dense: " << (b.ok ? "yes" : "no");
            if (b.counterexample) {
                os << " counterexample R = {";
                bool first = true;
                b.counterexample->for_each([&](int v) {
                    os << (first ? "" : " ") << v;
                    first = false;
                });
                os << "}";
            }
            os << "\n";
        }
        int relevant = 0, failed = 0;
        for (const auto& w : rep.w_results) {
            if (!w.relevant) continue;
            ++relevant;
            if (!w.ok) ++failed;
        }
        os << "dense W candidates checked: " << relevant << ", witness failures: " << failed
           << "\n";
        os << "property1 " << (rep.property1 ? "holds" : "fails") << ", property2 "
           << (rep.property2 ? "holds" : "fails") << "\n";
        os << "csv,n,k,property1,property2,clique_dense\ncsv," << g.n() << "," << k << ","
           << rep.property1 << "," << rep.property2 << "," << rep.clique_dense << "\n";
    });
    return kExitOk;
}

int cmd_sample_paths(const std::string& robp_path, const std::string& cnf_path,
                     const std::string& graph_path, double s, double epsilon, int samples,
                     uint64_t seed, bool zero_bias, double r, double q, double t,
                     const std::string& out) {
    BranchingProgram prog = read_robp_file(robp_path);
    CnfFormula f = read_dimacs_file(cnf_path);
    Partition part = partition_from_block_cnf(f);
    Graph g = graph_path.empty() ? Graph(part.n()) : read_dimacs_graph_file(graph_path);
    bool with_pairs = !graph_path.empty() && q > 0;
    PathSampleConfig cfg;
    cfg.s = s;
    cfg.epsilon = epsilon;
    cfg.seed = seed;
    if (zero_bias) cfg.bias_override = 0.0;
    NodeSideSets sides(prog, part);
    emit(out, [&](std::ostream& os) {
        os << "sample,ones,sink_clause,forced_ones,useful_pair\n";
        for (int i = 0; i < samples; ++i) {
            SampledPath sp = sample_path(prog, f, part, g, sides, cfg, (uint64_t)i);
            int forced_ones = 0;
            for (size_t j = 0; j < sp.forced.size(); ++j)
                if (sp.forced[j] && sp.path.answers[j]) ++forced_ones;
            std::string pair;
            if (with_pairs) {
                bool found = false;
                const auto& nodes = sp.path.nodes;
                for (size_t ia = 0; ia < nodes.size() && !found; ++ia)
                    for (size_t ib = ia; ib < nodes.size() && !found; ++ib)
                        if (frugal_traversal(sp.path, nodes[ia], nodes[ib], part.k(), t) &&
                            useful_pair_witness(g, part, sides, nodes[ia], nodes[ib], r, q))
                            found = true;
                pair = found ? "1" : "0";
            }
            os << i << "," << sp.ones << "," << sp.sink_clause << "," << forced_ones << ","
               << pair << "\n";
        }
    });
    return kExitOk;
}

int cmd_experiment(const std::string& config_path, int jobs, const std::string& out) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + config_path);
    ExperimentConfig cfg = experiment_config_from_json(in);
    if (jobs > 0) cfg.jobs = jobs;
    auto rows = run_experiment(cfg);
    emit(out, [&](std::ostream& os) { write_experiment_csv(os, rows); });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-clique formulas, branching programs and refutations"};
    app.require_subcommand(1);

    auto* gg = app.add_subcommand("gen-graph", "sample a seeded random graph");
    int gg_n = 10, gg_k = 3;
    double gg_xi = 1.5, gg_p = -1;
    uint64_t gg_seed = 1;
    std::string gg_out;
    gg->add_option("--n", gg_n, "vertex count")->required();
    gg->add_option("--k", gg_k, "clique parameter (sets p = n^(-2 xi/(k-1)))");
    gg->add_option("--xi", gg_xi, "density parameter xi");
    gg->add_option("--seed", gg_seed, "sampler seed");
    gg->add_option("--p", gg_p, "explicit edge probability (overrides k, xi)");
    gg->add_option("--out,-o", gg_out, "output file (default stdout)");

    auto* gc = app.add_subcommand("gen-cnf", "encode a k-clique formula");
    std::string gc_graph, gc_encoding = "map", gc_out;
    int gc_k = 3;
    gc->add_option("--graph", gc_graph, "DIMACS graph file")->required();
    gc->add_option("--encoding", gc_encoding, "map | weak | block");
    gc->add_option("--k", gc_k, "clique size")->required();
    gc->add_option("--out,-o", gc_out, "output file (default stdout)");

    auto* bp = app.add_subcommand("build-proof", "construct a regular refutation");
    std::string bp_graph, bp_method = "alg1", bp_target, bp_map, bp_out, bp_robp;
    int bp_k = 3;
    bp->add_option("--graph", bp_graph, "DIMACS graph file")->required();
    bp->add_option("--k", bp_k, "clique size")->required();
    bp->add_option("--method", bp_method, "alg1 | colour | hom");
    bp->add_option("--target", bp_target, "homomorphism target graph (hom method)");
    bp->add_option("--map", bp_map, "vertex map file, lines '<v> <h(v)>' (hom method)");
    bp->add_option("--out,-o", bp_out, "proof output (default stdout)");
    bp->add_option("--robp", bp_robp, "also write the search program (alg1 method)");

    auto* vf = app.add_subcommand("verify", "check a refutation or search program");
    std::string vf_cnf, vf_proof, vf_robp;
    bool vf_noreg = false;
    vf->add_option("--cnf", vf_cnf, "DIMACS CNF file")->required();
    vf->add_option("--proof", vf_proof, "refutation file");
    vf->add_option("--robp", vf_robp, "search program file");
    vf->add_flag("--no-regular", vf_noreg, "skip the regularity check");

    auto* sv = app.add_subcommand("solve", "run a clique solver");
    std::string sv_graph, sv_algo = "cliquer", sv_extract;
    int sv_k = 0;
    bool sv_blocks = false;
    sv->add_option("--graph", sv_graph, "DIMACS graph file")->required();
    sv->add_option("--algo", sv_algo, "cliquer | bb");
    sv->add_option("--k", sv_k, "decision mode: search for a k-clique");
    sv->add_flag("--blocks", sv_blocks, "transversal mode over the balanced k-partition");
    sv->add_option("--extract", sv_extract, "write the extracted search program here");

    auto* cd = app.add_subcommand("check-dense", "density property checks");
    std::string cd_graph, cd_wfile, cd_out;
    int cd_k = 3;
    double cd_xi = 1.5, cd_eps = 0.2, cd_t = 0, cd_r = 0, cd_q = 0, cd_qp = 0, cd_s = 0;
    long long cd_budget = 20'000'000;
    if (const char* env = std::getenv("KCLIQUE_BUDGET")) cd_budget = std::atoll(env);
    bool cd_exhaustive = false;
    cd->add_option("--graph", cd_graph, "DIMACS graph file")->required();
    cd->add_option("--k", cd_k, "block count")->required();
    cd->add_option("--xi", cd_xi, "density parameter");
    cd->add_option("--epsilon", cd_eps, "epsilon in (0, 1/4)");
    cd->add_option("--t", cd_t, "override t");
    cd->add_option("--r", cd_r, "override r");
    cd->add_option("--q", cd_q, "override q");
    cd->add_option("--q-prime", cd_qp, "override q'");
    cd->add_option("--s", cd_s, "override s");
    cd->add_flag("--exhaustive", cd_exhaustive, "scan all W subsets (n <= 16)");
    cd->add_option("--w-file", cd_wfile, "file with one W per line (vertex ids)");
    cd->add_option("--budget", cd_budget, "subset enumeration budget");
    cd->add_option("--out,-o", cd_out, "output file (default stdout)");

    auto* sp = app.add_subcommand("sample-paths", "sample the random-path distribution");
    std::string sp_robp, sp_cnf, sp_graph, sp_out;
    double sp_s = 2.0, sp_eps = 0.1, sp_r = 0, sp_q = 0, sp_t = 1;
    int sp_samples = 1000;
    uint64_t sp_seed = 1;
    bool sp_zero = false;
    sp->add_option("--robp", sp_robp, "search program file")->required();
    sp->add_option("--cnf", sp_cnf, "block-encoding CNF file")->required();
    sp->add_option("--s", sp_s, "bias scale s");
    sp->add_option("--epsilon", sp_eps, "bias exponent epsilon");
    sp->add_option("--samples", sp_samples, "number of paths");
    sp->add_option("--seed", sp_seed, "sampler seed");
    sp->add_option("--graph", sp_graph, "graph file (enables useful-pair detection)");
    sp->add_option("--r", sp_r, "useful-pair radius r");
    sp->add_option("--q", sp_q, "useful-pair density q");
    sp->add_option("--t", sp_t, "frugality pieces t");
    sp->add_flag("--zero-bias", sp_zero, "force all unforced answers to 0");
    sp->add_option("--out,-o", sp_out, "CSV output (default stdout)");

    auto* ex = app.add_subcommand("experiment", "scaling experiment from a JSON config");
    std::string ex_config, ex_out;
    int ex_jobs = 0;
    ex->add_option("--config", ex_config, "JSON config file")->required();
    ex->add_option("--jobs", ex_jobs, "worker threads (overrides the config)");
    ex->add_option("--out,-o", ex_out, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gg->parsed()) return cmd_gen_graph(gg_n, gg_k, gg_xi, gg_seed, gg_p, gg_out);
        if (gc->parsed()) return cmd_gen_cnf(gc_graph, gc_encoding, gc_k, gc_out);
        if (bp->parsed())
            return cmd_build_proof(bp_graph, bp_k, bp_method, bp_target, bp_map, bp_out, bp_robp);
        if (vf->parsed()) return cmd_verify(vf_cnf, vf_proof, vf_robp, !vf_noreg);
        if (sv->parsed()) return cmd_solve(sv_graph, sv_algo, sv_k, sv_blocks, sv_extract);
        if (cd->parsed())
            return cmd_check_dense(cd_graph, cd_k, cd_xi, cd_eps, cd_t, cd_r, cd_q, cd_qp, cd_s,
                                   cd_exhaustive, cd_wfile, cd_budget, cd_out);
        if (sp->parsed())
            return cmd_sample_paths(sp_robp, sp_cnf, sp_graph, sp_s, sp_eps, sp_samples, sp_seed,
                                    sp_zero, sp_r, sp_q, sp_t, sp_out);
        if (ex->parsed()) return cmd_experiment(ex_config, ex_jobs, ex_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
