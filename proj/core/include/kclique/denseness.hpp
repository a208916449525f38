#pragma once

#include <optional>
#include <vector>

#include "kclique/graph.hpp"

namespace kclique {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter bundle for the density machinery.  Radii r and r' are real
// valued; subset enumeration uses their floors.
struct DensenessParams {
    int k = 0;
    double t = 0;
    double r = 0;
    double r_prime = 0;  // t * r
    double s = 0;
    double epsilon = 0;
    double q = 0;
    double q_prime = 0;  // epsilon * r * s^(1+epsilon) * log(s)
    double xi = 0;
    double delta = 0;    // 2 * xi / (k - 1)
};

// t = 32*xi/eps, s = sqrt(n), r = 4k/t^2, q = n^(1 - t*delta*r) / (4kt),
// q' = eps*r*s^(1+eps)*log(s), delta = 2*xi/(k-1).  Logs are natural.
DensenessParams derive_parameters(int n, int k, double xi, double epsilon);

// |N^(R, W)| >= q.
bool is_neighbour_dense_for(const Graph& g, const VertexSet& w, const VertexSet& r_set,
                            double q);

struct DenseCheck {
    bool ok = true;
    std::optional<VertexSet> counterexample;
};

// W is (r,q)-neighbour-dense: every R of size <= r has at least q common
// neighbours inside W.  R ranges over all vertex subsets, not just cliques.
DenseCheck is_r_q_dense(const Graph& g, const VertexSet& w, double r, double q,
                        long long budget = 20'000'000);

// W is mostly neighbour-dense with witness s_set: every R of size <= r_prime
// whose common neighbourhood in W drops below q_prime meets s_set in at least
// r vertices.
DenseCheck check_mostly_dense(const Graph& g, const VertexSet& w, const VertexSet& s_set,
                              double r_prime, double r, double q_prime,
                              long long budget = 20'000'000);

// Greedy witness: scan nonempty subsets of size <= r_prime in
// size-lexicographic order, keep each R with |N^(R,W)| <= q_prime that
// overlaps the union so far in at most r vertices, and return the union.
VertexSet greedy_witness(const Graph& g, const VertexSet& w, double r_prime, double r,
                         double q_prime, long long budget = 20'000'000);

struct WCandidates {
    bool exhaustive = false;            // all 2^n subsets (n <= 16)
    std::vector<VertexSet> list;        // used when !exhaustive
};

struct BlockDenseResult {
    int block = -1;
    bool ok = true;
    std::optional<VertexSet> counterexample;
};

struct WitnessResult {
    VertexSet w;
    bool relevant = false;   // W was (r,q)-dense, so property 2 applies
    bool ok = true;          // witness small enough and localizing
    VertexSet witness;
    std::optional<VertexSet> counterexample;
};

struct DensenessReport {
    bool property1 = true;   // all blocks (t*r, t*q)-dense
    bool property2 = true;   // every dense candidate W has a small witness
    bool clique_dense = true;
    std::vector<BlockDenseResult> blocks;
    std::vector<WitnessResult> w_results;
};

// Two-property check behind the hardness condition: blocks must be
// (t*r, t*q)-dense, and every (r,q)-dense candidate W must admit a witness of
// size <= s for (t*r, r, q')-mostly-denseness.
DensenessReport is_clique_dense(const Graph& g, const Partition& part,
                                const DensenessParams& params, const WCandidates& cand,
                                long long budget = 20'000'000);

}  // namespace kclique
