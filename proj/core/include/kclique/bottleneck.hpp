#pragma once

#include <cstdint>
#include <optional>

#include "kclique/denseness.hpp"
#include "kclique/robp.hpp"

namespace kclique {

// Random-path process over a block-encoding search program: answers are
// forced to 0 when the queried vertex's block has been forgotten or when a 1
// would falsify an edge or functionality axiom; otherwise a biased coin with
// P(1) = s^-(1+epsilon) decides.
struct PathSampleConfig {
    double s = 2.0;
    double epsilon = 0.1;
    uint64_t seed = 0;
    std::optional<double> bias_override;  // degenerate-coin experiments

    double bias() const;
};

// Per-node view of a program over block variables: beta, the vertices queried
// on some path, and which blocks are forgotten.  A vertex is forgotten at a
// node when some root-to-node path queries it but beta no longer assigns it;
// a block is forgotten when one of its vertices is.
class NodeSideSets {
public:
    NodeSideSets(const BranchingProgram& p, const Partition& part);

    int num_nodes() const { return (int)beta_.size(); }
    bool reachable(int node) const { return reachable_[node] != 0; }

    const PartialAssign& beta(int node) const { return beta_[node]; }
    // V_i^0 / V_i^1: block-i vertices set to 0 / 1 by beta(node).
    VertexSet zeros(int node, int block) const;
    VertexSet ones(int node, int block) const;
    bool vertex_forgotten(int node, int vertex) const;
    bool block_forgotten(int node, int block) const;
    VertexSet queried_somewhere(int node) const { return queried_some_[node]; }

private:
    Partition part_;
    std::vector<PartialAssign> beta_;
    std::vector<VertexSet> queried_some_;
    std::vector<char> reachable_;
    std::vector<uint64_t> forgotten_;  // per node, bitmask over blocks
};

struct SampledPath {
    PathState path;
    std::vector<int8_t> forced;  // per answered query: 1 if the answer was forced
    int ones = 0;
    int sink_clause = -1;
};

SampledPath sample_path(const BranchingProgram& p, const CnfFormula& f_block,
                        const Partition& part, const Graph& g, const NodeSideSets& sides,
                        const PathSampleConfig& cfg, uint64_t sample_index);

// Useful pair (a, b): some block index i has no 1s at b, is not forgotten at
// b, and the fresh zeros V_i^0(b) \ V_i^0(a) form an (r,q)-dense set.
// Returns the least such index.
std::optional<int> useful_pair_witness(const Graph& g, const Partition& part,
                                       const NodeSideSets& sides, int a, int b, double r,
                                       double q, long long budget = 20'000'000);

// Counts 1-answers on the path segment [a, b) and compares with ceil(k/t).
bool frugal_traversal(const PathState& path, int a, int b, int k, double t);

struct LemmaReport {
    int samples = 0;
    int with_pair = 0;
    double fraction = 0.0;
};

struct UsefulPairParams {
    double r = 0;
    double q = 0;
    double t = 1;
};

// Samples paths and reports the fraction that frugally traverse some useful
// pair (all node pairs along the path are scanned).
LemmaReport check_lemma_legitimate(const BranchingProgram& p, const CnfFormula& f_block,
                                   const Partition& part, const Graph& g,
                                   const UsefulPairParams& params, int samples,
                                   const PathSampleConfig& cfg,
                                   long long budget = 20'000'000);

// Complete decision tree over the block variables in ascending id order; each
// leaf outputs the first clause its total assignment falsifies.  Testing
// plumbing so the distribution can run on programs independent of the
// solver extractions.  Requires num_vars <= 20.
BranchingProgram build_decision_tree_program(const CnfFormula& f_block);

}  // namespace kclique
