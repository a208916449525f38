#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kclique/graph.hpp"
#include "kclique/robp.hpp"

namespace kclique {

struct SearchStats {
    long long expand_calls = 0;
    long long nodes_visited = 0;
    long long size_cuts = 0;
    long long bound_cuts = 0;    // russian-doll bounds[] cuts
    long long colour_cuts = 0;
    std::vector<int> incumbent_history;
};

struct TraceEvent {
    enum Kind : uint8_t {
        enter, take, exclude, cut_size, cut_bounds, cut_colour, record, bounds_set, leave
    };
    Kind kind;
    int vertex = -1;  // -1 when not applicable
    int value = -1;   // bounds_set: the recorded bound
};

struct SolverTrace {
    std::vector<TraceEvent> events;
};

struct SolverOptions {
    bool record_trace = true;
    bool disable_prunes = false;  // prune-soundness testing only
};

struct CliqueResult {
    std::vector<int> clique;
    SearchStats stats;
    SolverTrace trace;
    std::vector<int> order;   // vertex order the solver used (position -> vertex)
    std::vector<int> bounds;  // russian-doll solver: max clique size within suffix i of order
};

// Russian-doll branch and bound: suffix subinstances are solved in ascending
// size, and bounds[i] prunes later expansions.  Vertex order is descending
// degeneracy.
CliqueResult cliquer(const Graph& g, const SolverOptions& opts = {});

// Colour-bound branch and bound: each expansion orders its candidates by a
// greedy colouring and cuts when the growing clique plus the colour count of
// the remaining prefix cannot beat the incumbent.
CliqueResult max_clique_bb(const Graph& g, const SolverOptions& opts = {});

// Greedy sequential colouring of the whole graph in degeneracy order; the
// returned order groups vertices by colour class ascending and bounds[i] is
// the number of classes among order[0..i].  bounds[i] upper-bounds the clique
// number of that prefix.
std::pair<std::vector<int>, std::vector<int>> colour_order(const Graph& g);

enum class SolverAlgo { cliquer, bb };

// Decision variant: stop as soon as a clique of size k is found.  With a
// partition the search runs on the block graph, so it decides the existence
// of a transversal k-clique.
bool clique_decision(const Graph& g, int k, const Partition* part = nullptr,
                     SolverAlgo algo = SolverAlgo::cliquer, SearchStats* stats = nullptr);

struct SpliceInfo {
    int universe_size = 0;  // |V(H)| at the cut
    int budget = 0;         // residual clique size q
    long long nodes = 0;    // nodes of the spliced subprogram
};

struct ExtractionResult {
    BranchingProgram program;
    CnfFormula formula;  // the block encoding the program is verified against
    long long tree_nodes = 0;  // node count of the simulated search tree
    std::vector<SpliceInfo> splices;  // max_clique_bb extraction only
};

// Rebuilds the russian-doll decision run over the block graph as a read-once
// search program for the block encoding.  Queries follow the run's fixed
// (block, id) vertex order; each exhausted branch is completed by querying
// the vertices the run skipped, whose 1 answers hit an axiom against the
// clique member that dropped them.  Cut branches of the run are replayed
// without the cut (a continuation shared below a cut cannot label its sinks
// consistently), so the program can be larger than the run's search tree by
// a factor bounded by the weaving chains.  tree_nodes reports the pruned
// run's own node count.  Requires that (g, part) has no transversal clique.
ExtractionResult extract_robp_cliquer(const Graph& g, const Partition& part);

// Rebuilds the colour-bound decision run: the search tree is simulated
// directly, and each colour-cut leaf splices in a private subprogram that
// refutes the residual clique over the untouched candidate set, so the whole
// program stays read-once.
ExtractionResult extract_robp_maxclique(const Graph& g, const Partition& part);

}  // namespace kclique
