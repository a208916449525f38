#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kclique/cnf.hpp"

namespace kclique {

// Node of a branching program.  var == 0 marks a sink carrying a clause index
// into the companion formula; internal nodes query `var` and branch to lo/hi
// on answers 0/1.
struct BpNode {
    int var = 0;
    int lo = -1;
    int hi = -1;
    int clause = -1;
};

class BranchingProgram {
public:
    BranchingProgram() = default;
    explicit BranchingProgram(int num_vars) : num_vars_(num_vars) {}

    int num_vars() const { return num_vars_; }
    void set_num_vars(int nv) { num_vars_ = nv; }

    int add_internal(int var, int lo = -1, int hi = -1);
    int add_sink(int clause);
    void set_children(int id, int lo, int hi);
    void set_root(int id) { root_ = id; }

    int root() const { return root_; }
    int size() const { return (int)nodes_.size(); }
    const BpNode& node(int id) const { return nodes_[id]; }
    bool is_sink(int id) const { return nodes_[id].var == 0; }

    // Root-first topological order over reachable nodes; throws on a cycle or
    // on missing children.
    std::vector<int> topo_order() const;

private:
    std::vector<BpNode> nodes_;
    int root_ = -1;
    int num_vars_ = 0;
};

// Total assignment: index by variable id, entries 0/1.
using TotalAssignment = std::vector<int8_t>;

struct PathState {
    std::vector<int> nodes;     // visited node ids, root..sink
    std::vector<int8_t> answers;  // answer at nodes[i] for i < nodes.size()-1
    PartialAssign assignment;   // over variable ids

    int sink() const { return nodes.back(); }
    int length() const { return (int)nodes.size() - 1; }
};

PathState path_of(const BranchingProgram& p, const TotalAssignment& sigma);

struct Verdict {
    bool ok = true;
    std::string message;
    int where = -1;  // offending node / step when !ok

    explicit operator bool() const { return ok; }
};

Verdict check_read_once(const BranchingProgram& p);

// beta(a) for every reachable node: the queries answered identically along
// every root-to-a path.  Valid for read-once programs (callers check).
// Unreachable nodes get an empty optional slot, marked in `reachable`.
struct BetaTable {
    std::vector<PartialAssign> beta;
    std::vector<char> reachable;
};
BetaTable compute_betas(const BranchingProgram& p);

PartialAssign beta_of(const BranchingProgram& p, int node_id);

// Accepts iff the program is read-once, every sink carries a clause of f, and
// beta(sink) falsifies that clause.  For read-once programs this is
// equivalent to the per-assignment criterion (see docs/robp-formats.md).
Verdict verify_search_program(const BranchingProgram& p, const CnfFormula& f);

// File format (see docs/robp-formats.md):
//   p robp <num_nodes> <root_id> <num_vars>
//   N <id> <var> <id0> <id1>
//   S <id> <clause-index>
void write_robp(std::ostream& out, const BranchingProgram& p);
BranchingProgram read_robp(std::istream& in);
BranchingProgram read_robp_file(const std::string& path);

}  // namespace kclique
