#include "kclique/robp.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kclique {

int BranchingProgram::add_internal(int var, int lo, int hi) {
    if (var < 1 || var > num_vars_) throw std::invalid_argument("robp: bad query variable");
    nodes_.push_back(BpNode{var, lo, hi, -1});
    return (int)nodes_.size() - 1;
}

int BranchingProgram::add_sink(int clause) {
    if (clause < 0) throw std::invalid_argument("robp: bad sink clause index");
    nodes_.push_back(BpNode{0, -1, -1, clause});
    return (int)nodes_.size() - 1;
}

void BranchingProgram::set_children(int id, int lo, int hi) {
    nodes_[id].lo = lo;
    nodes_[id].hi = hi;
}

std::vector<int> BranchingProgram::topo_order() const {
    if (root_ < 0 || root_ >= size()) throw std::runtime_error("robp: missing root");
    // iterative DFS with colouring; detects cycles
    std::vector<int8_t> state(size(), 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> order;
    std::vector<std::pair<int, int>> stack;  // (node, next-child 0/1/2)
    stack.emplace_back(root_, 0);
    state[root_] = 1;
    while (!stack.empty()) {
        auto& [id, phase] = stack.back();
        if (is_sink(id) || phase == 2) {
            state[id] = 2;
            order.push_back(id);
            stack.pop_back();
            continue;
        }
        int child = phase == 0 ? nodes_[id].lo : nodes_[id].hi;
        ++phase;
        if (child < 0 || child >= size())
            throw std::runtime_error("robp: internal node with missing child");
        if (state[child] == 1) throw std::runtime_error("robp: cycle detected");
        if (state[child] == 0) {
            state[child] = 1;
            stack.emplace_back(child, 0);
        }
    }
    std::reverse(order.begin(), order.end());  // root first
    return order;
}

PathState path_of(const BranchingProgram& p, const TotalAssignment& sigma) {
    PathState st;
    st.assignment = PartialAssign(p.num_vars() + 1);
    int cur = p.root();
    if (cur < 0) throw std::runtime_error("robp: missing root");
    st.nodes.push_back(cur);
    int guard = p.size() + 1;
    while (!p.is_sink(cur)) {
        if (--guard < 0) throw std::runtime_error("robp: path longer than node count (cycle?)");
        const BpNode& nd = p.node(cur);
        if (nd.var >= (int)sigma.size())
            throw std::invalid_argument("path_of: assignment does not cover all variables");
        bool bit = sigma[nd.var] != 0;
        st.answers.push_back(bit ? 1 : 0);
        st.assignment.set(nd.var, bit);
        cur = bit ? nd.hi : nd.lo;
        st.nodes.push_back(cur);
    }
    return st;
}

Verdict check_read_once(const BranchingProgram& p) {
    auto order = p.topo_order();
    // queried_some[a]: variables queried on some root-to-a path
    std::vector<VertexSet> queried(p.size());
    int nv = p.num_vars() + 1;
    for (int id : order)
        queried[id] = VertexSet(nv);
    for (int id : order) {
        if (p.is_sink(id)) continue;
        const BpNode& nd = p.node(id);
        if (queried[id].test(nd.var))
            return Verdict{false, "variable " + std::to_string(nd.var) +
                                      " re-queried at node " + std::to_string(id),
                           id};
        VertexSet ext = queried[id];
        ext.set(nd.var);
        for (int child : {nd.lo, nd.hi}) queried[child] |= ext;
    }
    return {};
}

BetaTable compute_betas(const BranchingProgram& p) {
    auto order = p.topo_order();
    BetaTable t;
    t.beta.assign(p.size(), PartialAssign());
    t.reachable.assign(p.size(), 0);
    int nv = p.num_vars() + 1;
    t.beta[p.root()] = PartialAssign(nv);
    t.reachable[p.root()] = 1;
    for (int id : order) {
        if (p.is_sink(id)) continue;
        const BpNode& nd = p.node(id);
        for (int which = 0; which < 2; ++which) {
            int child = which ? nd.hi : nd.lo;
            PartialAssign ext = t.beta[id];
            ext.set(nd.var, which != 0);
            if (!t.reachable[child]) {
                t.beta[child] = std::move(ext);
                t.reachable[child] = 1;
            } else {
                t.beta[child].meet(ext);
            }
        }
    }
    return t;
}

PartialAssign beta_of(const BranchingProgram& p, int node_id) {
    auto t = compute_betas(p);
    if (node_id < 0 || node_id >= p.size() || !t.reachable[node_id])
        throw std::invalid_argument("beta_of: node unreachable from root");
    return t.beta[node_id];
}

Verdict verify_search_program(const BranchingProgram& p, const CnfFormula& f) {
    Verdict ro = check_read_once(p);
    if (!ro) return ro;
    BetaTable t = compute_betas(p);
    for (int id = 0; id < p.size(); ++id) {
        if (!t.reachable[id] || !p.is_sink(id)) continue;
        int ci = p.node(id).clause;
        if (ci < 0 || ci >= f.size())
            return Verdict{false, "sink " + std::to_string(id) + " labels a clause outside the formula",
                           id};
        const Clause& c = f.clause(ci);
        for (Lit l : c) {
            int v = lit_var(l);
            if (!t.beta[id].has(v) || t.beta[id].val(v) == lit_positive(l))
                return Verdict{false,
                               "sink " + std::to_string(id) + ": beta does not falsify literal " +
                                   std::to_string(l) + " of clause " + std::to_string(ci),
                               id};
        }
    }
    return {};
}

void write_robp(std::ostream& out, const BranchingProgram& p) {
    out << "p robp " << p.size() << " " << p.root() << " " << p.num_vars() << "\n";
    for (int id = 0; id < p.size(); ++id) {
        const BpNode& nd = p.node(id);
        if (p.is_sink(id))
            out << "S " << id << " " << nd.clause << "\n";
        else
            out << "N " << id << " " << nd.var << " " << nd.lo << " " << nd.hi << "\n";
    }
}

BranchingProgram read_robp(std::istream& in) {
    std::string line;
    int count = -1, root = -1, nv = 0;
    std::vector<BpNode> nodes;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        if (tok == "p") {
            std::string fmt;
            ss >> fmt >> count >> root >> nv;
            if (fmt != "robp") throw std::runtime_error("robp: expected 'p robp'");
            if (count < 0) throw std::runtime_error("robp: negative node count");
            nodes.assign(count, BpNode{});
        } else if (tok == "N" || tok == "S") {
            if (count < 0) throw std::runtime_error("robp: node line before header");
            int id;
            ss >> id;
            if (id < 0 || id >= count) throw std::runtime_error("robp: node id out of range");
            if (tok == "N") {
                int var, lo, hi;
                ss >> var >> lo >> hi;
                nodes[id] = BpNode{var, lo, hi, -1};
            } else {
                int clause;
                ss >> clause;
                nodes[id] = BpNode{0, -1, -1, clause};
            }
        }
    }
    if (count < 0) throw std::runtime_error("robp: missing header");
    BranchingProgram p(nv);
    for (int i = 0; i < count; ++i) {
        if (nodes[i].var == 0)
            p.add_sink(nodes[i].clause);
        else
            p.add_internal(nodes[i].var, nodes[i].lo, nodes[i].hi);
    }
    p.set_root(root);
    return p;
}

BranchingProgram read_robp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open robp file: " + path);
    return read_robp(in);
}

}  // namespace kclique
