#include "kclique/bottleneck.hpp"

#include <cmath>

#include "kclique/er.hpp"

namespace kclique {

double PathSampleConfig::bias() const {
    if (bias_override) return *bias_override;
    if (!(s > 1.0)) throw std::invalid_argument("path sample: s > 1 required");
    double b = std::pow(s, -(1.0 + epsilon));
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("path sample: bias outside (0,1)");
    return b;
}

NodeSideSets::NodeSideSets(const BranchingProgram& p, const Partition& part) : part_(part) {
    Verdict ro = check_read_once(p);
    if (!ro) throw std::invalid_argument("side_sets: program is not read-once: " + ro.message);
    if (p.num_vars() != part.n())
        throw std::invalid_argument("side_sets: program variables must be block variables");
    BetaTable t = compute_betas(p);
    beta_ = std::move(t.beta);
    reachable_.assign(t.reachable.begin(), t.reachable.end());
    int nv = p.num_vars() + 1;
    queried_some_.assign(p.size(), VertexSet());
    forgotten_.assign(p.size(), 0);
    if (part.k() > 64) throw std::invalid_argument("side_sets: at most 64 blocks supported");
    auto order = p.topo_order();
    for (int id : order) queried_some_[id] = VertexSet(nv);
    for (int id : order) {
        if (p.is_sink(id)) continue;
        const BpNode& nd = p.node(id);
        VertexSet ext = queried_some_[id];
        ext.set(nd.var);
        for (int child : {nd.lo, nd.hi}) queried_some_[child] |= ext;
    }
    for (int id : order) {
        uint64_t mask = 0;
        const VertexSet& seen = queried_some_[id];
        for (int var = seen.next(0); var >= 0; var = seen.next(var + 1)) {
            if (!beta_[id].has(var)) mask |= 1ULL << part.block_of[var - 1];
        }
        forgotten_[id] = mask;
    }
}

VertexSet NodeSideSets::zeros(int node, int block) const {
    VertexSet out(part_.n());
    VertexSet z = beta_[node].zeros();
    for (int v : part_.blocks[block])
        if (z.test(v + 1)) out.set(v);
    return out;
}

VertexSet NodeSideSets::ones(int node, int block) const {
    VertexSet out(part_.n());
    VertexSet o = beta_[node].ones();
    for (int v : part_.blocks[block])
        if (o.test(v + 1)) out.set(v);
    return out;
}

bool NodeSideSets::vertex_forgotten(int node, int vertex) const {
    return queried_some_[node].test(vertex + 1) && !beta_[node].has(vertex + 1);
}

bool NodeSideSets::block_forgotten(int node, int block) const {
    return (forgotten_[node] >> block) & 1ULL;
}

SampledPath sample_path(const BranchingProgram& p, const CnfFormula& f_block,
                        const Partition& part, const Graph& g, const NodeSideSets& sides,
                        const PathSampleConfig& cfg, uint64_t sample_index) {
    double bias = cfg.bias_override ? *cfg.bias_override : cfg.bias();
    // per-sample counter-based stream
    uint64_t stream = splitmix64(cfg.seed ^ splitmix64(sample_index));
    uint64_t counter = 0;
    auto coin = [&]() {
        uint64_t h = splitmix64(stream ^ splitmix64(++counter));
        double unit = (double)(h >> 11) * 0x1.0p-53;
        return unit < bias;
    };

    Graph gb = block_graph(g, part);
    SampledPath out;
    out.path.assignment = PartialAssign(p.num_vars() + 1);
    int cur = p.root();
    out.path.nodes.push_back(cur);
    while (!p.is_sink(cur)) {
        const BpNode& nd = p.node(cur);
        int u = nd.var - 1;  // queried vertex
        bool forced = false;
        bool answer;
        if (sides.block_forgotten(cur, part.block_of[u])) {
            forced = true;
            answer = false;
        } else {
            // would x_u = 1 falsify an edge or functionality axiom given beta?
            VertexSet ones = sides.beta(cur).ones();  // over variable ids
            VertexSet conflict(g.n());
            for (int var = ones.next(0); var >= 0; var = ones.next(var + 1)) conflict.set(var - 1);
            conflict.and_not(gb.neighbours(u));
            conflict.reset(u);
            if (!conflict.empty()) {
                forced = true;
                answer = false;
            } else {
                forced = false;
                answer = coin();
            }
        }
        out.path.answers.push_back(answer ? 1 : 0);
        out.forced.push_back(forced ? 1 : 0);
        out.path.assignment.set(nd.var, answer);
        if (answer) ++out.ones;
        cur = answer ? nd.hi : nd.lo;
        out.path.nodes.push_back(cur);
    }
    out.sink_clause = p.node(cur).clause;
    if (out.sink_clause < 0 || out.sink_clause >= f_block.size())
        throw std::invalid_argument("sample_path: sink labels a clause outside the formula");
    return out;
}

std::optional<int> useful_pair_witness(const Graph& g, const Partition& part,
                                       const NodeSideSets& sides, int a, int b, double r,
                                       double q, long long budget) {
    for (int i = 0; i < part.k(); ++i) {
        if (!sides.ones(b, i).empty()) continue;
        if (sides.block_forgotten(b, i)) continue;
        VertexSet fresh = sides.zeros(b, i);
        fresh.and_not(sides.zeros(a, i));
        if (is_r_q_dense(g, fresh, r, q, budget).ok) return i;
    }
    return std::nullopt;
}

bool frugal_traversal(const PathState& path, int a, int b, int k, double t) {
    int ia = -1, ib = -1;
    for (int i = 0; i < (int)path.nodes.size(); ++i) {
        if (path.nodes[i] == a && ia < 0) ia = i;
        if (path.nodes[i] == b) ib = i;
    }
    if (ia < 0 || ib < 0 || ia > ib)
        throw std::invalid_argument("frugal_traversal: nodes not on the path in order");
    int ones = 0;
    for (int i = ia; i < ib; ++i)
        if (i < (int)path.answers.size() && path.answers[i]) ++ones;
    return ones <= (int)std::ceil((double)k / t);
}

LemmaReport check_lemma_legitimate(const BranchingProgram& p, const CnfFormula& f_block,
                                   const Partition& part, const Graph& g,
                                   const UsefulPairParams& params, int samples,
                                   const PathSampleConfig& cfg, long long budget) {
    NodeSideSets sides(p, part);
    LemmaReport rep;
    rep.samples = samples;
    int k = part.k();
    for (int s = 0; s < samples; ++s) {
        SampledPath sp = sample_path(p, f_block, part, g, sides, cfg, (uint64_t)s);
        bool found = false;
        const auto& nodes = sp.path.nodes;
        // prefix 1-counts for the frugality test
        std::vector<int> pre(nodes.size() + 1, 0);
        for (size_t i = 0; i < sp.path.answers.size(); ++i)
            pre[i + 1] = pre[i] + (sp.path.answers[i] ? 1 : 0);
        int threshold = (int)std::ceil((double)k / params.t);
        for (size_t ia = 0; ia < nodes.size() && !found; ++ia) {
            for (size_t ib = ia; ib < nodes.size() && !found; ++ib) {
                if (pre[ib] - pre[ia] > threshold) break;  // 1-count only grows with ib
                if (useful_pair_witness(g, part, sides, nodes[ia], nodes[ib], params.r,
                                        params.q, budget))
                    found = true;
            }
        }
        if (found) ++rep.with_pair;
    }
    rep.fraction = samples == 0 ? 0.0 : (double)rep.with_pair / samples;
    return rep;
}

BranchingProgram build_decision_tree_program(const CnfFormula& f_block) {
    int nv = f_block.num_vars();
    if (nv > 20) throw std::invalid_argument("decision tree program: too many variables");
    BranchingProgram prog(nv);
    std::vector<int8_t> sigma(nv + 1, 0);
    auto rec = [&](auto&& self, int var) -> int {
        if (var > nv) {
            for (int ci = 0; ci < f_block.size(); ++ci)
                if (f_block.falsified_by_total(sigma, ci)) return prog.add_sink(ci);
            throw std::invalid_argument("decision tree program: formula is satisfiable");
        }
        sigma[var] = 0;
        int lo = self(self, var + 1);
        sigma[var] = 1;
        int hi = self(self, var + 1);
        sigma[var] = 0;
        return prog.add_internal(var, lo, hi);
    };
    prog.set_root(rec(rec, 1));
    return prog;
}

}  // namespace kclique
