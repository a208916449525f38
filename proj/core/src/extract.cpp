#include <algorithm>
#include <map>

#include "kclique/solvers.hpp"

namespace kclique {

namespace {

// Russian-doll extraction.  The suffix run is replayed as one ordered
// decision tree in position space (vertices sorted by (block, id)): along
// every branch queries move to the least remaining candidate, a 1 answer
// grows the clique, and exhausted branches finish off the first block the
// clique misses.  Cut branches of the run are replayed without the cut: a
// shared continuation below a cut would sit on paths that disagree about the
// earlier 1 answers, and no single sink clause survives that, so the tree
// keeps searching instead and only sinks are shared.
struct DollExtractor {
    const Graph& g;
    const Partition& part;
    int k;
    int n;
    std::vector<int> order;  // position -> vertex
    std::vector<VertexSet> adj;   // block graph, position space
    std::vector<int> block_at;    // position -> block
    std::vector<int> bounds;      // position -> max clique size in the suffix
    long long run_nodes = 0;      // node count of the decision run

    CnfFormula formula;
    BranchingProgram prog;
    std::map<int, int> sink_cache;        // clause index -> sink node
    std::vector<int> clique_axiom_idx;    // per block

    DollExtractor(const Graph& g_, const Partition& part_)
        : g(g_), part(part_), k(part_.k()), n(g_.n()), formula(encode_clique_block(g_, part_)),
          prog(g_.n()) {
        for (int b = 0; b < k; ++b) {
            std::vector<int> blk = part.blocks[b];
            std::sort(blk.begin(), blk.end());
            for (int v : blk) order.push_back(v);
        }
        std::vector<int> pos(n, -1);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        Graph gb = block_graph(g, part);
        adj.assign(n, VertexSet(n));
        block_at.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            block_at[pos[v]] = part.block_of[v];
            gb.neighbours(v).for_each([&](int u) { adj[pos[v]].set(pos[u]); });
        }
        clique_axiom_idx.assign(k, -1);
        for (int b = 0; b < k; ++b) {
            std::vector<Lit> ls;
            for (int v : part.blocks[b]) ls.push_back(v + 1);
            clique_axiom_idx[b] = formula.find(Clause(std::move(ls)));
        }
    }

    int sink(int clause_idx) {
        auto it = sink_cache.find(clause_idx);
        if (it != sink_cache.end()) return it->second;
        int id = prog.add_sink(clause_idx);
        sink_cache.emplace(clause_idx, id);
        return id;
    }

    int var_at(int p) const { return order[p] + 1; }

    int binary_axiom(int p, int q) const {
        int idx = formula.find(Clause{-(order[p] + 1), -(order[q] + 1)});
        if (idx < 0) throw std::logic_error("extract: missing binary axiom");
        return idx;
    }

    int witness_in(const std::vector<int>& clique, int p) const {
        for (int r : clique)
            if (!adj[r].test(p)) return r;
        throw std::logic_error("extract: no witness for skipped vertex");
    }

    // Decision run of the suffix solver; fills bounds[] and run_nodes.
    void doll_run() {
        bounds.assign(n, 0);
        int best = 0;
        std::vector<int> sol;
        bool found = false;
        auto expand = [&](auto&& self, VertexSet live) -> void {
            ++run_nodes;
            if (live.empty()) {
                if ((int)sol.size() > best) {
                    best = (int)sol.size();
                    found = true;
                }
                return;
            }
            while (!live.empty()) {
                ++run_nodes;
                if ((int)sol.size() + live.count() <= best) return;
                int p = live.next(0);
                if ((int)sol.size() + bounds[p] <= best) return;
                sol.push_back(p);
                VertexSet nxt = live & adj[p];
                nxt.reset(p);
                self(self, nxt);
                sol.pop_back();
                if (found) return;
                live.reset(p);
            }
        };
        for (int p = n - 1; p >= 0; --p) {
            found = false;
            VertexSet suffix(n);
            for (int q = p + 1; q < n; ++q) suffix.set(q);
            sol.assign(1, p);
            expand(expand, suffix & adj[p]);
            sol.clear();
            bounds[p] = best;
        }
        if (best >= k) throw std::invalid_argument("extract: graph has a transversal clique");
    }

    // Skipped-vertex chain: query each position in `gaps` (ascending), send
    // answer 1 to the axiom against its witness in `clique`, and fall through
    // to `cont` on all zeros.
    int weave(const std::vector<int>& gaps, const std::vector<int>& clique, int cont) {
        int tail = cont;
        for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
            int hi = sink(binary_axiom(*it, witness_in(clique, *it)));
            tail = prog.add_internal(var_at(*it), tail, hi);
        }
        return tail;
    }

    // Candidates exhausted: every unqueried position was dropped by some
    // clique member, so the first block the clique misses can be driven to
    // all zeros and its clique axiom emitted.
    int stop_exhausted(const std::vector<int>& clique, const VertexSet& queried) {
        std::vector<bool> rep(k, false);
        for (int p : clique) rep[block_at[p]] = true;
        int target = 0;
        while (target < k && rep[target]) ++target;
        if (target == k) throw std::logic_error("extract: no unrepresented block at a leaf");
        std::vector<int> gaps;
        for (int p = 0; p < n; ++p)
            if (block_at[p] == target && !queried.test(p)) gaps.push_back(p);
        return weave(gaps, clique, sink(clique_axiom_idx[target]));
    }

    int body(std::vector<int>& clique, VertexSet cand, VertexSet queried) {
        if ((int)clique.size() >= k) throw std::logic_error("extract: clique reached k");
        if (prog.size() > kNodeLimit)
            throw OracleLimitExceeded("extract: program node limit exceeded");
        if (cand.empty()) return stop_exhausted(clique, queried);
        int t = cand.next(0);
        queried.set(t);
        clique.push_back(t);
        VertexSet taken = cand & adj[t];
        taken.reset(t);
        int hi = body(clique, taken, queried);
        clique.pop_back();
        VertexSet rest = cand;
        rest.reset(t);
        int lo = body(clique, rest, queried);
        return prog.add_internal(var_at(t), lo, hi);
    }

    static constexpr long long kNodeLimit = 20'000'000;

    void build() {
        doll_run();
        if (n == 0) {
            prog.set_root(sink(formula.find(Clause{})));
            return;
        }
        std::vector<int> clique;
        prog.set_root(body(clique, VertexSet::full(n), VertexSet(n)));
    }
};

// Colour-cut extraction: a plain decision tree over the block graph with
// private subprograms below each colour cut.  No nodes are shared except
// sinks, so every sink's path knowledge is exact.
struct ColourExtractor {
    const Graph& g;
    const Partition& part;
    int k;
    int n;
    Graph gb;
    CnfFormula formula;
    BranchingProgram prog;
    std::map<int, int> sink_cache;
    std::vector<int> clique_axiom_idx;
    std::vector<int> witness;  // vertex -> clique member that dropped it
    std::vector<int> sol;      // growing clique, vertex ids
    std::vector<SpliceInfo> splices;

    ColourExtractor(const Graph& g_, const Partition& part_)
        : g(g_), part(part_), k(part_.k()), n(g_.n()), gb(block_graph(g_, part_)),
          formula(encode_clique_block(g_, part_)), prog(g_.n()), witness(g_.n(), -1) {
        clique_axiom_idx.assign(k, -1);
        for (int b = 0; b < k; ++b) {
            std::vector<Lit> ls;
            for (int v : part.blocks[b]) ls.push_back(v + 1);
            clique_axiom_idx[b] = formula.find(Clause(std::move(ls)));
        }
    }

    int sink(int clause_idx) {
        auto it = sink_cache.find(clause_idx);
        if (it != sink_cache.end()) return it->second;
        int id = prog.add_sink(clause_idx);
        sink_cache.emplace(clause_idx, id);
        return id;
    }

    int binary_axiom(int u, int v) const {
        int idx = formula.find(Clause{-(u + 1), -(v + 1)});
        if (idx < 0) throw std::logic_error("extract: missing binary axiom");
        return idx;
    }

    // Greedy colouring of gb[cand] in ascending id; order lists classes
    // ascending, bnds[i] = class count among order[0..i].
    std::pair<std::vector<int>, std::vector<int>> colour_classes(const VertexSet& cand) const {
        std::vector<int> colour(n, -1);
        int classes = 0;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            std::vector<bool> used(classes + 1, false);
            (gb.neighbours(v) & cand).for_each([&](int u) {
                if (colour[u] >= 0) used[colour[u]] = true;
            });
            int c = 0;
            while (used[c]) ++c;
            colour[v] = c;
            classes = std::max(classes, c + 1);
        }
        std::vector<int> order, bnds;
        for (int c = 0; c < classes; ++c)
            for (int v = cand.next(0); v >= 0; v = cand.next(v + 1))
                if (colour[v] == c) {
                    order.push_back(v);
                    bnds.push_back(c + 1);
                }
        return {order, bnds};
    }

    int leaf(const VertexSet& queried) {
        if ((int)sol.size() >= k) throw std::logic_error("extract: clique reached k");
        std::vector<bool> rep(k, false);
        for (int v : sol) rep[part.block_of[v]] = true;
        int target = 0;
        while (target < k && rep[target]) ++target;
        if (target == k) throw std::logic_error("extract: no unrepresented block at a leaf");
        int tail = sink(clique_axiom_idx[target]);
        const auto& blk = part.blocks[target];
        std::vector<int> todo;
        for (int v : blk)
            if (!queried.test(v)) todo.push_back(v);
        std::sort(todo.begin(), todo.end());
        for (auto it = todo.rbegin(); it != todo.rend(); ++it) {
            if (witness[*it] < 0) throw std::logic_error("extract: skipped vertex never dropped");
            int hi = sink(binary_axiom(*it, witness[*it]));
            tail = prog.add_internal(*it + 1, tail, hi);
        }
        return tail;
    }

    int build(const VertexSet& cand, const VertexSet& queried, bool use_bounds) {
        if ((int)sol.size() >= k) throw std::logic_error("extract: clique reached k");
        if (cand.empty()) return leaf(queried);
        auto [order, bnds] = colour_classes(cand);
        return chain(order, bnds, (int)order.size() - 1, cand, queried, use_bounds);
    }

    int chain(const std::vector<int>& order, const std::vector<int>& bnds, int i, VertexSet live,
              VertexSet queried, bool use_bounds) {
        if (i < 0) return leaf(queried);
        if (use_bounds && (int)sol.size() + bnds[i] <= k - 1) {
            long long before = prog.size();
            int node = build(live, queried, false);
            splices.push_back(SpliceInfo{live.count(), k - (int)sol.size(), prog.size() - before});
            return node;
        }
        int v = order[i];
        queried.set(v);
        live.reset(v);
        // take v
        sol.push_back(v);
        VertexSet taken = live & gb.neighbours(v);
        std::vector<int> marked;
        live.for_each([&](int w) {
            if (!taken.test(w) && witness[w] < 0) {
                witness[w] = v;
                marked.push_back(w);
            }
        });
        int hi = build(taken, queried, use_bounds);
        for (int w : marked) witness[w] = -1;
        sol.pop_back();
        // exclude v
        int lo = chain(order, bnds, i - 1, live, queried, use_bounds);
        return prog.add_internal(v + 1, lo, hi);
    }

    void build_all() {
        if (has_transversal_clique(g, part))
            throw std::invalid_argument("extract: graph has a transversal clique");
        if (n == 0) {
            prog.set_root(sink(formula.find(Clause{})));
            return;
        }
        prog.set_root(build(VertexSet::full(n), VertexSet(n), true));
    }
};

}  // namespace

ExtractionResult extract_robp_cliquer(const Graph& g, const Partition& part) {
    if (part.n() != g.n()) throw std::invalid_argument("extract: partition size mismatch");
    if (has_transversal_clique(g, part))
        throw std::invalid_argument("extract: graph has a transversal clique");
    DollExtractor ex(g, part);
    ex.build();
    ExtractionResult res;
    res.program = std::move(ex.prog);
    res.formula = std::move(ex.formula);
    res.tree_nodes = ex.run_nodes;
    return res;
}

ExtractionResult extract_robp_maxclique(const Graph& g, const Partition& part) {
    if (part.n() != g.n()) throw std::invalid_argument("extract: partition size mismatch");
    ColourExtractor ex(g, part);
    ex.build_all();
    // the simulated run's own search-tree size, from the decision solver
    SearchStats stats;
    clique_decision(g, part.k(), &part, SolverAlgo::bb, &stats);
    ExtractionResult res;
    res.program = std::move(ex.prog);
    res.formula = std::move(ex.formula);
    res.tree_nodes = stats.nodes_visited;
    res.splices = std::move(ex.splices);
    return res;
}

}  // namespace kclique
