#include "kclique/solvers.hpp"

#include <algorithm>

namespace kclique {

namespace {

// Shared machinery for both solvers.  Work happens in "position space": the
// graph is relabelled along the chosen vertex order so candidate sets iterate
// in order via next().
struct PositionGraph {
    int n;
    std::vector<int> order;  // position -> original vertex
    std::vector<int> pos;    // original vertex -> position
    std::vector<VertexSet> adj;

    PositionGraph(const Graph& g, std::vector<int> ord) : n(g.n()), order(std::move(ord)) {
        pos.assign(n, -1);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        adj.assign(n, VertexSet(n));
        for (int u = 0; u < n; ++u)
            g.neighbours(u).for_each([&](int v) { adj[pos[u]].set(pos[v]); });
    }
};

struct Searcher {
    const PositionGraph& pg;
    SolverOptions opts;
    SearchStats stats;
    SolverTrace trace;
    std::vector<int> bounds;  // by position (russian-doll mode)
    std::vector<int> sol;     // growing clique, positions
    std::vector<int> best;    // incumbent, positions
    bool found = false;       // russian-doll per-iteration flag
    int target = -1;          // decision mode: stop once |best| >= target
    bool stop = false;

    explicit Searcher(const PositionGraph& g, const SolverOptions& o) : pg(g), opts(o) {}

    void event(TraceEvent::Kind k, int vertex = -1, int value = -1) {
        if (opts.record_trace) trace.events.push_back(TraceEvent{k, vertex, value});
    }

    void record_if_better() {
        if ((int)sol.size() > (int)best.size()) {
            best = sol;
            found = true;
            stats.incumbent_history.push_back((int)best.size());
            event(TraceEvent::record);
            if (target >= 0 && (int)best.size() >= target) stop = true;
        }
    }

    // Russian-doll expansion over the suffix structure.
    void expand_doll(VertexSet live) {
        ++stats.expand_calls;
        ++stats.nodes_visited;
        event(TraceEvent::enter);
        if (live.empty()) {
            record_if_better();
            event(TraceEvent::leave);
            return;
        }
        while (!live.empty()) {
            ++stats.nodes_visited;
            if (!opts.disable_prunes &&
                (int)sol.size() + live.count() <= (int)best.size()) {
                ++stats.size_cuts;
                event(TraceEvent::cut_size);
                break;
            }
            int p = live.next(0);
            if (!opts.disable_prunes && (int)sol.size() + bounds[p] <= (int)best.size()) {
                ++stats.bound_cuts;
                event(TraceEvent::cut_bounds);
                break;
            }
            event(TraceEvent::take, pg.order[p]);
            sol.push_back(p);
            VertexSet nxt = live & pg.adj[p];
            nxt.reset(p);
            expand_doll(nxt);
            sol.pop_back();
            if ((found && !opts.disable_prunes) || stop) break;
            live.reset(p);
            event(TraceEvent::exclude, pg.order[p]);
        }
        event(TraceEvent::leave);
    }

    void run_doll() {
        bounds.assign(pg.n, 0);
        for (int p = pg.n - 1; p >= 0 && !stop; --p) {
            found = false;
            VertexSet suffix(pg.n);
            for (int q = p + 1; q < pg.n; ++q) suffix.set(q);
            sol.assign(1, p);
            expand_doll(suffix & pg.adj[p]);
            sol.clear();
            bounds[p] = (int)best.size();
            event(TraceEvent::bounds_set, pg.order[p], bounds[p]);
        }
    }

    // Colour-order expansion.
    std::pair<std::vector<int>, std::vector<int>> colour_order_on(const VertexSet& cand) const {
        // greedy colouring of the induced subgraph, position order
        std::vector<int> colour(pg.n, -1);
        int classes = 0;
        for (int p = cand.next(0); p >= 0; p = cand.next(p + 1)) {
            std::vector<bool> used(classes + 1, false);
            (pg.adj[p] & cand).for_each([&](int q) {
                if (colour[q] >= 0) used[colour[q]] = true;
            });
            int c = 0;
            while (used[c]) ++c;
            colour[p] = c;
            classes = std::max(classes, c + 1);
        }
        std::vector<int> order, bnds;
        for (int c = 0; c < classes; ++c)
            for (int p = cand.next(0); p >= 0; p = cand.next(p + 1))
                if (colour[p] == c) {
                    order.push_back(p);
                    bnds.push_back(c + 1);
                }
        return {order, bnds};
    }

    void expand_colour(const VertexSet& cand) {
        ++stats.expand_calls;
        ++stats.nodes_visited;
        event(TraceEvent::enter);
        if (cand.empty()) {
            record_if_better();
            event(TraceEvent::leave);
            return;
        }
        auto [order, bnds] = colour_order_on(cand);
        VertexSet live = cand;
        for (int i = (int)order.size() - 1; i >= 0 && !stop; --i) {
            ++stats.nodes_visited;
            if (!opts.disable_prunes && (int)sol.size() + bnds[i] <= (int)best.size()) {
                ++stats.colour_cuts;
                event(TraceEvent::cut_colour);
                break;
            }
            int p = order[i];
            event(TraceEvent::take, pg.order[p]);
            sol.push_back(p);
            VertexSet nxt = live & pg.adj[p];
            nxt.reset(p);
            expand_colour(nxt);
            sol.pop_back();
            live.reset(p);
            event(TraceEvent::exclude, pg.order[p]);
        }
        event(TraceEvent::leave);
    }

    std::vector<int> best_vertices() const {
        std::vector<int> out;
        for (int p : best) out.push_back(pg.order[p]);
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

CliqueResult cliquer(const Graph& g, const SolverOptions& opts) {
    PositionGraph pg(g, degeneracy_order(g));
    Searcher s(pg, opts);
    s.run_doll();
    CliqueResult res;
    res.clique = s.best_vertices();
    res.stats = std::move(s.stats);
    res.trace = std::move(s.trace);
    res.order = pg.order;
    res.bounds = std::move(s.bounds);
    return res;
}

CliqueResult max_clique_bb(const Graph& g, const SolverOptions& opts) {
    PositionGraph pg(g, degeneracy_order(g));
    Searcher s(pg, opts);
    s.expand_colour(VertexSet::full(g.n()));
    CliqueResult res;
    res.clique = s.best_vertices();
    res.stats = std::move(s.stats);
    res.trace = std::move(s.trace);
    res.order = pg.order;
    return res;
}

std::pair<std::vector<int>, std::vector<int>> colour_order(const Graph& g) {
    PositionGraph pg(g, degeneracy_order(g));
    SolverOptions opts;
    Searcher s(pg, opts);
    auto [order, bnds] = s.colour_order_on(VertexSet::full(g.n()));
    for (int& p : order) p = pg.order[p];
    return {order, bnds};
}

bool clique_decision(const Graph& g, int k, const Partition* part, SolverAlgo algo,
                     SearchStats* stats) {
    const Graph base = part ? block_graph(g, *part) : g;
    PositionGraph pg(base, degeneracy_order(base));
    SolverOptions opts;
    opts.record_trace = false;
    Searcher s(pg, opts);
    s.target = k;
    if (algo == SolverAlgo::cliquer)
        s.run_doll();
    else
        s.expand_colour(VertexSet::full(base.n()));
    if (stats) *stats = s.stats;
    return (int)s.best.size() >= k;
}

}  // namespace kclique
