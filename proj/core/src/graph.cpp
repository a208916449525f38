#include "kclique/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kclique {

VertexSet common_neighbourhood(const Graph& g, const VertexSet& r, const VertexSet& w) {
    VertexSet out = w;
    r.for_each([&](int v) { out &= g.neighbours(v); });
    return out;
}

bool Partition::balanced() const {
    size_t lo = blocks.empty() ? 0 : blocks[0].size(), hi = lo;
    for (const auto& b : blocks) {
        lo = std::min(lo, b.size());
        hi = std::max(hi, b.size());
    }
    return hi <= lo + 1;
}

Partition make_partition(int n, const std::vector<std::vector<int>>& blocks) {
    Partition p;
    p.blocks = blocks;
    p.block_of.assign(n, -1);
    for (int i = 0; i < (int)blocks.size(); ++i) {
        for (int v : blocks[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex out of range");
            if (p.block_of[v] != -1) throw std::invalid_argument("partition: blocks overlap");
            p.block_of[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (p.block_of[v] == -1) throw std::invalid_argument("partition: vertex not covered");
    return p;
}

Partition balanced_partition(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("balanced_partition: need 1 <= k <= n");
    std::vector<std::vector<int>> blocks(k);
    int base = n / k, extra = n % k, v = 0;
    for (int i = 0; i < k; ++i) {
        int sz = base + (i < extra ? 1 : 0);
        for (int j = 0; j < sz; ++j) blocks[i].push_back(v++);
    }
    return make_partition(n, blocks);
}

Graph block_graph(const Graph& g, const Partition& part) {
    if (part.n() != g.n()) throw std::invalid_argument("block_graph: partition size mismatch");
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u) {
        g.neighbours(u).for_each([&](int v) {
            if (u < v && part.block_of[u] != part.block_of[v]) out.add_edge(u, v);
        });
    }
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

namespace {

void brute_extend(const Graph& g, std::vector<int>& cur, VertexSet cand, std::vector<int>& best) {
    if ((int)cur.size() > (int)best.size()) best = cur;
    if ((int)cur.size() + cand.count() <= (int)best.size()) return;
    for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
        cur.push_back(v);
        VertexSet nxt = cand & g.neighbours(v);
        // only extend with larger ids so each clique is enumerated once
        VertexSet nxt2(g.n());
        for (int w = nxt.next(v + 1); w >= 0; w = nxt.next(w + 1)) nxt2.set(w);
        brute_extend(g, cur, nxt2, best);
        cur.pop_back();
        cand.reset(v);
        if ((int)cur.size() + cand.count() <= (int)best.size()) return;
    }
}

}  // namespace

std::vector<int> max_clique_brute(const Graph& g, int oracle_limit) {
    if (g.n() > oracle_limit)
        throw OracleLimitExceeded("max_clique_brute: instance exceeds oracle limit");
    std::vector<int> best, cur;
    brute_extend(g, cur, g.vertices(), best);
    return best;
}

namespace {

bool transversal_extend(const Graph& g, const Partition& part, int block, VertexSet compat) {
    if (block == part.k()) return true;
    for (int v : part.blocks[block]) {
        if (!compat.test(v)) continue;
        if (transversal_extend(g, part, block + 1, compat & g.neighbours(v))) return true;
    }
    return false;
}

}  // namespace

bool has_transversal_clique(const Graph& g, const Partition& part) {
    if (part.n() != g.n()) throw std::invalid_argument("has_transversal_clique: size mismatch");
    return transversal_extend(g, part, 0, g.vertices());
}

std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), removal;
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        gone[best] = true;
        removal.push_back(best);
        g.neighbours(best).for_each([&](int u) {
            if (!gone[u]) --deg[u];
        });
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

void write_dimacs_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.n(); ++u) {
        g.neighbours(u).for_each([&](int v) {
            if (u < v) out << "e " << u + 1 << " " << v + 1 << "\n";
        });
    }
}

Graph read_dimacs_graph(std::istream& in) {
    std::string line;
    Graph g;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        if (tok == "p") {
            std::string fmt;
            int n = 0;
            long long m = 0;
            ss >> fmt >> n >> m;
            if (fmt != "edge" && fmt != "col")
                throw std::runtime_error("dimacs graph: expected 'p edge'");
            g = Graph(n);
            have_header = true;
        } else if (tok == "e") {
            if (!have_header) throw std::runtime_error("dimacs graph: edge before header");
            int u = 0, v = 0;
            ss >> u >> v;
            g.add_edge(u - 1, v - 1);
        }
    }
    if (!have_header) throw std::runtime_error("dimacs graph: missing 'p edge' header");
    return g;
}

Graph read_dimacs_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_dimacs_graph(in);
}

}  // namespace kclique
