#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kclique/bits.hpp"

namespace kclique {

struct OracleLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected simple graph on dense vertex ids [0, n).  Adjacency is stored as
// one bitset per vertex; the structure stays symmetric and loop-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int n() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("graph: loop edge");
        check_vertex(u);
        check_vertex(v);
        adj_[u].set(v);
        adj_[v].set(u);
    }
    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }
    const VertexSet& neighbours(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return neighbours(v).count(); }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].count();
        return twice / 2;
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    static Graph empty(int n) { return Graph(n); }
    static Graph cycle(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex id out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// N^(R, W): common neighbours of R inside W.  The intersection over the empty
// family is the whole universe, so N^(empty, W) = W.
VertexSet common_neighbourhood(const Graph& g, const VertexSet& r, const VertexSet& w);

// Partition of [0, n) into k labelled blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // vertex -> block index

    int k() const { return (int)blocks.size(); }
    int n() const { return (int)block_of.size(); }

    VertexSet block_set(int i) const {
        VertexSet s(n());
        for (int v : blocks[i]) s.set(v);
        return s;
    }
    bool balanced() const;
};

Partition make_partition(int n, const std::vector<std::vector<int>>& blocks);

// Deterministic contiguous-range partition; first (n mod k) blocks get the
// extra vertex.
Partition balanced_partition(int n, int k);

// Copy of g with every edge inside a block removed.  Transversal k-cliques of
// (g, part) are exactly the k-cliques of this graph.
Graph block_graph(const Graph& g, const Partition& part);

// Exhaustive maximum clique, for use as an oracle.  Pruned enumeration, hard
// limit on n.
std::vector<int> max_clique_brute(const Graph& g, int oracle_limit = 40);

bool is_clique(const Graph& g, const std::vector<int>& vs);

bool has_transversal_clique(const Graph& g, const Partition& part);

// Smallest-last removal order reversed, so high-core vertices come first.
// Ties break towards smaller ids.
std::vector<int> degeneracy_order(const Graph& g);

// DIMACS graph format: "p edge n m" then "e u v" with 1-based vertex ids.
void write_dimacs_graph(std::ostream& out, const Graph& g);
Graph read_dimacs_graph(std::istream& in);
Graph read_dimacs_graph_file(const std::string& path);

}  // namespace kclique
