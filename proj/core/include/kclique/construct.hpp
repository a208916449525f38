#pragma once

#include <map>

#include "kclique/proof.hpp"

namespace kclique {

// Distinct common neighbourhoods over the cliques of g, each keyed by the
// canonical vertex set and carrying a witness clique.  The cardinality drives
// the size bound of build_search_program.
struct CliqueIndex {
    std::map<VertexSet, std::vector<int>> entries;  // N^(R, V) -> witness R

    long long size() const { return (long long)entries.size(); }
};

struct CliqueIndexLimits {
    int max_n = 40;
    long long max_cliques = 20'000'000;
};

CliqueIndex clique_index(const Graph& g, CliqueIndexLimits limits = {});

// Read-once search program for the falsified clause search problem on the
// weak (no functionality axioms) k-clique encoding of g.  Per level it scans
// the surviving vertices for the one mapped to the current index, checks its
// non-neighbours against all lower indices, and recurses on the
// neighbourhood; recursion targets with equal neighbourhood sets are merged
// within a level.  Node count <= |I(g)| * k^2 * n^2.  Requires g k-clique
// free.
BranchingProgram build_search_program(const Graph& g, int k);

// Vertex map into a target graph: edges must map to edges.
using Homomorphism = std::vector<int>;

bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& hom);

struct BlowUp {
    Graph graph;
    Homomorphism collapse;  // blown-up vertex -> original vertex of h
};

// Replace each vertex of h by an independent cloud; clouds of adjacent
// vertices are completely joined.  Cloud sizes of zero are allowed.
BlowUp blow_up(const Graph& h, const std::vector<int>& cloud_sizes);

// Complete multipartite graph over the given colour classes (vertex ids must
// form a partition of [0, n)).
Graph complete_multipartite(int n, const std::vector<std::vector<int>>& classes);

std::vector<int> greedy_colouring(const Graph& g);

// Restricts a refutation of the weak encoding of g_super down to g_sub:
// variables of vertices outside the embedded image are set to 0, the proof is
// restricted, and variables are renamed along the embedding.  `embed` maps
// V(g_sub) into V(g_super) (identity when empty); every edge of g_sub must
// map to an edge of g_super.  The result refutes the weak encoding of g_sub
// and is never longer than pi.
ResolutionProof transfer_refutation(const ResolutionProof& pi, const Graph& g_super,
                                    const Graph& g_sub, int k,
                                    const std::vector<int>& embed = {});

// Refutation of the weak k-clique encoding of a properly coloured graph
// (colours in [0, k-2]): runs the search-program construction on the
// complete multipartite supergraph and transfers down.  Length is at most
// 2^k * k^2 * n^2.
ResolutionProof refute_colourable(const Graph& g, const std::vector<int>& colouring, int k);

// Same through an arbitrary homomorphism into a k-clique-free graph h on m
// vertices; length at most m^k * k^2 * n^2.
ResolutionProof refute_homomorphic(const Graph& g, const Graph& h, const Homomorphism& hom,
                                   int k);

}  // namespace kclique
