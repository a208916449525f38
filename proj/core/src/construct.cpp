#include "kclique/construct.hpp"

#include <algorithm>

namespace kclique {

namespace {

void enumerate_cliques(const Graph& g, std::vector<int>& cur, const VertexSet& nhood,
                       const VertexSet& cand, long long& budget, CliqueIndex& out) {
    if (--budget < 0) throw OracleLimitExceeded("clique_index: clique budget exceeded");
    out.entries.emplace(nhood, cur);
    cand.for_each([&](int v) {
        cur.push_back(v);
        VertexSet nh2 = nhood & g.neighbours(v);
        VertexSet above(g.n());
        for (int w = nh2.next(v + 1); w >= 0; w = nh2.next(w + 1)) above.set(w);
        enumerate_cliques(g, cur, nh2, above, budget, out);
        cur.pop_back();
    });
}

}  // namespace

CliqueIndex clique_index(const Graph& g, CliqueIndexLimits limits) {
    if (g.n() > limits.max_n) throw OracleLimitExceeded("clique_index: n exceeds limit");
    CliqueIndex out;
    std::vector<int> cur;
    long long budget = limits.max_cliques;
    enumerate_cliques(g, cur, g.vertices(), g.vertices(), budget, out);
    return out;
}

namespace {

// Builder state for the level-structured search program.  Levels are indexed
// by the clique index kappa = k .. 1; the subprogram for a surviving vertex
// set U is shared across all recursion paths of its level.
struct SearchProgramBuilder {
    const Graph& g;
    int k;
    CnfFormula formula;  // weak encoding, used only to pin sink clause indices
    BranchingProgram prog;
    std::vector<std::map<VertexSet, int>> memo;  // per kappa: U -> entry node
    std::map<int, int> sink_of_clause;

    SearchProgramBuilder(const Graph& g_, int k_)
        : g(g_), k(k_), formula(encode_clique(g_, k_, false)), prog(g_.n() * k_),
          memo(k_ + 1) {}

    int sink(int clause_idx) {
        auto it = sink_of_clause.find(clause_idx);
        if (it != sink_of_clause.end()) return it->second;
        int id = prog.add_sink(clause_idx);
        sink_of_clause.emplace(clause_idx, id);
        return id;
    }

    int clique_axiom(int kappa) {
        std::vector<Lit> ls;
        for (int v = 0; v < g.n(); ++v) ls.push_back(clique_var(v, kappa, k));
        int idx = formula.find(Clause(std::move(ls)));
        if (idx < 0) throw std::logic_error("search program: clique axiom missing");
        return idx;
    }

    int edge_axiom(int v, int i, int w, int j) {
        int idx = formula.find(Clause{-clique_var(v, i, k), -clique_var(w, j, k)});
        if (idx < 0) throw std::logic_error("search program: edge axiom missing");
        return idx;
    }

    // Chain checking x_{w,j} = 0 for every non-neighbour w of v inside U and
    // every j < kappa; an answer 1 exposes the edge axiom on (v, w).
    int check_chain(int v, int kappa, const VertexSet& u, int cont) {
        VertexSet outside = u;
        outside.and_not(g.neighbours(v));
        auto ws = outside.to_vector();
        int tail = cont;
        for (auto wit = ws.rbegin(); wit != ws.rend(); ++wit) {
            for (int j = kappa - 1; j >= 1; --j) {
                int hi = sink(edge_axiom(*wit, j, v, kappa));
                tail = prog.add_internal(clique_var(*wit, j, k), tail, hi);
            }
        }
        return tail;
    }

    // Entry node of the subprogram for surviving set u at level kappa.
    int build(const VertexSet& u, int kappa) {
        auto it = memo[kappa].find(u);
        if (it != memo[kappa].end()) return it->second;
        if (kappa == 1 && !u.empty())
            throw std::invalid_argument("build_search_program: graph has a k-clique");
        int tail = sink(clique_axiom(kappa));
        auto vs = u.to_vector();
        for (auto vit = vs.rbegin(); vit != vs.rend(); ++vit) {
            int v = *vit;
            int child = build(u & g.neighbours(v), kappa - 1);
            int taken = check_chain(v, kappa, u, child);
            tail = prog.add_internal(clique_var(v, kappa, k), tail, taken);
        }
        memo[kappa].emplace(u, tail);
        return tail;
    }
};

}  // namespace

BranchingProgram build_search_program(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("build_search_program: k >= 1 required");
    SearchProgramBuilder b(g, k);
    b.prog.set_root(b.build(g.vertices(), k));
    return std::move(b.prog);
}

bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& hom) {
    if ((int)hom.size() != g.n()) return false;
    for (int v : hom)
        if (v < 0 || v >= h.n()) return false;
    for (int u = 0; u < g.n(); ++u) {
        bool ok = true;
        g.neighbours(u).for_each([&](int v) {
            if (u < v && !h.has_edge(hom[u], hom[v])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

BlowUp blow_up(const Graph& h, const std::vector<int>& cloud_sizes) {
    if ((int)cloud_sizes.size() != h.n())
        throw std::invalid_argument("blow_up: one cloud size per vertex required");
    for (int s : cloud_sizes)
        if (s < 0) throw std::invalid_argument("blow_up: negative cloud size");
    int n = 0;
    for (int s : cloud_sizes) n += s;
    BlowUp out{Graph(n), Homomorphism()};
    out.collapse.reserve(n);
    std::vector<int> first(h.n());
    for (int u = 0, at = 0; u < h.n(); ++u) {
        first[u] = at;
        for (int i = 0; i < cloud_sizes[u]; ++i) out.collapse.push_back(u);
        at += cloud_sizes[u];
    }
    for (int u = 0; u < h.n(); ++u)
        h.neighbours(u).for_each([&](int v) {
            if (v < u) return;
            for (int a = 0; a < cloud_sizes[u]; ++a)
                for (int b = 0; b < cloud_sizes[v]; ++b)
                    out.graph.add_edge(first[u] + a, first[v] + b);
        });
    return out;
}

Graph complete_multipartite(int n, const std::vector<std::vector<int>>& classes) {
    Partition part = make_partition(n, classes);  // validates disjoint cover
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part.block_of[u] != part.block_of[v]) g.add_edge(u, v);
    return g;
}

std::vector<int> greedy_colouring(const Graph& g) {
    std::vector<int> colour(g.n(), -1);
    for (int v : degeneracy_order(g)) {
        std::vector<bool> used(g.n() + 1, false);
        g.neighbours(v).for_each([&](int u) {
            if (colour[u] >= 0) used[colour[u]] = true;
        });
        int c = 0;
        while (used[c]) ++c;
        colour[v] = c;
    }
    return colour;
}

ResolutionProof transfer_refutation(const ResolutionProof& pi, const Graph& g_super,
                                    const Graph& g_sub, int k, const std::vector<int>& embed) {
    std::vector<int> map = embed;
    if (map.empty()) {
        map.resize(g_sub.n());
        for (int v = 0; v < g_sub.n(); ++v) map[v] = v;
    }
    if ((int)map.size() != g_sub.n())
        throw std::invalid_argument("transfer_refutation: embedding size mismatch");
    std::vector<int> inverse(g_super.n(), -1);
    for (int v = 0; v < g_sub.n(); ++v) {
        if (map[v] < 0 || map[v] >= g_super.n() || inverse[map[v]] != -1)
            throw std::invalid_argument("transfer_refutation: embedding not injective into super");
        inverse[map[v]] = v;
    }
    for (int u = 0; u < g_sub.n(); ++u) {
        bool ok = true;
        g_sub.neighbours(u).for_each([&](int v) {
            if (u < v && !g_super.has_edge(map[u], map[v])) ok = false;
        });
        if (!ok) throw std::invalid_argument("transfer_refutation: sub edge missing upstairs");
    }

    Restriction rho;
    for (int w = 0; w < g_super.n(); ++w) {
        if (inverse[w] >= 0) continue;
        for (int i = 1; i <= k; ++i) rho.set(clique_var(w, i, k), false);
    }
    ResolutionProof restricted = restrict_proof(pi, rho);

    // rename x_{map[v], i} -> x_{v, i}
    ResolutionProof out;
    auto rename = [&](const Clause& c) {
        std::vector<Lit> ls;
        for (Lit l : c) {
            int var = lit_var(l);
            int w = (var - 1) / k, i = (var - 1) % k + 1;
            if (inverse[w] < 0)
                throw std::logic_error("transfer_refutation: literal survived outside image");
            int nv = clique_var(inverse[w], i, k);
            ls.push_back(lit_positive(l) ? nv : -nv);
        }
        return Clause(std::move(ls));
    };
    for (int i = 0; i < restricted.size(); ++i) {
        const ProofStep& st = restricted.step(i);
        if (st.axiom) {
            out.add_axiom(rename(st.clause));
        } else {
            int var = st.var;
            int w = (var - 1) / k, idx = (var - 1) % k + 1;
            out.add_resolvent(rename(st.clause), st.ante1, st.ante2,
                              clique_var(inverse[w], idx, k));
        }
    }
    return out;
}

ResolutionProof refute_colourable(const Graph& g, const std::vector<int>& colouring, int k) {
    if ((int)colouring.size() != g.n())
        throw std::invalid_argument("refute_colourable: one colour per vertex required");
    for (int c : colouring)
        if (c < 0 || c > k - 2)
            throw std::invalid_argument("refute_colourable: colours must lie in [0, k-2]");
    for (int u = 0; u < g.n(); ++u) {
        bool ok = true;
        g.neighbours(u).for_each([&](int v) {
            if (u < v && colouring[u] == colouring[v]) ok = false;
        });
        if (!ok) throw std::invalid_argument("refute_colourable: colouring is not proper");
    }
    std::vector<std::vector<int>> classes(k - 1);
    for (int v = 0; v < g.n(); ++v) classes[colouring[v]].push_back(v);
    // drop empty classes: make_partition requires ids only, empties are fine
    Graph super = complete_multipartite(g.n(), classes);
    BranchingProgram prog = build_search_program(super, k);
    ResolutionProof pi = robp_to_refutation(prog, encode_clique(super, k, false));
    return transfer_refutation(pi, super, g, k);
}

ResolutionProof refute_homomorphic(const Graph& g, const Graph& h, const Homomorphism& hom,
                                   int k) {
    if (!is_homomorphism(g, h, hom))
        throw std::invalid_argument("refute_homomorphic: invalid homomorphism");
    if ((int)max_clique_brute(h).size() >= k)
        throw std::invalid_argument("refute_homomorphic: target graph has a k-clique");
    // pullback of h along hom: the blow-up of h with fibre-sized clouds,
    // realized directly on the vertex ids of g
    Graph super(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (h.has_edge(hom[u], hom[v])) super.add_edge(u, v);
    BranchingProgram prog = build_search_program(super, k);
    ResolutionProof pi = robp_to_refutation(prog, encode_clique(super, k, false));
    return transfer_refutation(pi, super, g, k);
}

}  // namespace kclique
