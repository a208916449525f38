#include <doctest.h>

#include <sstream>

#include "../support/oracles.hpp"
#include "kclique/cnf.hpp"
#include "kclique/er.hpp"

using namespace kclique;

TEST_CASE("clause is a canonical set and rejects tautologies") {
    Clause c{3, -1, 3};
    CHECK(c.width() == 2);
    CHECK(c == Clause{-1, 3});
    CHECK_THROWS_AS(Clause({2, -2}), std::invalid_argument);
    CHECK_THROWS_AS(Clause({0}), std::invalid_argument);
}

TEST_CASE("encode_clique on K3 with k=3 has the expected clause counts") {
    CnfFormula f = encode_clique(Graph::complete(3), 3, true);
    CHECK(f.num_vars() == 9);
    // cross-vertex edge axioms: none; same-vertex: 3 vertices x 3 index pairs
    CHECK(f.count_tag(AxiomTag::edge) == 9);
    CHECK(f.count_tag(AxiomTag::clique) == 3);
    CHECK(f.count_tag(AxiomTag::functionality) == 9);
}

TEST_CASE("encode_clique satisfiability matches clique existence") {
    // K_k is satisfiable for every k
    for (int k = 1; k <= 3; ++k)
        CHECK(oracles::brute_sat(encode_clique(Graph::complete(k), k, true)));
    // empty graph on 2 vertices, k=2: unsatisfiable over all 16 assignments
    CHECK(!oracles::brute_sat(encode_clique(Graph::empty(2), 2, true)));
}

TEST_CASE("functionality axioms never change satisfiability") {
    for (uint64_t mask = 0; mask < (1ULL << oracles::edge_slots(4)); ++mask) {
        Graph g = oracles::graph_from_mask(4, mask);
        for (int k = 2; k <= 3; ++k) {
            bool with = oracles::brute_sat(encode_clique(g, k, true));
            bool without = oracles::brute_sat(encode_clique(g, k, false));
            CHECK(with == without);
        }
    }
}

TEST_CASE("encode_clique_block example counts") {
    // K4 minus edge {1,2}, blocks {0,1},{2,3}
    Graph g = Graph::complete(4);
    Graph h(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            if (!(u == 1 && v == 2)) h.add_edge(u, v);
    CnfFormula f = encode_clique_block(h, balanced_partition(4, 2));
    CHECK(f.count_tag(AxiomTag::edge) == 1);
    CHECK(f.count_tag(AxiomTag::clique) == 2);
    CHECK(f.count_tag(AxiomTag::functionality) == 2);

    CHECK(!oracles::brute_sat(encode_clique_block(Graph::empty(4), balanced_partition(4, 2))));
    // complete graph with singleton blocks: satisfiable by all-ones
    CHECK(oracles::brute_sat(encode_clique_block(Graph::complete(3), balanced_partition(3, 3))));
}

TEST_CASE("restriction semantics") {
    // (x or y) and (not x or z), x=1 -> (z)
    CnfFormula f(3);
    f.add_clause(Clause{1, 2});
    f.add_clause(Clause{-1, 3});
    Restriction rho;
    rho.set(1, true);
    CnfFormula r = restrict_formula(f, rho);
    CHECK(r.size() == 1);
    CHECK(r.clause(0) == Clause{3});

    // (x), x=0 -> empty clause retained
    CnfFormula u(1);
    u.add_clause(Clause{1});
    Restriction rho0;
    rho0.set(1, false);
    CnfFormula r0 = restrict_formula(u, rho0);
    CHECK(r0.size() == 1);
    CHECK(r0.clause(0).empty());

    CHECK_THROWS_AS(rho0.set(1, true), std::invalid_argument);
}

TEST_CASE("restrict is idempotent and insensitive to clause order") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = oracles::random_graph(5, 0.5, 700 + seed);
        CnfFormula f = encode_clique(g, 2, true);
        Restriction rho;
        uint64_t h = splitmix64(seed);
        for (int v = 1; v <= f.num_vars(); ++v)
            if ((h >> v) & 1) rho.set(v, ((h >> (v + 20)) & 1) != 0);
        CnfFormula once = restrict_formula(f, rho);
        CHECK(once == restrict_formula(once, rho));
        // permuted clause order restricts to the same clause set
        CnfFormula perm(f.num_vars());
        for (int i = f.size() - 1; i >= 0; --i) perm.add_clause(f.clause(i), f.tag(i));
        CHECK(once == restrict_formula(perm, rho));
    }
}

TEST_CASE("restricting the encoding to a vertex subset gives the induced encoding") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        int n = 4 + (int)(seed % 3);
        Graph g = oracles::random_graph(n, 0.5, 300 + seed);
        int k = 2 + (int)(seed % 2);
        VertexSet keep(n);
        for (int v = 0; v < n; ++v)
            if ((splitmix64(seed + 99) >> v) & 1) keep.set(v);
        Restriction rho;
        for (int v = 0; v < n; ++v)
            if (!keep.test(v))
                for (int i = 1; i <= k; ++i) rho.set(clique_var(v, i, k), false);
        CHECK(restrict_formula(encode_clique(g, k, false), rho) ==
              encode_clique_on(g, k, false, keep));
    }
}

TEST_CASE("dimacs writing matches the documented format") {
    CnfFormula f(1);
    f.add_clause(Clause{1});
    std::stringstream ss;
    write_dimacs(ss, f);
    CHECK(ss.str() == "p cnf 1 1\n1 0\n");

    CnfFormula e(1);
    e.add_clause(Clause{});
    std::stringstream s2;
    write_dimacs(s2, e);
    CHECK(s2.str() == "p cnf 1 1\n0\n");
}

TEST_CASE("dimacs round trip on random encodings") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        int n = 2 + (int)(seed % 5);
        int k = 1 + (int)(seed % 3);
        Graph g = oracles::random_graph(n, 0.4, seed);
        CnfFormula f = (seed % 2) ? encode_clique(g, k, seed % 3 == 0)
                                  : encode_clique_block(g, balanced_partition(n, std::min(n, k)));
        std::stringstream ss;
        write_dimacs(ss, f);
        CnfFormula back = read_dimacs(ss);
        CHECK(f == back);
    }
}
