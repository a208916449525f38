#include <doctest.h>

#include "../support/oracles.hpp"
#include "kclique/er.hpp"
#include "kclique/proof.hpp"
#include "kclique/solvers.hpp"

using namespace kclique;

TEST_CASE("both solvers on fixed graphs") {
    CHECK(cliquer(Graph::complete(4)).clique.size() == 4);
    CHECK(cliquer(Graph::cycle(5)).clique.size() == 2);
    CHECK(max_clique_bb(Graph::complete(6)).clique.size() == 6);
    Graph bip(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) bip.add_edge(a, b);
    CHECK(max_clique_bb(bip).clique.size() == 2);
}

TEST_CASE("solvers agree with the oracle and return real cliques") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        int n = 8 + (int)(seed % 10);
        double p = 0.3 + 0.05 * (seed % 7);
        Graph g = oracles::random_graph(n, p, 5000 + seed);
        auto c1 = cliquer(g);
        auto c2 = max_clique_bb(g);
        CHECK(is_clique(g, c1.clique));
        CHECK(is_clique(g, c2.clique));
        int want = (int)max_clique_brute(g).size();
        CHECK((int)c1.clique.size() == want);
        CHECK((int)c2.clique.size() == want);
    }
}

TEST_CASE("traces balance their enter/leave events") {
    Graph g = oracles::random_graph(12, 0.4, 77);
    for (auto res : {cliquer(g), max_clique_bb(g)}) {
        long long depth = 0;
        for (const auto& ev : res.trace.events) {
            if (ev.kind == TraceEvent::enter) ++depth;
            if (ev.kind == TraceEvent::leave) --depth;
            CHECK(depth >= 0);
        }
        CHECK(depth == 0);
        CHECK(res.stats.expand_calls > 0);
        // incumbent history strictly improves
        for (size_t i = 1; i < res.stats.incumbent_history.size(); ++i)
            CHECK(res.stats.incumbent_history[i] > res.stats.incumbent_history[i - 1]);
    }
}

TEST_CASE("russian-doll bounds equal suffix clique numbers") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        int n = 10 + (int)(seed % 11);  // up to 20
        Graph g = oracles::random_graph(n, 0.4, 6000 + seed);
        auto res = cliquer(g);
        REQUIRE((int)res.order.size() == n);
        for (int p = 0; p < n; ++p) {
            VertexSet suffix(n);
            for (int q = p; q < n; ++q) suffix.set(res.order[q]);
            Graph sub = oracles::induced(g, suffix);
            CHECK(res.bounds[p] == (int)max_clique_brute(sub).size());
        }
    }
}

TEST_CASE("colour_order bounds dominate prefix clique numbers") {
    // K_n: bounds[i] = i+1; empty graph: all ones
    auto [ok, bk] = colour_order(Graph::complete(5));
    for (int i = 0; i < 5; ++i) CHECK(bk[i] == i + 1);
    auto [oe, be] = colour_order(Graph::empty(4));
    for (int i = 0; i < 4; ++i) CHECK(be[i] == 1);

    for (uint64_t seed = 0; seed < 100; ++seed) {
        int n = 6 + (int)(seed % 7);  // up to 12
        Graph g = oracles::random_graph(n, 0.5, 7000 + seed);
        auto [order, bounds] = colour_order(g);
        VertexSet prefix(n);
        for (int i = 0; i < n; ++i) {
            prefix.set(order[i]);
            if (i > 0) CHECK(bounds[i] >= bounds[i - 1]);
            CHECK(bounds[i] >= (int)max_clique_brute(oracles::induced(g, prefix)).size());
        }
    }
}

TEST_CASE("prune soundness: disabling prunes keeps the answer") {
    SolverOptions off;
    off.disable_prunes = true;
    off.record_trace = false;
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = oracles::random_graph(11, 0.45, 8000 + seed);
        CHECK(cliquer(g).clique.size() == cliquer(g, off).clique.size());
        CHECK(max_clique_bb(g).clique.size() == max_clique_bb(g, off).clique.size());
        CHECK(cliquer(g, off).stats.nodes_visited >= cliquer(g).stats.nodes_visited);
    }
}

TEST_CASE("decision variants agree with the oracles") {
    CHECK(clique_decision(Graph::complete(4), 4));
    CHECK(!clique_decision(Graph::cycle(5), 3));
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 6 + (int)(seed % 3);  // up to 8, exhaustible
        Graph g = oracles::random_graph(n, 0.5, 9000 + seed);
        int k = 2 + (int)(seed % 3);
        if (k > n) continue;
        bool want = oracles::subset_scan_clique_number(g) >= k;
        CHECK(clique_decision(g, k, nullptr, SolverAlgo::cliquer) == want);
        CHECK(clique_decision(g, k, nullptr, SolverAlgo::bb) == want);
        Partition part = balanced_partition(n, k);
        bool wantb = has_transversal_clique(g, part);
        CHECK(clique_decision(g, k, &part, SolverAlgo::cliquer) == wantb);
        CHECK(clique_decision(g, k, &part, SolverAlgo::bb) == wantb);
    }
}

TEST_CASE("russian-doll extraction on fixed cases") {
    // empty graph, k=2: verified; the all-zero run ends in a clique axiom.
    // (An assignment setting two vertices to 1 falsifies only binary axioms,
    // so no total search program can carry clique-axiom sinks exclusively.)
    Graph e4 = Graph::empty(4);
    Partition p2 = balanced_partition(4, 2);
    ExtractionResult ex = extract_robp_cliquer(e4, p2);
    CHECK(verify_search_program(ex.program, ex.formula).ok);
    TotalAssignment zeros(5, 0);
    PathState zp = path_of(ex.program, zeros);
    CHECK(ex.formula.tag(ex.program.node(zp.sink()).clause) == AxiomTag::clique);

    // single empty block on the empty-vertex graph: one empty-clause sink
    Graph none(0);
    Partition p0 = make_partition(0, {{}});
    ExtractionResult ex0 = extract_robp_cliquer(none, p0);
    CHECK(ex0.program.size() == 1);
    CHECK(ex0.formula.clause(ex0.program.node(ex0.program.root()).clause).empty());

    // instances with a transversal clique are rejected
    CHECK_THROWS_AS(extract_robp_cliquer(Graph::complete(4), p2), std::invalid_argument);
    CHECK_THROWS_AS(extract_robp_maxclique(Graph::complete(4), p2), std::invalid_argument);
}

TEST_CASE("both extractions verify on seeded clique-free instances") {
    int done = 0;
    for (uint64_t seed = 0; done < 12; ++seed) {
        REQUIRE(seed < 300);
        int n = 8 + (int)(seed % 5);  // up to 12
        int k = 3 + (int)(seed % 2);
        Graph g = oracles::random_graph(n, 0.2, 10000 + seed);
        Partition part = balanced_partition(n, k);
        if (has_transversal_clique(g, part)) continue;
        ++done;
        for (auto ex : {extract_robp_cliquer(g, part), extract_robp_maxclique(g, part)}) {
            CHECK(check_read_once(ex.program).ok);
            CHECK(verify_search_program(ex.program, ex.formula).ok);
            CHECK(ex.tree_nodes > 0);
            // conversion gives a verified regular refutation of the block encoding
            ResolutionProof pi = robp_to_refutation(ex.program, ex.formula);
            CHECK(verify_refutation(pi, ex.formula, true).ok);
            CHECK(pi.length() <= ex.program.size());
        }
    }
}

TEST_CASE("exhaustive sigma check of extracted programs on tiny instances") {
    int done = 0;
    for (uint64_t seed = 0; done < 8; ++seed) {
        REQUIRE(seed < 200);
        int n = 6 + (int)(seed % 3);
        Graph g = oracles::random_graph(n, 0.25, 11000 + seed);
        Partition part = balanced_partition(n, 3);
        if (has_transversal_clique(g, part)) continue;
        ++done;
        ExtractionResult a = extract_robp_cliquer(g, part);
        ExtractionResult b = extract_robp_maxclique(g, part);
        CHECK(oracles::search_program_sigma_oracle(a.program, a.formula));
        CHECK(oracles::search_program_sigma_oracle(b.program, b.formula));
    }
}

TEST_CASE("an isolated block vertex reaches a clique-axiom sink without splicing") {
    // vertex 4 is alone in its block and isolated, so the all-zero run ends
    // in that block's axiom
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    Partition part = make_partition(5, {{0, 1}, {2, 3}, {4}});
    REQUIRE(!has_transversal_clique(g, part));
    ExtractionResult ex = extract_robp_maxclique(g, part);
    CHECK(verify_search_program(ex.program, ex.formula).ok);
    TotalAssignment zeros(6, 0);
    int sink = path_of(ex.program, zeros).sink();
    CHECK(ex.formula.tag(ex.program.node(sink).clause) == AxiomTag::clique);
}

TEST_CASE("colour-cut extraction splices stay within their budget") {
    // bipartite-ish sparse graphs with k=3 hit the colour cut at the root
    int done = 0;
    for (uint64_t seed = 0; done < 6; ++seed) {
        REQUIRE(seed < 200);
        int n = 10 + (int)(seed % 5);
        Graph g = oracles::random_graph(n, 0.15, 12000 + seed);
        Partition part = balanced_partition(n, 3);
        if (has_transversal_clique(g, part)) continue;
        ++done;
        ExtractionResult ex = extract_robp_maxclique(g, part);
        CHECK(!ex.splices.empty());
        for (const auto& sp : ex.splices) {
            long long budget = (1LL << sp.budget) * sp.budget * sp.budget *
                               (long long)sp.universe_size * sp.universe_size;
            CHECK(sp.nodes <= budget);
        }
        CHECK(verify_search_program(ex.program, ex.formula).ok);
    }
}

TEST_CASE("extraction size stays within the simulation overhead of the run") {
    int done = 0;
    for (uint64_t seed = 0; done < 10; ++seed) {
        REQUIRE(seed < 300);
        int n = 9 + (int)(seed % 4);  // up to 12
        int k = 3 + (int)(seed % 2);
        Graph g = oracles::random_graph(n, 0.22, 13000 + seed);
        Partition part = balanced_partition(n, k);
        if (has_transversal_clique(g, part)) continue;
        ++done;
        long long overhead = (1LL << k) * k * k * (long long)n * n;
        for (auto ex : {extract_robp_cliquer(g, part), extract_robp_maxclique(g, part)})
            CHECK(ex.tree_nodes >= ex.program.size() / overhead);
    }
}
