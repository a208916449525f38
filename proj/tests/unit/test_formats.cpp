#include <doctest.h>

#include <sstream>

#include "kclique/proof.hpp"

using namespace kclique;

// Pins the documented file formats byte for byte; whoever changes these
// must bump docs/robp-formats.md and the readers together.

TEST_CASE("robp file bytes") {
    CnfFormula f(1);
    int cx = f.add_clause(Clause{1});
    int cnx = f.add_clause(Clause{-1});
    BranchingProgram p(1);
    int s0 = p.add_sink(cx);
    int s1 = p.add_sink(cnx);
    p.set_root(p.add_internal(1, s0, s1));
    std::stringstream ss;
    write_robp(ss, p);
    CHECK(ss.str() ==
          "p robp 3 2 1\n"
          "S 0 0\n"
          "S 1 1\n"
          "N 2 1 0 1\n");
    BranchingProgram back = read_robp(ss);
    CHECK(verify_search_program(back, f).ok);
}

TEST_CASE("proof file bytes") {
    ResolutionProof pi;
    pi.add_axiom(Clause{1});
    pi.add_axiom(Clause{-1});
    pi.add_resolvent(Clause{}, 0, 1, 1);
    std::stringstream ss;
    write_proof(ss, pi);
    CHECK(ss.str() ==
          "A 1 0\n"
          "A -1 0\n"
          "R 1 2 1 0\n");
    ResolutionProof back = read_proof(ss);
    CnfFormula f(1);
    f.add_clause(Clause{1});
    f.add_clause(Clause{-1});
    CHECK(verify_refutation(back, f, true).ok);
}

TEST_CASE("cnf file bytes with a named variable") {
    CnfFormula f(2);
    f.set_var_name(1, "x_0");
    f.add_clause(Clause{1, -2});
    std::stringstream ss;
    write_dimacs(ss, f);
    CHECK(ss.str() ==
          "c var 1 x_0\n"
          "p cnf 2 1\n"
          "1 -2 0\n");
    CnfFormula back = read_dimacs(ss);
    CHECK(back == f);
    CHECK(back.var_name(1) == "x_0");
}
