#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kclique/robp.hpp"

namespace kclique {

struct ProofStep {
    Clause clause;
    bool axiom = true;
    int ante1 = -1;  // 0-based step indices, valid when !axiom
    int ante2 = -1;
    int var = 0;     // resolved variable when !axiom
};

// Ordered clause sequence ending (for refutations) in the empty clause.
class ResolutionProof {
public:
    int add_axiom(Clause c);
    int add_resolvent(Clause c, int j, int k, int var);

    int size() const { return (int)steps_.size(); }
    long long length() const { return (long long)steps_.size(); }
    const ProofStep& step(int i) const { return steps_[i]; }
    const Clause& clause(int i) const { return steps_[i].clause; }

    // Drop every step after the first empty clause; antecedents always point
    // backwards, so the prefix stays well-formed.
    void trim_to_refutation();

private:
    std::vector<ProofStep> steps_;
};

// Checks each step is an axiom of f or an exact resolvent of earlier steps,
// and that the last clause is empty.  With require_regular, also checks that
// no source-to-sink path of the proof DAG resolves a variable twice.
Verdict verify_refutation(const ResolutionProof& pi, const CnfFormula& f, bool require_regular);

// Reverses a verified read-once search program into a refutation: sinks
// become axioms, a query node resolves its children's clauses over the
// queried variable when both mention it, and otherwise forwards the child
// clause that avoids the variable.  Output length <= node count, and the
// proof is regular.  Throws if the program does not verify against f.
ResolutionProof robp_to_refutation(const BranchingProgram& p, const CnfFormula& f);

// Applies rho clause-wise and repairs steps: satisfied clauses drop out,
// steps resolving an assigned variable forward the surviving premise, and
// weakened steps forward the stronger clause.  The result refutes
// restrict_formula(f, rho) and is never longer than pi.
ResolutionProof restrict_proof(const ResolutionProof& pi, const Restriction& rho);

// File format (see docs/robp-formats.md): one step per line,
//   A <lit>* 0
//   R <j> <k> <var> <lit>* 0
// with 1-based step indices j, k.
void write_proof(std::ostream& out, const ResolutionProof& pi);
ResolutionProof read_proof(std::istream& in);
ResolutionProof read_proof_file(const std::string& path);

}  // namespace kclique
