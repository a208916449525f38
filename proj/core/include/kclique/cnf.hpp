#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kclique/graph.hpp"

namespace kclique {

// Literals use the DIMACS convention: +v is the positive literal of variable
// v >= 1, -v the negative one.
using Lit = int;

inline int lit_var(Lit l) { return l < 0 ? -l : l; }
inline bool lit_positive(Lit l) { return l > 0; }

// A clause is a set of literals: canonically sorted, one occurrence per
// variable, never tautological.
class Clause {
public:
    Clause() = default;
    Clause(std::initializer_list<Lit> ls) : Clause(std::vector<Lit>(ls)) {}
    explicit Clause(std::vector<Lit> ls);

    int width() const { return (int)lits_.size(); }
    bool empty() const { return lits_.empty(); }
    bool contains(Lit l) const;
    bool mentions(int var) const { return contains(var) || contains(-var); }

    const std::vector<Lit>& lits() const { return lits_; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    Clause without(Lit l) const;

    friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }
    friend bool operator<(const Clause& a, const Clause& b) { return a.lits_ < b.lits_; }

private:
    std::vector<Lit> lits_;
};

std::string to_string(const Clause& c);

enum class AxiomTag { edge, clique, functionality, other };

// Clause database.  Storage preserves insertion order, equality is set-based,
// duplicate clauses are kept once (first tag wins).
class CnfFormula {
public:
    CnfFormula() = default;
    explicit CnfFormula(int num_vars) : num_vars_(num_vars), var_names_(num_vars + 1) {}

    int num_vars() const { return num_vars_; }
    int size() const { return (int)clauses_.size(); }
    const Clause& clause(int i) const { return clauses_[i]; }
    AxiomTag tag(int i) const { return tags_[i]; }

    // Returns the clause index; re-adding an existing clause is a no-op.
    int add_clause(Clause c, AxiomTag tag = AxiomTag::other);
    int find(const Clause& c) const;

    void set_var_name(int var, std::string name) { var_names_.at(var) = std::move(name); }
    const std::string& var_name(int var) const { return var_names_.at(var); }

    bool falsified_by_total(const std::vector<int8_t>& assignment, int clause_idx) const;

    int count_tag(AxiomTag t) const;

    // Set-based equality on (num_vars, clauses); tags and names don't count.
    friend bool operator==(const CnfFormula& a, const CnfFormula& b);

private:
    int num_vars_ = 0;
    std::vector<Clause> clauses_;
    std::vector<AxiomTag> tags_;
    std::map<Clause, int> index_;
    std::vector<std::string> var_names_{1};
};

// Partial assignment on variables; a variable is assigned at most once.
struct Restriction {
    std::map<int, bool> values;

    bool has(int var) const { return values.count(var) != 0; }
    bool val(int var) const { return values.at(var); }
    void set(int var, bool b);
};

// Variable id for x_{v,i} in the k-indexed encodings: v*k + i with v 0-based
// and i in [1, k], giving ids 1..n*k.
inline int clique_var(int v, int i, int k) { return v * k + i; }

// k-clique encoding over x_{v,i}.  Edge axioms span all i != j and all pairs
// u, v (u = v included) with {u,v} not an edge; clique axioms say index i is
// mapped somewhere; functionality axioms (optional) forbid mapping two
// vertices to one index.
CnfFormula encode_clique(const Graph& g, int k, bool include_functionality);

// Same, but only over the vertices in `on` (used for induced subformulas).
CnfFormula encode_clique_on(const Graph& g, int k, bool include_functionality,
                            const VertexSet& on);

// Transversal clique encoding over x_v: edge axioms for all non-adjacent
// pairs, one clique axiom per block, functionality axioms inside each block.
CnfFormula encode_clique_block(const Graph& g, const Partition& part);

// nullopt means the clause is satisfied by rho; otherwise the clause with
// falsified literals removed.
std::optional<Clause> restrict_clause(const Clause& c, const Restriction& rho);

CnfFormula restrict_formula(const CnfFormula& f, const Restriction& rho);

// DIMACS CNF with variable names emitted as comments ("c var <id> <name>").
void write_dimacs(std::ostream& out, const CnfFormula& f);
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);

}  // namespace kclique
