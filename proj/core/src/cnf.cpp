#include "kclique/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kclique {

Clause::Clause(std::vector<Lit> ls) {
    std::sort(ls.begin(), ls.end(), [](Lit a, Lit b) {
        if (lit_var(a) != lit_var(b)) return lit_var(a) < lit_var(b);
        return a < b;
    });
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
        if (lit_var(ls[i]) == lit_var(ls[i + 1]))
            throw std::invalid_argument("clause: tautological (both polarities of a variable)");
    }
    for (Lit l : ls)
        if (l == 0) throw std::invalid_argument("clause: zero literal");
    lits_ = std::move(ls);
}

bool Clause::contains(Lit l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l, [](Lit a, Lit b) {
        if (lit_var(a) != lit_var(b)) return lit_var(a) < lit_var(b);
        return a < b;
    });
}

Clause Clause::without(Lit l) const {
    std::vector<Lit> out;
    out.reserve(lits_.size());
    for (Lit x : lits_)
        if (x != l) out.push_back(x);
    return Clause(std::move(out));
}

std::string to_string(const Clause& c) {
    std::ostringstream ss;
    for (Lit l : c) ss << l << " ";
    ss << "0";
    return ss.str();
}

int CnfFormula::add_clause(Clause c, AxiomTag tag) {
    for (Lit l : c)
        if (lit_var(l) > num_vars_) throw std::invalid_argument("cnf: literal beyond num_vars");
    auto it = index_.find(c);
    if (it != index_.end()) return it->second;
    int idx = (int)clauses_.size();
    index_.emplace(c, idx);
    clauses_.push_back(std::move(c));
    tags_.push_back(tag);
    return idx;
}

int CnfFormula::find(const Clause& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

bool CnfFormula::falsified_by_total(const std::vector<int8_t>& assignment, int clause_idx) const {
    for (Lit l : clauses_[clause_idx]) {
        int v = lit_var(l);
        bool val = assignment[v] != 0;
        if (val == lit_positive(l)) return false;
    }
    return true;
}

int CnfFormula::count_tag(AxiomTag t) const {
    int c = 0;
    for (AxiomTag x : tags_)
        if (x == t) ++c;
    return c;
}

bool operator==(const CnfFormula& a, const CnfFormula& b) {
    if (a.num_vars_ != b.num_vars_ || a.clauses_.size() != b.clauses_.size()) return false;
    for (const auto& c : a.clauses_)
        if (b.find(c) < 0) return false;
    return true;
}

void Restriction::set(int var, bool b) {
    auto [it, fresh] = values.emplace(var, b);
    if (!fresh && it->second != b)
        throw std::invalid_argument("restriction: variable assigned twice");
}

CnfFormula encode_clique_on(const Graph& g, int k, bool include_functionality,
                            const VertexSet& on) {
    if (k < 1) throw std::invalid_argument("encode_clique: k >= 1 required");
    int n = g.n();
    CnfFormula f(n * k);
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= k; ++i)
            f.set_var_name(clique_var(v, i, k),
                           "x_{" + std::to_string(v) + "," + std::to_string(i) + "}");

    auto vs = on.to_vector();
    // edge axioms: i != j and {u,v} not an edge, u = v included
    for (int u : vs)
        for (int v : vs) {
            if (v < u) continue;
            if (u != v && g.has_edge(u, v)) continue;
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j) {
                    if (i == j) continue;
                    if (u == v && j < i) continue;  // unordered pair of literals
                    Lit a = -clique_var(u, i, k), b = -clique_var(v, j, k);
                    f.add_clause(Clause{a, b}, AxiomTag::edge);
                }
        }
    // clique axioms
    for (int i = 1; i <= k; ++i) {
        std::vector<Lit> ls;
        for (int v : vs) ls.push_back(clique_var(v, i, k));
        f.add_clause(Clause(std::move(ls)), AxiomTag::clique);
    }
    if (include_functionality) {
        for (int i = 1; i <= k; ++i)
            for (size_t a = 0; a < vs.size(); ++a)
                for (size_t b = a + 1; b < vs.size(); ++b)
                    f.add_clause(Clause{-clique_var(vs[a], i, k), -clique_var(vs[b], i, k)},
                                 AxiomTag::functionality);
    }
    return f;
}

CnfFormula encode_clique(const Graph& g, int k, bool include_functionality) {
    return encode_clique_on(g, k, include_functionality, g.vertices());
}

CnfFormula encode_clique_block(const Graph& g, const Partition& part) {
    if (part.n() != g.n()) throw std::invalid_argument("encode_clique_block: size mismatch");
    int n = g.n();
    CnfFormula f(n);
    for (int v = 0; v < n; ++v) f.set_var_name(v + 1, "x_" + std::to_string(v));

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) f.add_clause(Clause{-(u + 1), -(v + 1)}, AxiomTag::edge);
    for (int i = 0; i < part.k(); ++i) {
        std::vector<Lit> ls;
        for (int v : part.blocks[i]) ls.push_back(v + 1);
        f.add_clause(Clause(std::move(ls)), AxiomTag::clique);
    }
    for (int i = 0; i < part.k(); ++i) {
        const auto& blk = part.blocks[i];
        for (size_t a = 0; a < blk.size(); ++a)
            for (size_t b = a + 1; b < blk.size(); ++b)
                f.add_clause(Clause{-(blk[a] + 1), -(blk[b] + 1)}, AxiomTag::functionality);
    }
    return f;
}

std::optional<Clause> restrict_clause(const Clause& c, const Restriction& rho) {
    std::vector<Lit> kept;
    for (Lit l : c) {
        int v = lit_var(l);
        if (!rho.has(v)) {
            kept.push_back(l);
            continue;
        }
        if (rho.val(v) == lit_positive(l)) return std::nullopt;  // satisfied
        // falsified literal dropped
    }
    return Clause(std::move(kept));
}

CnfFormula restrict_formula(const CnfFormula& f, const Restriction& rho) {
    CnfFormula out(f.num_vars());
    for (int v = 1; v <= f.num_vars(); ++v) out.set_var_name(v, f.var_name(v));
    for (int i = 0; i < f.size(); ++i) {
        auto r = restrict_clause(f.clause(i), rho);
        if (r) out.add_clause(std::move(*r), f.tag(i));
    }
    return out;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
    for (int v = 1; v <= f.num_vars(); ++v)
        if (!f.var_name(v).empty()) out << "c var " << v << " " << f.var_name(v) << "\n";
    out << "p cnf " << f.num_vars() << " " << f.size() << "\n";
    for (int i = 0; i < f.size(); ++i) out << to_string(f.clause(i)) << "\n";
}

CnfFormula read_dimacs(std::istream& in) {
    std::string line;
    CnfFormula f;
    std::vector<std::pair<int, std::string>> names;
    bool have_header = false;
    std::vector<Lit> cur;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream ss(line);
            std::string c, kw, name;
            int var;
            if (ss >> c >> kw >> var >> name && kw == "var") names.emplace_back(var, name);
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream ss(line);
            std::string p, fmt;
            int nv = 0;
            long long nc = 0;
            ss >> p >> fmt >> nv >> nc;
            if (fmt != "cnf") throw std::runtime_error("dimacs cnf: expected 'p cnf'");
            f = CnfFormula(nv);
            have_header = true;
            continue;
        }
        if (!have_header) throw std::runtime_error("dimacs cnf: clause before header");
        std::istringstream ss(line);
        Lit l;
        while (ss >> l) {
            if (l == 0) {
                f.add_clause(Clause(cur));
                cur.clear();
            } else {
                cur.push_back(l);
            }
        }
    }
    if (!cur.empty()) throw std::runtime_error("dimacs cnf: unterminated clause");
    if (!have_header) throw std::runtime_error("dimacs cnf: missing header");
    for (auto& [v, name] : names)
        if (v >= 1 && v <= f.num_vars()) f.set_var_name(v, name);
    return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cnf file: " + path);
    return read_dimacs(in);
}

}  // namespace kclique
