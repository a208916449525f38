#include "kclique/proof.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace kclique {

int ResolutionProof::add_axiom(Clause c) {
    steps_.push_back(ProofStep{std::move(c), true, -1, -1, 0});
    return size() - 1;
}

int ResolutionProof::add_resolvent(Clause c, int j, int k, int var) {
    if (j < 0 || k < 0 || j >= size() || k >= size())
        throw std::invalid_argument("proof: antecedent must precede the step");
    steps_.push_back(ProofStep{std::move(c), false, j, k, var});
    return size() - 1;
}

void ResolutionProof::trim_to_refutation() {
    for (size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i].clause.empty()) {
            steps_.resize(i + 1);
            return;
        }
    }
}

namespace {

bool is_exact_resolvent(const Clause& res, const Clause& pj, const Clause& pk, int var) {
    if (!pj.contains(var) || !pk.contains(-var)) return false;
    std::vector<Lit> merged;
    for (Lit l : pj)
        if (l != var) merged.push_back(l);
    for (Lit l : pk)
        if (l != -var) merged.push_back(l);
    // a tautological merge can never equal a Clause (which rejects them)
    for (Lit l : merged)
        if (std::find(merged.begin(), merged.end(), -l) != merged.end()) return false;
    return Clause(std::move(merged)) == res;
}

}  // namespace

Verdict verify_refutation(const ResolutionProof& pi, const CnfFormula& f, bool require_regular) {
    if (pi.size() == 0) return Verdict{false, "empty proof", -1};
    int nv = f.num_vars() + 1;
    std::vector<VertexSet> resolved_above;  // vars resolved on some path ending at step i
    if (require_regular) resolved_above.assign(pi.size(), VertexSet(nv));

    for (int i = 0; i < pi.size(); ++i) {
        const ProofStep& st = pi.step(i);
        if (st.axiom) {
            if (f.find(st.clause) < 0)
                return Verdict{false, "step " + std::to_string(i + 1) + ": clause is not an axiom",
                               i};
            continue;
        }
        if (st.ante1 >= i || st.ante2 >= i)
            return Verdict{false, "step " + std::to_string(i + 1) + ": antecedent after step", i};
        if (!is_exact_resolvent(st.clause, pi.clause(st.ante1), pi.clause(st.ante2), st.var))
            return Verdict{false,
                           "step " + std::to_string(i + 1) + ": not the resolvent of " +
                               std::to_string(st.ante1 + 1) + ", " + std::to_string(st.ante2 + 1) +
                               " over " + std::to_string(st.var),
                           i};
        if (require_regular) {
            if (resolved_above[st.ante1].test(st.var) || resolved_above[st.ante2].test(st.var))
                return Verdict{false,
                               "step " + std::to_string(i + 1) + ": variable " +
                                   std::to_string(st.var) + " resolved twice on a path",
                               i};
            resolved_above[i] = resolved_above[st.ante1];
            resolved_above[i] |= resolved_above[st.ante2];
            resolved_above[i].set(st.var);
        }
    }
    if (!pi.clause(pi.size() - 1).empty())
        return Verdict{false, "final clause is not empty", pi.size() - 1};
    return {};
}

ResolutionProof robp_to_refutation(const BranchingProgram& p, const CnfFormula& f) {
    Verdict v = verify_search_program(p, f);
    if (!v) throw std::invalid_argument("robp_to_refutation: program rejected: " + v.message);

    auto order = p.topo_order();  // root first
    ResolutionProof pi;
    std::vector<int> step_of(p.size(), -1);
    std::map<Clause, int> axiom_cache;

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int id = *it;
        const BpNode& nd = p.node(id);
        if (p.is_sink(id)) {
            const Clause& c = f.clause(nd.clause);
            auto cached = axiom_cache.find(c);
            if (cached != axiom_cache.end()) {
                step_of[id] = cached->second;
            } else {
                step_of[id] = pi.add_axiom(c);
                axiom_cache.emplace(c, step_of[id]);
            }
            continue;
        }
        int s0 = step_of[nd.lo], s1 = step_of[nd.hi];
        const Clause& c0 = pi.clause(s0);
        const Clause& c1 = pi.clause(s1);
        int x = nd.var;
        if (c0.contains(x) && c1.contains(-x)) {
            std::vector<Lit> merged;
            for (Lit l : c0)
                if (l != x) merged.push_back(l);
            for (Lit l : c1)
                if (l != -x && !c0.contains(l)) merged.push_back(l);
            step_of[id] = pi.add_resolvent(Clause(std::move(merged)), s0, s1, x);
        } else if (!c0.contains(x)) {
            step_of[id] = s0;  // weakening eliminated
        } else {
            step_of[id] = s1;
        }
    }
    if (!pi.clause(step_of[p.root()]).empty())
        throw std::logic_error("robp_to_refutation: root clause not empty");
    pi.trim_to_refutation();
    return pi;
}

ResolutionProof restrict_proof(const ResolutionProof& pi, const Restriction& rho) {
    constexpr int kSatisfied = -2;
    ResolutionProof out;
    std::vector<int> map(pi.size(), -1);
    std::map<Clause, int> axiom_cache;
    int empty_at = -1;

    auto emit_axiom = [&](const Clause& c) {
        auto it = axiom_cache.find(c);
        if (it != axiom_cache.end()) return it->second;
        int idx = out.add_axiom(c);
        axiom_cache.emplace(c, idx);
        return idx;
    };

    for (int i = 0; i < pi.size() && empty_at < 0; ++i) {
        const ProofStep& st = pi.step(i);
        auto restricted = restrict_clause(st.clause, rho);
        if (!restricted) {
            map[i] = kSatisfied;
            continue;
        }
        if (st.axiom) {
            map[i] = emit_axiom(*restricted);
        } else if (rho.has(st.var)) {
            // one premise is satisfied; the other, restricted, subsumes this step
            map[i] = rho.val(st.var) ? map[st.ante2] : map[st.ante1];
        } else {
            int pj = map[st.ante1], pk = map[st.ante2];
            if (pj == kSatisfied || pk == kSatisfied) {
                // a satisfied premise forces the conclusion to be satisfied too
                map[i] = kSatisfied;
                continue;
            }
            const Clause& cj = out.clause(pj);
            const Clause& ck = out.clause(pk);
            if (cj.contains(st.var) && ck.contains(-st.var)) {
                std::vector<Lit> merged;
                for (Lit l : cj)
                    if (l != st.var) merged.push_back(l);
                for (Lit l : ck)
                    if (l != -st.var && !cj.contains(l)) merged.push_back(l);
                map[i] = out.add_resolvent(Clause(std::move(merged)), pj, pk, st.var);
            } else if (!cj.contains(st.var)) {
                map[i] = pj;
            } else {
                map[i] = pk;
            }
        }
        if (map[i] >= 0 && out.clause(map[i]).empty()) empty_at = map[i];
    }
    if (empty_at < 0) {
        int last = map[pi.size() - 1];
        if (last < 0 || !out.clause(last).empty())
            throw std::logic_error("restrict_proof: restriction did not preserve the refutation");
    }
    out.trim_to_refutation();
    return out;
}

void write_proof(std::ostream& out, const ResolutionProof& pi) {
    for (int i = 0; i < pi.size(); ++i) {
        const ProofStep& st = pi.step(i);
        if (st.axiom)
            out << "A " << to_string(st.clause) << "\n";
        else
            out << "R " << st.ante1 + 1 << " " << st.ante2 + 1 << " " << st.var << " "
                << to_string(st.clause) << "\n";
    }
}

ResolutionProof read_proof(std::istream& in) {
    ResolutionProof pi;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        auto read_clause = [&]() {
            std::vector<Lit> ls;
            Lit l;
            while (ss >> l && l != 0) ls.push_back(l);
            return Clause(std::move(ls));
        };
        if (tok == "A") {
            pi.add_axiom(read_clause());
        } else if (tok == "R") {
            int j, k, var;
            ss >> j >> k >> var;
            Clause c = read_clause();
            pi.add_resolvent(std::move(c), j - 1, k - 1, var);
        } else {
            throw std::runtime_error("proof: unknown step kind '" + tok + "'");
        }
    }
    return pi;
}

ResolutionProof read_proof_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open proof file: " + path);
    return read_proof(in);
}

}  // namespace kclique
