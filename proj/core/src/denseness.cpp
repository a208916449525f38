#include "kclique/denseness.hpp"

#include <cmath>

namespace kclique {

DensenessParams derive_parameters(int n, int k, double xi, double epsilon) {
    if (!(epsilon > 0 && epsilon < 0.25))
        throw std::invalid_argument("derive_parameters: need 0 < epsilon < 1/4");
    if (!(xi > 1)) throw std::invalid_argument("derive_parameters: need xi > 1");
    if (k < 2) throw std::invalid_argument("derive_parameters: need k >= 2");
    if (n < 2) throw std::invalid_argument("derive_parameters: need n >= 2");
    DensenessParams p;
    p.k = k;
    p.xi = xi;
    p.epsilon = epsilon;
    p.t = 32.0 * xi / epsilon;
    p.s = std::sqrt((double)n);
    p.r = 4.0 * k / (p.t * p.t);
    p.r_prime = p.t * p.r;
    p.delta = 2.0 * xi / (double)(k - 1);
    p.q = std::pow((double)n, 1.0 - p.t * p.delta * p.r) / (4.0 * k * p.t);
    p.q_prime = epsilon * p.r * std::pow(p.s, 1.0 + epsilon) * std::log(p.s);
    if (!std::isfinite(p.q) || !std::isfinite(p.q_prime))
        throw std::invalid_argument("derive_parameters: derived values not finite");
    return p;
}

bool is_neighbour_dense_for(const Graph& g, const VertexSet& w, const VertexSet& r_set,
                            double q) {
    return (double)common_neighbourhood(g, r_set, w).count() >= q;
}

namespace {

// Enumerate subsets of the full vertex set of size lo..hi in
// size-lexicographic order; f returns false to stop.
template <class F>
void for_subsets(int n, int lo, int hi, long long& budget, F f) {
    std::vector<int> idx;
    VertexSet set(n);
    for (int size = lo; size <= hi; ++size) {
        if (size > n) break;
        if (size == 0) {
            if (--budget < 0) throw BudgetExceeded("subset enumeration budget exceeded");
            if (!f(VertexSet(n))) return;
            continue;
        }
        idx.assign(size, 0);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (--budget < 0) throw BudgetExceeded("subset enumeration budget exceeded");
            VertexSet r(n);
            for (int i : idx) r.set(i);
            if (!f(r)) return;
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

int radius_floor(double r) {
    if (r < 0) return -1;
    return (int)std::floor(r);
}

}  // namespace

DenseCheck is_r_q_dense(const Graph& g, const VertexSet& w, double r, double q,
                        long long budget) {
    DenseCheck out;
    for_subsets(g.n(), 0, radius_floor(r), budget, [&](const VertexSet& r_set) {
        if (!is_neighbour_dense_for(g, w, r_set, q)) {
            out.ok = false;
            out.counterexample = r_set;
            return false;
        }
        return true;
    });
    return out;
}

DenseCheck check_mostly_dense(const Graph& g, const VertexSet& w, const VertexSet& s_set,
                              double r_prime, double r, double q_prime, long long budget) {
    DenseCheck out;
    for_subsets(g.n(), 0, radius_floor(r_prime), budget, [&](const VertexSet& r_set) {
        double nh = (double)common_neighbourhood(g, r_set, w).count();
        if (nh < q_prime && (double)(r_set & s_set).count() < r) {
            out.ok = false;
            out.counterexample = r_set;
            return false;
        }
        return true;
    });
    return out;
}

VertexSet greedy_witness(const Graph& g, const VertexSet& w, double r_prime, double r,
                         double q_prime, long long budget) {
    VertexSet s(g.n());
    for_subsets(g.n(), 1, radius_floor(r_prime), budget, [&](const VertexSet& r_set) {
        if ((double)common_neighbourhood(g, r_set, w).count() <= q_prime &&
            (double)(r_set & s).count() <= r)
            s |= r_set;
        return true;
    });
    return s;
}

DensenessReport is_clique_dense(const Graph& g, const Partition& part,
                                const DensenessParams& params, const WCandidates& cand,
                                long long budget) {
    DensenessReport rep;
    double tr = params.t * params.r;
    double tq = params.t * params.q;
    for (int b = 0; b < part.k(); ++b) {
        BlockDenseResult br;
        br.block = b;
        DenseCheck c = is_r_q_dense(g, part.block_set(b), tr, tq, budget);
        br.ok = c.ok;
        br.counterexample = c.counterexample;
        if (!c.ok) rep.property1 = false;
        rep.blocks.push_back(std::move(br));
    }

    auto check_w = [&](const VertexSet& w) {
        WitnessResult res;
        res.w = w;
        DenseCheck dense = is_r_q_dense(g, w, params.r, params.q, budget);
        res.relevant = dense.ok;
        if (res.relevant) {
            res.witness = greedy_witness(g, w, tr, params.r, params.q_prime, budget);
            if ((double)res.witness.count() > params.s) {
                res.ok = false;
            } else {
                DenseCheck mostly = check_mostly_dense(g, w, res.witness, tr, params.r,
                                                       params.q_prime, budget);
                res.ok = mostly.ok;
                res.counterexample = mostly.counterexample;
            }
            if (!res.ok) rep.property2 = false;
        }
        rep.w_results.push_back(std::move(res));
    };

    if (cand.exhaustive) {
        if (g.n() > 16)
            throw BudgetExceeded("is_clique_dense: exhaustive W mode needs n <= 16");
        for (uint64_t mask = 0; mask < (1ULL << g.n()); ++mask) {
            VertexSet w(g.n());
            for (int v = 0; v < g.n(); ++v)
                if ((mask >> v) & 1) w.set(v);
            check_w(w);
        }
    } else {
        for (const VertexSet& w : cand.list) check_w(w);
    }
    rep.clique_dense = rep.property1 && rep.property2;
    return rep;
}

}  // namespace kclique
