#include "kclique/er.hpp"

#include <cmath>
#include <stdexcept>

namespace kclique {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double er_edge_probability(int n, int k, double xi) {
    if (n < 1) throw std::invalid_argument("er: n >= 1 required");
    if (k < 2) throw std::invalid_argument("er: k >= 2 required");
    return std::pow((double)n, -2.0 * xi / (double)(k - 1));
}

ErParams ErParams::from_xi(int n, int k, double xi, uint64_t seed) {
    ErParams p;
    p.n = n;
    p.k = k;
    p.xi = xi;
    p.seed = seed;
    p.p = er_edge_probability(n, k, xi);
    return p;
}

ErParams ErParams::with_p(int n, double prob, uint64_t seed) {
    ErParams p;
    p.n = n;
    p.seed = seed;
    p.p = prob;
    return p;
}

bool er_edge_coin(uint64_t seed, int u, int v, double p) {
    if (u > v) std::swap(u, v);
    uint64_t key = ((uint64_t)(uint32_t)u << 32) | (uint64_t)(uint32_t)v;
    uint64_t h = splitmix64(splitmix64(seed) ^ splitmix64(key));
    double unit = (double)(h >> 11) * 0x1.0p-53;  // uniform in [0, 1)
    return unit < p;
}

Graph sample_er(const ErParams& params) {
    if (params.n < 1) throw std::invalid_argument("sample_er: n >= 1 required");
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw std::invalid_argument("sample_er: p outside [0, 1]");
    Graph g(params.n);
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (er_edge_coin(params.seed, u, v, params.p)) g.add_edge(u, v);
    return g;
}

}  // namespace kclique
