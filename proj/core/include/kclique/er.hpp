#pragma once

#include <cstdint>

#include "kclique/graph.hpp"

namespace kclique {

// Erdos-Renyi sampling parameters.  The edge probability is derived as
// p = n^(-2*xi/(k-1)); with_p overrides it directly (used for the degenerate
// p = 0 / p = 1 cases and for tests).
struct ErParams {
    int n = 0;
    int k = 2;
    double xi = 1.0;
    uint64_t seed = 0;
    double p = 0.0;

    static ErParams from_xi(int n, int k, double xi, uint64_t seed);
    static ErParams with_p(int n, double p, uint64_t seed);
};

double er_edge_probability(int n, int k, double xi);

// One coin per unordered pair, keyed by (seed, min(u,v), max(u,v)) through
// splitmix64, so the sample is independent of enumeration order and
// bit-identical across platforms.  The exact mixer is in the implementation
// and is part of the file-format-level contract.
bool er_edge_coin(uint64_t seed, int u, int v, double p);

Graph sample_er(const ErParams& params);

// splitmix64 finalizer, also used to derive per-sample RNG streams.
uint64_t splitmix64(uint64_t x);

}  // namespace kclique
