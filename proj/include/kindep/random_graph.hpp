#pragma once

#include <cstdint>

#include "kindep/graph.hpp"

namespace kindep {

// Exact edge probability num/den.
struct EdgeProbability {
    std::uint64_t num = 1;
    std::uint64_t den = 2;
};

// Erdős–Rényi G(n, p) conditioned on connectivity. Up to kMaxResamples
// fresh samples are drawn; if none is connected, a random spanning tree is
// laid down first and the remaining pairs are sampled on top of it.
// Deterministic for a given (n, p, seed).
Graph random_connected_graph(Vertex n, EdgeProbability p, std::uint64_t seed);

inline constexpr int kMaxResamples = 64;

}  // namespace kindep
