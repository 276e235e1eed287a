#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kindep/graph.hpp"

namespace kindep {

// Same vertex set; u ~ v iff 1 <= d_G(u,v) <= k. Requires k >= 1.
Graph graph_power(const Graph& g, std::int32_t k);

enum class SolveMethod { exact, brute_force, greedy };
const char* to_string(SolveMethod m);

struct SolveResult {
    std::int32_t alpha = 0;
    VertexSet witness;
    SolveMethod method = SolveMethod::exact;
    std::uint64_t nodes_explored = 0;
};

struct ColoringResult {
    std::int32_t num_colors = 0;
    std::vector<std::int32_t> assignment;  // color of each vertex, 0-based
    bool exact = false;
};

struct ExactOptions {
    // Search nodes allowed before the solver gives up with CapExceeded.
    std::optional<std::uint64_t> max_nodes;
};

inline constexpr Vertex kBruteForceCap = 30;
inline constexpr Vertex kExactColoringCap = 30;

// Maximum independent set of G^k by branch and bound. k = 0 returns V(G).
SolveResult alpha_k_exact(const Graph& g, std::int32_t k, const ExactOptions& options = {});

// Exhaustive enumeration over vertex subsets; distances come from an
// all-pairs Floyd–Warshall table rather than graph_power. Throws CapExceeded
// above kBruteForceCap vertices.
SolveResult alpha_k_bruteforce(const Graph& g, std::int32_t k);

// Lower-bound witness: vertices in ascending G^k-degree order (ties by id),
// each kept when it is farther than k from everything kept so far.
SolveResult alpha_k_greedy(const Graph& g, std::int32_t k);

// Minimum proper coloring of G^k. Throws CapExceeded above kExactColoringCap.
ColoringResult chi_k_exact(const Graph& g, std::int32_t k);

// DSATUR on G^k: highest saturation first, then highest degree, then lowest id.
ColoringResult chi_k_greedy(const Graph& g, std::int32_t k);

// True iff assignment properly colors G^k.
bool is_distance_coloring(const Graph& g, std::int32_t k, const std::vector<std::int32_t>& assignment);

}  // namespace kindep
