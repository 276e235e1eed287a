#pragma once

#include <cstdint>
#include <vector>

#include "kindep/graph.hpp"

namespace kindep {

// The layered neighborhoods N^0(S) = S, N^1(S) = N(S), and
// N^j(S) = N(N^{j-1}(S)) \ (N^{j-2}(S) ∪ N^{j-1}(S)),
// listed up to the last nonempty layer. layers[j] is exactly the set of
// vertices whose distance to S is j.
struct LayerDecomposition {
    VertexSet seed;
    std::vector<VertexSet> layers;

    // Size of layer j, 0 past the last nonempty layer.
    std::size_t layer_size(std::size_t j) const { return j < layers.size() ? layers[j].size() : 0; }
};

enum class Check { holds, violated, not_applicable };

const char* to_string(Check c);

struct LayerAuditRow {
    std::int32_t i = 0;
    std::size_t prev_size = 0;  // |N^{i-1}(S)|
    std::size_t mid_size = 0;   // |N^i(S)|
    std::size_t next_size = 0;  // |N^{i+1}(S)|
    Check three_seed_sum = Check::not_applicable;      // sum >= 3|S|
    Check degree_scaled_sum = Check::not_applicable;   // sum >= (δ+1)|S|, δ >= 2 only
};

// Audit of the three-consecutive-layer inequalities on one seed set,
// for i in {3, ..., floor(k/2) - 1}.
struct LayerAudit {
    std::int32_t k = 0;
    std::int32_t delta = 0;
    std::size_t seed_size = 0;
    std::vector<LayerAuditRow> rows;

    bool all_hold() const;
};

// Throws PreconditionError on an empty or out-of-range seed.
LayerDecomposition layer_decomposition(const Graph& g, const VertexSet& seed);

// True iff every pair of distinct vertices in s lies at distance > k
// (different components count as infinitely far).
bool is_k_independent(const Graph& g, const VertexSet& s, std::int32_t k);

// Requires s k-independent, g connected and diam(g) >= k+1.
LayerAudit check_layer_inequalities(const Graph& g, const VertexSet& s, std::int32_t k);

}  // namespace kindep
