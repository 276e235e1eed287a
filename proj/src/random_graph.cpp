#include "kindep/random_graph.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "kindep/error.hpp"

namespace kindep {
namespace {

// Rejection sampling on the raw engine output keeps results identical across
// standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

bool coin(std::mt19937_64& rng, EdgeProbability p) { return uniform_below(rng, p.den) < p.num; }

}  // namespace

Graph random_connected_graph(Vertex n, EdgeProbability p, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random graph needs n >= 1, got " + std::to_string(n));
    if (p.den == 0 || p.num > p.den) throw PreconditionError("edge probability must lie in [0,1]");
    // lowest terms, so 1/4 and 25/100 draw the same graph
    if (const auto g = std::gcd(p.num, p.den); g > 1) {
        p.num /= g;
        p.den /= g;
    }
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, p)) edges.push_back({u, v});
        auto g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }

    // random recursive tree: vertex v attaches to a uniformly chosen earlier vertex
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(v))), v});
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng, p)) edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

}  // namespace kindep
