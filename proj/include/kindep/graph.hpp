#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kindep {

using Vertex = std::int32_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on the dense id range [0, vertex_count).
// Neighbor lists are kept sorted so every traversal is deterministic.
// Values are immutable once built.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(Vertex n);

    // Throws PreconditionError on out-of-range endpoints or loops.
    // Duplicate and reversed pairs collapse to one edge.
    static Graph from_edge_list(Vertex n, std::span<const Edge> edges);

    Vertex vertex_count() const noexcept { return static_cast<Vertex>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

    // All edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Shortest-path lengths from one source; kUnreachable marks other components.
struct DistanceVector {
    static constexpr std::int32_t kUnreachable = -1;

    Vertex source = 0;
    std::vector<std::int32_t> dist;

    bool reachable(Vertex v) const { return dist.at(static_cast<std::size_t>(v)) != kUnreachable; }
};

struct DegreeStats {
    std::int32_t min_degree = 0;
    std::int32_t max_degree = 0;
    bool is_regular = false;
};

DistanceVector bfs_distances(const Graph& g, Vertex source);

// Same as bfs_distances but stops expanding at depth max_depth; farther
// vertices are reported unreachable.
DistanceVector bfs_distances(const Graph& g, Vertex source, std::int32_t max_depth);

// nullopt when the graph is disconnected; 0 for graphs with at most one vertex.
std::optional<std::int32_t> diameter(const Graph& g);

// Throws PreconditionError on the empty graph.
DegreeStats degree_stats(const Graph& g);

// Each component sorted ascending; components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Copy c of g occupies ids [c*n, (c+1)*n).
Graph disjoint_union(const Graph& g, std::int32_t copies);

// Subgraph induced by `vertices`, relabelled 0.. in the given (sorted) order.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Named small graphs used across tests and the CLI.
Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph petersen_graph();

}  // namespace kindep
