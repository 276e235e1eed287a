#include "kindep/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "kindep/error.hpp"

namespace kindep {

Graph::Graph(Vertex n) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative, got " + std::to_string(n));
    adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edge_list(Vertex n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (!g.contains(u) || !g.contains(v)) {
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u) + " is not allowed");
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t twice_edges = 0;
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        twice_edges += nbrs.size();
    }
    g.edge_count_ = twice_edges / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

DistanceVector bfs_distances(const Graph& g, Vertex source, std::int32_t max_depth) {
    if (!g.contains(source)) {
        throw PreconditionError("BFS source " + std::to_string(source) + " is not a vertex");
    }
    DistanceVector out;
    out.source = source;
    out.dist.assign(static_cast<std::size_t>(g.vertex_count()), DistanceVector::kUnreachable);
    out.dist[static_cast<std::size_t>(source)] = 0;
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        const auto du = out.dist[static_cast<std::size_t>(u)];
        if (du >= max_depth) continue;
        for (Vertex w : g.neighbors(u)) {
            auto& dw = out.dist[static_cast<std::size_t>(w)];
            if (dw == DistanceVector::kUnreachable) {
                dw = du + 1;
                queue.push_back(w);
            }
        }
    }
    return out;
}

DistanceVector bfs_distances(const Graph& g, Vertex source) {
    return bfs_distances(g, source, std::numeric_limits<std::int32_t>::max());
}

std::optional<std::int32_t> diameter(const Graph& g) {
    std::int32_t best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto d = bfs_distances(g, s);
        for (auto x : d.dist) {
            if (x == DistanceVector::kUnreachable) return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

DegreeStats degree_stats(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("degree statistics are undefined on the empty graph");
    DegreeStats s;
    s.min_degree = std::numeric_limits<std::int32_t>::max();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto d = static_cast<std::int32_t>(g.degree(v));
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
    }
    s.is_regular = s.min_degree == s.max_degree;
    return s;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph disjoint_union(const Graph& g, std::int32_t copies) {
    if (copies < 1) throw PreconditionError("disjoint union needs at least one copy, got " + std::to_string(copies));
    const Vertex n = g.vertex_count();
    const auto base = g.edges();
    std::vector<Edge> edges;
    edges.reserve(base.size() * static_cast<std::size_t>(copies));
    for (std::int32_t c = 0; c < copies; ++c) {
        for (const auto& [u, v] : base) edges.push_back({u + c * n, v + c * n});
    }
    return Graph::from_edge_list(n * copies, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(static_cast<std::size_t>(vertices[i])) = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex u : vertices) {
        for (Vertex w : g.neighbors(u)) {
            const auto iu = index[static_cast<std::size_t>(u)];
            const auto iw = index[static_cast<std::size_t>(w)];
            if (iw >= 0 && iu < iw) edges.push_back({iu, iw});
        }
    }
    return Graph::from_edge_list(static_cast<Vertex>(vertices.size()), edges);
}

Graph path_graph(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(Vertex n) {
    if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

Graph petersen_graph() {
    // outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::from_edge_list(10, edges);
}

}  // namespace kindep
