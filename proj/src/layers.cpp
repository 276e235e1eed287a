#include "kindep/layers.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "kindep/error.hpp"

namespace kindep {
namespace {

VertexSet normalized(const Graph& g, VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s) {
        if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
    }
    return s;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s) {
        auto nbrs = g.neighbors(v);
        out.insert(out.end(), nbrs.begin(), nbrs.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

const char* to_string(Check c) {
    switch (c) {
        case Check::holds: return "holds";
        case Check::violated: return "violated";
        case Check::not_applicable: return "not_applicable";
    }
    return "unknown";
}

bool LayerAudit::all_hold() const {
    return std::none_of(rows.begin(), rows.end(), [](const LayerAuditRow& r) {
        return r.three_seed_sum == Check::violated || r.degree_scaled_sum == Check::violated;
    });
}

LayerDecomposition layer_decomposition(const Graph& g, const VertexSet& seed) {
    LayerDecomposition out;
    out.seed = normalized(g, seed);
    if (out.seed.empty()) throw PreconditionError("layer decomposition needs a nonempty seed set");

    out.layers.push_back(out.seed);
    VertexSet before;  // N^{j-2}
    while (true) {
        const VertexSet& last = out.layers.back();
        VertexSet next = set_minus(open_neighborhood(g, last), last);
        next = set_minus(next, before);
        if (next.empty()) break;
        before = last;
        out.layers.push_back(std::move(next));
    }
    return out;
}

bool is_k_independent(const Graph& g, const VertexSet& s, std::int32_t k) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    const VertexSet set = normalized(g, s);
    if (set.size() < 2 || k == 0) return true;
    for (std::size_t a = 0; a + 1 < set.size(); ++a) {
        const auto d = bfs_distances(g, set[a], k);
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            if (d.reachable(set[b])) return false;
        }
    }
    return true;
}

LayerAudit check_layer_inequalities(const Graph& g, const VertexSet& s, std::int32_t k) {
    if (k < 1) throw PreconditionError("k must be positive");
    const VertexSet set = normalized(g, s);
    if (set.empty()) throw PreconditionError("seed set is empty");
    if (!is_connected(g)) throw PreconditionError("graph is not connected");
    if (const auto diam = diameter(g); !diam || *diam < k + 1) {
        throw PreconditionError("graph diameter " + std::to_string(diam.value_or(-1)) + " is below k+1 = " +
                                std::to_string(k + 1));
    }
    if (!is_k_independent(g, set, k)) throw PreconditionError("seed set is not " + std::to_string(k) + "-independent");

    LayerAudit audit;
    audit.k = k;
    audit.delta = degree_stats(g).min_degree;
    audit.seed_size = set.size();
    const auto layers = layer_decomposition(g, set);
    const auto seeds = set.size();
    for (std::int32_t i = 3; i <= k / 2 - 1; ++i) {
        LayerAuditRow row;
        row.i = i;
        row.prev_size = layers.layer_size(static_cast<std::size_t>(i - 1));
        row.mid_size = layers.layer_size(static_cast<std::size_t>(i));
        row.next_size = layers.layer_size(static_cast<std::size_t>(i + 1));
        if (row.next_size > 0) {
            const auto sum = row.prev_size + row.mid_size + row.next_size;
            row.three_seed_sum = sum >= 3 * seeds ? Check::holds : Check::violated;
            if (audit.delta >= 2) {
                row.degree_scaled_sum =
                    sum >= static_cast<std::size_t>(audit.delta + 1) * seeds ? Check::holds : Check::violated;
            }
        }
        audit.rows.push_back(row);
    }
    return audit;
}

}  // namespace kindep
