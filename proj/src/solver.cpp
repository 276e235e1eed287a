#include "kindep/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "kindep/error.hpp"

namespace kindep {
namespace {

// Fixed-width bit set over vertex ids, sized once per solve.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    // Calls f(i) for every set bit in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

std::vector<Bits> to_bits(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Bits> adj(n, Bits(n));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(w));
    return adj;
}

void require_k(std::int32_t k, std::int32_t min) {
    if (k < min) throw PreconditionError("k must be at least " + std::to_string(min) + ", got " + std::to_string(k));
}

SolveResult all_vertices(const Graph& g, SolveMethod method) {
    SolveResult r;
    r.method = method;
    r.witness.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(r.witness.begin(), r.witness.end(), Vertex{0});
    r.alpha = g.vertex_count();
    return r;
}

class MaxIndependentSet {
public:
    MaxIndependentSet(std::vector<Bits> adj, std::optional<std::uint64_t> max_nodes)
        : adj_(std::move(adj)), max_nodes_(max_nodes) {}

    void run(Bits candidates) { expand(std::move(candidates)); }

    std::vector<std::size_t> best;
    std::uint64_t nodes = 0;

private:
    // Greedy clique cover of P in ascending id order; stops counting once the
    // cover can no longer prune.
    std::size_t clique_cover(const Bits& p, std::size_t give_up_above) const {
        std::vector<Bits> common;
        bool over = false;
        p.for_each([&](std::size_t v) {
            if (over) return;
            for (auto& c : common) {
                if (c.test(v)) {
                    c &= adj_[v];
                    return;
                }
            }
            common.push_back(adj_[v]);
            common.back() &= p;
            if (common.size() > give_up_above) over = true;
        });
        return common.size();
    }

    void expand(Bits p) {
        ++nodes;
        if (max_nodes_ && nodes > *max_nodes_) {
            throw CapExceeded("branch and bound exceeded " + std::to_string(*max_nodes_) + " nodes");
        }
        if (p.none()) {
            if (current_.size() > best.size()) best = current_;
            return;
        }
        const std::size_t slack = best.size() >= current_.size() ? best.size() - current_.size() : 0;
        if (best.size() >= current_.size() && clique_cover(p, slack) <= slack) return;

        std::size_t pivot = 0;
        std::size_t pivot_degree = 0;
        bool first = true;
        p.for_each([&](std::size_t v) {
            const auto d = adj_[v].count_and(p);
            if (first || d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
                first = false;
            }
        });
        if (pivot_degree == 0) {
            // P is independent in the residual graph: take all of it
            const auto before = current_.size();
            p.for_each([&](std::size_t v) { current_.push_back(v); });
            if (current_.size() > best.size()) best = current_;
            current_.resize(before);
            return;
        }

        Bits with = p;
        with.and_not(adj_[pivot]);
        with.reset(pivot);
        current_.push_back(pivot);
        expand(std::move(with));
        current_.pop_back();

        p.reset(pivot);
        expand(std::move(p));
    }

    std::vector<Bits> adj_;
    std::optional<std::uint64_t> max_nodes_;
    std::vector<std::size_t> current_;
};

std::vector<std::vector<std::int32_t>> floyd_warshall(const Graph& g) {
    constexpr std::int32_t inf = std::numeric_limits<std::int32_t>::max() / 4;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<std::int32_t>> d(n, std::vector<std::int32_t>(n, inf));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) d[v][static_cast<std::size_t>(w)] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
    return d;
}

std::vector<std::size_t> power_degrees(const Graph& power) {
    std::vector<std::size_t> deg(static_cast<std::size_t>(power.vertex_count()));
    for (Vertex v = 0; v < power.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = power.degree(v);
    return deg;
}

// Saturation-guided coloring of an arbitrary graph.
ColoringResult dsatur(const Graph& h) {
    const auto n = static_cast<std::size_t>(h.vertex_count());
    ColoringResult out;
    out.assignment.assign(n, -1);
    std::vector<std::vector<bool>> seen_color(n);
    std::vector<std::size_t> saturation(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (out.assignment[v] >= 0) continue;
            if (pick == n || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && h.degree(static_cast<Vertex>(v)) > h.degree(static_cast<Vertex>(pick)))) {
                pick = v;
            }
        }
        std::int32_t color = 0;
        while (static_cast<std::size_t>(color) < seen_color[pick].size() && seen_color[pick][static_cast<std::size_t>(color)]) ++color;
        out.assignment[pick] = color;
        out.num_colors = std::max(out.num_colors, color + 1);
        for (Vertex w : h.neighbors(static_cast<Vertex>(pick))) {
            auto& seen = seen_color[static_cast<std::size_t>(w)];
            if (seen.size() <= static_cast<std::size_t>(color)) seen.resize(static_cast<std::size_t>(color) + 1, false);
            if (!seen[static_cast<std::size_t>(color)]) {
                seen[static_cast<std::size_t>(color)] = true;
                ++saturation[static_cast<std::size_t>(w)];
            }
        }
    }
    return out;
}

class ExactColoring {
public:
    explicit ExactColoring(const Graph& h) : h_(h), n_(static_cast<std::size_t>(h.vertex_count())), adj_(n_, 0) {
        for (std::size_t v = 0; v < n_; ++v)
            for (Vertex w : h.neighbors(static_cast<Vertex>(v))) adj_[v] |= std::uint64_t{1} << w;
    }

    ColoringResult solve() {
        ColoringResult upper = dsatur(h_);
        best_ = upper.num_colors;
        best_assignment_ = upper.assignment;
        const auto clique = greedy_clique();
        lower_ = static_cast<std::int32_t>(clique.size());
        if (lower_ < best_) {
            color_.assign(n_, -1);
            for (std::size_t i = 0; i < clique.size(); ++i) color_[clique[i]] = static_cast<std::int32_t>(i);
            search(clique.size(), lower_);
        }
        return {best_, best_assignment_, true};
    }

private:
    std::vector<std::size_t> greedy_clique() const {
        std::vector<std::size_t> best;
        for (std::size_t start = 0; start < n_; ++start) {
            std::vector<std::size_t> clique{start};
            std::uint64_t cand = adj_[start];
            while (cand != 0) {
                std::size_t pick = 0;
                int pick_deg = -1;
                for (std::uint64_t c = cand; c != 0; c &= c - 1) {
                    const auto v = static_cast<std::size_t>(std::countr_zero(c));
                    const int d = std::popcount(adj_[v] & cand);
                    if (d > pick_deg) {
                        pick = v;
                        pick_deg = d;
                    }
                }
                clique.push_back(pick);
                cand &= adj_[pick];
            }
            if (clique.size() > best.size()) best = clique;
        }
        return best;
    }

    std::uint64_t neighbor_colors(std::size_t v) const {
        std::uint64_t mask = 0;
        for (std::uint64_t a = adj_[v]; a != 0; a &= a - 1) {
            const auto c = color_[static_cast<std::size_t>(std::countr_zero(a))];
            if (c >= 0) mask |= std::uint64_t{1} << c;
        }
        return mask;
    }

    void search(std::size_t colored, std::int32_t used) {
        if (used >= best_) return;
        if (colored == n_) {
            best_ = used;
            best_assignment_ = color_;
            return;
        }
        std::size_t pick = n_;
        int pick_sat = -1;
        std::uint64_t pick_forbidden = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            const auto forbidden = neighbor_colors(v);
            const int sat = std::popcount(forbidden);
            if (sat > pick_sat || (sat == pick_sat && h_.degree(static_cast<Vertex>(v)) > h_.degree(static_cast<Vertex>(pick)))) {
                pick = v;
                pick_sat = sat;
                pick_forbidden = forbidden;
            }
        }
        for (std::int32_t c = 0; c < used; ++c) {
            if ((pick_forbidden >> c) & 1) continue;
            color_[pick] = c;
            search(colored + 1, used);
            color_[pick] = -1;
            if (best_ == lower_) return;
        }
        if (used + 1 < best_) {
            color_[pick] = used;
            search(colored + 1, used + 1);
            color_[pick] = -1;
        }
    }

    const Graph& h_;
    std::size_t n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::int32_t> color_;
    std::vector<std::int32_t> best_assignment_;
    std::int32_t best_ = 0;
    std::int32_t lower_ = 0;
};

}  // namespace

const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::exact: return "exact";
        case SolveMethod::brute_force: return "brute_force";
        case SolveMethod::greedy: return "greedy";
    }
    return "unknown";
}

Graph graph_power(const Graph& g, std::int32_t k) {
    require_k(k, 1);
    std::vector<Edge> edges;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto d = bfs_distances(g, s, k);
        for (Vertex v = s + 1; v < g.vertex_count(); ++v)
            if (d.reachable(v)) edges.push_back({s, v});
    }
    return Graph::from_edge_list(g.vertex_count(), edges);
}

SolveResult alpha_k_exact(const Graph& g, std::int32_t k, const ExactOptions& options) {
    require_k(k, 0);
    if (k == 0) return all_vertices(g, SolveMethod::exact);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    MaxIndependentSet search(to_bits(graph_power(g, k)), options.max_nodes);
    Bits all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    search.run(std::move(all));

    SolveResult r;
    r.method = SolveMethod::exact;
    r.nodes_explored = search.nodes;
    for (auto v : search.best) r.witness.push_back(static_cast<Vertex>(v));
    std::sort(r.witness.begin(), r.witness.end());
    r.alpha = static_cast<std::int32_t>(r.witness.size());
    return r;
}

SolveResult alpha_k_bruteforce(const Graph& g, std::int32_t k) {
    require_k(k, 0);
    if (g.vertex_count() > kBruteForceCap) {
        throw CapExceeded("brute force is limited to " + std::to_string(kBruteForceCap) + " vertices, got " +
                          std::to_string(g.vertex_count()));
    }
    if (k == 0) return all_vertices(g, SolveMethod::brute_force);

    const auto dist = floyd_warshall(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    // far[v]: vertices farther than k from v
    std::vector<std::uint32_t> far(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && dist[a][b] > k) far[a] |= std::uint32_t{1} << b;

    SolveResult r;
    r.method = SolveMethod::brute_force;
    std::uint32_t best = 0;
    int best_size = -1;
    // Depth-first walk over every subset whose members are pairwise farther
    // than k apart; include-first order visits them lexicographically.
    auto visit = [&](auto&& self, std::uint32_t chosen, std::uint32_t allowed, std::size_t from) -> void {
        ++r.nodes_explored;
        const int size = std::popcount(chosen);
        if (size > best_size) {
            best_size = size;
            best = chosen;
        }
        for (std::size_t v = from; v < n; ++v) {
            if ((allowed >> v) & 1) self(self, chosen | (std::uint32_t{1} << v), allowed & far[v], v + 1);
        }
    };
    const std::uint32_t everything = (std::uint32_t{1} << n) - 1;
    visit(visit, 0, everything, 0);
    for (std::size_t v = 0; v < n; ++v)
        if ((best >> v) & 1) r.witness.push_back(static_cast<Vertex>(v));
    r.alpha = static_cast<std::int32_t>(r.witness.size());
    return r;
}

SolveResult alpha_k_greedy(const Graph& g, std::int32_t k) {
    require_k(k, 0);
    if (k == 0) return all_vertices(g, SolveMethod::greedy);
    const auto power = graph_power(g, k);
    const auto deg = power_degrees(power);
    std::vector<Vertex> order(deg.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return deg[static_cast<std::size_t>(a)] < deg[static_cast<std::size_t>(b)]; });
    std::vector<bool> blocked(deg.size(), false);
    SolveResult r;
    r.method = SolveMethod::greedy;
    for (Vertex v : order) {
        ++r.nodes_explored;
        if (blocked[static_cast<std::size_t>(v)]) continue;
        r.witness.push_back(v);
        for (Vertex w : power.neighbors(v)) blocked[static_cast<std::size_t>(w)] = true;
    }
    std::sort(r.witness.begin(), r.witness.end());
    r.alpha = static_cast<std::int32_t>(r.witness.size());
    return r;
}

ColoringResult chi_k_exact(const Graph& g, std::int32_t k) {
    require_k(k, 1);
    if (g.vertex_count() > kExactColoringCap) {
        throw CapExceeded("exact coloring is limited to " + std::to_string(kExactColoringCap) +
                          " vertices; use the greedy coloring for larger graphs");
    }
    const auto power = graph_power(g, k);
    return ExactColoring(power).solve();
}

ColoringResult chi_k_greedy(const Graph& g, std::int32_t k) {
    require_k(k, 1);
    auto r = dsatur(graph_power(g, k));
    r.exact = false;
    return r;
}

bool is_distance_coloring(const Graph& g, std::int32_t k, const std::vector<std::int32_t>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    if (std::any_of(assignment.begin(), assignment.end(), [](std::int32_t c) { return c < 0; })) return false;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto d = bfs_distances(g, s, k);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (v != s && d.reachable(v) && assignment[static_cast<std::size_t>(v)] == assignment[static_cast<std::size_t>(s)]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace kindep
