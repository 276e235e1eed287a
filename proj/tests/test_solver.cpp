#include <doctest.h>

#include "kindep/constructions.hpp"
#include "kindep/error.hpp"
#include "kindep/layers.hpp"
#include "kindep/solver.hpp"
#include "support/oracles.hpp"

using namespace kindep;

namespace {

bool power_matches_oracle(const Graph& g, std::int32_t k) {
    const auto d = testing::distance_matrix(g);
    const auto p = graph_power(g, k);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const int duv = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (p.has_edge(u, v) != (u != v && duv <= k)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("graph power examples") {
    const std::vector<Edge> p4sq{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(graph_power(path_graph(4), 2) == Graph::from_edge_list(4, p4sq));
    CHECK(graph_power(cycle_graph(5), 2) == complete_graph(5));
    CHECK(graph_power(petersen_graph(), 2) == complete_graph(10));
    CHECK(graph_power(path_graph(5), 1) == path_graph(5));
    CHECK_THROWS_AS(graph_power(path_graph(3), 0), PreconditionError);
}

TEST_CASE("alpha_k examples") {
    CHECK(alpha_k_exact(path_graph(6), 2).alpha == 2);
    CHECK(alpha_k_exact(cycle_graph(6), 2).alpha == 2);
    CHECK(alpha_k_exact(cycle_graph(7), 1).alpha == 3);
    CHECK(alpha_k_exact(petersen_graph(), 1).alpha == 4);
    CHECK(alpha_k_exact(petersen_graph(), 2).alpha == 1);
    CHECK(alpha_k_exact(complete_graph(6), 3).alpha == 1);
    CHECK(alpha_k_exact(Graph(0), 2).alpha == 0);
    CHECK(alpha_k_exact(Graph(4), 3).alpha == 4);
    CHECK(alpha_k_exact(path_graph(5), 0).alpha == 5);

    const auto r = alpha_k_exact(path_graph(10), 3);
    CHECK(r.alpha == 3);
    CHECK(r.method == SolveMethod::exact);
    CHECK(r.witness.size() == 3);
    CHECK(is_k_independent(path_graph(10), r.witness, 3));
}

TEST_CASE("brute force and greedy") {
    CHECK(alpha_k_bruteforce(petersen_graph(), 1).alpha == 4);
    CHECK(alpha_k_bruteforce(path_graph(9), 2).alpha == 3);
    CHECK_THROWS_AS(alpha_k_bruteforce(path_graph(kBruteForceCap + 1), 2), CapExceeded);

    const auto greedy = alpha_k_greedy(path_graph(6), 2);
    CHECK(greedy.alpha == 2);
    CHECK(greedy.method == SolveMethod::greedy);
    CHECK(is_k_independent(path_graph(6), greedy.witness, 2));
}

TEST_CASE("node budget") {
    ExactOptions tiny{std::uint64_t{3}};
    CHECK_THROWS_AS(alpha_k_exact(cycle_graph(40), 1, tiny), CapExceeded);
    ExactOptions ample{std::uint64_t{1'000'000}};
    CHECK(alpha_k_exact(cycle_graph(40), 1, ample).alpha == 20);
}

TEST_CASE("distance coloring examples") {
    CHECK(chi_k_exact(path_graph(4), 2).num_colors == 3);
    CHECK(chi_k_exact(petersen_graph(), 2).num_colors == 10);
    CHECK(chi_k_exact(cycle_graph(5), 1).num_colors == 3);
    CHECK(chi_k_exact(cycle_graph(6), 1).num_colors == 2);
    CHECK(chi_k_exact(Graph(3), 2).num_colors == 1);
    CHECK(chi_k_exact(Graph(0), 2).num_colors == 0);
    CHECK_THROWS_AS(chi_k_exact(path_graph(kExactColoringCap + 1), 2), CapExceeded);

    const auto c = chi_k_exact(cycle_graph(7), 2);
    CHECK(c.exact);
    CHECK(is_distance_coloring(cycle_graph(7), 2, c.assignment));
    CHECK_FALSE(is_distance_coloring(path_graph(3), 2, {0, 1, 0}));

    const auto greedy = chi_k_greedy(path_graph(40), 3);
    CHECK_FALSE(greedy.exact);
    CHECK(greedy.num_colors >= 4);
    CHECK(is_distance_coloring(path_graph(40), 3, greedy.assignment));
}

TEST_CASE("property: power, alpha and chi agree with the oracles") {
    for (const auto& g : testing::random_corpus(160, 12, 1234)) {
        for (std::int32_t k = 1; k <= 5; ++k) {
            CHECK(power_matches_oracle(g, k));
            const auto exact = alpha_k_exact(g, k);
            CHECK(exact.alpha == testing::alpha_by_masks(g, k));
            CHECK(alpha_k_bruteforce(g, k).alpha == exact.alpha);
            CHECK(is_k_independent(g, exact.witness, k));
            CHECK(static_cast<std::int32_t>(exact.witness.size()) == exact.alpha);

            const auto greedy = alpha_k_greedy(g, k);
            CHECK(greedy.alpha <= exact.alpha);
            CHECK(is_k_independent(g, greedy.witness, k));
        }
    }
    for (const auto& g : testing::random_corpus(60, 9, 4321)) {
        for (std::int32_t k = 1; k <= 3; ++k) {
            const auto c = chi_k_exact(g, k);
            CHECK(c.num_colors == testing::chi_by_enumeration(g, k));
            CHECK(is_distance_coloring(g, k, c.assignment));
            CHECK(chi_k_greedy(g, k).num_colors >= c.num_colors);
        }
    }
}

TEST_CASE("property: alpha_k is monotone in k and invariant under relabelling") {
    for (const auto& g : testing::random_corpus(80, 14, 55)) {
        std::int32_t prev = g.vertex_count();
        for (std::int32_t k = 1; k <= 6; ++k) {
            const auto a = alpha_k_exact(g, k).alpha;
            CHECK(a <= prev);
            prev = a;
        }
        // reverse the vertex ids
        const Vertex n = g.vertex_count();
        std::vector<Edge> rev;
        for (const auto& e : g.edges()) rev.push_back({n - 1 - e.u, n - 1 - e.v});
        const auto h = Graph::from_edge_list(n, rev);
        for (std::int32_t k = 1; k <= 4; ++k) CHECK(alpha_k_exact(h, k).alpha == alpha_k_exact(g, k).alpha);
    }
}

TEST_CASE("property: alpha_k scales with disjoint copies") {
    for (const auto& g : testing::random_corpus(30, 10, 808)) {
        const auto u = disjoint_union(g, 3);
        for (std::int32_t k = 1; k <= 4; ++k) CHECK(alpha_k_exact(u, k).alpha == 3 * alpha_k_exact(g, k).alpha);
    }
}

TEST_CASE("power and solver edge cases") {
    CHECK(graph_power(petersen_graph(), 1) == petersen_graph());
    for (const auto& g : testing::random_corpus(20, 10, 17)) {
        const auto diam = *diameter(g);
        CHECK(graph_power(g, diam) == complete_graph(g.vertex_count()));
        CHECK(graph_power(g, diam + 3) == complete_graph(g.vertex_count()));
    }
    CHECK(alpha_k_exact(star(9), 1).alpha == 8);
    CHECK(alpha_k_exact(star(9), 1).witness == VertexSet{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(alpha_k_exact(comb(10), 2).alpha == 5);
    CHECK(alpha_k_bruteforce(path_graph(5), 2).alpha == 2);
    CHECK(alpha_k_bruteforce(complete_graph(4), 1).alpha == 1);
    CHECK(alpha_k_greedy(complete_graph(7), 1).alpha == 1);
    for (Vertex n = 1; n <= 6; ++n)
        for (std::int32_t k = 1; k <= 3; ++k) CHECK(chi_k_exact(complete_graph(n), k).num_colors == n);
    CHECK(chi_k_greedy(Graph(5), 2).num_colors == 1);
}

TEST_CASE("property: chi_k grows with k and repeated solves are identical") {
    for (const auto& g : testing::random_corpus(60, 12, 999)) {
        const auto chi1 = chi_k_exact(g, 1).num_colors;
        for (std::int32_t k = 1; k <= 4; ++k) {
            const auto c = chi_k_exact(g, k);
            CHECK(c.num_colors >= chi1);
            CHECK(static_cast<std::int64_t>(c.num_colors) * alpha_k_exact(g, k).alpha >= g.vertex_count());
            const auto a = alpha_k_exact(g, k);
            const auto b = alpha_k_exact(g, k);
            CHECK(a.witness == b.witness);
            CHECK(a.nodes_explored == b.nodes_explored);
            CHECK(c.assignment == chi_k_exact(g, k).assignment);
        }
    }
}
