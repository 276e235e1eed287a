#include "kindep/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "kindep/error.hpp"

namespace kindep {
namespace {

class EdgeSink {
public:
    Vertex fresh(Vertex count = 1) {
        const Vertex first = next_;
        next_ += count;
        return first;
    }
    void link(Vertex u, Vertex v) { edges_.push_back({u, v}); }
    void clique(Vertex first, Vertex count, std::optional<Edge> skip = std::nullopt) {
        for (Vertex a = first; a < first + count; ++a)
            for (Vertex b = a + 1; b < first + count; ++b)
                if (!skip || !(Edge{a, b} == *skip)) link(a, b);
    }
    Vertex size() const { return next_; }
    Graph build() const { return Graph::from_edge_list(next_, edges_); }

private:
    Vertex next_ = 0;
    std::vector<Edge> edges_;
};

enum class FinalLayer { cyclic_matching, two_apexes, closing_clique };

// One copy of the layered r-regular graph with `groups` groups appended to sink.
//
// Each group i hangs off v_{1i}. Its V_2 block is K_r minus the edge between
// its two special vertices (the first two ids of the block). For every x in
// [l-1] the group gets a connector in V_{3x} joined to both current special
// vertices, a fresh K_{r-2} in V_{3x+1} joined to that connector, and a new
// adjacent special pair in V_{3x+2} joined to the whole K_{r-2}. The last
// special pairs are each one edge short of degree r; `final_layer` supplies
// that edge.
void append_layered_copy(EdgeSink& sink, std::int32_t r, std::int32_t l, std::int32_t groups, FinalLayer final_layer) {
    const auto g = static_cast<std::size_t>(groups);
    const Vertex v1 = sink.fresh(groups);
    std::vector<Vertex> s1(g);
    std::vector<Vertex> s2(g);
    for (std::size_t i = 0; i < g; ++i) {
        const Vertex block = sink.fresh(r);
        s1[i] = block;
        s2[i] = block + 1;
        for (Vertex v = block; v < block + r; ++v) sink.link(v1 + static_cast<Vertex>(i), v);
        sink.clique(block, r, Edge{block, block + 1});
    }
    for (std::int32_t x = 1; x < l; ++x) {
        const Vertex connectors = sink.fresh(groups);
        const Vertex cliques = sink.fresh(groups * (r - 2));
        const Vertex pairs = sink.fresh(2 * groups);
        for (std::size_t i = 0; i < g; ++i) {
            const Vertex c = connectors + static_cast<Vertex>(i);
            const Vertex q = cliques + static_cast<Vertex>(i) * (r - 2);
            const Vertex t1 = pairs + 2 * static_cast<Vertex>(i);
            const Vertex t2 = t1 + 1;
            sink.link(c, s1[i]);
            sink.link(c, s2[i]);
            sink.clique(q, r - 2);
            for (Vertex v = q; v < q + r - 2; ++v) {
                sink.link(c, v);
                sink.link(t1, v);
                sink.link(t2, v);
            }
            sink.link(t1, t2);
            s1[i] = t1;
            s2[i] = t2;
        }
    }
    switch (final_layer) {
        case FinalLayer::cyclic_matching:
            for (std::size_t i = 0; i < g; ++i) sink.link(s1[i], s2[(i + 1) % g]);
            break;
        case FinalLayer::two_apexes: {
            const Vertex apex = sink.fresh(2);
            for (std::size_t i = 0; i < g; ++i) {
                sink.link(apex, s1[i]);
                sink.link(apex + 1, s2[i]);
            }
            break;
        }
        case FinalLayer::closing_clique: {
            const Vertex top = sink.fresh(groups);
            sink.clique(top, groups);
            for (std::size_t i = 0; i < g; ++i) {
                sink.link(top + static_cast<Vertex>(i), s1[i]);
                sink.link(top + static_cast<Vertex>(i), s2[i]);
            }
            break;
        }
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

void check_layered(std::int32_t r, std::int32_t l, std::int32_t t) {
    require(r >= 3, "r must be at least 3, got " + std::to_string(r));
    require(l >= 1, "l must be at least 1, got " + std::to_string(l));
    require(t >= 1, "t must be at least 1, got " + std::to_string(t));
}

Graph layered(std::int32_t r, std::int32_t l, std::int32_t t, std::int32_t groups, FinalLayer final_layer) {
    check_layered(r, l, t);
    EdgeSink sink;
    append_layered_copy(sink, r, l, groups, final_layer);
    return disjoint_union(sink.build(), t);
}

std::int32_t family_k_offset(Family f) {
    switch (f) {
        case Family::g1: return 4;
        case Family::g4: return 3;
        case Family::g5: return 2;
        default: return 0;
    }
}

std::int64_t per_copy_order(Family f, std::int64_t r, std::int64_t l) {
    switch (f) {
        case Family::g1: return l * r * (r + 1);
        case Family::g4: return l * r * (r + 1) + 2;
        case Family::g5: return l * (r - 1) * (r + 1) + (r - 1);
        default: return 0;
    }
}

std::int32_t v1_size(Family f, std::int32_t r) { return f == Family::g5 ? r - 1 : r; }

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::join_chain: return "join-chain";
        case Family::comb: return "comb";
        case Family::subdiv_comb: return "subdiv-comb";
        case Family::star: return "star";
        case Family::subdiv_star: return "subdiv-star";
        case Family::g1: return "g1";
        case Family::g4: return "g4";
        case Family::g5: return "g5";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::join_chain, Family::comb, Family::subdiv_comb, Family::star, Family::subdiv_star, Family::g1,
                     Family::g4, Family::g5}) {
        if (to_string(f) == name) return f;
    }
    throw PreconditionError("unknown family \"" + name + "\"");
}

Graph join_chain(const std::vector<std::int32_t>& sizes) {
    require(!sizes.empty(), "join chain needs at least one inner block");
    std::vector<std::int32_t> blocks{1};
    for (auto s : sizes) {
        require(s >= 1, "join chain block sizes must be positive, got " + std::to_string(s));
        blocks.push_back(s);
    }
    blocks.push_back(1);
    EdgeSink sink;
    Vertex prev = -1;
    Vertex prev_size = 0;
    for (auto size : blocks) {
        const Vertex first = sink.fresh(size);
        sink.clique(first, size);
        for (Vertex a = prev; a >= 0 && a < prev + prev_size; ++a)
            for (Vertex b = first; b < first + size; ++b) sink.link(a, b);
        prev = first;
        prev_size = size;
    }
    return sink.build();
}

Graph comb(std::int32_t n) {
    require(n >= 4 && n % 2 == 0, "comb needs an even n >= 4, got " + std::to_string(n));
    return subdivided_comb(2, n / 2);
}

Graph subdivided_comb(std::int32_t k, std::int32_t spine) {
    require(k >= 2 && k % 2 == 0, "subdivided comb needs an even k >= 2, got " + std::to_string(k));
    require(spine >= 2, "subdivided comb needs a spine of at least 2 vertices, got " + std::to_string(spine));
    const std::int32_t leg = k / 2;
    EdgeSink sink;
    sink.fresh(spine);
    for (Vertex i = 0; i + 1 < spine; ++i) sink.link(i, i + 1);
    for (Vertex i = 0; i < spine; ++i) {
        const Vertex first = sink.fresh(leg);
        sink.link(i, first);
        for (Vertex j = 0; j + 1 < leg; ++j) sink.link(first + j, first + j + 1);
    }
    return sink.build();
}

Graph star(std::int32_t n) {
    require(n >= 2, "star needs n >= 2, got " + std::to_string(n));
    EdgeSink sink;
    sink.fresh(n);
    for (Vertex v = 1; v < n; ++v) sink.link(0, v);
    return sink.build();
}

Graph subdivided_star(std::int32_t k, std::int32_t legs) {
    require(k >= 3 && k % 2 == 1, "subdivided star needs an odd k >= 3, got " + std::to_string(k));
    require(legs >= 2, "subdivided star needs at least 2 legs, got " + std::to_string(legs));
    const std::int32_t leg = (k + 1) / 2;
    EdgeSink sink;
    sink.fresh();
    for (std::int32_t i = 0; i < legs; ++i) {
        const Vertex first = sink.fresh(leg);
        sink.link(0, first);
        for (Vertex j = 0; j + 1 < leg; ++j) sink.link(first + j, first + j + 1);
    }
    return sink.build();
}

Graph build_g1(std::int32_t r, std::int32_t l, std::int32_t t) {
    return layered(r, l, t, r, FinalLayer::cyclic_matching);
}

Graph build_g4(std::int32_t r, std::int32_t l, std::int32_t t) { return layered(r, l, t, r, FinalLayer::two_apexes); }

Graph build_g5(std::int32_t r, std::int32_t l, std::int32_t t) {
    return layered(r, l, t, r - 1, FinalLayer::closing_clique);
}

FamilyParams normalize(FamilyParams p) {
    auto fix_k = [&](std::int32_t implied) {
        require(!p.k || *p.k == implied, "family " + to_string(p.family) + " targets k = " + std::to_string(implied) +
                                              ", got k = " + std::to_string(p.k.value_or(0)));
        p.k = implied;
    };
    switch (p.family) {
        case Family::join_chain:
            require(!p.sizes.empty(), "join-chain needs block sizes");
            for (auto s : p.sizes) require(s >= 1, "join chain block sizes must be positive, got " + std::to_string(s));
            fix_k(static_cast<std::int32_t>(p.sizes.size()));
            break;
        case Family::comb:
            require(p.n.has_value(), "comb needs n");
            require(*p.n >= 4 && *p.n % 2 == 0, "comb needs an even n >= 4, got " + std::to_string(*p.n));
            fix_k(2);
            break;
        case Family::star:
            require(p.n.has_value(), "star needs n");
            require(*p.n >= 2, "star needs n >= 2, got " + std::to_string(*p.n));
            fix_k(1);
            break;
        case Family::subdiv_comb:
            require(p.k && p.spine, "subdiv-comb needs k and spine");
            require(*p.k >= 2 && *p.k % 2 == 0, "subdivided comb needs an even k >= 2, got " + std::to_string(*p.k));
            require(*p.spine >= 2, "subdivided comb needs a spine of at least 2 vertices");
            break;
        case Family::subdiv_star:
            require(p.k && p.legs, "subdiv-star needs k and legs");
            require(*p.k >= 3 && *p.k % 2 == 1, "subdivided star needs an odd k >= 3, got " + std::to_string(*p.k));
            require(*p.legs >= 2, "subdivided star needs at least 2 legs");
            break;
        case Family::g1:
        case Family::g4:
        case Family::g5: {
            require(p.r.has_value(), to_string(p.family) + " needs r");
            if (!p.t) p.t = 1;
            const auto offset = family_k_offset(p.family);
            if (!p.l) {
                require(p.k.has_value(), to_string(p.family) + " needs l or k");
                require((*p.k + offset) % 6 == 0 && *p.k + offset >= 6,
                        "k = " + std::to_string(*p.k) + " is not of the form 6l-" + std::to_string(offset));
                p.l = (*p.k + offset) / 6;
            }
            check_layered(*p.r, *p.l, *p.t);
            fix_k(6 * *p.l - offset);
            break;
        }
    }
    return p;
}

Graph generate(const FamilyParams& raw) {
    const auto p = normalize(raw);
    switch (p.family) {
        case Family::join_chain: return join_chain(p.sizes);
        case Family::comb: return comb(*p.n);
        case Family::subdiv_comb: return subdivided_comb(*p.k, *p.spine);
        case Family::star: return star(*p.n);
        case Family::subdiv_star: return subdivided_star(*p.k, *p.legs);
        case Family::g1: return build_g1(*p.r, *p.l, *p.t);
        case Family::g4: return build_g4(*p.r, *p.l, *p.t);
        case Family::g5: return build_g5(*p.r, *p.l, *p.t);
    }
    throw PreconditionError("unknown family");
}

ExpectedProfile expected_profile(const FamilyParams& raw) {
    const auto p = normalize(raw);
    ExpectedProfile e;
    e.k = *p.k;
    switch (p.family) {
        case Family::join_chain:
            e.n = 2 + std::accumulate(p.sizes.begin(), p.sizes.end(), std::int64_t{0});
            e.alpha = 2;
            break;
        case Family::comb:
            e.n = *p.n;
            e.alpha = *p.n / 2;
            break;
        case Family::subdiv_comb:
            e.n = static_cast<std::int64_t>(*p.spine) * (1 + *p.k / 2);
            e.alpha = *p.spine;
            break;
        case Family::star:
            e.n = *p.n;
            e.alpha = *p.n - 1;
            break;
        case Family::subdiv_star:
            e.n = 1 + static_cast<std::int64_t>(*p.legs) * ((*p.k + 1) / 2);
            e.alpha = *p.legs;
            break;
        case Family::g1:
        case Family::g4:
        case Family::g5:
            e.n = *p.t * per_copy_order(p.family, *p.r, *p.l);
            e.alpha = *p.t * v1_size(p.family, *p.r);
            e.regular_degree = *p.r;
            e.components = *p.t;
            break;
    }
    return e;
}

VertexSet designated_witness(const FamilyParams& raw) {
    const auto p = normalize(raw);
    VertexSet w;
    switch (p.family) {
        case Family::join_chain: {
            const auto n = static_cast<Vertex>(expected_profile(p).n);
            w = {0, n - 1};
            break;
        }
        case Family::comb:
            for (Vertex v = *p.n / 2; v < *p.n; ++v) w.push_back(v);
            break;
        case Family::subdiv_comb: {
            const Vertex leg = *p.k / 2;
            for (Vertex i = 0; i < *p.spine; ++i) w.push_back(*p.spine + i * leg + leg - 1);
            break;
        }
        case Family::star:
            for (Vertex v = 1; v < *p.n; ++v) w.push_back(v);
            break;
        case Family::subdiv_star: {
            const Vertex leg = (*p.k + 1) / 2;
            for (Vertex i = 0; i < *p.legs; ++i) w.push_back(1 + i * leg + leg - 1);
            break;
        }
        case Family::g1:
        case Family::g4:
        case Family::g5: {
            const auto copy = static_cast<Vertex>(per_copy_order(p.family, *p.r, *p.l));
            for (Vertex c = 0; c < *p.t; ++c)
                for (Vertex i = 0; i < v1_size(p.family, *p.r); ++i) w.push_back(c * copy + i);
            break;
        }
    }
    return w;
}

BoundValue matching_bound(const FamilyParams& raw, std::int64_t n) {
    const auto p = normalize(raw);
    switch (p.family) {
        case Family::join_chain: return diameter_lower_bound();
        case Family::comb:
        case Family::subdiv_comb:
        case Family::star:
        case Family::subdiv_star: return diameter_bound(n, *p.k);
        case Family::g1:
        case Family::g4:
        case Family::g5: return degree_bound(n, *p.k, *p.r, *p.r);
    }
    throw PreconditionError("unknown family");
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::passed: return "passed";
        case Verdict::failed: return "failed";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "unknown";
}

std::string Certificate::first_failure() const {
    for (const auto& c : checks)
        if (!c.ok) return c.name;
    return {};
}

Certificate verify_construction(const Graph& g, const FamilyParams& raw, const ExactOptions& options) {
    Certificate cert;
    cert.params = normalize(raw);
    const auto profile = expected_profile(cert.params);
    const std::int32_t k = profile.k;
    cert.n_actual = g.vertex_count();
    cert.n_expected = profile.n;
    cert.claimed_alpha = profile.alpha;

    cert.checks.push_back({"vertex_count", cert.n_actual == profile.n,
                           std::to_string(cert.n_actual) + " vs expected " + std::to_string(profile.n)});

    if (g.vertex_count() > 0) {
        const auto stats = degree_stats(g);
        if (stats.is_regular) cert.regular_degree = stats.min_degree;
    }
    if (profile.regular_degree) {
        const bool ok = cert.regular_degree == profile.regular_degree;
        cert.checks.push_back({"regularity", ok,
                               ok ? std::to_string(*profile.regular_degree) + "-regular"
                                  : "expected " + std::to_string(*profile.regular_degree) + "-regular"});
    }

    const auto comps = connected_components(g);
    cert.components = static_cast<std::int32_t>(comps.size());
    cert.checks.push_back({"components", cert.components == profile.components,
                           std::to_string(cert.components) + " vs expected " + std::to_string(profile.components)});

    for (const auto& comp : comps) {
        const auto d = diameter(induced_subgraph(g, comp)).value_or(0);
        cert.per_copy_diameter = cert.per_copy_diameter ? std::min(*cert.per_copy_diameter, d) : d;
    }
    const bool diam_ok = cert.per_copy_diameter && *cert.per_copy_diameter >= k + 1;
    cert.checks.push_back({"diameter", diam_ok,
                           "min component diameter " + std::to_string(cert.per_copy_diameter.value_or(0)) +
                               ", need >= " + std::to_string(k + 1)});

    bool solved = false;
    try {
        const auto r = alpha_k_exact(g, k, options);
        cert.achieved_alpha = r.alpha;
        cert.witness = r.witness;
        solved = true;
        cert.checks.push_back({"alpha", r.alpha == profile.alpha,
                               std::to_string(r.alpha) + " vs claimed " + std::to_string(profile.alpha)});
    } catch (const CapExceeded& e) {
        cert.checks.push_back({"alpha", true, std::string("indeterminate: ") + e.what()});
    }

    try {
        cert.bound = matching_bound(cert.params, cert.n_actual);
        const bool tight = cert.bound.floor_value == profile.alpha && (!solved || *cert.achieved_alpha == profile.alpha);
        cert.checks.push_back({"tightness", tight,
                               to_string(cert.bound.case_id) + " gives " + std::to_string(cert.bound.floor_value)});
    } catch (const PreconditionError& e) {
        cert.checks.push_back({"tightness", false, e.what()});
    }

    const bool any_failed = std::any_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) { return !c.ok; });
    cert.verdict = any_failed ? Verdict::failed : (solved ? Verdict::passed : Verdict::indeterminate);
    return cert;
}

}  // namespace kindep
