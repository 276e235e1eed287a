#include "kindep/report.hpp"

#include "kindep/graph_io.hpp"

namespace kindep {

using nlohmann::json;

std::string rational_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json to_json(const Graph& g) {
    return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"graph6", write_graph6(g)}};
}

json to_json(const SolveResult& r, std::int32_t k) {
    return {{"k", k},
            {"alpha", r.alpha},
            {"witness", r.witness},
            {"method", to_string(r.method)},
            {"nodes_explored", r.nodes_explored}};
}

json to_json(const ColoringResult& r, std::int32_t k) {
    return {{"k", k}, {"num_colors", r.num_colors}, {"assignment", r.assignment}, {"exact", r.exact}};
}

json to_json(const BoundValue& b) {
    return {{"case_id", to_string(b.case_id)},
            {"subcase", b.subcase},
            {"value", rational_string(b.value)},
            {"floor_value", b.floor_value},
            {"direction", to_string(b.direction)},
            {"applicable", b.applicable},
            {"conditions", b.conditions}};
}

json to_json(const BoundReport& r) {
    json bounds = json::array();
    for (const auto& b : r.bounds) bounds.push_back(to_json(b));
    json tight = json::array();
    for (auto c : r.tight) tight.push_back(to_string(c));
    json out = {{"n", r.n},
                {"k", r.k},
                {"min_degree", r.min_degree},
                {"max_degree", r.max_degree},
                {"diameter", r.diameter ? json(*r.diameter) : json(nullptr)},
                {"connected", r.connected},
                {"complete", r.complete},
                {"chi_k", r.chi_k},
                {"chi_exact", r.chi_exact},
                {"bounds", bounds},
                {"exact_alpha", r.exact_alpha ? json(*r.exact_alpha) : json(nullptr)},
                {"witness", r.witness},
                {"tight", tight}};
    return out;
}

json to_json(const FamilyParams& p) {
    json out = {{"family", to_string(p.family)}};
    auto put = [&](const char* key, const std::optional<std::int32_t>& v) {
        if (v) out[key] = *v;
    };
    put("r", p.r);
    put("k", p.k);
    put("l", p.l);
    put("t", p.t);
    put("n", p.n);
    put("spine", p.spine);
    put("legs", p.legs);
    if (!p.sizes.empty()) out["sizes"] = p.sizes;
    return out;
}

json to_json(const Certificate& c) {
    json checks = json::array();
    for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
    return {{"params", to_json(c.params)},
            {"n_actual", c.n_actual},
            {"n_expected", c.n_expected},
            {"regular_degree", c.regular_degree ? json(*c.regular_degree) : json(nullptr)},
            {"components", c.components},
            {"per_copy_diameter", c.per_copy_diameter ? json(*c.per_copy_diameter) : json(nullptr)},
            {"claimed_alpha", c.claimed_alpha},
            {"achieved_alpha", c.achieved_alpha ? json(*c.achieved_alpha) : json(nullptr)},
            {"bound", to_json(c.bound)},
            {"verdict", to_string(c.verdict)},
            {"passed", c.passed()},
            {"witness", c.witness},
            {"checks", checks}};
}

json to_json(const LayerAudit& a) {
    json rows = json::array();
    for (const auto& r : a.rows) {
        rows.push_back({{"i", r.i},
                        {"prev_size", r.prev_size},
                        {"mid_size", r.mid_size},
                        {"next_size", r.next_size},
                        {"ineq1", to_string(r.three_seed_sum)},
                        {"ineq2", to_string(r.degree_scaled_sum)}});
    }
    return {{"k", a.k}, {"delta", a.delta}, {"seed_size", a.seed_size}, {"rows", rows}, {"all_hold", a.all_hold()}};
}

json make_report(const std::string& verb, const std::vector<std::string>& argv, const std::string& payload_type,
                 json payload, std::int64_t timing_ms) {
    return {{"schema_version", kSchemaVersion},
            {"command", {{"verb", verb}, {"argv", argv}}},
            {"payload_type", payload_type},
            {"payload", std::move(payload)},
            {"timing_ms", timing_ms}};
}

json without_timing(json report) {
    report.erase("timing_ms");
    return report;
}

}  // namespace kindep
