#include "kindep/bounds.hpp"

#include <stdexcept>

#include "kindep/error.hpp"

namespace kindep {
namespace {

BoundValue make(BoundCase id, Rational value, Direction dir) {
    BoundValue b;
    b.case_id = id;
    b.value = value;
    b.direction = dir;
    b.floor_value = dir == Direction::upper ? floor_of(value) : ceil_of(value);
    return b;
}

std::string ell_condition(const char* form, std::int64_t ell) {
    return std::string("k = ") + form + " with l = " + std::to_string(ell);
}

void mark_inapplicable(BoundValue& b, const std::string& why) {
    b.applicable = false;
    b.conditions.push_back("not applicable: " + why);
}

}  // namespace

std::string to_string(BoundCase c) {
    switch (c) {
        case BoundCase::fh_lower: return "FH_LOWER";
        case BoundCase::fh_even: return "FH_EVEN";
        case BoundCase::fh_odd: return "FH_ODD";
        case BoundCase::t2_case1: return "T2_CASE1";
        case BoundCase::t2_case2: return "T2_CASE2";
        case BoundCase::t2_case3: return "T2_CASE3";
        case BoundCase::t2_case4: return "T2_CASE4";
        case BoundCase::t2_case5: return "T2_CASE5";
        case BoundCase::t2_case6: return "T2_CASE6";
        case BoundCase::t2_case7: return "T2_CASE7";
        case BoundCase::t2_case8: return "T2_CASE8";
        case BoundCase::brooks_m: return "BROOKS_M";
        case BoundCase::chromatic_lower: return "CHROMATIC_LOWER";
        case BoundCase::regular_alpha2: return "REGULAR_ALPHA2";
    }
    return "UNKNOWN";
}

const char* to_string(Direction d) { return d == Direction::upper ? "upper" : "lower"; }

std::int64_t floor_of(const Rational& r) {
    auto q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

std::int64_t ceil_of(const Rational& r) {
    auto q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

BoundValue diameter_bound(std::int64_t n, std::int32_t k) {
    if (n < 2) throw PreconditionError("the diameter bound needs n >= 2");
    if (k < 1) throw PreconditionError("k must be positive");
    const bool even = k % 2 == 0;
    auto b = even ? make(BoundCase::fh_even, Rational(2 * n, k + 2), Direction::upper)
                  : make(BoundCase::fh_odd, Rational(2 * n - 2, k + 1), Direction::upper);
    b.conditions = {"connected", "non-complete", "diam >= k+1"};
    return b;
}

BoundValue diameter_lower_bound() {
    auto b = make(BoundCase::fh_lower, Rational(2), Direction::lower);
    b.conditions = {"connected", "non-complete", "diam >= k+1"};
    return b;
}

BoundValue degree_bound(std::int64_t n, std::int32_t k, std::int32_t min_degree, std::int32_t max_degree) {
    const std::int64_t d = min_degree;
    const std::int64_t D = max_degree;
    if (k < 1) throw PreconditionError("k must be positive");
    if (d < 1) throw PreconditionError("minimum degree must be at least 1, got " + std::to_string(d));
    if (d > D) throw PreconditionError("minimum degree exceeds maximum degree");
    if (D >= n) throw PreconditionError("maximum degree must be below n");

    BoundValue b;
    std::vector<std::string> conds{"connected", "diam >= k+1"};
    if (k == 1) {
        b = make(BoundCase::t2_case1, Rational(D * n, D + d), Direction::upper);
        conds.push_back("k = 1");
    } else if (d <= 2) {
        conds.push_back("k >= 2, delta <= 2");
        if (k % 2 == 1) {
            // Δn / (Δ(δ + (k-1)/2) + 1)
            b = make(BoundCase::t2_case2, Rational(D * n, D * (d + (k - 1) / 2) + 1), Direction::upper);
            b.subcase = "k_odd";
        } else {
            b = make(BoundCase::t2_case2, Rational(n, d + k / 2), Direction::upper);
            b.subcase = "k_even";
        }
    } else {
        conds.push_back("delta >= 3");
        const bool regular_even = D == d && d % 2 == 0;
        switch (k % 6) {
            case 2: {
                const std::int64_t l = (k + 4) / 6;
                b = make(BoundCase::t2_case3, Rational(n, l * (d + 1)), Direction::upper);
                conds.push_back(ell_condition("6l-4", l));
                break;
            }
            case 3: {
                const std::int64_t l = (k + 3) / 6;
                const std::int64_t extra = D > d ? 1 : 2;
                b = make(BoundCase::t2_case4, Rational(D * n, l * D * (d + 1) + extra), Direction::upper);
                b.subcase = D > d ? "Delta_gt_delta" : "Delta_eq_delta";
                conds.push_back(ell_condition("6l-3", l));
                break;
            }
            case 4: {
                const std::int64_t l = (k + 2) / 6;
                b = make(BoundCase::t2_case5, Rational(n, l * (d + 1) + 1), Direction::upper);
                conds.push_back(ell_condition("6l-2", l));
                break;
            }
            case 5: {
                const std::int64_t l = (k + 1) / 6;
                const std::int64_t extra = regular_even ? D + 2 : D + 1;
                b = make(BoundCase::t2_case6, Rational(D * n, l * D * (d + 1) + extra), Direction::upper);
                b.subcase = regular_even ? "Delta_eq_delta_even" : "otherwise";
                conds.push_back(ell_condition("6l-1", l));
                break;
            }
            case 0: {
                const std::int64_t l = k / 6;
                b = make(BoundCase::t2_case7, Rational(n, l * (d + 1) + (regular_even ? 3 : 2)), Direction::upper);
                b.subcase = regular_even ? "Delta_eq_delta_even" : "otherwise";
                conds.push_back(ell_condition("6l", l));
                // printed denominator "l(r delta + 1) + 2" has a stray r; the
                // counting argument gives l(delta + 1) + 2
                if (!regular_even) conds.push_back("typo-corrected");
                break;
            }
            default: {
                const std::int64_t l = (k - 1) / 6;
                const bool odd = d % 2 == 1;
                const std::int64_t extra = odd ? 2 * D + d - 1 : 3 * D + d - 2;
                b = make(BoundCase::t2_case8, Rational(D * n, l * D * (d + 1) + extra), Direction::upper);
                b.subcase = odd ? "delta_odd" : "delta_even";
                conds.push_back(ell_condition("6l+1", l));
                break;
            }
        }
    }
    b.conditions = std::move(conds);
    return b;
}

std::int64_t brooks_distance_bound(std::int32_t max_degree, std::int32_t k) {
    if (max_degree < 3) throw PreconditionError("the distance Brooks bound needs max degree >= 3");
    if (k < 1) throw PreconditionError("k must be positive");
    // M = 1 + Δ * sum_{i=0}^{k-1} (Δ-1)^i, which equals the closed form exactly
    const std::int64_t base = max_degree - 1;
    std::int64_t term = 1;
    std::int64_t sum = 0;
    for (std::int32_t i = 0; i < k; ++i) {
        if (__builtin_add_overflow(sum, term, &sum)) throw std::overflow_error("distance Brooks bound overflows");
        if (i + 1 < k && __builtin_mul_overflow(term, base, &term)) throw std::overflow_error("distance Brooks bound overflows");
    }
    std::int64_t m = 0;
    if (__builtin_mul_overflow(sum, static_cast<std::int64_t>(max_degree), &m) || __builtin_add_overflow(m, 1, &m)) {
        throw std::overflow_error("distance Brooks bound overflows");
    }
    return m;
}

BoundValue chromatic_lower_bound(std::int64_t n, std::int64_t chi) {
    if (n < 1 || chi < 1) throw PreconditionError("chromatic lower bound needs n >= 1 and chi >= 1");
    auto b = make(BoundCase::chromatic_lower, Rational(n, chi), Direction::lower);
    b.conditions = {"chi_k = " + std::to_string(chi)};
    return b;
}

BoundValue regular_alpha2_bound(std::int64_t n, std::int32_t r) {
    if (r < 1) throw PreconditionError("regular degree must be at least 1");
    auto b = make(BoundCase::regular_alpha2, Rational(n, r + 1), Direction::upper);
    b.conditions = {"r-regular", "k = 2"};
    return b;
}

const BoundValue* BoundReport::find(BoundCase c) const {
    for (const auto& b : bounds)
        if (b.case_id == c) return &b;
    return nullptr;
}

BoundReport bound_report(const Graph& g, std::int32_t k, bool compute_exact, const ExactOptions& options) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (g.vertex_count() < 1) throw PreconditionError("bound report needs at least one vertex");

    BoundReport rep;
    rep.n = g.vertex_count();
    rep.k = k;
    const auto stats = degree_stats(g);
    rep.min_degree = stats.min_degree;
    rep.max_degree = stats.max_degree;
    rep.diameter = diameter(g);
    rep.connected = rep.diameter.has_value();
    rep.complete = 2 * static_cast<std::int64_t>(g.edge_count()) == rep.n * (rep.n - 1);
    const bool far_pair = rep.diameter && *rep.diameter >= k + 1;

    auto placeholder = [](BoundCase id, Direction dir) {
        BoundValue b;
        b.case_id = id;
        b.direction = dir;
        return b;
    };

    // diameter bounds
    {
        std::string why;
        if (!rep.connected) why = "graph is disconnected";
        else if (rep.complete) why = "graph is complete";
        else if (!far_pair) why = "diam < k+1";
        BoundValue lower = diameter_lower_bound();
        BoundValue upper = rep.n >= 2 ? diameter_bound(rep.n, k)
                                      : placeholder(k % 2 == 0 ? BoundCase::fh_even : BoundCase::fh_odd, Direction::upper);
        if (!why.empty()) {
            mark_inapplicable(lower, why);
            mark_inapplicable(upper, why);
        }
        rep.bounds.push_back(lower);
        rep.bounds.push_back(upper);
    }

    // degree-constrained bound
    {
        std::string why;
        if (!rep.connected) why = "graph is disconnected";
        else if (!far_pair) why = "diam < k+1";
        else if (rep.min_degree < 1) why = "minimum degree is 0";
        if (rep.min_degree >= 1 && rep.max_degree < rep.n) {
            BoundValue t2 = degree_bound(rep.n, k, rep.min_degree, rep.max_degree);
            if (!why.empty()) mark_inapplicable(t2, why);
            rep.bounds.push_back(t2);
        } else {
            BoundValue t2 = placeholder(BoundCase::t2_case1, Direction::upper);
            mark_inapplicable(t2, why.empty() ? "minimum degree is 0" : why);
            rep.bounds.push_back(t2);
        }
    }

    // χ_k and the two lower bounds built on it
    ColoringResult chi = g.vertex_count() <= kExactColoringCap ? chi_k_exact(g, k) : chi_k_greedy(g, k);
    rep.chi_k = chi.num_colors;
    rep.chi_exact = chi.exact;
    {
        BoundValue brooks = placeholder(BoundCase::brooks_m, Direction::lower);
        if (rep.max_degree >= 3) {
            try {
                const auto m = brooks_distance_bound(rep.max_degree, k);
                brooks = make(BoundCase::brooks_m, Rational(rep.n, m), Direction::lower);
                brooks.conditions = {"Delta >= 3", "M = " + std::to_string(m)};
            } catch (const std::overflow_error&) {
                mark_inapplicable(brooks, "M overflows 64-bit arithmetic");
            }
        } else {
            mark_inapplicable(brooks, "Delta < 3");
        }
        rep.bounds.push_back(brooks);

        BoundValue chromatic = chromatic_lower_bound(rep.n, rep.chi_k);
        chromatic.conditions.push_back(chi.exact ? "chi exact" : "chi heuristic (greedy upper estimate)");
        rep.bounds.push_back(chromatic);
    }

    {
        BoundValue reg = stats.is_regular && stats.min_degree >= 1 ? regular_alpha2_bound(rep.n, stats.min_degree)
                                                                   : placeholder(BoundCase::regular_alpha2, Direction::upper);
        if (!stats.is_regular) mark_inapplicable(reg, "graph is not regular");
        else if (stats.min_degree < 1) mark_inapplicable(reg, "graph is edgeless");
        else if (k != 2) mark_inapplicable(reg, "k != 2");
        rep.bounds.push_back(reg);
    }

    if (compute_exact) {
        auto solved = alpha_k_exact(g, k, options);
        rep.exact_alpha = solved.alpha;
        rep.witness = solved.witness;
        for (const auto& b : rep.bounds) {
            if (b.applicable && b.floor_value == solved.alpha) rep.tight.push_back(b.case_id);
        }
    }
    return rep;
}

}  // namespace kindep
