#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "kindep/graph.hpp"
#include "kindep/solver.hpp"

namespace kindep {

using Rational = boost::rational<std::int64_t>;

enum class BoundCase {
    fh_lower,
    fh_even,
    fh_odd,
    t2_case1,
    t2_case2,
    t2_case3,
    t2_case4,
    t2_case5,
    t2_case6,
    t2_case7,
    t2_case8,
    brooks_m,
    chromatic_lower,
    regular_alpha2,
};

// Stable identifier used in reports, e.g. "T2_CASE4".
std::string to_string(BoundCase c);

enum class Direction { upper, lower };
const char* to_string(Direction d);

// One evaluated bound on α_k. floor_value is ⌊value⌋ for upper bounds and
// ⌈value⌉ for lower bounds. Inapplicable bounds list the violated condition.
struct BoundValue {
    BoundCase case_id = BoundCase::fh_even;
    std::string subcase;
    Rational value{0};
    std::int64_t floor_value = 0;
    Direction direction = Direction::upper;
    bool applicable = true;
    std::vector<std::string> conditions;
};

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

// Upper bound for connected non-complete graphs with diam >= k+1:
// 2n/(k+2) for even k, (2n-2)/(k+1) for odd k. Requires n >= 2, k >= 1.
BoundValue diameter_bound(std::int64_t n, std::int32_t k);

// The matching lower bound α_k >= 2 under the same hypotheses.
BoundValue diameter_lower_bound();

// Degree-constrained upper bound for connected graphs with diam >= k+1,
// dispatched on k and the minimum degree; ℓ is recovered from k's residue
// mod 6. Requires 1 <= min_degree <= max_degree < n and k >= 1.
BoundValue degree_bound(std::int64_t n, std::int32_t k, std::int32_t min_degree, std::int32_t max_degree);

// M = 1 + Δ((Δ-1)^k - 1)/(Δ-2), an upper bound on χ_k for max degree Δ >= 3.
// Throws std::overflow_error when M does not fit in 64 bits.
std::int64_t brooks_distance_bound(std::int32_t max_degree, std::int32_t k);

// α_k >= n/χ_k.
BoundValue chromatic_lower_bound(std::int64_t n, std::int64_t chi);

// α_2 <= n/(r+1) for r-regular graphs.
BoundValue regular_alpha2_bound(std::int64_t n, std::int32_t r);

struct BoundReport {
    std::int64_t n = 0;
    std::int32_t k = 0;
    std::int32_t min_degree = 0;
    std::int32_t max_degree = 0;
    std::optional<std::int32_t> diameter;
    bool connected = false;
    bool complete = false;
    std::vector<BoundValue> bounds;  // ordered by case_id
    std::int32_t chi_k = 0;
    bool chi_exact = false;
    std::optional<std::int32_t> exact_alpha;
    VertexSet witness;
    std::vector<BoundCase> tight;

    const BoundValue* find(BoundCase c) const;
};

// Evaluates every calculator on g and marks applicability. χ_k is exact up to
// kExactColoringCap vertices, greedy beyond. With compute_exact the exact α_k
// is filled in along with the bounds it meets with equality.
BoundReport bound_report(const Graph& g, std::int32_t k, bool compute_exact, const ExactOptions& options = {});

}  // namespace kindep
