#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kindep/bounds.hpp"
#include "kindep/graph.hpp"
#include "kindep/solver.hpp"

namespace kindep {

enum class Family { join_chain, comb, subdiv_comb, star, subdiv_star, g1, g4, g5 };

// Lowercase CLI spelling ("join-chain", "g1", ...).
std::string to_string(Family f);
// Throws PreconditionError on an unknown name.
Family parse_family(const std::string& name);

// Parameters selecting one instance of a family. Unused fields stay empty.
//   join_chain: sizes            comb: n            star: n
//   subdiv_comb: k, spine        subdiv_star: k, legs
//   g1/g4/g5: r, l, t  (k is implied by l; when only k is given, l is derived)
struct FamilyParams {
    Family family = Family::comb;
    std::optional<std::int32_t> r;
    std::optional<std::int32_t> k;
    std::optional<std::int32_t> l;
    std::optional<std::int32_t> t;
    std::optional<std::int32_t> n;
    std::optional<std::int32_t> spine;
    std::optional<std::int32_t> legs;
    std::vector<std::int32_t> sizes;
};

struct ExpectedProfile {
    std::int64_t n = 0;
    std::int32_t alpha = 0;
    std::int32_t k = 0;
    std::optional<std::int32_t> regular_degree;
    std::int32_t components = 1;
};

// K_1 ∨ K_{i_1} ∨ ... ∨ K_{i_k} ∨ K_1 with joins between consecutive blocks
// only. Block ids are contiguous, left to right.
Graph join_chain(const std::vector<std::int32_t>& sizes);

// Spine 0..n/2-1, pendant n/2+i hanging off spine vertex i.
Graph comb(std::int32_t n);

// Spine 0..spine-1; the pendant path of spine vertex i uses ids
// spine + i*(k/2) + j for j = 0..k/2-1, the last one being the tip.
Graph subdivided_comb(std::int32_t k, std::int32_t spine);

// Center 0, leaves 1..n-1.
Graph star(std::int32_t n);

// Center 0; leg i uses ids 1 + i*(k+1)/2 + j, the last one being the tip.
Graph subdivided_star(std::int32_t k, std::int32_t legs);

// r-regular extremal graphs for k = 6l-4, 6l-3 and 6l-2, as t disjoint
// copies. Within a copy the ids run layer by layer: V_1 first, then each
// group's block of V_2, and so on; V_1 of copy c is therefore the first
// |V_1| ids of that copy.
Graph build_g1(std::int32_t r, std::int32_t l, std::int32_t t);
Graph build_g4(std::int32_t r, std::int32_t l, std::int32_t t);
Graph build_g5(std::int32_t r, std::int32_t l, std::int32_t t);

// Fills in implied fields (k for most families, l from k for g1/g4/g5) and
// validates ranges. Throws PreconditionError.
FamilyParams normalize(FamilyParams params);

Graph generate(const FamilyParams& params);

ExpectedProfile expected_profile(const FamilyParams& params);

// The extremal vertex set each construction is built around (leaf tips,
// end vertices, or the V_1 layer of every copy).
VertexSet designated_witness(const FamilyParams& params);

// The closed-form bound each family is meant to meet with equality.
BoundValue matching_bound(const FamilyParams& params, std::int64_t n);

enum class Verdict { passed, failed, indeterminate };
const char* to_string(Verdict v);

struct CertificateCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Certificate {
    FamilyParams params;
    std::int64_t n_actual = 0;
    std::int64_t n_expected = 0;
    std::optional<std::int32_t> regular_degree;
    std::int32_t components = 0;
    std::optional<std::int32_t> per_copy_diameter;  // smallest component diameter
    std::int32_t claimed_alpha = 0;
    std::optional<std::int32_t> achieved_alpha;
    BoundValue bound;
    Verdict verdict = Verdict::indeterminate;
    VertexSet witness;
    std::vector<CertificateCheck> checks;

    bool passed() const { return verdict == Verdict::passed; }
    // Name of the first failing check, empty if none failed.
    std::string first_failure() const;
};

inline constexpr std::uint64_t kDefaultVerifyNodeBudget = 50'000'000;

// Certifies order, regularity, copy count, per-copy diameter, exact α_k and
// tightness against the family's bound. A solver budget overrun leaves
// achieved_alpha empty and the verdict indeterminate.
Certificate verify_construction(const Graph& g, const FamilyParams& params,
                                const ExactOptions& options = {kDefaultVerifyNodeBudget});

}  // namespace kindep
