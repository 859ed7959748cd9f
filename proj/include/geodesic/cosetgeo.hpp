#pragma once

// Coset geometries: the generic construction (points [G:H], blocks [G:K],
// incidence = non-empty coset intersection), its certification, and a
// desk-scale orbit search over k-subsets realizing the five-step procedure.

#include <optional>
#include <string>
#include <vector>

#include "geodesic/design.hpp"
#include "geodesic/families.hpp"
#include "geodesic/local.hpp"
#include "geodesic/permgrp.hpp"

namespace geodesic {

struct CosetCertificates {
    bool g_not_hk = false;            // |H||K|/|H cap K| < |G|
    bool faithful_on_cosets = false;  // G faithful on [G:H]
    bool g_two_homog_on_points = false;
    bool h_two_homog = false;         // H on [H : H cap K]
    bool k_two_homog = false;         // K on [K : H cap K]
    bool k_at_least_3 = false;
    bool all() const {
        return g_not_hk && faithful_on_cosets && g_two_homog_on_points && h_two_homog &&
               k_two_homog && k_at_least_3;
    }
    std::string describe() const;
};

struct CosetTriple {
    BigInt order_g, order_h, order_k, order_h_cap_k;
    long long v = 0, b = 0, r = 0, k = 0; // the four index formulas
    CosetCertificates certs;
};

struct CosetDesignResult {
    GeometricDesign geometric;
    CosetTriple triple;
};

// Construction from subgroups H, K of G (all preconditions certified; throws
// PreconditionFailed naming the first failing one).  The resulting design
// lives on [G:H] with G acting through its coset action.
CosetDesignResult coset_design(const PermGroup& G, const PermGroup& H, const PermGroup& K);

struct ReconstructResult {
    CosetDesignResult coset;
    std::vector<int> point_map; // coset index -> point of D, block-certified
};

// Rebuild a flag-transitive design as the coset geometry on (G, G_alpha,
// G_beta) and certify the isomorphism explicitly.
ReconstructResult reconstruct(const PermGroup& G, const Design& D);

struct SearchOptions {
    std::optional<long long> target_b;
    std::optional<LocalLevel> require_local_level;
    uint64_t subset_budget = uint64_t(1) << 24;
};

struct SearchHit {
    GeometricDesign geometric;
    BigInt stabilizer_order;      // |K|, the setwise stabilizer of the block
    bool step4_r_matches = false; // |H : H cap K| == r
    bool step5_h_two_homog = false;
    bool step5_k_two_homog = false;
    // overall local level via analyze; skipped for very large block orbits
    // when no level filter was requested
    std::optional<LocalLevel> level;
};

// Enumerate G-orbits of k-subsets that form non-trivial 2-designs, with the
// block-stabilizer certificates of the search procedure attached.
std::vector<SearchHit> orbit_design_search(const PermGroup& G, int k,
                                           const SearchOptions& opts = {});

// Admissible parameter tuples (v,b,r,k,lambda) with r <= r_max.
std::vector<std::array<long long, 5>> parameter_screen(long long v, long long r_max);

} // namespace geodesic
