#pragma once

// Classification of the local symmetry of a pair (G, D): flag-transitivity
// and the transitive / primitive / 2-homogeneous / 2-transitive hierarchy on
// the local actions at a flag.

#include <string>

#include "geodesic/design.hpp"
#include "geodesic/permgrp.hpp"

namespace geodesic {

enum class LocalLevel {
    intransitive = 0,
    transitive = 1,
    primitive = 2,
    two_homogeneous = 3,
    two_transitive = 4,
};

const char* local_level_name(LocalLevel l);
LocalLevel level_of(const TransitivityProfile& p);

struct LocalReport {
    bool flag_transitive = false;
    size_t flag_orbits = 0;
    LocalLevel point_local_level = LocalLevel::intransitive; // G_alpha on D(alpha)
    LocalLevel block_local_level = LocalLevel::intransitive; // G_beta on D(beta)
    LocalLevel global_point_level = LocalLevel::intransitive;
    LocalLevel overall() const { return std::min(point_local_level, block_local_level); }

    BigInt order_g;
    BigInt order_g_alpha;
    BigInt order_g_beta;
    BigInt order_g_alpha_beta;
    BigInt point_local_kernel; // kernel of G_alpha on D(alpha)
    BigInt block_local_kernel; // kernel of G_beta on D(beta)

    int flag_point = -1; // representative flag
    int flag_block = -1;

    std::string to_json() const;
};

struct AnalyzeOptions {
    // When set, every flag is analyzed instead of one representative per
    // G-orbit of flags (audit mode).
    bool exhaustive = false;
};

// Requires G to preserve D's block family (GroupDoesNotActOnDesign otherwise).
LocalReport analyze(const PermGroup& G, const Design& D, const AnalyzeOptions& opts = {});

// D(alpha) as block indices (thin wrapper kept for interface symmetry).
std::vector<int> blocks_through(const Design& D, int alpha);

struct LocalGlobalRecord {
    bool premise_two_homogeneous = false; // block-local level >= 2-homogeneous
    bool premise_two_transitive = false;
    bool conclusion_two_homogeneous = false; // global level >= 2-homogeneous
    bool conclusion_two_transitive = false;
    bool flag_transitivity_implication = false; // locally transitive => flag-transitive
    bool holds = false;
};

// Certifies on this instance that block-local 2-homogeneity (resp.
// 2-transitivity) forces the same property globally, and that local
// transitivity forces flag-transitivity.  A violation is an engine bug.
LocalGlobalRecord certify_local_implications(const PermGroup& G, const Design& D);
LocalGlobalRecord certify_local_implications(const LocalReport& report);

} // namespace geodesic
