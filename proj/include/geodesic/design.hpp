#pragma once

// Incidence-structure core: 2-design validation, t-design counts, block
// intersection profiles, complements, residuals and isomorphism testing.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodesic/error.hpp"

namespace geodesic {

struct DesignParams {
    long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
    bool symmetric = false;
    bool trivial_complete = false; // blocks == all k-subsets
    // consistency flags for the standard parameter identities
    bool vr_eq_bk = false;
    bool lambda_identity = false; // lambda*(v-1) == r*(k-1)
    bool fisher = false;          // v <= b
    bool k_le_r = false;
    bool lambda_lt_r = false;
    bool lambda_v_lt_rk = false;

    bool operator==(const DesignParams& o) const {
        return v == o.v && b == o.b && r == o.r && k == o.k && lambda == o.lambda;
    }
    std::string to_string() const;
};

// v points 0..v-1 plus a list of distinct k-subsets, each kept sorted and
// mirrored in a fixed-width bitset for popcount intersection.
class Design {
public:
    Design(int v, std::vector<std::vector<int>> blocks);

    int v() const { return v_; }
    int b() const { return int(blocks_.size()); }
    int k() const { return k_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }

    bool incident(int point, int block_index) const;
    int intersection_size(int bi, int bj) const;
    int block_intersection_with(int bi, const std::vector<uint64_t>& mask) const;
    std::vector<uint64_t> point_set_mask(const std::vector<int>& pts) const;

    // D(alpha): indices of the blocks through a point.
    std::vector<int> blocks_through(int point) const;

    // Number of blocks containing every point of `pts`.
    long long blocks_containing(const std::vector<int>& pts) const;

    bool is_complete() const; // blocks == all k-subsets of the point set

    bool same_blocks(const Design& other) const;

private:
    int v_ = 0;
    int k_ = 0;
    size_t words_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::vector<uint64_t>> bits_;
};

struct Rational {
    long long num = 0, den = 1;
    void reduce();
    bool integral() const { return den == 1; }
    std::string to_string() const;
};

struct IntersectionProfile {
    std::map<int, long long> multiset; // |beta ∩ gamma| -> count over unordered pairs
    bool quasi_symmetric = false;      // exactly two distinct intersection sizes
    std::vector<int> numbers;          // the distinct sizes, ascending
    Rational c_formula;                // (k-1)(lambda-1)/(r-1) + 1
    bool c_integral = false;
    long long c_value = 0;       // meaningful when integral
};

DesignParams validate_2_design(const Design& D);
std::optional<long long> t_design_lambda(const Design& D, int t);
IntersectionProfile intersection_profile(const Design& D);
Design complement(const Design& D);
// Deletes the point together with every block through it; the surviving
// blocks (those missing alpha) are reindexed onto v-1 points.
Design point_residual(const Design& D, int alpha);

struct IsoOptions {
    size_t node_budget = 5000000;
};
// A point bijection mapping blocks onto blocks, or certified absence.
std::optional<std::vector<int>> are_isomorphic(const Design& D1, const Design& D2,
                                               const IsoOptions& opts = {});

// Flat-file format: line 1 "v b", then b lines of sorted 0-based point
// indices; '#' starts a comment.  write(read(file)) is byte-identical for
// files produced by write_design.
Design read_design(const std::string& path);
void write_design(const std::string& path, const Design& D);
std::string design_to_string(const Design& D);
Design design_from_string(const std::string& text);

long long binomial(long long n, long long k);

} // namespace geodesic
