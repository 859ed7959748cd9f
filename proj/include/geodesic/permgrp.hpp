#pragma once

// Permutation-group engine: orbits, stabilizer chains, setwise stabilizers,
// coset actions and the transitivity hierarchy.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "geodesic/error.hpp"

namespace geodesic {

using BigInt = boost::multiprecision::cpp_int;

class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);                 // identity
    explicit Perm(std::vector<int> images);    // validated bijection

    static Perm identity(int degree) { return Perm(degree); }
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return int(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    // Composition applies *this first, then o:  (a*b)(x) = b(a(x)).
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    int order() const;
    std::string to_cycle_string() const; // 1-based disjoint cycles

private:
    std::vector<int> img_;
};

// Base, strong generating set and transversals for one group.
class StabChain {
public:
    // base_prefix points are forced to the front of the base (even if fixed
    // by the whole group), giving direct access to their stabilizers.
    StabChain(int degree, const std::vector<Perm>& gens,
              const std::vector<int>& base_prefix = {});

    int degree() const { return degree_; }
    const std::vector<int>& base() const { return base_; }
    size_t levels() const { return base_.size(); }

    BigInt order() const;
    // Product of the basic orbit sizes from `level` on: the order of the
    // stabilizer of base[0..level-1].
    BigInt order_from(size_t level) const;
    // Size of the basic orbit at a level (1 beyond the last level).
    size_t basic_orbit_size(size_t level) const;
    // Generators of the stabilizer of base[0..level-1] (level 0 = the group).
    std::vector<Perm> level_gens(size_t level) const;

    bool contains(const Perm& g) const;
    // Returns the residue after stripping; identity iff member.
    Perm sift(const Perm& g) const;

    // Transversal element mapping base[level] to pt, if pt is in the orbit.
    std::optional<Perm> transversal(size_t level, int pt) const;

private:
    void build(const std::vector<Perm>& initial_gens, const std::vector<int>& base_prefix);
    void recompute_orbit(size_t level);
    void append_base_point(int pt);

    int degree_;
    std::vector<int> base_;
    std::vector<std::vector<Perm>> gens_;         // gens_[i] generate the i-th stabilizer
    std::vector<std::vector<int>> orbit_;         // BFS order
    std::vector<std::vector<int>> orbit_pos_;     // point -> index+1 in orbit_, 0 = absent
    std::vector<std::vector<Perm>> trans_;        // point -> transversal element
};

struct TransitivityProfile {
    bool transitive = false;
    bool primitive = false;
    bool two_homogeneous = false;
    bool two_transitive = false;
    size_t point_orbits = 0;
    size_t ordered_pair_orbits = 0;
    size_t unordered_pair_orbits = 0;
};

class PermGroup;

// Result of letting a group act on an invariant family of point sets (or on
// cosets): the image group together with the hom from the parent.
struct ActionImage {
    PermGroup image() const;
    std::vector<Perm> image_gens;
    int image_degree = 0;
    BigInt kernel_order = 0;
    bool faithful = false;
    // Maps an arbitrary element of the parent group to its induced action.
    std::function<Perm(const Perm&)> act;
};

class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Perm> generators);

    static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    BigInt order() const;
    bool is_member(const Perm& g) const;
    bool is_trivial() const { return order() == 1; }
    bool same_group(const PermGroup& other) const;
    bool contains_group(const PermGroup& other) const;

    std::vector<int> orbit(int x) const;
    std::vector<std::vector<int>> orbits() const;

    PermGroup point_stabilizer(int x) const;
    // Stabilizer of an ordered tuple of points.
    PermGroup tuple_stabilizer(const std::vector<int>& pts) const;
    // {g in G : S^g = S}; computed from the set-orbit of S with Schreier
    // generators, so |G| = |orbit of S| * |result| holds by construction.
    PermGroup setwise_stabilizer(const std::vector<int>& set,
                                 size_t orbit_budget = size_t(1) << 22) const;
    // The set-orbit itself (each member sorted), in BFS order.
    std::vector<std::vector<int>> set_orbit(const std::vector<int>& set,
                                            size_t orbit_budget = size_t(1) << 22) const;

    TransitivityProfile transitivity_profile() const;
    bool is_k_transitive(int k) const;

    // Right-multiplication action on the cosets [G:H].  H's generators must
    // lie in G.  Coset 0 is H itself.
    ActionImage coset_action(const PermGroup& H, size_t index_cap = 1000000) const;

    // Action on a G-invariant family of point sets; throws FamilyNotInvariant.
    ActionImage induced_action(const std::vector<std::vector<int>>& family) const;

    PermGroup derived_subgroup() const;

    // Chain with a forced base prefix (not cached).
    std::shared_ptr<const StabChain> chain_with_prefix(const std::vector<int>& prefix) const;
    std::shared_ptr<const StabChain> chain() const;

private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    mutable std::shared_ptr<const StabChain> chain_;
};

// Exhaustive element enumeration (oracle-grade; throws BudgetExceeded above cap).
std::vector<Perm> enumerate_elements(const PermGroup& G, size_t cap = 200000);

// Normal closure of the subgroup generated by `seed` under conjugation by G.
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed);

// Generator-file ingestion (format: line 1 "degree n"; then one permutation
// per non-comment line, either 1-based disjoint cycles or "img: ..." 0-based
// image lists; '#' starts a comment).
PermGroup read_group_file(const std::string& path);
void write_group_file(const std::string& path, const PermGroup& G,
                      const std::string& comment = "");
Perm parse_perm(const std::string& line, int degree);

} // namespace geodesic
