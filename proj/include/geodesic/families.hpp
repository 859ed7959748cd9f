#pragma once

// Constructors for the concrete design families, each returned together with
// a certified symmetry group acting on its points.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geodesic/design.hpp"
#include "geodesic/gf.hpp"
#include "geodesic/permgrp.hpp"

namespace geodesic {

struct GeometricDesign {
    Design design;
    std::optional<PermGroup> group; // on the points; absent in design-only mode
    std::string provenance;
    DesignParams expected;
    DesignParams actual;
};

// Factor a prime power; throws NotPrime when q is not one.
std::pair<uint32_t, uint32_t> split_prime_power(uint64_t q);

// PG(d-1,q): projective points vs hyperplanes.  d >= 3.
GeometricDesign projective_space(int d, uint64_t q, bool with_frobenius = false);
// PG_1(d-1,q): projective points vs 2-subspaces.  d >= 3 (d == 3 collapses to
// PG(2,q) and is flagged in the provenance).
GeometricDesign pg_lines(int d, uint64_t q, bool with_frobenius = false);
// AG_i(d,q): vectors vs cosets of i-subspaces.  Rejects (i,q) = (1,2).
GeometricDesign affine_design(int i, int d, uint64_t q);
// Hermitian unital U_H(q): isotropic points vs secant-line sections.
GeometricDesign hermitian_unital(uint64_t q);
// S^eps(2m): translates of the zero set of a quadratic form of type eps on
// F_2^(2m); group 2^(2m):Sp_2m(2).  sign is +1 or -1.
GeometricDesign quadratic_form_design(int m, int sign);
// Hadamard 3-(12,6,2) design from the Paley matrix of order 12; group M11
// ingested from `data_dir` when non-empty (order/3-transitivity/invariance
// certified), otherwise design-only.
GeometricDesign hadamard_12(const std::string& data_dir = "");
// Hyperoval 2-(21,56,16,6,4) design on PG(2,4); variant_o = 1 gives PSL3(4),
// variant_o = 2 adjoins the Frobenius collineation.
GeometricDesign hyperoval_design(int variant_o = 1);
// Mathieu-Witt 3-(22,6,1) design; group M22 (or M22.2 for variant_o = 2)
// requires the M22 generator file under data_dir.
GeometricDesign witt_22(const std::string& data_dir = "", int variant_o = 1);
// Orbit of {0,1,w^5,w^10} under AGammaL_1(16); isomorphic to AG_1(2,4).
GeometricDesign agammal1_orbit_design();

// --- standard small groups used across the catalog ---

// <x+1, 2x> of order 21 on F_7.
PermGroup frobenius_group_7_3();
// PSL_2(p) on the projective line (degree p+1), p an odd prime.
PermGroup psl2_mobius(uint32_t p);
// AGammaL_1(q) = {x -> a x^(p^j) + b} on F_q.
PermGroup agammal1(uint64_t q);
// Adjoin the d (times f) translation generators over F_2 to a linear group
// given as permutations of the 2^d vector codes (0 fixed by the input).
PermGroup with_f2_translations(const PermGroup& linear, int d);

// Ingest a generator file and certify order/transitivity; throws
// GeneratorFileInvalid on any mismatch.
PermGroup load_certified_group(const std::string& path, int degree, const BigInt& order,
                               int transitivity_degree);

// Matrix generators of GU_3(q) for the antidiagonal Hermitian form over
// GF(q^2), each certified to preserve the form.  The field is heap-held so
// the matrices stay valid when the struct moves.
struct Gu3Generators {
    std::shared_ptr<const Field> field; // GF(q^2)
    std::vector<Matrix> matrices;
};
Gu3Generators gu3_generators(uint64_t q);

// Projective points of PG(d-1,q) in canonical order (shared labeling between
// families and shipped generator files).
std::vector<Vec> pg_point_list(int d, const Field& F);

} // namespace geodesic
