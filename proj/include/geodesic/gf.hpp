#pragma once

// Exact arithmetic in GF(p^f), vectors/matrices over it, and enumeration of
// subspaces and projective points.

#include <cstdint>
#include <optional>
#include <vector>

#include "geodesic/error.hpp"

namespace geodesic {

// A field element is its coefficient vector packed base-p: e = sum c_i * p^i,
// with c_0..c_{f-1} the coordinates w.r.t. the basis 1, x, x^2, ...
using Elem = uint32_t;

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);

class Field {
public:
    // Lexicographically-least monic irreducible polynomial of degree f.
    static Field make(uint32_t p, uint32_t f);
    // Explicit modulus: poly holds c_0..c_f with c_f = 1 (monic, degree f).
    static Field make(uint32_t p, uint32_t f, const std::vector<uint32_t>& poly);

    uint32_t p() const { return p_; }
    uint32_t f() const { return f_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& poly() const { return poly_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // A fixed generator of the multiplicative group (order q-1).
    Elem omega() const { return omega_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Elem inv(Elem a) const {
        require(a != 0, ErrorKind::SingularMatrix, "division by zero field element");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }

    // Multiplicative order; 0 has none.
    uint32_t mult_order(Elem a) const;

    std::vector<uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<uint32_t>& c) const;

    // All q elements, in encoding order.
    std::vector<Elem> elements() const;

    bool operator==(const Field& o) const { return p_ == o.p_ && poly_ == o.poly_; }

private:
    Field() = default;
    void build_tables();

    uint32_t p_ = 0, f_ = 0, q_ = 0;
    std::vector<uint32_t> poly_;
    Elem omega_ = 0;
    std::vector<Elem> exp_;     // exp_[k] = omega^k, k in [0, q-1)
    std::vector<uint32_t> log_; // log_[exp_[k]] = k
};

// Relative trace x -> x + x^q of GF(q^2) down to GF(q); requires f even.
// The result is an element of the unique index-2 subfield inside the same
// representation (the fixed field of x -> x^(p^(f/2))).
Elem relative_trace(const Field& F, Elem x);

// The subfield GF(p^(f/2)) as a subset of F's elements.
std::vector<Elem> subfield_elements(const Field& F);

using Vec = std::vector<Elem>;

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
    static Matrix identity(const Field& F, int n);

    const Field& field() const { return *F_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    Elem at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Matrix transpose() const;
    // Entry-wise e-th power (used as field conjugation in unitary geometry).
    Matrix entrywise_pow(uint64_t e) const;

    Elem det() const;
    std::optional<Matrix> inverse() const;

    // Row-vector action v -> v * M.
    Vec apply_row(const Vec& v) const;

    // In-place reduced row echelon form; returns rank.
    int rref();

private:
    const Field* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

// Normalize a nonzero vector so its first nonzero coordinate is 1.
Vec normalize_projective(const Field& F, Vec v);

// All (q^d-1)/(q-1) projective points of F^d, each normalized, ordered by the
// base-q integer encoding of the representative (coordinate 0 least
// significant).  d >= 2.
std::vector<Vec> projective_points(int d, const Field& F);

// All i-dimensional subspaces of F^d, each as its unique RREF basis matrix.
// 1 <= i <= d-1.
std::vector<Matrix> enumerate_subspaces(int d, const Field& F, int i);

// Points of F^d spanned/contained helpers.
uint64_t vec_encode(const Field& F, const Vec& v);
Vec vec_decode(const Field& F, int d, uint64_t code);
bool in_row_space(const Matrix& rref_basis, const Vec& v);

} // namespace geodesic
