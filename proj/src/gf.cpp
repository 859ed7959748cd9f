#include "geodesic/gf.hpp"

#include <algorithm>
#include <numeric>

namespace geodesic {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Dense polynomials over F_p, coefficient i = c[i], no trailing zeros enforced
// by trim().  Enough machinery for modulus construction and the Rabin
// irreducibility criterion; not a general-purpose polynomial layer.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    trim(c);
    return c;
}

// a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
    trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t sub = uint64_t(lead) * m[i] % p;
                uint32_t& t = a[shift + i];
                t = uint32_t((t + p - sub) % p);
            }
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& m, uint32_t p) {
    Poly r{1};
    Poly b = poly_mod(base, m, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b, p), m, p);
        b = poly_mod(poly_mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic before reducing
        uint32_t lead = b.back();
        if (lead != 1) {
            uint32_t inv = 1;
            for (uint32_t t = 1; t < p; ++t)
                if (t * uint64_t(lead) % p == 1) { inv = t; break; }
            for (auto& c : b) c = uint32_t(uint64_t(c) * inv % p);
        }
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

// x^(p^k) mod m by repeated p-th powering.
Poly frobenius_power(const Poly& m, uint32_t p, uint32_t k) {
    Poly x{0, 1};
    Poly t = poly_mod(x, m, p);
    for (uint32_t i = 0; i < k; ++i) t = poly_powmod(t, p, m, p);
    return t;
}

// Rabin test.  f >= 1, poly monic degree f over F_p.
bool poly_irreducible(const Poly& poly, uint32_t p, uint32_t f) {
    if (f == 1) return true;
    Poly x{0, 1};
    // x^(p^f) == x (mod poly)
    Poly xpf = frobenius_power(poly, p, f);
    if (poly_mod([&] { Poly d = xpf; if (d.size() < 2) d.resize(2, 0); d[1] = (d[1] + p - 1) % p; trim(d); return d; }(), poly, p) != Poly{})
        return false;
    // gcd(x^(p^(f/l)) - x, poly) == 1 for every prime l | f
    for (uint64_t l : prime_factors(f)) {
        Poly t = frobenius_power(poly, p, uint32_t(f / l));
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        Poly g = poly_gcd(poly, t, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

} // namespace

Field Field::make(uint32_t p, uint32_t f) {
    require(is_prime(p), ErrorKind::NotPrime, "p = " + std::to_string(p));
    require(f >= 1, ErrorKind::DimensionOutOfRange, "extension degree must be >= 1");
    // Scan coefficient tuples (c_0..c_{f-1}) in base-p encoding order; the
    // first irreducible hit is the canonical modulus.
    uint64_t qf = 1;
    for (uint32_t i = 0; i < f; ++i) qf *= p;
    for (uint64_t code = 0; code < qf; ++code) {
        std::vector<uint32_t> poly(f + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < f; ++i) {
            poly[i] = uint32_t(c % p);
            c /= p;
        }
        poly[f] = 1;
        if (poly_irreducible(poly, p, f)) return make(p, f, poly);
    }
    fail(ErrorKind::ReduciblePolynomial, "no irreducible polynomial found (unreachable)");
}

Field Field::make(uint32_t p, uint32_t f, const std::vector<uint32_t>& poly) {
    require(is_prime(p), ErrorKind::NotPrime, "p = " + std::to_string(p));
    require(f >= 1 && poly.size() == f + 1 && poly[f] == 1, ErrorKind::ReduciblePolynomial,
            "modulus must be monic of degree f");
    for (auto c : poly)
        require(c < p, ErrorKind::ReduciblePolynomial, "modulus coefficient out of range");
    require(poly_irreducible(poly, p, f), ErrorKind::ReduciblePolynomial, "modulus is reducible");

    Field F;
    F.p_ = p;
    F.f_ = f;
    uint64_t q = 1;
    for (uint32_t i = 0; i < f; ++i) q *= p;
    require(q <= (1u << 16), ErrorKind::DimensionOutOfRange, "field order above 2^16");
    F.q_ = uint32_t(q);
    F.poly_ = poly;
    F.build_tables();
    return F;
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem out = 0, m = 1;
    for (uint32_t i = 0; i < f_; ++i) {
        uint32_t ca = (a / m) % p_, cb = (b / m) % p_;
        out += ((ca + cb) % p_) * m;
        m *= p_;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem out = 0, m = 1;
    for (uint32_t i = 0; i < f_; ++i) {
        uint32_t c = (a / m) % p_;
        out += ((p_ - c) % p_) * m;
        m *= p_;
    }
    return out;
}

Elem Field::pow(Elem a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t k = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[k];
}

uint32_t Field::mult_order(Elem a) const {
    require(a != 0, ErrorKind::SingularMatrix, "zero has no multiplicative order");
    uint32_t k = log_[a];
    return (q_ - 1) / std::gcd(q_ - 1, k);
}

std::vector<uint32_t> Field::coeffs(Elem a) const {
    std::vector<uint32_t> c(f_);
    for (uint32_t i = 0; i < f_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coeffs(const std::vector<uint32_t>& c) const {
    Elem out = 0, m = 1;
    for (uint32_t i = 0; i < f_; ++i) {
        uint32_t ci = i < c.size() ? c[i] : 0;
        require(ci < p_, ErrorKind::DimensionOutOfRange, "coefficient out of range");
        out += ci * m;
        m *= p_;
    }
    return out;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> e(q_);
    std::iota(e.begin(), e.end(), 0);
    return e;
}

void Field::build_tables() {
    // Multiply coefficient vectors mod the modulus, once, to seed the log
    // tables; afterwards everything runs through exp/log.
    auto raw_mul = [&](Elem a, Elem b) -> Elem {
        Poly pa, pb;
        Elem t = a;
        for (uint32_t i = 0; i < f_; ++i) { pa.push_back(t % p_); t /= p_; }
        t = b;
        for (uint32_t i = 0; i < f_; ++i) { pb.push_back(t % p_); t /= p_; }
        trim(pa); trim(pb);
        Poly pc = poly_mod(poly_mul(pa, pb, p_), poly_, p_);
        Elem out = 0, m = 1;
        for (size_t i = 0; i < f_; ++i) {
            out += (i < pc.size() ? pc[i] : 0) * m;
            m *= p_;
        }
        return out;
    };

    auto order_of = [&](Elem a) -> uint32_t {
        Elem t = a;
        uint32_t k = 1;
        while (t != 1) {
            t = raw_mul(t, a);
            ++k;
            if (k > q_) return 0; // not invertible (cannot happen in a field)
        }
        return k;
    };

    omega_ = 0;
    for (Elem a = 1; a < q_; ++a) {
        if (order_of(a) == q_ - 1) { omega_ = a; break; }
    }
    require(omega_ != 0, ErrorKind::GroupCertificateFailed, "no multiplicative generator found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem t = 1;
    for (uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = t;
        log_[t] = k;
        t = raw_mul(t, omega_);
    }
}

Elem relative_trace(const Field& F, Elem x) {
    require(F.f() % 2 == 0, ErrorKind::NotQuadraticExtension,
            "field degree " + std::to_string(F.f()) + " is odd");
    uint64_t q0 = 1;
    for (uint32_t i = 0; i < F.f() / 2; ++i) q0 *= F.p();
    return F.add(x, F.pow(x, q0));
}

std::vector<Elem> subfield_elements(const Field& F) {
    require(F.f() % 2 == 0, ErrorKind::NotQuadraticExtension, "no designated index-2 subfield");
    uint64_t q0 = 1;
    for (uint32_t i = 0; i < F.f() / 2; ++i) q0 *= F.p();
    std::vector<Elem> out;
    for (Elem a = 0; a < F.q(); ++a)
        if (F.pow(a, q0) == a) out.push_back(a);
    return out;
}

Matrix Matrix::identity(const Field& F, int n) {
    Matrix m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, ErrorKind::DimensionOutOfRange, "matrix product shape mismatch");
    Matrix r(*F_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Elem aik = at(i, k);
            if (!aik) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = F_->add(r.at(i, j), F_->mul(aik, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(*F_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::entrywise_pow(uint64_t e) const {
    Matrix r(*F_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = F_->pow(at(i, j), e);
    return r;
}

Elem Matrix::det() const {
    require(rows_ == cols_, ErrorKind::DimensionOutOfRange, "det of non-square matrix");
    Matrix m = *this;
    Elem d = 1;
    int n = rows_;
    for (int col = 0, row = 0; col < n && row < n; ++col, ++row) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (m.at(r, col)) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != row) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(row, j));
            d = F_->neg(d);
        }
        d = F_->mul(d, m.at(row, col));
        Elem inv = F_->inv(m.at(row, col));
        for (int r = row + 1; r < n; ++r) {
            Elem factor = F_->mul(m.at(r, col), inv);
            if (!factor) continue;
            for (int j = col; j < n; ++j)
                m.at(r, j) = F_->sub(m.at(r, j), F_->mul(factor, m.at(row, j)));
        }
    }
    return d;
}

std::optional<Matrix> Matrix::inverse() const {
    require(rows_ == cols_, ErrorKind::DimensionOutOfRange, "inverse of non-square matrix");
    int n = rows_;
    Matrix aug(*F_, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    aug.rref();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (aug.at(i, j) != (i == j ? 1u : 0u)) return std::nullopt;
    Matrix r(*F_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

Vec Matrix::apply_row(const Vec& v) const {
    require(int(v.size()) == rows_, ErrorKind::DimensionOutOfRange, "row-vector length mismatch");
    Vec r(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        if (!v[i]) continue;
        for (int j = 0; j < cols_; ++j)
            r[j] = F_->add(r[j], F_->mul(v[i], at(i, j)));
    }
    return r;
}

int Matrix::rref() {
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, col)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
        Elem inv = F_->inv(at(rank, col));
        for (int j = 0; j < cols_; ++j) at(rank, j) = F_->mul(at(rank, j), inv);
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || !at(r, col)) continue;
            Elem factor = at(r, col);
            for (int j = 0; j < cols_; ++j)
                at(r, j) = F_->sub(at(r, j), F_->mul(factor, at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

Vec normalize_projective(const Field& F, Vec v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i]) {
            Elem inv = F.inv(v[i]);
            for (auto& c : v) c = F.mul(c, inv);
            return v;
        }
    }
    fail(ErrorKind::DimensionOutOfRange, "cannot normalize the zero vector");
}

uint64_t vec_encode(const Field& F, const Vec& v) {
    uint64_t code = 0, m = 1;
    for (auto c : v) {
        code += uint64_t(c) * m;
        m *= F.q();
    }
    return code;
}

Vec vec_decode(const Field& F, int d, uint64_t code) {
    Vec v(d);
    for (int i = 0; i < d; ++i) {
        v[i] = Elem(code % F.q());
        code /= F.q();
    }
    return v;
}

std::vector<Vec> projective_points(int d, const Field& F) {
    require(d >= 2, ErrorKind::DimensionOutOfRange, "projective dimension needs d >= 2");
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= F.q();
    std::vector<Vec> pts;
    for (uint64_t code = 1; code < total; ++code) {
        Vec v = vec_decode(F, d, code);
        size_t lead = 0;
        while (!v[lead]) ++lead;
        if (v[lead] == 1) pts.push_back(std::move(v));
    }
    return pts;
}

std::vector<Matrix> enumerate_subspaces(int d, const Field& F, int i) {
    require(i >= 1 && i <= d - 1, ErrorKind::DimensionOutOfRange,
            "subspace dimension out of range");
    std::vector<Matrix> out;
    // Enumerate RREF shapes: choose pivot columns, then fill the free entries.
    std::vector<int> pivots(i);
    std::iota(pivots.begin(), pivots.end(), 0);
    auto emit_for_pivots = [&]() {
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < i; ++r)
            for (int c = pivots[r] + 1; c < d; ++c) {
                bool is_pivot_col = false;
                for (int r2 = 0; r2 < i; ++r2)
                    if (pivots[r2] == c) { is_pivot_col = true; break; }
                if (!is_pivot_col) free_pos.emplace_back(r, c);
            }
        uint64_t count = 1;
        for (size_t k = 0; k < free_pos.size(); ++k) count *= F.q();
        for (uint64_t code = 0; code < count; ++code) {
            Matrix m(F, i, d);
            for (int r = 0; r < i; ++r) m.at(r, pivots[r]) = 1;
            uint64_t c = code;
            for (auto [r, col] : free_pos) {
                m.at(r, col) = Elem(c % F.q());
                c /= F.q();
            }
            out.push_back(std::move(m));
        }
    };
    // iterate combinations of pivot columns in lex order
    while (true) {
        emit_for_pivots();
        int k = i - 1;
        while (k >= 0 && pivots[k] == d - i + k) --k;
        if (k < 0) break;
        ++pivots[k];
        for (int j = k + 1; j < i; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

bool in_row_space(const Matrix& rref_basis, const Vec& v) {
    const Field& F = rref_basis.field();
    Vec w = v;
    int rows = rref_basis.rows(), cols = rref_basis.cols();
    for (int r = 0; r < rows; ++r) {
        int piv = -1;
        for (int c = 0; c < cols; ++c)
            if (rref_basis.at(r, c)) { piv = c; break; }
        if (piv < 0) continue;
        if (w[piv]) {
            Elem factor = w[piv]; // pivot entry is 1 in RREF
            for (int c = 0; c < cols; ++c)
                w[c] = F.sub(w[c], F.mul(factor, rref_basis.at(r, c)));
        }
    }
    for (auto c : w)
        if (c) return false;
    return true;
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
        case ErrorKind::NotQuadraticExtension: return "NotQuadraticExtension";
        case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NonBijectiveImage: return "NonBijectiveImage";
        case ErrorKind::PointOutOfRange: return "PointOutOfRange";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::IndexOverflow: return "IndexOverflow";
        case ErrorKind::FamilyNotInvariant: return "FamilyNotInvariant";
        case ErrorKind::GeneratorFileInvalid: return "GeneratorFileInvalid";
        case ErrorKind::GeneratorSearchFailed: return "GeneratorSearchFailed";
        case ErrorKind::GroupCertificateFailed: return "GroupCertificateFailed";
        case ErrorKind::OrbitLengthUnexpected: return "OrbitLengthUnexpected";
        case ErrorKind::TrivialDesign: return "TrivialDesign";
        case ErrorKind::NotUniformReplication: return "NotUniformReplication";
        case ErrorKind::PairCountVaries: return "PairCountVaries";
        case ErrorKind::NotADesign: return "NotADesign";
        case ErrorKind::DuplicateBlock: return "DuplicateBlock";
        case ErrorKind::BlockOutOfRange: return "BlockOutOfRange";
        case ErrorKind::TimeBudgetExceeded: return "TimeBudgetExceeded";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::NotA2Design: return "NotA2Design";
        case ErrorKind::NotFlagTransitive: return "NotFlagTransitive";
        case ErrorKind::IsomorphismFailed: return "IsomorphismFailed";
        case ErrorKind::GroupDoesNotActOnDesign: return "GroupDoesNotActOnDesign";
        case ErrorKind::EmptyDesign: return "EmptyDesign";
        case ErrorKind::InvariantViolated: return "InvariantViolated";
        case ErrorKind::ParameterMismatch: return "ParameterMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

} // namespace geodesic
