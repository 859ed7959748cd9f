#include "geodesic/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace geodesic {

std::pair<uint32_t, uint32_t> split_prime_power(uint64_t q) {
    require(q >= 2, ErrorKind::NotPrime, "q must be at least 2");
    uint64_t p = 2;
    while (q % p != 0) ++p;
    uint32_t f = 0;
    uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++f;
    }
    require(t == 1, ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return {uint32_t(p), f};
}

namespace {

DesignParams make_params(long long v, long long b, long long r, long long k, long long lambda) {
    DesignParams P;
    P.v = v;
    P.b = b;
    P.r = r;
    P.k = k;
    P.lambda = lambda;
    P.symmetric = (v == b);
    return P;
}

BigInt int_pow(const BigInt& base, uint32_t e) {
    BigInt r = 1;
    while (e--) r *= base;
    return r;
}

BigInt sl_order(int d, uint64_t q) {
    BigInt n = int_pow(q, uint32_t(d * (d - 1) / 2));
    for (int i = 2; i <= d; ++i) n *= int_pow(q, i) - 1;
    return n;
}

BigInt psl_order(int d, uint64_t q) {
    return sl_order(d, q) / std::gcd(uint64_t(d), q - 1);
}

BigInt sp_order(int m, int /*q = 2*/) {
    BigInt n = int_pow(2, uint32_t(m * m));
    for (int i = 1; i <= m; ++i) n *= int_pow(4, i) - 1;
    return n;
}

struct ProjectiveSpaceCtx {
    Field F;
    int d;
    std::vector<Vec> pts;
    std::unordered_map<uint64_t, int> index;

    ProjectiveSpaceCtx(int d_, const Field& field) : F(field), d(d_) {
        pts = projective_points(d, F);
        for (size_t i = 0; i < pts.size(); ++i) index.emplace(vec_encode(F, pts[i]), int(i));
    }

    int point_index(const Vec& v) const {
        auto it = index.find(vec_encode(F, normalize_projective(F, v)));
        require(it != index.end(), ErrorKind::PointOutOfRange, "vector not a projective point");
        return it->second;
    }

    Perm matrix_perm(const Matrix& M) const {
        std::vector<int> img(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) img[i] = point_index(M.apply_row(pts[i]));
        return Perm(std::move(img));
    }

    Perm frobenius_perm() const {
        std::vector<int> img(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            Vec w = pts[i];
            for (auto& c : w) c = F.frobenius(c);
            img[i] = point_index(w);
        }
        return Perm(std::move(img));
    }
};

std::vector<Matrix> sl_generators(int d, const Field& F) {
    std::vector<Matrix> gens;
    for (uint32_t j = 0; j < F.f(); ++j) {
        Matrix E = Matrix::identity(F, d);
        E.at(0, 1) = F.pow(F.omega(), j); // omega^0 = 1
        gens.push_back(E);
    }
    Matrix C(F, d, d);
    for (int i = 0; i + 1 < d; ++i) C.at(i, i + 1) = 1;
    C.at(d - 1, 0) = (d % 2 == 1) ? F.one() : F.neg(F.one());
    require(C.det() == F.one(), ErrorKind::GroupCertificateFailed, "cycle generator not in SL");
    gens.push_back(C);
    return gens;
}

PermGroup projective_group(const ProjectiveSpaceCtx& ctx, bool with_frobenius, BigInt* order_out) {
    std::vector<Perm> gens;
    for (const auto& M : sl_generators(ctx.d, ctx.F)) gens.push_back(ctx.matrix_perm(M));
    BigInt expect = psl_order(ctx.d, ctx.F.q());
    if (with_frobenius && ctx.F.f() > 1) {
        gens.push_back(ctx.frobenius_perm());
        expect *= ctx.F.f();
    }
    PermGroup G(int(ctx.pts.size()), gens);
    require(G.order() == expect, ErrorKind::GroupCertificateFailed,
            "projective group order certificate failed");
    if (order_out) *order_out = expect;
    return G;
}

GeometricDesign finish(Design design, std::optional<PermGroup> group, std::string provenance,
                       const DesignParams& expected) {
    DesignParams actual = validate_2_design(design);
    require(actual == expected, ErrorKind::ParameterMismatch,
            provenance + ": got " + actual.to_string() + ", expected " + expected.to_string());
    if (group) {
        require(group->degree() == design.v(), ErrorKind::DegreeMismatch,
                provenance + ": group degree != point count");
        group->induced_action(design.blocks()); // throws FamilyNotInvariant if not preserved
    }
    return GeometricDesign{std::move(design), std::move(group), std::move(provenance), expected,
                           actual};
}

Elem dot(const Field& F, const Vec& a, const Vec& b) {
    Elem s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

} // namespace

std::vector<Vec> pg_point_list(int d, const Field& F) {
    return projective_points(d, F);
}

GeometricDesign projective_space(int d, uint64_t q, bool with_frobenius) {
    require(d >= 3, ErrorKind::BadDimension, "PG(d-1,q) needs d >= 3");
    auto [p, f] = split_prime_power(q);
    ProjectiveSpaceCtx ctx(d, Field::make(p, f));
    std::vector<std::vector<int>> blocks;
    for (const auto& w : ctx.pts) {
        std::vector<int> blk;
        for (size_t i = 0; i < ctx.pts.size(); ++i)
            if (dot(ctx.F, ctx.pts[i], w) == 0) blk.push_back(int(i));
        blocks.push_back(std::move(blk));
    }
    long long v = (long long)ctx.pts.size();
    long long qd1 = 1;
    for (int i = 0; i < d - 1; ++i) qd1 *= (long long)q;
    long long k = (qd1 - 1) / ((long long)q - 1);
    long long lam = ((qd1 / (long long)q) - 1) / ((long long)q - 1);
    PermGroup G = projective_group(ctx, with_frobenius, nullptr);
    std::ostringstream prov;
    prov << "PG(" << d - 1 << "," << q << ")";
    return finish(Design(int(v), std::move(blocks)), G, prov.str(),
                  make_params(v, v, k, k, lam));
}

GeometricDesign pg_lines(int d, uint64_t q, bool with_frobenius) {
    require(d >= 3, ErrorKind::BadDimension, "PG_1(d-1,q) needs d >= 3");
    auto [p, f] = split_prime_power(q);
    ProjectiveSpaceCtx ctx(d, Field::make(p, f));
    std::vector<std::vector<int>> blocks;
    for (const auto& sub : enumerate_subspaces(d, ctx.F, 2)) {
        std::vector<int> blk;
        for (size_t i = 0; i < ctx.pts.size(); ++i)
            if (in_row_space(sub, ctx.pts[i])) blk.push_back(int(i));
        blocks.push_back(std::move(blk));
    }
    long long Q = (long long)q;
    long long v = (long long)ctx.pts.size();
    long long qd = 1, qd1 = 1;
    for (int i = 0; i < d; ++i) qd *= Q;
    for (int i = 0; i < d - 1; ++i) qd1 *= Q;
    long long b = (qd - 1) * (qd1 - 1) / ((Q * Q - 1) * (Q - 1));
    long long r = (qd1 - 1) / (Q - 1);
    long long k = Q + 1;
    PermGroup G = projective_group(ctx, with_frobenius, nullptr);
    std::ostringstream prov;
    prov << "PG_1(" << d - 1 << "," << q << ")";
    if (d == 3) prov << " [d=3: coincides with PG(2,q)]";
    return finish(Design(int(v), std::move(blocks)), G, prov.str(), make_params(v, b, r, k, 1));
}

GeometricDesign affine_design(int i, int d, uint64_t q) {
    require(d >= 2 && i >= 1 && i <= d - 1, ErrorKind::BadDimension, "AG_i(d,q) needs 1 <= i < d");
    require(!(i == 1 && q == 2), ErrorKind::TrivialDesign,
            "AG_1(d,2) is the complete 2-subset design");
    auto [p, f] = split_prime_power(q);
    Field F = Field::make(p, f);
    uint64_t vcount = 1;
    for (int t = 0; t < d; ++t) vcount *= q;

    std::vector<std::vector<int>> blocks;
    for (const auto& sub : enumerate_subspaces(d, F, i)) {
        // points of the subspace itself
        std::vector<uint64_t> subspace_codes;
        uint64_t combos = 1;
        for (int t = 0; t < i; ++t) combos *= q;
        for (uint64_t c = 0; c < combos; ++c) {
            Vec coeff = vec_decode(F, i, c);
            Vec pt(d, 0);
            for (int row = 0; row < i; ++row)
                for (int col = 0; col < d; ++col)
                    pt[col] = F.add(pt[col], F.mul(coeff[row], sub.at(row, col)));
            subspace_codes.push_back(vec_encode(F, pt));
        }
        std::vector<char> covered(vcount, 0);
        for (uint64_t rep = 0; rep < vcount; ++rep) {
            if (covered[rep]) continue;
            Vec t = vec_decode(F, d, rep);
            std::vector<int> blk;
            for (uint64_t sc : subspace_codes) {
                Vec u = vec_decode(F, d, sc);
                Vec s(d);
                for (int c = 0; c < d; ++c) s[c] = F.add(u[c], t[c]);
                uint64_t code = vec_encode(F, s);
                covered[code] = 1;
                blk.push_back(int(code));
            }
            blocks.push_back(std::move(blk));
        }
    }

    // ASL_d(q): translations plus the linear generators
    std::vector<Perm> gens;
    for (int c = 0; c < d; ++c)
        for (uint32_t j = 0; j < f; ++j) {
            Vec shift(d, 0);
            shift[c] = F.pow(F.omega(), j);
            std::vector<int> img(vcount);
            for (uint64_t code = 0; code < vcount; ++code) {
                Vec x = vec_decode(F, d, code);
                for (int t = 0; t < d; ++t) x[t] = F.add(x[t], shift[t]);
                img[code] = int(vec_encode(F, x));
            }
            gens.push_back(Perm(std::move(img)));
        }
    for (const auto& M : sl_generators(d, F)) {
        std::vector<int> img(vcount);
        for (uint64_t code = 0; code < vcount; ++code)
            img[code] = int(vec_encode(F, M.apply_row(vec_decode(F, d, code))));
        gens.push_back(Perm(std::move(img)));
    }
    PermGroup G(int(vcount), gens);
    require(G.order() == BigInt(vcount) * sl_order(d, q), ErrorKind::GroupCertificateFailed,
            "ASL order certificate failed");

    long long Q = (long long)q;
    long long v = (long long)vcount;
    long long k = 1;
    for (int t = 0; t < i; ++t) k *= Q;
    long long subspaces = (long long)blocks.size() / (v / k); // cosets per subspace = q^(d-i)
    long long b = (long long)blocks.size();
    long long r = subspaces; // each point lies in one coset of every i-subspace
    long long lam = r * (k - 1) / (v - 1);
    std::ostringstream prov;
    prov << "AG_" << i << "(" << d << "," << q << ")";
    return finish(Design(int(v), std::move(blocks)), G, prov.str(), make_params(v, b, r, k, lam));
}

Gu3Generators gu3_generators(uint64_t q) {
    auto [p, f] = split_prime_power(q);
    auto field = std::make_shared<const Field>(Field::make(p, 2 * f));
    const Field& F = *field;
    Matrix B(F, 3, 3);
    B.at(0, 2) = 1;
    B.at(1, 1) = 1;
    B.at(2, 0) = 1;
    auto is_unitary = [&](const Matrix& M) {
        return M * B * M.entrywise_pow(q).transpose() == B;
    };
    auto first_with_trace = [&](Elem target) {
        for (Elem a = 1; a < F.q(); ++a)
            if (F.add(a, F.pow(a, q)) == target) return a;
        fail(ErrorKind::GeneratorSearchFailed, "no element with requested relative trace");
    };
    std::vector<Matrix> mats;
    {
        // unipotent radical, torus and Weyl element for the Borel decomposition
        Matrix u1 = Matrix::identity(F, 3);
        u1.at(2, 0) = first_with_trace(0);
        mats.push_back(u1);
        Matrix u2 = Matrix::identity(F, 3);
        u2.at(1, 0) = F.neg(1);
        u2.at(2, 1) = 1;
        u2.at(2, 0) = first_with_trace(F.neg(1));
        mats.push_back(u2);
        Matrix t1 = Matrix::identity(F, 3);
        t1.at(0, 0) = F.omega();
        t1.at(2, 2) = F.inv(F.pow(F.omega(), q));
        mats.push_back(t1);
        Matrix t2 = Matrix::identity(F, 3);
        t2.at(1, 1) = F.pow(F.omega(), q - 1);
        mats.push_back(t2);
        mats.push_back(B);
    }
    for (const auto& M : mats)
        require(is_unitary(M), ErrorKind::GeneratorSearchFailed,
                "candidate generator does not preserve the form");
    return Gu3Generators{std::move(field), std::move(mats)};
}

GeometricDesign hermitian_unital(uint64_t q) {
    auto [p, f] = split_prime_power(q);
    Field F = Field::make(p, 2 * f);
    auto conj = [&](Elem x) { return F.pow(x, q); };

    auto pts_all = projective_points(3, F);
    auto isotropic = [&](const Vec& v) {
        // v B conj(v)^T with B = antidiag(1,1,1)
        Elem s = F.mul(v[0], conj(v[2]));
        s = F.add(s, F.mul(v[1], conj(v[1])));
        s = F.add(s, F.mul(v[2], conj(v[0])));
        return s == 0;
    };
    std::vector<Vec> pts;
    std::unordered_map<uint64_t, int> index;
    for (const auto& v : pts_all)
        if (isotropic(v)) {
            index.emplace(vec_encode(F, v), int(pts.size()));
            pts.push_back(v);
        }
    long long Q = (long long)q;
    require((long long)pts.size() == Q * Q * Q + 1, ErrorKind::GroupCertificateFailed,
            "isotropic point count is not q^3+1");

    // blocks: isotropic points on the line through each pair
    std::set<std::vector<int>> blockset;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            std::vector<int> blk;
            for (Elem mu = 0; mu < F.q(); ++mu) {
                Vec w(3);
                for (int c = 0; c < 3; ++c) w[c] = F.add(pts[i][c], F.mul(mu, pts[j][c]));
                if (isotropic(w)) {
                    auto it = index.find(vec_encode(F, normalize_projective(F, w)));
                    blk.push_back(it->second);
                }
            }
            blk.push_back(int(j));
            std::sort(blk.begin(), blk.end());
            blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
            blockset.insert(std::move(blk));
        }
    std::vector<std::vector<int>> blocks(blockset.begin(), blockset.end());

    Gu3Generators gu = gu3_generators(q);
    std::vector<Perm> gens;
    for (const auto& M : gu.matrices) {
        std::vector<int> img(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            Vec w = normalize_projective(F, M.apply_row(pts[i]));
            img[i] = index.at(vec_encode(F, w));
        }
        gens.push_back(Perm(std::move(img)));
    }
    PermGroup G(int(pts.size()), gens);
    BigInt expect = BigInt(Q) * Q * Q * (BigInt(Q) * Q - 1) * (BigInt(Q) * Q * Q + 1);
    require(G.order() == expect, ErrorKind::GeneratorSearchFailed,
            "unitary group order certificate failed");

    std::ostringstream prov;
    prov << "U_H(" << q << ")";
    return finish(Design(int(pts.size()), std::move(blocks)), G, prov.str(),
                  make_params(Q * Q * Q + 1, Q * Q * (Q * Q - Q + 1), Q * Q, Q + 1, 1));
}

GeometricDesign quadratic_form_design(int m, int sign) {
    require(m >= 2, ErrorKind::BadDimension, "S(2m) needs m >= 2");
    require(sign == 1 || sign == -1, ErrorKind::BadDimension, "sign must be +1 or -1");
    int n = 2 * m;
    uint32_t vcount = 1u << n;
    auto bit = [](uint32_t x, int i) { return (x >> i) & 1u; };
    auto symp = [&](uint32_t x, uint32_t y) {
        uint32_t s = 0;
        for (int i = 0; i < m; ++i)
            s ^= (bit(x, 2 * i) & bit(y, 2 * i + 1)) ^ (bit(x, 2 * i + 1) & bit(y, 2 * i));
        return s;
    };
    auto theta = [&](uint32_t x) {
        uint32_t s = 0;
        for (int i = 0; i < m; ++i) s ^= bit(x, 2 * i) & bit(x, 2 * i + 1);
        if (sign < 0) s ^= bit(x, n - 2) ^ bit(x, n - 1);
        return s;
    };
    std::vector<int> zero_set;
    for (uint32_t x = 0; x < vcount; ++x)
        if (theta(x) == 0) zero_set.push_back(int(x));
    long long expected_k = (1ll << (n - 1)) + sign * (1ll << (m - 1));
    require((long long)zero_set.size() == expected_k, ErrorKind::GroupCertificateFailed,
            "quadratic form zero-set size mismatch");

    std::vector<std::vector<int>> blocks;
    for (uint32_t a = 0; a < vcount; ++a) {
        std::vector<int> blk;
        blk.reserve(zero_set.size());
        for (int z : zero_set) blk.push_back(int(uint32_t(z) ^ a));
        blocks.push_back(std::move(blk));
    }

    // symplectic transvections x -> x + f(x,v) v, added greedily until the
    // full symplectic group is reached
    auto transvection = [&](uint32_t v) {
        std::vector<int> img(vcount);
        for (uint32_t x = 0; x < vcount; ++x) img[x] = int(symp(x, v) ? (x ^ v) : x);
        return Perm(std::move(img));
    };
    BigInt sp = sp_order(m, 2);
    std::vector<Perm> linear;
    {
        PermGroup current(vcount, {});
        for (uint32_t v = 1; v < vcount && current.order() < sp; ++v) {
            Perm t = transvection(v);
            if (!current.is_member(t)) {
                linear.push_back(t);
                current = PermGroup(vcount, linear);
            }
        }
        require(current.order() == sp, ErrorKind::GroupCertificateFailed,
                "transvections did not generate Sp_2m(2)");
    }
    std::vector<Perm> gens = linear;
    for (int i = 0; i < n; ++i) {
        std::vector<int> img(vcount);
        for (uint32_t x = 0; x < vcount; ++x) img[x] = int(x ^ (1u << i));
        gens.push_back(Perm(std::move(img)));
    }
    PermGroup G(int(vcount), gens);
    require(G.order() == BigInt(vcount) * sp, ErrorKind::GroupCertificateFailed,
            "2^2m:Sp_2m(2) order certificate failed");

    long long v = vcount;
    long long k = expected_k;
    long long lam = (1ll << (n - 2)) + sign * (1ll << (m - 1));
    std::ostringstream prov;
    prov << "S" << (sign > 0 ? "+" : "-") << "(" << n << ")";
    return finish(Design(int(v), std::move(blocks)), G, prov.str(), make_params(v, v, k, k, lam));
}

GeometricDesign hadamard_12(const std::string& data_dir) {
    // Paley matrix of order 12 over F_11, normalized so the first row and
    // column are all +1.
    const int q = 11;
    auto chi = [&](int t) {
        t = ((t % q) + q) % q;
        if (t == 0) return 0;
        for (int s = 1; s < q; ++s)
            if (s * s % q == t) return 1;
        return -1;
    };
    int H[12][12];
    for (int j = 0; j < 12; ++j) H[0][j] = 1;
    for (int i = 1; i < 12; ++i) {
        // row i of I + C, negated so that column 0 becomes +1
        H[i][0] = 1;
        for (int j = 1; j < 12; ++j) {
            int c = chi(j - i); // C[i][j] for i,j >= 1
            int h = c + (i == j ? 1 : 0);
            H[i][j] = -h;
        }
    }
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            int s = 0;
            for (int t = 0; t < 12; ++t) s += H[i][t] * H[j][t];
            require(s == (i == j ? 12 : 0), ErrorKind::GroupCertificateFailed,
                    "Paley matrix is not Hadamard");
        }
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i < 12; ++i) {
        std::vector<int> plus, minus;
        for (int j = 0; j < 12; ++j) (H[i][j] > 0 ? plus : minus).push_back(j);
        blocks.push_back(std::move(plus));
        blocks.push_back(std::move(minus));
    }
    Design D(12, std::move(blocks));
    auto l3 = t_design_lambda(D, 3);
    require(l3 && *l3 == 2, ErrorKind::GroupCertificateFailed,
            "Paley design is not a 3-(12,6,2) design");

    std::optional<PermGroup> G;
    std::string prov = "hadamard_3_(12,6,2)";
    if (!data_dir.empty()) {
        G = load_certified_group(data_dir + "/m11_on12.grp", 12, 7920, 3);
        try {
            G->induced_action(D.blocks());
        } catch (const Error&) {
            fail(ErrorKind::GeneratorFileInvalid, "M11 generators do not preserve the design");
        }
    } else {
        prov += " [design-only]";
    }
    return finish(std::move(D), std::move(G), prov, make_params(12, 22, 11, 6, 5));
}

namespace {

struct Pg24 {
    Field F = Field::make(2, 2);
    ProjectiveSpaceCtx ctx{3, F};

    std::vector<int> hyperoval_seed() const {
        std::vector<int> seed;
        for (Elem t = 0; t < 4; ++t) {
            Vec v{1, t, F.mul(t, t)};
            seed.push_back(ctx.point_index(v));
        }
        seed.push_back(ctx.point_index(Vec{0, 1, 0}));
        seed.push_back(ctx.point_index(Vec{0, 0, 1}));
        std::sort(seed.begin(), seed.end());
        return seed;
    }
};

} // namespace

GeometricDesign hyperoval_design(int variant_o) {
    require(variant_o == 1 || variant_o == 2, ErrorKind::BadDimension, "variant must be 1 or 2");
    Pg24 g;
    std::vector<Perm> gens;
    for (const auto& M : sl_generators(3, g.F)) gens.push_back(g.ctx.matrix_perm(M));
    PermGroup psl(21, gens);
    require(psl.order() == 20160, ErrorKind::GroupCertificateFailed,
            "PSL_3(4) order certificate failed");

    auto blocks = psl.set_orbit(g.hyperoval_seed());
    require(blocks.size() == 56, ErrorKind::OrbitLengthUnexpected,
            "hyperoval orbit has length " + std::to_string(blocks.size()) + ", expected 56");

    PermGroup G = psl;
    std::string prov = "hyperoval_2_(21,56,16,6,4)";
    if (variant_o == 2) {
        gens.push_back(g.ctx.frobenius_perm());
        G = PermGroup(21, gens);
        require(G.order() == 40320, ErrorKind::GroupCertificateFailed,
                "PSigmaL_3(4) order certificate failed");
        prov += " [O=2]";
    }
    return finish(Design(21, std::move(blocks)), G, prov, make_params(21, 56, 16, 6, 4));
}

GeometricDesign witt_22(const std::string& data_dir, int variant_o) {
    require(variant_o == 1 || variant_o == 2, ErrorKind::BadDimension, "variant must be 1 or 2");
    Pg24 g;
    const int inf = 21;
    std::vector<std::vector<int>> blocks;
    for (const auto& w : g.ctx.pts) {
        std::vector<int> blk{inf};
        for (size_t i = 0; i < g.ctx.pts.size(); ++i)
            if (dot(g.F, g.ctx.pts[i], w) == 0) blk.push_back(int(i));
        blocks.push_back(std::move(blk));
    }
    std::vector<Perm> psl_gens;
    for (const auto& M : sl_generators(3, g.F)) psl_gens.push_back(g.ctx.matrix_perm(M));
    PermGroup psl(21, psl_gens);
    auto ovals = psl.set_orbit(g.hyperoval_seed());
    require(ovals.size() == 56, ErrorKind::OrbitLengthUnexpected, "hyperoval orbit != 56");
    for (auto& o : ovals) blocks.push_back(std::move(o));

    Design D(22, std::move(blocks));
    auto l3 = t_design_lambda(D, 3);
    require(l3 && *l3 == 1, ErrorKind::GroupCertificateFailed,
            "constructed design is not a 3-(22,6,1) design");

    std::optional<PermGroup> G;
    std::string prov = "witt_3_(22,6,1)";
    if (!data_dir.empty()) {
        PermGroup m22 = load_certified_group(data_dir + "/m22_on22.grp", 22, 443520, 3);
        if (variant_o == 2) {
            std::vector<Perm> gens = m22.generators();
            Perm frob21 = g.ctx.frobenius_perm();
            std::vector<int> img(22);
            for (int i = 0; i < 21; ++i) img[i] = frob21(i);
            img[inf] = inf;
            gens.push_back(Perm(std::move(img)));
            PermGroup m22_2(22, gens);
            require(m22_2.order() == 887040, ErrorKind::GeneratorFileInvalid,
                    "M22.2 order certificate failed");
            G = m22_2;
            prov += " [O=2]";
        } else {
            G = m22;
        }
        try {
            G->induced_action(D.blocks());
        } catch (const Error&) {
            fail(ErrorKind::GeneratorFileInvalid, "M22 generators do not preserve the design");
        }
    } else {
        prov += " [design-only]";
    }
    return finish(std::move(D), std::move(G), prov, make_params(22, 77, 21, 6, 5));
}

GeometricDesign agammal1_orbit_design() {
    Field F = Field::make(2, 4);
    PermGroup G = agammal1(16);
    // beta = {0,1,w^5,w^10}, the subfield F_4 = fixed points of x -> x^4
    std::vector<int> beta;
    for (Elem x = 0; x < 16; ++x)
        if (F.pow(x, 4) == x) beta.push_back(int(x));
    require(beta.size() == 4, ErrorKind::GroupCertificateFailed, "subfield F_4 not found");
    {
        std::set<int> expect{0, 1, int(F.pow(F.omega(), 5)), int(F.pow(F.omega(), 10))};
        require(std::set<int>(beta.begin(), beta.end()) == expect,
                ErrorKind::GroupCertificateFailed, "beta != {0,1,w^5,w^10}");
    }
    auto blocks = G.set_orbit(beta);
    require(blocks.size() == 20, ErrorKind::OrbitLengthUnexpected,
            "orbit of beta has length " + std::to_string(blocks.size()) + ", expected 20");
    return finish(Design(16, std::move(blocks)), G, "AGammaL1(16)-orbit of {0,1,w^5,w^10}",
                  make_params(16, 20, 5, 4, 1));
}

PermGroup frobenius_group_7_3() {
    std::vector<int> add(7), mul(7);
    for (int x = 0; x < 7; ++x) {
        add[x] = (x + 1) % 7;
        mul[x] = (2 * x) % 7;
    }
    PermGroup G(7, {Perm(add), Perm(mul)});
    require(G.order() == 21, ErrorKind::GroupCertificateFailed, "7:3 order certificate failed");
    return G;
}

PermGroup psl2_mobius(uint32_t p) {
    require(is_prime(p) && p % 2 == 1, ErrorKind::NotPrime, "need an odd prime");
    int inf = int(p);
    auto modinv = [&](int x) {
        for (int y = 1; y < int(p); ++y)
            if (x * y % int(p) == 1) return y;
        fail(ErrorKind::NotPrime, "no inverse");
    };
    std::vector<int> t(p + 1), s(p + 1);
    for (int x = 0; x < int(p); ++x) t[x] = (x + 1) % int(p);
    t[inf] = inf;
    s[0] = inf;
    s[inf] = 0;
    for (int x = 1; x < int(p); ++x) s[x] = (int(p) - modinv(x)) % int(p);
    PermGroup G(int(p) + 1, {Perm(t), Perm(s)});
    BigInt expect = BigInt(p) * (BigInt(p) * p - 1) / 2;
    require(G.order() == expect, ErrorKind::GroupCertificateFailed,
            "PSL_2(p) order certificate failed");
    return G;
}

PermGroup agammal1(uint64_t q) {
    auto [p, f] = split_prime_power(q);
    Field F = Field::make(p, f);
    std::vector<int> add(q), mul(q), frob(q);
    for (Elem x = 0; x < q; ++x) {
        add[x] = int(F.add(x, 1));
        mul[x] = int(F.mul(F.omega(), x));
        frob[x] = int(F.pow(x, p));
    }
    std::vector<Perm> gens{Perm(add), Perm(mul)};
    if (f > 1) gens.push_back(Perm(frob));
    PermGroup G(int(q), gens);
    require(G.order() == BigInt(q) * (q - 1) * f, ErrorKind::GroupCertificateFailed,
            "AGammaL_1 order certificate failed");
    return G;
}

PermGroup with_f2_translations(const PermGroup& linear, int d) {
    require(linear.degree() == (1 << d), ErrorKind::DegreeMismatch,
            "linear part must act on 2^d vector codes");
    std::vector<Perm> gens = linear.generators();
    for (int i = 0; i < d; ++i) {
        std::vector<int> img(1 << d);
        for (int x = 0; x < (1 << d); ++x) img[x] = x ^ (1 << i);
        gens.push_back(Perm(std::move(img)));
    }
    return PermGroup(1 << d, gens);
}

PermGroup load_certified_group(const std::string& path, int degree, const BigInt& order,
                               int transitivity_degree) {
    PermGroup G = [&] {
        try {
            return read_group_file(path);
        } catch (const Error& e) {
            fail(ErrorKind::GeneratorFileInvalid, std::string(e.what()) + " [" + path + "]");
        }
    }();
    require(G.degree() == degree, ErrorKind::GeneratorFileInvalid,
            path + ": degree " + std::to_string(G.degree()) + ", expected " +
                std::to_string(degree));
    require(G.order() == order, ErrorKind::GeneratorFileInvalid,
            path + ": order certificate failed");
    require(G.is_k_transitive(transitivity_degree), ErrorKind::GeneratorFileInvalid,
            path + ": transitivity certificate failed");
    return G;
}

} // namespace geodesic
