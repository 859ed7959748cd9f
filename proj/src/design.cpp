#include "geodesic/design.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace geodesic {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    const unsigned __int128 cap = (unsigned __int128)LLONG_MAX;
    for (long long i = 1; i <= k; ++i) {
        r = r * (unsigned __int128)(n - k + i) / (unsigned __int128)i;
        if (r > cap) return LLONG_MAX; // saturate; callers only compare against small bounds
    }
    return (long long)r;
}

std::string DesignParams::to_string() const {
    std::ostringstream os;
    os << "2-(" << v << "," << k << "," << lambda << ") with b=" << b << " r=" << r
       << (symmetric ? " symmetric" : "");
    return os.str();
}

Design::Design(int v, std::vector<std::vector<int>> blocks) : v_(v), blocks_(std::move(blocks)) {
    require(v_ >= 1, ErrorKind::BadDimension, "design needs at least one point");
    require(!blocks_.empty(), ErrorKind::EmptyDesign, "design has no blocks");
    words_ = size_t(v_ + 63) / 64;
    std::set<std::vector<int>> seen;
    k_ = -1;
    for (auto& blk : blocks_) {
        std::sort(blk.begin(), blk.end());
        require(std::adjacent_find(blk.begin(), blk.end()) == blk.end(),
                ErrorKind::BlockOutOfRange, "block repeats a point");
        for (int x : blk)
            require(x >= 0 && x < v_, ErrorKind::BlockOutOfRange, "block point out of range");
        if (k_ < 0) k_ = int(blk.size());
        require(int(blk.size()) == k_, ErrorKind::NotADesign, "blocks have non-uniform size");
        require(seen.insert(blk).second, ErrorKind::DuplicateBlock, "duplicate block");
        std::vector<uint64_t> m(words_, 0);
        for (int x : blk) m[size_t(x) / 64] |= uint64_t(1) << (x % 64);
        bits_.push_back(std::move(m));
    }
    require(k_ >= 1 && k_ < v_, ErrorKind::NotADesign, "block size must satisfy 1 <= k < v");
}

bool Design::incident(int point, int block_index) const {
    return (bits_[block_index][size_t(point) / 64] >> (point % 64)) & 1;
}

int Design::intersection_size(int bi, int bj) const {
    int c = 0;
    for (size_t w = 0; w < words_; ++w) c += std::popcount(bits_[bi][w] & bits_[bj][w]);
    return c;
}

int Design::block_intersection_with(int bi, const std::vector<uint64_t>& mask) const {
    int c = 0;
    for (size_t w = 0; w < words_; ++w) c += std::popcount(bits_[bi][w] & mask[w]);
    return c;
}

std::vector<uint64_t> Design::point_set_mask(const std::vector<int>& pts) const {
    std::vector<uint64_t> m(words_, 0);
    for (int x : pts) {
        require(x >= 0 && x < v_, ErrorKind::PointOutOfRange, "point out of range");
        m[size_t(x) / 64] |= uint64_t(1) << (x % 64);
    }
    return m;
}

std::vector<int> Design::blocks_through(int point) const {
    require(point >= 0 && point < v_, ErrorKind::PointOutOfRange, "point out of range");
    std::vector<int> out;
    for (int i = 0; i < b(); ++i)
        if (incident(point, i)) out.push_back(i);
    return out;
}

long long Design::blocks_containing(const std::vector<int>& pts) const {
    auto mask = point_set_mask(pts);
    int want = 0;
    for (auto w : mask) want += std::popcount(w);
    long long n = 0;
    for (int i = 0; i < b(); ++i)
        if (block_intersection_with(i, mask) == want) ++n;
    return n;
}

bool Design::is_complete() const {
    return (long long)blocks_.size() == binomial(v_, k_);
}

bool Design::same_blocks(const Design& other) const {
    if (v_ != other.v_ || blocks_.size() != other.blocks_.size()) return false;
    std::set<std::vector<int>> a(blocks_.begin(), blocks_.end());
    std::set<std::vector<int>> b2(other.blocks_.begin(), other.blocks_.end());
    return a == b2;
}

DesignParams validate_2_design(const Design& D) {
    int v = D.v(), b = D.b(), k = D.k();
    std::vector<long long> rep(v, 0);
    std::vector<long long> pair_count(size_t(v) * v, 0);
    for (int i = 0; i < b; ++i) {
        const auto& blk = D.block(i);
        for (size_t s = 0; s < blk.size(); ++s) {
            ++rep[blk[s]];
            for (size_t t = s + 1; t < blk.size(); ++t)
                ++pair_count[size_t(blk[s]) * v + blk[t]];
        }
    }
    long long r = rep[0];
    for (int x = 1; x < v; ++x)
        require(rep[x] == r, ErrorKind::NotUniformReplication,
                "point " + std::to_string(x) + " lies in " + std::to_string(rep[x]) +
                    " blocks, expected " + std::to_string(r));
    long long lambda = pair_count[1]; // pair (0,1)
    for (int a = 0; a < v; ++a)
        for (int c = a + 1; c < v; ++c)
            require(pair_count[size_t(a) * v + c] == lambda, ErrorKind::PairCountVaries,
                    "pair (" + std::to_string(a) + "," + std::to_string(c) + ") lies in " +
                        std::to_string(pair_count[size_t(a) * v + c]) + " blocks, expected " +
                        std::to_string(lambda));
    require(lambda > 0, ErrorKind::NotADesign, "lambda = 0");

    DesignParams P;
    P.v = v;
    P.b = b;
    P.r = r;
    P.k = k;
    P.lambda = lambda;
    P.symmetric = (v == b);
    P.trivial_complete = D.is_complete();
    P.vr_eq_bk = (P.v * P.r == P.b * P.k);
    P.lambda_identity = (P.lambda * (P.v - 1) == P.r * (P.k - 1));
    P.fisher = (P.v <= P.b);
    P.k_le_r = (P.k <= P.r);
    P.lambda_lt_r = (P.lambda < P.r);
    P.lambda_v_lt_rk = (P.lambda * P.v < P.r * P.k);
    // These identities are theorems for a 2-design with k < v; a violation
    // here means the counting above is broken.
    require(P.vr_eq_bk && P.lambda_identity && P.fisher && P.k_le_r && P.lambda_lt_r &&
                P.lambda_v_lt_rk,
            ErrorKind::InvariantViolated, "parameter identity failed on a verified 2-design");
    return P;
}

std::optional<long long> t_design_lambda(const Design& D, int t) {
    require(t >= 2 && t <= D.k(), ErrorKind::DimensionOutOfRange, "t out of range");
    int v = D.v();
    std::vector<int> subset(t);
    std::iota(subset.begin(), subset.end(), 0);
    std::optional<long long> lambda_t;
    while (true) {
        long long n = D.blocks_containing(subset);
        if (!lambda_t)
            lambda_t = n;
        else if (n != *lambda_t)
            return std::nullopt;
        int i = t - 1;
        while (i >= 0 && subset[i] == v - t + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < t; ++j) subset[j] = subset[j - 1] + 1;
    }
    // cross-check the standard parameter descent against the 2-design count
    if (lambda_t && t > 2) {
        DesignParams P = validate_2_design(D);
        long long num = *lambda_t * binomial(D.v() - 2, t - 2);
        long long den = binomial(D.k() - 2, t - 2);
        require(den != 0 && num % den == 0 && num / den == P.lambda, ErrorKind::InvariantViolated,
                "lambda_s descent identity failed");
    }
    return lambda_t;
}

void Rational::reduce() {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

IntersectionProfile intersection_profile(const Design& D) {
    require(D.b() >= 2, ErrorKind::EmptyDesign, "need at least two blocks");
    IntersectionProfile P;
    for (int i = 0; i < D.b(); ++i)
        for (int j = i + 1; j < D.b(); ++j) ++P.multiset[D.intersection_size(i, j)];
    for (auto& [size, count] : P.multiset) P.numbers.push_back(size);
    P.quasi_symmetric = P.numbers.size() == 2;
    DesignParams params = validate_2_design(D);
    P.c_formula = Rational{(params.k - 1) * (params.lambda - 1) + (params.r - 1), params.r - 1};
    P.c_formula.reduce();
    P.c_integral = P.c_formula.integral();
    if (P.c_integral) P.c_value = P.c_formula.num;
    return P;
}

Design complement(const Design& D) {
    require(D.k() < D.v() - 1, ErrorKind::BadDimension, "complement would have empty blocks");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(D.b());
    for (int i = 0; i < D.b(); ++i) {
        std::vector<int> c;
        c.reserve(D.v() - D.k());
        for (int x = 0; x < D.v(); ++x)
            if (!D.incident(x, i)) c.push_back(x);
        blocks.push_back(std::move(c));
    }
    return Design(D.v(), std::move(blocks));
}

Design point_residual(const Design& D, int alpha) {
    require(alpha >= 0 && alpha < D.v(), ErrorKind::PointOutOfRange, "residual point out of range");
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < D.b(); ++i) {
        if (D.incident(alpha, i)) continue;
        std::vector<int> blk;
        for (int x : D.block(i)) blk.push_back(x < alpha ? x : x - 1);
        blocks.push_back(std::move(blk));
    }
    require(!blocks.empty(), ErrorKind::EmptyDesign, "every block passes through the point");
    return Design(D.v() - 1, std::move(blocks));
}

namespace {

struct IsoSearch {
    const Design &A, &B;
    size_t budget;
    size_t nodes = 0;
    std::vector<int> order;   // points of A in mapping order
    std::vector<int> image;   // A-point -> B-point or -1
    std::vector<char> used;   // B-point used
    std::set<std::vector<int>> b_blocks;

    IsoSearch(const Design& a, const Design& b, size_t budget_)
        : A(a), B(b), budget(budget_), image(a.v(), -1), used(b.v(), 0) {
        for (const auto& blk : B.blocks()) b_blocks.insert(blk);
        // connectivity-first ordering: prefer points sharing blocks with the
        // already-ordered set, so triple pruning engages early
        std::vector<char> placed(A.v(), 0);
        order.push_back(0);
        placed[0] = 1;
        while (int(order.size()) < A.v()) {
            int best = -1;
            long long best_score = -1;
            for (int x = 0; x < A.v(); ++x) {
                if (placed[x]) continue;
                long long score = 0;
                for (int bi = 0; bi < A.b(); ++bi) {
                    if (!A.incident(x, bi)) continue;
                    for (int y : order)
                        if (A.incident(y, bi)) ++score;
                }
                if (score > best_score) {
                    best_score = score;
                    best = x;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }

    bool triples_ok(int x, int y, size_t mapped) {
        for (size_t i = 0; i < mapped; ++i)
            for (size_t j = i + 1; j < mapped; ++j) {
                int a1 = order[i], a2 = order[j];
                if (A.blocks_containing({x, a1, a2}) !=
                    B.blocks_containing({y, image[a1], image[a2]}))
                    return false;
            }
        return true;
    }

    bool blocks_map(const std::vector<int>& img) {
        for (const auto& blk : A.blocks()) {
            std::vector<int> t(blk.size());
            for (size_t i = 0; i < blk.size(); ++i) t[i] = img[blk[i]];
            std::sort(t.begin(), t.end());
            if (!b_blocks.count(t)) return false;
        }
        return true;
    }

    bool extend(size_t pos) {
        if (++nodes > budget) fail(ErrorKind::TimeBudgetExceeded, "isomorphism search budget");
        if (pos == order.size()) return blocks_map(image);
        int x = order[pos];
        for (int y = 0; y < B.v(); ++y) {
            if (used[y]) continue;
            if (!triples_ok(x, y, pos)) continue;
            image[x] = y;
            used[y] = 1;
            if (extend(pos + 1)) return true;
            image[x] = -1;
            used[y] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> are_isomorphic(const Design& D1, const Design& D2,
                                               const IsoOptions& opts) {
    if (D1.v() != D2.v() || D1.b() != D2.b() || D1.k() != D2.k()) return std::nullopt;
    DesignParams p1 = validate_2_design(D1), p2 = validate_2_design(D2);
    if (!(p1 == p2)) return std::nullopt;
    {
        auto i1 = intersection_profile(D1), i2 = intersection_profile(D2);
        if (i1.multiset != i2.multiset) return std::nullopt;
    }
    IsoSearch search(D1, D2, opts.node_budget);
    if (search.extend(0)) return search.image;
    return std::nullopt;
}

std::string design_to_string(const Design& D) {
    std::ostringstream os;
    os << D.v() << ' ' << D.b() << '\n';
    for (const auto& blk : D.blocks()) {
        for (size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i];
        os << '\n';
    }
    return os.str();
}

Design design_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int v = -1;
    long long b = -1;
    std::vector<std::vector<int>> blocks;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        std::istringstream ls(line);
        if (v < 0) {
            int vv = 0;
            long long bb = 0;
            if (ls >> vv >> bb) {
                require(vv >= 1 && bb >= 1, ErrorKind::ParseError, "bad design header");
                v = vv;
                b = bb;
            } else {
                std::istringstream probe(line);
                std::string rest;
                require(!(probe >> rest), ErrorKind::ParseError, "bad design header");
            }
            continue;
        }
        std::vector<int> blk;
        int x;
        while (ls >> x) blk.push_back(x);
        if (!blk.empty()) blocks.push_back(std::move(blk));
    }
    require(v >= 1, ErrorKind::ParseError, "missing design header");
    require((long long)blocks.size() == b, ErrorKind::ParseError, "block count mismatch");
    return Design(v, std::move(blocks));
}

Design read_design(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::IoError, "cannot open design file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return design_from_string(ss.str());
}

void write_design(const std::string& path, const Design& D) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::IoError, "cannot write design file: " + path);
    out << design_to_string(D);
}

} // namespace geodesic
