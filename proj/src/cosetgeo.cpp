#include "geodesic/cosetgeo.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace geodesic {

std::string CosetCertificates::describe() const {
    std::ostringstream os;
    os << "G!=HK:" << g_not_hk << " faithful:" << faithful_on_cosets
       << " G-2homog:" << g_two_homog_on_points << " H-2homog:" << h_two_homog
       << " K-2homog:" << k_two_homog << " k>=3:" << k_at_least_3;
    return os.str();
}

namespace {

bool two_homogeneous_or_tiny(const PermGroup& G) {
    // degree-1 coset spaces never appear here (k >= 3 is certified); degree 2
    // means transitive == 2-homogeneous
    return G.degree() >= 2 && G.transitivity_profile().two_homogeneous;
}

} // namespace

CosetDesignResult coset_design(const PermGroup& G, const PermGroup& H, const PermGroup& K) {
    for (const auto& h : H.generators())
        require(G.is_member(h), ErrorKind::NotASubgroup, "H generator not in G");
    for (const auto& kgen : K.generators())
        require(G.is_member(kgen), ErrorKind::NotASubgroup, "K generator not in G");

    CosetTriple triple;
    triple.order_g = G.order();
    triple.order_h = H.order();
    triple.order_k = K.order();

    ActionImage points = G.coset_action(H);
    int v = points.image_degree;
    triple.v = v;
    triple.certs.faithful_on_cosets = points.faithful;

    // K acting on [G:H]; H cap K is the stabilizer in K of the coset H itself
    std::vector<Perm> k_on_points;
    for (const auto& kgen : K.generators()) k_on_points.push_back(points.act(kgen));
    PermGroup K_pts(v, k_on_points);
    PermGroup HK_pts = K_pts.point_stabilizer(0);
    triple.order_h_cap_k = HK_pts.order();

    triple.r = (long long)(triple.order_h / triple.order_h_cap_k);
    triple.k = (long long)(triple.order_k / triple.order_h_cap_k);
    triple.b = (long long)(triple.order_g / triple.order_k);

    BigInt hk_size = triple.order_h * triple.order_k / triple.order_h_cap_k;
    triple.certs.g_not_hk = hk_size < triple.order_g;
    triple.certs.k_at_least_3 = triple.k >= 3;

    PermGroup G_pts(v, points.image_gens);
    triple.certs.g_two_homog_on_points = two_homogeneous_or_tiny(G_pts);

    std::vector<Perm> h_on_points;
    for (const auto& hgen : H.generators()) h_on_points.push_back(points.act(hgen));
    PermGroup H_pts(v, h_on_points);
    {
        ActionImage h_cosets = H_pts.coset_action(HK_pts);
        triple.certs.h_two_homog = two_homogeneous_or_tiny(h_cosets.image());
        ActionImage k_cosets = K_pts.coset_action(HK_pts);
        triple.certs.k_two_homog = two_homogeneous_or_tiny(k_cosets.image());
    }

    require(triple.certs.g_not_hk, ErrorKind::PreconditionFailed, "G == HK");
    require(triple.certs.k_at_least_3, ErrorKind::PreconditionFailed, "block size below 3");
    require(triple.certs.faithful_on_cosets, ErrorKind::PreconditionFailed,
            "G not faithful on [G:H]");
    require(triple.certs.g_two_homog_on_points, ErrorKind::PreconditionFailed,
            "G not 2-homogeneous on [G:H]");
    require(triple.certs.h_two_homog, ErrorKind::PreconditionFailed,
            "H not 2-homogeneous on [H:H^K]");
    require(triple.certs.k_two_homog, ErrorKind::PreconditionFailed,
            "K not 2-homogeneous on [K:H^K]");

    // base block: the K-orbit of the point "H"; blocks: its G-orbit
    std::vector<int> base_block = K_pts.orbit(0);
    require((long long)base_block.size() == triple.k, ErrorKind::InvariantViolated,
            "base block size != |K:H^K|");
    auto blocks = G_pts.set_orbit(base_block);
    require((long long)blocks.size() == triple.b, ErrorKind::NotSimple,
            "block orbit shorter than |G:K|; geometry would not be simple");

    Design D(v, std::move(blocks));
    DesignParams P = [&] {
        try {
            return validate_2_design(D);
        } catch (const Error& e) {
            // certified preconditions guarantee a 2-design; reaching this is a bug
            fail(ErrorKind::NotA2Design, std::string("coset geometry failed validation: ") + e.what());
        }
    }();
    require(P.r == triple.r && P.k == triple.k && P.b == triple.b && P.v == triple.v,
            ErrorKind::NotA2Design, "coset design parameters do not match the index formulas");

    GeometricDesign gd{std::move(D), G_pts, "coset geometry", P, P};
    return CosetDesignResult{std::move(gd), triple};
}

ReconstructResult reconstruct(const PermGroup& G, const Design& D) {
    LocalReport rep = analyze(G, D);
    require(rep.flag_transitive, ErrorKind::NotFlagTransitive,
            "reconstruction needs a flag-transitive design");
    int alpha = rep.flag_point;
    int beta = rep.flag_block;
    PermGroup H = G.point_stabilizer(alpha);
    PermGroup K = G.setwise_stabilizer(D.block(beta));
    CosetDesignResult res = coset_design(G, H, K);

    // the natural bijection: coset H g_i -> alpha^(g_i); certify it block-wise
    ActionImage points = G.coset_action(H);
    int v = points.image_degree;
    require(v == D.v(), ErrorKind::IsomorphismFailed, "coset space size != point count");
    std::vector<int> point_map(v, -1);
    {
        // recover coset representatives by walking the coset action's orbit of 0
        // through G's generators (coset i -> alpha^rep maps 0 -> alpha)
        std::vector<Perm> gens = G.generators();
        std::vector<Perm> image_gens = points.image_gens;
        std::vector<int> seen(v, 0);
        std::vector<int> queue{0};
        std::vector<Perm> rep_of(v, Perm(G.degree()));
        seen[0] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int c = queue[head];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int c2 = image_gens[gi](c);
                if (!seen[c2]) {
                    seen[c2] = 1;
                    rep_of[c2] = rep_of[c] * gens[gi];
                    queue.push_back(c2);
                }
            }
        }
        for (int c = 0; c < v; ++c) point_map[c] = rep_of[c](alpha);
    }
    {
        std::vector<char> hit(v, 0);
        for (int x : point_map) {
            require(x >= 0 && x < v && !hit[x], ErrorKind::IsomorphismFailed,
                    "coset-to-point map is not a bijection");
            hit[x] = 1;
        }
        std::set<std::vector<int>> d_blocks(D.blocks().begin(), D.blocks().end());
        for (const auto& blk : res.geometric.design.blocks()) {
            std::vector<int> t(blk.size());
            for (size_t i = 0; i < blk.size(); ++i) t[i] = point_map[blk[i]];
            std::sort(t.begin(), t.end());
            require(d_blocks.count(t) > 0, ErrorKind::IsomorphismFailed,
                    "reconstructed block does not map onto an original block");
        }
        require((long long)d_blocks.size() == (long long)res.geometric.design.b(),
                ErrorKind::IsomorphismFailed, "block counts differ");
    }
    return ReconstructResult{std::move(res), std::move(point_map)};
}

namespace {

// rank/unrank of k-combinations of {0..v-1} in lexicographic order
uint64_t comb_rank(const std::vector<int>& set, int v) {
    uint64_t rank = 0;
    int k = int(set.size());
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int x = prev + 1; x < set[i]; ++x) rank += (uint64_t)binomial(v - x - 1, k - i - 1);
        prev = set[i];
    }
    return rank;
}

std::vector<int> comb_unrank(uint64_t rank, int v, int k) {
    std::vector<int> set(k);
    int x = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            uint64_t c = (uint64_t)binomial(v - x - 1, k - i - 1);
            if (rank < c) break;
            rank -= c;
            ++x;
        }
        set[i] = x++;
    }
    return set;
}

} // namespace

std::vector<SearchHit> orbit_design_search(const PermGroup& G, int k, const SearchOptions& opts) {
    int v = G.degree();
    require(k >= 2 && k < v, ErrorKind::BadDimension, "need 2 <= k < v");
    require(G.transitivity_profile().transitive, ErrorKind::NotTransitive,
            "orbit search needs a transitive group");
    long long total_ll = binomial(v, k);
    require(total_ll > 0 && (uint64_t)total_ll <= opts.subset_budget, ErrorKind::BudgetExceeded,
            "C(v,k) exceeds the subset budget");
    uint64_t total = (uint64_t)total_ll;

    std::vector<char> visited(total, 0);
    std::vector<SearchHit> hits;
    for (uint64_t seed_rank = 0; seed_rank < total; ++seed_rank) {
        if (visited[seed_rank]) continue;
        std::vector<int> seed = comb_unrank(seed_rank, v, k);
        // BFS over the subset orbit, marking ranks
        std::vector<std::vector<int>> orbit{seed};
        visited[seed_rank] = 1;
        {
            std::set<std::vector<int>> seen{seed};
            for (size_t head = 0; head < orbit.size(); ++head)
                for (const auto& g : G.generators()) {
                    std::vector<int> img(orbit[head].size());
                    for (size_t t = 0; t < img.size(); ++t) img[t] = g(orbit[head][t]);
                    std::sort(img.begin(), img.end());
                    if (seen.insert(img).second) {
                        visited[comb_rank(img, v)] = 1;
                        orbit.push_back(std::move(img));
                    }
                }
        }
        // non-trivial 2-design?
        if ((long long)orbit.size() == total_ll) continue; // complete design
        {
            std::vector<long long> pair_count(size_t(v) * v, 0);
            for (const auto& blk : orbit)
                for (size_t s = 0; s < blk.size(); ++s)
                    for (size_t t = s + 1; t < blk.size(); ++t)
                        ++pair_count[size_t(blk[s]) * v + blk[t]];
            long long lambda = pair_count[1];
            bool uniform = lambda > 0;
            for (int a = 0; a < v && uniform; ++a)
                for (int c = a + 1; c < v && uniform; ++c)
                    if (pair_count[size_t(a) * v + c] != lambda) uniform = false;
            if (!uniform) continue;
        }
        if (opts.target_b && (long long)orbit.size() != *opts.target_b) continue;

        // steps 2-5: block stabilizer K, point stabilizer H, index and
        // 2-homogeneity certificates
        PermGroup K = G.setwise_stabilizer(seed);
        PermGroup H = G.point_stabilizer(seed.front());
        std::vector<Perm> hk_gens;
        {
            PermGroup K_fix = K.point_stabilizer(seed.front());
            hk_gens = K_fix.generators();
        }
        PermGroup HK(v, hk_gens);
        long long r = (long long)(BigInt(orbit.size()) * k / v);
        bool step4 = (H.order() / HK.order()) == BigInt(r);
        ActionImage h_cosets = H.coset_action(HK);
        ActionImage k_cosets = K.coset_action(HK);
        bool step5h = two_homogeneous_or_tiny(h_cosets.image());
        bool step5k = two_homogeneous_or_tiny(k_cosets.image());
        if (opts.require_local_level && !(step4 && step5h && step5k)) continue;

        Design D(v, std::vector<std::vector<int>>(orbit.begin(), orbit.end()));
        DesignParams P = validate_2_design(D);
        std::optional<LocalLevel> level;
        if (opts.require_local_level || size_t(v) + orbit.size() <= 4096)
            level = analyze(G, D).overall();
        if (opts.require_local_level && *level < *opts.require_local_level) continue;

        GeometricDesign gd{std::move(D), G, "orbit design (k=" + std::to_string(k) + ")", P, P};
        SearchHit hit{std::move(gd), K.order(), step4, step5h, step5k, level};
        hits.push_back(std::move(hit));
    }
    return hits;
}

std::vector<std::array<long long, 5>> parameter_screen(long long v, long long r_max) {
    require(v >= 4, ErrorKind::BadDimension, "need v >= 4");
    std::vector<std::array<long long, 5>> out;
    for (long long r = 3; r <= r_max; ++r) {
        for (long long k = 3; k <= r; ++k) {
            if (k == v - 2 || k == v - 1) continue; // non-trivial designs exclude these
            long long num = r * (k - 1);
            if (num % (v - 1)) continue;
            long long lambda = num / (v - 1);
            if (lambda < 1 || lambda >= r) continue;
            if (v * r % k) continue;
            long long b = v * r / k;
            if (!(2 * k <= v || k == r)) continue; // non-symmetric designs need k <= v/2
            if (k == r && b != v) continue;
            long long cnum = (k - 1) * (lambda - 1);
            if (cnum % (r - 1)) continue;
            out.push_back({v, b, r, k, lambda});
        }
    }
    return out;
}

} // namespace geodesic
