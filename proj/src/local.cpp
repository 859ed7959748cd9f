#include "geodesic/local.hpp"

#include <algorithm>
#include <sstream>

namespace geodesic {

const char* local_level_name(LocalLevel l) {
    switch (l) {
        case LocalLevel::intransitive: return "intransitive";
        case LocalLevel::transitive: return "transitive";
        case LocalLevel::primitive: return "primitive";
        case LocalLevel::two_homogeneous: return "two_homogeneous";
        case LocalLevel::two_transitive: return "two_transitive";
    }
    return "?";
}

LocalLevel level_of(const TransitivityProfile& p) {
    if (p.two_transitive) return LocalLevel::two_transitive;
    if (p.two_homogeneous) return LocalLevel::two_homogeneous;
    if (p.primitive) return LocalLevel::primitive;
    if (p.transitive) return LocalLevel::transitive;
    return LocalLevel::intransitive;
}

std::vector<int> blocks_through(const Design& D, int alpha) {
    return D.blocks_through(alpha);
}

namespace {

// Permutation of the design's points and blocks on a combined domain
// {points} + {v + block index}; stabilizers of points/blocks fall out of
// stabilizer chains with forced base prefixes.
struct ExtendedAction {
    int v, b;
    PermGroup ext;

    ExtendedAction(const PermGroup& G, const Design& D, const ActionImage& induced)
        : v(D.v()), b(D.b()), ext(make(G, induced, D)) {}

    static PermGroup make(const PermGroup& G, const ActionImage& induced, const Design& D) {
        int v = D.v(), b = D.b();
        std::vector<Perm> gens;
        for (size_t i = 0; i < G.generators().size(); ++i) {
            std::vector<int> img(v + b);
            for (int x = 0; x < v; ++x) img[x] = G.generators()[i](x);
            const Perm& bp = induced.image_gens[i];
            for (int j = 0; j < b; ++j) img[v + j] = v + bp(j);
            gens.push_back(Perm(std::move(img)));
        }
        return PermGroup(v + b, gens);
    }

    static Perm point_part(const Perm& g, int v) {
        std::vector<int> img(v);
        for (int x = 0; x < v; ++x) img[x] = g(x);
        return Perm(std::move(img));
    }
};

// Restrict degree-n permutations to an invariant subset, renumbered by
// position in `domain`.
Perm restrict_to(const Perm& g, const std::vector<int>& domain,
                 const std::vector<int>& position) {
    std::vector<int> img(domain.size());
    for (size_t i = 0; i < domain.size(); ++i) {
        int y = g(domain[i]);
        img[i] = position[y];
    }
    return Perm(std::move(img));
}

} // namespace

LocalReport analyze(const PermGroup& G, const Design& D, const AnalyzeOptions& opts) {
    require(G.degree() == D.v(), ErrorKind::DegreeMismatch, "group degree != point count");
    require(D.b() >= 1, ErrorKind::EmptyDesign, "design has no blocks");
    ActionImage induced = [&] {
        try {
            return G.induced_action(D.blocks());
        } catch (const Error&) {
            fail(ErrorKind::GroupDoesNotActOnDesign, "group does not preserve the block family");
        }
    }();

    ExtendedAction ext(G, D, induced);
    const int v = D.v(), b = D.b();
    BigInt order_g = G.order();

    // representative blocks: one per orbit of G on blocks (or all in audit mode)
    PermGroup block_image = induced.image();
    std::vector<int> block_reps;
    for (const auto& orb : block_image.orbits()) block_reps.push_back(orb.front());
    if (opts.exhaustive) {
        block_reps.resize(b);
        for (int j = 0; j < b; ++j) block_reps[j] = j;
    }

    LocalReport rep;
    rep.order_g = order_g;
    rep.global_point_level = level_of(G.transitivity_profile());
    rep.point_local_level = LocalLevel::two_transitive;
    rep.block_local_level = LocalLevel::two_transitive;

    size_t flag_orbits = 0;
    BigInt flag_orbit_size_sum = 0;
    bool first_flag = true;

    for (int beta : block_reps) {
        auto chain_beta = ext.ext.chain_with_prefix({v + beta});
        BigInt order_g_beta = chain_beta->order_from(1);
        std::vector<Perm> gbeta_ext = chain_beta->level_gens(1);

        // block-local action: G_beta on the k points of beta
        const std::vector<int>& beta_pts = D.block(beta);
        std::vector<int> position(v + b, -1);
        for (size_t i = 0; i < beta_pts.size(); ++i) position[beta_pts[i]] = int(i);
        std::vector<Perm> beta_local_gens;
        for (const auto& g : gbeta_ext) beta_local_gens.push_back(restrict_to(g, beta_pts, position));
        PermGroup beta_local(int(beta_pts.size()), beta_local_gens);
        LocalLevel beta_level = level_of(beta_local.transitivity_profile());
        BigInt beta_kernel = order_g_beta / beta_local.order();

        // orbits of G_beta on the points of beta pick the flag representatives
        std::vector<int> alpha_reps;
        {
            std::vector<std::vector<int>> pt_orbits = beta_local.orbits();
            for (const auto& orb : pt_orbits) alpha_reps.push_back(beta_pts[orb.front()]);
            if (!opts.exhaustive) flag_orbits += pt_orbits.size();
        }
        if (opts.exhaustive) alpha_reps = beta_pts;

        for (int alpha : alpha_reps) {
            auto chain_ab = ext.ext.chain_with_prefix({alpha, v + beta});
            BigInt order_g_alpha = chain_ab->order_from(1);
            BigInt order_g_ab = chain_ab->order_from(2);
            if (!opts.exhaustive) flag_orbit_size_sum += order_g / order_g_ab;

            // point-local action: G_alpha on the r blocks through alpha
            std::vector<int> dalpha = D.blocks_through(alpha);
            std::vector<int> bdomain(dalpha.size());
            for (size_t i = 0; i < dalpha.size(); ++i) bdomain[i] = v + dalpha[i];
            std::vector<int> bposition(v + b, -1);
            for (size_t i = 0; i < bdomain.size(); ++i) bposition[bdomain[i]] = int(i);
            std::vector<Perm> alpha_local_gens;
            for (const auto& g : chain_ab->level_gens(1))
                alpha_local_gens.push_back(restrict_to(g, bdomain, bposition));
            PermGroup alpha_local(int(bdomain.size()), alpha_local_gens);
            LocalLevel alpha_level = level_of(alpha_local.transitivity_profile());
            BigInt alpha_kernel = order_g_alpha / alpha_local.order();

            rep.point_local_level = std::min(rep.point_local_level, alpha_level);
            rep.block_local_level = std::min(rep.block_local_level, beta_level);
            if (first_flag) {
                rep.flag_point = alpha;
                rep.flag_block = beta;
                rep.order_g_alpha = order_g_alpha;
                rep.order_g_beta = order_g_beta;
                rep.order_g_alpha_beta = order_g_ab;
                rep.point_local_kernel = alpha_kernel;
                rep.block_local_kernel = beta_kernel;
                first_flag = false;
            }
        }
    }

    if (opts.exhaustive) {
        // flag-orbit counting always runs on representatives
        AnalyzeOptions plain;
        flag_orbits = analyze(G, D, plain).flag_orbits;
    }
    rep.flag_orbits = flag_orbits;
    rep.flag_transitive = (flag_orbits == 1);

    DesignParams P = validate_2_design(D);
    if (!opts.exhaustive) {
        require(flag_orbit_size_sum == BigInt(P.v) * P.r, ErrorKind::InvariantViolated,
                "flag orbit sizes do not sum to v*r");
    }
    if (rep.flag_transitive) {
        require(rep.order_g_alpha == BigInt(P.r) * rep.order_g_alpha_beta,
                ErrorKind::InvariantViolated, "|G_a| != r*|G_ab| on a flag-transitive design");
        require(rep.order_g_beta == BigInt(P.k) * rep.order_g_alpha_beta,
                ErrorKind::InvariantViolated, "|G_b| != k*|G_ab| on a flag-transitive design");
    }
    return rep;
}

LocalGlobalRecord certify_local_implications(const LocalReport& r) {
    LocalGlobalRecord rec;
    bool locally_transitive = r.point_local_level >= LocalLevel::transitive &&
                              r.block_local_level >= LocalLevel::transitive;
    rec.premise_two_homogeneous =
        locally_transitive && r.block_local_level >= LocalLevel::two_homogeneous;
    rec.premise_two_transitive =
        locally_transitive && r.block_local_level >= LocalLevel::two_transitive;
    rec.conclusion_two_homogeneous = r.global_point_level >= LocalLevel::two_homogeneous;
    rec.conclusion_two_transitive = r.global_point_level >= LocalLevel::two_transitive;
    rec.flag_transitivity_implication = !locally_transitive || r.flag_transitive;

    bool imp1 = !rec.premise_two_homogeneous || rec.conclusion_two_homogeneous;
    bool imp2 = !rec.premise_two_transitive || rec.conclusion_two_transitive;
    rec.holds = imp1 && imp2 && rec.flag_transitivity_implication;
    require(rec.holds, ErrorKind::InvariantViolated,
            "local-to-global implication failed; engine defect");
    return rec;
}

LocalGlobalRecord certify_local_implications(const PermGroup& G, const Design& D) {
    return certify_local_implications(analyze(G, D));
}

std::string LocalReport::to_json() const {
    std::ostringstream os;
    os << "{\"flag_transitive\": " << (flag_transitive ? "true" : "false")
       << ", \"point_level\": \"" << local_level_name(point_local_level) << "\""
       << ", \"block_level\": \"" << local_level_name(block_local_level) << "\""
       << ", \"global_level\": \"" << local_level_name(global_point_level) << "\""
       << ", \"orders\": {\"galpha\": " << order_g_alpha << ", \"gbeta\": " << order_g_beta
       << ", \"gab\": " << order_g_alpha_beta << "}"
       << ", \"flag\": {\"point\": " << flag_point << ", \"block\": " << flag_block << "}}";
    return os.str();
}

} // namespace geodesic
