#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "geodesic/catalog.hpp"
#include "geodesic/families.hpp"
#include "geodesic/permgrp.hpp"

using namespace geodesic;

namespace {

Perm cyc(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
    std::vector<std::vector<int>> c;
    for (auto& one : cycles) c.push_back(std::vector<int>(one));
    return Perm::from_cycles(degree, c);
}

Perm random_word(const PermGroup& G, std::mt19937& rng, int max_len) {
    Perm w = Perm::identity(G.degree());
    std::uniform_int_distribution<size_t> pick(0, G.generators().size() - 1);
    std::uniform_int_distribution<int> len(1, max_len);
    int n = len(rng);
    for (int i = 0; i < n; ++i) w = w * G.generators()[pick(rng)];
    return w;
}

PermGroup random_small_group(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(4, 9);
    int n = deg(rng);
    std::vector<Perm> gens;
    for (int g = 0; g < 2; ++g) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        gens.push_back(Perm(std::move(img)));
    }
    return PermGroup(n, std::move(gens));
}

} // namespace

TEST_CASE("permutation basics") {
    Perm a = cyc(5, {{0, 1, 2}});
    Perm b = cyc(5, {{2, 3}});
    CHECK((a * b)(0) == 1);
    CHECK((a * b)(1) == 3);
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.order() == 3);
    CHECK(cyc(6, {{0, 1, 2}, {3, 4}}).order() == 6);
    CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), Error);
}

TEST_CASE("make_group examples") {
    SUBCASE("7:3 has order 21, cross-checked by exhaustive enumeration") {
        PermGroup G = frobenius_group_7_3();
        CHECK(G.order() == 21);
        CHECK(enumerate_elements(G).size() == 21);
    }
    SUBCASE("empty generating set is the trivial group") {
        PermGroup G = PermGroup::trivial(9);
        CHECK(G.order() == 1);
        CHECK(G.is_trivial());
    }
    SUBCASE("PSL_2(7) on the projective line has order q(q^2-1)/2") {
        PermGroup G = psl2_mobius(7);
        CHECK(G.order() == 7 * 48 / 2);
    }
    SUBCASE("degree mismatch is rejected") {
        CHECK_THROWS_AS(PermGroup(5, {Perm::identity(4)}), Error);
    }
}

TEST_CASE("order examples") {
    CHECK(psl2_mobius(11).order() == 660); // q(q^2-1)/gcd(2,q-1)
    // the exceptional degree-11 action has the same order
    CHECK(load_certified_group(default_data_dir() + "/psl2_11_on11.grp", 11, 660, 2).order() ==
          660);
    CHECK(PermGroup::trivial(3).order() == 1);
    // ASL_2(4) = 4^2:SL_2(4) of order 16*60, via the affine family group
    CHECK(affine_design(1, 2, 4).group->order() == 960);
}

TEST_CASE("orbits") {
    PermGroup G = psl2_mobius(7);
    CHECK(G.orbit(0).size() == 8);
    CHECK(G.orbits().size() == 1);
    // stabilizer of the point at infinity is transitive on the other 7
    PermGroup S = G.point_stabilizer(7);
    CHECK(S.order() == 21);
    CHECK(S.orbit(0) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    // <(0 1)> on 3 points
    PermGroup T(3, {cyc(3, {{0, 1}})});
    auto orbs = T.orbits();
    REQUIRE(orbs.size() == 2);
    CHECK(orbs[0] == std::vector<int>{0, 1});
    CHECK(orbs[1] == std::vector<int>{2});
    CHECK_THROWS_AS(G.orbit(99), Error);
}

TEST_CASE("point stabilizers of the ingested groups") {
    std::string dir = default_data_dir();
    PermGroup m11 = load_certified_group(dir + "/m11_on12.grp", 12, 7920, 3);
    CHECK(m11.point_stabilizer(3).order() == 660); // PSL_2(11)
    PermGroup psl34 = *hyperoval_design(1).group;
    CHECK(psl34.point_stabilizer(0).order() == 960); // 2^4:A_5
    CHECK(PermGroup::trivial(4).point_stabilizer(0).order() == 1);
}

TEST_CASE("setwise stabilizers") {
    SUBCASE("whole domain gives back the group") {
        PermGroup G = frobenius_group_7_3();
        PermGroup S = G.setwise_stabilizer({0, 1, 2, 3, 4, 5, 6});
        CHECK(S.same_group(G));
    }
    SUBCASE("2^4:A7 on an AG_3(4,2) block: order 1344") {
        std::string dir = default_data_dir();
        PermGroup lin = read_group_file(dir + "/a7_gl42_on16.grp");
        PermGroup G = with_f2_translations(lin, 4);
        REQUIRE(G.order() == 40320);
        Design D = affine_design(3, 4, 2).design;
        CHECK(G.setwise_stabilizer(D.block(0)).order() == 1344); // 2^3:PSL_3(2)
    }
    SUBCASE("AGammaL_1(16) on {0,1,w^5,w^10}: order 48") {
        Field F = Field::make(2, 4);
        std::vector<int> beta{0, 1, int(F.pow(F.omega(), 5)), int(F.pow(F.omega(), 10))};
        CHECK(agammal1(16).setwise_stabilizer(beta).order() == 48); // 2^2:(3:4)
    }
    SUBCASE("orbit-stabilizer and short-word fuzz oracle") {
        std::mt19937 rng(7);
        PermGroup G = psl2_mobius(7);
        std::vector<int> S{0, 1, 6};
        PermGroup stab = G.setwise_stabilizer(S);
        CHECK(G.order() == BigInt(G.set_orbit(S).size()) * stab.order());
        std::set<int> sset(S.begin(), S.end());
        for (int trial = 0; trial < 300; ++trial) {
            Perm w = random_word(G, rng, 6);
            std::set<int> img;
            for (int x : S) img.insert(w(x));
            if (img == sset) CHECK(stab.is_member(w));
        }
    }
}

TEST_CASE("transitivity profiles") {
    SUBCASE("7:3 on F_7 is 2-homogeneous but not 2-transitive") {
        auto p = frobenius_group_7_3().transitivity_profile();
        CHECK(p.two_homogeneous);
        CHECK_FALSE(p.two_transitive);
        CHECK(p.primitive);
        CHECK(p.unordered_pair_orbits == 1);
        CHECK(p.ordered_pair_orbits == 2);
    }
    SUBCASE("AGammaL_1(16) is 2-transitive") {
        CHECK(agammal1(16).transitivity_profile().two_transitive);
    }
    SUBCASE("S4 satisfies every flag") {
        PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
        auto p = s4.transitivity_profile();
        CHECK(p.transitive);
        CHECK(p.primitive);
        CHECK(p.two_homogeneous);
        CHECK(p.two_transitive);
    }
    SUBCASE("imprimitive example") {
        PermGroup d4(4, {cyc(4, {{0, 1, 2, 3}})});
        auto p = d4.transitivity_profile();
        CHECK(p.transitive);
        CHECK_FALSE(p.primitive);
    }
    SUBCASE("hierarchy implications hold on random profiles") {
        std::mt19937 rng(99);
        for (int i = 0; i < 30; ++i) {
            auto p = random_small_group(rng).transitivity_profile();
            CHECK((!p.two_transitive || p.two_homogeneous));
            CHECK((!p.two_homogeneous || p.primitive));
            CHECK((!p.primitive || p.transitive));
        }
    }
    CHECK_THROWS_AS(PermGroup::trivial(1).transitivity_profile(), Error);
}

TEST_CASE("coset actions") {
    PermGroup G = psl2_mobius(7);
    SUBCASE("H = G is the one-point action") {
        auto act = G.coset_action(G);
        CHECK(act.image_degree == 1);
    }
    SUBCASE("cosets of a point stabilizer recover the natural action") {
        PermGroup H = G.point_stabilizer(7);
        auto act = G.coset_action(H);
        CHECK(act.image_degree == 8);
        CHECK(act.faithful);
        // explicit equivariant bijection: coset i -> 7^rep_i, built by BFS
        std::vector<int> phi(8, -1);
        std::vector<Perm> rep(8, Perm::identity(8));
        std::vector<char> seen(8, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        phi[0] = 7;
        for (size_t head = 0; head < queue.size(); ++head) {
            int c = queue[head];
            for (size_t gi = 0; gi < G.generators().size(); ++gi) {
                int c2 = act.image_gens[gi](c);
                if (!seen[c2]) {
                    seen[c2] = 1;
                    rep[c2] = rep[c] * G.generators()[gi];
                    phi[c2] = rep[c2](7);
                    queue.push_back(c2);
                }
            }
        }
        std::set<int> all(phi.begin(), phi.end());
        CHECK(all.size() == 8);
        // equivariance: phi(i^g) = phi(i)^g for each generator
        for (size_t gi = 0; gi < G.generators().size(); ++gi)
            for (int i = 0; i < 8; ++i)
                CHECK(phi[act.image_gens[gi](i)] == G.generators()[gi](phi[i]));
    }
    SUBCASE("A7 on cosets of a point stabilizer has degree 15") {
        PermGroup a7 = load_certified_group(default_data_dir() + "/a7_on15.grp", 15, 2520, 2);
        PermGroup H = a7.point_stabilizer(0);
        CHECK(H.order() == 168);
        CHECK(a7.coset_action(H).image_degree == 15);
    }
    SUBCASE("non-subgroups are rejected") {
        PermGroup H(8, {cyc(8, {{0, 1}})}); // a transposition is not in PSL_2(7)
        CHECK_THROWS_AS(G.coset_action(H), Error);
    }
    SUBCASE("index cap") {
        CHECK_THROWS_AS(G.coset_action(PermGroup::trivial(8), 10), Error);
    }
}

TEST_CASE("induced actions") {
    SUBCASE("singleton family is equivalent to the natural action") {
        PermGroup G = psl2_mobius(7);
        std::vector<std::vector<int>> family;
        for (int x = 0; x < 8; ++x) family.push_back({x});
        auto act = G.induced_action(family);
        CHECK(act.kernel_order == 1);
        CHECK(act.image_degree == 8);
    }
    SUBCASE("GU_3(3) on the isotropic-point family has kernel of order 4") {
        // vector action on F_9^3 (729 points), induced on the 28 sets of
        // nonzero vectors of the isotropic 1-subspaces
        Gu3Generators gu = gu3_generators(3);
        const Field& F = *gu.field;
        auto conj = [&](Elem x) { return F.pow(x, 3); };
        auto isotropic = [&](const Vec& v) {
            Elem s = F.mul(v[0], conj(v[2]));
            s = F.add(s, F.mul(v[1], conj(v[1])));
            s = F.add(s, F.mul(v[2], conj(v[0])));
            return s == 0;
        };
        std::vector<Perm> gens;
        for (const auto& M : gu.matrices) {
            std::vector<int> img(729);
            for (uint64_t code = 0; code < 729; ++code)
                img[code] = int(vec_encode(F, M.apply_row(vec_decode(F, 3, code))));
            gens.push_back(Perm(std::move(img)));
        }
        PermGroup G(729, gens);
        CHECK(G.order() == 24192); // |GU_3(3)|
        std::vector<std::vector<int>> family;
        for (const auto& pt : projective_points(3, F)) {
            if (!isotropic(pt)) continue;
            std::vector<int> cell;
            for (Elem c = 1; c < F.q(); ++c) {
                Vec w(3);
                for (int t = 0; t < 3; ++t) w[t] = F.mul(c, pt[t]);
                cell.push_back(int(vec_encode(F, w)));
            }
            family.push_back(std::move(cell));
        }
        REQUIRE(family.size() == 28);
        auto act = G.induced_action(family);
        CHECK(act.kernel_order == 4); // the center, of order q+1
        CHECK(act.image().order() == 6048);
    }
    SUBCASE("2^4:Sp_4(2) acts faithfully on the 16 blocks of S-(4)") {
        auto gd = quadratic_form_design(2, -1);
        auto act = gd.group->induced_action(gd.design.blocks());
        CHECK(act.faithful);
    }
    SUBCASE("non-invariant families are rejected") {
        PermGroup G = psl2_mobius(7);
        CHECK_THROWS_AS(G.induced_action({{0, 1}, {2, 3}}), Error);
    }
}

TEST_CASE("derived subgroups") {
    SUBCASE("abelian groups have trivial derived subgroup") {
        PermGroup C5(5, {cyc(5, {{0, 1, 2, 3, 4}})});
        CHECK(C5.derived_subgroup().order() == 1);
    }
    SUBCASE("2^4:Sp_4(2) -> 2^4:A_6 of order 5760") {
        auto gd = quadratic_form_design(2, -1);
        CHECK(gd.group->order() == 11520);
        CHECK(gd.group->derived_subgroup().order() == 5760);
    }
    SUBCASE("PGL_2(7) -> PSL_2(7), index 2") {
        PermGroup psl = psl2_mobius(7);
        std::vector<Perm> gens = psl.generators();
        std::vector<int> img(8);
        for (int x = 0; x < 7; ++x) img[x] = 3 * x % 7; // multiplication by a non-square
        img[7] = 7;
        gens.push_back(Perm(img));
        PermGroup pgl(8, gens);
        REQUIRE(pgl.order() == 336);
        PermGroup d = pgl.derived_subgroup();
        CHECK(d.order() == 168);
        CHECK(d.same_group(psl));
    }
}

TEST_CASE("membership") {
    PermGroup G = frobenius_group_7_3();
    CHECK(G.is_member(Perm::identity(7)));
    std::vector<int> add(7), dbl(7);
    for (int x = 0; x < 7; ++x) {
        add[x] = (x + 1) % 7;
        dbl[x] = 2 * x % 7;
    }
    PermGroup H(7, {Perm(dbl)});
    CHECK_FALSE(H.is_member(Perm(add))); // x+1 moves 0, <2x> fixes it
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) CHECK(G.is_member(random_word(G, rng, 12)));
}

TEST_CASE("BSGS order equals exhaustive enumeration for 20 random small groups") {
    std::mt19937 rng(31337);
    int done = 0;
    while (done < 20) {
        PermGroup G = random_small_group(rng);
        std::vector<Perm> elems;
        try {
            elems = enumerate_elements(G, 10000);
        } catch (const Error&) {
            continue; // order above 10^4; resample
        }
        CHECK(G.order() == BigInt(elems.size()));
        ++done;
    }
}

TEST_CASE("orbit-stabilizer identity on random instances") {
    std::mt19937 rng(555);
    for (int i = 0; i < 100; ++i) {
        PermGroup G = random_small_group(rng);
        std::uniform_int_distribution<int> pick(0, G.degree() - 1);
        int x = pick(rng);
        CHECK(G.order() == BigInt(G.orbit(x).size()) * G.point_stabilizer(x).order());
    }
}

TEST_CASE("generator file round-trip and parsing") {
    PermGroup G = psl2_mobius(7);
    std::string path = std::string(std::tmpnam(nullptr)) + ".grp";
    write_group_file(path, G, "PSL(2,7) on the projective line");
    PermGroup G2 = read_group_file(path);
    CHECK(G2.same_group(G));
    std::remove(path.c_str());

    Perm p = parse_perm("(1,2,3)(4,5)", 6);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p(5) == 5);
    Perm q = parse_perm("img: 1 0 2", 3);
    CHECK(q(0) == 1);
    CHECK_THROWS_AS(parse_perm("img: 0 1", 3), Error);
    CHECK_THROWS_AS(read_group_file("/nonexistent/file.grp"), Error);
}

TEST_CASE("k-transitivity via stabilizer chains") {
    CHECK(psl2_mobius(7).is_k_transitive(2));
    CHECK_FALSE(frobenius_group_7_3().is_k_transitive(2));
    PermGroup m11 = load_certified_group(default_data_dir() + "/m11_on12.grp", 12, 7920, 3);
    CHECK(m11.is_k_transitive(3));
    CHECK_FALSE(m11.is_k_transitive(4));
}
