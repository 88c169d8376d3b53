#include "doctest.h"

#include <algorithm>

#include "bcp/matched_pair.hpp"
#include "pairs.hpp"

using namespace bcp;
using namespace bcp::testpairs;

TEST_CASE("trivial actions validate") {
    MatchedPair mp = trivial_pair(2, 2);
    CHECK(validate_matched_pair(mp).ok());
}

TEST_CASE("S3 factorizations validate") {
    CHECK(validate_matched_pair(s3_pair_z2_z3()).ok());
    CHECK(validate_matched_pair(s3_pair_z3_z2()).ok());
}

TEST_CASE("corrupted alpha is reported with a witness") {
    MatchedPair mp = s3_pair_z2_z3();
    mp.alpha[1][1] = mp.alpha[1][2]; // no longer bijective
    auto report = validate_matched_pair(mp);
    CHECK_FALSE(report.ok());
    CHECK(report.violations.size() >= 1);
}

TEST_CASE("exact factorization structure") {
    SUBCASE("Gamma=Z2, G=Z3: beta trivial, alpha conjugates") {
        MatchedPair mp = s3_pair_z2_z3();
        CHECK(mp.gamma.order() == 2);
        CHECK(mp.g.order() == 3);
        for (int x = 0; x < 3; ++x)
            for (int c = 0; c < 2; ++c)
                CHECK(mp.beta[x][c] == c);
        // The nontrivial gamma inverts Z3.
        CHECK(mp.alpha[1][1] == mp.g.inv(1));
        CHECK(mp.alpha[1][2] == mp.g.inv(2));
    }
    SUBCASE("Gamma=Z3, G=Z2: alpha trivial, beta conjugates") {
        MatchedPair mp = s3_pair_z3_z2();
        CHECK(mp.gamma.order() == 3);
        CHECK(mp.g.order() == 2);
        for (int c = 0; c < 3; ++c)
            for (int x = 0; x < 2; ++x)
                CHECK(mp.alpha[c][x] == x);
        CHECK(mp.beta[1][1] == 2); // the transposition swaps the two 3-cycles
        CHECK(mp.beta[1][2] == 1);
    }
    SUBCASE("Z6 = Z2 x Z3 gives trivial actions") {
        FiniteGroup z6 = cyclic_group(6);
        MatchedPair mp = from_exact_factorization(z6, subgroup_closure(z6, {3}),
                                                  subgroup_closure(z6, {2}));
        for (int c = 0; c < 2; ++c)
            for (int x = 0; x < 3; ++x)
                CHECK(mp.alpha[c][x] == x);
        for (int x = 0; x < 3; ++x)
            for (int c = 0; c < 2; ++c)
                CHECK(mp.beta[x][c] == c);
    }
    SUBCASE("bad factorization rejected") {
        FiniteGroup s3 = symmetric_group(3);
        Subgroup a = subgroup_closure(s3, {element_of_order(s3, 2)});
        CHECK_THROWS_AS(from_exact_factorization(s3, a, a), NotExactFactorization);
    }
}

TEST_CASE("factorization identity gamma*g = alpha_gamma(g)*beta_g(gamma)") {
    FiniteGroup s4 = symmetric_group(4);
    MatchedPair mp = s4_pair_d4_z3();
    CHECK(validate_matched_pair(mp).ok());
    // Re-verify inside the ambient group through the element labels.
    auto find = [&](const std::string &l) {
        for (int x = 0; x < s4.order(); ++x)
            if (s4.label(x) == l)
                return x;
        return -1;
    };
    for (int c = 0; c < mp.gamma.order(); ++c)
        for (int x = 0; x < mp.g.order(); ++x) {
            int lhs = s4.mul(find(mp.gamma.label(c)), find(mp.g.label(x)));
            int rhs = s4.mul(find(mp.g.label(mp.alpha[c][x])),
                             find(mp.gamma.label(mp.beta[x][c])));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("S4 pair has both actions nontrivial") {
    MatchedPair mp = s4_pair_d4_z3();
    bool alpha_trivial = true, beta_trivial = true;
    for (int c = 0; c < mp.gamma.order(); ++c)
        for (int x = 0; x < mp.g.order(); ++x)
            if (mp.alpha[c][x] != x)
                alpha_trivial = false;
    for (int x = 0; x < mp.g.order(); ++x)
        for (int c = 0; c < mp.gamma.order(); ++c)
            if (mp.beta[x][c] != c)
                beta_trivial = false;
    CHECK_FALSE(alpha_trivial);
    CHECK_FALSE(beta_trivial);
}

TEST_CASE("orbit data") {
    SUBCASE("trivial beta gives singleton orbits and full stabilizer") {
        MatchedPair mp = s3_pair_z2_z3();
        OrbitData od = orbit_data(mp, 1);
        CHECK(od.orbit == std::vector<int>{1});
        CHECK(od.stabilizer.order() == mp.g.order());
        CHECK(od.section.at(1) == 0);
    }
    SUBCASE("Z3/Z2 pair: nontrivial orbit of a 3-cycle") {
        MatchedPair mp = s3_pair_z3_z2();
        OrbitData od = orbit_data(mp, 1);
        CHECK(od.orbit == std::vector<int>{1, 2});
        CHECK(od.stabilizer.order() == 1);
        CHECK(od.blocks.at({1, 2}) == std::vector<int>{1});
        OrbitData oe = orbit_data(mp, 0);
        CHECK(oe.orbit == std::vector<int>{0});
        CHECK(oe.stabilizer.order() == 2);
    }
}

TEST_CASE("orbit invariants") {
    for (MatchedPair mp : {s3_pair_z2_z3(), s3_pair_z3_z2(), s4_pair_d4_z3()}) {
        for (const OrbitData &od : all_orbits(mp)) {
            CHECK(static_cast<int>(od.orbit.size()) * od.stabilizer.order() ==
                  mp.g.order());
            for (int r : od.orbit) {
                size_t total = 0;
                for (int s : od.orbit)
                    total += od.blocks.at({r, s}).size();
                CHECK(static_cast<int>(total) == mp.g.order());
            }
            for (int r : od.orbit)
                CHECK(mp.beta[od.section.at(r)][od.rep] == r);
            CHECK(od.section.at(od.rep) == 0);
        }
    }
}

TEST_CASE("psi") {
    MatchedPair mp = s3_pair_z3_z2();
    OrbitData od = orbit_data(mp, 1);
    SUBCASE("psi_{gamma,gamma} is the identity") {
        for (int g = 0; g < 2; ++g)
            CHECK(psi(mp, od, 1, 1, g) == g);
    }
    SUBCASE("membership: psi in G_gamma iff g in G_{r,s}") {
        for (int r : od.orbit)
            for (int s : od.orbit)
                for (int g = 0; g < 2; ++g) {
                    bool in_block = mp.beta[g][r] == s;
                    bool in_stab = od.stabilizer.contains(psi(mp, od, r, s, g));
                    CHECK(in_block == in_stab);
                }
    }
    SUBCASE("orbit mismatch throws") {
        CHECK_THROWS_AS(psi(mp, od, 0, 1, 0), OrbitMismatch);
    }
}

TEST_CASE("psi restricted to G_r is an isomorphism onto G_gamma") {
    for (MatchedPair mp : {s3_pair_z3_z2(), s4_pair_d4_z3()}) {
        for (const OrbitData &od : all_orbits(mp)) {
            for (int r : od.orbit) {
                OrbitData odr = orbit_data(mp, r);
                for (int a : odr.stabilizer.elements)
                    for (int b : odr.stabilizer.elements) {
                        int lhs = psi(mp, od, r, r, mp.g.mul(a, b));
                        int rhs = mp.g.mul(psi(mp, od, r, r, a), psi(mp, od, r, r, b));
                        CHECK(lhs == rhs);
                        CHECK(od.stabilizer.contains(psi(mp, od, r, r, a)));
                    }
            }
        }
    }
}

TEST_CASE("inverse-orbit identities used by the contragredient") {
    for (MatchedPair mp : {s3_pair_z3_z2(), s4_pair_d4_z3()}) {
        const int ng = mp.gamma.order(), nG = mp.g.order();
        for (int c = 0; c < ng; ++c) {
            OrbitData od = orbit_data(mp, c);
            OrbitData odi = orbit_data(mp, mp.gamma.inv(c));
            std::vector<int> inv_orbit;
            for (int r : od.orbit)
                inv_orbit.push_back(mp.gamma.inv(r));
            std::sort(inv_orbit.begin(), inv_orbit.end());
            CHECK(inv_orbit == odi.orbit);
            for (int x = 0; x < nG; ++x)
                CHECK(mp.beta[mp.alpha[c][x]][mp.gamma.inv(c)] ==
                      mp.gamma.inv(mp.beta[x][c]));
        }
    }
}
