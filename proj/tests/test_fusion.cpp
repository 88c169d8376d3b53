#include "doctest.h"

#include <map>

#include "bcp/fusion.hpp"
#include "pairs.hpp"

using namespace bcp;
using namespace bcp::testpairs;

TEST_CASE("twisted tensor product") {
    SUBCASE("trivial actions reduce to the ordinary tensor product") {
        MatchedPair mp = trivial_pair(2, 3);
        FiniteGroup z3 = cyclic_group(3);
        IrrepTable t3 = irreps(z3, 0);
        RepClass a = make_class(mp, 1, t3.irreps[1].matrices);
        RepClass b = make_class(mp, 1, contragredient(t3.irreps[1]).matrices);
        TwistedTensorRep tt = twisted_tensor(mp, a, b, 0);
        CHECK(tt.pairs.size() == 1);
        CHECK(tt.rep.dim == 1);
        // omega * omega^2 = 1 pointwise
        for (int g = 0; g < 3; ++g)
            CHECK(std::abs(tt.rep.at(g)(0, 0) - 1.0) < 1e-12);
    }
    SUBCASE("Z3/Z2 pair: eps x_e eps over the 3-cycle orbit") {
        MatchedPair mp = s3_pair_z3_z2();
        RepClass a = make_class(mp, 1, {Matrix::Ones(1, 1)});
        RepClass b = make_class(mp, 2, {Matrix::Ones(1, 1)});
        TwistedTensorRep tt = twisted_tensor(mp, a, b, 0);
        // both factorizations (c, c^2) and (c^2, c) contribute
        CHECK(tt.pairs.size() == 2);
        CHECK(tt.rep.dim == 2);
        CHECK(rep_residual(tt.rep) < 1e-12);
        // the swap at the transposition: regular rep of Z2
        CHECK(std::abs(tt.rep.at(1).trace()) < 1e-12);
        CHECK(mor_dim_char(tt.rep, trivial_rep(tt.od_r->stabilizer.group)) == 1);
    }
    SUBCASE("point outside the orbit product throws") {
        MatchedPair mp = s3_pair_z2_z3();
        RepClass a = make_class(
            mp, 0, std::vector<Matrix>(3, Matrix::Ones(1, 1)));
        CHECK_THROWS_AS(twisted_tensor(mp, a, a, 1), PointNotInProductOfOrbits);
    }
    SUBCASE("unitary rep invariants and character formula on corpus classes") {
        for (MatchedPair mp : {s3_pair_z2_z3(), s3_pair_z3_z2(), s4_pair_d4_z3()}) {
            auto table = irr_table(mp, 0);
            for (auto &a : table)
                for (auto &b : table)
                    for (int r : a.cls.od->orbit) {
                        TwistedTensorRep tt;
                        try {
                            tt = twisted_tensor(mp, a.cls, b.cls, r);
                        } catch (const PointNotInProductOfOrbits &) {
                            continue;
                        }
                        CHECK(rep_residual(tt.rep) < 1e-9);
                        CHECK(twisted_character_residual(tt, a.cls, b.cls) < 1e-9);
                        CHECK(tt.rep.dim == static_cast<int>(tt.pairs.size()) *
                                                a.cls.u.dim * b.cls.u.dim);
                    }
        }
    }
}

TEST_CASE("fusion dimensions") {
    SUBCASE("trivial pair: pointwise group duality") {
        MatchedPair mp = trivial_pair(2, 2);
        RepClass triv = make_class(mp, 0, {Matrix::Ones(1, 1), Matrix::Ones(1, 1)});
        RepClass ssign = make_class(mp, 1, {Matrix::Ones(1, 1), -Matrix::Ones(1, 1)});
        CHECK(fusion_dim(mp, triv, ssign, ssign) == 1);
        CHECK(fusion_dim(mp, ssign, ssign, ssign) == 0);
    }
    SUBCASE("empty orbit intersection gives zero") {
        MatchedPair mp = s3_pair_z2_z3();
        auto table = irr_table(mp, 0);
        RepClass over_e, over_s;
        for (auto &c : table) {
            if (c.cls.gamma == 0 && c.dim == 1 &&
                (c.character - AlgebraElement::unit(mp)).max_abs() < 1e-9)
                over_e = c.cls;
            if (c.cls.gamma == 1)
                over_s = c.cls;
        }
        CHECK(fusion_dim(mp, over_s, over_e, over_e) == 0);
    }
    SUBCASE("Z2/Z3 pair: fusion is the group law of a nonabelian order-6 group") {
        MatchedPair mp = s3_pair_z2_z3();
        auto table = irr_table(mp, 0);
        REQUIRE(table.size() == 6);
        std::vector<std::vector<int>> law(6, std::vector<int>(6, -1));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                for (int k = 0; k < 6; ++k) {
                    int n = fusion_dim(mp, table[k].cls, table[i].cls, table[j].cls);
                    if (n == 1) {
                        CHECK(law[i][j] == -1);
                        law[i][j] = k;
                    } else {
                        CHECK(n == 0);
                    }
                }
                CHECK(law[i][j] != -1);
            }
        FiniteGroup dual = FiniteGroup::from_table(law);
        CHECK(dual.order() == 6);
        bool abelian = true;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (dual.mul(i, j) != dual.mul(j, i))
                    abelian = false;
        CHECK_FALSE(abelian); // the unique nonabelian group of order 6
    }
    SUBCASE("dimension count over both S3 pairs") {
        for (MatchedPair mp : {s3_pair_z2_z3(), s3_pair_z3_z2()}) {
            auto table = irr_table(mp, 0);
            for (auto &x : table)
                for (auto &y : table) {
                    long long total = 0;
                    for (auto &z : table)
                        total += static_cast<long long>(z.dim) *
                                 fusion_dim(mp, z.cls, x.cls, y.cls);
                    CHECK(total == static_cast<long long>(x.dim) * y.dim);
                }
        }
    }
    SUBCASE("fusion with the trivial class detects the contragredient") {
        MatchedPair mp = s3_pair_z3_z2();
        auto table = irr_table(mp, 0);
        int triv = -1;
        for (size_t i = 0; i < table.size(); ++i)
            if ((table[i].character - AlgebraElement::unit(mp)).max_abs() < 1e-9)
                triv = static_cast<int>(i);
        REQUIRE(triv >= 0);
        for (size_t i = 0; i < table.size(); ++i) {
            int bar = find_class(mp, table, contragredient_class(mp, table[i].cls));
            for (size_t j = 0; j < table.size(); ++j)
                CHECK(fusion_dim(mp, table[triv].cls, table[i].cls, table[j].cls) ==
                      (static_cast<int>(j) == bar ? 1 : 0));
        }
    }
    SUBCASE("associativity count on the Z3/Z2 pair") {
        MatchedPair mp = s3_pair_z3_z2();
        auto table = irr_table(mp, 0);
        const int n = static_cast<int>(table.size());
        std::vector<std::vector<std::vector<int>>> f(
            n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
        for (int z = 0; z < n; ++z)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    f[z][x][y] = fusion_dim(mp, table[z].cls, table[x].cls, table[y].cls);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int t = 0; t < n; ++t)
                    for (int w = 0; w < n; ++w) {
                        int lhs = 0, rhs = 0;
                        for (int z = 0; z < n; ++z) {
                            lhs += f[z][x][y] * f[w][z][t];
                            rhs += f[z][y][t] * f[w][x][z];
                        }
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("induced representations") {
    SUBCASE("singleton orbit returns u itself") {
        MatchedPair mp = s3_pair_z2_z3();
        FiniteGroup z3 = cyclic_group(3);
        IrrepTable t3 = irreps(z3, 0);
        RepClass cls = make_class(mp, 0, t3.irreps[1].matrices);
        UnitaryRep ind = induce(mp, cls);
        CHECK(ind.dim == 1);
        for (int g = 0; g < 3; ++g)
            CHECK(std::abs(ind.at(g)(0, 0) - cls.u.at(g)(0, 0)) < 1e-12);
    }
    SUBCASE("Z3/Z2 pair: Ind of eps over the 3-cycle orbit is the regular rep") {
        MatchedPair mp = s3_pair_z3_z2();
        RepClass cls = make_class(mp, 1, {Matrix::Ones(1, 1)});
        UnitaryRep ind = induce(mp, cls);
        CHECK(ind.dim == 2);
        CHECK(rep_residual(ind) < 1e-12);
        CHECK(std::abs(ind.at(0).trace() - 2.0) < 1e-12);
        CHECK(std::abs(ind.at(1).trace()) < 1e-12);
    }
    SUBCASE("induction is a unitary rep on every corpus class") {
        for (MatchedPair mp : {s3_pair_z2_z3(), s3_pair_z3_z2(), s4_pair_d4_z3()}) {
            auto table = irr_table(mp, 0);
            for (auto &c : table) {
                UnitaryRep ind = induce(mp, c.cls);
                CHECK(rep_residual(ind) < 1e-9);
                CHECK(ind.dim == c.dim);
            }
        }
    }
}

TEST_CASE("Frobenius reciprocity") {
    for (MatchedPair mp : {s3_pair_z2_z3(), s3_pair_z3_z2(), s4_pair_d4_z3()}) {
        auto table = irr_table(mp, 0);
        IrrepTable gt = irreps(mp.g, 0);
        for (auto &c : table)
            for (auto &u : gt.irreps) {
                auto [lhs, rhs] = frobenius_check(mp, c.cls, u);
                CHECK(lhs == rhs);
            }
    }
}
