#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bcp/bicrossed_reps.hpp"
#include "bcp/io.hpp"
#include "pairs.hpp"

using namespace bcp;
using namespace bcp::testpairs;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("bcp-io-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("group serialization") {
    SUBCASE("round trip through the mult form") {
        FiniteGroup s3 = symmetric_group(3);
        FiniteGroup back = group_from_json(group_to_json(s3));
        CHECK(back.same_table(s3));
        CHECK(back.label(1) == s3.label(1));
    }
    SUBCASE("permutation generator form") {
        Json j;
        j["permutations"] = {{1, 2, 0}};
        FiniteGroup g = group_from_json(j);
        CHECK(g.order() == 3);
        CHECK(g.same_table(cyclic_group(3)));
    }
    SUBCASE("bad tables raise ParseError") {
        Json j;
        j["mult"] = {{0, 1}, {1, 1}}; // not a latin square
        CHECK_THROWS_AS(group_from_json(j), ParseError);
        CHECK_THROWS_AS(group_from_json(Json::object()), ParseError);
    }
}

TEST_CASE("matched pair serialization") {
    SUBCASE("round trip") {
        MatchedPair mp = s4_pair_d4_z3();
        MatchedPair back = pair_from_json(pair_to_json(mp));
        CHECK(back.gamma.same_table(mp.gamma));
        CHECK(back.g.same_table(mp.g));
        CHECK(back.alpha == mp.alpha);
        CHECK(back.beta == mp.beta);
    }
    SUBCASE("factorization form") {
        FiniteGroup s3 = symmetric_group(3);
        Json j;
        j["factorization"]["ambient"] = group_to_json(s3);
        j["factorization"]["gamma_gens"] = {element_of_order(s3, 3)};
        j["factorization"]["g_gens"] = {element_of_order(s3, 2)};
        MatchedPair mp = pair_from_json(j);
        MatchedPair direct = s3_pair_z3_z2();
        CHECK(mp.gamma.same_table(direct.gamma));
        CHECK(mp.alpha == direct.alpha);
        CHECK(mp.beta == direct.beta);
    }
    SUBCASE("load_pair and malformed input") {
        TempDir dir;
        auto good = dir.path / "pair.json";
        std::ofstream(good) << pair_to_json(s3_pair_z2_z3()).dump();
        CHECK(load_pair(good.string()).gamma.order() == 2);
        auto bad = dir.path / "bad.json";
        std::ofstream(bad) << "{ not json";
        CHECK_THROWS_AS(load_pair(bad.string()), ParseError);
        CHECK_THROWS_AS(load_pair((dir.path / "missing.json").string()), ParseError);
    }
}

TEST_CASE("algebra and matrix serialization") {
    SUBCASE("sparse algebra round trip") {
        MatchedPair mp = s3_pair_z3_z2();
        AlgebraElement a(mp);
        a.coeff(1, 0) = Complex(0.5, -2.0);
        a.coeff(2, 1) = Complex(0.0, 1.0);
        Json j = algebra_to_json(a);
        CHECK(j.size() == 2); // only nonzero rows serialized
        AlgebraElement back = algebra_from_json(mp, j);
        CHECK((back - a).max_abs() < 1e-15);
    }
    SUBCASE("matrix round trip") {
        Matrix m(2, 3);
        m << Complex(1, 2), Complex(0, 0), Complex(-1, 0.25), Complex(3, -4),
            Complex(0.5, 0), Complex(0, -0.125);
        CHECK((matrix_from_json(matrix_to_json(m)) - m).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("content hash and the irrep cache") {
    SUBCASE("hash is deterministic and input-sensitive") {
        Json a = {{"x", 1}};
        Json b = {{"x", 2}};
        CHECK(content_hash(a) == content_hash(a));
        CHECK(content_hash(a) != content_hash(b));
        CHECK(content_hash(a).size() == 16);
    }
    SUBCASE("cache round trip reproduces the table bytes") {
        TempDir dir;
        FiniteGroup s3 = symmetric_group(3);
        IrrepTable fresh = cached_irreps(s3, 0, {}, dir.path.string());
        int files = 0;
        for (auto &e : std::filesystem::directory_iterator(dir.path))
            files += e.is_regular_file();
        CHECK(files == 1);
        IrrepTable cached = cached_irreps(s3, 0, {}, dir.path.string());
        REQUIRE(cached.size() == fresh.size());
        for (int x = 0; x < fresh.size(); ++x)
            for (int g = 0; g < s3.order(); ++g)
                CHECK((cached.irreps[x].at(g) - fresh.irreps[x].at(g))
                          .cwiseAbs()
                          .maxCoeff() < 1e-15);
    }
    SUBCASE("different seeds use different cache entries") {
        TempDir dir;
        FiniteGroup s3 = symmetric_group(3);
        cached_irreps(s3, 0, {}, dir.path.string());
        cached_irreps(s3, 1, {}, dir.path.string());
        int files = 0;
        for (auto &e : std::filesystem::directory_iterator(dir.path))
            files += e.is_regular_file();
        CHECK(files == 2);
    }
}

TEST_CASE("bundled corpus") {
    auto all = corpus();
    REQUIRE(all.size() == 5);
    for (const NamedPair &np : all) {
        CAPTURE(np.name);
        CHECK(validate_matched_pair(np.pair).ok());
        auto table = irr_table(np.pair, 0);
        long long total = 0;
        for (auto &c : table)
            total += static_cast<long long>(c.dim) * c.dim;
        CHECK(total == static_cast<long long>(np.pair.gamma.order()) *
                           np.pair.g.order());
    }
    SUBCASE("the S4 pair has both actions nontrivial") {
        const MatchedPair &mp = all.back().pair;
        bool alpha_moves = false, beta_moves = false;
        for (int c = 0; c < mp.gamma.order(); ++c)
            for (int x = 0; x < mp.g.order(); ++x)
                alpha_moves |= mp.alpha[c][x] != x;
        for (int x = 0; x < mp.g.order(); ++x)
            for (int c = 0; c < mp.gamma.order(); ++c)
                beta_moves |= mp.beta[x][c] != c;
        CHECK(alpha_moves);
        CHECK(beta_moves);
    }
    SUBCASE("descriptors are deterministic") {
        Json a = pair_to_json(all[3].pair);
        Json b = pair_to_json(corpus()[3].pair);
        CHECK(a.dump() == b.dump());
    }
}
