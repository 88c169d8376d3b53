#include "doctest.h"

#include <random>

#include "bcp/algebra.hpp"
#include "pairs.hpp"

using namespace bcp;
using namespace bcp::testpairs;

namespace {

AlgebraElement random_element(const MatchedPair &mp, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    AlgebraElement a(mp);
    for (int c = 0; c < mp.gamma.order(); ++c)
        for (int g = 0; g < mp.g.order(); ++g)
            a.coeff(c, g) = Complex(d(rng), d(rng));
    return a;
}

std::vector<MatchedPair> corpus() {
    return {trivial_pair(2, 3), s3_pair_z2_z3(), s3_pair_z3_z2(), s4_pair_d4_z3()};
}

} // namespace

TEST_CASE("unit and basis multiplication") {
    MatchedPair mp = s3_pair_z3_z2();
    AlgebraElement one = AlgebraElement::unit(mp);
    SUBCASE("unit is the identity") {
        AlgebraElement a = random_element(mp, 1);
        CHECK((multiply(one, a) - a).max_abs() < 1e-12);
        CHECK((multiply(a, one) - a).max_abs() < 1e-12);
    }
    SUBCASE("delta functions are orthogonal projections") {
        for (int g = 0; g < mp.g.order(); ++g)
            for (int h = 0; h < mp.g.order(); ++h) {
                AlgebraElement p = AlgebraElement::basis(mp, 0, g);
                AlgebraElement q = AlgebraElement::basis(mp, 0, h);
                AlgebraElement pq = multiply(p, q);
                if (g == h)
                    CHECK((pq - p).max_abs() < 1e-12);
                else
                    CHECK(pq.max_abs() < 1e-12);
            }
    }
    SUBCASE("covariance u_gamma delta_g u_gamma^* = delta_{alpha_gamma(g)}") {
        for (int c = 0; c < mp.gamma.order(); ++c)
            for (int g = 0; g < mp.g.order(); ++g) {
                AlgebraElement u = AlgebraElement::u_elem(mp, c);
                AlgebraElement p = AlgebraElement::basis(mp, 0, g);
                AlgebraElement lhs = multiply(multiply(u, p), adjoint(u));
                AlgebraElement rhs = AlgebraElement::basis(mp, 0, mp.alpha[c][g]);
                CHECK((lhs - rhs).max_abs() < 1e-12);
            }
    }
    SUBCASE("u is a homomorphism of Gamma") {
        for (int c = 0; c < mp.gamma.order(); ++c)
            for (int m = 0; m < mp.gamma.order(); ++m) {
                AlgebraElement lhs = multiply(AlgebraElement::u_elem(mp, c),
                                              AlgebraElement::u_elem(mp, m));
                AlgebraElement rhs =
                    AlgebraElement::u_elem(mp, mp.gamma.mul(c, m));
                CHECK((lhs - rhs).max_abs() < 1e-12);
            }
    }
}

TEST_CASE("star algebra axioms") {
    for (const MatchedPair &mp : corpus()) {
        AlgebraElement a = random_element(mp, 2);
        AlgebraElement b = random_element(mp, 3);
        AlgebraElement c = random_element(mp, 4);
        SUBCASE("associativity") {
            CHECK((multiply(multiply(a, b), c) - multiply(a, multiply(b, c)))
                      .max_abs() < 1e-10);
        }
        SUBCASE("involution") {
            CHECK((adjoint(adjoint(a)) - a).max_abs() < 1e-12);
            CHECK((adjoint(multiply(a, b)) - multiply(adjoint(b), adjoint(a)))
                      .max_abs() < 1e-10);
        }
        SUBCASE("unitaries") {
            for (int g = 1; g < mp.gamma.order(); ++g) {
                AlgebraElement u = AlgebraElement::u_elem(mp, g);
                CHECK((multiply(u, adjoint(u)) - AlgebraElement::unit(mp)).max_abs() <
                      1e-12);
            }
        }
    }
}

TEST_CASE("GNS representation is faithful and star-preserving") {
    for (const MatchedPair &mp : corpus()) {
        AlgebraElement a = random_element(mp, 5);
        AlgebraElement b = random_element(mp, 6);
        Matrix la = gns_matrix(a), lb = gns_matrix(b);
        CHECK((gns_matrix(multiply(a, b)) - la * lb).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((gns_matrix(adjoint(a)) - la.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((gns_matrix(AlgebraElement::unit(mp)) -
               Matrix::Identity(la.rows(), la.cols()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("haar state") {
    for (const MatchedPair &mp : corpus()) {
        AlgebraElement a = random_element(mp, 7);
        AlgebraElement b = random_element(mp, 8);
        SUBCASE("state axioms") {
            CHECK(std::abs(haar(AlgebraElement::unit(mp)) - 1.0) < 1e-12);
            Complex pos = haar(multiply(adjoint(a), a));
            CHECK(pos.real() > 0.0);
            CHECK(std::abs(pos.imag()) < 1e-10);
        }
        SUBCASE("trace property (Kac)") {
            CHECK(std::abs(haar(multiply(a, b)) - haar(multiply(b, a))) < 1e-10);
        }
        SUBCASE("l2 norm against the coefficient table") {
            // ||a||_2^2 = (1/|G|) sum |coeff|^2 in this basis.
            double frob = a.coeffs().squaredNorm() / mp.g.order();
            CHECK(l2_norm(a) == doctest::Approx(std::sqrt(frob)).epsilon(1e-9));
        }
    }
}

TEST_CASE("operator norm") {
    MatchedPair mp = s3_pair_z3_z2();
    SUBCASE("unitaries and projections have norm one") {
        CHECK(operator_norm(AlgebraElement::unit(mp)) == doctest::Approx(1.0));
        CHECK(operator_norm(AlgebraElement::u_elem(mp, 1)) == doctest::Approx(1.0));
        CHECK(operator_norm(AlgebraElement::basis(mp, 0, 1)) == doctest::Approx(1.0));
    }
    SUBCASE("dominates the l2 norm") {
        AlgebraElement a = random_element(mp, 9);
        CHECK(operator_norm(a) >= l2_norm(a) - 1e-10);
    }
    SUBCASE("C* identity") {
        AlgebraElement a = random_element(mp, 10);
        double n = operator_norm(a);
        CHECK(operator_norm(multiply(adjoint(a), a)) ==
              doctest::Approx(n * n).epsilon(1e-8));
    }
}

TEST_CASE("counit") {
    for (const MatchedPair &mp : corpus()) {
        AlgebraElement a = random_element(mp, 11);
        AlgebraElement b = random_element(mp, 12);
        CHECK(std::abs(counit(AlgebraElement::unit(mp)) - 1.0) < 1e-12);
        CHECK(std::abs(counit(multiply(a, b)) - counit(a) * counit(b)) < 1e-10);
        CHECK(std::abs(counit(adjoint(a)) - std::conj(counit(a))) < 1e-10);
    }
}

TEST_CASE("tensor elements") {
    MatchedPair mp = s3_pair_z3_z2();
    SUBCASE("encode/decode roundtrip") {
        TensorElement t(mp, 3);
        for (Eigen::Index i = 0; i < t.size(); i += 37) {
            CHECK(t.encode(t.decode(i)) == i);
        }
    }
    SUBCASE("outer products multiply slotwise") {
        AlgebraElement a = random_element(mp, 13), b = random_element(mp, 14);
        AlgebraElement c = random_element(mp, 15), d = random_element(mp, 16);
        TensorElement lhs = multiply(TensorElement::outer(a, b), TensorElement::outer(c, d));
        TensorElement rhs = TensorElement::outer(multiply(a, c), multiply(b, d));
        CHECK((lhs - rhs).max_abs() < 1e-10);
    }
    SUBCASE("one-slot lift is consistent") {
        AlgebraElement a = random_element(mp, 17);
        CHECK((as_algebra_element(TensorElement::lift(a)) - a).max_abs() < 1e-14);
    }
}

TEST_CASE("comultiplication") {
    for (const MatchedPair &mp : corpus()) {
        AlgebraElement a = random_element(mp, 18);
        AlgebraElement b = random_element(mp, 19);
        SUBCASE("on the basis: Delta(u_gamma delta_g) splits over g1 g2 = g") {
            AlgebraElement x = AlgebraElement::basis(mp, 1 % mp.gamma.order(), 0);
            TensorElement dx = comultiply(x);
            // spot check one coefficient against the defining formula
            int c = 1 % mp.gamma.order();
            for (int g1 = 0; g1 < mp.g.order(); ++g1) {
                int g2 = mp.g.mul(mp.g.inv(g1), 0);
                Eigen::Index i = dx.encode({c * mp.g.order() + g1,
                                            mp.beta[g1][c] * mp.g.order() + g2});
                CHECK(std::abs(dx.flat(i) - 1.0) < 1e-12);
            }
        }
        SUBCASE("homomorphism") {
            TensorElement lhs = comultiply(multiply(a, b));
            TensorElement rhs = multiply(comultiply(a), comultiply(b));
            CHECK((lhs - rhs).max_abs() < 1e-10);
        }
        SUBCASE("coassociativity") {
            TensorElement d = comultiply(a);
            CHECK((comultiply_slot(d, 0) - comultiply_slot(d, 1)).max_abs() < 1e-12);
        }
        SUBCASE("counit laws") {
            TensorElement d = comultiply(a);
            CHECK((as_algebra_element(counit_slot(d, 0)) - a).max_abs() < 1e-12);
            CHECK((as_algebra_element(counit_slot(d, 1)) - a).max_abs() < 1e-12);
        }
        SUBCASE("haar invariance") {
            TensorElement d = comultiply(a);
            AlgebraElement left = as_algebra_element(haar_slot(d, 0));
            AlgebraElement right = as_algebra_element(haar_slot(d, 1));
            AlgebraElement expect = haar(a) * AlgebraElement::unit(mp);
            CHECK((left - expect).max_abs() < 1e-10);
            CHECK((right - expect).max_abs() < 1e-10);
        }
    }
}
