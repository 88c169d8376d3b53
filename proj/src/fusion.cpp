#include "bcp/fusion.hpp"

#include <cmath>

namespace bcp {

TwistedTensorRep twisted_tensor(const MatchedPair &mp, const RepClass &a,
                                const RepClass &b, int r) {
    TwistedTensorRep t;
    t.mp = &mp;
    t.r = r;
    for (int s : a.od->orbit)
        for (int q : b.od->orbit)
            if (mp.gamma.mul(s, q) == r)
                t.pairs.emplace_back(s, q);
    if (t.pairs.empty())
        throw PointNotInProductOfOrbits("no factorization st = r over the orbits");
    t.od_r = std::make_shared<OrbitData>(orbit_data(mp, r));

    const int du = a.u.dim, dv = b.u.dim;
    const int np = static_cast<int>(t.pairs.size());
    const int dim = np * du * dv;
    t.rep.group = &t.od_r->stabilizer.group;
    t.rep.dim = dim;
    t.rep.matrices.assign(t.od_r->stabilizer.order(), Matrix::Zero(dim, dim));
    for (int gl = 0; gl < t.od_r->stabilizer.order(); ++gl) {
        const int g = t.od_r->stabilizer.to_parent(gl);
        Matrix &w = t.rep.matrices[gl];
        for (int p = 0; p < np; ++p) {
            auto [s, tt] = t.pairs[p];
            const int ag = mp.alpha[tt][g];
            for (int q = 0; q < np; ++q) {
                auto [s2, t2] = t.pairs[q];
                if (mp.beta[ag][s] != s2 || mp.beta[g][tt] != t2)
                    continue;
                const Matrix &mu =
                    a.u.at(a.od->stabilizer.from_parent(psi(mp, *a.od, s, s2, ag)));
                const Matrix &mv =
                    b.u.at(b.od->stabilizer.from_parent(psi(mp, *b.od, tt, t2, g)));
                for (int i = 0; i < du; ++i)
                    for (int i2 = 0; i2 < du; ++i2)
                        for (int j = 0; j < dv; ++j)
                            for (int j2 = 0; j2 < dv; ++j2)
                                w((p * du + i) * dv + j, (q * du + i2) * dv + j2) =
                                    mu(i, i2) * mv(j, j2);
            }
        }
    }
    return t;
}

double twisted_character_residual(const TwistedTensorRep &t, const RepClass &a,
                                  const RepClass &b) {
    const MatchedPair &mp = *t.mp;
    double worst = 0.0;
    for (int gl = 0; gl < t.od_r->stabilizer.order(); ++gl) {
        const int g = t.od_r->stabilizer.to_parent(gl);
        Complex formula = 0;
        for (auto [s, tt] : t.pairs) {
            const int ag = mp.alpha[tt][g];
            if (mp.beta[ag][s] != s || mp.beta[g][tt] != tt)
                continue;
            Complex cu =
                a.u.at(a.od->stabilizer.from_parent(psi(mp, *a.od, s, s, ag))).trace();
            Complex cv =
                b.u.at(b.od->stabilizer.from_parent(psi(mp, *b.od, tt, tt, g))).trace();
            formula += cu * cv;
        }
        worst = std::max(worst, std::abs(formula - t.rep.at(gl).trace()));
    }
    return worst;
}

namespace {

int round_int(Complex z, const Tolerances &tol, const char *what) {
    long long n = std::llround(z.real());
    if (std::abs(z.real() - static_cast<double>(n)) >= tol.integer ||
        std::abs(z.imag()) >= tol.integer)
        throw NonIntegral(std::string(what) + " is not integral");
    return static_cast<int>(n);
}

} // namespace

int fusion_dim(const MatchedPair &mp, const RepClass &c1, const RepClass &c2,
               const RepClass &c3, const Tolerances &tol) {
    long long acc = 0;
    bool any = false;
    for (int r : c1.od->orbit) {
        bool factorizes = false;
        for (int s : c2.od->orbit) {
            for (int q : c3.od->orbit)
                if (mp.gamma.mul(s, q) == r) {
                    factorizes = true;
                    break;
                }
            if (factorizes)
                break;
        }
        if (!factorizes)
            continue;
        any = true;
        TwistedTensorRep t = twisted_tensor(mp, c2, c3, r);
        const Subgroup &sr = t.od_r->stabilizer;
        std::vector<int> phi(sr.order()); // psi^{gamma_1}_{r,r}: G_r -> G_{gamma_1}
        for (int i = 0; i < sr.order(); ++i)
            phi[i] = c1.od->stabilizer.from_parent(
                psi(mp, *c1.od, r, r, sr.to_parent(i)));
        UnitaryRep tu = transport(c1.u, sr.group, phi);
        acc += mor_dim_char(tu, t.rep, tol);
    }
    int formula = 0;
    if (any) {
        const double avg = static_cast<double>(acc) / c1.od->orbit.size();
        formula = round_int(Complex(avg, 0.0), tol, "orbit-averaged fusion dimension");
    }

    AlgebraElement chi1 = character_of(mp, c1, tol);
    AlgebraElement chi2 = character_of(mp, c2, tol);
    AlgebraElement chi3 = character_of(mp, c3, tol);
    int oracle = round_int(haar(multiply(adjoint(chi1), multiply(chi2, chi3))), tol,
                           "character-pairing fusion dimension");
    if (formula != oracle)
        throw FormulaMismatch("fusion formula " + std::to_string(formula) +
                              " vs character oracle " + std::to_string(oracle));
    return formula;
}

UnitaryRep induce(const MatchedPair &mp, const RepClass &cls) {
    const OrbitData &od = *cls.od;
    const int du = cls.u.dim;
    const int n = static_cast<int>(od.orbit.size());
    UnitaryRep out;
    out.group = &mp.g;
    out.dim = n * du;
    out.matrices.assign(mp.g.order(), Matrix::Zero(out.dim, out.dim));
    for (int g = 0; g < mp.g.order(); ++g) {
        Matrix &m = out.matrices[g];
        for (int pr = 0; pr < n; ++pr) {
            const int r = od.orbit[pr];
            const int s = mp.beta[g][r];
            const int ps = static_cast<int>(
                std::lower_bound(od.orbit.begin(), od.orbit.end(), s) -
                od.orbit.begin());
            const Matrix &blk =
                cls.u.at(od.stabilizer.from_parent(psi(mp, od, r, s, g)));
            m.block(pr * du, ps * du, du, du) = blk;
        }
    }
    return out;
}

std::pair<int, int> frobenius_check(const MatchedPair &mp, const RepClass &v,
                                    const UnitaryRep &u, const Tolerances &tol) {
    UnitaryRep ind = induce(mp, v);
    int lhs = mor_dim_char(u, ind, tol);
    UnitaryRep res = restrict_rep(u, v.od->stabilizer);
    int rhs = mor_dim_char(res, v.u, tol);
    return {lhs, rhs};
}

} // namespace bcp
