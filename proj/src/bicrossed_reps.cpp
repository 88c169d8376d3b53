#include "bcp/bicrossed_reps.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace bcp {

RepClass make_class(const MatchedPair &mp, int gamma, std::vector<Matrix> matrices) {
    RepClass cls;
    cls.gamma = gamma;
    cls.od = std::make_shared<OrbitData>(orbit_data(mp, gamma));
    const FiniteGroup &stab = cls.od->stabilizer.group;
    if (static_cast<int>(matrices.size()) != stab.order())
        throw StabilizerMismatch("expected one matrix per stabilizer element");
    cls.u.group = &stab;
    cls.u.dim = static_cast<int>(matrices.front().rows());
    cls.u.matrices = std::move(matrices);
    if (rep_residual(cls.u) > 1e-8)
        throw StabilizerMismatch("matrices are not a unitary rep of the stabilizer");
    return cls;
}

BicrossedRep build_rep(const MatchedPair &mp, const RepClass &cls) {
    const OrbitData &od = *cls.od;
    const int du = cls.u.dim;
    const int n = static_cast<int>(od.orbit.size());
    BicrossedRep v;
    v.mp = &mp;
    v.cls = cls;
    v.block_dim = n * du;
    v.entries.assign(static_cast<size_t>(v.block_dim) * v.block_dim,
                     AlgebraElement(mp));
    for (int pr = 0; pr < n; ++pr)
        for (int ps = 0; ps < n; ++ps) {
            const int r = od.orbit[pr], s = od.orbit[ps];
            for (int g = 0; g < mp.g.order(); ++g) {
                if (mp.beta[g][r] != s)
                    continue;
                int t = od.stabilizer.from_parent(psi(mp, od, r, s, g));
                const Matrix &m = cls.u.at(t);
                for (int i = 0; i < du; ++i)
                    for (int j = 0; j < du; ++j)
                        v.at(pr * du + i, ps * du + j).coeff(r, g) = m(i, j);
            }
        }
    return v;
}

double bicrossed_unitarity_residual(const BicrossedRep &v) {
    const MatchedPair &mp = *v.mp;
    double worst = 0.0;
    for (int a = 0; a < v.block_dim; ++a)
        for (int b = 0; b < v.block_dim; ++b) {
            AlgebraElement row(mp), col(mp);
            for (int c = 0; c < v.block_dim; ++c) {
                row += multiply(v.at(a, c), adjoint(v.at(b, c)));
                col += multiply(adjoint(v.at(c, a)), v.at(c, b));
            }
            if (a == b) {
                row -= AlgebraElement::unit(mp);
                col -= AlgebraElement::unit(mp);
            }
            worst = std::max(worst, std::max(row.max_abs(), col.max_abs()));
        }
    return worst;
}

double comodule_residual(const BicrossedRep &v) {
    double worst = 0.0;
    for (int a = 0; a < v.block_dim; ++a)
        for (int b = 0; b < v.block_dim; ++b) {
            TensorElement lhs = comultiply(v.at(a, b));
            for (int k = 0; k < v.block_dim; ++k)
                lhs -= TensorElement::outer(v.at(a, k), v.at(k, b));
            worst = std::max(worst, lhs.max_abs());
        }
    return worst;
}

AlgebraElement character_of(const MatchedPair &mp, const RepClass &cls,
                            const Tolerances &tol) {
    const OrbitData &od = *cls.od;
    AlgebraElement chi(mp);
    for (int r : od.orbit)
        for (int g = 0; g < mp.g.order(); ++g) {
            if (mp.beta[g][r] != r)
                continue;
            int t = od.stabilizer.from_parent(psi(mp, od, r, r, g));
            chi.coeff(r, g) = cls.u.at(t).trace();
        }
    BicrossedRep v = build_rep(mp, cls);
    AlgebraElement trace(mp);
    for (int a = 0; a < v.block_dim; ++a)
        trace += v.at(a, a);
    if ((chi - trace).max_abs() > tol.alg)
        throw FormulaMismatch("character formula disagrees with the matrix trace");
    return chi;
}

int mor_dim_classes(const MatchedPair &mp, const RepClass &a, const RepClass &b,
                    const Tolerances &tol) {
    AlgebraElement chi_a = character_of(mp, a, tol);
    AlgebraElement chi_b = character_of(mp, b, tol);
    Complex pairing = haar(multiply(chi_a, adjoint(chi_b)));
    long long route1 = std::llround(pairing.real());
    if (std::abs(pairing.real() - static_cast<double>(route1)) >= tol.integer ||
        std::abs(pairing.imag()) >= tol.integer)
        throw NonIntegral("character pairing of classes is not integral");

    int route2 = 0;
    if (b.od->in_orbit(a.gamma)) {
        const Subgroup &sa = a.od->stabilizer;
        const Subgroup &sb = b.od->stabilizer;
        std::vector<int> phi(sa.order());
        for (int i = 0; i < sa.order(); ++i)
            phi[i] = sb.from_parent(psi(mp, *b.od, a.gamma, a.gamma, sa.to_parent(i)));
        UnitaryRep w = transport(b.u, sa.group, phi);
        route2 = mor_dim_char(a.u, w, tol);
    }
    if (route1 != route2)
        throw FormulaMismatch("character pairing " + std::to_string(route1) +
                              " vs transported Mor dimension " + std::to_string(route2));
    return route2;
}

int mor_dim_gns(const BicrossedRep &v, const BicrossedRep &w) {
    const Eigen::Index n = static_cast<Eigen::Index>(w.block_dim) * v.block_dim;
    Matrix e(n, n);
    for (int i = 0; i < w.block_dim; ++i)
        for (int j = 0; j < v.block_dim; ++j)
            for (int k = 0; k < w.block_dim; ++k)
                for (int l = 0; l < v.block_dim; ++l)
                    e(i * v.block_dim + j, k * v.block_dim + l) =
                        haar(multiply(w.at(i, k), adjoint(v.at(j, l))));
    Eigen::SelfAdjointEigenSolver<Matrix> es((e + e.adjoint()) / 2.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (es.eigenvalues()(i) > 0.5)
            ++rank;
    return rank;
}

RepClass contragredient_class(const MatchedPair &mp, const RepClass &cls,
                              const Tolerances &tol) {
    const int gi = mp.gamma.inv(cls.gamma);
    RepClass out;
    out.gamma = gi;
    out.od = std::make_shared<OrbitData>(orbit_data(mp, gi));
    const Subgroup &si = out.od->stabilizer;
    const Subgroup &s = cls.od->stabilizer;
    std::vector<int> phi(si.order()); // alpha_{gamma^-1}: G_{gamma^-1} -> G_gamma
    for (int i = 0; i < si.order(); ++i)
        phi[i] = s.from_parent(mp.alpha[gi][si.to_parent(i)]);
    out.u = transport(contragredient(cls.u), si.group, phi);

    AlgebraElement chi_in = character_of(mp, cls, tol);
    AlgebraElement chi_out = character_of(mp, out, tol);
    if ((chi_out - adjoint(chi_in)).max_abs() > tol.alg)
        throw FormulaMismatch("contragredient character is not the adjoint");
    return out;
}

std::vector<IrrClass> irr_table(const MatchedPair &mp, unsigned long long seed,
                                const Tolerances &tol) {
    std::vector<IrrClass> table;
    for (OrbitData &od : all_orbits(mp)) {
        auto od_ptr = std::make_shared<OrbitData>(std::move(od));
        IrrepTable stab_irreps = irreps(od_ptr->stabilizer.group, seed, tol);
        for (int x = 0; x < stab_irreps.size(); ++x) {
            IrrClass c;
            c.cls.gamma = od_ptr->rep;
            c.cls.od = od_ptr;
            c.cls.u = stab_irreps.irreps[x];
            c.x_index = x;
            c.dim = static_cast<int>(od_ptr->orbit.size()) * c.cls.u.dim;
            c.character = character_of(mp, c.cls, tol);
            table.push_back(std::move(c));
        }
    }
    long long dimsq = 0;
    for (const IrrClass &c : table)
        dimsq += static_cast<long long>(c.dim) * c.dim;
    if (dimsq != static_cast<long long>(mp.gamma.order()) * mp.g.order())
        throw CompletenessFailed("sum of squared dims is " + std::to_string(dimsq) +
                                 ", expected " +
                                 std::to_string(mp.gamma.order() * mp.g.order()));
    return table;
}

int find_class(const MatchedPair &mp, const std::vector<IrrClass> &table,
               const RepClass &cls, const Tolerances &tol) {
    for (size_t i = 0; i < table.size(); ++i)
        if (mor_dim_classes(mp, table[i].cls, cls, tol) > 0)
            return static_cast<int>(i);
    throw std::runtime_error("class not found in the irreducible table");
}

} // namespace bcp
