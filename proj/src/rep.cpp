#include "bcp/rep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace bcp {

double rep_residual(const UnitaryRep &rep) {
    const FiniteGroup &g = *rep.group;
    double worst = 0.0;
    const Matrix id = Matrix::Identity(rep.dim, rep.dim);
    worst = std::max(worst, (rep.at(0) - id).cwiseAbs().maxCoeff());
    for (int a = 0; a < g.order(); ++a) {
        worst = std::max(worst,
                         (rep.at(a) * rep.at(a).adjoint() - id).cwiseAbs().maxCoeff());
        for (int b = 0; b < g.order(); ++b)
            worst = std::max(worst, (rep.at(g.mul(a, b)) - rep.at(a) * rep.at(b))
                                        .cwiseAbs()
                                        .maxCoeff());
    }
    return worst;
}

Vector character(const UnitaryRep &rep) {
    Vector chi(rep.group->order());
    for (int a = 0; a < rep.group->order(); ++a)
        chi(a) = rep.at(a).trace();
    return chi;
}

UnitaryRep regular_rep(const FiniteGroup &g) {
    UnitaryRep rep;
    rep.group = &g;
    rep.dim = g.order();
    rep.matrices.assign(g.order(), Matrix::Zero(g.order(), g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < g.order(); ++x)
            rep.matrices[a](g.mul(a, x), x) = 1.0;
    return rep;
}

UnitaryRep trivial_rep(const FiniteGroup &g) {
    UnitaryRep rep;
    rep.group = &g;
    rep.dim = 1;
    rep.matrices.assign(g.order(), Matrix::Ones(1, 1));
    return rep;
}

namespace {

Matrix random_hermitian(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = Complex(dist(rng), dist(rng));
    return (m + m.adjoint()) / 2.0;
}

/// Average X over the rep: (1/|G|) sum U(g) X U(g)*.
Matrix equivariant_average(const UnitaryRep &rep, const Matrix &x) {
    Matrix out = Matrix::Zero(rep.dim, rep.dim);
    for (const Matrix &u : rep.matrices)
        out += u * x * u.adjoint();
    return out / static_cast<double>(rep.matrices.size());
}

UnitaryRep sub_rep(const UnitaryRep &rep, const Matrix &isometry) {
    UnitaryRep out;
    out.group = rep.group;
    out.dim = static_cast<int>(isometry.cols());
    out.matrices.reserve(rep.matrices.size());
    for (const Matrix &u : rep.matrices)
        out.matrices.push_back(isometry.adjoint() * u * isometry);
    return out;
}

bool is_irreducible(const UnitaryRep &rep, const Tolerances &tol) {
    return mor_dim_char(rep, rep, tol) == 1;
}

/// Splits one invariant subspace along the eigenspaces of an averaged random
/// Hermitian matrix; recurses until every block is irreducible.
void split_recursive(const UnitaryRep &rep, std::mt19937_64 &rng, const Tolerances &tol,
                     std::vector<UnitaryRep> &out) {
    if (rep.dim == 0)
        return;
    if (rep.dim == 1 || is_irreducible(rep, tol)) {
        out.push_back(rep);
        return;
    }
    for (int attempt = 0; attempt < kIrrepRetryBudget; ++attempt) {
        Matrix h = equivariant_average(rep, random_hermitian(rep.dim, rng));
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        const Eigen::VectorXd ev = es.eigenvalues();

        std::vector<std::pair<int, int>> clusters; // [begin, end) in eigenvalue order
        int begin = 0;
        for (int i = 1; i <= rep.dim; ++i) {
            if (i == rep.dim || ev(i) - ev(i - 1) > tol.split) {
                clusters.emplace_back(begin, i);
                begin = i;
            }
        }
        if (clusters.size() < 2)
            continue; // degenerate draw, retry
        for (auto [b, e] : clusters)
            split_recursive(sub_rep(rep, es.eigenvectors().middleCols(b, e - b)), rng,
                            tol, out);
        return;
    }
    throw SplitFailed("could not split a reducible block within the retry budget");
}

/// Character values rounded to a stable grid for ordering purposes.
std::vector<std::pair<long long, long long>> char_key(const UnitaryRep &rep,
                                                      const std::vector<std::vector<int>> &classes) {
    Vector chi = character(rep);
    std::vector<std::pair<long long, long long>> key;
    key.reserve(classes.size());
    for (const auto &cls : classes) {
        Complex v = chi(cls.front());
        key.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
    }
    return key;
}

} // namespace

IrrepTable irreps(const FiniteGroup &g, unsigned long long seed, const Tolerances &tol) {
    if (g.order() > kGroupOrderCap)
        throw std::invalid_argument("group order exceeds the configured cap");
    std::mt19937_64 rng(seed);
    std::vector<UnitaryRep> pieces;
    split_recursive(regular_rep(g), rng, tol, pieces);

    // The regular rep contains every irreducible; dedupe up to equivalence.
    std::vector<UnitaryRep> distinct;
    for (UnitaryRep &u : pieces) {
        bool dup = false;
        for (const UnitaryRep &v : distinct)
            if (u.dim == v.dim && mor_dim_char(u, v, tol) > 0) {
                dup = true;
                break;
            }
        if (!dup)
            distinct.push_back(std::move(u));
    }

    long long dimsq = 0;
    for (const UnitaryRep &u : distinct)
        dimsq += static_cast<long long>(u.dim) * u.dim;
    if (dimsq != g.order())
        throw SplitFailed("irrep table incomplete: sum of squared dims mismatch");

    const auto classes = conjugacy_classes(g);
    std::stable_sort(distinct.begin(), distinct.end(),
                     [&](const UnitaryRep &a, const UnitaryRep &b) {
                         if (a.dim != b.dim)
                             return a.dim < b.dim;
                         return char_key(a, classes) < char_key(b, classes);
                     });

    IrrepTable table;
    table.group = &g;
    table.irreps = std::move(distinct);
    return table;
}

int mor_dim_char(const UnitaryRep &u, const UnitaryRep &v, const Tolerances &tol) {
    const FiniteGroup &g = *u.group;
    Vector cu = character(u), cv = character(v);
    Complex acc = 0;
    for (int a = 0; a < g.order(); ++a)
        acc += cu(a) * std::conj(cv(a));
    acc /= static_cast<double>(g.order());
    long long n = std::llround(acc.real());
    if (std::abs(acc.real() - static_cast<double>(n)) >= tol.integer ||
        std::abs(acc.imag()) >= tol.integer)
        throw NonIntegral("character pairing is not integral");
    return static_cast<int>(n);
}

std::vector<Matrix> intertwiner_basis(const UnitaryRep &u, const UnitaryRep &v,
                                      const Tolerances &tol) {
    const FiniteGroup &g = *u.group;
    const int du = u.dim, dv = v.dim;
    // vec(T) with T dv x du, column-major: v(g) T - T u(g) = 0 becomes
    // (u(g)^T kron I - I kron v(g)) vec(T) = 0 ... assembled per element.
    Matrix stacked(static_cast<Eigen::Index>(g.order()) * dv * du, dv * du);
    stacked.setZero();
    for (int a = 0; a < g.order(); ++a) {
        const Matrix &ua = u.at(a);
        const Matrix &va = v.at(a);
        for (int j = 0; j < du; ++j)
            for (int i = 0; i < dv; ++i) {
                Eigen::Index row = static_cast<Eigen::Index>(a) * dv * du + j * dv + i;
                // (v(a) T)(i,j) = sum_k v(a)(i,k) T(k,j)
                for (int k = 0; k < dv; ++k)
                    stacked(row, j * dv + k) += va(i, k);
                // (T u(a))(i,j) = sum_k T(i,k) u(a)(k,j)
                for (int k = 0; k < du; ++k)
                    stacked(row, k * dv + i) -= ua(k, j);
            }
    }
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
    const auto &sing = svd.singularValues();
    std::vector<Matrix> basis;
    for (Eigen::Index k = 0; k < sing.size(); ++k) {
        if (sing(k) < 1e-8) {
            Vector t = svd.matrixV().col(k);
            basis.push_back(Eigen::Map<const Matrix>(t.data(), dv, du));
        }
    }
    (void)tol;
    return basis;
}

DecompositionResult decompose(const UnitaryRep &rep, const IrrepTable &table,
                              unsigned long long seed, const Tolerances &tol) {
    (void)seed;
    DecompositionResult res;
    for (int yi = 0; yi < table.size(); ++yi) {
        const UnitaryRep &y = table.irreps[yi];
        int mult = mor_dim_char(y, rep, tol);
        if (mult == 0)
            continue;
        std::vector<Matrix> raw = intertwiner_basis(y, rep, tol);
        if (static_cast<int>(raw.size()) != mult)
            throw NonIntegral("intertwiner count disagrees with character multiplicity");

        // For irreducible y, T_a* T_b is a scalar; Gram-Schmidt in that
        // scalar inner product yields isometries with orthogonal ranges.
        std::vector<Matrix> isos;
        for (const Matrix &t : raw) {
            Matrix s = t;
            for (const Matrix &prev : isos) {
                Complex c = (prev.adjoint() * s).trace() / static_cast<double>(y.dim);
                s -= prev * c;
            }
            double norm = std::sqrt(std::abs((s.adjoint() * s).trace().real()) / y.dim);
            s /= norm;
            isos.push_back(std::move(s));
        }
        res.components.push_back({yi, std::move(isos)});
    }
    return res;
}

UnitaryRep transport(const UnitaryRep &u, const FiniteGroup &k, const std::vector<int> &phi) {
    const FiniteGroup &h = *u.group;
    if (static_cast<int>(phi.size()) != k.order() || k.order() != h.order())
        throw NotHomomorphism("phi has wrong size");
    std::vector<char> hit(h.order(), 0);
    for (int y : phi) {
        if (y < 0 || y >= h.order() || hit[y])
            throw NotHomomorphism("phi is not a bijection");
        hit[y] = 1;
    }
    for (int a = 0; a < k.order(); ++a)
        for (int b = 0; b < k.order(); ++b)
            if (phi[k.mul(a, b)] != h.mul(phi[a], phi[b]))
                throw NotHomomorphism("phi not multiplicative at (" + std::to_string(a) +
                                      ", " + std::to_string(b) + ")");
    UnitaryRep out;
    out.group = &k;
    out.dim = u.dim;
    out.matrices.reserve(k.order());
    for (int a = 0; a < k.order(); ++a)
        out.matrices.push_back(u.at(phi[a]));
    return out;
}

UnitaryRep contragredient(const UnitaryRep &u) {
    UnitaryRep out;
    out.group = u.group;
    out.dim = u.dim;
    out.matrices.reserve(u.matrices.size());
    for (const Matrix &m : u.matrices)
        out.matrices.push_back(m.conjugate());
    return out;
}

UnitaryRep restrict_rep(const UnitaryRep &u, const Subgroup &h) {
    UnitaryRep out;
    out.group = &h.group;
    out.dim = u.dim;
    out.matrices.reserve(h.order());
    for (int a = 0; a < h.order(); ++a)
        out.matrices.push_back(u.at(h.to_parent(a)));
    return out;
}

UnitaryRep tensor_rep(const UnitaryRep &u, const UnitaryRep &v) {
    UnitaryRep out;
    out.group = u.group;
    out.dim = u.dim * v.dim;
    out.matrices.reserve(u.matrices.size());
    for (size_t a = 0; a < u.matrices.size(); ++a) {
        Matrix m(out.dim, out.dim);
        for (int i = 0; i < u.dim; ++i)
            for (int j = 0; j < u.dim; ++j)
                m.block(i * v.dim, j * v.dim, v.dim, v.dim) = u.matrices[a](i, j) * v.matrices[a];
        out.matrices.push_back(std::move(m));
    }
    return out;
}

UnitaryRep direct_sum(const UnitaryRep &u, const UnitaryRep &v) {
    UnitaryRep out;
    out.group = u.group;
    out.dim = u.dim + v.dim;
    out.matrices.reserve(u.matrices.size());
    for (size_t a = 0; a < u.matrices.size(); ++a) {
        Matrix m = Matrix::Zero(out.dim, out.dim);
        m.topLeftCorner(u.dim, u.dim) = u.matrices[a];
        m.bottomRightCorner(v.dim, v.dim) = v.matrices[a];
        out.matrices.push_back(std::move(m));
    }
    return out;
}

int identify_irrep(const UnitaryRep &u, const IrrepTable &table, const Tolerances &tol) {
    for (int i = 0; i < table.size(); ++i)
        if (table.irreps[i].dim == u.dim && mor_dim_char(u, table.irreps[i], tol) > 0)
            return i;
    throw std::runtime_error("irrep not found in table");
}

} // namespace bcp
