#include "bcp/length.hpp"

#include <cmath>
#include <deque>
#include <sstream>

namespace bcp {

namespace {

constexpr double kEq = 1e-9;

int orbit_pos(const OrbitData &od, int r) {
    return static_cast<int>(std::lower_bound(od.orbit.begin(), od.orbit.end(), r) -
                            od.orbit.begin());
}

std::string fmt(const char *axiom, std::initializer_list<int> witness) {
    std::ostringstream os;
    os << axiom << " at (";
    bool first = true;
    for (int w : witness) {
        if (!first)
            os << ", ";
        os << w;
        first = false;
    }
    os << ")";
    return os.str();
}

bool contains_class(const MatchedPair &mp, const IrrClass &z, const IrrClass &x,
                    const IrrClass &y) {
    Complex n = haar(multiply(adjoint(z.character),
                              multiply(x.character, y.character)));
    return n.real() > 0.5;
}

/// u o psi^{gamma0}_{r,r} as a class datum over r, for a class with orbit
/// representative gamma0.
RepClass transported_class(const MatchedPair &mp, const RepClass &cls, int r) {
    OrbitData od_r = orbit_data(mp, r);
    std::vector<Matrix> mats(od_r.stabilizer.order());
    for (int j = 0; j < od_r.stabilizer.order(); ++j)
        mats[j] = cls.u.at(cls.od->stabilizer.from_parent(
            psi(mp, *cls.od, r, r, od_r.stabilizer.to_parent(j))));
    return make_class(mp, r, std::move(mats));
}

bool is_trivial_u(const RepClass &cls) {
    if (cls.u.dim != 1)
        return false;
    for (const Matrix &m : cls.u.matrices)
        if (std::abs(m(0, 0) - 1.0) > kEq)
            return false;
    return true;
}

} // namespace

LengthFunction zero_length(int n) {
    return {std::vector<double>(static_cast<size_t>(n), 0.0)};
}

LengthFunction word_length(const FiniteGroup &g, std::vector<int> generators) {
    const size_t n = static_cast<size_t>(g.order());
    for (size_t i = 0, m = generators.size(); i < m; ++i)
        generators.push_back(g.inv(generators[i]));
    LengthFunction l{std::vector<double>(n, -1.0)};
    l.values[0] = 0.0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int s : generators) {
            int b = g.mul(a, s);
            if (l.values[b] < 0.0) {
                l.values[b] = l.values[a] + 1.0;
                queue.push_back(b);
            }
        }
    }
    for (double v : l.values)
        if (v < 0.0)
            throw NotGenerating("generating set does not generate the group");
    return l;
}

LengthReport validate_length_group(const LengthFunction &l, const FiniteGroup &g) {
    LengthReport rep;
    if (l.size() != g.order()) {
        rep.violations.push_back("domain size mismatch");
        return rep;
    }
    if (std::abs(l.at(0)) > kEq)
        rep.violations.push_back("l(e) != 0");
    for (int a = 0; a < g.order(); ++a) {
        if (l.at(a) < -kEq)
            rep.violations.push_back(fmt("negative value", {a}));
        if (std::abs(l.at(g.inv(a)) - l.at(a)) > kEq)
            rep.violations.push_back(fmt("inverse symmetry", {a}));
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (l.at(g.mul(a, b)) > l.at(a) + l.at(b) + kEq)
                rep.violations.push_back(fmt("triangle inequality", {a, b}));
    return rep;
}

LengthReport validate_length_irr(const LengthFunction &l, const IrrepTable &t,
                                 const Tolerances &tol) {
    LengthReport rep;
    if (l.size() != t.size()) {
        rep.violations.push_back("domain size mismatch");
        return rep;
    }
    const int triv = identify_irrep(trivial_rep(*t.group), t, tol);
    if (std::abs(l.at(triv)) > kEq)
        rep.violations.push_back("l(trivial) != 0");
    for (int x = 0; x < t.size(); ++x) {
        if (l.at(x) < -kEq)
            rep.violations.push_back(fmt("negative value", {x}));
        int bar = identify_irrep(contragredient(t.irreps[x]), t, tol);
        if (std::abs(l.at(bar) - l.at(x)) > kEq)
            rep.violations.push_back(fmt("contragredient symmetry", {x}));
    }
    for (int x = 0; x < t.size(); ++x)
        for (int y = 0; y < t.size(); ++y) {
            UnitaryRep prod = tensor_rep(t.irreps[x], t.irreps[y]);
            for (int z = 0; z < t.size(); ++z)
                if (mor_dim_char(t.irreps[z], prod, tol) > 0 &&
                    l.at(z) > l.at(x) + l.at(y) + kEq)
                    rep.violations.push_back(fmt("triangle inequality", {z, x, y}));
        }
    return rep;
}

LengthReport validate_length_classes(const LengthFunction &l, const MatchedPair &mp,
                                     const std::vector<IrrClass> &table,
                                     const Tolerances &tol) {
    LengthReport rep;
    const int n = static_cast<int>(table.size());
    if (l.size() != n) {
        rep.violations.push_back("domain size mismatch");
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        if (l.at(i) < -kEq)
            rep.violations.push_back(fmt("negative value", {i}));
        if ((table[i].character - AlgebraElement::unit(mp)).max_abs() < tol.alg &&
            std::abs(l.at(i)) > kEq)
            rep.violations.push_back("l(trivial class) != 0");
        int bar = find_class(mp, table, contragredient_class(mp, table[i].cls), tol);
        if (std::abs(l.at(bar) - l.at(i)) > kEq)
            rep.violations.push_back(fmt("contragredient symmetry", {i}));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (contains_class(mp, table[z], table[x], table[y]) &&
                    l.at(z) > l.at(x) + l.at(y) + kEq)
                    rep.violations.push_back(fmt("triangle inequality", {z, x, y}));
    return rep;
}

double eval_length(const MatchedPair &mp, const std::vector<IrrClass> &table,
                   const MatchedLengthPair &pair, const RepClass &cls,
                   const Tolerances &tol) {
    return pair.family.at(find_class(mp, table, cls, tol));
}

LengthReport validate_matched_lengths(const MatchedPair &mp,
                                      const std::vector<IrrClass> &table,
                                      const IrrepTable &gt,
                                      const MatchedLengthPair &pair,
                                      const Tolerances &tol) {
    LengthReport rep = validate_length_group(pair.l_gamma, mp.gamma);
    const int n = static_cast<int>(table.size());
    if (pair.family.size() != n || pair.l_g.size() != gt.size()) {
        rep.violations.push_back("family/l_G domain size mismatch");
        return rep;
    }
    for (int g = 0; g < mp.g.order(); ++g)
        for (int c = 0; c < mp.gamma.order(); ++c)
            if (std::abs(pair.l_gamma.at(mp.beta[g][c]) - pair.l_gamma.at(c)) > kEq)
                rep.violations.push_back(fmt("beta invariance of l_Gamma", {c, g}));

    for (int i = 0; i < n; ++i) {
        const RepClass &cls = table[i].cls;
        // (i): l_1 = l_G and l_gamma(trivial) = l_Gamma(gamma)
        if (cls.gamma == 0) {
            std::vector<int> phi(mp.g.order());
            for (int g = 0; g < mp.g.order(); ++g)
                phi[g] = cls.od->stabilizer.from_parent(g);
            int x = identify_irrep(transport(cls.u, mp.g, phi), gt, tol);
            if (std::abs(pair.family.at(i) - pair.l_g.at(x)) > kEq)
                rep.violations.push_back(fmt("(i) l_1 = l_G", {i}));
        }
        if (is_trivial_u(cls) &&
            std::abs(pair.family.at(i) - pair.l_gamma.at(cls.gamma)) > kEq)
            rep.violations.push_back(fmt("(i) l_gamma(eps) = l_Gamma(gamma)", {i}));
        // (ii): invariance along the orbit
        for (int r : cls.od->orbit)
            if (std::abs(eval_length(mp, table, pair, transported_class(mp, cls, r),
                                     tol) -
                         pair.family.at(i)) > kEq)
                rep.violations.push_back(fmt("(ii) orbit transport", {i, r}));
        // (iii): contragredient
        if (std::abs(eval_length(mp, table, pair, contragredient_class(mp, cls, tol),
                                 tol) -
                     pair.family.at(i)) > kEq)
            rep.violations.push_back(fmt("(iii) contragredient", {i}));
    }
    // (iv): subadditivity against twisted tensor containment
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                bool contained = false;
                for (int r : table[k].cls.od->orbit) {
                    TwistedTensorRep tt;
                    try {
                        tt = twisted_tensor(mp, table[x].cls, table[y].cls, r);
                    } catch (const PointNotInProductOfOrbits &) {
                        continue;
                    }
                    RepClass at_r = transported_class(mp, table[k].cls, r);
                    if (mor_dim_char(at_r.u, tt.rep, tol) > 0) {
                        contained = true;
                        break;
                    }
                }
                if (contained && pair.family.at(k) >
                                     pair.family.at(x) + pair.family.at(y) + kEq)
                    rep.violations.push_back(fmt("(iv) subadditivity", {k, x, y}));
            }
    return rep;
}

MatchedLengthPair derive_pair_from_length(const MatchedPair &mp,
                                          const std::vector<IrrClass> &table,
                                          const IrrepTable &gt,
                                          const LengthFunction &l,
                                          const Tolerances &tol) {
    MatchedLengthPair out;
    out.family = l;
    out.l_gamma.values.resize(mp.gamma.order());
    for (int c = 0; c < mp.gamma.order(); ++c) {
        OrbitData od = orbit_data(mp, c);
        std::vector<Matrix> mats(od.stabilizer.order(), Matrix::Ones(1, 1));
        out.l_gamma.values[c] =
            l.at(find_class(mp, table, make_class(mp, c, std::move(mats)), tol));
    }
    out.l_g.values.resize(gt.size());
    OrbitData od_e = orbit_data(mp, 0);
    for (int x = 0; x < gt.size(); ++x) {
        std::vector<Matrix> mats(od_e.stabilizer.order());
        for (int j = 0; j < od_e.stabilizer.order(); ++j)
            mats[j] = gt.irreps[x].at(od_e.stabilizer.to_parent(j));
        out.l_g.values[x] =
            l.at(find_class(mp, table, make_class(mp, 0, std::move(mats)), tol));
    }
    return out;
}

BuiltLengths build_lengths_from_pair(const MatchedPair &mp,
                                     const std::vector<IrrClass> &table,
                                     const MatchedLengthPair &pair) {
    (void)mp;
    BuiltLengths out;
    const int n = static_cast<int>(table.size());
    out.l_prime.values.resize(n);
    out.l_plain = pair.family;
    out.l_tilde.values.resize(n);
    for (int i = 0; i < n; ++i) {
        out.l_prime.values[i] = pair.l_gamma.at(table[i].cls.gamma);
        out.l_tilde.values[i] = out.l_prime.values[i] + out.l_plain.values[i];
    }
    return out;
}

DualElement DualElement::p(int x, int dim) {
    DualElement a;
    a.blocks[x] = Matrix::Identity(dim, dim);
    return a;
}

DualElement gaussian_dual(const std::vector<std::pair<int, int>> &support,
                          std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DualElement a;
    for (auto [x, d] : support) {
        Matrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m(i, j) = Complex(gauss(rng), gauss(rng));
        a.blocks[x] = std::move(m);
    }
    return a;
}

DualContext make_dual_context(const MatchedPair &mp, unsigned long long seed,
                              const Tolerances &tol) {
    DualContext ctx;
    ctx.mp = &mp;
    ctx.classes = irr_table(mp, seed, tol);
    for (size_t i = 0; i < ctx.classes.size(); ++i) {
        const IrrClass &c = ctx.classes[i];
        ctx.reps.push_back(build_rep(mp, c.cls));
        if (!ctx.classes_of.count(c.cls.gamma))
            ctx.orbit_reps.push_back(c.cls.gamma);
        ctx.classes_of[c.cls.gamma].push_back(static_cast<int>(i));
    }
    return ctx;
}

IrrepTable stabilizer_table(const DualContext &ctx, int gamma) {
    IrrepTable t;
    for (int i : ctx.classes_of.at(gamma)) {
        t.group = &ctx.classes[i].cls.od->stabilizer.group;
        t.irreps.push_back(ctx.classes[i].cls.u);
    }
    return t;
}

AlgebraElement fourier(const DualContext &ctx, const DualElement &a) {
    AlgebraElement out(*ctx.mp);
    for (const auto &[x, m] : a.blocks) {
        const BicrossedRep &v = ctx.reps[x];
        const double d = static_cast<double>(v.block_dim);
        for (int row = 0; row < v.block_dim; ++row)
            for (int col = 0; col < v.block_dim; ++col)
                out += (d * m(col, row)) * v.at(row, col);
    }
    return out;
}

double sobolev0(const DualContext &ctx, const DualElement &a) {
    double sq = 0.0;
    for (const auto &[x, m] : a.blocks)
        sq += ctx.reps[x].block_dim * m.squaredNorm();
    return std::sqrt(sq);
}

Vector fourier_group(const IrrepTable &t, const DualElement &a) {
    Vector f = Vector::Zero(t.group->order());
    for (const auto &[x, m] : a.blocks) {
        const UnitaryRep &u = t.irreps[x];
        for (int g = 0; g < t.group->order(); ++g)
            f(g) += static_cast<double>(u.dim) * (m * u.at(g)).trace();
    }
    return f;
}

double sobolev0_group(const IrrepTable &t, const DualElement &a) {
    double sq = 0.0;
    for (const auto &[x, m] : a.blocks)
        sq += t.irreps[x].dim * m.squaredNorm();
    return std::sqrt(sq);
}

DualElement lift_tilde(const MatchedPair &mp, int gamma, const IrrepTable &stab_t,
                       const IrrepTable &g_t, const DualElement &a,
                       unsigned long long seed, const Tolerances &tol) {
    DualElement out;
    for (const auto &[x, m] : a.blocks) {
        RepClass cls = make_class(mp, gamma, stab_t.irreps[x].matrices);
        UnitaryRep ind = induce(mp, cls);
        DecompositionResult dec = decompose(ind, g_t, seed, tol);
        const int dx = cls.u.dim;
        const int pg = orbit_pos(*cls.od, gamma);
        Matrix big = Matrix::Zero(ind.dim, ind.dim);
        big.block(pg * dx, pg * dx, dx, dx) = m;
        for (const auto &comp : dec.components) {
            const int dy = g_t.irreps[comp.irrep_index].dim;
            if (!out.blocks.count(comp.irrep_index))
                out.blocks[comp.irrep_index] = Matrix::Zero(dy, dy);
            for (const Matrix &s : comp.isometries)
                out.blocks[comp.irrep_index] +=
                    (static_cast<double>(dx) / dy) * (s.adjoint() * big * s);
        }
    }
    return out;
}

double lift_identity_residual(const MatchedPair &mp, int gamma,
                              const IrrepTable &stab_t, const IrrepTable &g_t,
                              const DualElement &a, const DualElement &lifted) {
    OrbitData od = orbit_data(mp, gamma);
    Vector fs = fourier_group(stab_t, a);
    Vector fg = fourier_group(g_t, lifted);
    double worst = 0.0;
    for (int g = 0; g < mp.g.order(); ++g) {
        Complex lhs = 0, rhs = 0;
        if (mp.beta[g][gamma] == gamma) {
            lhs = fs(od.stabilizer.from_parent(g));
            rhs = fg(g);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

std::vector<double> growth_series(const LengthFunction &l,
                                  const std::vector<IrrClass> &table) {
    double maxl = 0.0;
    for (double v : l.values)
        maxl = std::max(maxl, v);
    std::vector<double> terms(static_cast<size_t>(std::floor(maxl)) + 1, 0.0);
    for (size_t i = 0; i < table.size(); ++i) {
        const int k = static_cast<int>(std::floor(l.at(static_cast<int>(i))));
        terms[k] += static_cast<double>(table[i].dim) * table[i].dim;
    }
    return terms;
}

RdResult rd_ratio(const DualContext &ctx, const LengthFunction &l, int k, int trials,
                  unsigned long long seed, const Tolerances &tol) {
    (void)tol;
    std::vector<std::pair<int, int>> window;
    double cumulative = 0.0;
    for (int i = 0; i < l.size(); ++i) {
        if (l.at(i) >= k && l.at(i) < k + 1)
            window.emplace_back(i, ctx.reps[i].block_dim);
        if (l.at(i) < k + 1)
            cumulative += static_cast<double>(ctx.reps[i].block_dim) *
                          ctx.reps[i].block_dim;
    }
    if (window.empty())
        throw EmptyWindow("no class with length in [k, k+1)");
    RdResult out;
    out.bound = 2.0 * std::sqrt(cumulative);
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + static_cast<unsigned long long>(t));
        DualElement a = gaussian_dual(window, rng);
        out.sampled_max = std::max(
            out.sampled_max, operator_norm(fourier(ctx, a)) / sobolev0(ctx, a));
    }
    return out;
}

DualElement pi_component(const DualContext &ctx, const DualElement &a, int gamma,
                         int r, int s) {
    DualElement out;
    const auto &idx = ctx.classes_of.at(gamma);
    for (size_t x = 0; x < idx.size(); ++x) {
        auto it = a.blocks.find(idx[x]);
        if (it == a.blocks.end())
            continue;
        const RepClass &cls = ctx.classes[idx[x]].cls;
        const int du = cls.u.dim;
        Matrix sub = it->second.block(orbit_pos(*cls.od, r) * du,
                                      orbit_pos(*cls.od, s) * du, du, du);
        if (sub.cwiseAbs().maxCoeff() > 0.0)
            out.blocks[static_cast<int>(x)] = std::move(sub);
    }
    return out;
}

PiCheckResult pi_decomposition_check(const DualContext &ctx, const DualElement &a) {
    const MatchedPair &mp = *ctx.mp;
    PiCheckResult out;

    AlgebraElement lhs = fourier(ctx, a);
    AlgebraElement rhs(mp);
    double norm_rhs = 0.0;
    for (int gamma : ctx.orbit_reps) {
        IrrepTable st = stabilizer_table(ctx, gamma);
        const OrbitData &od = *ctx.classes[ctx.classes_of.at(gamma)[0]].cls.od;
        const double osz = static_cast<double>(od.orbit.size());
        for (int r : od.orbit)
            for (int s : od.orbit) {
                DualElement comp = pi_component(ctx, a, gamma, s, r);
                double ns = sobolev0_group(st, pi_component(ctx, a, gamma, r, s));
                norm_rhs += osz * ns * ns;
                if (comp.empty())
                    continue;
                Vector f = fourier_group(st, comp);
                for (int g = 0; g < mp.g.order(); ++g)
                    if (mp.beta[g][r] == s)
                        rhs.coeff(r, g) +=
                            osz * f(od.stabilizer.from_parent(psi(mp, od, r, s, g)));
            }
    }
    out.fourier_residual = (lhs - rhs).max_abs();
    const double n0 = sobolev0(ctx, a);
    out.norm_residual = std::abs(n0 * n0 - norm_rhs);
    return out;
}

LengthReport polynomial_bounds_check(const DualContext &ctx, const IrrepTable &gt,
                                     const MatchedLengthPair &pair, double c,
                                     double n, int trials,
                                     unsigned long long seed,
                                     const Tolerances &tol) {
    (void)tol;
    LengthReport rep;
    // (1) |F_G(a)| <= c (k+1)^n |a|_{G,0} on sampled window elements
    double maxg = 0.0;
    for (double v : pair.l_g.values)
        maxg = std::max(maxg, v);
    for (int k = 0; k <= static_cast<int>(std::floor(maxg)); ++k) {
        std::vector<std::pair<int, int>> window;
        for (int x = 0; x < gt.size(); ++x)
            if (pair.l_g.at(x) >= k && pair.l_g.at(x) < k + 1)
                window.emplace_back(x, gt.irreps[x].dim);
        if (window.empty())
            continue;
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(seed + static_cast<unsigned long long>(t));
            DualElement a = gaussian_dual(window, rng);
            double sup = fourier_group(gt, a).cwiseAbs().maxCoeff();
            if (sup > c * std::pow(k + 1.0, n) * sobolev0_group(gt, a) + kEq)
                rep.violations.push_back(fmt("Fourier bound", {k, t}));
        }
    }
    // (2) |orbit| dim(x) <= c (l_Gamma + l_gamma + 1)^n
    for (size_t i = 0; i < ctx.classes.size(); ++i) {
        const IrrClass &cl = ctx.classes[i];
        const double len =
            pair.l_gamma.at(cl.cls.gamma) + pair.family.at(static_cast<int>(i));
        if (cl.dim > c * std::pow(len + 1.0, n) + kEq)
            rep.violations.push_back(fmt("dimension bound", {static_cast<int>(i)}));
    }
    // (3) cumulative sum of dim(x)^2 <= c^2 (k + l_Gamma + 1)^{2n}
    for (int gamma : ctx.orbit_reps) {
        double maxf = 0.0;
        for (int i : ctx.classes_of.at(gamma))
            maxf = std::max(maxf, pair.family.at(i));
        for (int k = 0; k <= static_cast<int>(std::floor(maxf)); ++k) {
            double sum = 0.0;
            for (int i : ctx.classes_of.at(gamma))
                if (pair.family.at(i) < k + 1) {
                    const int du = ctx.classes[i].cls.u.dim;
                    sum += static_cast<double>(du) * du;
                }
            const double bound =
                c * c * std::pow(k + pair.l_gamma.at(gamma) + 1.0, 2.0 * n);
            if (sum > bound + kEq)
                rep.violations.push_back(fmt("growth bound", {gamma, k}));
        }
    }
    return rep;
}

} // namespace bcp
