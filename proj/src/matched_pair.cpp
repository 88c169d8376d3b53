#include "bcp/matched_pair.hpp"

#include <algorithm>

namespace bcp {

namespace {

bool is_bijection(const std::vector<int> &f, int n) {
    if (static_cast<int>(f.size()) != n)
        return false;
    std::vector<char> hit(n, 0);
    for (int y : f) {
        if (y < 0 || y >= n || hit[y])
            return false;
        hit[y] = 1;
    }
    return true;
}

} // namespace

ValidationReport validate_matched_pair(const MatchedPair &mp) {
    ValidationReport rep;
    const int ng = mp.gamma.order();
    const int nG = mp.g.order();

    if (static_cast<int>(mp.alpha.size()) != ng || static_cast<int>(mp.beta.size()) != nG) {
        rep.violations.push_back({"table dimensions", -1, -1, -1, -1});
        return rep;
    }
    for (int c = 0; c < ng; ++c)
        if (!is_bijection(mp.alpha[c], nG))
            rep.violations.push_back({"alpha not bijective", c, -1, -1, -1});
    for (int x = 0; x < nG; ++x)
        if (!is_bijection(mp.beta[x], ng))
            rep.violations.push_back({"beta not bijective", -1, -1, x, -1});
    if (!rep.ok())
        return rep;

    // alpha homomorphism, beta antihomomorphism.
    for (int c = 0; c < ng; ++c)
        for (int m = 0; m < ng; ++m)
            for (int x = 0; x < nG; ++x)
                if (mp.alpha[mp.gamma.mul(c, m)][x] != mp.alpha[c][mp.alpha[m][x]]) {
                    rep.violations.push_back({"alpha not a homomorphism", c, m, x, -1});
                    goto alpha_done;
                }
alpha_done:
    for (int x = 0; x < nG; ++x)
        for (int y = 0; y < nG; ++y)
            for (int c = 0; c < ng; ++c)
                if (mp.beta[mp.g.mul(x, y)][c] != mp.beta[y][mp.beta[x][c]]) {
                    rep.violations.push_back({"beta not an antihomomorphism", c, -1, x, y});
                    goto beta_done;
                }
beta_done:

    // Unit relations alpha_gamma(e) = e and beta_g(e) = e.
    for (int c = 0; c < ng; ++c)
        if (mp.alpha[c][0] != 0)
            rep.violations.push_back({"alpha_gamma(e) != e", c, -1, -1, -1});
    for (int x = 0; x < nG; ++x)
        if (mp.beta[x][0] != 0)
            rep.violations.push_back({"beta_g(e) != e", -1, -1, x, -1});

    // Matched relations on all quadruples.
    for (int c = 0; c < ng; ++c)
        for (int x = 0; x < nG; ++x)
            for (int y = 0; y < nG; ++y) {
                int lhs = mp.alpha[c][mp.g.mul(x, y)];
                int rhs = mp.g.mul(mp.alpha[c][x], mp.alpha[mp.beta[x][c]][y]);
                if (lhs != rhs)
                    rep.violations.push_back({"alpha_gamma(gh) relation", c, -1, x, y});
            }
    for (int x = 0; x < nG; ++x)
        for (int c = 0; c < ng; ++c)
            for (int m = 0; m < ng; ++m) {
                int lhs = mp.beta[x][mp.gamma.mul(c, m)];
                int rhs = mp.gamma.mul(mp.beta[mp.alpha[m][x]][c], mp.beta[x][m]);
                if (lhs != rhs)
                    rep.violations.push_back({"beta_g(gamma mu) relation", c, m, x, -1});
            }
    return rep;
}

MatchedPair from_exact_factorization(const FiniteGroup &l, const Subgroup &gamma_sub,
                                     const Subgroup &g_sub) {
    const int ng = gamma_sub.order();
    const int nG = g_sub.order();
    if (ng * nG != l.order())
        throw NotExactFactorization("|Gamma| * |G| != |L|");
    for (int p : gamma_sub.elements)
        if (p != 0 && g_sub.contains(p))
            throw NotExactFactorization("Gamma and G intersect nontrivially");

    // Solve gamma * g = g' * gamma' in L; uniqueness follows from the
    // trivial intersection.
    MatchedPair mp;
    mp.gamma = gamma_sub.group;
    mp.g = g_sub.group;
    mp.alpha.assign(ng, std::vector<int>(nG, -1));
    mp.beta.assign(nG, std::vector<int>(ng, -1));
    for (int c = 0; c < ng; ++c) {
        for (int x = 0; x < nG; ++x) {
            int prod = l.mul(gamma_sub.to_parent(c), g_sub.to_parent(x));
            bool found = false;
            for (int xp = 0; xp < nG && !found; ++xp) {
                int rest = l.mul(l.inv(g_sub.to_parent(xp)), prod);
                if (gamma_sub.contains(rest)) {
                    mp.alpha[c][x] = xp;
                    mp.beta[x][c] = gamma_sub.from_parent(rest);
                    found = true;
                }
            }
            if (!found)
                throw NotExactFactorization("product does not factor as G * Gamma");
        }
    }
    return mp;
}

bool OrbitData::in_orbit(int r) const {
    return std::binary_search(orbit.begin(), orbit.end(), r);
}

OrbitData orbit_data(const MatchedPair &mp, int gamma) {
    const int nG = mp.g.order();
    OrbitData od;
    od.rep = gamma;

    std::vector<char> seen(mp.gamma.order(), 0);
    for (int x = 0; x < nG; ++x)
        seen[mp.beta[x][gamma]] = 1;
    for (int c = 0; c < mp.gamma.order(); ++c)
        if (seen[c])
            od.orbit.push_back(c);

    std::vector<int> stab_gens;
    for (int x = 0; x < nG; ++x)
        if (mp.beta[x][gamma] == gamma)
            stab_gens.push_back(x);
    od.stabilizer = subgroup_closure(mp.g, stab_gens);

    for (int r : od.orbit)
        for (int s : od.orbit)
            od.blocks[{r, s}] = {};
    for (int r : od.orbit)
        for (int x = 0; x < nG; ++x)
            od.blocks[{r, mp.beta[x][r]}].push_back(x);

    // Smallest-index preimage; the identity has index 0 so gamma(gamma) = e.
    for (int r : od.orbit)
        od.section[r] = od.blocks.at({gamma, r}).front();
    return od;
}

int psi(const MatchedPair &mp, const OrbitData &od, int r, int s, int g) {
    if (!od.in_orbit(r) || !od.in_orbit(s))
        throw OrbitMismatch("psi: point not in the orbit");
    return mp.g.mul(mp.g.mul(od.section.at(r), g), mp.g.inv(od.section.at(s)));
}

std::vector<OrbitData> all_orbits(const MatchedPair &mp) {
    std::vector<OrbitData> out;
    std::vector<char> done(mp.gamma.order(), 0);
    for (int c = 0; c < mp.gamma.order(); ++c) {
        if (done[c])
            continue;
        OrbitData od = orbit_data(mp, c);
        for (int r : od.orbit)
            done[r] = 1;
        out.push_back(std::move(od));
    }
    return out;
}

} // namespace bcp
