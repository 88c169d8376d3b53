#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcp/group.hpp"

namespace bcp {

/// A matched pair (Gamma, G, alpha, beta) of finite groups. alpha is a left
/// action of Gamma on G by bijections (a homomorphism into Sym(G)), beta a
/// right action of G on Gamma (an antihomomorphism). We write gamma . g for
/// beta_g(gamma).
struct MatchedPair {
    FiniteGroup gamma;
    FiniteGroup g;
    std::vector<std::vector<int>> alpha; // alpha[c][x]: action of c in Gamma on x in G
    std::vector<std::vector<int>> beta;  // beta[x][c]: action of x in G on c in Gamma

    int act_alpha(int c, int x) const { return alpha[c][x]; }
    int act_beta(int x, int c) const { return beta[x][c]; }
};

struct RelationViolation {
    std::string relation; // which axiom failed
    int gamma = -1, mu = -1, g = -1, h = -1;
};

struct ValidationReport {
    std::vector<RelationViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the bijection/homomorphism structure of alpha and beta and the
/// matched pair relations on all quadruples. Violations are collected, not
/// thrown.
ValidationReport validate_matched_pair(const MatchedPair &mp);

struct NotExactFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds the unique matched pair with gamma*g = alpha_gamma(g)*beta_g(gamma)
/// inside L, given subgroups with |Gamma||G| = |L| and trivial intersection.
MatchedPair from_exact_factorization(const FiniteGroup &l, const Subgroup &gamma_sub,
                                     const Subgroup &g_sub);

/// Orbit of one Gamma element under beta, with stabilizer, the G_{r,s}
/// blocks and the canonical section r -> gamma(r) (smallest-index preimage,
/// which forces gamma(gamma) = e).
struct OrbitData {
    int rep = -1;                      // the gamma this orbit was computed from
    std::vector<int> orbit;            // sorted Gamma indices
    Subgroup stabilizer;               // G_gamma as a subgroup of G
    std::map<std::pair<int, int>, std::vector<int>> blocks; // (r,s) -> G_{r,s}
    std::map<int, int> section;        // r -> gamma(r) in G

    bool in_orbit(int r) const;
};

OrbitData orbit_data(const MatchedPair &mp, int gamma);

struct OrbitMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// psi^gamma_{r,s}(g) = gamma(r) * g * gamma(s)^{-1}, a bijection of G
/// carrying G_{r,s} onto G_gamma.
int psi(const MatchedPair &mp, const OrbitData &od, int r, int s, int g);

/// Orbit representatives I: minimal Gamma index per beta-orbit, ascending,
/// with the orbit data for each.
std::vector<OrbitData> all_orbits(const MatchedPair &mp);

} // namespace bcp
