#pragma once

#include "bcp/bicrossed_reps.hpp"

namespace bcp {

struct PointNotInProductOfOrbits : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// r-twisted tensor product of base reps u (of G_gamma) and v (of G_mu), a
/// unitary representation of G_r on K_r x H_u x H_v with K_r spanned by the
/// factorizations st = r over the two orbits.
struct TwistedTensorRep {
    const MatchedPair *mp = nullptr;
    int r = -1;
    std::shared_ptr<const OrbitData> od_r;       // orbit data of r (owns G_r)
    std::vector<std::pair<int, int>> pairs;      // (s, t) with st = r
    UnitaryRep rep;                              // over od_r->stabilizer.group
};

TwistedTensorRep twisted_tensor(const MatchedPair &mp, const RepClass &a,
                                const RepClass &b, int r);

/// Character of the twisted tensor evaluated from its defining formula;
/// returns the largest deviation from the trace of the built matrices.
double twisted_character_residual(const TwistedTensorRep &t, const RepClass &a,
                                  const RepClass &b);

/// dim Mor(g1(u), g2(v) x g3(w)) by the orbit-averaged formula, cross
/// checked against the Haar pairing h(chi1* chi2 chi3) in the concrete
/// algebra. Throws FormulaMismatch on disagreement, NonIntegral if either
/// route fails to round.
int fusion_dim(const MatchedPair &mp, const RepClass &c1, const RepClass &c2,
               const RepClass &c3, const Tolerances &tol = {});

/// Induced representation of G: g -> sum_{r,s} e_rs v_rs(g) u(psi_{r,s}(g)).
UnitaryRep induce(const MatchedPair &mp, const RepClass &cls);

/// Frobenius reciprocity data: (dim Mor_G(u, Ind(v)), dim Mor_{G_gamma}(Res u, v)).
std::pair<int, int> frobenius_check(const MatchedPair &mp, const RepClass &v,
                                    const UnitaryRep &u, const Tolerances &tol = {});

} // namespace bcp
