#pragma once

#include <memory>

#include "bcp/algebra.hpp"
#include "bcp/matched_pair.hpp"
#include "bcp/rep.hpp"

namespace bcp {

struct StabilizerMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormulaMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CompletenessFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Class datum (gamma, u): a point of Gamma together with a unitary rep of
/// its stabilizer. The orbit data is shared so that u's group pointer (the
/// stabilizer's own FiniteGroup) stays valid across copies.
struct RepClass {
    int gamma = -1;
    std::shared_ptr<const OrbitData> od;
    UnitaryRep u;
};

/// Builds the class datum for gamma with base rep given by matrices over
/// the stabilizer group (validated).
RepClass make_class(const MatchedPair &mp, int gamma, std::vector<Matrix> matrices);

/// The representation gamma(u) of the bicrossed product: a block matrix of
/// algebra elements indexed by (orbit point, base index).
struct BicrossedRep {
    const MatchedPair *mp = nullptr;
    RepClass cls;
    int block_dim = 0; // |orbit| * dim(u)
    std::vector<AlgebraElement> entries; // row-major block_dim x block_dim

    const AlgebraElement &at(int a, int b) const { return entries[a * block_dim + b]; }
    AlgebraElement &at(int a, int b) { return entries[a * block_dim + b]; }
};

/// gamma(u) = sum_{r,s} e_{rs} (1 x u_r v_{rs}) u o psi^gamma_{r,s}.
BicrossedRep build_rep(const MatchedPair &mp, const RepClass &cls);

/// Largest residual of sum_t V_{rt} V_{st}* = delta_{rs} and the column
/// counterpart.
double bicrossed_unitarity_residual(const BicrossedRep &v);

/// Largest residual of Delta(V_ab) = sum_k V_ak x V_kb.
double comodule_residual(const BicrossedRep &v);

/// chi = sum_r u_r v_rr (chi_u o psi^gamma_{r,r}); checked against the trace
/// of build_rep within tol.alg.
AlgebraElement character_of(const MatchedPair &mp, const RepClass &cls,
                            const Tolerances &tol = {});

/// dim Mor(gamma(u), mu(w)) by BOTH routes of the classification theorem:
/// the Haar pairing of characters and the transported classical Mor
/// dimension delta_{gamma.G, mu.G} dim Mor_{G_gamma}(u, w o psi^mu_{g,g}).
/// Throws FormulaMismatch if they disagree.
int mor_dim_classes(const MatchedPair &mp, const RepClass &a, const RepClass &b,
                    const Tolerances &tol = {});

/// Independent oracle: rank of the Haar averaging projection
/// E[(i,j),(k,l)] = h(W_ik (V_jl)*) acting on intertwiner space Mor(V, W).
int mor_dim_gns(const BicrossedRep &v, const BicrossedRep &w);

/// (gamma^-1, conj(u) o alpha_{gamma^-1}); verifies that the character of
/// the output is the adjoint of the input character.
RepClass contragredient_class(const MatchedPair &mp, const RepClass &cls,
                              const Tolerances &tol = {});

struct IrrClass {
    RepClass cls;     // gamma is an orbit representative, u irreducible
    int x_index = -1; // index in the stabilizer's irrep table
    int dim = 0;      // |orbit| * dim(u)
    AlgebraElement character;
};

/// Complete table {(gamma, x) : gamma in I, x in Irr(G_gamma)}; checks
/// sum dim^2 = |Gamma||G| and throws CompletenessFailed otherwise.
std::vector<IrrClass> irr_table(const MatchedPair &mp, unsigned long long seed = 0,
                                const Tolerances &tol = {});

/// Index of the table class equivalent to the (possibly non-representative)
/// class datum; throws if none matches.
int find_class(const MatchedPair &mp, const std::vector<IrrClass> &table,
               const RepClass &cls, const Tolerances &tol = {});

} // namespace bcp
