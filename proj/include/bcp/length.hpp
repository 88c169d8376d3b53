#pragma once

#include <random>

#include "bcp/fusion.hpp"

namespace bcp {

struct NotGenerating : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nonnegative real length values over one of the supported domains (group
/// elements, a classical irrep table, or the bicrossed class table); the
/// domain is implied by which validator / consumer it is handed to.
struct LengthFunction {
    std::vector<double> values;

    double at(int i) const { return values[i]; }
    int size() const { return static_cast<int>(values.size()); }
};

LengthFunction zero_length(int n);

/// Word length from a generating set (inverses added automatically).
/// Throws NotGenerating if the closure misses part of the group.
LengthFunction word_length(const FiniteGroup &g, std::vector<int> generators);

struct LengthReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Axioms on a group: l(e) = 0, nonnegativity, l(g^-1) = l(g), and
/// l(gh) <= l(g) + l(h), all checked exhaustively.
LengthReport validate_length_group(const LengthFunction &l, const FiniteGroup &g);

/// Axioms on a classical irrep table: vanishing on the trivial irrep,
/// contragredient symmetry, and subadditivity against containment in
/// tensor products.
LengthReport validate_length_irr(const LengthFunction &l, const IrrepTable &t,
                                 const Tolerances &tol = {});

/// Axioms on the bicrossed class table, with containment tested through the
/// Haar pairing of characters.
LengthReport validate_length_classes(const LengthFunction &l, const MatchedPair &mp,
                                     const std::vector<IrrClass> &table,
                                     const Tolerances &tol = {});

/// l_Gamma on Gamma, l_G on Irr(G), and the family {l_gamma} stored on the
/// class table (whose classes run over orbit representatives); values at
/// non-representative points are obtained by the transport of condition (ii).
struct MatchedLengthPair {
    LengthFunction l_gamma;
    LengthFunction l_g;
    LengthFunction family;
};

/// The family value at an arbitrary class datum (the orbit representative
/// need not be the table's), located through class equivalence.
double eval_length(const MatchedPair &mp, const std::vector<IrrClass> &table,
                   const MatchedLengthPair &pair, const RepClass &cls,
                   const Tolerances &tol = {});

/// Conditions (i)-(iv) of a matched pair of length functions, plus the group
/// axioms and beta-invariance of l_Gamma. gt indexes l_g.
LengthReport validate_matched_lengths(const MatchedPair &mp,
                                      const std::vector<IrrClass> &table,
                                      const IrrepTable &gt,
                                      const MatchedLengthPair &pair,
                                      const Tolerances &tol = {});

/// l_Gamma(c) = l([c(eps)]), l_G(x) = l([1(x)]), family = l itself.
MatchedLengthPair derive_pair_from_length(const MatchedPair &mp,
                                          const std::vector<IrrClass> &table,
                                          const IrrepTable &gt,
                                          const LengthFunction &l,
                                          const Tolerances &tol = {});

/// l'([gamma(u^x)]) = l_Gamma(gamma), l([gamma(u^x)]) = l_gamma(x), and
/// l~ = l + l', all on the class table.
struct BuiltLengths {
    LengthFunction l_prime;
    LengthFunction l_plain;
    LengthFunction l_tilde;
};

BuiltLengths build_lengths_from_pair(const MatchedPair &mp,
                                     const std::vector<IrrClass> &table,
                                     const MatchedLengthPair &pair);

/// Finitely supported element of the dual: one complex block per class (or
/// per classical irrep), absent blocks read as zero.
struct DualElement {
    std::map<int, Matrix> blocks;

    static DualElement p(int x, int dim);
    bool empty() const { return blocks.empty(); }
};

/// Standard complex Gaussian blocks on the given (index, dim) support.
DualElement gaussian_dual(const std::vector<std::pair<int, int>> &support,
                          std::mt19937_64 &rng);

/// Precomputed dual data: class table, the full matrix representations, and
/// the grouping of classes by orbit representative.
struct DualContext {
    const MatchedPair *mp = nullptr;
    std::vector<IrrClass> classes;
    std::vector<BicrossedRep> reps;
    std::vector<int> orbit_reps;
    std::map<int, std::vector<int>> classes_of; // orbit rep -> class indices, by x_index
};

DualContext make_dual_context(const MatchedPair &mp, unsigned long long seed = 0,
                              const Tolerances &tol = {});

/// Irrep table of the stabilizer of an orbit representative, viewed over the
/// class table (aligned with x_index).
IrrepTable stabilizer_table(const DualContext &ctx, int gamma);

/// F(a) = sum_x dim(x) (Tr x id)(u^x (a p_x x 1)) in the bicrossed algebra.
AlgebraElement fourier(const DualContext &ctx, const DualElement &a);
double sobolev0(const DualContext &ctx, const DualElement &a);

/// Classical scope: the Fourier transform as a function on the group, and
/// the matching Sobolev 0-norm.
Vector fourier_group(const IrrepTable &t, const DualElement &a);
double sobolev0_group(const IrrepTable &t, const DualElement &a);

/// The lift a -> a~ over Irr(G) built from the isometries decomposing
/// Ind(x); stab_t indexes a (over G_gamma), g_t indexes the result.
DualElement lift_tilde(const MatchedPair &mp, int gamma, const IrrepTable &stab_t,
                       const IrrepTable &g_t, const DualElement &a,
                       unsigned long long seed = 0, const Tolerances &tol = {});

/// Residual of F_{G_gamma}(a) = v_{gamma gamma} F_G(a~) as functions on G.
double lift_identity_residual(const MatchedPair &mp, int gamma,
                              const IrrepTable &stab_t, const IrrepTable &g_t,
                              const DualElement &a, const DualElement &lifted);

/// Term k is sum of dim(x)^2 over classes with k <= l(x) < k+1.
std::vector<double> growth_series(const LengthFunction &l,
                                  const std::vector<IrrClass> &table);

struct RdResult {
    double sampled_max = 0.0;
    double bound = 0.0;
};

/// Samples Gaussian elements supported in the length window [k, k+1) and
/// compares the worst ratio |F(a)| / |a|_0 against 2 sqrt(sum_{l<k+1} dim^2).
/// Throws EmptyWindow when no class lies in the window.
RdResult rd_ratio(const DualContext &ctx, const LengthFunction &l, int k, int trials,
                  unsigned long long seed, const Tolerances &tol = {});

/// The orbit-block component pi^gamma_{r,s}(a) of a dual element, over the
/// stabilizer irreps of the orbit representative gamma.
DualElement pi_component(const DualContext &ctx, const DualElement &a, int gamma,
                         int r, int s);

struct PiCheckResult {
    double fourier_residual = 0.0;
    double norm_residual = 0.0;
};

/// Evaluates both decomposition identities: F(a) against the orbit-block
/// expansion through the classical transforms, and |a|_0^2 against the sum
/// of the component norms.
PiCheckResult pi_decomposition_check(const DualContext &ctx, const DualElement &a);

/// The three displayed polynomial inequalities evaluated as finite
/// predicates for user-supplied constants (c, n); the first is sampled, the
/// other two exhaustive.
LengthReport polynomial_bounds_check(const DualContext &ctx, const IrrepTable &gt,
                                     const MatchedLengthPair &pair, double c,
                                     double n, int trials,
                                     unsigned long long seed,
                                     const Tolerances &tol = {});

} // namespace bcp
