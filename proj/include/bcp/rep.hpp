#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "bcp/group.hpp"

namespace bcp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Numerical tolerances shared across the representation machinery.
struct Tolerances {
    double alg = 1e-9;   // residuals of algebraic identities
    double integer = 1e-6; // integer rounding residue
    double split = 1e-7; // eigenvalue clustering gap
};

inline constexpr int kIrrepRetryBudget = 8;
inline constexpr int kGroupOrderCap = 200;

/// Unitary representation of a finite group, one matrix per element.
/// Holds a non-owning pointer: the group must outlive the rep.
struct UnitaryRep {
    const FiniteGroup *group = nullptr;
    int dim = 0;
    std::vector<Matrix> matrices;

    const Matrix &at(int g) const { return matrices[g]; }
};

/// Largest residual of the homomorphism and unitarity identities.
double rep_residual(const UnitaryRep &rep);

/// Character values, one per element.
Vector character(const UnitaryRep &rep);

struct IrrepTable {
    const FiniteGroup *group = nullptr;
    std::vector<UnitaryRep> irreps;

    int size() const { return static_cast<int>(irreps.size()); }
};

struct SplitFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHomomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Left regular representation (permutation matrices of left translation).
UnitaryRep regular_rep(const FiniteGroup &g);

/// Trivial representation, and the one-dimensional rep from a character-like
/// value table (used by tests).
UnitaryRep trivial_rep(const FiniteGroup &g);

/// Complete table of irreducibles, by randomized splitting of the regular
/// representation. Ordering: ascending dimension, then lexicographic
/// character values over conjugacy class representatives. Deterministic per
/// (group, seed).
IrrepTable irreps(const FiniteGroup &g, unsigned long long seed = 0,
                  const Tolerances &tol = {});

/// dim Mor(u, v) through characters: round((1/|G|) sum chi_u conj(chi_v)).
int mor_dim_char(const UnitaryRep &u, const UnitaryRep &v, const Tolerances &tol = {});

/// Orthonormal basis of {T : v(g) T = T u(g) for all g} (so T maps the
/// carrier of u into the carrier of v), via the null space of the stacked
/// linear system.
std::vector<Matrix> intertwiner_basis(const UnitaryRep &u, const UnitaryRep &v,
                                      const Tolerances &tol = {});

/// Isometries realizing the decomposition of rep into the table's irreps.
struct DecompositionResult {
    struct Component {
        int irrep_index;
        std::vector<Matrix> isometries; // dim(rep) x dim(irrep), S_i* S_j = delta Id
    };
    std::vector<Component> components;
};

DecompositionResult decompose(const UnitaryRep &rep, const IrrepTable &table,
                              unsigned long long seed = 0, const Tolerances &tol = {});

/// u composed with a bijective homomorphism phi : K -> H given elementwise.
UnitaryRep transport(const UnitaryRep &u, const FiniteGroup &k, const std::vector<int> &phi);

UnitaryRep contragredient(const UnitaryRep &u);
UnitaryRep restrict_rep(const UnitaryRep &u, const Subgroup &h);
UnitaryRep tensor_rep(const UnitaryRep &u, const UnitaryRep &v);
UnitaryRep direct_sum(const UnitaryRep &u, const UnitaryRep &v);

/// Index of the irrep in the table equivalent to u (which must be
/// irreducible); throws if none matches.
int identify_irrep(const UnitaryRep &u, const IrrepTable &table, const Tolerances &tol = {});

} // namespace bcp
