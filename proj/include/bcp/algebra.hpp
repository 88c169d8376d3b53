#pragma once

#include <Eigen/Dense>

#include "bcp/matched_pair.hpp"
#include "bcp/rep.hpp"

namespace bcp {

/// Element of C(G-bicrossed) = Gamma x| C(G), stored as the coefficient
/// table of a = sum_gamma u_gamma F_gamma with F_gamma(g) = coeff(gamma, g).
class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(const MatchedPair &mp)
        : mp_(&mp), c_(Matrix::Zero(mp.gamma.order(), mp.g.order())) {}

    static AlgebraElement unit(const MatchedPair &mp);
    /// The unitary u_gamma.
    static AlgebraElement u_elem(const MatchedPair &mp, int gamma);
    /// Basis element u_gamma * delta_g.
    static AlgebraElement basis(const MatchedPair &mp, int gamma, int g);
    /// The magic unitary entry v_{rs} = 1_{G_{r,s}} in C(G).
    static AlgebraElement indicator(const MatchedPair &mp, int r, int s);
    /// Embeds a function on G into C(G) (gamma part concentrated at e).
    static AlgebraElement from_function(const MatchedPair &mp, const Vector &f);

    const MatchedPair &pair() const { return *mp_; }
    Complex coeff(int gamma, int g) const { return c_(gamma, g); }
    Complex &coeff(int gamma, int g) { return c_(gamma, g); }
    const Matrix &coeffs() const { return c_; }

    AlgebraElement &operator+=(const AlgebraElement &other);
    AlgebraElement &operator-=(const AlgebraElement &other);
    AlgebraElement &operator*=(Complex s);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
    friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

    double max_abs() const { return c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0; }

  private:
    const MatchedPair *mp_ = nullptr;
    Matrix c_;
};

/// Covariance convention: (u_gamma F)(u_mu F') = u_{gamma mu} (F o alpha_mu) F'.
AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b);
AlgebraElement adjoint(const AlgebraElement &a);
Complex haar(const AlgebraElement &a);
Complex counit(const AlgebraElement &a);
double l2_norm(const AlgebraElement &a);

/// Matrix of left multiplication by a on the GNS space of the Haar state,
/// in the orthonormal basis sqrt(|G|) u_gamma delta_g.
Matrix gns_matrix(const AlgebraElement &a);
double operator_norm(const AlgebraElement &a);

/// Element of the n-fold tensor power of C(G-bicrossed). Slot index is
/// gamma * |G| + g; the flat index runs slot 0 most significant.
class TensorElement {
  public:
    TensorElement() = default;
    TensorElement(const MatchedPair &mp, int slots);
    static TensorElement outer(const AlgebraElement &a, const AlgebraElement &b);
    static TensorElement lift(const AlgebraElement &a); // one-slot view

    const MatchedPair &pair() const { return *mp_; }
    int slots() const { return slots_; }
    Eigen::Index size() const { return c_.size(); }
    Complex &flat(Eigen::Index i) { return c_(i); }
    Complex flat(Eigen::Index i) const { return c_(i); }

    int slot_dim() const { return slot_dim_; }
    Eigen::Index encode(const std::vector<int> &slot_indices) const;
    std::vector<int> decode(Eigen::Index i) const;

    TensorElement &operator+=(const TensorElement &other);
    TensorElement &operator-=(const TensorElement &other);
    friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }

    double max_abs() const { return c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0; }

  private:
    const MatchedPair *mp_ = nullptr;
    int slots_ = 0;
    int slot_dim_ = 0;
    Vector c_;
};

/// Slotwise crossed-product multiplication.
TensorElement multiply(const TensorElement &a, const TensorElement &b);
/// Applies the comultiplication to slot k (slot count grows by one).
TensorElement comultiply_slot(const TensorElement &t, int k);
/// Contracts slot k with the Haar state (resp. the counit).
TensorElement haar_slot(const TensorElement &t, int k);
TensorElement counit_slot(const TensorElement &t, int k);

AlgebraElement as_algebra_element(const TensorElement &t); // requires slots() == 1
TensorElement comultiply(const AlgebraElement &a);

} // namespace bcp
