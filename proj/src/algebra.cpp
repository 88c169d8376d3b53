#include "bcp/algebra.hpp"

#include <Eigen/SVD>

namespace bcp {

AlgebraElement AlgebraElement::unit(const MatchedPair &mp) {
    AlgebraElement a(mp);
    for (int g = 0; g < mp.g.order(); ++g)
        a.c_(0, g) = 1.0;
    return a;
}

AlgebraElement AlgebraElement::u_elem(const MatchedPair &mp, int gamma) {
    AlgebraElement a(mp);
    for (int g = 0; g < mp.g.order(); ++g)
        a.c_(gamma, g) = 1.0;
    return a;
}

AlgebraElement AlgebraElement::basis(const MatchedPair &mp, int gamma, int g) {
    AlgebraElement a(mp);
    a.c_(gamma, g) = 1.0;
    return a;
}

AlgebraElement AlgebraElement::indicator(const MatchedPair &mp, int r, int s) {
    AlgebraElement a(mp);
    for (int g = 0; g < mp.g.order(); ++g)
        if (mp.beta[g][r] == s)
            a.c_(0, g) = 1.0;
    return a;
}

AlgebraElement AlgebraElement::from_function(const MatchedPair &mp, const Vector &f) {
    AlgebraElement a(mp);
    for (int g = 0; g < mp.g.order(); ++g)
        a.c_(0, g) = f(g);
    return a;
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &other) {
    c_ += other.c_;
    return *this;
}
AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &other) {
    c_ -= other.c_;
    return *this;
}
AlgebraElement &AlgebraElement::operator*=(Complex s) {
    c_ *= s;
    return *this;
}

AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b) {
    const MatchedPair &mp = a.pair();
    AlgebraElement out(mp);
    const int ng = mp.gamma.order(), nG = mp.g.order();
    for (int gamma = 0; gamma < ng; ++gamma)
        for (int mu = 0; mu < ng; ++mu) {
            int nu = mp.gamma.mul(gamma, mu);
            for (int g = 0; g < nG; ++g)
                out.coeff(nu, g) += a.coeff(gamma, mp.alpha[mu][g]) * b.coeff(mu, g);
        }
    return out;
}

AlgebraElement adjoint(const AlgebraElement &a) {
    const MatchedPair &mp = a.pair();
    AlgebraElement out(mp);
    const int ng = mp.gamma.order(), nG = mp.g.order();
    // (u_gamma F)* = u_{gamma^-1} (conj(F) o alpha_{gamma^-1}); this is the
    // unique involution compatible with the product convention.
    for (int gamma = 0; gamma < ng; ++gamma) {
        int gi = mp.gamma.inv(gamma);
        for (int g = 0; g < nG; ++g)
            out.coeff(gi, g) = std::conj(a.coeff(gamma, mp.alpha[gi][g]));
    }
    return out;
}

Complex haar(const AlgebraElement &a) {
    const MatchedPair &mp = a.pair();
    Complex acc = 0;
    for (int g = 0; g < mp.g.order(); ++g)
        acc += a.coeff(0, g);
    return acc / static_cast<double>(mp.g.order());
}

Complex counit(const AlgebraElement &a) {
    Complex acc = 0;
    for (int gamma = 0; gamma < a.pair().gamma.order(); ++gamma)
        acc += a.coeff(gamma, 0);
    return acc;
}

double l2_norm(const AlgebraElement &a) {
    return std::sqrt(std::abs(haar(multiply(adjoint(a), a)).real()));
}

Matrix gns_matrix(const AlgebraElement &a) {
    const MatchedPair &mp = a.pair();
    const int ng = mp.gamma.order(), nG = mp.g.order();
    const int n = ng * nG;
    Matrix l = Matrix::Zero(n, n);
    // a * (u_mu delta_g) = sum_gamma coeff(gamma, alpha_mu(g)) u_{gamma mu} delta_g.
    for (int mu = 0; mu < ng; ++mu)
        for (int g = 0; g < nG; ++g) {
            int col = mu * nG + g;
            for (int gamma = 0; gamma < ng; ++gamma)
                l(mp.gamma.mul(gamma, mu) * nG + g, col) += a.coeff(gamma, mp.alpha[mu][g]);
        }
    return l;
}

double operator_norm(const AlgebraElement &a) {
    Eigen::JacobiSVD<Matrix> svd(gns_matrix(a));
    return svd.singularValues()(0);
}

TensorElement::TensorElement(const MatchedPair &mp, int slots)
    : mp_(&mp), slots_(slots), slot_dim_(mp.gamma.order() * mp.g.order()) {
    Eigen::Index n = 1;
    for (int i = 0; i < slots; ++i)
        n *= slot_dim_;
    c_ = Vector::Zero(n);
}

TensorElement TensorElement::outer(const AlgebraElement &a, const AlgebraElement &b) {
    const MatchedPair &mp = a.pair();
    TensorElement t(mp, 2);
    const int nG = mp.g.order();
    for (int g1 = 0; g1 < mp.gamma.order(); ++g1)
        for (int x1 = 0; x1 < nG; ++x1) {
            Complex va = a.coeff(g1, x1);
            if (va == Complex(0))
                continue;
            for (int g2 = 0; g2 < mp.gamma.order(); ++g2)
                for (int x2 = 0; x2 < nG; ++x2)
                    t.c_((g1 * nG + x1) * static_cast<Eigen::Index>(t.slot_dim_) +
                         (g2 * nG + x2)) = va * b.coeff(g2, x2);
        }
    return t;
}

TensorElement TensorElement::lift(const AlgebraElement &a) {
    const MatchedPair &mp = a.pair();
    TensorElement t(mp, 1);
    const int nG = mp.g.order();
    for (int gamma = 0; gamma < mp.gamma.order(); ++gamma)
        for (int g = 0; g < nG; ++g)
            t.c_(gamma * nG + g) = a.coeff(gamma, g);
    return t;
}

Eigen::Index TensorElement::encode(const std::vector<int> &slot_indices) const {
    Eigen::Index i = 0;
    for (int s : slot_indices)
        i = i * slot_dim_ + s;
    return i;
}

std::vector<int> TensorElement::decode(Eigen::Index i) const {
    std::vector<int> out(slots_);
    for (int k = slots_ - 1; k >= 0; --k) {
        out[k] = static_cast<int>(i % slot_dim_);
        i /= slot_dim_;
    }
    return out;
}

TensorElement &TensorElement::operator+=(const TensorElement &other) {
    c_ += other.c_;
    return *this;
}
TensorElement &TensorElement::operator-=(const TensorElement &other) {
    c_ -= other.c_;
    return *this;
}

TensorElement multiply(const TensorElement &a, const TensorElement &b) {
    const MatchedPair &mp = a.pair();
    const int n = a.slots();
    const int ng = mp.gamma.order(), nG = mp.g.order();
    TensorElement out(mp, n);

    std::vector<int> mu(n, 0);
    const Eigen::Index total = out.size();
    for (Eigen::Index j = 0; j < total; ++j) {
        std::vector<int> slot = out.decode(j); // (nu_i, g_i) per slot
        Complex acc = 0;
        std::fill(mu.begin(), mu.end(), 0);
        // Sum over factorizations nu_i = gamma_i * mu_i in each slot.
        while (true) {
            std::vector<int> ia(n), ib(n);
            for (int k = 0; k < n; ++k) {
                int nu = slot[k] / nG, g = slot[k] % nG;
                int gamma = mp.gamma.mul(nu, mp.gamma.inv(mu[k]));
                ia[k] = gamma * nG + mp.alpha[mu[k]][g];
                ib[k] = mu[k] * nG + g;
            }
            acc += a.flat(a.encode(ia)) * b.flat(b.encode(ib));
            int k = n - 1;
            while (k >= 0 && ++mu[k] == ng) {
                mu[k] = 0;
                --k;
            }
            if (k < 0)
                break;
        }
        out.flat(j) = acc;
    }
    return out;
}

TensorElement comultiply_slot(const TensorElement &t, int k) {
    const MatchedPair &mp = t.pair();
    const int nG = mp.g.order();
    TensorElement out(mp, t.slots() + 1);
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        Complex v = t.flat(i);
        if (v == Complex(0))
            continue;
        std::vector<int> slot = t.decode(i);
        int gamma = slot[k] / nG, g = slot[k] % nG;
        // Delta(u_gamma delta_g) = sum_{g1 g2 = g} u_gamma delta_{g1} ox
        // u_{beta_{g1}(gamma)} delta_{g2}.
        for (int g1 = 0; g1 < nG; ++g1) {
            int g2 = mp.g.mul(mp.g.inv(g1), g);
            std::vector<int> nslot;
            nslot.reserve(t.slots() + 1);
            for (int j = 0; j < k; ++j)
                nslot.push_back(slot[j]);
            nslot.push_back(gamma * nG + g1);
            nslot.push_back(mp.beta[g1][gamma] * nG + g2);
            for (int j = k + 1; j < t.slots(); ++j)
                nslot.push_back(slot[j]);
            out.flat(out.encode(nslot)) += v;
        }
    }
    return out;
}

namespace {

template <typename Weight>
TensorElement contract_slot(const TensorElement &t, int k, Weight w) {
    const MatchedPair &mp = t.pair();
    const int nG = mp.g.order();
    TensorElement out(mp, t.slots() - 1);
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        Complex v = t.flat(i);
        if (v == Complex(0))
            continue;
        std::vector<int> slot = t.decode(i);
        int gamma = slot[k] / nG, g = slot[k] % nG;
        Complex weight = w(gamma, g);
        if (weight == Complex(0))
            continue;
        std::vector<int> nslot;
        nslot.reserve(t.slots() - 1);
        for (int j = 0; j < t.slots(); ++j)
            if (j != k)
                nslot.push_back(slot[j]);
        out.flat(out.encode(nslot)) += v * weight;
    }
    return out;
}

} // namespace

TensorElement haar_slot(const TensorElement &t, int k) {
    const double invG = 1.0 / t.pair().g.order();
    return contract_slot(t, k, [&](int gamma, int) -> Complex {
        return gamma == 0 ? Complex(invG) : Complex(0);
    });
}

TensorElement counit_slot(const TensorElement &t, int k) {
    return contract_slot(t, k,
                         [](int, int g) -> Complex { return g == 0 ? 1.0 : 0.0; });
}

AlgebraElement as_algebra_element(const TensorElement &t) {
    const MatchedPair &mp = t.pair();
    AlgebraElement a(mp);
    const int nG = mp.g.order();
    for (Eigen::Index i = 0; i < t.size(); ++i)
        a.coeff(static_cast<int>(i) / nG, static_cast<int>(i) % nG) = t.flat(i);
    return a;
}

TensorElement comultiply(const AlgebraElement &a) {
    return comultiply_slot(TensorElement::lift(a), 0);
}

} // namespace bcp
