#pragma once

#include <string>
#include <vector>

#include "error.hpp"
#include "invariants.hpp"

namespace symcart {

/// Truncated graded series at a base point. Component k is stored as a
/// homogeneous polynomial of degree k in the shifted variable u = x - a.
struct Jet {
    Vector base_point;
    std::size_t order = 0;
    std::vector<MultiPoly> components;  // P_0 .. P_order

    std::size_t num_vars() const noexcept { return base_point.size(); }
    const MultiPoly& operator[](std::size_t k) const { return components[k]; }

    static Jet zero(const Vector& a, std::size_t order) {
        return {a, order, std::vector<MultiPoly>(order + 1, MultiPoly(a.size()))};
    }
    static Jet unit(const Vector& a, std::size_t order) {
        Jet j = zero(a, order);
        j.components[0] = MultiPoly::constant(a.size(), Scalar(1));
        return j;
    }

    bool is_invertible() const { return !components[0].is_zero(); }

    /// Sum of the components as a polynomial in x.
    MultiPoly sum() const {
        MultiPoly s(num_vars());
        for (const auto& c : components) s += c;
        return translate(s, scale(base_point, Scalar(-1)));
    }

    Jet truncate(std::size_t n) const {
        Jet j = *this;
        j.order = std::min(order, n);
        j.components.resize(j.order + 1);
        return j;
    }

    friend bool operator==(const Jet& a, const Jet& b) = default;
};

/// Taylor expansion of f at a truncated at order n.
inline Jet jet_of(const MultiPoly& f, const Vector& a, std::size_t n) {
    if (f.num_vars() != a.size()) throw InputError("jet base point arity mismatch");
    MultiPoly g = translate(f, a);
    Jet j{a, n, {}};
    for (std::size_t k = 0; k <= n; ++k) j.components.push_back(g.homogeneous_component(static_cast<unsigned>(k)));
    return j;
}

inline void require_compatible(const Jet& a, const Jet& b) {
    if (!(a.base_point == b.base_point) || a.order != b.order) throw Error("jets have different base points or orders");
}

/// R_k = sum_{j <= k} P_j Q_{k-j}.
inline Jet jet_mul(const Jet& p, const Jet& q) {
    require_compatible(p, q);
    Jet r = Jet::zero(p.base_point, p.order);
    for (std::size_t k = 0; k <= p.order; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            if (!p[j].is_zero() && !q[k - j].is_zero()) r.components[k] += p[j] * q[k - j];
    return r;
}

/// K with P K = 1 up to truncation; requires P_0 != 0.
inline Jet jet_invert(const Jet& p) {
    if (!p.is_invertible()) throw Error("jet with P_0 = 0 is not invertible");
    Scalar inv0 = p[0].constant_term().inverse();
    Jet k = Jet::zero(p.base_point, p.order);
    k.components[0] = MultiPoly::constant(p.num_vars(), inv0);
    for (std::size_t m = 1; m <= p.order; ++m) {
        MultiPoly acc(p.num_vars());
        for (std::size_t j = 1; j <= m; ++j)
            if (!p[j].is_zero()) acc += p[j] * k[m - j];
        k.components[m] = acc * (-inv0);
    }
    return k;
}

/// Degree of R as a homogeneous polynomial in x - a; error otherwise.
inline unsigned shifted_degree(const MultiPoly& r, const Vector& a) {
    MultiPoly u = translate(r, a);
    if (u.is_zero() || !u.is_homogeneous()) throw InputError("polynomial is not homogeneous in x - a");
    return static_cast<unsigned>(u.degree());
}

/// Action of grad R on jets, R homogeneous of degree d >= 1 in x - a:
/// Q_k = grad R . P_{k-d+2} for k >= d-1, else 0. Slots whose source index
/// exceeds the input order are dropped, so for d = 1 the output order is N-1.
inline Jet jet_gradient_action(const MultiPoly& r, const Jet& j, const ScalarMatrix& kappa_inv) {
    const unsigned d = shifted_degree(r, j.base_point);
    if (d == 0) throw InputError("gradient action needs degree >= 1");
    PolyVectorField grad = gradient(translate(r, j.base_point), kappa_inv);
    const std::size_t out_order = d >= 2 ? j.order : (j.order == 0 ? 0 : j.order - 1);
    Jet q = Jet::zero(j.base_point, out_order);
    for (std::size_t k = 0; k <= out_order; ++k) {
        if (k + 1 < d) continue;
        std::size_t src = k + 2 - d;
        if (src > j.order) continue;
        q.components[k] = grad.apply(j[src]);
    }
    return q;
}

/// Default truncation order max(d_i) + deg(Phi) + 2.
inline std::size_t default_jet_order(const InvariantChart& chart) {
    unsigned dmax = 0;
    for (unsigned d : chart.degrees) dmax = std::max(dmax, d);
    return dmax + static_cast<std::size_t>(std::max(0, chart.phi.degree())) + 2;
}

}  // namespace symcart
