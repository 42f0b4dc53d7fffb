#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "lie.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace symcart {

/// Polynomial map a -> a_C, components on the Cartan basis.
struct PolyVectorField {
    std::vector<MultiPoly> components;

    PolyVectorField() = default;
    explicit PolyVectorField(std::vector<MultiPoly> c) : components(std::move(c)) {}
    static PolyVectorField zero(std::size_t rank) { return PolyVectorField(std::vector<MultiPoly>(rank, MultiPoly(rank))); }
    /// Euler field x -> x.
    static PolyVectorField euler(std::size_t rank) {
        std::vector<MultiPoly> c;
        for (std::size_t k = 0; k < rank; ++k) c.push_back(MultiPoly::variable(rank, k));
        return PolyVectorField(std::move(c));
    }

    std::size_t size() const noexcept { return components.size(); }
    const MultiPoly& operator[](std::size_t k) const { return components[k]; }
    MultiPoly& operator[](std::size_t k) { return components[k]; }

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
    int degree() const {
        int d = -1;
        for (const auto& c : components) d = std::max(d, c.degree());
        return d;
    }

    /// Directional derivative X.f = sum_k X_k df/dx_k.
    MultiPoly apply(const MultiPoly& f) const {
        MultiPoly out(f.num_vars());
        for (std::size_t k = 0; k < components.size(); ++k)
            if (!components[k].is_zero()) out += components[k] * f.derivative(k);
        return out;
    }

    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
    }
    friend PolyVectorField operator*(const MultiPoly& f, PolyVectorField x) {
        for (auto& c : x.components) c = f * c;
        return x;
    }
    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) = default;

    Vector evaluate(std::span<const Scalar> point) const {
        Vector v;
        for (const auto& c : components) v.push_back(c.evaluate(point));
        return v;
    }
    PolyVectorField translate(const Vector& shift) const {
        PolyVectorField out = *this;
        for (auto& c : out.components) c = symcart::translate(c, shift);
        return out;
    }
};

// ---- group action ------------------------------------------------------

/// f o w, i.e. x -> f(w x).
inline MultiPoly compose_linear(const MultiPoly& f, const ScalarMatrix& w) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < w.rows(); ++r) rows.push_back(w.row(r));
    return substitute_affine(f, rows, {});
}

inline bool is_invariant(const MultiPoly& f, const WeylGroup& w) {
    for (const auto& g : w.generators)
        if (!(compose_linear(f, g) == f)) return false;
    return true;
}

/// (1/|W|) sum_w f o w; equal to the average of w.f since W is a group.
inline MultiPoly reynolds(const WeylGroup& w, const MultiPoly& f) {
    MultiPoly sum(f.num_vars());
    for (const auto& g : w.elements) sum += compose_linear(f, g);
    return sum * Scalar(Rational(1, static_cast<long>(w.order())));
}

/// (w.X)(x) = w X(w^{-1} x); invariant iff X(w x) = w X(x).
inline PolyVectorField compose_field(const PolyVectorField& x, const ScalarMatrix& w) {
    PolyVectorField pulled = x;
    for (auto& c : pulled.components) c = compose_linear(c, w);
    return pulled;
}

inline PolyVectorField linear_image(const ScalarMatrix& w, const PolyVectorField& x) {
    if (x.size() == 0) return x;
    PolyVectorField out(std::vector<MultiPoly>(x.size(), MultiPoly(x[0].num_vars())));
    for (std::size_t r = 0; r < w.rows(); ++r)
        for (std::size_t c = 0; c < w.cols(); ++c)
            if (!w(r, c).is_zero()) out[r] += w(r, c) * x[c];
    return out;
}

inline bool is_invariant_field(const PolyVectorField& x, const WeylGroup& w) {
    for (const auto& g : w.elements)
        if (!(compose_field(x, g) == linear_image(g, x))) return false;
    return true;
}

/// (1/|W|) sum_w w^{-1} X(w x).
inline PolyVectorField reynolds_field(const WeylGroup& w, const PolyVectorField& x) {
    PolyVectorField sum = x - x;
    for (const auto& g : w.elements) {
        auto inv = inverse(g);
        sum = sum + linear_image(*inv, compose_field(x, g));
    }
    Scalar f(Rational(1, static_cast<long>(w.order())));
    for (auto& c : sum.components) c *= f;
    return sum;
}

// ---- linear algebra on polynomial spans --------------------------------

namespace inv_detail {

/// Coefficient columns of the given polynomials over the union of their supports.
struct CoefficientSystem {
    std::map<Exponent, std::size_t, GrevlexDescending> index;

    void add_support(const MultiPoly& p) {
        for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
    }
    void finalize() {
        std::size_t k = 0;
        for (auto& [e, i] : index) i = k++;
    }
    Vector vec(const MultiPoly& p) const {
        Vector v(index.size(), Scalar(0));
        for (const auto& [e, c] : p.terms()) v[index.at(e)] = c;
        return v;
    }
};

}  // namespace inv_detail

/// All beta in N^k with sum beta_i * degrees_i = target.
inline std::vector<Exponent> weighted_exponents(const std::vector<unsigned>& degrees, unsigned target) {
    std::vector<Exponent> out;
    Exponent cur(degrees.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == degrees.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (unsigned k = 0; k * degrees[i] <= left; ++k) {
            cur[i] = k;
            self(self, i + 1, left - k * degrees[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, target);
    return out;
}

/// p^beta = prod p_i^{beta_i}.
inline MultiPoly power_product(const std::vector<MultiPoly>& gens, const Exponent& beta, std::size_t num_vars) {
    MultiPoly out = MultiPoly::constant(num_vars, Scalar(1));
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (beta[i] > 0) out *= gens[i].pow(beta[i]);
    return out;
}

/// F with F(p_1..p_k) = f, when f lies in the subalgebra generated by p.
/// F is a polynomial in k variables y_i.
inline std::optional<MultiPoly> express_in_generators(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                                                      const std::vector<unsigned>& degrees) {
    const std::size_t k = gens.size(), n = f.num_vars();
    MultiPoly out(k);
    for (int e = 0; e <= f.degree(); ++e) {
        MultiPoly comp = f.homogeneous_component(static_cast<unsigned>(e));
        if (comp.is_zero()) continue;
        auto betas = weighted_exponents(degrees, static_cast<unsigned>(e));
        if (betas.empty()) return std::nullopt;
        std::vector<MultiPoly> prods;
        inv_detail::CoefficientSystem sys;
        sys.add_support(comp);
        for (const auto& b : betas) {
            prods.push_back(power_product(gens, b, n));
            sys.add_support(prods.back());
        }
        sys.finalize();
        std::vector<Vector> cols;
        for (const auto& p : prods) cols.push_back(sys.vec(p));
        auto sol = solve_exact(from_columns(cols, sys.index.size()), sys.vec(comp));
        if (sol.kind == SolutionKind::none) return std::nullopt;
        for (std::size_t j = 0; j < betas.size(); ++j)
            if (!sol.particular[j].is_zero()) out.add_term(betas[j], sol.particular[j]);
    }
    return out;
}

// ---- generators ----------------------------------------------------------

struct GeneratorSystem {
    std::vector<MultiPoly> generators;
    std::vector<unsigned> degrees;
};

/// Jacobian determinant det(dp_i/dx_j).
inline MultiPoly jacobian_determinant(const std::vector<MultiPoly>& gens, std::size_t n) {
    PolyMatrix j(gens.size(), n, MultiPoly(n));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < n; ++k) j(i, k) = gens[i].derivative(k);
    return det_adjugate(j).det;
}

/// Minimal homogeneous generators of C[a]^W, found degree by degree from
/// Reynolds images of monomials in ascending grevlex order.
inline GeneratorSystem invariant_generators(const WeylGroup& w) {
    const std::size_t n = w.rank;
    GeneratorSystem out;
    if (n == 0) return out;
    const unsigned cap = static_cast<unsigned>(2 * w.order());
    for (unsigned d = 1; d <= cap && out.generators.size() < n; ++d) {
        std::vector<Exponent> monos = monomials_of_degree(n, d);
        inv_detail::CoefficientSystem sys;
        for (const auto& m : monos) sys.add_support(MultiPoly::monomial(m));
        sys.finalize();
        std::vector<Vector> span;
        for (const auto& b : weighted_exponents(out.degrees, d)) {
            if (b == Exponent(out.generators.size(), 0)) continue;
            span.push_back(sys.vec(power_product(out.generators, b, n)));
        }
        std::size_t current = span.empty() ? 0 : rank(from_rows(span, monos.size()));
        for (const auto& m : monos) {
            MultiPoly r = reynolds(w, MultiPoly::monomial(m));
            if (r.is_zero()) continue;
            span.push_back(sys.vec(r));
            std::size_t next = rank(from_rows(span, monos.size()));
            if (next == current) {
                span.pop_back();
                continue;
            }
            current = next;
            out.generators.push_back(r.monic());
            out.degrees.push_back(d);
            if (out.generators.size() == n) break;
        }
    }
    unsigned long prod = 1;
    for (unsigned d : out.degrees) prod *= d;
    if (out.generators.size() != n || prod != w.order())
        throw InternalError("generator degrees do not multiply to |W| = " + std::to_string(w.order()));
    if (jacobian_determinant(out.generators, n).is_zero()) throw InternalError("generators are algebraically dependent");
    return out;
}

// ---- discriminant and gradients ----------------------------------------

/// Product of the reduced roots as linear forms; 1 when there are none.
inline MultiPoly phi_from_roots(const RestrictedRootSystem& sys) {
    MultiPoly phi = MultiPoly::constant(sys.rank, Scalar(1));
    for (const auto& r : sys.roots)
        if (r.is_reduced) phi *= r.as_linear_form();
    return phi;
}

/// grad f = kappa^{-1} (df/dx_1, ..., df/dx_l).
inline PolyVectorField gradient(const MultiPoly& f, const ScalarMatrix& kappa_inv) {
    const std::size_t l = kappa_inv.rows();
    std::vector<MultiPoly> d;
    for (std::size_t k = 0; k < l; ++k) d.push_back(f.derivative(k));
    PolyVectorField g(std::vector<MultiPoly>(l, MultiPoly(f.num_vars())));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (!kappa_inv(i, j).is_zero()) g[i] += kappa_inv(i, j) * d[j];
    return g;
}

inline ScalarMatrix kappa_inverse(const ScalarMatrix& kappa_on_a) {
    auto inv = inverse(kappa_on_a);
    if (!inv) throw ValidationError("kappa-degenerate-on-a", "kappa restricted to a is degenerate");
    return *inv;
}

/// A_ij = grad p_i . p_j.
inline PolyMatrix gram_matrix(const std::vector<PolyVectorField>& grads, const std::vector<MultiPoly>& gens) {
    const std::size_t k = gens.size();
    const std::size_t n = k == 0 ? 0 : gens[0].num_vars();
    PolyMatrix a(k, k, MultiPoly(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = grads[i].apply(gens[j]);
    return a;
}

struct GramPhi {
    MultiPoly det;
    Scalar c;
};

/// det(grad p_i . p_j) together with the constant c of det = c Phi.
inline GramPhi gram_phi(const PolyMatrix& gram, const MultiPoly& phi) {
    MultiPoly det = gram.rows() == 0 ? MultiPoly::constant(phi.num_vars(), Scalar(1)) : det_adjugate(gram).det;
    auto q = poly_divides(det, phi);
    if (!q || !q->is_constant() || q->is_zero()) throw InternalError("Gram determinant not proportional to Phi");
    return {det, q->constant_term()};
}

/// Global data on a: generators, gradients, Phi and the Gram identity.
struct InvariantChart {
    std::size_t rank = 0;
    ScalarMatrix kappa_on_a;
    ScalarMatrix kappa_inv;
    std::vector<MultiPoly> generators;
    std::vector<unsigned> degrees;
    std::vector<PolyVectorField> gradients;
    MultiPoly phi;
    PolyMatrix gram;
    MultiPoly gram_det;
    Scalar gram_constant;
    bool real_generators = true;  // every p_i has real coefficients
    bool real_phi = true;
};

inline InvariantChart invariant_chart(const RestrictedRootSystem& sys, const WeylGroup& w,
                                      const ScalarMatrix& kappa_on_a) {
    InvariantChart ch;
    ch.rank = sys.rank;
    ch.kappa_on_a = kappa_on_a;
    ch.kappa_inv = kappa_inverse(kappa_on_a);
    GeneratorSystem g = invariant_generators(w);
    ch.generators = std::move(g.generators);
    ch.degrees = std::move(g.degrees);
    for (const auto& p : ch.generators) ch.gradients.push_back(gradient(p, ch.kappa_inv));
    ch.phi = phi_from_roots(sys);
    for (const auto& e : w.elements)
        if (!(compose_linear(ch.phi, e) == ch.phi)) throw InternalError("Phi is not W-invariant");
    ch.gram = gram_matrix(ch.gradients, ch.generators);
    GramPhi gp = gram_phi(ch.gram, ch.phi);
    ch.gram_det = std::move(gp.det);
    ch.gram_constant = gp.c;
    for (const auto& p : ch.generators) ch.real_generators = ch.real_generators && p.has_real_coefficients();
    ch.real_phi = ch.phi.has_real_coefficients();
    return ch;
}

// ---- local chart at a point ----------------------------------------------

/// Generators q_1..q_l of C[a]^{W^a}, homogeneous in u = x - a, written as
/// polynomials in x. The first r come from W^a acting on b, the remaining
/// ones are linear coordinates on c.
struct LocalChart {
    Vector base_point;
    LocalSubsystem local;
    std::size_t r = 0;
    std::vector<MultiPoly> generators;
    std::vector<unsigned> degrees;
    std::vector<PolyVectorField> gradients;
    MultiPoly psi;
    MultiPoly phi_local;
    bool global = false;  // base point 0: the chart is the global one
};

inline LocalChart local_chart(const RestrictedRootSystem& sys, const WeylGroup& weyl, const InvariantChart& chart,
                              const Vector& a_point) {
    const std::size_t l = sys.rank;
    LocalChart lc;
    lc.base_point = a_point;
    lc.local = local_subsystem(sys, weyl, chart.kappa_on_a, a_point);

    lc.psi = MultiPoly::constant(l, Scalar(1));
    lc.phi_local = MultiPoly::constant(l, Scalar(1));
    for (const auto& root : sys.roots) {
        if (!root.is_reduced) continue;
        if (root(a_point).is_zero())
            lc.phi_local *= root.as_linear_form();
        else
            lc.psi *= root.as_linear_form();
    }
    if (!(lc.psi * lc.phi_local == chart.phi)) throw InternalError("Phi != Psi^a Phi^a on a");
    if (lc.psi.evaluate(a_point).is_zero()) throw InternalError("Psi^a vanishes at the base point");

    if (is_zero_vector(a_point)) {
        lc.global = true;
        lc.r = l;
        lc.generators = chart.generators;
        lc.degrees = chart.degrees;
        lc.gradients = chart.gradients;
        return lc;
    }

    const std::size_t r = lc.local.b_basis.size();
    lc.r = r;
    std::vector<Vector> cols = lc.local.b_basis;
    cols.insert(cols.end(), lc.local.c_basis.begin(), lc.local.c_basis.end());
    ScalarMatrix t = from_columns(cols, l);
    ScalarMatrix tinv = invert_or_throw(t, "b + c basis");

    // z = T^{-1}(x - a): row k of T^{-1} and shift -(T^{-1} a)_k.
    Vector shift = scale(tinv.apply(a_point), Scalar(-1));
    std::vector<MultiPoly> z;
    for (std::size_t k = 0; k < l; ++k) {
        MultiPoly zk = MultiPoly::linear(tinv.row(k));
        zk += MultiPoly::constant(l, shift[k]);
        z.push_back(std::move(zk));
    }

    if (r > 0) {
        std::vector<ScalarMatrix> gens_b;
        for (const auto& g : lc.local.group.generators) {
            ScalarMatrix conj = tinv * g * t;
            ScalarMatrix gb(r, r, Scalar(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) gb(i, j) = conj(i, j);
            gens_b.push_back(std::move(gb));
        }
        WeylGroup wb = generate_group(std::move(gens_b), r);
        GeneratorSystem gb = invariant_generators(wb);
        std::vector<MultiPoly> zb(z.begin(), z.begin() + static_cast<long>(r));
        for (std::size_t i = 0; i < r; ++i) {
            lc.generators.push_back(gb.generators[i].compose(zb));
            lc.degrees.push_back(gb.degrees[i]);
        }
    }
    for (std::size_t k = r; k < l; ++k) {
        lc.generators.push_back(z[k]);
        lc.degrees.push_back(1);
    }
    for (const auto& q : lc.generators) {
        if (!is_invariant(q, lc.local.group)) throw InternalError("local generator not W^a-invariant");
        lc.gradients.push_back(gradient(q, chart.kappa_inv));
    }
    return lc;
}

}  // namespace symcart
