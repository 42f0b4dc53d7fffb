#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "invariants.hpp"

namespace symcart {

/// Result of writing X = sum R_i grad q_i.
struct SolomonResult {
    std::vector<MultiPoly> coefficients;
    std::size_t kernel_dim = 0;  // dimension of the homogeneous solution space; 0 means unique
};

namespace vf_detail {

/// Decomposition in coordinates where every generator is homogeneous.
inline SolomonResult decompose_homogeneous(const PolyVectorField& x, const std::vector<MultiPoly>& gens,
                                           const std::vector<unsigned>& degrees,
                                           const std::vector<PolyVectorField>& grads) {
    const std::size_t l = x.size(), k = gens.size();
    const std::size_t n = l == 0 ? 0 : x[0].num_vars();
    SolomonResult out;
    out.coefficients.assign(k, MultiPoly(n));
    for (int e = 0; e <= x.degree(); ++e) {
        PolyVectorField xe = x;
        for (auto& c : xe.components) c = c.homogeneous_component(static_cast<unsigned>(e));
        // unknowns: coefficient of p^beta in R_i, weighted degree e - d_i + 1
        struct Unknown {
            std::size_t i;
            Exponent beta;
            PolyVectorField field;
        };
        std::vector<Unknown> unknowns;
        for (std::size_t i = 0; i < k; ++i) {
            int target = e - static_cast<int>(degrees[i]) + 1;
            if (target < 0) continue;
            for (auto& b : weighted_exponents(degrees, static_cast<unsigned>(target)))
                unknowns.push_back({i, b, power_product(gens, b, n) * grads[i]});
        }
        if (unknowns.empty()) {
            if (!xe.is_zero()) throw InternalError("Solomon system has no unknowns at degree " + std::to_string(e));
            continue;
        }
        std::vector<inv_detail::CoefficientSystem> sys(l);
        for (std::size_t c = 0; c < l; ++c) {
            sys[c].add_support(xe[c]);
            for (const auto& u : unknowns) sys[c].add_support(u.field[c]);
            sys[c].finalize();
        }
        auto flatten = [&](const PolyVectorField& f) {
            Vector v;
            for (std::size_t c = 0; c < l; ++c) {
                Vector part = sys[c].vec(f[c]);
                v.insert(v.end(), part.begin(), part.end());
            }
            return v;
        };
        std::vector<Vector> cols;
        for (const auto& u : unknowns) cols.push_back(flatten(u.field));
        Vector rhs = flatten(xe);
        LinearSolution sol = solve_exact(from_columns(cols, rhs.size()), rhs);
        if (sol.kind == SolutionKind::none) throw InternalError("Solomon system inconsistent at degree " + std::to_string(e));
        out.kernel_dim += sol.kernel.size();
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if (!sol.particular[j].is_zero())
                out.coefficients[unknowns[j].i] += power_product(gens, unknowns[j].beta, n) * sol.particular[j];
    }
    return out;
}

inline PolyVectorField reassemble(const std::vector<MultiPoly>& coeffs, const std::vector<PolyVectorField>& grads,
                                  std::size_t rank, std::size_t num_vars) {
    PolyVectorField x(std::vector<MultiPoly>(rank, MultiPoly(num_vars)));
    for (std::size_t i = 0; i < coeffs.size(); ++i) x = x + coeffs[i] * grads[i];
    return x;
}

}  // namespace vf_detail

inline PolyVectorField reassemble(const std::vector<MultiPoly>& coeffs, const std::vector<PolyVectorField>& grads) {
    const std::size_t rank = grads.empty() ? 0 : grads[0].size();
    const std::size_t n = rank == 0 ? 0 : grads[0][0].num_vars();
    return vf_detail::reassemble(coeffs, grads, rank, n);
}

/// Unique X = sum R_i grad p_i with R_i in C[a]^W.
inline SolomonResult solomon_decompose(const PolyVectorField& x, const InvariantChart& chart, const WeylGroup& w) {
    if (!is_invariant_field(x, w)) throw InputError("vector field is not W-invariant");
    SolomonResult r = vf_detail::decompose_homogeneous(x, chart.generators, chart.degrees, chart.gradients);
    if (r.kernel_dim != 0) throw InternalError("Solomon decomposition is not unique");
    if (!(reassemble(r.coefficients, chart.gradients) == x)) throw InternalError("Solomon reassembly mismatch");
    return r;
}

/// Same over a local chart: X = sum R_i grad q_i with R_i in C[a]^{W^a}.
/// The system is solved in u = x - a, where the q_i are homogeneous.
inline SolomonResult solomon_decompose(const PolyVectorField& x, const LocalChart& lc) {
    const WeylGroup& wa = lc.local.group;
    if (!is_invariant_field(x, wa)) throw InputError("vector field is not W^a-invariant");
    const Vector& a = lc.base_point;
    Vector minus_a = scale(a, Scalar(-1));
    std::vector<MultiPoly> gens_u;
    for (const auto& q : lc.generators) gens_u.push_back(translate(q, a));
    std::vector<PolyVectorField> grads_u;
    for (const auto& g : lc.gradients) grads_u.push_back(g.translate(a));
    SolomonResult r = vf_detail::decompose_homogeneous(x.translate(a), gens_u, lc.degrees, grads_u);
    if (r.kernel_dim != 0) throw InternalError("local Solomon decomposition is not unique");
    for (auto& c : r.coefficients) c = translate(c, minus_a);
    if (!(reassemble(r.coefficients, lc.gradients) == x)) throw InternalError("local Solomon reassembly mismatch");
    return r;
}

// ---- derivations ---------------------------------------------------------

/// A derivation of C[a]^W given by its values D p_1, ..., D p_l.
struct InvariantDerivation {
    std::vector<MultiPoly> images;
};

inline void require_invariant_derivation(const InvariantDerivation& d, const InvariantChart& chart, const WeylGroup& w) {
    if (d.images.size() != chart.generators.size())
        throw InputError("derivation has " + std::to_string(d.images.size()) + " images, expected " +
                         std::to_string(chart.generators.size()));
    for (std::size_t k = 0; k < d.images.size(); ++k) {
        if (d.images[k].num_vars() != chart.rank) throw InputError("derivation image arity mismatch");
        if (!(reynolds(w, d.images[k]) == d.images[k]))
            throw InputError("derivation image " + std::to_string(k + 1) + " is not W-invariant");
    }
}

/// D_X p_j = X . p_j.
inline InvariantDerivation induced_derivation(const PolyVectorField& x, const InvariantChart& chart) {
    InvariantDerivation d;
    for (const auto& p : chart.generators) d.images.push_back(x.apply(p));
    return d;
}

/// Df for f in C[a]^W: with f = F(p), Df = sum dF/dy_i (p) D p_i.
inline MultiPoly apply_derivation(const InvariantDerivation& d, const MultiPoly& f, const InvariantChart& chart) {
    auto big_f = express_in_generators(f, chart.generators, chart.degrees);
    if (!big_f) throw InputError("polynomial is not in the invariant subalgebra");
    MultiPoly out(chart.rank);
    for (std::size_t i = 0; i < chart.generators.size(); ++i) {
        MultiPoly partial = big_f->derivative(i);
        if (partial.is_zero()) continue;
        out += partial.compose(chart.generators) * d.images[i];
    }
    return out;
}

struct StabilityResult {
    bool stable = false;
    MultiPoly d_phi;
    MultiPoly quotient;   // D Phi / Phi when stable
    MultiPoly remainder;  // nonzero remainder otherwise
};

/// Whether Phi divides D Phi.
inline StabilityResult ideal_stable(const InvariantDerivation& d, const InvariantChart& chart) {
    StabilityResult r;
    r.d_phi = apply_derivation(d, chart.phi, chart);
    DivisionResult q = divide(r.d_phi, chart.phi);
    r.stable = q.remainder.is_zero();
    r.quotient = std::move(q.quotient);
    r.remainder = std::move(q.remainder);
    if (!r.stable) r.quotient = MultiPoly(chart.rank);
    return r;
}

struct NotLiftable {
    std::size_t index = 0;  // first psi_i not divisible by Phi
    MultiPoly psi;
    MultiPoly remainder;
};

struct Lifted {
    std::vector<MultiPoly> phi;
    PolyVectorField field;  // sum phi_i grad p_i
};

using LiftResult = std::variant<Lifted, NotLiftable>;

/// Cramer lifting: psi = (1/c) adj(A)^T Dp solves Phi Dp_j = sum_i psi_i A_ij;
/// the lift exists iff Phi divides every psi_i.
inline LiftResult lift_derivation(const InvariantDerivation& d, const InvariantChart& chart) {
    const std::size_t l = chart.generators.size(), n = chart.rank;
    std::vector<MultiPoly> psi(l, MultiPoly(n));
    if (l > 0) {
        PolyMatrix adj = det_adjugate(chart.gram).adj;
        Scalar inv_c = chart.gram_constant.inverse();
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t k = 0; k < l; ++k) psi[i] += adj(k, i) * d.images[k];
            psi[i] *= inv_c;
        }
    }
    for (std::size_t j = 0; j < l; ++j) {
        MultiPoly rhs(n);
        for (std::size_t i = 0; i < l; ++i) rhs += psi[i] * chart.gram(i, j);
        if (!(rhs == chart.phi * d.images[j])) throw InternalError("Cramer system violated");
    }
    Lifted out;
    for (std::size_t i = 0; i < l; ++i) {
        DivisionResult q = divide(psi[i], chart.phi);
        if (!q.remainder.is_zero()) return NotLiftable{i, psi[i], q.remainder};
        out.phi.push_back(std::move(q.quotient));
    }
    out.field = reassemble(out.phi, chart.gradients);
    if (l == 0) out.field = PolyVectorField::zero(n);
    InvariantDerivation back = induced_derivation(out.field, chart);
    if (!(back.images == d.images)) throw InternalError("lifted field does not reproduce the derivation");
    return out;
}

// ---- transition matrix -----------------------------------------------------

struct TransitionMatrix {
    PolyMatrix m;  // grad p_j = sum_i m_ij grad q_i
    MultiPoly det;
    Scalar det_at_point;
};

inline TransitionMatrix transition_matrix(const InvariantChart& chart, const LocalChart& lc) {
    const std::size_t l = chart.generators.size(), n = chart.rank;
    TransitionMatrix t{PolyMatrix(l, l, MultiPoly(n)), MultiPoly(n), Scalar(0)};
    for (std::size_t j = 0; j < l; ++j) {
        SolomonResult col = solomon_decompose(chart.gradients[j], lc);
        for (std::size_t i = 0; i < l; ++i) {
            if (!is_invariant(col.coefficients[i], lc.local.group))
                throw InternalError("transition entry not W^a-invariant");
            t.m(i, j) = std::move(col.coefficients[i]);
        }
    }
    t.det = l == 0 ? MultiPoly::constant(n, Scalar(1)) : det_adjugate(t.m).det;
    t.det_at_point = t.det.evaluate(lc.base_point);
    if (t.det_at_point.is_zero()) throw InternalError("transition matrix is singular at the base point");
    return t;
}

}  // namespace symcart
