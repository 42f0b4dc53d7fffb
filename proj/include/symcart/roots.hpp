#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "lie.hpp"
#include "matrix.hpp"
#include "spectrum.hpp"

namespace symcart {

/// Restricted root: a nonzero linear functional on a, stored by its values
/// on the Cartan basis (coordinates in the dual basis).
struct RestrictedRoot {
    Vector functional;
    std::size_t multiplicity = 1;
    bool is_reduced = true;

    Scalar operator()(std::span<const Scalar> x) const {
        Scalar s(0);
        for (std::size_t k = 0; k < functional.size(); ++k) s += functional[k] * x[k];
        return s;
    }
    MultiPoly as_linear_form() const { return MultiPoly::linear(functional); }
};

struct RestrictedRootSystem {
    std::size_t rank = 0;
    std::size_t centralizer_dim = 0;  // dim g_C^0, the centralizer of a in g
    std::vector<RestrictedRoot> roots;

    std::size_t size() const noexcept { return roots.size(); }

    /// Index of the root with the given functional, or -1.
    long find(const Vector& f) const {
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (roots[k].functional == f) return static_cast<long>(k);
        return -1;
    }

    std::vector<RestrictedRoot> reduced() const {
        std::vector<RestrictedRoot> out;
        for (const auto& r : roots)
            if (r.is_reduced) out.push_back(r);
        return out;
    }

    std::size_t multiplicity_sum() const {
        std::size_t s = 0;
        for (const auto& r : roots) s += r.multiplicity;
        return s;
    }
};

inline bool functional_less(const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Scalar& x, const Scalar& y) { return lexicographic_less(x, y); });
}

/// Flags alpha as reduced iff alpha/2 is not a root.
inline void reduced_subset(RestrictedRootSystem& sys) {
    for (auto& r : sys.roots) r.is_reduced = sys.find(scale(r.functional, Scalar::fraction(1, 2))) < 0;
}

/// Joint eigen-decomposition of ad(a_C) on g_C. Eigenvalues are read at a
/// random rational point a0 of a; a0 is re-drawn until every ad(a_i) acts by a
/// scalar on each eigenspace of ad(a0).
inline RestrictedRootSystem restricted_roots(const SymmetricPair& pair, std::uint64_t seed = 0) {
    const std::size_t n = pair.dim(), l = pair.rank();
    RestrictedRootSystem sys;
    sys.rank = l;
    std::vector<ScalarMatrix> ads;
    for (const auto& a : pair.cartan) ads.push_back(pair.algebra.ad(a));
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Vector coords = random_cartan_coords(l, rng);
        ScalarMatrix m(n, n, Scalar(0));
        for (std::size_t k = 0; k < l; ++k) m = m + coords[k] * ads[k];
        MultiPoly minimal = minimal_polynomial(m);
        if (!is_squarefree(minimal)) throw ValidationError("cartan-semisimple", "generic element of a is not semisimple");
        auto eigen = gaussian_rational_roots(minimal);
        if (!eigen) throw UnsupportedSpectrum("roots outside Q(i); pair unsupported");
        std::vector<RestrictedRoot> roots;
        std::size_t zero_dim = 0, total = 0;
        bool generic = true;
        for (const Scalar& lam : *eigen) {
            std::vector<Vector> space = kernel(m - lam * scalar_identity(n));
            total += space.size();
            Vector functional(l, Scalar(0));
            for (std::size_t k = 0; k < l && generic; ++k) {
                const Vector& v0 = space.front();
                Vector img = ads[k].apply(v0);
                std::size_t piv = 0;
                while (v0[piv].is_zero()) ++piv;
                Scalar mu = img[piv] / v0[piv];
                for (const auto& v : space)
                    if (!(ads[k].apply(v) == scale(v, mu))) generic = false;
                functional[k] = mu;
            }
            if (!generic) break;
            if (is_zero_vector(functional)) {
                if (!lam.is_zero()) generic = false;
                zero_dim += space.size();
            } else {
                roots.push_back({functional, space.size(), true});
            }
        }
        if (!generic) continue;
        if (total != n) throw InternalError("eigenspaces of a semisimple element do not span g");
        std::sort(roots.begin(), roots.end(),
                  [](const RestrictedRoot& a, const RestrictedRoot& b) { return functional_less(a.functional, b.functional); });
        sys.roots = std::move(roots);
        sys.centralizer_dim = zero_dim;
        for (const auto& r : sys.roots) {
            long neg = sys.find(scale(r.functional, Scalar(-1)));
            if (neg < 0 || sys.roots[static_cast<std::size_t>(neg)].multiplicity != r.multiplicity)
                throw InternalError("root system not symmetric under alpha -> -alpha");
        }
        reduced_subset(sys);
        return sys;
    }
    throw InternalError("no generic point of a found after 32 draws");
}

/// Finite matrix group acting on a_C (coordinates on the Cartan basis).
struct WeylGroup {
    std::size_t rank = 0;
    std::vector<ScalarMatrix> generators;
    std::vector<ScalarMatrix> elements;  // elements[0] is the identity

    std::size_t order() const noexcept { return elements.size(); }
    bool contains(const ScalarMatrix& m) const {
        return std::find(elements.begin(), elements.end(), m) != elements.end();
    }
};

inline std::string matrix_key(const ScalarMatrix& m) {
    std::string k;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) k += m(r, c).str() + ",";
    return k;
}

inline constexpr std::size_t kWeylOrderBound = 100000;

/// Breadth-first closure of the generated group.
inline WeylGroup generate_group(std::vector<ScalarMatrix> generators, std::size_t rank) {
    WeylGroup w;
    w.rank = rank;
    w.generators = std::move(generators);
    std::unordered_map<std::string, std::size_t> seen;
    ScalarMatrix id = scalar_identity(rank);
    w.elements.push_back(id);
    seen.emplace(matrix_key(id), 0);
    for (std::size_t head = 0; head < w.elements.size(); ++head) {
        for (const auto& g : w.generators) {
            ScalarMatrix next = g * w.elements[head];
            std::string key = matrix_key(next);
            if (seen.count(key)) continue;
            if (w.elements.size() >= kWeylOrderBound)
                throw InternalError("group closure exceeded " + std::to_string(kWeylOrderBound) + " elements");
            seen.emplace(std::move(key), w.elements.size());
            w.elements.push_back(std::move(next));
        }
    }
    return w;
}

/// kappa-induced bilinear form on a*: <alpha, beta> = alpha K^{-1} beta^T.
inline Scalar dual_form(const ScalarMatrix& kappa_inv, const Vector& a, const Vector& b) {
    return bilinear(kappa_inv, a, b);
}

/// The kappa-dual vector h_alpha with kappa(h_alpha, x) = alpha(x).
inline Vector coroot_direction(const ScalarMatrix& kappa_inv, const Vector& alpha) { return kappa_inv.apply(alpha); }

/// s_alpha(x) = x - 2 alpha(x) / <alpha, alpha> h_alpha.
inline ScalarMatrix reflection(const ScalarMatrix& kappa_inv, const Vector& alpha) {
    Scalar norm = dual_form(kappa_inv, alpha, alpha);
    if (norm.is_zero()) throw InternalError("isotropic root: <alpha, alpha> = 0");
    Vector h = coroot_direction(kappa_inv, alpha);
    const std::size_t l = alpha.size();
    ScalarMatrix s = scalar_identity(l);
    Scalar f = Scalar(2) / norm;
    for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < l; ++c) s(r, c) -= f * h[r] * alpha[c];
    return s;
}

inline ScalarMatrix invert_or_throw(const ScalarMatrix& m, const char* what) {
    auto inv = inverse(m);
    if (!inv) throw Error(std::string(what) + " is singular");
    return *inv;
}

/// Reflection group of the root system (trivial group when there are no roots).
inline WeylGroup weyl_group(const RestrictedRootSystem& sys, const ScalarMatrix& kappa_on_a) {
    ScalarMatrix kinv = invert_or_throw(kappa_on_a, "kappa restricted to a");
    std::vector<ScalarMatrix> gens;
    for (const auto& r : sys.roots) {
        if (!r.is_reduced) continue;
        ScalarMatrix s = reflection(kinv, r.functional);
        if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(std::move(s));
    }
    return generate_group(std::move(gens), sys.rank);
}

/// alpha o w as a functional (row vector times w).
inline Vector pull_back(const Vector& alpha, const ScalarMatrix& w) {
    Vector out(alpha.size(), Scalar(0));
    for (std::size_t c = 0; c < w.cols(); ++c)
        for (std::size_t r = 0; r < w.rows(); ++r) out[c] += alpha[r] * w(r, c);
    return out;
}

/// Every element maps the root set to itself, multiplicities included.
inline bool permutes_roots(const WeylGroup& w, const RestrictedRootSystem& sys) {
    for (const auto& g : w.elements)
        for (const auto& r : sys.roots) {
            long k = sys.find(pull_back(r.functional, g));
            if (k < 0 || sys.roots[static_cast<std::size_t>(k)].multiplicity != r.multiplicity) return false;
        }
    return true;
}

/// Roots vanishing at a point, the local reflection group W^a they generate,
/// and the splitting a = b + c (b spanned by their kappa-duals, c fixed by W^a).
struct LocalSubsystem {
    Vector a_point;
    RestrictedRootSystem roots;
    WeylGroup group;
    std::vector<Vector> b_basis;
    std::vector<Vector> c_basis;
};

inline LocalSubsystem local_subsystem(const RestrictedRootSystem& sys, const WeylGroup& weyl,
                                      const ScalarMatrix& kappa_on_a, const Vector& a_point) {
    const std::size_t l = sys.rank;
    if (a_point.size() != l) throw InputError("point has " + std::to_string(a_point.size()) + " coordinates, rank is " +
                                              std::to_string(l));
    ScalarMatrix kinv = invert_or_throw(kappa_on_a, "kappa restricted to a");
    LocalSubsystem loc;
    loc.a_point = a_point;
    loc.roots.rank = l;
    loc.roots.centralizer_dim = sys.centralizer_dim;
    for (const auto& r : sys.roots)
        if (r(a_point).is_zero()) {
            loc.roots.roots.push_back(r);
            loc.roots.centralizer_dim += r.multiplicity;
        }
    reduced_subset(loc.roots);
    loc.group = weyl_group(loc.roots, kappa_on_a);

    for (const auto& g : loc.group.elements) {
        if (!weyl.contains(g)) throw InternalError("local reflection outside W");
        if (!(g.apply(a_point) == a_point)) throw InternalError("local group does not fix the point");
    }
    std::size_t stabilizer = 0;
    for (const auto& g : weyl.elements)
        if (g.apply(a_point) == a_point) ++stabilizer;
    if (stabilizer != loc.group.order()) throw InternalError("stabilizer of the point differs from W^a");

    std::vector<Vector> duals;
    for (const auto& r : loc.roots.roots) duals.push_back(coroot_direction(kinv, r.functional));
    loc.b_basis = span_basis(duals, l);

    ScalarMatrix stacked(loc.group.generators.size() * l, l, Scalar(0));
    for (std::size_t g = 0; g < loc.group.generators.size(); ++g)
        for (std::size_t r = 0; r < l; ++r)
            for (std::size_t c = 0; c < l; ++c)
                stacked(g * l + r, c) = loc.group.generators[g](r, c) - Scalar(r == c ? 1 : 0);
    loc.c_basis = kernel(stacked);

    std::vector<Vector> all = loc.b_basis;
    all.insert(all.end(), loc.c_basis.begin(), loc.c_basis.end());
    if (all.size() != l || (l > 0 && rank(from_columns(all, l)) != l)) throw InternalError("a != b + c");
    return loc;
}

}  // namespace symcart
