#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace symcart {

// Univariate polynomials are MultiPoly values in one variable t.

inline MultiPoly univariate_gcd(MultiPoly a, MultiPoly b) {
    while (!b.is_zero()) {
        MultiPoly r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependency among I, A, A^2, ... (vectorized).
inline MultiPoly minimal_polynomial(const ScalarMatrix& a) {
    if (!a.is_square()) throw Error("minimal polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Vector> powers;
    ScalarMatrix p = scalar_identity(n);
    auto flatten = [n](const ScalarMatrix& m) {
        Vector v;
        v.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
        return v;
    };
    for (std::size_t k = 0; k <= n; ++k) {
        Vector target = flatten(p);
        if (!powers.empty()) {
            LinearSolution sol = solve_exact(from_columns(powers, n * n), target);
            if (sol.kind != SolutionKind::none) {
                MultiPoly m = MultiPoly::monomial(Exponent{static_cast<unsigned>(k)});
                for (std::size_t j = 0; j < k; ++j)
                    m.add_term(Exponent{static_cast<unsigned>(j)}, -sol.particular[j]);
                return m;
            }
        } else if (is_zero_vector(target)) {
            return MultiPoly::constant(1, Scalar(1));
        }
        powers.push_back(std::move(target));
        p = p * a;
    }
    throw InternalError("minimal polynomial degree exceeds matrix size");
}

/// Repeated part gcd(m, m'); constant iff m is squarefree.
inline MultiPoly repeated_factor(const MultiPoly& m) { return univariate_gcd(m, m.derivative(0)); }

inline bool is_squarefree(const MultiPoly& m) { return repeated_factor(m).is_constant(); }

struct SemisimplicityResult {
    bool semisimple = false;
    MultiPoly minimal;
    MultiPoly repeated;  // constant 1 when semisimple
};

/// A matrix is diagonalizable over C iff its minimal polynomial is squarefree.
inline SemisimplicityResult semisimplicity(const ScalarMatrix& a) {
    SemisimplicityResult r;
    r.minimal = minimal_polynomial(a);
    r.repeated = repeated_factor(r.minimal);
    r.semisimple = r.repeated.is_constant();
    return r;
}

namespace detail {

using cplx = std::complex<long double>;

inline cplx to_complex(const Scalar& s) {
    return {static_cast<long double>(s.re().get_d()), static_cast<long double>(s.im().get_d())};
}

/// Durand-Kerner iteration on a univariate polynomial with complex coefficients.
inline std::vector<cplx> approximate_roots(const MultiPoly& f) {
    int deg = f.degree();
    if (deg <= 0) return {};
    std::vector<cplx> c(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& [e, v] : f.terms()) c[e[0]] = to_complex(v);
    cplx lead = c.back();
    for (auto& x : c) x /= lead;
    long double radius = 1;
    for (int k = 0; k < deg; ++k) radius = std::max(radius, 1 + std::abs(c[static_cast<std::size_t>(k)]));
    std::vector<cplx> z(static_cast<std::size_t>(deg));
    cplx seed(0.4L, 0.9L);
    for (int k = 0; k < deg; ++k) z[static_cast<std::size_t>(k)] = radius * std::pow(seed, k);
    auto eval = [&](cplx x) {
        cplx acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long double delta = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            cplx denom = 1;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (i != j) denom *= z[i] - z[j];
            if (std::abs(denom) == 0) denom = 1e-30L;
            cplx step = eval(z[i]) / denom;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-18L) break;
    }
    return z;
}

/// Continued-fraction convergents of x with denominators up to max_den.
inline std::vector<Rational> convergents(long double x, long max_den = 1000000000L) {
    std::vector<Rational> out;
    mpz_class h1 = 1, h0 = 0, k1 = 0, k0 = 1;
    long double r = x;
    for (int i = 0; i < 40; ++i) {
        long double fl = std::floor(r);
        if (std::abs(fl) > 1e15L) break;
        mpz_class a(static_cast<long>(fl));
        mpz_class h = a * h1 + h0, k = a * k1 + k0;
        if (k > max_den) break;
        out.emplace_back(h, k);
        out.back().canonicalize();
        h0 = h1;
        h1 = h;
        k0 = k1;
        k1 = k;
        long double frac = r - fl;
        if (std::abs(frac) < 1e-15L) break;
        r = 1 / frac;
    }
    return out;
}

}  // namespace detail

/// Exact Gaussian-rational roots of a squarefree univariate polynomial, or
/// nullopt when some root does not lie in Q(i). Candidates come from a
/// floating-point root finder; every returned root is verified exactly.
inline std::optional<std::vector<Scalar>> gaussian_rational_roots(MultiPoly f) {
    std::vector<Scalar> found;
    for (int round = 0; round < 8 && f.degree() > 0; ++round) {
        bool progress = false;
        for (const auto& z : detail::approximate_roots(f)) {
            auto re = detail::convergents(z.real());
            auto im = detail::convergents(z.imag());
            if (std::abs(z.imag()) < 1e-12L) im = {Rational(0)};
            if (std::abs(z.real()) < 1e-12L) re = {Rational(0)};
            std::optional<Scalar> hit;
            for (auto ir = re.rbegin(); ir != re.rend() && !hit; ++ir)
                for (auto ii = im.rbegin(); ii != im.rend() && !hit; ++ii) {
                    Scalar cand(*ir, *ii);
                    Vector pt{cand};
                    if (f.evaluate(pt).is_zero()) hit = cand;
                }
            if (!hit) continue;
            MultiPoly lin = MultiPoly::variable(1, 0) - MultiPoly::constant(1, *hit);
            auto q = poly_divides(f, lin);
            if (!q) continue;
            f = std::move(*q);
            found.push_back(*hit);
            progress = true;
            if (f.degree() <= 0) break;
        }
        if (!progress) break;
    }
    if (f.degree() > 0) return std::nullopt;
    return found;
}

}  // namespace symcart
