#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "spectrum.hpp"

namespace symcart {

/// Finite-dimensional Lie algebra by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
class LieAlgebra {
  public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim) : n_(dim), c_(dim * dim * dim, Scalar(0)) {}

    std::size_t dim() const noexcept { return n_; }

    Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    Vector bracket(const Vector& x, const Vector& y) const {
        Vector out(n_, Scalar(0));
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < n_; ++k)
                    if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
            }
        }
        return out;
    }

    /// Matrix of ad(x): column j holds [x, e_j].
    ScalarMatrix ad(const Vector& x) const {
        ScalarMatrix m(n_, n_, Scalar(0));
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (!c(i, j, k).is_zero()) m(k, j) += x[i] * c(i, j, k);
        }
        return m;
    }

    Vector basis_vector(std::size_t i) const {
        Vector v(n_, Scalar(0));
        v[i] = Scalar(1);
        return v;
    }

    /// Throws ValidationError naming the failing identity.
    void validate() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (!(c(i, j, k) == -c(j, i, k)))
                        throw ValidationError("antisymmetry", "c[" + std::to_string(i) + "][" + std::to_string(j) +
                                                                  "][" + std::to_string(k) + "] != -c[j][i][k]");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t k = j + 1; k < n_; ++k) {
                    Vector ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
                    Vector s = add(add(bracket(ei, bracket(ej, ek)), bracket(ej, bracket(ek, ei))),
                                   bracket(ek, bracket(ei, ej)));
                    if (!is_zero_vector(s))
                        throw ValidationError("jacobi", "Jacobi identity fails on basis triple (" + std::to_string(i) +
                                                            ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
                }
    }

    bool is_abelian() const {
        return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

  private:
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

/// Coordinates of square matrices with respect to a fixed linearly independent family.
class MatrixBasis {
  public:
    explicit MatrixBasis(std::vector<ScalarMatrix> basis) : basis_(std::move(basis)) {
        if (basis_.empty()) return;
        size_ = basis_[0].rows();
        std::vector<Vector> cols;
        for (const auto& b : basis_) cols.push_back(flatten(b));
        system_ = from_columns(cols, size_ * size_);
        if (rank(system_) != basis_.size()) throw InputError("matrix basis is linearly dependent");
    }

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t matrix_size() const noexcept { return size_; }
    const ScalarMatrix& operator[](std::size_t k) const { return basis_[k]; }

    Vector coordinates(const ScalarMatrix& x) const {
        LinearSolution s = solve_exact(system_, flatten(x));
        if (s.kind != SolutionKind::unique) throw InputError("matrix outside the span of the basis");
        return s.particular;
    }

    ScalarMatrix element(const Vector& coords) const {
        ScalarMatrix m(size_, size_, Scalar(0));
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (!coords[k].is_zero()) m = m + coords[k] * basis_[k];
        return m;
    }

  private:
    Vector flatten(const ScalarMatrix& m) const {
        Vector v;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
        return v;
    }

    std::vector<ScalarMatrix> basis_;
    std::size_t size_ = 0;
    ScalarMatrix system_;
};

inline ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b - b * a; }

inline Scalar trace(const ScalarMatrix& m) {
    Scalar t(0);
    for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
    return t;
}

/// Structure constants of a matrix Lie algebra spanned by the basis.
inline LieAlgebra lie_algebra_from_matrices(const MatrixBasis& basis) {
    LieAlgebra g(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i)
        for (std::size_t j = 0; j < basis.dim(); ++j) {
            Vector v = basis.coordinates(commutator(basis[i], basis[j]));
            for (std::size_t k = 0; k < basis.dim(); ++k) g.c(i, j, k) = v[k];
        }
    return g;
}

/// Gram matrix of the trace form tr(XY) of a faithful matrix representation.
inline ScalarMatrix trace_form(const MatrixBasis& basis) {
    ScalarMatrix k(basis.dim(), basis.dim(), Scalar(0));
    for (std::size_t i = 0; i < basis.dim(); ++i)
        for (std::size_t j = 0; j < basis.dim(); ++j) k(i, j) = trace(basis[i] * basis[j]);
    return k;
}

inline ScalarMatrix killing_form(const LieAlgebra& g) {
    std::vector<ScalarMatrix> ads;
    for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(g.ad(g.basis_vector(i)));
    ScalarMatrix k(g.dim(), g.dim(), Scalar(0));
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) k(i, j) = trace(ads[i] * ads[j]);
    return k;
}

inline Scalar bilinear(const ScalarMatrix& gram, const Vector& x, const Vector& y) {
    Scalar s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) s += x[i] * gram(i, j) * y[j];
    }
    return s;
}

/// Reductive symmetric pair (g, h): involution sigma and invariant form kappa,
/// with g = h (+1 eigenspace) + q (-1 eigenspace).
struct SymmetricPair {
    std::string name;
    LieAlgebra algebra;
    ScalarMatrix sigma;  // column j is sigma(e_j)
    ScalarMatrix kappa;  // Gram matrix of kappa
    std::vector<Vector> h_basis;
    std::vector<Vector> q_basis;
    std::vector<Vector> cartan;  // preloaded Cartan subspace basis (g-coordinates)
    std::optional<MatrixBasis> representation;

    std::size_t dim() const noexcept { return algebra.dim(); }
    std::size_t rank() const noexcept { return cartan.size(); }
    Vector bracket(const Vector& x, const Vector& y) const { return algebra.bracket(x, y); }
    Scalar form(const Vector& x, const Vector& y) const { return bilinear(kappa, x, y); }

    /// Element of g with the given coordinates on the Cartan basis.
    Vector cartan_element(std::span<const Scalar> coords) const {
        Vector v(dim(), Scalar(0));
        for (std::size_t k = 0; k < cartan.size(); ++k) v = add(v, scale(cartan[k], coords[k]));
        return v;
    }

    /// Gram matrix of kappa restricted to the Cartan subspace.
    ScalarMatrix kappa_on_cartan() const {
        ScalarMatrix k(rank(), rank(), Scalar(0));
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) k(i, j) = form(cartan[i], cartan[j]);
        return k;
    }

    ScalarMatrix q_matrix() const { return from_columns(q_basis, dim()); }
};

/// Checks every structural identity of the pair except the Cartan subspace.
/// Splits g into the sigma-eigenspaces as a side effect.
inline void validate_pair_structure(SymmetricPair& p) {
    const std::size_t n = p.dim();
    if (p.sigma.rows() != n || p.sigma.cols() != n) throw ValidationError("sigma-shape", "sigma must be dim x dim");
    if (p.kappa.rows() != n || p.kappa.cols() != n) throw ValidationError("kappa-shape", "kappa must be dim x dim");
    p.algebra.validate();
    if (!(p.sigma * p.sigma == scalar_identity(n)))
        throw ValidationError("sigma-involution", "sigma^2 != id");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector ei = p.algebra.basis_vector(i), ej = p.algebra.basis_vector(j);
            Vector lhs = p.sigma.apply(p.bracket(ei, ej));
            Vector rhs = p.bracket(p.sigma.col(i), p.sigma.col(j));
            if (!(lhs == rhs))
                throw ValidationError("sigma-automorphism", "sigma[e" + std::to_string(i) + ", e" + std::to_string(j) +
                                                                "] != [sigma e_i, sigma e_j]");
        }
    if (!(p.kappa == p.kappa.transpose())) throw ValidationError("kappa-symmetric", "kappa is not symmetric");
    if (determinant(p.kappa).is_zero()) throw ValidationError("kappa-degenerate", "kappa is degenerate on g");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector ei = p.algebra.basis_vector(i), ej = p.algebra.basis_vector(j), ek = p.algebra.basis_vector(k);
                if (!(p.form(p.bracket(ei, ej), ek) + p.form(ej, p.bracket(ei, ek))).is_zero())
                    throw ValidationError("kappa-invariance", "kappa([e" + std::to_string(i) + ",e" + std::to_string(j) +
                                                                  "],e" + std::to_string(k) + ") + kappa(e_j,[e_i,e_k]) != 0");
            }
    if (!(p.sigma.transpose() * p.kappa * p.sigma == p.kappa))
        throw ValidationError("kappa-sigma", "kappa is not sigma-invariant");

    p.h_basis = kernel(p.sigma - scalar_identity(n));
    p.q_basis = kernel(p.sigma + scalar_identity(n));
    if (p.h_basis.size() + p.q_basis.size() != n)
        throw ValidationError("eigenspace-split", "g != h + q");
    for (const auto& x : p.h_basis)
        for (const auto& y : p.q_basis)
            if (!(p.sigma.apply(p.bracket(x, y)) == scale(p.bracket(x, y), Scalar(-1))))
                throw ValidationError("grading", "[h, q] not contained in q");
    for (const auto& x : p.q_basis)
        for (const auto& y : p.q_basis)
            if (!(p.sigma.apply(p.bracket(x, y)) == p.bracket(x, y)))
                throw ValidationError("grading", "[q, q] not contained in h");
    ScalarMatrix kq(p.q_basis.size(), p.q_basis.size(), Scalar(0));
    for (std::size_t i = 0; i < p.q_basis.size(); ++i)
        for (std::size_t j = 0; j < p.q_basis.size(); ++j) kq(i, j) = p.form(p.q_basis[i], p.q_basis[j]);
    if (!p.q_basis.empty() && determinant(kq).is_zero())
        throw ValidationError("kappa-degenerate-on-q", "kappa restricted to q is degenerate");
}

inline bool in_q(const SymmetricPair& p, const Vector& x) { return p.sigma.apply(x) == scale(x, Scalar(-1)); }

struct SemisimpleElementError : Error {
    using Error::Error;
};

/// Throws when ad(x) is not diagonalizable, naming the repeated factor.
inline void require_semisimple(const SymmetricPair& p, const Vector& x, const std::string& what) {
    SemisimplicityResult s = semisimplicity(p.algebra.ad(x));
    if (!s.semisimple) {
        std::vector<std::string> t{"t"};
        throw SemisimpleElementError(what + " is not semisimple: minimal polynomial of ad has repeated factor " +
                                     s.repeated.str(t));
    }
}

struct Centralizer {
    std::vector<Vector> q_a;  // {y in q : [a, y] = 0}
    std::vector<Vector> m;    // kappa-orthocomplement of q_a in q
};

inline std::vector<Vector> combine_columns(const ScalarMatrix& basis, const std::vector<Vector>& coeffs) {
    std::vector<Vector> out;
    for (const auto& c : coeffs) out.push_back(basis.apply(c));
    return out;
}

/// q^a and its kappa-orthogonal m at a semisimple point a of q.
inline Centralizer centralizer_in_q(const SymmetricPair& p, const Vector& a_point) {
    require_semisimple(p, a_point, "point");
    ScalarMatrix q = p.q_matrix();
    Centralizer out;
    out.q_a = combine_columns(q, kernel(p.algebra.ad(a_point) * q));
    ScalarMatrix pairing(out.q_a.size(), p.q_basis.size(), Scalar(0));
    for (std::size_t i = 0; i < out.q_a.size(); ++i)
        for (std::size_t j = 0; j < p.q_basis.size(); ++j) pairing(i, j) = p.form(out.q_a[i], p.q_basis[j]);
    out.m = combine_columns(q, kernel(pairing));
    std::vector<Vector> all = out.q_a;
    all.insert(all.end(), out.m.begin(), out.m.end());
    if (all.size() != p.q_basis.size() || (!all.empty() && rank(from_columns(all, p.dim())) != all.size()))
        throw InternalError("q != q^a + m");
    return out;
}

/// Whether two families span the same subspace.
inline bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
    return span_basis(a, dim) == span_basis(b, dim);
}

/// Random point of the Cartan subspace with small integer coordinates.
inline Vector random_cartan_coords(std::size_t rank, std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<int> d(-bound, bound);
    Vector v;
    for (std::size_t k = 0; k < rank; ++k) v.emplace_back(d(rng));
    return v;
}

/// Validates the preloaded Cartan subspace: contained in q, independent,
/// abelian, semisimple, and self-centralizing at a random regular point.
inline void validate_cartan(const SymmetricPair& p, std::uint64_t seed = 0) {
    const std::size_t n = p.dim();
    for (const auto& x : p.cartan)
        if (!in_q(p, x)) throw ValidationError("cartan-in-q", "Cartan basis vector outside q");
    if (!p.cartan.empty() && rank(from_columns(p.cartan, n)) != p.cartan.size())
        throw ValidationError("cartan-independent", "Cartan basis is linearly dependent");
    for (std::size_t i = 0; i < p.cartan.size(); ++i)
        for (std::size_t j = i + 1; j < p.cartan.size(); ++j)
            if (!is_zero_vector(p.bracket(p.cartan[i], p.cartan[j])))
                throw ValidationError("cartan-abelian", "Cartan basis vectors do not commute");
    for (std::size_t i = 0; i < p.cartan.size(); ++i) {
        try {
            require_semisimple(p, p.cartan[i], "Cartan basis vector " + std::to_string(i));
        } catch (const SemisimpleElementError& e) {
            throw ValidationError("cartan-semisimple", e.what());
        }
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Vector x = p.cartan_element(random_cartan_coords(p.rank(), rng));
        try {
            require_semisimple(p, x, "generic Cartan element");
        } catch (const SemisimpleElementError& e) {
            throw ValidationError("cartan-semisimple", e.what());
        }
        Centralizer z = centralizer_in_q(p, x);
        if (z.q_a.size() == p.cartan.size()) {
            if (!same_span(z.q_a, p.cartan, n)) throw InternalError("centralizer differs from a");
            return;
        }
    }
    throw ValidationError("cartan-maximal", "centralizer of every sampled point of a in q is larger than a");
}

}  // namespace symcart
