#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace symcart {

using Vector = std::vector<Scalar>;

/// Dense rectangular matrix over a commutative ring (Scalar or MultiPoly).
/// The zero element is carried explicitly so polynomial entries know their arity.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T zero = T())
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + static_cast<long>(r * cols_),
                              data_.begin() + static_cast<long>((r + 1) * cols_));
    }
    std::vector<T> col(std::size_t c) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
        Matrix p(a.rows_, b.cols_, a.zero_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& ark = a(r, k);
                if (is_zero_entry(ark)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += ark * b(k, c);
            }
        return p;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    template <class S>
    friend Matrix operator*(const S& s, Matrix a) requires requires(T t, S x) { t * x; } {
        for (auto& v : a.data_) v = v * s;
        return a;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
        std::vector<T> out(rows_, zero_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix minor_matrix(std::size_t skip_r, std::size_t skip_c) const {
        Matrix m(rows_ - 1, cols_ - 1, zero_);
        for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
            if (r == skip_r) continue;
            for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
                if (c == skip_c) continue;
                m(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return m;
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> m(rows_, cols_, f(zero_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = f((*this)(r, c));
        return m;
    }

  private:
    static bool is_zero_entry(const T& t) { return t.is_zero(); }
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<MultiPoly>;

inline ScalarMatrix scalar_identity(std::size_t n) { return ScalarMatrix::identity(n, Scalar(0), Scalar(1)); }

inline PolyMatrix poly_identity(std::size_t n, std::size_t num_vars) {
    return PolyMatrix::identity(n, MultiPoly(num_vars), MultiPoly::constant(num_vars, Scalar(1)));
}

/// Matrix whose columns are the given vectors.
inline ScalarMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    ScalarMatrix m(rows, cols.size(), Scalar(0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
}

inline ScalarMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    ScalarMatrix m(rows.size(), cols, Scalar(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
}

// ---------------------------------------------------------------------------
// Cofactor determinant and adjugate (generic ring).

inline Scalar one_like(const Scalar&) { return Scalar(1); }
inline MultiPoly one_like(const MultiPoly& z) { return MultiPoly::constant(z.num_vars(), Scalar(1)); }

template <class T>
T determinant_cofactor(const Matrix<T>& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m.zero() + one_like(m.zero());
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T acc = m.zero();
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        T t = m(0, c) * determinant_cofactor(m.minor_matrix(0, c));
        if (c % 2) acc -= t;
        else acc += t;
    }
    return acc;
}

template <class T>
struct DetAdjugate {
    T det;
    Matrix<T> adj;
};

/// Determinant and adjugate; M * adj = det * I.
template <class T>
DetAdjugate<T> det_adjugate(const Matrix<T>& m) {
    if (!m.is_square()) throw Error("det_adjugate requires a square matrix, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    Matrix<T> adj(n, n, m.zero());
    if (n == 1) {
        adj(0, 0) = one_like(m.zero());
        return {m(0, 0), adj};
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            T cof = determinant_cofactor(m.minor_matrix(r, c));
            adj(c, r) = (r + c) % 2 ? m.zero() - cof : cof;
        }
    return {determinant_cofactor(m), adj};
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Q(i).

struct RowEchelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

inline RowEchelon rref(ScalarMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
        Scalar inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Scalar f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const ScalarMatrix& a) { return rref(a).rank(); }

/// Basis of {x : A x = 0}, one vector per free column, in column order.
inline std::vector<Vector> kernel(const ScalarMatrix& a) {
    RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(a.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Canonical basis of the span of the given vectors (nonzero rows of the RREF).
inline std::vector<Vector> span_basis(const std::vector<Vector>& vecs, std::size_t dim) {
    if (vecs.empty()) return {};
    RowEchelon e = rref(from_rows(vecs, dim));
    std::vector<Vector> out;
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r));
    return out;
}

enum class SolutionKind { unique, none, affine };

struct LinearSolution {
    SolutionKind kind = SolutionKind::none;
    std::size_t rank = 0;
    Vector particular;          // empty when inconsistent
    std::vector<Vector> kernel;  // basis of the homogeneous solution space
};

/// Gaussian elimination on [A | b]; inconsistency is reported, not thrown.
inline LinearSolution solve_exact(const ScalarMatrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw Error("right-hand side length mismatch");
    ScalarMatrix aug(a.rows(), a.cols() + 1, Scalar(0));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    RowEchelon e = rref(std::move(aug));
    LinearSolution sol;
    sol.kernel = kernel(a);
    sol.rank = a.cols() - sol.kernel.size();
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
        sol.kind = SolutionKind::none;
        return sol;
    }
    sol.particular.assign(a.cols(), Scalar(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, a.cols());
    sol.kind = sol.kernel.empty() ? SolutionKind::unique : SolutionKind::affine;
    return sol;
}

inline std::optional<ScalarMatrix> inverse(const ScalarMatrix& a) {
    if (!a.is_square()) throw Error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    ScalarMatrix aug(n, 2 * n, Scalar(0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = Scalar(1);
    }
    RowEchelon e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    ScalarMatrix inv(n, n, Scalar(0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

/// Determinant by elimination (fast path for scalar matrices).
inline Scalar determinant(ScalarMatrix a) {
    if (!a.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        Scalar inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            Scalar f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

inline bool is_zero_matrix(const ScalarMatrix& a) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero()) return false;
    return true;
}

inline Vector add(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}
inline Vector scale(Vector a, const Scalar& s) {
    for (auto& x : a) x *= s;
    return a;
}
inline bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// Evaluates every entry of a polynomial matrix at a point.
inline ScalarMatrix evaluate(const PolyMatrix& m, std::span<const Scalar> point) {
    return m.map([&](const MultiPoly& p) { return p.evaluate(point); });
}

}  // namespace symcart
