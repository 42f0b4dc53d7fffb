#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lie.hpp"

namespace symcart {

namespace catalog_detail {

inline ScalarMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    ScalarMatrix m(n, n, Scalar(0));
    m(i, j) = Scalar(1);
    return m;
}

inline ScalarMatrix diag(std::initializer_list<Scalar> d) {
    ScalarMatrix m(d.size(), d.size(), Scalar(0));
    std::size_t k = 0;
    for (const auto& v : d) {
        m(k, k) = v;
        ++k;
    }
    return m;
}

inline ScalarMatrix block_diag(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix m(a.rows() + b.rows(), a.cols() + b.cols(), Scalar(0));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

inline ScalarMatrix block(const ScalarMatrix& m, std::size_t offset, std::size_t size) {
    ScalarMatrix b(size, size, Scalar(0));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) b(r, c) = m(offset + r, offset + c);
    return b;
}

using MatrixInvolution = std::function<ScalarMatrix(const ScalarMatrix&)>;

/// Builds and validates a pair realized by matrices, with kappa the trace form.
inline SymmetricPair matrix_pair(std::string name, std::vector<ScalarMatrix> basis, const MatrixInvolution& sigma,
                                 const std::vector<ScalarMatrix>& cartan) {
    SymmetricPair p;
    p.name = std::move(name);
    MatrixBasis mb(std::move(basis));
    p.algebra = lie_algebra_from_matrices(mb);
    p.sigma = ScalarMatrix(mb.dim(), mb.dim(), Scalar(0));
    for (std::size_t j = 0; j < mb.dim(); ++j) {
        Vector v = mb.coordinates(sigma(mb[j]));
        for (std::size_t i = 0; i < mb.dim(); ++i) p.sigma(i, j) = v[i];
    }
    p.kappa = trace_form(mb);
    for (const auto& c : cartan) p.cartan.push_back(mb.coordinates(c));
    p.representation = std::move(mb);
    validate_pair_structure(p);
    validate_cartan(p);
    return p;
}

inline ScalarMatrix minus_transpose(const ScalarMatrix& a) { return Scalar(-1) * a.transpose(); }

}  // namespace catalog_detail

/// The 3x3 matrix I_{2,1} = diag(1, 1, -1).
inline ScalarMatrix i21() { return catalog_detail::diag({1, 1, -1}); }

/// sl(2,R) with sigma(A) = -A^T; h = so(2), a = R diag(1,-1).
inline SymmetricPair make_sl2_so2() {
    using namespace catalog_detail;
    auto e = [](std::size_t i, std::size_t j) { return unit(2, i, j); };
    std::vector<ScalarMatrix> basis{e(0, 1) - e(1, 0), diag({1, -1}), e(0, 1) + e(1, 0)};
    return matrix_pair("sl2-so2", basis, minus_transpose, {diag({1, -1})});
}

/// sl(3,R) with sigma(A) = -I21 A^T I21, h = so(2,1); the Cartan subspace is
/// {{x,0,y},{0,-2x,0},{-y,0,x}}.
inline SymmetricPair make_sl3_so21() {
    using namespace catalog_detail;
    auto e = [](std::size_t i, std::size_t j) { return unit(3, i, j); };
    std::vector<ScalarMatrix> basis{
        e(0, 1) - e(1, 0), e(0, 2) + e(2, 0), e(1, 2) + e(2, 1),                           // h
        diag({1, 0, -1}), e(0, 1) + e(1, 0), e(0, 2) - e(2, 0), diag({0, 1, -1}), e(1, 2) - e(2, 1)  // q
    };
    const ScalarMatrix j = i21();
    auto sigma = [j](const ScalarMatrix& a) { return Scalar(-1) * (j * a.transpose() * j); };
    return matrix_pair("sl3-so21", basis, sigma, {diag({1, -2, 1}), e(0, 2) - e(2, 0)});
}

/// The abelian algebra R^2 (diagonal 2x2 matrices) with sigma = -id.
inline SymmetricPair make_abelian2() {
    using namespace catalog_detail;
    std::vector<ScalarMatrix> basis{diag({1, 0}), diag({0, 1})};
    auto sigma = [](const ScalarMatrix& a) { return Scalar(-1) * a; };
    return matrix_pair("abelian2", basis, sigma, basis);
}

/// Diagonal case: g x g with the swap involution, g = sl(2,R), realized
/// block-diagonally; h is the diagonal copy, q = {(X, -X)}.
inline SymmetricPair make_sl2_diagonal() {
    using namespace catalog_detail;
    auto e = [](std::size_t i, std::size_t j) { return unit(2, i, j); };
    std::vector<ScalarMatrix> sl2{e(0, 1), diag({1, -1}), e(1, 0)};
    std::vector<ScalarMatrix> basis;
    for (const auto& x : sl2) basis.push_back(block_diag(x, x));
    for (const auto& x : sl2) basis.push_back(block_diag(x, Scalar(-1) * x));
    auto swap = [](const ScalarMatrix& a) { return block_diag(block(a, 2, 2), block(a, 0, 2)); };
    return matrix_pair("sl2-diagonal", basis, swap, {block_diag(diag({1, -1}), diag({-1, 1}))});
}

/// gl(2,R) with sigma(A) = -A^T: reductive with a one-dimensional center.
inline SymmetricPair make_gl2_o2() {
    using namespace catalog_detail;
    auto e = [](std::size_t i, std::size_t j) { return unit(2, i, j); };
    std::vector<ScalarMatrix> basis{e(0, 1) - e(1, 0), e(0, 0), e(1, 1), e(0, 1) + e(1, 0)};
    return matrix_pair("gl2-o2", basis, minus_transpose, {e(0, 0), e(1, 1)});
}

/// sl(2,R) x sl(2,R) with sigma(A) = -A^T on each factor; restricted roots A1 x A1.
inline SymmetricPair make_sl2xsl2() {
    using namespace catalog_detail;
    auto e = [](std::size_t i, std::size_t j) { return unit(2, i, j); };
    ScalarMatrix z(2, 2, Scalar(0));
    std::vector<ScalarMatrix> factor{e(0, 1) - e(1, 0), diag({1, -1}), e(0, 1) + e(1, 0)};
    std::vector<ScalarMatrix> basis;
    for (const auto& x : factor) basis.push_back(block_diag(x, z));
    for (const auto& x : factor) basis.push_back(block_diag(z, x));
    return matrix_pair("sl2xsl2", basis, minus_transpose,
                       {block_diag(diag({1, -1}), z), block_diag(z, diag({1, -1}))});
}

struct CatalogEntry {
    std::string name;
    std::function<SymmetricPair()> make;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"sl2-so2", make_sl2_so2},   {"sl3-so21", make_sl3_so21}, {"abelian2", make_abelian2},
        {"sl2-diagonal", make_sl2_diagonal}, {"gl2-o2", make_gl2_o2}, {"sl2xsl2", make_sl2xsl2},
    };
    return entries;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> n;
    for (const auto& e : catalog_entries()) n.push_back(e.name);
    return n;
}

/// Every built-in pair, each fully validated.
inline std::vector<SymmetricPair> catalog() {
    std::vector<SymmetricPair> out;
    for (const auto& e : catalog_entries()) out.push_back(e.make());
    return out;
}

inline SymmetricPair catalog_pair(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e.make();
    throw InputError("unknown pair '" + name + "'");
}

}  // namespace symcart
