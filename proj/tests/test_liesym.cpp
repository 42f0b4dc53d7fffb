#include <gtest/gtest.h>

#include <algorithm>

#include "symcart/catalog.hpp"
#include "symcart/random.hpp"

using namespace symcart;

namespace {

// sl(2) on e0 = E12 - E21, e1 = diag(1,-1), e2 = E12 + E21, bracket table by hand:
// [e0,e1] = -2 e2, [e0,e2] = 2 e1, [e1,e2] = 2 e0.
SymmetricPair hand_sl2() {
    SymmetricPair p;
    p.name = "hand-sl2";
    p.algebra = LieAlgebra(3);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
        p.algebra.c(i, j, k) = Scalar(c);
        p.algebra.c(j, i, k) = Scalar(-c);
    };
    set(0, 1, 2, -2);
    set(0, 2, 1, 2);
    set(1, 2, 0, 2);
    p.sigma = scalar_identity(3);
    p.sigma(1, 1) = Scalar(-1);
    p.sigma(2, 2) = Scalar(-1);
    p.kappa = killing_form(p.algebra);
    p.cartan = {Vector{Scalar(0), Scalar(1), Scalar(0)}};
    return p;
}

std::string failing_identity(SymmetricPair p) {
    try {
        validate_pair_structure(p);
        validate_cartan(p);
    } catch (const ValidationError& e) {
        return e.identity();
    }
    return "";
}

}  // namespace

TEST(Catalog, RequiredEntriesExist) {
    auto names = catalog_names();
    for (const char* n : {"sl2-so2", "sl3-so21", "abelian2", "sl2-diagonal"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    EXPECT_THROW(catalog_pair("sl7"), InputError);
}

TEST(Catalog, DimensionsAndRanks) {
    struct Expect {
        const char* name;
        std::size_t dim, h, q, rank;
    };
    for (auto e : {Expect{"sl2-so2", 3, 1, 2, 1}, Expect{"sl3-so21", 8, 3, 5, 2}, Expect{"abelian2", 2, 0, 2, 2},
                   Expect{"sl2-diagonal", 6, 3, 3, 1}, Expect{"gl2-o2", 4, 1, 3, 2}, Expect{"sl2xsl2", 6, 2, 4, 2}}) {
        SymmetricPair p = catalog_pair(e.name);
        EXPECT_EQ(p.dim(), e.dim) << e.name;
        EXPECT_EQ(p.h_basis.size(), e.h) << e.name;
        EXPECT_EQ(p.q_basis.size(), e.q) << e.name;
        EXPECT_EQ(p.rank(), e.rank) << e.name;
    }
}

TEST(Catalog, StructuralIdentitiesHoldExactly) {
    for (const auto& p : catalog()) {
        const std::size_t n = p.dim();
        EXPECT_NO_THROW(p.algebra.validate()) << p.name;
        EXPECT_EQ(p.sigma * p.sigma, scalar_identity(n)) << p.name;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector ei = p.algebra.basis_vector(i), ej = p.algebra.basis_vector(j);
                EXPECT_EQ(p.sigma.apply(p.bracket(ei, ej)), p.bracket(p.sigma.col(i), p.sigma.col(j))) << p.name;
                for (std::size_t k = 0; k < n; ++k) {
                    Vector ek = p.algebra.basis_vector(k);
                    EXPECT_TRUE((p.form(p.bracket(ei, ej), ek) + p.form(ej, p.bracket(ei, ek))).is_zero()) << p.name;
                }
            }
        for (const auto& x : p.h_basis)
            for (const auto& y : p.q_basis) EXPECT_TRUE(in_q(p, p.bracket(x, y))) << p.name;
        for (const auto& x : p.q_basis)
            for (const auto& y : p.q_basis) {
                Vector b = p.bracket(x, y);
                EXPECT_EQ(p.sigma.apply(b), b) << p.name;
            }
    }
}

TEST(Catalog, KappaIsTraceFormForMatrixPairs) {
    SymmetricPair p = make_sl3_so21();
    ASSERT_TRUE(p.representation);
    const MatrixBasis& mb = *p.representation;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) EXPECT_EQ(p.kappa(i, j), trace(mb[i] * mb[j]));
}

TEST(Catalog, Sl3CartanSubspaceHasPrintedShape) {
    SymmetricPair p = make_sl3_so21();
    const MatrixBasis& mb = *p.representation;
    Vector xy{Scalar(5), Scalar(-3)};
    ScalarMatrix a = mb.element(p.cartan_element(xy));
    // {{x,0,y},{0,-2x,0},{-y,0,x}}
    EXPECT_EQ(a(0, 0), Scalar(5));
    EXPECT_EQ(a(1, 1), Scalar(-10));
    EXPECT_EQ(a(2, 2), Scalar(5));
    EXPECT_EQ(a(0, 2), Scalar(-3));
    EXPECT_EQ(a(2, 0), Scalar(3));
    EXPECT_TRUE(a(0, 1).is_zero() && a(1, 0).is_zero() && a(1, 2).is_zero() && a(2, 1).is_zero());
}

TEST(LoadPair, HandBuiltSl2Validates) {
    SymmetricPair p = hand_sl2();
    EXPECT_EQ(failing_identity(p), "");
    validate_pair_structure(p);
    EXPECT_EQ(p.h_basis.size(), 1u);
    EXPECT_EQ(p.q_basis.size(), 2u);
}

TEST(LoadPair, DistinctDiagnostics) {
    {
        SymmetricPair p = hand_sl2();
        p.algebra.c(0, 1, 0) = Scalar(1);
        p.algebra.c(1, 0, 0) = Scalar(-1);
        EXPECT_EQ(failing_identity(p), "jacobi");
    }
    {
        SymmetricPair p = hand_sl2();
        p.algebra.c(0, 1, 2) = Scalar(1);
        EXPECT_EQ(failing_identity(p), "antisymmetry");
    }
    {
        SymmetricPair p = hand_sl2();
        p.sigma(1, 1) = Scalar(1);  // diag(1, 1, -1): an involution, not an automorphism
        p.kappa = killing_form(p.algebra);
        EXPECT_EQ(failing_identity(p), "sigma-automorphism");
    }
    {
        SymmetricPair p = hand_sl2();
        p.sigma(0, 0) = Scalar(2);
        EXPECT_EQ(failing_identity(p), "sigma-involution");
    }
    {
        SymmetricPair p = hand_sl2();
        p.kappa(0, 0) = p.kappa(0, 0) + Scalar(1);
        EXPECT_EQ(failing_identity(p), "kappa-invariance");
    }
    {
        SymmetricPair p = hand_sl2();
        p.kappa = ScalarMatrix(3, 3, Scalar(0));
        EXPECT_EQ(failing_identity(p), "kappa-degenerate");
    }
    {
        SymmetricPair p = hand_sl2();
        p.cartan = {Vector{Scalar(1), Scalar(0), Scalar(0)}};
        EXPECT_EQ(failing_identity(p), "cartan-in-q");
    }
}

TEST(LoadPair, KappaMustBeSigmaInvariant) {
    // abelian R^2, sigma = diag(1,-1), kappa = [[0,1],[1,0]]: h and q are isotropic
    SymmetricPair p;
    p.algebra = LieAlgebra(2);
    p.sigma = scalar_identity(2);
    p.sigma(1, 1) = Scalar(-1);
    p.kappa = ScalarMatrix(2, 2, Scalar(0));
    p.kappa(0, 1) = Scalar(1);
    p.kappa(1, 0) = Scalar(1);
    p.cartan = {Vector{Scalar(0), Scalar(1)}};
    EXPECT_EQ(failing_identity(p), "kappa-sigma");
}

TEST(LoadPair, NilpotentElementIsNotSemisimple) {
    SymmetricPair p = make_sl2_so2();
    Vector nil{Scalar(1), Scalar(0), Scalar(1)};  // 2 E12
    EXPECT_THROW(require_semisimple(p, nil, "x"), SemisimpleElementError);
    try {
        require_semisimple(p, nil, "x");
    } catch (const SemisimpleElementError& e) {
        EXPECT_NE(std::string(e.what()).find("t^2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(centralizer_in_q(p, nil), SemisimpleElementError);
}

TEST(Centralizer, WorkedExamples) {
    SymmetricPair p = make_sl3_so21();
    Centralizer zero = centralizer_in_q(p, Vector(p.dim(), Scalar(0)));
    EXPECT_EQ(zero.q_a.size(), p.q_basis.size());
    EXPECT_TRUE(zero.m.empty());

    Centralizer generic = centralizer_in_q(p, p.cartan_element(Vector{Scalar(2), Scalar(7)}));
    EXPECT_TRUE(same_span(generic.q_a, p.cartan, p.dim()));
    EXPECT_EQ(generic.m.size(), 3u);

    Centralizer sub = centralizer_in_q(p, p.cartan_element(Vector{Scalar(1), Scalar(0)}));
    EXPECT_EQ(sub.q_a.size(), 3u);
    // brute force: y in q with [a, y] = 0, tested on the matrix side
    const MatrixBasis& mb = *p.representation;
    ScalarMatrix a = mb.element(p.cartan_element(Vector{Scalar(1), Scalar(0)}));
    for (const auto& y : sub.q_a) EXPECT_TRUE(is_zero_matrix(commutator(a, mb.element(y))));
    for (const auto& y : sub.m)
        for (const auto& z : sub.q_a) EXPECT_TRUE(p.form(y, z).is_zero());
}

TEST(Centralizer, RegularPointsOfEveryCatalogCartanSubspace) {
    Sampler s(3);
    for (const auto& p : catalog()) {
        int found = 0;
        for (int k = 0; k < 20 && found < 3; ++k) {
            Vector x = p.cartan_element(s.point(p.rank()));
            Centralizer z = centralizer_in_q(p, x);
            if (z.q_a.size() != p.rank()) continue;
            ++found;
            EXPECT_TRUE(same_span(z.q_a, p.cartan, p.dim())) << p.name;
        }
        EXPECT_GT(found, 0) << p.name;
    }
}
