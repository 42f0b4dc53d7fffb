#include <gtest/gtest.h>

#include <set>

#include "symcart/catalog.hpp"
#include "symcart/report.hpp"
#include "symcart/roots.hpp"

using namespace symcart;

namespace {

std::set<std::string> keys(const std::vector<ScalarMatrix>& ms) {
    std::set<std::string> out;
    for (const auto& m : ms) out.insert(matrix_key(m));
    return out;
}

// All products of at most `len` reflections, built word by word.
std::set<std::string> words_up_to(const std::vector<ScalarMatrix>& refl, std::size_t rank, std::size_t len) {
    std::vector<ScalarMatrix> layer{scalar_identity(rank)};
    std::set<std::string> seen{matrix_key(layer[0])};
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<ScalarMatrix> next;
        for (const auto& w : layer)
            for (const auto& s : refl) {
                ScalarMatrix m = w * s;
                if (seen.insert(matrix_key(m)).second) next.push_back(m);
            }
        layer = std::move(next);
    }
    return seen;
}

// Linear maps sending a fixed basis of roots to any pair of roots that
// permute the whole root set and preserve the dual form.
std::vector<ScalarMatrix> root_automorphisms(const RestrictedRootSystem& sys, const ScalarMatrix& kinv) {
    const std::size_t l = sys.rank;
    std::vector<Vector> basis;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < sys.size() && basis.size() < l; ++k) {
        std::vector<Vector> trial = basis;
        trial.push_back(sys.roots[k].functional);
        if (rank(from_rows(trial, l)) == trial.size()) {
            basis = trial;
            idx.push_back(k);
        }
    }
    ScalarMatrix b = from_rows(basis, l);
    ScalarMatrix binv = *inverse(b);
    std::vector<ScalarMatrix> out;
    std::vector<std::size_t> choice(l, 0);
    while (true) {
        std::vector<Vector> images;
        for (std::size_t k = 0; k < l; ++k) images.push_back(sys.roots[choice[k]].functional);
        // row action: alpha -> alpha * w, so B w = images
        ScalarMatrix w = binv * from_rows(images, l);
        bool ok = inverse(w).has_value();
        for (std::size_t k = 0; ok && k < sys.size(); ++k) ok = sys.find(pull_back(sys.roots[k].functional, w)) >= 0;
        for (std::size_t i = 0; ok && i < sys.size(); ++i)
            for (std::size_t j = 0; ok && j < sys.size(); ++j) {
                const Vector& x = sys.roots[i].functional;
                const Vector& y = sys.roots[j].functional;
                ok = dual_form(kinv, pull_back(x, w), pull_back(y, w)) == dual_form(kinv, x, y);
            }
        if (ok) out.push_back(w);
        std::size_t pos = 0;
        while (pos < l && ++choice[pos] == sys.size()) choice[pos++] = 0;
        if (pos == l) break;
    }
    return out;
}

SymmetricPair irrational_pair() {
    using namespace catalog_detail;
    auto e = [](std::size_t i, std::size_t j) { return unit(2, i, j); };
    std::vector<ScalarMatrix> basis{e(0, 1) - e(1, 0), diag({1, -1}), e(0, 1) + e(1, 0)};
    return matrix_pair("irrational", basis, minus_transpose, {diag({1, -1}) + e(0, 1) + e(1, 0)});
}

}  // namespace

TEST(RestrictedRoots, Sl2So2) {
    SymmetricPair p = make_sl2_so2();
    RestrictedRootSystem sys = restricted_roots(p);
    ASSERT_EQ(sys.size(), 2u);
    EXPECT_EQ(sys.roots[0].functional, Vector{Scalar(-2)});
    EXPECT_EQ(sys.roots[1].functional, Vector{Scalar(2)});
    EXPECT_EQ(sys.centralizer_dim, 1u);
    // oracle: [H, E12] = 2 E12 and [H, E21] = -2 E21 in the matrix realization
    const MatrixBasis& mb = *p.representation;
    ScalarMatrix h = mb.element(p.cartan[0]);
    ScalarMatrix e12(2, 2, Scalar(0));
    e12(0, 1) = Scalar(1);
    EXPECT_EQ(commutator(h, e12), Scalar(2) * e12);
    EXPECT_EQ(commutator(h, e12.transpose()), Scalar(-2) * e12.transpose());
}

TEST(RestrictedRoots, Sl3So21) {
    SymmetricPair p = make_sl3_so21();
    RestrictedRootSystem sys = restricted_roots(p);
    EXPECT_EQ(sys.size(), 6u);
    const Scalar i = Scalar::i();
    for (const Vector& f : {Vector{Scalar(3), i}, Vector{Scalar(3), -i}, Vector{Scalar(0), Scalar(2) * i},
                            Vector{Scalar(-3), i}, Vector{Scalar(-3), -i}, Vector{Scalar(0), Scalar(-2) * i}})
        EXPECT_GE(sys.find(f), 0) << vector_str(f);
    for (const auto& r : sys.roots) {
        EXPECT_EQ(r.multiplicity, 1u);
        EXPECT_TRUE(r.is_reduced);
    }
    EXPECT_EQ(sys.centralizer_dim, 2u);
    for (std::size_t k = 1; k < sys.size(); ++k) EXPECT_TRUE(functional_less(sys.roots[k - 1].functional, sys.roots[k].functional));
}

TEST(RestrictedRoots, EigenvectorOracle) {
    // every root is witnessed by a common eigenvector of ad(a_k), found by a direct kernel
    for (const auto& p : catalog()) {
        RestrictedRootSystem sys = restricted_roots(p);
        std::size_t total = 0;
        for (const auto& r : sys.roots) {
            ScalarMatrix stacked(p.rank() * p.dim(), p.dim(), Scalar(0));
            for (std::size_t k = 0; k < p.rank(); ++k) {
                ScalarMatrix m = p.algebra.ad(p.cartan[k]) - r.functional[k] * scalar_identity(p.dim());
                for (std::size_t a = 0; a < p.dim(); ++a)
                    for (std::size_t b = 0; b < p.dim(); ++b) stacked(k * p.dim() + a, b) = m(a, b);
            }
            EXPECT_EQ(kernel(stacked).size(), r.multiplicity) << p.name;
            total += r.multiplicity;
        }
        EXPECT_EQ(sys.centralizer_dim + total, p.dim()) << p.name;
    }
}

TEST(RestrictedRoots, AbelianPairHasNoRoots) {
    SymmetricPair p = make_abelian2();
    RestrictedRootSystem sys = restricted_roots(p);
    EXPECT_EQ(sys.size(), 0u);
    EXPECT_EQ(sys.centralizer_dim, 2u);
    WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
    EXPECT_EQ(w.order(), 1u);
}

TEST(RestrictedRoots, DiagonalPairMultiplicityTwo) {
    RestrictedRootSystem sys = restricted_roots(make_sl2_diagonal());
    ASSERT_EQ(sys.size(), 2u);
    for (const auto& r : sys.roots) EXPECT_EQ(r.multiplicity, 2u);
    EXPECT_EQ(sys.centralizer_dim, 2u);
}

TEST(RestrictedRoots, IndependentOfSeed) {
    for (const auto& p : catalog()) {
        RestrictedRootSystem a = restricted_roots(p, 0), b = restricted_roots(p, 12345);
        ASSERT_EQ(a.size(), b.size()) << p.name;
        for (std::size_t k = 0; k < a.size(); ++k) {
            EXPECT_EQ(a.roots[k].functional, b.roots[k].functional) << p.name;
            EXPECT_EQ(a.roots[k].multiplicity, b.roots[k].multiplicity) << p.name;
        }
    }
}

TEST(RestrictedRoots, IrrationalSpectrumIsUnsupported) {
    SymmetricPair p = irrational_pair();
    EXPECT_THROW(restricted_roots(p), UnsupportedSpectrum);
}

TEST(ReducedSubset, NonReducedSystem) {
    RestrictedRootSystem sys;
    sys.rank = 1;
    for (long c : {-2, -1, 1, 2}) sys.roots.push_back({Vector{Scalar(c)}, 1, true});
    reduced_subset(sys);
    auto red = sys.reduced();
    ASSERT_EQ(red.size(), 2u);
    EXPECT_EQ(red[0].functional, Vector{Scalar(-1)});
    EXPECT_EQ(red[1].functional, Vector{Scalar(1)});

    RestrictedRootSystem empty;
    empty.rank = 2;
    reduced_subset(empty);
    EXPECT_TRUE(empty.reduced().empty());
}

TEST(Weyl, OrdersMatchWordEnumeration) {
    struct Expect {
        const char* name;
        std::size_t order;
    };
    for (auto e : {Expect{"sl2-so2", 2}, Expect{"sl3-so21", 6}, Expect{"abelian2", 1}, Expect{"sl2-diagonal", 2},
                   Expect{"gl2-o2", 2}, Expect{"sl2xsl2", 4}}) {
        SymmetricPair p = catalog_pair(e.name);
        RestrictedRootSystem sys = restricted_roots(p);
        ScalarMatrix kinv = *inverse(p.kappa_on_cartan());
        WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
        EXPECT_EQ(w.order(), e.order) << e.name;
        std::vector<ScalarMatrix> refl;
        for (const auto& r : sys.roots) refl.push_back(reflection(kinv, r.functional));
        EXPECT_EQ(words_up_to(refl, p.rank(), sys.size() + 1), keys(w.elements)) << e.name;
        EXPECT_TRUE(permutes_roots(w, sys)) << e.name;
        EXPECT_EQ(w.elements[0], scalar_identity(p.rank()));
    }
}

TEST(Weyl, Sl3GroupIsIndexTwoInRootAutomorphisms) {
    SymmetricPair p = make_sl3_so21();
    RestrictedRootSystem sys = restricted_roots(p);
    ScalarMatrix kinv = *inverse(p.kappa_on_cartan());
    WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
    std::vector<ScalarMatrix> aut = root_automorphisms(sys, kinv);
    EXPECT_EQ(aut.size(), 12u);
    std::set<std::string> ak = keys(aut);
    for (const auto& g : w.elements) EXPECT_TRUE(ak.count(matrix_key(g)));
    EXPECT_FALSE(w.contains(Scalar(-1) * scalar_identity(2)));
    EXPECT_TRUE(ak.count(matrix_key(Scalar(-1) * scalar_identity(2))));
}

TEST(Weyl, ReflectionProperties) {
    for (const auto& p : catalog()) {
        RestrictedRootSystem sys = restricted_roots(p);
        if (sys.size() == 0) continue;
        ScalarMatrix kinv = *inverse(p.kappa_on_cartan());
        for (const auto& r : sys.roots) {
            ScalarMatrix s = reflection(kinv, r.functional);
            EXPECT_EQ(s * s, scalar_identity(p.rank())) << p.name;
            EXPECT_EQ(pull_back(r.functional, s), scale(r.functional, Scalar(-1))) << p.name;
            ScalarMatrix row = from_rows({r.functional}, p.rank());
            for (const auto& x : kernel(row)) EXPECT_EQ(s.apply(x), x) << p.name;
            EXPECT_EQ(determinant(s), Scalar(-1)) << p.name;
        }
    }
}

TEST(LocalSubsystem, RegularPoint) {
    SymmetricPair p = make_sl3_so21();
    RestrictedRootSystem sys = restricted_roots(p);
    WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
    LocalSubsystem loc = local_subsystem(sys, w, p.kappa_on_cartan(), Vector{Scalar(2), Scalar(1)});
    EXPECT_EQ(loc.roots.size(), 0u);
    EXPECT_EQ(loc.group.order(), 1u);
    EXPECT_TRUE(loc.b_basis.empty());
    EXPECT_EQ(loc.c_basis.size(), 2u);
}

TEST(LocalSubsystem, Origin) {
    SymmetricPair p = make_sl3_so21();
    RestrictedRootSystem sys = restricted_roots(p);
    WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
    LocalSubsystem loc = local_subsystem(sys, w, p.kappa_on_cartan(), Vector(2, Scalar(0)));
    EXPECT_EQ(loc.roots.size(), 6u);
    EXPECT_EQ(loc.group.order(), 6u);
    EXPECT_EQ(loc.b_basis.size(), 2u);
    EXPECT_TRUE(loc.c_basis.empty());
}

TEST(LocalSubsystem, SubregularPoint) {
    SymmetricPair p = make_sl3_so21();
    RestrictedRootSystem sys = restricted_roots(p);
    WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
    Vector a{Scalar(1), Scalar(0)};
    LocalSubsystem loc = local_subsystem(sys, w, p.kappa_on_cartan(), a);
    EXPECT_EQ(loc.roots.size(), 2u);
    for (const auto& r : loc.roots.roots) EXPECT_TRUE(r(a).is_zero());
    EXPECT_EQ(loc.group.order(), 2u);
    EXPECT_EQ(loc.b_basis.size(), 1u);
    EXPECT_EQ(loc.c_basis.size(), 1u);
    // stabilizer oracle
    std::size_t fixing = 0;
    for (const auto& g : w.elements) fixing += g.apply(a) == a;
    EXPECT_EQ(fixing, 2u);
}

TEST(LocalSubsystem, ArityMismatchIsInputError) {
    SymmetricPair p = make_sl3_so21();
    RestrictedRootSystem sys = restricted_roots(p);
    WeylGroup w = weyl_group(sys, p.kappa_on_cartan());
    EXPECT_THROW(local_subsystem(sys, w, p.kappa_on_cartan(), Vector{Scalar(1)}), InputError);
}
