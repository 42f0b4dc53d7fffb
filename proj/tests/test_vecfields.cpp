#include <gtest/gtest.h>

#include <map>

#include "symcart/parse.hpp"
#include "symcart/random.hpp"
#include "symcart/suite.hpp"

using namespace symcart;

namespace {

MultiPoly P(const std::string& s, std::size_t n) { return parse_poly(s, n); }

const PairContext& ctx(const std::string& name) {
    static std::map<std::string, PairContext> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, analyze(catalog_pair(name))).first;
    return it->second;
}

}  // namespace

TEST(FieldInvariance, Examples) {
    for (const auto& name : catalog_names()) {
        const PairContext& c = ctx(name);
        EXPECT_TRUE(is_invariant_field(PolyVectorField::euler(c.chart.rank), c.weyl)) << name;
        for (const auto& g : c.chart.gradients) EXPECT_TRUE(is_invariant_field(g, c.weyl)) << name;
    }
    const PairContext& s = ctx("sl2-so2");
    PolyVectorField constant({MultiPoly::constant(1, Scalar(1))});
    EXPECT_FALSE(is_invariant_field(constant, s.weyl));
    EXPECT_TRUE(is_invariant_field(reynolds_field(s.weyl, constant), s.weyl));
    EXPECT_TRUE(reynolds_field(s.weyl, constant).is_zero());
}

TEST(Solomon, WorkedExamples) {
    const PairContext& s = ctx("sl3-so21");
    SolomonResult z = solomon_decompose(PolyVectorField::zero(2), s.chart, s.weyl);
    for (const auto& r : z.coefficients) EXPECT_TRUE(r.is_zero());
    SolomonResult g = solomon_decompose(s.chart.gradients[1], s.chart, s.weyl);
    EXPECT_EQ(g.coefficients, (std::vector<MultiPoly>{MultiPoly(2), MultiPoly::constant(2, Scalar(1))}));

    const PairContext& t = ctx("sl2-so2");
    SolomonResult e = solomon_decompose(PolyVectorField::euler(1), t.chart, t.weyl);
    EXPECT_EQ(e.coefficients, (std::vector<MultiPoly>{MultiPoly::constant(1, Scalar(1))}));
    EXPECT_EQ(e.kernel_dim, 0u);
}

TEST(Solomon, EulerFieldOnA2) {
    // E = x . d/dx; with grad p1 = kappa^-1 dp1 homogeneous of degree 1, E is a constant multiple of grad p1
    const PairContext& s = ctx("sl3-so21");
    SolomonResult e = solomon_decompose(PolyVectorField::euler(2), s.chart, s.weyl);
    EXPECT_TRUE(e.coefficients[0].is_constant());
    EXPECT_TRUE(e.coefficients[1].is_zero());
    EXPECT_EQ(e.coefficients[0] * s.chart.gradients[0], PolyVectorField::euler(2));
}

TEST(Solomon, RejectsNonInvariantField) {
    const PairContext& s = ctx("sl2-so2");
    PolyVectorField constant({MultiPoly::constant(1, Scalar(1))});
    EXPECT_THROW(solomon_decompose(constant, s.chart, s.weyl), InputError);
    const PairContext& t = ctx("sl3-so21");
    PolyVectorField x({P("x0", 2), MultiPoly(2)});
    EXPECT_THROW(solomon_decompose(x, t.chart, t.weyl), InputError);
}

TEST(Solomon, RandomFieldsRoundTrip) {
    Sampler smp(21);
    for (const auto& name : catalog_names()) {
        const PairContext& c = ctx(name);
        for (int k = 0; k < 10; ++k) {
            PolyVectorField x = smp.invariant_field(c.weyl, 6);
            SolomonResult r = solomon_decompose(x, c.chart, c.weyl);
            EXPECT_EQ(r.kernel_dim, 0u) << name;
            EXPECT_EQ(reassemble(r.coefficients, c.chart.gradients), x) << name;
            for (const auto& rc : r.coefficients) EXPECT_TRUE(is_invariant(rc, c.weyl)) << name;
        }
    }
}

TEST(Solomon, KnownCoefficientsAreRecovered) {
    // build X from chosen invariant coefficients, then decompose
    Sampler smp(22);
    for (const auto& name : catalog_names()) {
        const PairContext& c = ctx(name);
        std::vector<MultiPoly> coeffs;
        for (std::size_t i = 0; i < c.chart.generators.size(); ++i) coeffs.push_back(smp.invariant(c.weyl, 4));
        PolyVectorField x = reassemble(coeffs, c.chart.gradients);
        if (c.chart.generators.empty()) continue;
        SolomonResult r = solomon_decompose(x, c.chart, c.weyl);
        EXPECT_EQ(r.coefficients, coeffs) << name;
    }
}

TEST(Derivations, ZeroDerivationIsStableAndLiftsToZero) {
    const PairContext& s = ctx("sl3-so21");
    InvariantDerivation d{{MultiPoly(2), MultiPoly(2)}};
    StabilityResult st = ideal_stable(d, s.chart);
    EXPECT_TRUE(st.stable);
    EXPECT_TRUE(st.d_phi.is_zero());
    LiftResult lr = lift_derivation(d, s.chart);
    ASSERT_TRUE(std::holds_alternative<Lifted>(lr));
    EXPECT_TRUE(std::get<Lifted>(lr).field.is_zero());
}

TEST(Derivations, ConstantImageIsNotStable) {
    const PairContext& s = ctx("sl2-so2");
    InvariantDerivation d{{MultiPoly::constant(1, Scalar(1))}};
    StabilityResult st = ideal_stable(d, s.chart);
    EXPECT_FALSE(st.stable);
    EXPECT_EQ(st.d_phi, P("-4", 1));  // D(-4 p1) = -4
    LiftResult lr = lift_derivation(d, s.chart);
    ASSERT_TRUE(std::holds_alternative<NotLiftable>(lr));
    EXPECT_EQ(std::get<NotLiftable>(lr).psi, P("-2", 1));
    EXPECT_FALSE(std::get<NotLiftable>(lr).remainder.is_zero());
}

TEST(Derivations, GradientDerivationLifts) {
    const PairContext& s = ctx("sl2-so2");
    InvariantDerivation d{{P("-4*x0^2", 1)}};
    EXPECT_TRUE(ideal_stable(d, s.chart).stable);
    LiftResult lr = lift_derivation(d, s.chart);
    ASSERT_TRUE(std::holds_alternative<Lifted>(lr));
    EXPECT_EQ(std::get<Lifted>(lr).phi, (std::vector<MultiPoly>{P("-2", 1)}));
    EXPECT_EQ(std::get<Lifted>(lr).field, PolyVectorField({P("-2*x0", 1)}));
}

TEST(Derivations, LeibnizRule) {
    Sampler smp(31);
    const PairContext& s = ctx("sl3-so21");
    for (int k = 0; k < 5; ++k) {
        InvariantDerivation d{{smp.invariant(s.weyl, 4), smp.invariant(s.weyl, 4)}};
        MultiPoly f = smp.invariant(s.weyl, 4), g = smp.invariant(s.weyl, 4);
        EXPECT_EQ(apply_derivation(d, f * g, s.chart),
                  apply_derivation(d, f, s.chart) * g + f * apply_derivation(d, g, s.chart));
    }
}

TEST(Derivations, InducedByFieldMatchesDirectApplication) {
    Sampler smp(32);
    const PairContext& s = ctx("sl3-so21");
    for (int k = 0; k < 5; ++k) {
        PolyVectorField x = smp.invariant_field(s.weyl, 4);
        InvariantDerivation d = induced_derivation(x, s.chart);
        MultiPoly f = smp.invariant(s.weyl, 5);
        EXPECT_EQ(apply_derivation(d, f, s.chart), x.apply(f));
    }
}

TEST(Derivations, RandomStableIffLiftable) {
    Sampler smp(33);
    for (const auto& name : catalog_names()) {
        const PairContext& c = ctx(name);
        for (int k = 0; k < 8; ++k) {
            InvariantDerivation d;
            for (std::size_t i = 0; i < c.chart.generators.size(); ++i) d.images.push_back(smp.invariant(c.weyl, 5));
            bool stable = ideal_stable(d, c.chart).stable;
            bool liftable = std::holds_alternative<Lifted>(lift_derivation(d, c.chart));
            EXPECT_EQ(stable, liftable) << name;
        }
        // multiplying by Phi always yields a stable derivation
        InvariantDerivation d;
        for (std::size_t i = 0; i < c.chart.generators.size(); ++i) d.images.push_back(c.chart.phi * smp.invariant(c.weyl, 3));
        EXPECT_TRUE(ideal_stable(d, c.chart).stable) << name;
        EXPECT_TRUE(std::holds_alternative<Lifted>(lift_derivation(d, c.chart))) << name;
    }
}

TEST(Derivations, RequireInvariantImages) {
    const PairContext& s = ctx("sl3-so21");
    EXPECT_THROW(require_invariant_derivation({{P("x0", 2), MultiPoly(2)}}, s.chart, s.weyl), InputError);
    EXPECT_THROW(require_invariant_derivation({{MultiPoly(2)}}, s.chart, s.weyl), InputError);
    EXPECT_NO_THROW(require_invariant_derivation({{s.chart.generators[1], MultiPoly(2)}}, s.chart, s.weyl));
}

TEST(Transition, OriginIsIdentity) {
    const PairContext& s = ctx("sl3-so21");
    LocalChart lc = local_chart(s.roots, s.weyl, s.chart, Vector(2, Scalar(0)));
    TransitionMatrix t = transition_matrix(s.chart, lc);
    EXPECT_EQ(t.m, poly_identity(2, 2));
    EXPECT_EQ(t.det_at_point, Scalar(1));
}

TEST(Transition, SubregularPoint) {
    const PairContext& s = ctx("sl3-so21");
    Vector a{Scalar(1), Scalar(0)};
    LocalChart lc = local_chart(s.roots, s.weyl, s.chart, a);
    TransitionMatrix t = transition_matrix(s.chart, lc);
    EXPECT_EQ(t.m(0, 0), P("-1/3", 2));
    EXPECT_EQ(t.m(0, 1), P("x0", 2));
    EXPECT_EQ(t.m(1, 0), P("2*x0", 2));
    EXPECT_EQ(t.m(1, 1), P("3*x0^2 + x1^2", 2));
    EXPECT_EQ(t.det_at_point, Scalar(-3));
    for (std::size_t j = 0; j < 2; ++j) {
        PolyVectorField sum = PolyVectorField::zero(2);
        for (std::size_t i = 0; i < 2; ++i) sum = sum + t.m(i, j) * lc.gradients[i];
        EXPECT_EQ(sum, s.chart.gradients[j]);
    }
}

TEST(Transition, RegularAndSingularPointsOfEveryPair) {
    Sampler smp(41);
    for (const auto& name : catalog_names()) {
        const PairContext& c = ctx(name);
        std::vector<Vector> points{regular_point(c.chart, smp)};
        if (auto sp = singular_point(c.roots)) points.push_back(*sp);
        for (const auto& a : points) {
            LocalChart lc = local_chart(c.roots, c.weyl, c.chart, a);
            TransitionMatrix t = transition_matrix(c.chart, lc);
            EXPECT_FALSE(t.det_at_point.is_zero()) << name;
            for (std::size_t i = 0; i < t.m.rows(); ++i)
                for (std::size_t j = 0; j < t.m.cols(); ++j) EXPECT_TRUE(is_invariant(t.m(i, j), lc.local.group)) << name;
        }
    }
}

TEST(Transition, LocalSolomonAtSubregularPoint) {
    Sampler smp(42);
    const PairContext& s = ctx("sl3-so21");
    LocalChart lc = local_chart(s.roots, s.weyl, s.chart, Vector{Scalar(1), Scalar(0)});
    for (int k = 0; k < 5; ++k) {
        PolyVectorField x = smp.invariant_field(lc.local.group, 4);
        SolomonResult r = solomon_decompose(x, lc);
        EXPECT_EQ(reassemble(r.coefficients, lc.gradients), x);
    }
}
