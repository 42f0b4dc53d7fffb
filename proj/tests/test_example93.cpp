#include <gtest/gtest.h>

#include "symcart/example93.hpp"

using namespace symcart;

TEST(Example93, AllChecksPass) {
    CheckReport rep = verify_example93(example93_data());
    ASSERT_EQ(rep.checks.size(), 6u);
    for (const char* name :
         {"dimensions", "cartan-subspace", "mc-centralizer", "qM-shape", "v-orthogonal-to-a", "gradient-rank"}) {
        const Check* c = rep.find(name);
        ASSERT_NE(c, nullptr) << name;
        EXPECT_TRUE(c->ok) << name << ": " << c->witness;
    }
    EXPECT_TRUE(rep.ok());
}

TEST(Example93, SeedDoesNotMatter) {
    for (std::uint64_t seed : {1u, 7u, 99u}) EXPECT_TRUE(verify_example93(example93_data(), seed).ok()) << seed;
}

TEST(Example93, FlippedInvolutionFailsCentralizerCheck) {
    Example93Data d = example93_data();
    d.sigma_sign = Scalar(-1);
    CheckReport rep = verify_example93(d);
    EXPECT_FALSE(rep.find("mc-centralizer")->ok);
    EXPECT_TRUE(rep.find("v-orthogonal-to-a")->ok);
}

TEST(Example93, GenericQmVectorFailsOrthogonality) {
    Example93Data d = example93_data();
    d.v = matrix3({{1, 0, 1}, {0, 0, 0}, {-1, 0, -1}});
    CheckReport rep = verify_example93(d);
    const Check* c = rep.find("v-orthogonal-to-a");
    EXPECT_FALSE(c->ok);
    EXPECT_EQ(c->witness, "kappa(v, a) = [0, -2]");
    EXPECT_TRUE(rep.find("mc-centralizer")->ok);
}

TEST(Example93, VectorOutsideQmIsRejected) {
    Example93Data d = example93_data();
    d.v = matrix3({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});  // in q, not fixed by M
    EXPECT_FALSE(verify_example93(d).find("v-orthogonal-to-a")->ok);
}

TEST(Example93, WitnessesByDirectMatrixAlgebra) {
    // sigma(g) = I21 g^{-T} I21 on the group; witnesses square to 1, so g^{-1} = g
    Example93Data d = example93_data();
    ScalarMatrix j = i21(), id = scalar_identity(3);
    for (const auto& g : d.mc_witnesses) {
        EXPECT_EQ(g * g, id);
        EXPECT_EQ(j * g.transpose() * j, g);
        EXPECT_EQ(determinant(g), Scalar(1));
        for (const auto& a : d.a_basis) EXPECT_EQ(g * a, a * g);
    }
    // the two complex witnesses are not real, the real ones are diagonal
    EXPECT_FALSE(d.mc_witnesses[2](0, 2).is_real());
    for (const auto& g : d.m_real)
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                if (r != c) {
                    EXPECT_TRUE(g(r, c).is_zero());
                }
            }
}

TEST(Example93, WrongWitnessIsCaught) {
    Example93Data d = example93_data();
    d.mc_witnesses.push_back(matrix3({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
    EXPECT_FALSE(verify_example93(d).find("mc-centralizer")->ok);
}
