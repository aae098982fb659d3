#include <cmath>

#include <gtest/gtest.h>

#include "cursel/cursel.hpp"

using namespace cursel;
using namespace cursel::matgen;

TEST(BlockExample, PatternAndSpectrum)
{
    EXPECT_EQ(gen_block_example(3), (DenseMatrix{{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}));
    const auto s = singular_values(gen_block_example(3));
    EXPECT_NEAR(s[0], 2.0, 1e-14);
    EXPECT_NEAR(s[1], 1.0, 1e-14);
    EXPECT_NEAR(s[2], 0.0, 1e-14);
    EXPECT_EQ(numerical_rank(gen_block_example(50)), 2u);
    EXPECT_THROW(gen_block_example(2), Error);
}

TEST(Cross, PatternAndSpectrum)
{
    EXPECT_EQ(gen_cross(3), (DenseMatrix{{1, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
    // nonzero sigma^2 solve t^2 - (2n-1) t + (n-1)^2 = 0; n = 2 gives the golden ratio pair
    const auto s2 = singular_values(gen_cross(2));
    EXPECT_NEAR(s2[0], (1.0 + std::sqrt(5.0)) / 2.0, 1e-14);
    EXPECT_NEAR(s2[1], (std::sqrt(5.0) - 1.0) / 2.0, 1e-14);
    for (std::size_t n : {3u, 10u, 57u}) {
        const auto s = singular_values(gen_cross(n));
        const double b = 2.0 * double(n) - 1.0, disc = std::sqrt(4.0 * double(n) - 3.0);
        EXPECT_NEAR(s[0], std::sqrt((b + disc) / 2.0), 1e-12);
        EXPECT_NEAR(s[1], std::sqrt((b - disc) / 2.0), 1e-12);
        EXPECT_EQ(numerical_rank(gen_cross(n)), 2u);
    }
    EXPECT_THROW(gen_cross(1), Error);
}

TEST(Cross, DisplayedFactorization)
{
    // A = X diag(sqrt(n), sqrt(n-1)) Y^T with X = [e1, (0,1,..,1)/sqrt(n-1)], Y = [1/sqrt(n), e1]
    const std::size_t n = 6;
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, 2), y = Eigen::MatrixXd::Zero(n, 2);
    x(0, 0) = 1.0;
    x.col(1).tail(n - 1).setConstant(1.0 / std::sqrt(double(n - 1)));
    y.col(0).setConstant(1.0 / std::sqrt(double(n)));
    y(0, 1) = 1.0;
    const Eigen::Vector2d z(std::sqrt(double(n)), std::sqrt(double(n - 1)));
    const Eigen::MatrixXd back = x * z.asDiagonal() * y.transpose();
    EXPECT_LT((back - gen_cross(n).eigen()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(InverseQuadratic, EntriesAndDecay)
{
    const DenseMatrix a = gen_inverse_quadratic(3, 4);
    EXPECT_DOUBLE_EQ(a(0, 0), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(a(1, 2), 1.0 / 12.0);
    EXPECT_DOUBLE_EQ(a(2, 3), 1.0 / 20.0);
    // frozen from an independent SVD at 100 x 100: sigma_6 / sigma_1 = 3.659e-4, sigma_7 / sigma_1 = 5.458e-5
    const auto s = singular_values(gen_inverse_quadratic(100, 100));
    EXPECT_NEAR(s[5] / s[0], 3.65907619e-4, 1e-3 * 3.659e-4);
    EXPECT_LT(s[6] / s[0], 1e-4);
}

TEST(Bivariate, CornersAndNumericalRank)
{
    const DenseMatrix two = gen_bivariate(2, 0.0, 0);
    EXPECT_DOUBLE_EQ(two(0, 0), bivariate_function(0.0, 0.0));
    EXPECT_DOUBLE_EQ(two(1, 0), bivariate_function(1.0, 0.0));
    EXPECT_DOUBLE_EQ(two(0, 1), bivariate_function(0.0, 1.0));
    // f(0, 0) = 2, f(1, 1) = 5 sin 3 + 2 e^{1/2} cos 10 + 20/3
    EXPECT_NEAR(two(0, 0), 2.0, 1e-15);
    EXPECT_NEAR(two(1, 1), 5.0 * std::sin(3.0) + 2.0 * std::exp(0.5) * std::cos(10.0) + 20.0 / 3.0, 1e-13);

    const auto s = singular_values(gen_bivariate(200, 0.0, 0));
    EXPECT_LT(s[3] / s[0], 1e-2);
}

TEST(Bivariate, NoiseHasRequestedNorm)
{
    const DenseMatrix clean = gen_bivariate(40, 0.0, 3);
    const DenseMatrix noisy = gen_bivariate(40, 1e-5, 3);
    // the difference cancels against entries of size ~10, so only ~1e-9 relative survives
    EXPECT_NEAR(spectral_norm(noisy - clean), 1e-5, 1e-8 * 1e-5);
    Rng rng = make_rng(3);
    EXPECT_NEAR(spectral_norm(DenseMatrix(noise_with_norm(40, 40, 1e-5, rng))), 1e-5, 1e-15);
    EXPECT_EQ(noisy, gen_bivariate(40, 1e-5, 3));
}

TEST(Bivariate, PoleOnGridIsRejected)
{
    EXPECT_THROW(gen_bivariate(5, 0.0, 0), Error); // x = 1/4
    EXPECT_THROW(gen_bivariate(6, 0.0, 0), Error); // y = 4/5
    EXPECT_NO_THROW(gen_bivariate(1000, 0.0, 0));
}

TEST(Orthonormal, ColumnsAndSeed)
{
    const DenseMatrix x = gen_orthonormal(30, 4, 5);
    EXPECT_TRUE(has_orthonormal_columns(x, 1e-13));
    EXPECT_EQ(x, gen_orthonormal(30, 4, 5));
    EXPECT_THROW(gen_orthonormal(3, 4, 0), Error);
}

TEST(Assumption, GeneratedInstanceSatisfiesEveryClause)
{
    AssumptionSpec spec;
    spec.n = 80;
    spec.m = 60;
    spec.epsilon = 1e-6;
    spec.seed = 4;
    const auto inst = gen_assumption_matrix(spec);
    const auto rep = verify_assumption(inst);
    for (const auto& c : rep.clauses)
        EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
    EXPECT_TRUE(rep.all_passed());
    EXPECT_GE(inst.mu(), 1.0);
    EXPECT_NEAR(spectral_norm(inst.e), 1e-6, 1e-16);
}

TEST(Assumption, SpectrumIsLogSpaced)
{
    const auto s = log_spectrum(4, 1000.0);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_NEAR(s.front() / s.back(), 1000.0, 1e-9);
    EXPECT_NEAR(s[0] / s[1], 10.0, 1e-9);

    AssumptionSpec spec;
    spec.n = spec.m = 40;
    spec.epsilon = 0.0;
    const auto inst = gen_assumption_matrix(spec);
    EXPECT_EQ(numerical_rank(inst.a, 1e-10), spec.k());
    EXPECT_EQ(verify_assumption(inst).find("low_rank_exact")->passed, true);
}

TEST(Assumption, ViolationsAreReported)
{
    AssumptionSpec spec;
    spec.n = spec.m = 50;
    spec.epsilon = 1e-4;
    const auto inst = gen_assumption_matrix(spec);

    // X3 gets more than beta nonzeros
    Eigen::MatrixXd x = inst.x.eigen();
    x.col(static_cast<Eigen::Index>(spec.k() - 1)).setConstant(1.0 / std::sqrt(50.0));
    auto rep = verify_assumption(inst.a, DenseMatrix(x), inst.y, inst.z, inst.e, spec);
    EXPECT_FALSE(rep.find("x3_sparsity")->passed);
    EXPECT_FALSE(rep.all_passed());

    // coupling between blocks of Z
    Eigen::MatrixXd z = inst.z.eigen();
    z(0, static_cast<Eigen::Index>(spec.k() - 1)) = 0.5;
    rep = verify_assumption(inst.a, inst.x, inst.y, DenseMatrix(z), inst.e, spec);
    EXPECT_FALSE(rep.find("z_block_diagonal")->passed);

    // wrong noise level
    rep = verify_assumption(inst.a, inst.x, inst.y, inst.z, inst.e * 2.0, spec);
    EXPECT_FALSE(rep.find("e_norm")->passed);
    EXPECT_FALSE(rep.find("a_consistency")->passed);

    // wrong shape
    rep = verify_assumption(DenseMatrix(3, 3), inst.x, inst.y, inst.z, inst.e, spec);
    EXPECT_FALSE(rep.find("dimensions")->passed);
}
