#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "cursel/bench/suites.hpp"
#include "cursel/cursel.hpp"

using namespace cursel;

TEST(Srrqr, PicksLargestColumnForRankOne)
{
    Rng rng = make_rng(0);
    const SrrqrResult r = srrqr(DenseMatrix{{1.0, 0.0}, {0.0, 2.0}}, 1, default_eta, rng);
    EXPECT_EQ(r.selected_cols.to_vector(), std::vector<std::size_t>{1});
    EXPECT_NEAR(std::abs(r.a_k(0, 0)), 2.0, 1e-15);
    EXPECT_NEAR(std::abs(r.b_k(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.c_k(0, 0)), 1.0, 1e-15);
}

TEST(Srrqr, FactorShapesAndReconstruction)
{
    Rng rng = make_rng(1);
    const DenseMatrix a(matgen::gaussian(9, 7, rng));
    const SrrqrResult r = srrqr(a, 3, default_eta, rng);
    EXPECT_EQ(r.a_k.rows(), 3u);
    EXPECT_EQ(r.a_k.cols(), 3u);
    EXPECT_EQ(r.b_k.cols(), 4u);
    EXPECT_EQ(r.c_k.rows(), 6u);
    EXPECT_EQ(r.c_k.cols(), 4u);
    for (std::size_t i = 1; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j)
            EXPECT_EQ(r.a_k(i, j), 0.0);

    // R = [A_k B_k; 0 C_k] has the singular values of A P, hence of A
    Eigen::MatrixXd big = Eigen::MatrixXd::Zero(9, 7);
    big.topLeftCorner(3, 3) = r.a_k.eigen();
    big.topRightCorner(3, 4) = r.b_k.eigen();
    big.bottomRightCorner(6, 4) = r.c_k.eigen();
    const auto s_r = singular_values(DenseMatrix(big));
    const auto s_a = singular_values(a);
    for (std::size_t i = 0; i < s_a.size(); ++i)
        EXPECT_NEAR(s_r[i], s_a[i], 1e-12 * s_a[0]);
}

TEST(Srrqr, PermutationIsValidAndPrefixIsSelection)
{
    Rng rng = make_rng(2);
    const DenseMatrix a(matgen::gaussian(6, 15, rng));
    const SrrqrResult r = srrqr(a, 4, default_eta, rng);
    std::vector<std::size_t> sorted = r.permutation;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(15);
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    EXPECT_EQ(sorted, expected);
    EXPECT_TRUE(std::equal(r.selected_cols.begin(), r.selected_cols.end(), r.permutation.begin()));
    EXPECT_EQ(r.selected_cols.axis(), Axis::Columns);
}

TEST(Srrqr, CrossMatrixSelectsTheOnesColumn)
{
    const DenseMatrix a = matgen::gen_cross(30);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng = make_rng(seed);
        const SrrqrResult r = srrqr(a, 2, default_eta, rng);
        EXPECT_TRUE(r.selected_cols.contains(0));
        EXPECT_EQ(r.numerical_rank, 2u);
        // A(:, J) spans the range: the column subset error vanishes
        EXPECT_LT(column_subset_error(a, r.selected_cols), 1e-12);
    }
}

TEST(Srrqr, RankDeficientTailIsRandomAndSeeded)
{
    const DenseMatrix a = DenseMatrix::ones(5, 12);
    std::set<std::vector<std::size_t>> seen;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng = make_rng(seed);
        const SrrqrResult r = srrqr(a, 3, default_eta, rng);
        EXPECT_EQ(r.numerical_rank, 1u);
        EXPECT_EQ(r.selected_cols.size(), 3u);
        seen.insert(r.selected_cols.to_vector());
    }
    EXPECT_GT(seen.size(), 5u);

    Rng r1 = make_rng(77), r2 = make_rng(77);
    EXPECT_EQ(srrqr_select(a, 3, default_eta, r1), srrqr_select(a, 3, default_eta, r2));
}

TEST(Srrqr, ZeroMatrixPicksUniformly)
{
    Rng rng = make_rng(3);
    const SrrqrResult r = srrqr(DenseMatrix(4, 6), 2, default_eta, rng);
    EXPECT_EQ(r.numerical_rank, 0u);
    EXPECT_EQ(r.selected_cols.size(), 2u);
}

TEST(Srrqr, Deterministic)
{
    Rng g = make_rng(4);
    const DenseMatrix a(matgen::gaussian(20, 20, g));
    Rng r1 = make_rng(5), r2 = make_rng(5);
    const auto x = srrqr(a, 6, 1.05, r1);
    const auto y = srrqr(a, 6, 1.05, r2);
    EXPECT_EQ(x.permutation, y.permutation);
    EXPECT_EQ(x.a_k, y.a_k);
}

TEST(Srrqr, KahanMatrixNeedsSwaps)
{
    // plain column pivoting keeps Kahan's natural order; the swap phase must
    // pull the tiny trailing diagonal into the selection
    const DenseMatrix a(bench::detail::kahan_matrix(40, 40, 0.285));
    Rng rng = make_rng(6);
    const SrrqrResult r = srrqr(a, 39, default_eta, rng);
    EXPECT_GT(r.swaps, 0u);
    const auto s = singular_values(a);
    const double f = srrqr_factor(default_eta, 39, 40);
    EXPECT_GE(sigma_min(r.a_k), s[38] / f * (1.0 - 1e-9));
    EXPECT_LE(spectral_norm(r.c_k), s[39] * f * (1.0 + 1e-9));
}

TEST(Srrqr, InvalidArguments)
{
    Rng rng = make_rng(0);
    const DenseMatrix a(3, 4);
    for (std::size_t k : {std::size_t{0}, std::size_t{4}}) {
        try {
            srrqr(a, k, default_eta, rng);
            FAIL() << "k = " << k;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
        }
    }
    EXPECT_THROW(srrqr(a, 1, 1.0, rng), Error);
}

TEST(Srrqr, FactorFormula)
{
    EXPECT_DOUBLE_EQ(srrqr_factor(1.0, 2, 10), std::sqrt(17.0));
    EXPECT_DOUBLE_EQ(srrqr_factor(2.0, 3, 3), 1.0);
}

TEST(Srrqr, DefinitionConditionsOnSeededCorpus)
{
    const auto r = bench::check_srrqr_guarantees(120, 31);
    EXPECT_TRUE(r.passed) << r.detail;
}
