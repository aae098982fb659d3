#include <cmath>

#include <gtest/gtest.h>

#include "cursel/cursel.hpp"

using namespace cursel;

TEST(TailBases, ReproduceQuotedConstants)
{
    // c1 ~ 0.62, c2 ~ 0.78 at delta = 4/5
    EXPECT_NEAR(lower_tail_base(0.8), 0.6199524995461725, 1e-15);
    EXPECT_NEAR(upper_tail_base(0.8), 0.7725828731359727, 1e-15);
    EXPECT_NEAR(lower_tail_base(0.8), 0.62, 0.01);
    EXPECT_NEAR(upper_tail_base(0.8), 0.78, 0.01);
    EXPECT_DOUBLE_EQ(upper_tail_base(1.0), std::exp(1.0) / 4.0);
    EXPECT_THROW(lower_tail_base(1.0), Error);
}

TEST(ExactRecoveryFloor, Formula)
{
    EXPECT_NEAR(exact_recovery_floor(100, 100, 1, 1, 2.0, 5.0), 0.946524106001829, 1e-15);
    // the acceptance setup: n = m = 300, k = 6, beta = 3 is vacuous for any ell >= k
    for (double alpha : {0.5, 1.0, 3.0, 10.0})
        EXPECT_LT(exact_recovery_floor(300, 300, 6, 3, 6.0, alpha), 0.8);
}

namespace {

ColumnBoundInputs sample_inputs(double eps)
{
    ColumnBoundInputs in;
    in.n = in.m = 100;
    in.k = in.k_lead = 2;
    in.beta = 1;
    in.epsilon = eps;
    in.sigma_1 = 10.0;
    in.sigma_k = 1.0;
    in.y_pinv_norm = 1.0;
    in.ell = 20.0;
    return in;
}

} // namespace

TEST(ColumnBound, HandComputedValue)
{
    TheoryParams tp;
    tp.eta = 1.0;
    const BoundReport r = bound_theorem_column(sample_inputs(1e-6), tp);
    EXPECT_FALSE(r.vacuous);
    EXPECT_NEAR(r.delta_a_inv, 424.3240771984101, 1e-9);
    EXPECT_NEAR(r.delta_c_inv, 5.0, 1e-12);
    EXPECT_NEAR(r.bound_value, 0.0030608526058447136, 1e-15);
    EXPECT_NEAR(r.raw_probability, -2.5850707453642903, 1e-12);
    EXPECT_EQ(r.success_probability, 0.0);
}

TEST(ColumnBound, ZeroNoiseGivesZeroAndNoiseIsMonotone)
{
    TheoryParams tp;
    EXPECT_EQ(bound_theorem_column(sample_inputs(0.0), tp).bound_value, 0.0);
    double prev = 0.0;
    for (double eps : {1e-9, 1e-7, 1e-5}) {
        const double b = bound_theorem_column(sample_inputs(eps), tp).bound_value;
        EXPECT_GT(b, prev);
        prev = b;
    }
}

TEST(ColumnBound, VacuousDenominator)
{
    const BoundReport r = bound_theorem_column(sample_inputs(1.0), TheoryParams{});
    EXPECT_TRUE(r.vacuous);
    EXPECT_TRUE(std::isinf(r.bound_value));
}

TEST(ColumnBound, EtaGrowthOnlyWhenLarger)
{
    TheoryParams one, big;
    one.eta = 1.0;
    big.eta = 3.0;
    // sqrt(1 + 9 * 2 * 98) > sqrt(200): the larger factor enters delta_A^{-1}
    const double ratio =
        bound_theorem_column(sample_inputs(1e-6), big).delta_a_inv / bound_theorem_column(sample_inputs(1e-6), one).delta_a_inv;
    EXPECT_GT(ratio, 2.9);
}

TEST(CorollaryBound, AddsColumnAndRowTerms)
{
    TheoryParams tp;
    const auto c = sample_inputs(1e-6);
    auto r = c;
    r.sigma_1 = 20.0;
    const auto sum = bound_corollary_cur(c, r, tp);
    EXPECT_NEAR(sum.bound_value, bound_theorem_column(c, tp).bound_value + bound_theorem_column(r, tp).bound_value,
                1e-15);
}

TEST(IterativeBound, RatioToColumnBound)
{
    TheoryParams tp;
    tp.eta = 1.1;
    const auto in = sample_inputs(1e-6);
    const double col = bound_theorem_column(in, tp).bound_value;
    const double it = bound_theorem_iterative(in, tp, 5).bound_value;
    EXPECT_NEAR(it / col, 1.0 + std::sqrt(1.0 + 1.21 * 5.0 * 95.0), 1e-12);
    EXPECT_THROW(iterative_growth(1.1, 101, 100), Error);
}

TEST(AssumptionInputs, ColumnAndRowSides)
{
    matgen::AssumptionSpec spec;
    spec.n = 60;
    spec.m = 40;
    spec.k1 = 1;
    spec.k2 = 2;
    spec.k3 = 3;
    spec.epsilon = 1e-8;
    const auto inst = matgen::gen_assumption_matrix(spec);
    const auto c = column_bound_inputs(inst, 12.0);
    const auto r = row_bound_inputs(inst, 12.0);
    EXPECT_EQ(c.n, 60u);
    EXPECT_EQ(c.m, 40u);
    EXPECT_EQ(c.k_lead, 3u);
    EXPECT_EQ(r.n, 40u);
    EXPECT_EQ(r.m, 60u);
    EXPECT_EQ(r.k_lead, 4u);
    EXPECT_NEAR(c.y_pinv_norm, 1.0 / sigma_min(inst.y), 1e-12);
    EXPECT_NEAR(r.y_pinv_norm, 1.0 / sigma_min(inst.x), 1e-12);
    EXPECT_NEAR(c.sigma_1, spectral_norm(inst.low_rank()), 1e-9 * c.sigma_1);
}

TEST(Tropp, FrequenciesStayBelowCeilings)
{
    const DenseMatrix x = matgen::gen_orthonormal(200, 3, 1);
    TheoryParams tp;
    tp.alpha = 2.0;
    tp.delta = 0.8;
    tp.delta_prime = 1.0;
    const double mu = coherence(x);
    const auto ell = static_cast<std::size_t>(std::ceil(tp.alpha * 3.0 * mu));
    const TroppReport r = empirical_tropp_check(x, tp, ell, 500, 2);
    EXPECT_EQ(r.trials, 500u);
    EXPECT_LE(r.pinv_frequency, r.pinv_ceiling);
    EXPECT_LE(r.norm_frequency, r.norm_ceiling);
    EXPECT_TRUE(r.within_ceilings());
    EXPECT_NEAR(r.pinv_ceiling, 3.0 * std::pow(lower_tail_base(0.8), 2.0), 1e-15);
}

TEST(Tropp, RejectsTooFewRows)
{
    const DenseMatrix x = matgen::gen_orthonormal(100, 4, 1);
    TheoryParams tp;
    tp.alpha = 3.0;
    EXPECT_THROW(empirical_tropp_check(x, tp, 5, 10, 0), Error);
    EXPECT_THROW(empirical_tropp_check(DenseMatrix::ones(10, 1), tp, 5, 10, 0), Error);
}
