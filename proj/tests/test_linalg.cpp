#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "cursel/bench/suites.hpp"
#include "cursel/cursel.hpp"

using namespace cursel;

namespace {

DenseMatrix random_matrix(std::size_t n, std::size_t m, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return DenseMatrix(matgen::gaussian(n, m, rng));
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) { return max_norm(a - b); }

} // namespace

TEST(DenseMatrix, RejectsNonFiniteEntries)
{
    EXPECT_THROW((DenseMatrix{{1.0, std::nan("")}}), Error);
    try {
        DenseMatrix{{std::numeric_limits<double>::infinity()}};
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(IndexSet, DuplicatesAndSetOperations)
{
    EXPECT_THROW(IndexSet(Axis::Rows, {1, 2, 1}), Error);
    const IndexSet a(Axis::Rows, {3, 1});
    const IndexSet b(Axis::Rows, {1, 4});
    EXPECT_EQ(a.union_with(b).to_vector(), (std::vector<std::size_t>{3, 1, 4}));
    EXPECT_THROW(a.concat(b), Error);
    EXPECT_TRUE(IndexSet(Axis::Rows, {1}).is_subset_of(a));
    EXPECT_EQ(a.as(Axis::Columns).axis(), Axis::Columns);
}

TEST(Svd, DiagonalExample)
{
    // [[3, 0], [0, 4]] has singular values 4, 3.
    const auto s = singular_values(DenseMatrix{{3.0, 0.0}, {0.0, 4.0}});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s[0], 4.0, 1e-14);
    EXPECT_NEAR(s[1], 3.0, 1e-14);
}

TEST(Svd, ReconstructsAndIsOrthogonal)
{
    const DenseMatrix a = random_matrix(7, 4, 3);
    const SvdResult r = svd(a);
    ASSERT_EQ(r.singular_values.size(), 4u);
    EXPECT_TRUE(has_orthonormal_columns(r.left_vectors, 1e-12));
    EXPECT_TRUE(has_orthonormal_columns(r.right_vectors, 1e-12));
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(7, 4);
    for (int i = 0; i < 4; ++i)
        sigma(i, i) = r.singular_values[std::size_t(i)];
    const Eigen::MatrixXd back = r.left_vectors.eigen() * sigma * r.right_vectors.eigen().transpose();
    EXPECT_LT((back - a.eigen()).cwiseAbs().maxCoeff(), 1e-12);
    for (std::size_t i = 1; i < r.singular_values.size(); ++i)
        EXPECT_GE(r.singular_values[i - 1], r.singular_values[i]);
}

TEST(Svd, EmptyInputIsRejected)
{
    EXPECT_THROW(singular_values(DenseMatrix(0, 3)), Error);
}

TEST(Norms, Examples)
{
    const DenseMatrix a{{1.0, -2.0}, {0.0, 2.0}};
    EXPECT_DOUBLE_EQ(max_norm(a), 2.0);
    EXPECT_NEAR(frobenius_norm(a), 3.0, 1e-15);
    // ||a||_2^2 is the largest eigenvalue of a^T a = [[1, -2], [-2, 8]]
    EXPECT_NEAR(spectral_norm(a), std::sqrt((9.0 + std::sqrt(65.0)) / 2.0), 1e-13);
}

TEST(NumericalRank, LowRankProduct)
{
    Rng rng = make_rng(4);
    const DenseMatrix a(matgen::gaussian(12, 3, rng) * matgen::gaussian(3, 9, rng));
    EXPECT_EQ(numerical_rank(a), 3u);
    EXPECT_EQ(numerical_rank(DenseMatrix(4, 4)), 0u);
}

TEST(Pseudoinverse, FullRankSquareIsInverse)
{
    const DenseMatrix a{{2.0, 1.0}, {1.0, 3.0}};
    // inverse = [[3, -1], [-1, 2]] / 5
    const DenseMatrix expected{{0.6, -0.2}, {-0.2, 0.4}};
    EXPECT_LT(max_abs_diff(pseudoinverse(a), expected), 1e-14);
}

TEST(Pseudoinverse, RankOneExample)
{
    // x y^T with x = (1, 2), y = (3): pinv = y x^T / (|x|^2 |y|^2)
    const DenseMatrix a{{3.0}, {6.0}};
    const DenseMatrix expected{{3.0 / 45.0, 6.0 / 45.0}};
    EXPECT_LT(max_abs_diff(pseudoinverse(a), expected), 1e-15);
}

TEST(Pseudoinverse, MoorePenroseIdentitiesOnRandomCorpus)
{
    const auto r = bench::check_moore_penrose(300, 21);
    EXPECT_TRUE(r.passed) << r.failures << " failures, worst " << r.worst;
}

TEST(Pseudoinverse, ZeroMatrixGivesZero)
{
    const DenseMatrix p = pseudoinverse(DenseMatrix(3, 2));
    EXPECT_EQ(p.rows(), 2u);
    EXPECT_EQ(p.cols(), 3u);
    EXPECT_EQ(max_norm(p), 0.0);
}

TEST(OrthonormalRange, SpansColumnsAndDropsRank)
{
    Rng rng = make_rng(9);
    const DenseMatrix a(matgen::gaussian(10, 2, rng) * matgen::gaussian(2, 5, rng));
    const DenseMatrix q = orthonormal_range(a);
    ASSERT_EQ(q.cols(), 2u);
    EXPECT_TRUE(has_orthonormal_columns(q, 1e-12));
    const Eigen::MatrixXd resid = a.eigen() - q.eigen() * (q.eigen().transpose() * a.eigen());
    EXPECT_LT(resid.norm(), 1e-12 * a.eigen().norm());
}

TEST(Submatrix, PicksEntriesInOrder)
{
    const DenseMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    const DenseMatrix s = submatrix(a, IndexSet(Axis::Rows, {2, 0}), IndexSet(Axis::Columns, {1}));
    EXPECT_EQ(s, (DenseMatrix{{8}, {2}}));
    EXPECT_EQ(rows_of(a, IndexSet(Axis::Rows, {1})), (DenseMatrix{{4, 5, 6}}));
    EXPECT_EQ(cols_of(a, IndexSet(Axis::Columns, {2})), (DenseMatrix{{3}, {6}, {9}}));
}

TEST(Submatrix, Errors)
{
    const DenseMatrix a(3, 3);
    try {
        submatrix(a, IndexSet(Axis::Rows, {3}), IndexSet::all(Axis::Columns, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexError);
    }
    EXPECT_THROW(rows_of(a, IndexSet(Axis::Columns, {0})), Error);
}

TEST(Coherence, ExamplesAndRange)
{
    // identity columns are maximally coherent, the normalized ones vector minimally
    const DenseMatrix e1{{1.0}, {0.0}, {0.0}, {0.0}};
    EXPECT_DOUBLE_EQ(coherence(e1), 4.0);
    const DenseMatrix flat{{0.5}, {0.5}, {0.5}, {0.5}};
    EXPECT_NEAR(coherence(flat), 1.0, 1e-15);

    const DenseMatrix x = matgen::gen_orthonormal(50, 4, 2);
    const double mu = coherence(x);
    EXPECT_GE(mu, 1.0 - 1e-12);
    EXPECT_LE(mu, 50.0 / 4.0 * 4.0);

    try {
        coherence(DenseMatrix{{1.0}, {1.0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotOrthonormal);
    }
}

TEST(SigmaMinBlockBound, ScalarExample)
{
    // [[1, 1], [0, 1]]: sigma_min = (sqrt(5) - 1) / 2 ~ 0.618; bound = 1 / sqrt(3) ~ 0.577
    EXPECT_NEAR(sigma_min_block_bound(1.0, 1.0, 1.0), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_LE(sigma_min_block_bound(1.0, 1.0, 1.0), sigma_min(DenseMatrix{{1, 1}, {0, 1}}));
    EXPECT_THROW(sigma_min_block_bound(0.0, 1.0, 1.0), Error);
}

TEST(SigmaMinBlockBound, RandomBlockTriangular)
{
    const auto r = bench::check_block_sigma_min(200, 5);
    EXPECT_TRUE(r.passed) << r.failures << " failures, worst " << r.worst;
}

TEST(SingularValueInequalities, ProductAndSum)
{
    const auto p = bench::check_singular_value_product(200, 6);
    EXPECT_TRUE(p.passed) << "worst " << p.worst;
    const auto s = bench::check_singular_value_sum(200, 6);
    EXPECT_TRUE(s.passed) << "worst " << s.worst;
}

TEST(MatrixIo, CsvRoundTripIsExact)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng = make_rng(seed);
        const auto n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
        const auto m = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
        const DenseMatrix a(matgen::gaussian(n, m, rng) * 1e-7);
        std::stringstream ss;
        io::write_csv(ss, a);
        EXPECT_EQ(io::read_csv(ss), a);
    }
}

TEST(MatrixIo, DmatRoundTripAndHeader)
{
    const DenseMatrix a = random_matrix(5, 3, 8);
    std::stringstream ss(std::ios::in | std::ios::out | std::ios::binary);
    io::write_dmat(ss, a);
    const std::string bytes = ss.str();
    ASSERT_EQ(bytes.size(), io::dmat_header_size + 5 * 3 * 8);
    EXPECT_EQ(bytes.substr(0, 4), "DMAT");
    EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 5);
    EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 3);
    EXPECT_EQ(io::read_dmat(ss), a);
}

TEST(MatrixIo, MalformedInputs)
{
    std::stringstream bad_magic("XXXX0000000000000000");
    try {
        io::read_dmat(bad_magic);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
    std::stringstream ragged("1,2\n3\n");
    EXPECT_THROW(io::read_csv(ragged), Error);
    EXPECT_THROW(io::load("/nonexistent/dir/matrix.csv"), Error);
}
