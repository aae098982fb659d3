#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "dense_matrix.hpp"
#include "error.hpp"

namespace cursel {

inline constexpr double default_rank_tolerance = 1e-12;

struct SvdResult {
    DenseMatrix left_vectors;            // n x n
    std::vector<double> singular_values; // min(n, m), non-increasing
    DenseMatrix right_vectors;           // m x m
};

namespace detail {

inline void require_nonempty(const DenseMatrix& a, const char* op)
{
    require(!a.empty(), ErrorKind::InvalidInput, std::string(op) + ": empty matrix");
}

inline Eigen::MatrixXd col_major(const DenseMatrix& a) { return a.eigen(); }

template <int Options>
Eigen::BDCSVD<Eigen::MatrixXd> run_svd(const Eigen::MatrixXd& a)
{
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Options);
    if (svd.info() != Eigen::Success)
        fail(ErrorKind::NumericalFailure, "SVD did not converge");
    return svd;
}

inline std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

} // namespace detail

/// Full SVD a = U diag(s) V^T.
inline SvdResult svd(const DenseMatrix& a)
{
    detail::require_nonempty(a, "svd");
    auto s = detail::run_svd<Eigen::ComputeFullU | Eigen::ComputeFullV>(detail::col_major(a));
    return {DenseMatrix(s.matrixU()), detail::to_vector(s.singularValues()), DenseMatrix(s.matrixV())};
}

inline std::vector<double> singular_values(const DenseMatrix& a)
{
    detail::require_nonempty(a, "singular_values");
    return detail::to_vector(detail::run_svd<0>(detail::col_major(a)).singularValues());
}

inline double spectral_norm(const DenseMatrix& a) { return singular_values(a).front(); }

inline double frobenius_norm(const DenseMatrix& a) { return a.eigen().norm(); }

/// Chebyshev norm: largest absolute entry.
inline double max_norm(const DenseMatrix& a) { return a.empty() ? 0.0 : a.eigen().cwiseAbs().maxCoeff(); }

/// Smallest of the min(n, m) singular values.
inline double sigma_min(const DenseMatrix& a) { return singular_values(a).back(); }

inline std::size_t numerical_rank(const DenseMatrix& a, double rel_tol = default_rank_tolerance)
{
    if (a.empty())
        return 0;
    const auto s = singular_values(a);
    const double cut = rel_tol * s.front();
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > cut; }));
}

/// Truncated-SVD Moore-Penrose pseudoinverse; singular values <= rel_tol * sigma_1 count as zero.
inline DenseMatrix pseudoinverse(const DenseMatrix& a, double rel_tol = default_rank_tolerance)
{
    require(rel_tol >= 0.0, ErrorKind::InvalidInput, "pseudoinverse: negative tolerance");
    if (a.empty())
        return DenseMatrix(a.cols(), a.rows());
    auto s = detail::run_svd<Eigen::ComputeThinU | Eigen::ComputeThinV>(detail::col_major(a));
    const Eigen::VectorXd& sv = s.singularValues();
    const double cut = rel_tol * (sv.size() > 0 ? sv(0) : 0.0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut && sv(i) > 0.0)
            inv(i) = 1.0 / sv(i);
    return DenseMatrix(RowMajorMatrix(s.matrixV() * inv.asDiagonal() * s.matrixU().transpose()));
}

/// Orthonormal basis of the numerical column space at rel_tol (n x rank).
inline DenseMatrix orthonormal_range(const DenseMatrix& a, double rel_tol = default_rank_tolerance)
{
    detail::require_nonempty(a, "orthonormal_range");
    auto s = detail::run_svd<Eigen::ComputeThinU>(detail::col_major(a));
    const Eigen::VectorXd& sv = s.singularValues();
    const double cut = rel_tol * sv(0);
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > cut && sv(r) > 0.0)
        ++r;
    return DenseMatrix(RowMajorMatrix(s.matrixU().leftCols(r)));
}

inline void check_index_set(const IndexSet& idx, Axis axis, std::size_t extent)
{
    require(idx.axis() == axis, ErrorKind::InvalidInput,
            axis == Axis::Rows ? "expected a row index set" : "expected a column index set");
    for (std::size_t i : idx)
        require(i < extent, ErrorKind::IndexError,
                "index " + std::to_string(i) + " out of range for extent " + std::to_string(extent));
}

/// result(i, j) = a(rows[i], cols[j]).
inline DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols)
{
    check_index_set(rows, Axis::Rows, a.rows());
    check_index_set(cols, Axis::Columns, a.cols());
    RowMajorMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(rows[i], cols[j]);
    return DenseMatrix(std::move(out));
}

/// A(I, :)
inline DenseMatrix rows_of(const DenseMatrix& a, const IndexSet& rows)
{
    return submatrix(a, rows, IndexSet::all(Axis::Columns, a.cols()));
}

/// A(:, J)
inline DenseMatrix cols_of(const DenseMatrix& a, const IndexSet& cols)
{
    return submatrix(a, IndexSet::all(Axis::Rows, a.rows()), cols);
}

inline bool has_orthonormal_columns(const DenseMatrix& x, double tol)
{
    const auto& e = x.eigen();
    const Eigen::MatrixXd gram = e.transpose() * e;
    return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <= tol;
}

/// mu = n * max|x_ij|^2 for x with orthonormal columns.
inline double coherence(const DenseMatrix& x)
{
    detail::require_nonempty(x, "coherence");
    require(has_orthonormal_columns(x, 1e-8), ErrorKind::NotOrthonormal,
            "coherence requires orthonormal columns");
    const double mx = max_norm(x);
    return static_cast<double>(x.rows()) * mx * mx;
}

//
// Lower bound on sigma_min([[A, B], [0, C]]) given sigma_min(A) >= delta_a,
// ||B|| <= b and sigma_min(C) >= delta_c.
//
inline double sigma_min_block_bound(double delta_a, double delta_c, double b)
{
    require(delta_a > 0.0 && delta_c > 0.0 && b > 0.0, ErrorKind::InvalidInput,
            "sigma_min_block_bound: arguments must be positive");
    const double ia2 = 1.0 / (delta_a * delta_a);
    const double ic2 = 1.0 / (delta_c * delta_c);
    return 1.0 / std::sqrt(b * b * ia2 * ic2 + ia2 + ic2);
}

} // namespace cursel
