#pragma once

#include <string_view>

#include "dense_matrix.hpp"
#include "error.hpp"
#include "linalg.hpp"

namespace cursel {

enum class CurMode { Projection, Cross, Heuristic };
enum class NormKind { Spectral, Frobenius };

constexpr std::string_view to_string(NormKind k) noexcept
{
    return k == NormKind::Spectral ? "spectral" : "frobenius";
}

/// A ~= c * m_mid * r with c = A(:, J), r = A(I, :).
struct CurFactors {
    DenseMatrix c;
    DenseMatrix m_mid; // |J| x |I|
    DenseMatrix r;
    CurMode mode = CurMode::Projection;
    IndexSet row_set;
    IndexSet col_set;

    DenseMatrix approximation() const { return c * m_mid * r; }
};

namespace detail {

inline void require_nonempty_sets(const IndexSet& rows, const IndexSet& cols)
{
    require(!rows.empty() && !cols.empty(), ErrorKind::InvalidInput, "CUR index sets must be nonempty");
}

inline double norm_of(const DenseMatrix& a, NormKind kind)
{
    if (a.empty())
        return 0.0;
    return kind == NormKind::Spectral ? spectral_norm(a) : frobenius_norm(a);
}

} // namespace detail

/// M = A(:, J)^+ A A(I, :)^+, the Frobenius-optimal middle matrix.
inline CurFactors build_projection_cur(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols)
{
    detail::require_nonempty_sets(rows, cols);
    CurFactors f;
    f.c = cols_of(a, cols);
    f.r = rows_of(a, rows);
    f.m_mid = pseudoinverse(f.c) * a * pseudoinverse(f.r);
    f.mode = CurMode::Projection;
    f.row_set = rows;
    f.col_set = cols;
    return f;
}

/// M = A(I, J)^+ (truncated at rel_tol), which interpolates A on rows I and columns J.
inline CurFactors build_cross_approximation(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                                            double rel_tol = default_rank_tolerance)
{
    detail::require_nonempty_sets(rows, cols);
    require(rows.size() == cols.size(), ErrorKind::InvalidInput, "cross approximation needs |I| = |J|");
    CurFactors f;
    f.c = cols_of(a, cols);
    f.r = rows_of(a, rows);
    f.m_mid = pseudoinverse(submatrix(a, rows, cols), rel_tol);
    f.mode = CurMode::Cross;
    f.row_set = rows;
    f.col_set = cols;
    return f;
}

//
// Middle matrix estimated from enlarged samples big_rows ⊇ rows, big_cols ⊇ cols:
//   M = A(big_rows, J)^+ A(big_rows, big_cols) A(I, big_cols)^+.
// Only rows big_rows and columns big_cols of A are read for M.
//
inline CurFactors build_heuristic_cur(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                                      const IndexSet& big_rows, const IndexSet& big_cols,
                                      double rel_tol = default_rank_tolerance)
{
    detail::require_nonempty_sets(rows, cols);
    require(rows.is_subset_of(big_rows) && cols.is_subset_of(big_cols), ErrorKind::InvalidInput,
            "heuristic CUR needs I within big_rows and J within big_cols");
    CurFactors f;
    f.c = cols_of(a, cols);
    f.r = rows_of(a, rows);
    f.m_mid = pseudoinverse(submatrix(a, big_rows, cols), rel_tol) * submatrix(a, big_rows, big_cols) *
              pseudoinverse(submatrix(a, rows, big_cols), rel_tol);
    f.mode = CurMode::Heuristic;
    f.row_set = rows;
    f.col_set = cols;
    return f;
}

/// ||A - C M R|| in the requested norm.
inline double cur_error(const DenseMatrix& a, const CurFactors& f, NormKind norm = NormKind::Spectral)
{
    require(f.c.rows() == a.rows() && f.r.cols() == a.cols() && f.c.cols() == f.m_mid.rows() &&
                f.m_mid.cols() == f.r.rows(),
            ErrorKind::InvalidInput, "CUR factors do not compose with A");
    const RowMajorMatrix cm = f.c.eigen() * f.m_mid.eigen();
    return detail::norm_of(DenseMatrix(RowMajorMatrix(a.eigen() - cm * f.r.eigen())), norm);
}

/// ||A - A(:, J) A(:, J)^+ A||
inline double column_subset_error(const DenseMatrix& a, const IndexSet& cols, NormKind norm = NormKind::Spectral)
{
    require(!cols.empty(), ErrorKind::InvalidInput, "column set must be nonempty");
    const DenseMatrix q = orthonormal_range(cols_of(a, cols));
    const RowMajorMatrix qta = q.eigen().transpose() * a.eigen();
    return detail::norm_of(DenseMatrix(RowMajorMatrix(a.eigen() - q.eigen() * qta)), norm);
}

/// ||A - A A(I, :)^+ A(I, :)||
inline double row_subset_error(const DenseMatrix& a, const IndexSet& rows, NormKind norm = NormKind::Spectral)
{
    require(!rows.empty(), ErrorKind::InvalidInput, "row set must be nonempty");
    const DenseMatrix q = orthonormal_range(rows_of(a, rows).transpose());
    const RowMajorMatrix aq = a.eigen() * q.eigen();
    return detail::norm_of(DenseMatrix(RowMajorMatrix(a.eigen() - aq * q.eigen().transpose())), norm);
}

/// Error of the projection CUR for (I, J), computed with orthonormal bases of C and R^T.
inline double projection_cur_error(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols,
                                   NormKind norm = NormKind::Spectral)
{
    detail::require_nonempty_sets(rows, cols);
    const DenseMatrix qc = orthonormal_range(cols_of(a, cols));
    const DenseMatrix qr = orthonormal_range(rows_of(a, rows).transpose());
    const RowMajorMatrix core = qc.eigen().transpose() * a.eigen() * qr.eigen();
    const RowMajorMatrix approx = qc.eigen() * core * qr.eigen().transpose();
    return detail::norm_of(DenseMatrix(RowMajorMatrix(a.eigen() - approx)), norm);
}

} // namespace cursel
