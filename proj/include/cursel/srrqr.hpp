#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dense_matrix.hpp"
#include "error.hpp"
#include "sampling.hpp"

namespace cursel {

inline constexpr double default_eta = 1.1;

/// Residual column norms at or below this fraction of ||A||_F count as zero.
inline constexpr double zero_residual_tolerance = 1e-13;

//
// Rank-k strong rank-revealing QR:  A P = Q [A_k B_k; 0 C_k]  with
//   sigma_i(A_k) >= sigma_i(A) / sqrt(1 + eta^2 k (m-k)),
//   sigma_j(C_k) <= sigma_{k+j}(A) * sqrt(1 + eta^2 k (m-k)),
//   |A_k^{-1} B_k|_max <= eta,
// where m is the number of columns of A.
//
struct SrrqrResult {
    IndexSet selected_cols;              // first k entries of permutation
    std::vector<std::size_t> permutation; // full column order
    DenseMatrix a_k;                     // k x k, upper triangular
    DenseMatrix b_k;                     // k x (m-k)
    DenseMatrix c_k;                     // (n-k) x (m-k)
    double eta = default_eta;
    std::size_t numerical_rank = 0;      // pivots chosen before the residual vanished
    std::size_t swaps = 0;
};

/// sqrt(1 + eta^2 k (m - k)): the polynomial factor in the sRRQR guarantees.
inline double srrqr_factor(double eta, std::size_t k, std::size_t m)
{
    return std::sqrt(1.0 + eta * eta * static_cast<double>(k) * static_cast<double>(m - k));
}

namespace detail {

inline Eigen::MatrixXd permuted_r_factor(const Eigen::MatrixXd& a, const std::vector<std::size_t>& perm)
{
    Eigen::MatrixXd ap(a.rows(), a.cols());
    for (std::size_t j = 0; j < perm.size(); ++j)
        ap.col(static_cast<Eigen::Index>(j)) = a.col(static_cast<Eigen::Index>(perm[j]));
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(ap);
    Eigen::MatrixXd r = qr.matrixQR();
    for (Eigen::Index j = 0; j < r.cols(); ++j)
        for (Eigen::Index i = j + 1; i < r.rows(); ++i)
            r(i, j) = 0.0;
    return r;
}

// Householder QR with column pivoting, stopped after `k` pivots or when every
// residual column is numerically zero. Returns the number of pivots taken.
inline std::size_t pivoted_qr_prefix(Eigen::MatrixXd work, std::size_t k, std::vector<std::size_t>& perm)
{
    const Eigen::Index n = work.rows();
    const Eigen::Index m = work.cols();
    const double threshold = zero_residual_tolerance * work.norm();
    Eigen::VectorXd scratch(m);

    std::size_t taken = 0;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(k); ++i) {
        Eigen::Index best = i;
        double best_norm = -1.0;
        for (Eigen::Index j = i; j < m; ++j) {
            const double nrm = work.col(j).tail(n - i).norm();
            if (nrm > best_norm) {
                best_norm = nrm;
                best = j;
            }
        }
        if (best_norm <= threshold)
            break;
        if (best != i) {
            work.col(i).swap(work.col(best));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(best)]);
        }
        Eigen::VectorXd essential(n - i - 1);
        double tau = 0.0, beta = 0.0;
        work.col(i).tail(n - i).makeHouseholder(essential, tau, beta);
        if (m - i - 1 > 0)
            work.bottomRightCorner(n - i, m - i - 1).applyHouseholderOnTheLeft(essential, tau, scratch.data());
        work(i, i) = beta;
        work.col(i).tail(n - i - 1).setZero();
        ++taken;
    }
    return taken;
}

} // namespace detail

inline SrrqrResult srrqr(const DenseMatrix& a, std::size_t k, double eta, Rng& rng)
{
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    require(k >= 1 && k <= std::min(n, m), ErrorKind::InvalidInput,
            "srrqr: k = " + std::to_string(k) + " outside [1, " + std::to_string(std::min(n, m)) + "]");
    require(eta > 1.0, ErrorKind::InvalidInput, "srrqr: eta must exceed 1");

    const Eigen::MatrixXd am = a.eigen();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    const std::size_t rank = detail::pivoted_qr_prefix(am, k, perm);

    // Gu-Eisenstat interchanges on the leading rank-`rank` block: swap whenever
    // some interchange grows |det A_k| by more than eta.
    std::size_t swaps = 0;
    if (rank > 0 && rank < m) {
        const auto r = static_cast<Eigen::Index>(rank);
        const auto rest = static_cast<Eigen::Index>(m) - r;
        const double cap = std::max(1.0, std::ceil(50.0 * static_cast<double>(k) *
                                                   std::log(static_cast<double>(std::max(n, m)))));
        for (;;) {
            const Eigen::MatrixXd rf = detail::permuted_r_factor(am, perm);
            const Eigen::MatrixXd lead = rf.topLeftCorner(r, r);
            const Eigen::MatrixXd lead_inv =
                lead.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(r, r));
            const Eigen::MatrixXd coeff = lead_inv * rf.topRightCorner(r, rest);
            const Eigen::VectorXd row_norms = lead_inv.rowwise().norm();
            Eigen::VectorXd col_norms = Eigen::VectorXd::Zero(rest);
            if (rf.rows() > r)
                col_norms = rf.bottomRightCorner(rf.rows() - r, rest).colwise().norm().transpose();

            double best = -1.0;
            Eigen::Index bi = 0, bj = 0;
            for (Eigen::Index j = 0; j < rest; ++j)
                for (Eigen::Index i = 0; i < r; ++i) {
                    const double g = col_norms(j) * row_norms(i);
                    const double rho = coeff(i, j) * coeff(i, j) + g * g;
                    if (rho > best) {
                        best = rho;
                        bi = i;
                        bj = j;
                    }
                }
            if (!std::isfinite(best))
                fail(ErrorKind::NumericalFailure, "srrqr: non-finite interchange criterion");
            if (std::sqrt(best) <= eta)
                break;
            std::swap(perm[static_cast<std::size_t>(bi)], perm[static_cast<std::size_t>(r + bj)]);
            if (static_cast<double>(++swaps) > cap)
                fail(ErrorKind::NumericalFailure, "srrqr: swap limit exceeded");
        }
    }

    // Zero residual: the remaining pivots are uniform draws from the unselected columns.
    if (rank < k) {
        for (std::size_t i = rank; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, m - 1);
            std::swap(perm[i], perm[pick(rng)]);
        }
    }

    const Eigen::MatrixXd rf = detail::permuted_r_factor(am, perm);
    const auto kk = static_cast<Eigen::Index>(k);
    const auto rest = static_cast<Eigen::Index>(m) - kk;
    const auto below = static_cast<Eigen::Index>(n) - kk;

    SrrqrResult out;
    out.selected_cols = IndexSet(Axis::Columns, std::vector<std::size_t>(perm.begin(), perm.begin() + kk));
    out.permutation = perm;
    out.a_k = DenseMatrix(rf.topLeftCorner(kk, kk));
    out.b_k = DenseMatrix(rf.topRightCorner(kk, rest));
    out.c_k = DenseMatrix(rf.bottomRightCorner(below, rest));
    out.eta = eta;
    out.numerical_rank = rank;
    out.swaps = swaps;
    return out;
}

inline IndexSet srrqr_select(const DenseMatrix& a, std::size_t k, double eta, Rng& rng)
{
    return srrqr(a, k, eta, rng).selected_cols;
}

} // namespace cursel
