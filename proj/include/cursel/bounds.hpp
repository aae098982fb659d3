#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "dense_matrix.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "matgen.hpp"
#include "sampling.hpp"
#include "srrqr.hpp"

namespace cursel {

struct TheoryParams {
    double alpha = 1.0;       // oversampling factor, ell >= alpha * k * mu
    double delta = 0.8;       // lower-tail parameter in (0, 1)
    double delta_prime = 1.0; // upper-tail parameter >= 0
    double mu = 1.0;          // coherence
    double eta = default_eta; // sRRQR parameter of the algorithm being bounded
};

/// e^{-delta} / (1 - delta)^{1 - delta}
inline double lower_tail_base(double delta)
{
    require(delta >= 0.0 && delta < 1.0, ErrorKind::InvalidInput, "delta must lie in [0, 1)");
    return std::exp(-delta) / std::pow(1.0 - delta, 1.0 - delta);
}

/// e^{delta'} / (1 + delta')^{1 + delta'}
inline double upper_tail_base(double delta_prime)
{
    require(delta_prime >= 0.0, ErrorKind::InvalidInput, "delta' must be non-negative");
    return std::exp(delta_prime) / std::pow(1.0 + delta_prime, 1.0 + delta_prime);
}

/// 1 - (beta ell k / n + beta ell k / m + 2 k e^{-alpha}); may be negative (vacuous).
inline double exact_recovery_floor(std::size_t n, std::size_t m, std::size_t k, std::size_t beta, double ell,
                                   double alpha)
{
    const double kb = static_cast<double>(k) * static_cast<double>(beta) * ell;
    return 1.0 - (kb / double(n) + kb / double(m) + 2.0 * double(k) * std::exp(-alpha));
}

//
// Quantities of the perturbed low-rank model that enter the column-selection
// bound. For the row bound, the same struct describes A^T.
//
struct ColumnBoundInputs {
    std::size_t n = 0;      // rows of A
    std::size_t m = 0;      // columns of A
    std::size_t k = 0;      // k1 + k2 + k3
    std::size_t k_lead = 0; // rank visible in sampled rows: k1 + k2
    std::size_t beta = 1;
    double epsilon = 0.0;
    double sigma_1 = 0.0;     // sigma_1(X Z Y^T)
    double sigma_k = 0.0;     // sigma_k(X Z Y^T)
    double y_pinv_norm = 0.0; // ||Y^+||
    double ell = 0.0;         // max(ell_0, ell_a, ell_b)
};

struct BoundReport {
    double delta_a_inv = 0.0;
    double delta_c_inv = 0.0;
    double bound_value = 0.0;
    double success_probability = 0.0; // clamped to [0, 1]
    double raw_probability = 0.0;     // before clamping; negative means vacuous
    double c1 = 0.0;
    double c2 = 0.0;
    bool vacuous = false; // denominator of delta_a_inv non-positive
    ColumnBoundInputs inputs;
    TheoryParams params;
};

inline ColumnBoundInputs column_bound_inputs(const matgen::AssumptionInstance& inst, double ell)
{
    const auto s = singular_values(inst.low_rank());
    ColumnBoundInputs in;
    in.n = inst.spec.n;
    in.m = inst.spec.m;
    in.k = inst.spec.k();
    in.k_lead = inst.spec.k1 + inst.spec.k2;
    in.beta = inst.spec.beta;
    in.epsilon = inst.spec.epsilon;
    in.sigma_1 = s.front();
    in.sigma_k = s[in.k - 1];
    in.y_pinv_norm = 1.0 / sigma_min(inst.y);
    in.ell = ell;
    return in;
}

/// Inputs for the column bound of A^T (i.e. the row-selection bound of A).
inline ColumnBoundInputs row_bound_inputs(const matgen::AssumptionInstance& inst, double ell)
{
    ColumnBoundInputs in = column_bound_inputs(inst, ell);
    std::swap(in.n, in.m);
    in.k_lead = inst.spec.k1 + inst.spec.k3;
    in.y_pinv_norm = 1.0 / sigma_min(inst.x);
    return in;
}

//
// ||A - A(:,J) A(:,J)^+ A|| <= eps (1 + sqrt(2) dA^{-1} dC^{-1} (1 + dA^2 + dC^2)^{1/2})
// with success probability p = 1 - k (beta ell/n + beta ell/m + c1^alpha + c2^alpha).
// The sRRQR growth factor sqrt(km) is replaced by sqrt(1 + eta^2 k'(m - k'))
// when that is larger (eta > 1).
//
inline BoundReport bound_theorem_column(const ColumnBoundInputs& in, const TheoryParams& tp)
{
    require(in.ell > 0.0 && in.k >= 1 && in.n >= 1 && in.m >= 1, ErrorKind::InvalidInput,
            "bound: dimensions and ell must be positive");
    require(tp.delta > 0.0 && tp.delta < 1.0, ErrorKind::InvalidInput, "bound: delta must lie in (0, 1)");

    BoundReport rep;
    rep.inputs = in;
    rep.params = tp;
    rep.c1 = lower_tail_base(tp.delta);
    rep.c2 = upper_tail_base(tp.delta);

    const double n = double(in.n), m = double(in.m), k = double(in.k);
    const double growth = std::max(std::sqrt(k * m), srrqr_factor(std::max(tp.eta, 1.0), in.k_lead, in.m));
    const double denom = in.sigma_k - 2.0 * in.epsilon * growth * std::sqrt(n / ((1.0 - tp.delta) * in.ell));

    rep.delta_c_inv = std::sqrt(m / ((1.0 - tp.delta) * in.ell));
    if (denom <= 0.0) {
        rep.vacuous = true;
        rep.delta_a_inv = std::numeric_limits<double>::infinity();
        rep.bound_value = std::numeric_limits<double>::infinity();
    } else {
        rep.delta_a_inv = std::sqrt((1.0 + tp.delta) / (1.0 - tp.delta)) * in.sigma_1 * growth * in.y_pinv_norm / denom;
        const double da = 1.0 / rep.delta_a_inv, dc = 1.0 / rep.delta_c_inv;
        rep.bound_value = in.epsilon == 0.0
                              ? 0.0
                              : in.epsilon * (1.0 + std::sqrt(2.0) * rep.delta_a_inv * rep.delta_c_inv *
                                                        std::sqrt(1.0 + da * da + dc * dc));
    }

    const double bl = double(in.beta) * in.ell;
    rep.raw_probability =
        1.0 - k * (bl / n + bl / m + std::pow(rep.c1, tp.alpha) + std::pow(rep.c2, tp.alpha));
    rep.success_probability = std::clamp(rep.raw_probability, 0.0, 1.0);
    return rep;
}

/// CUR bound = column bound(A) + column bound(A^T); failure probabilities add.
inline BoundReport bound_corollary_cur(const ColumnBoundInputs& cols, const ColumnBoundInputs& rows,
                                       const TheoryParams& tp)
{
    const BoundReport a = bound_theorem_column(cols, tp);
    const BoundReport at = bound_theorem_column(rows, tp);
    BoundReport rep = a;
    rep.bound_value = a.bound_value + at.bound_value;
    rep.vacuous = a.vacuous || at.vacuous;
    rep.raw_probability = 1.0 - ((1.0 - a.raw_probability) + (1.0 - at.raw_probability));
    rep.success_probability = std::clamp(rep.raw_probability, 0.0, 1.0);
    return rep;
}

//
// One full iteration of the alternating scheme: the row-subset error is at most
// sqrt(1 + eta^2 ell (n - ell)) times the column-subset error, so the CUR error
// is at most (1 + sqrt(1 + eta^2 ell (n - ell))) times the column bound.
//
inline double iterative_growth(double eta, std::size_t ell_rows, std::size_t n)
{
    require(ell_rows <= n, ErrorKind::InvalidInput, "iterative bound: ell exceeds n");
    return std::sqrt(1.0 + eta * eta * double(ell_rows) * double(n - ell_rows));
}

inline BoundReport bound_theorem_iterative(const ColumnBoundInputs& cols, const TheoryParams& tp,
                                           std::size_t ell_rows)
{
    BoundReport rep = bound_theorem_column(cols, tp);
    rep.bound_value *= 1.0 + iterative_growth(std::max(tp.eta, 1.0), ell_rows, cols.n);
    return rep;
}

//
// ||U1(J,:)^+|| ||A U2 U2(J,:)^T|| + ||A U2|| for an orthogonal m x m matrix
// U = [U1 U2] with k leading columns; bounds ||A - A(:,J) A(:,J)^+ A||.
//
inline double chiu_bound(const DenseMatrix& a, const DenseMatrix& u, std::size_t k, const IndexSet& cols)
{
    require(u.rows() == a.cols() && u.cols() == a.cols(), ErrorKind::InvalidInput, "chiu_bound: U must be m x m");
    require(k >= 1 && k < u.cols() && cols.size() >= k, ErrorKind::InvalidInput, "chiu_bound: bad k or |J|");
    const auto& ue = u.eigen();
    const auto kk = static_cast<Eigen::Index>(k);
    const Eigen::MatrixXd u1 = ue.leftCols(kk);
    const Eigen::MatrixXd u2 = ue.rightCols(ue.cols() - kk);
    Eigen::MatrixXd u1j(cols.size(), kk), u2j(cols.size(), u2.cols());
    for (std::size_t t = 0; t < cols.size(); ++t) {
        u1j.row(static_cast<Eigen::Index>(t)) = u1.row(static_cast<Eigen::Index>(cols[t]));
        u2j.row(static_cast<Eigen::Index>(t)) = u2.row(static_cast<Eigen::Index>(cols[t]));
    }
    const auto s1 = singular_values(DenseMatrix(u1j));
    require(s1.back() > 1e-14 * s1.front(), ErrorKind::InvalidInput, "chiu_bound: U1(J,:) is rank deficient");
    const Eigen::MatrixXd au2 = a.eigen() * u2;
    return (1.0 / s1.back()) * spectral_norm(DenseMatrix(Eigen::MatrixXd(au2 * u2j.transpose()))) +
           spectral_norm(DenseMatrix(au2));
}

//
// sqrt(1 + ||C2 C1^+||^2) ||A - B B^+ A|| where C1 = B(rows, :) is invertible
// and C2 holds the remaining rows of B; bounds ||A - A R^+ R|| with R = A(rows, :).
//
inline double dong_bound(const DenseMatrix& a, const DenseMatrix& b, const IndexSet& rows)
{
    require(b.rows() == a.rows() && rows.size() == b.cols(), ErrorKind::InvalidInput,
            "dong_bound: need B n x ell and ell rows");
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (!rows.contains(i))
            others.push_back(i);
    const DenseMatrix c1 = rows_of(b, rows);
    require(numerical_rank(c1, 1e-13) == c1.rows(), ErrorKind::InvalidInput, "dong_bound: C1 is singular");
    double growth = 0.0;
    if (!others.empty()) {
        const DenseMatrix c2 = rows_of(b, IndexSet(Axis::Rows, std::move(others)));
        growth = spectral_norm(c2 * pseudoinverse(c1));
    }
    const DenseMatrix q = orthonormal_range(b);
    const DenseMatrix resid(RowMajorMatrix(a.eigen() - q.eigen() * (q.eigen().transpose() * a.eigen())));
    return std::sqrt(1.0 + growth * growth) * spectral_norm(resid);
}

struct TroppReport {
    double mu = 0.0;
    std::size_t ell = 0;
    std::size_t trials = 0;
    double pinv_threshold = 0.0; // sqrt(n / ((1 - delta) ell))
    double norm_threshold = 0.0; // sqrt((1 + delta') ell / n)
    double pinv_frequency = 0.0; // fraction with ||X(I,:)^+|| >= pinv_threshold
    double norm_frequency = 0.0; // fraction with ||X(I,:)|| >= norm_threshold
    double pinv_ceiling = 0.0;   // k c1(delta)^alpha
    double norm_ceiling = 0.0;   // k c2(delta')^alpha

    bool within_ceilings() const { return pinv_frequency <= pinv_ceiling && norm_frequency <= norm_ceiling; }
};

//
// Monte Carlo frequencies of the two tail events for uniformly sampled row
// subsets of an orthonormal x, against their theoretical ceilings.
//
inline TroppReport empirical_tropp_check(const DenseMatrix& x, const TheoryParams& tp, std::size_t ell,
                                         std::size_t trials, std::uint64_t seed)
{
    const double mu = coherence(x);
    const double n = double(x.rows()), k = double(x.cols());
    require(double(ell) >= tp.alpha * k * mu * (1.0 - 1e-12), ErrorKind::InvalidInput,
            "tropp check: ell = " + std::to_string(ell) + " below alpha k mu = " + std::to_string(tp.alpha * k * mu));
    require(ell <= x.rows() && trials >= 1, ErrorKind::InvalidInput, "tropp check: ell exceeds n or no trials");

    TroppReport rep;
    rep.mu = mu;
    rep.ell = ell;
    rep.trials = trials;
    rep.pinv_threshold = std::sqrt(n / ((1.0 - tp.delta) * double(ell)));
    rep.norm_threshold = std::sqrt((1.0 + tp.delta_prime) * double(ell) / n);
    rep.pinv_ceiling = k * std::pow(lower_tail_base(tp.delta), tp.alpha);
    rep.norm_ceiling = k * std::pow(upper_tail_base(tp.delta_prime), tp.alpha);

    Rng rng = make_rng(seed);
    std::size_t pinv_hits = 0, norm_hits = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const IndexSet rows = uniform_indices(Axis::Rows, x.rows(), ell, rng);
        const auto s = singular_values(rows_of(x, rows));
        const double smin = s.size() < x.cols() ? 0.0 : s.back();
        const double pinv_norm = smin > 0.0 ? 1.0 / smin : std::numeric_limits<double>::infinity();
        pinv_hits += pinv_norm >= rep.pinv_threshold;
        norm_hits += s.front() >= rep.norm_threshold;
    }
    rep.pinv_frequency = double(pinv_hits) / double(trials);
    rep.norm_frequency = double(norm_hits) / double(trials);
    return rep;
}

} // namespace cursel
