#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dense_matrix.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "sampling.hpp"

namespace cursel::matgen {

inline Eigen::MatrixXd gaussian(std::size_t rows, std::size_t cols, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    // fill row by row so the draw order matches the row-major layout
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            g(i, j) = normal(rng);
    return g;
}

/// Orthonormal basis of the span of a full-column-rank matrix (thin Householder Q).
inline Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& a)
{
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    return qr.householderQ() * Eigen::MatrixXd::Identity(a.rows(), a.cols());
}

inline DenseMatrix gen_gaussian(std::size_t n, std::size_t m, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return DenseMatrix(gaussian(n, m, rng));
}

/// n x k with orthonormal columns, from an orthonormalized Gaussian.
inline DenseMatrix gen_orthonormal(std::size_t n, std::size_t k, std::uint64_t seed)
{
    require(k >= 1 && k <= n, ErrorKind::InvalidInput, "gen_orthonormal: need 1 <= k <= n");
    Rng rng = make_rng(seed);
    return DenseMatrix(orthonormalize(gaussian(n, k, rng)));
}

/// a(0,0) = 1, a(i,j) = 1 for i, j >= 1, zero elsewhere. Rank 2.
inline DenseMatrix gen_block_example(std::size_t n)
{
    require(n >= 3, ErrorKind::InvalidInput, "gen_block_example: n must be at least 3");
    RowMajorMatrix a = RowMajorMatrix::Ones(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    a.row(0).setZero();
    a.col(0).setZero();
    a(0, 0) = 1.0;
    return DenseMatrix(std::move(a));
}

/// First row and first column all ones, zero elsewhere. Rank 2.
inline DenseMatrix gen_cross(std::size_t n)
{
    require(n >= 2, ErrorKind::InvalidInput, "gen_cross: n must be at least 2");
    RowMajorMatrix a = RowMajorMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    a.row(0).setOnes();
    a.col(0).setOnes();
    return DenseMatrix(std::move(a));
}

/// Random matrix rescaled to spectral norm `norm` (zero matrix when norm == 0).
inline Eigen::MatrixXd noise_with_norm(std::size_t n, std::size_t m, double norm, Rng& rng)
{
    require(norm >= 0.0, ErrorKind::InvalidInput, "noise norm must be non-negative");
    if (norm == 0.0)
        return Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    Eigen::MatrixXd g = gaussian(n, m, rng);
    const double s = Eigen::BDCSVD<Eigen::MatrixXd>(g).singularValues()(0);
    return g * (norm / s);
}

inline double bivariate_function(double x, double y)
{
    return 5.0 * std::sin(3.0 * x) / (5.0 * y - 4.0) + 2.0 * std::exp(x / 2.0) * std::cos(10.0 * y) +
           20.0 * y / (4.0 * x - 1.0);
}

//
// f(x_i, y_j) on the equispaced grid x_i = i/(g-1), y_j = j/(g-1) over [0,1]^2,
// plus a seeded random matrix of spectral norm noise_norm. Rows follow x.
//
inline DenseMatrix gen_bivariate(std::size_t grid_n, double noise_norm, std::uint64_t seed)
{
    require(grid_n >= 2, ErrorKind::InvalidInput, "gen_bivariate: grid_n must be at least 2");
    const double h = 1.0 / static_cast<double>(grid_n - 1);
    const auto g = static_cast<Eigen::Index>(grid_n);
    RowMajorMatrix a(g, g);
    for (Eigen::Index i = 0; i < g; ++i) {
        const double x = static_cast<double>(i) * h;
        require(std::abs(4.0 * x - 1.0) > 1e-12, ErrorKind::InvalidInput, "gen_bivariate: grid hits pole x = 1/4");
        for (Eigen::Index j = 0; j < g; ++j) {
            const double y = static_cast<double>(j) * h;
            require(std::abs(5.0 * y - 4.0) > 1e-12, ErrorKind::InvalidInput,
                    "gen_bivariate: grid hits pole y = 4/5");
            a(i, j) = bivariate_function(x, y);
        }
    }
    Rng rng = make_rng(seed);
    a += noise_with_norm(grid_n, grid_n, noise_norm, rng);
    return DenseMatrix(std::move(a));
}

/// a_ij = 1 / (i + j^2 + 1) with 1-based i, j.
inline DenseMatrix gen_inverse_quadratic(std::size_t n, std::size_t m)
{
    require(n >= 1 && m >= 1, ErrorKind::InvalidInput, "gen_inverse_quadratic: empty shape");
    RowMajorMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const double ii = static_cast<double>(i + 1);
            const double jj = static_cast<double>(j + 1);
            a(i, j) = 1.0 / (ii + jj * jj + 1.0);
        }
    return DenseMatrix(std::move(a));
}

//
// A = X Z Y^T + E with X = [X1 X2 X3], Y = [Y1 Y2 Y3], Z = blkdiag(Z1, Z2, Z3):
// [X1 X2] and [Y1 Y3] incoherent with orthonormal columns, X3 and Y2 with at
// most beta nonzeros per column, ||E|| = epsilon.
//
struct AssumptionSpec {
    std::size_t n = 300;
    std::size_t m = 300;
    std::size_t k1 = 2;
    std::size_t k2 = 2;
    std::size_t k3 = 2;
    std::size_t beta = 3;
    double epsilon = 0.0;
    std::vector<double> spectrum; // singular values of Z, length k; empty = log-spaced in [1, kappa]
    double kappa = 10.0;
    std::uint64_t seed = 0;
    bool orthonormal_sparse = true;

    std::size_t k() const noexcept { return k1 + k2 + k3; }
};

struct AssumptionInstance {
    DenseMatrix a;
    DenseMatrix x;
    DenseMatrix y;
    DenseMatrix z;
    DenseMatrix e;
    double mu_x = 0.0; // coherence of [X1 X2]
    double mu_y = 0.0; // coherence of [Y1 Y3]
    AssumptionSpec spec;

    double mu() const noexcept { return std::max(mu_x, mu_y); }
    DenseMatrix low_rank() const { return x * z * y.transpose(); }
    DenseMatrix incoherent_x() const;
    DenseMatrix incoherent_y() const;
    DenseMatrix sparse_x() const;
    DenseMatrix sparse_y() const;
};

namespace detail {

inline DenseMatrix pick_columns(const DenseMatrix& a, std::vector<std::size_t> cols)
{
    return cols_of(a, IndexSet(Axis::Columns, std::move(cols)));
}

inline std::vector<std::size_t> range(std::size_t from, std::size_t count)
{
    std::vector<std::size_t> r(count);
    for (std::size_t i = 0; i < count; ++i)
        r[i] = from + i;
    return r;
}

inline std::vector<std::size_t> join(std::vector<std::size_t> a, const std::vector<std::size_t>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// `cols` columns of height n with disjoint random supports of size beta.
inline Eigen::MatrixXd sparse_block(std::size_t n, std::size_t cols, std::size_t beta, bool normalize, Rng& rng)
{
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols));
    if (cols == 0)
        return out;
    const IndexSet support = uniform_indices(Axis::Rows, n, cols * beta, rng);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t t = 0; t < beta; ++t) {
            double v = normal(rng);
            if (v == 0.0)
                v = 1.0;
            out(static_cast<Eigen::Index>(support[j * beta + t]), static_cast<Eigen::Index>(j)) = v;
        }
        if (normalize)
            out.col(static_cast<Eigen::Index>(j)).normalize();
    }
    return out;
}

inline Eigen::MatrixXd block_with_spectrum(const std::vector<double>& values, Rng& rng)
{
    const auto k = static_cast<Eigen::Index>(values.size());
    if (k == 0)
        return Eigen::MatrixXd(0, 0);
    const Eigen::MatrixXd u = orthonormalize(gaussian(values.size(), values.size(), rng));
    const Eigen::MatrixXd v = orthonormalize(gaussian(values.size(), values.size(), rng));
    const Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(values.data(), k);
    return u * s.asDiagonal() * v.transpose();
}

} // namespace detail

inline DenseMatrix AssumptionInstance::incoherent_x() const
{
    return detail::pick_columns(x, detail::range(0, spec.k1 + spec.k2));
}

inline DenseMatrix AssumptionInstance::incoherent_y() const
{
    return detail::pick_columns(
        y, detail::join(detail::range(0, spec.k1), detail::range(spec.k1 + spec.k2, spec.k3)));
}

inline DenseMatrix AssumptionInstance::sparse_x() const
{
    return detail::pick_columns(x, detail::range(spec.k1 + spec.k2, spec.k3));
}

inline DenseMatrix AssumptionInstance::sparse_y() const
{
    return detail::pick_columns(y, detail::range(spec.k1, spec.k2));
}

/// Log-spaced values kappa = s_1 >= ... >= s_k = 1.
inline std::vector<double> log_spectrum(std::size_t k, double kappa)
{
    std::vector<double> s(k, 1.0);
    if (k > 1)
        for (std::size_t i = 0; i < k; ++i)
            s[i] = std::pow(kappa, static_cast<double>(k - 1 - i) / static_cast<double>(k - 1));
    return s;
}

inline AssumptionInstance gen_assumption_matrix(const AssumptionSpec& spec)
{
    const std::size_t k = spec.k();
    require(k >= 1 && k <= std::min(spec.n, spec.m), ErrorKind::InvalidInput,
            "assumption: need 1 <= k1 + k2 + k3 <= min(n, m)");
    require(spec.beta >= 1, ErrorKind::InvalidInput, "assumption: beta must be at least 1");
    require(spec.epsilon >= 0.0, ErrorKind::InvalidInput, "assumption: epsilon must be non-negative");
    require(spec.beta * spec.k3 <= spec.n, ErrorKind::InvalidInput, "assumption: beta * k3 exceeds n");
    require(spec.beta * spec.k2 <= spec.m, ErrorKind::InvalidInput, "assumption: beta * k2 exceeds m");
    std::vector<double> spectrum = spec.spectrum.empty() ? log_spectrum(k, spec.kappa) : spec.spectrum;
    require(spectrum.size() == k, ErrorKind::InvalidInput, "assumption: spectrum must have k entries");
    for (double s : spectrum)
        require(s > 0.0 && std::isfinite(s), ErrorKind::InvalidInput, "assumption: spectrum must be positive");

    Rng rng = make_rng(spec.seed);
    const auto n = static_cast<Eigen::Index>(spec.n);
    const auto m = static_cast<Eigen::Index>(spec.m);
    const auto k1 = static_cast<Eigen::Index>(spec.k1);
    const auto k2 = static_cast<Eigen::Index>(spec.k2);
    const auto k3 = static_cast<Eigen::Index>(spec.k3);
    const auto kk = static_cast<Eigen::Index>(k);

    const Eigen::MatrixXd x12 = orthonormalize(gaussian(spec.n, spec.k1 + spec.k2, rng));
    const Eigen::MatrixXd x3 = detail::sparse_block(spec.n, spec.k3, spec.beta, spec.orthonormal_sparse, rng);
    const Eigen::MatrixXd y13 = orthonormalize(gaussian(spec.m, spec.k1 + spec.k3, rng));
    const Eigen::MatrixXd y2 = detail::sparse_block(spec.m, spec.k2, spec.beta, spec.orthonormal_sparse, rng);

    Eigen::MatrixXd x(n, kk), y(m, kk);
    x << x12, x3;
    y << y13.leftCols(k1), y2, y13.rightCols(k3);

    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(kk, kk);
    const std::vector<double> s1(spectrum.begin(), spectrum.begin() + k1);
    const std::vector<double> s2(spectrum.begin() + k1, spectrum.begin() + k1 + k2);
    const std::vector<double> s3(spectrum.begin() + k1 + k2, spectrum.end());
    z.block(0, 0, k1, k1) = detail::block_with_spectrum(s1, rng);
    z.block(k1, k1, k2, k2) = detail::block_with_spectrum(s2, rng);
    z.block(k1 + k2, k1 + k2, k3, k3) = detail::block_with_spectrum(s3, rng);

    const Eigen::MatrixXd e = noise_with_norm(spec.n, spec.m, spec.epsilon, rng);

    AssumptionInstance out;
    out.spec = spec;
    out.spec.spectrum = spectrum;
    out.x = DenseMatrix(x);
    out.y = DenseMatrix(y);
    out.z = DenseMatrix(z);
    out.e = DenseMatrix(e);
    out.a = DenseMatrix(Eigen::MatrixXd(x * z * y.transpose() + e));
    out.mu_x = coherence(DenseMatrix(x12));
    out.mu_y = coherence(DenseMatrix(y13));
    return out;
}

struct AssumptionClause {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AssumptionReport {
    std::vector<AssumptionClause> clauses;

    bool all_passed() const
    {
        return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.passed; });
    }

    const AssumptionClause* find(std::string_view name) const
    {
        for (const auto& c : clauses)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

//
// Checks every clause of the structural assumption on (a, x, y, z, e). Never
// throws on a violated clause; the report carries it.
//
inline AssumptionReport verify_assumption(const DenseMatrix& a, const DenseMatrix& x, const DenseMatrix& y,
                                          const DenseMatrix& z, const DenseMatrix& e, const AssumptionSpec& spec)
{
    AssumptionReport rep;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        rep.clauses.push_back({std::move(name), ok, std::move(detail)});
    };
    const std::size_t k = spec.k();
    const bool shapes = a.rows() == spec.n && a.cols() == spec.m && x.rows() == spec.n && x.cols() == k &&
                        y.rows() == spec.m && y.cols() == k && z.rows() == k && z.cols() == k &&
                        e.rows() == spec.n && e.cols() == spec.m;
    add("dimensions", shapes);
    if (!shapes)
        return rep;

    const auto r = [](std::size_t from, std::size_t count) { return detail::range(from, count); };
    const DenseMatrix x12 = detail::pick_columns(x, r(0, spec.k1 + spec.k2));
    const DenseMatrix x3 = detail::pick_columns(x, r(spec.k1 + spec.k2, spec.k3));
    const DenseMatrix y13 = detail::pick_columns(y, detail::join(r(0, spec.k1), r(spec.k1 + spec.k2, spec.k3)));
    const DenseMatrix y2 = detail::pick_columns(y, r(spec.k1, spec.k2));

    const bool x12_ok = has_orthonormal_columns(x12, 1e-10);
    const bool y13_ok = has_orthonormal_columns(y13, 1e-10);
    add("x12_orthonormal", x12_ok);
    add("y13_orthonormal", y13_ok);
    if (x12_ok && y13_ok) {
        const double mx = coherence(x12), my = coherence(y13);
        add("coherence_range", mx >= 1.0 - 1e-12 && mx <= double(spec.n) + 1e-12 && my >= 1.0 - 1e-12 &&
                                   my <= double(spec.m) + 1e-12,
            "mu_x = " + std::to_string(mx) + ", mu_y = " + std::to_string(my));
    }

    auto sparsity = [&](const DenseMatrix& blk) {
        std::size_t worst = 0;
        for (Eigen::Index j = 0; j < blk.eigen().cols(); ++j)
            worst = std::max<std::size_t>(worst, static_cast<std::size_t>((blk.eigen().col(j).array() != 0.0).count()));
        return worst;
    };
    const std::size_t nx3 = sparsity(x3), ny2 = sparsity(y2);
    add("x3_sparsity", nx3 <= spec.beta, "max nonzeros " + std::to_string(nx3));
    add("y2_sparsity", ny2 <= spec.beta, "max nonzeros " + std::to_string(ny2));
    if (spec.orthonormal_sparse) {
        add("x3_orthonormal", x3.empty() || has_orthonormal_columns(x3, 1e-10));
        add("y2_orthonormal", y2.empty() || has_orthonormal_columns(y2, 1e-10));
    }

    bool block_diag = true;
    const std::size_t bounds[] = {0, spec.k1, spec.k1 + spec.k2, k};
    auto block_of = [&](std::size_t i) { return i < bounds[1] ? 0 : (i < bounds[2] ? 1 : 2); };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (block_of(i) != block_of(j) && z(i, j) != 0.0)
                block_diag = false;
    add("z_block_diagonal", block_diag);

    const double enorm = e.empty() ? 0.0 : spectral_norm(e);
    add("e_norm", std::abs(enorm - spec.epsilon) <= 1e-10 * spec.epsilon,
        "||E|| = " + std::to_string(enorm) + ", epsilon = " + std::to_string(spec.epsilon));

    const DenseMatrix low = x * z * y.transpose();
    add("low_rank_exact", numerical_rank(low, 1e-10) == k);
    const double scale = std::max(max_norm(a), 1.0);
    add("a_consistency", max_norm(a - low - e) <= 1e-12 * scale);
    return rep;
}

inline AssumptionReport verify_assumption(const AssumptionInstance& inst)
{
    return verify_assumption(inst.a, inst.x, inst.y, inst.z, inst.e, inst.spec);
}

} // namespace cursel::matgen
