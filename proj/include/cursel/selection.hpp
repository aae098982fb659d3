#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "sampling.hpp"
#include "srrqr.hpp"

namespace cursel {

//
// Row/column access to a matrix. Selection only ever goes through this
// interface, so a source can count (or lazily generate) what is touched.
//
template <typename S>
concept MatrixSource = requires(const S& s, const IndexSet& idx) {
    { s.n_rows() } -> std::convertible_to<std::size_t>;
    { s.n_cols() } -> std::convertible_to<std::size_t>;
    { s.rows(idx) } -> std::convertible_to<DenseMatrix>; // A(I, :)
    { s.cols(idx) } -> std::convertible_to<DenseMatrix>; // A(:, J)
};

class DenseSource {
public:
    explicit DenseSource(const DenseMatrix& a) : a_(&a) {}

    std::size_t n_rows() const { return a_->rows(); }
    std::size_t n_cols() const { return a_->cols(); }
    DenseMatrix rows(const IndexSet& idx) const { return rows_of(*a_, idx); }
    DenseMatrix cols(const IndexSet& idx) const { return cols_of(*a_, idx); }

private:
    const DenseMatrix* a_;
};

struct Algorithm1Params {
    std::size_t ell_0 = 0;
    std::size_t ell_a = 0;
    std::size_t ell_b = 0;
    double eta = default_eta;
    std::uint64_t seed = 0;
};

struct Algorithm2Params {
    std::size_t ell_0 = 0;
    std::size_t iterations = 1;
    // per-iteration counts; a single entry applies to every iteration
    std::vector<std::size_t> ell_srrqr_col;
    std::vector<std::size_t> ell_new_col;
    std::vector<std::size_t> ell_srrqr_row;
    std::vector<std::size_t> ell_new_row;
    double eta = default_eta;
    std::uint64_t seed = 0;
    bool accumulate_union = false;

    /// Same counts in every iteration.
    static Algorithm2Params uniform(std::size_t ell_0, std::size_t iterations, std::size_t srrqr_col,
                                    std::size_t new_col, std::size_t srrqr_row, std::size_t new_row)
    {
        Algorithm2Params p;
        p.ell_0 = ell_0;
        p.iterations = iterations;
        p.ell_srrqr_col = {srrqr_col};
        p.ell_new_col = {new_col};
        p.ell_srrqr_row = {srrqr_row};
        p.ell_new_row = {new_row};
        return p;
    }
};

//
// Index sets produced by each step. Algorithm 1 fills one entry per vector
// (plus initial_cols = J_0); Algorithm 2 fills one entry per iteration h = 1..H.
//
struct SelectionTrace {
    IndexSet initial_rows; // I_0
    IndexSet initial_cols; // J_0, Algorithm 1 only
    std::vector<IndexSet> srrqr_cols;
    std::vector<IndexSet> new_cols;
    std::vector<IndexSet> srrqr_rows;
    std::vector<IndexSet> new_rows;
    std::vector<IndexSet> rows; // I_h
    std::vector<IndexSet> cols; // J_h
};

struct SelectionResult {
    IndexSet rows; // I
    IndexSet cols; // J
    SelectionTrace trace;
};

/// (I_h, J_h) after each iteration, or the running unions I_0 u ... u I_h, J_1 u ... u J_h.
inline std::vector<std::pair<IndexSet, IndexSet>> iteration_sets(const SelectionTrace& trace, bool accumulate_union)
{
    std::vector<std::pair<IndexSet, IndexSet>> out;
    IndexSet acc_rows = trace.initial_rows;
    IndexSet acc_cols(Axis::Columns, std::vector<std::size_t>{});
    for (std::size_t h = 0; h < trace.rows.size(); ++h) {
        if (accumulate_union) {
            acc_rows = acc_rows.union_with(trace.rows[h]);
            acc_cols = acc_cols.union_with(trace.cols[h]);
            out.emplace_back(acc_rows, acc_cols);
        } else {
            out.emplace_back(trace.rows[h], trace.cols[h]);
        }
    }
    return out;
}

namespace detail {

inline std::size_t count_at(const std::vector<std::size_t>& counts, std::size_t h, const char* name)
{
    require(!counts.empty(), ErrorKind::InvalidInput, std::string(name) + " is empty");
    return counts.size() == 1 ? counts.front() : counts.at(h);
}

// sRRQR picks from `block` (whose columns are the `axis` positions `labels`)
// followed by fresh uniform draws from the complement.
inline std::pair<IndexSet, IndexSet> srrqr_then_uniform(const DenseMatrix& block, const IndexSet& labels,
                                                       std::size_t extent, std::size_t n_srrqr, std::size_t n_new,
                                                       double eta, Rng& rng)
{
    std::vector<std::size_t> picked;
    if (n_srrqr > 0) {
        const IndexSet local = srrqr_select(block, n_srrqr, eta, rng);
        picked.reserve(local.size());
        for (std::size_t j : local)
            picked.push_back(labels[j]);
    }
    IndexSet from_srrqr(labels.axis(), std::move(picked));
    IndexSet fresh = uniform_indices(extent, n_new, from_srrqr, rng);
    return {std::move(from_srrqr), std::move(fresh)};
}

} // namespace detail

//
// One-shot randomized sRRQR selection. Columns: sRRQR on ell_0 uniformly
// sampled rows, plus ell_b fresh uniform columns. Rows: the same on A^T with
// an independent column sample. Reads only A(I_0, :) and A(:, J_0).
//
template <MatrixSource Source>
SelectionResult run_algorithm1(const Source& a, const Algorithm1Params& p)
{
    const std::size_t n = a.n_rows();
    const std::size_t m = a.n_cols();
    require(p.ell_a >= 1 && p.ell_0 >= p.ell_a, ErrorKind::InvalidInput, "algorithm1: need ell_0 >= ell_a >= 1");
    require(p.ell_a + p.ell_b <= std::min(n, m), ErrorKind::InvalidInput,
            "algorithm1: ell_a + ell_b exceeds min(n, m)");
    require(p.ell_0 <= std::min(n, m), ErrorKind::InvalidInput, "algorithm1: ell_0 exceeds min(n, m)");

    SelectionResult out;
    auto& tr = out.trace;

    Rng col_rng = make_rng(p.seed, 0);
    tr.initial_rows = uniform_indices(Axis::Rows, n, p.ell_0, col_rng);
    const DenseMatrix sampled_rows = a.rows(tr.initial_rows);
    auto [ja, jb] = detail::srrqr_then_uniform(sampled_rows, IndexSet::all(Axis::Columns, m), m, p.ell_a, p.ell_b,
                                               p.eta, col_rng);

    Rng row_rng = make_rng(p.seed, 1);
    tr.initial_cols = uniform_indices(Axis::Columns, m, p.ell_0, row_rng);
    const DenseMatrix sampled_cols_t = a.cols(tr.initial_cols).transpose();
    auto [ia, ib] = detail::srrqr_then_uniform(sampled_cols_t, IndexSet::all(Axis::Rows, n), n, p.ell_a, p.ell_b,
                                               p.eta, row_rng);

    out.cols = ja.concat(jb);
    out.rows = ia.concat(ib);
    tr.srrqr_cols = {std::move(ja)};
    tr.new_cols = {std::move(jb)};
    tr.srrqr_rows = {std::move(ia)};
    tr.new_rows = {std::move(ib)};
    tr.rows = {out.rows};
    tr.cols = {out.cols};
    return out;
}

//
// Iterative alternating refinement: each iteration runs sRRQR on A(I_{h-1}, :)
// to pick columns J_h, then on A(:, J_h)^T to pick rows I_h, each augmented
// with fresh uniform indices.
//
template <MatrixSource Source>
SelectionResult run_algorithm2(const Source& a, const Algorithm2Params& p)
{
    const std::size_t n = a.n_rows();
    const std::size_t m = a.n_cols();
    require(p.iterations >= 1, ErrorKind::InvalidInput, "algorithm2: need at least one iteration");
    require(p.ell_0 >= 1 && p.ell_0 <= n, ErrorKind::InvalidInput, "algorithm2: ell_0 outside [1, n]");

    SelectionResult out;
    auto& tr = out.trace;
    Rng rng = make_rng(p.seed, 0);

    tr.initial_rows = uniform_indices(Axis::Rows, n, p.ell_0, rng);
    IndexSet current_rows = tr.initial_rows;
    for (std::size_t h = 0; h < p.iterations; ++h) {
        const std::size_t sc = detail::count_at(p.ell_srrqr_col, h, "ell_srrqr_col");
        const std::size_t nc = detail::count_at(p.ell_new_col, h, "ell_new_col");
        const std::size_t sr = detail::count_at(p.ell_srrqr_row, h, "ell_srrqr_row");
        const std::size_t nr = detail::count_at(p.ell_new_row, h, "ell_new_row");
        require(sc <= current_rows.size() && sc <= m, ErrorKind::InvalidInput,
                "algorithm2: ell_srrqr_col exceeds |I_{h-1}| in iteration " + std::to_string(h + 1));
        require(sc + nc <= m && sc + nc >= 1, ErrorKind::InvalidInput, "algorithm2: invalid column count");

        auto [jc, jn] = detail::srrqr_then_uniform(a.rows(current_rows), IndexSet::all(Axis::Columns, m), m, sc,
                                                   nc, p.eta, rng);
        IndexSet cols = jc.concat(jn);

        require(sr <= cols.size() && sr <= n, ErrorKind::InvalidInput,
                "algorithm2: ell_srrqr_row exceeds |J_h| in iteration " + std::to_string(h + 1));
        require(sr + nr <= n && sr + nr >= 1, ErrorKind::InvalidInput, "algorithm2: invalid row count");
        auto [ic, in] = detail::srrqr_then_uniform(a.cols(cols).transpose(), IndexSet::all(Axis::Rows, n), n, sr,
                                                   nr, p.eta, rng);
        current_rows = ic.concat(in);

        tr.srrqr_cols.push_back(std::move(jc));
        tr.new_cols.push_back(std::move(jn));
        tr.srrqr_rows.push_back(std::move(ic));
        tr.new_rows.push_back(std::move(in));
        tr.rows.push_back(current_rows);
        tr.cols.push_back(std::move(cols));
    }

    const auto sets = iteration_sets(tr, p.accumulate_union);
    out.rows = sets.back().first;
    out.cols = sets.back().second;
    return out;
}

inline SelectionResult run_algorithm1(const DenseMatrix& a, const Algorithm1Params& p)
{
    return run_algorithm1(DenseSource(a), p);
}

inline SelectionResult run_algorithm2(const DenseMatrix& a, const Algorithm2Params& p)
{
    return run_algorithm2(DenseSource(a), p);
}

} // namespace cursel
