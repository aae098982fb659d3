#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"

namespace cursel {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

//
// Row-major real matrix. Immutable after construction; every entry is finite.
//
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t n_rows, std::size_t n_cols)
        : data_(RowMajorMatrix::Zero(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols)))
    {}

    DenseMatrix(std::size_t n_rows, std::size_t n_cols, std::span<const double> entries)
    {
        require(entries.size() == n_rows * n_cols, ErrorKind::InvalidInput,
                "entry count " + std::to_string(entries.size()) + " does not match " +
                    std::to_string(n_rows) + "x" + std::to_string(n_cols));
        data_.resize(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));
        std::copy(entries.begin(), entries.end(), data_.data());
        check_finite();
    }

    template <typename Derived>
    explicit DenseMatrix(const Eigen::MatrixBase<Derived>& m) : data_(m)
    {
        check_finite();
    }

    explicit DenseMatrix(RowMajorMatrix&& m) : data_(std::move(m)) { check_finite(); }

    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    {
        const std::size_t n = rows.size();
        const std::size_t m = n == 0 ? 0 : rows.begin()->size();
        data_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
        Eigen::Index i = 0;
        for (const auto& row : rows) {
            require(row.size() == m, ErrorKind::InvalidInput, "ragged initializer list");
            Eigen::Index j = 0;
            for (double v : row)
                data_(i, j++) = v;
            ++i;
        }
        check_finite();
    }

    static DenseMatrix identity(std::size_t n)
    {
        const auto k = static_cast<Eigen::Index>(n);
        return DenseMatrix(RowMajorMatrix(RowMajorMatrix::Identity(k, k)));
    }

    static DenseMatrix ones(std::size_t n_rows, std::size_t n_cols)
    {
        return DenseMatrix(RowMajorMatrix(RowMajorMatrix::Ones(static_cast<Eigen::Index>(n_rows),
                                                               static_cast<Eigen::Index>(n_cols))));
    }

    std::size_t rows() const noexcept { return static_cast<std::size_t>(data_.rows()); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(data_.cols()); }
    bool empty() const noexcept { return data_.size() == 0; }

    double operator()(std::size_t i, std::size_t j) const
    {
        return data_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    std::span<const double> entries() const noexcept
    {
        return {data_.data(), static_cast<std::size_t>(data_.size())};
    }

    std::span<const double> row(std::size_t i) const noexcept
    {
        return entries().subspan(i * cols(), cols());
    }

    const RowMajorMatrix& eigen() const noexcept { return data_; }

    DenseMatrix transpose() const { return DenseMatrix(RowMajorMatrix(data_.transpose())); }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
    {
        require(a.cols() == b.rows(), ErrorKind::InvalidInput, "inner dimensions do not agree");
        return DenseMatrix(RowMajorMatrix(a.data_ * b.data_));
    }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b)
    {
        require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::InvalidInput, "shape mismatch");
        return DenseMatrix(RowMajorMatrix(a.data_ + b.data_));
    }

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b)
    {
        require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::InvalidInput, "shape mismatch");
        return DenseMatrix(RowMajorMatrix(a.data_ - b.data_));
    }

    friend DenseMatrix operator*(double s, const DenseMatrix& a) { return DenseMatrix(RowMajorMatrix(s * a.data_)); }
    friend DenseMatrix operator*(const DenseMatrix& a, double s) { return s * a; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b)
    {
        return a.rows() == b.rows() && a.cols() == b.cols() && a.data_ == b.data_;
    }

private:
    void check_finite() const
    {
        require(data_.allFinite(), ErrorKind::InvalidInput, "matrix contains non-finite entries");
    }

    RowMajorMatrix data_;
};

enum class Axis { Rows, Columns };

//
// Ordered, duplicate-free list of 0-based row or column positions.
//
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(Axis axis, std::vector<std::size_t> indices) : axis_(axis), indices_(std::move(indices))
    {
        std::unordered_set<std::size_t> seen;
        seen.reserve(indices_.size());
        for (std::size_t i : indices_)
            require(seen.insert(i).second, ErrorKind::InvalidInput,
                    "duplicate index " + std::to_string(i) + " in index set");
    }

    IndexSet(Axis axis, std::initializer_list<std::size_t> indices)
        : IndexSet(axis, std::vector<std::size_t>(indices))
    {}

    static IndexSet all(Axis axis, std::size_t extent)
    {
        std::vector<std::size_t> idx(extent);
        for (std::size_t i = 0; i < extent; ++i)
            idx[i] = i;
        return IndexSet(axis, std::move(idx));
    }

    Axis axis() const noexcept { return axis_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    std::size_t operator[](std::size_t pos) const { return indices_[pos]; }
    auto begin() const noexcept { return indices_.begin(); }
    auto end() const noexcept { return indices_.end(); }
    std::span<const std::size_t> indices() const noexcept { return indices_; }
    std::vector<std::size_t> to_vector() const { return indices_; }

    bool contains(std::size_t i) const
    {
        return std::find(indices_.begin(), indices_.end(), i) != indices_.end();
    }

    /// Same positions, relabelled as the other axis (e.g. columns of A^T are rows of A).
    IndexSet as(Axis axis) const
    {
        IndexSet out;
        out.axis_ = axis;
        out.indices_ = indices_;
        return out;
    }

    /// Concatenation of two disjoint sets; overlapping entries are an error.
    IndexSet concat(const IndexSet& other) const
    {
        std::vector<std::size_t> idx = indices_;
        idx.insert(idx.end(), other.indices_.begin(), other.indices_.end());
        return IndexSet(axis_, std::move(idx));
    }

    /// Ordered union: this set followed by the entries of other not already present.
    IndexSet union_with(const IndexSet& other) const
    {
        std::vector<std::size_t> idx = indices_;
        std::unordered_set<std::size_t> seen(indices_.begin(), indices_.end());
        for (std::size_t i : other.indices_)
            if (seen.insert(i).second)
                idx.push_back(i);
        IndexSet out;
        out.axis_ = axis_;
        out.indices_ = std::move(idx);
        return out;
    }

    bool is_subset_of(const IndexSet& other) const
    {
        std::unordered_set<std::size_t> s(other.indices_.begin(), other.indices_.end());
        return std::all_of(indices_.begin(), indices_.end(), [&](std::size_t i) { return s.count(i) > 0; });
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b)
    {
        return a.axis_ == b.axis_ && a.indices_ == b.indices_;
    }

private:
    Axis axis_ = Axis::Rows;
    std::vector<std::size_t> indices_;
};

} // namespace cursel
