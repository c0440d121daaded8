#pragma once

#include "lcc/scalar.hpp"

#include <optional>
#include <vector>

namespace lcc {

/// Dense matrix over exact rationals. Row/column indices are assigned by the
/// callers (slot, basis element) bookkeeping; elimination uses deterministic
/// pivoting (first nonzero in the fixed order), so ranks, kernels and solves
/// are reproducible.
class LinearMap {
public:
    LinearMap() : rows_(0), cols_(0) {}
    LinearMap(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    void set_column(int c, const std::vector<Scalar>& v);
    std::vector<Scalar> column(int c) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /// Columns of `right` appended after this matrix's columns.
    LinearMap augmented(const LinearMap& right) const;
    static LinearMap from_columns(int rows, const std::vector<std::vector<Scalar>>& cols);

    int rank() const;
    /// Deterministic kernel basis (one vector per free column, in column order).
    std::vector<std::vector<Scalar>> kernel_basis() const;
    /// One exact solution of A x = rhs with free variables set to zero, or
    /// empty when the system is inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs) const;

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
    // reduced row echelon form in place; returns pivot column list
    static std::vector<int> rref_in_place(std::vector<std::vector<Scalar>>& m);
    std::vector<std::vector<Scalar>> row_copy() const;
};

/// Incremental row-space container kept in reduced echelon form. Used to
/// reduce cocycle vectors against coboundary images and to extract sparse,
/// canonically scaled representatives.
class RowReducer {
public:
    explicit RowReducer(int width) : width_(width) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    /// Residual of v after elimination by the current rows.
    std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;
    /// Inserts v's residual (scaled to leading coefficient 1) if nonzero;
    /// returns true when the rank grew.
    bool add(const std::vector<Scalar>& v);

private:
    int width_;
    std::vector<std::vector<Scalar>> rows_; // sorted by pivot column, each with leading 1
    std::vector<int> pivots_;
};

} // namespace lcc
