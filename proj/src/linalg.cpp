#include "lcc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcc {

void LinearMap::set_column(int c, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("LinearMap::set_column: size mismatch");
    for (int r = 0; r < rows_; ++r)
        at(r, c) = v[r];
}

std::vector<Scalar> LinearMap::column(int c) const {
    std::vector<Scalar> v(rows_);
    for (int r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("LinearMap::apply: size mismatch");
    std::vector<Scalar> out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Scalar s(0);
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero())
                s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

LinearMap LinearMap::augmented(const LinearMap& right) const {
    if (right.rows_ != rows_)
        throw std::invalid_argument("LinearMap::augmented: row mismatch");
    LinearMap m(rows_, cols_ + right.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c);
        for (int c = 0; c < right.cols_; ++c)
            m.at(r, cols_ + c) = right.at(r, c);
    }
    return m;
}

LinearMap LinearMap::from_columns(int rows, const std::vector<std::vector<Scalar>>& cols) {
    LinearMap m(rows, static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(static_cast<int>(c), cols[c]);
    return m;
}

std::vector<std::vector<Scalar>> LinearMap::row_copy() const {
    std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m[r][c] = at(r, c);
    return m;
}

std::vector<int> LinearMap::rref_in_place(std::vector<std::vector<Scalar>>& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        std::swap(m[row], m[pr]);
        Scalar inv = m[row][col].reciprocal();
        for (int c = col; c < cols; ++c)
            m[row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            Scalar f = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int LinearMap::rank() const {
    auto m = row_copy();
    return static_cast<int>(rref_in_place(m).size());
}

std::vector<std::vector<Scalar>> LinearMap::kernel_basis() const {
    auto m = row_copy();
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> v(cols_);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> LinearMap::solve(const std::vector<Scalar>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_)
        throw std::invalid_argument("LinearMap::solve: size mismatch");
    std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            m[r][c] = at(r, c);
        m[r][cols_] = rhs[r];
    }
    auto pivots = rref_in_place(m);
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt; // pivot in the rhs column: inconsistent
    std::vector<Scalar> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = m[r][cols_];
    return x;
}

std::vector<Scalar> RowReducer::reduce(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("RowReducer::reduce: size mismatch");
    std::vector<Scalar> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (c.is_zero())
            continue;
        Scalar f = c;
        for (int j = pivots_[i]; j < width_; ++j)
            r[j] -= f * rows_[i][j];
    }
    return r;
}

bool RowReducer::add(const std::vector<Scalar>& v) {
    std::vector<Scalar> r = reduce(v);
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
        if (!r[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0)
        return false;
    Scalar inv = r[pivot].reciprocal();
    for (int j = pivot; j < width_; ++j)
        r[j] *= inv;
    // keep full reduction: eliminate the new pivot from existing rows
    for (auto& row : rows_) {
        Scalar f = row[pivot];
        if (f.is_zero())
            continue;
        for (int j = pivot; j < width_; ++j)
            row[j] -= f * r[j];
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

} // namespace lcc
