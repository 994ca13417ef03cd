// Copyright 2026 The aqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aqs/sparse_operator.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

namespace aqs {

SparseOperator::SparseOperator(std::int64_t dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
    for (const auto &e : entries_) {
        if (e.row < 0 || e.row >= dim_ || e.col < 0 || e.col >= dim_) {
            throw IndexOutOfRange("sparse entry index out of range");
        }
    }
    canonicalize();
}

SparseOperator SparseOperator::zero(std::int64_t dim) {
    return SparseOperator(dim);
}

SparseOperator SparseOperator::identity(std::int64_t dim) {
    SparseOperator op(dim);
    op.entries_.reserve(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        op.entries_.push_back({i, i, cxd(1.0, 0.0)});
    }
    return op;
}

SparseOperator SparseOperator::from_dense(const Eigen::MatrixXcd &m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("from_dense requires a square matrix");
    }
    SparseOperator op(m.rows());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (std::abs(m(r, c)) > kPruneThreshold) {
                op.entries_.push_back({r, c, m(r, c)});
            }
        }
    }
    return op;  // already sorted row-major, no duplicates
}

void SparseOperator::insert(std::int64_t row, std::int64_t col, cxd value) {
    if (row < 0 || row >= dim_ || col < 0 || col >= dim_) {
        throw IndexOutOfRange("sparse entry index out of range");
    }
    entries_.push_back({row, col, value});
}

void SparseOperator::canonicalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry &a, const Entry &b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col) {
            out.back().value += e.value;
        } else {
            out.push_back(e);
        }
    }
    std::erase_if(out, [](const Entry &e) { return std::abs(e.value) <= kPruneThreshold; });
    entries_ = std::move(out);
}

SparseOperator SparseOperator::adjoint() const {
    SparseOperator op(dim_);
    op.entries_.reserve(entries_.size());
    for (const auto &e : entries_) {
        op.entries_.push_back({e.col, e.row, std::conj(e.value)});
    }
    op.canonicalize();
    return op;
}

SparseOperator SparseOperator::transpose() const {
    SparseOperator op(dim_);
    op.entries_.reserve(entries_.size());
    for (const auto &e : entries_) {
        op.entries_.push_back({e.col, e.row, e.value});
    }
    op.canonicalize();
    return op;
}

SparseOperator SparseOperator::conjugate() const {
    SparseOperator op(dim_);
    op.entries_.reserve(entries_.size());
    for (const auto &e : entries_) {
        op.entries_.push_back({e.row, e.col, std::conj(e.value)});
    }
    return op;
}

SparseOperator SparseOperator::operator+(const SparseOperator &other) const {
    if (dim_ != other.dim_) {
        throw DimensionMismatch("operator dimensions differ");
    }
    SparseOperator op(dim_);
    op.entries_.reserve(entries_.size() + other.entries_.size());
    op.entries_ = entries_;
    op.entries_.insert(op.entries_.end(), other.entries_.begin(), other.entries_.end());
    op.canonicalize();
    return op;
}

SparseOperator SparseOperator::operator-(const SparseOperator &other) const {
    return *this + (other * cxd(-1.0, 0.0));
}

SparseOperator SparseOperator::operator*(cxd scalar) const {
    SparseOperator op(dim_);
    op.entries_.reserve(entries_.size());
    for (const auto &e : entries_) {
        op.entries_.push_back({e.row, e.col, e.value * scalar});
    }
    std::erase_if(op.entries_,
                  [](const Entry &e) { return std::abs(e.value) <= kPruneThreshold; });
    return op;
}

SparseOperator SparseOperator::operator*(const SparseOperator &other) const {
    if (dim_ != other.dim_) {
        throw DimensionMismatch("operator dimensions differ");
    }
    // Row start offsets for `other`; canonical order keeps rows contiguous.
    std::vector<std::int64_t> row_start(dim_ + 1, 0);
    {
        std::int64_t k = 0;
        for (std::int64_t r = 0; r <= dim_; ++r) {
            while (k < other.nnz() && other.entries_[k].row < r) {
                ++k;
            }
            row_start[r] = k;
        }
    }
    std::unordered_map<std::int64_t, cxd> acc;
    acc.reserve(entries_.size() + other.entries_.size());
    for (const auto &a : entries_) {
        for (std::int64_t k = row_start[a.col]; k < row_start[a.col + 1]; ++k) {
            const auto &b = other.entries_[k];
            acc[a.row * dim_ + b.col] += a.value * b.value;
        }
    }
    SparseOperator op(dim_);
    op.entries_.reserve(acc.size());
    for (const auto &[key, v] : acc) {
        op.entries_.push_back({key / dim_, key % dim_, v});
    }
    op.canonicalize();
    return op;
}

SparseOperator SparseOperator::kron(const SparseOperator &other) const {
    SparseOperator op(dim_ * other.dim_);
    op.entries_.reserve(entries_.size() * other.entries_.size());
    for (const auto &a : entries_) {
        for (const auto &b : other.entries_) {
            op.entries_.push_back({a.row * other.dim_ + b.row,
                                   a.col * other.dim_ + b.col, a.value * b.value});
        }
    }
    op.canonicalize();
    return op;
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd &v) const {
    if (v.size() != dim_) {
        throw DimensionMismatch("vector dimension differs from operator");
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_);
    for (const auto &e : entries_) {
        out(e.row) += e.value * v(e.col);
    }
    return out;
}

Eigen::MatrixXcd SparseOperator::dense() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (const auto &e : entries_) {
        m(e.row, e.col) += e.value;
    }
    return m;
}

bool SparseOperator::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) <= tol;
}

bool SparseOperator::is_diagonal() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry &e) { return e.row == e.col; });
}

double SparseOperator::max_abs() const {
    double m = 0.0;
    for (const auto &e : entries_) {
        m = std::max(m, std::abs(e.value));
    }
    return m;
}

double SparseOperator::max_abs_diff(const SparseOperator &other) const {
    if (dim_ != other.dim_) {
        throw DimensionMismatch("operator dimensions differ");
    }
    double m = 0.0;
    std::size_t i = 0, j = 0;
    auto key = [](const Entry &e) { return std::make_pair(e.row, e.col); };
    while (i < entries_.size() || j < other.entries_.size()) {
        if (j >= other.entries_.size() ||
            (i < entries_.size() && key(entries_[i]) < key(other.entries_[j]))) {
            m = std::max(m, std::abs(entries_[i].value));
            ++i;
        } else if (i >= entries_.size() || key(other.entries_[j]) < key(entries_[i])) {
            m = std::max(m, std::abs(other.entries_[j].value));
            ++j;
        } else {
            m = std::max(m, std::abs(entries_[i].value - other.entries_[j].value));
            ++i;
            ++j;
        }
    }
    return m;
}

bool SparseOperator::approx_equal(const SparseOperator &other, double tol) const {
    return dim_ == other.dim_ && max_abs_diff(other) <= tol;
}

void SparseOperator::write_text(std::ostream &os) const {
    for (const auto &e : entries_) {
        os << e.row << ' ' << e.col << ' ' << e.value.real() << ' ' << e.value.imag()
           << '\n';
    }
}

}  // namespace aqs
