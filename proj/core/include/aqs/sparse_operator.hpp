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

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "aqs/errors.hpp"

namespace aqs {

using cxd = std::complex<double>;

/// Complex sparse matrix in canonical coordinate form: entries sorted by
/// (row, col), duplicates merged, magnitudes below the prune threshold
/// dropped. Canonical form makes operator equality a plain entry-list
/// comparison, which the tests rely on.
class SparseOperator {
  public:
    struct Entry {
        std::int64_t row;
        std::int64_t col;
        cxd value;
        bool operator==(const Entry &) const = default;
    };

    static constexpr double kPruneThreshold = 1e-15;

    SparseOperator() : dim_(0) {}
    explicit SparseOperator(std::int64_t dim) : dim_(dim) {}
    SparseOperator(std::int64_t dim, std::vector<Entry> entries);

    static SparseOperator zero(std::int64_t dim);
    static SparseOperator identity(std::int64_t dim);
    static SparseOperator from_dense(const Eigen::MatrixXcd &m);

    std::int64_t dim() const { return dim_; }
    const std::vector<Entry> &entries() const { return entries_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(entries_.size()); }

    void insert(std::int64_t row, std::int64_t col, cxd value);
    /// Re-establishes canonical form after a batch of insert() calls.
    void canonicalize();

    SparseOperator adjoint() const;
    SparseOperator transpose() const;
    SparseOperator conjugate() const;

    SparseOperator operator+(const SparseOperator &other) const;
    SparseOperator operator-(const SparseOperator &other) const;
    SparseOperator operator*(const SparseOperator &other) const;
    SparseOperator operator*(cxd scalar) const;
    SparseOperator operator-() const { return *this * cxd(-1.0, 0.0); }

    friend SparseOperator operator*(cxd scalar, const SparseOperator &op) {
        return op * scalar;
    }

    /// Kronecker product, `this` on the most significant factor.
    SparseOperator kron(const SparseOperator &other) const;

    Eigen::VectorXcd apply(const Eigen::VectorXcd &v) const;
    Eigen::MatrixXcd dense() const;

    bool is_hermitian(double tol = 1e-12) const;
    bool is_diagonal() const;
    bool is_zero() const { return entries_.empty(); }
    double max_abs() const;
    /// Largest entrywise |a_ij - b_ij|.
    double max_abs_diff(const SparseOperator &other) const;
    bool approx_equal(const SparseOperator &other, double tol) const;

    /// Line-oriented `row col re im` dump, one entry per line.
    void write_text(std::ostream &os) const;

  private:
    std::int64_t dim_;
    std::vector<Entry> entries_;
};

}  // namespace aqs
