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

#include <Eigen/Dense>

#include "aqs/sparse_operator.hpp"
#include "aqs/state_vector.hpp"

namespace aqs {

/// Full eigensystem of a Hermitian operator, eigenvalues ascending.
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;  // column j is the eigenvector of values[j]
};

EigenSystem eigensystem(const SparseOperator &op);
EigenSystem eigensystem(const Eigen::MatrixXcd &m);

/// Sorted real spectrum of a Hermitian operator.
Eigen::VectorXd spectrum(const SparseOperator &op);

/// Normalized ground state (lowest eigenvalue) of a Hermitian operator.
/// Degenerate ground spaces return the solver's first column, which is
/// deterministic for a fixed matrix.
Eigen::VectorXcd ground_state(const Eigen::MatrixXcd &m);
Eigen::VectorXcd ground_state(const SparseOperator &op);

/// exp(i t H) for Hermitian H, via eigendecomposition.
Eigen::MatrixXcd unitary_exp(const EigenSystem &es, double t);

/// Pure-state trace distance sqrt(1 - |<a|b>|^2).
double trace_distance(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b);

}  // namespace aqs
