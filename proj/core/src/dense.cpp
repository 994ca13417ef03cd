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

#include "aqs/dense.hpp"

#include <cmath>

namespace aqs {

EigenSystem eigensystem(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw DiagonalizationFailure("self-adjoint eigensolver failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenSystem eigensystem(const SparseOperator &op) {
    return eigensystem(op.dense());
}

Eigen::VectorXd spectrum(const SparseOperator &op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.dense(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw DiagonalizationFailure("self-adjoint eigensolver failed");
    }
    return solver.eigenvalues();
}

Eigen::VectorXcd ground_state(const Eigen::MatrixXcd &m) {
    EigenSystem es = eigensystem(m);
    Eigen::VectorXcd g = es.vectors.col(0);
    g.normalize();
    return g;
}

Eigen::VectorXcd ground_state(const SparseOperator &op) {
    return ground_state(op.dense());
}

Eigen::MatrixXcd unitary_exp(const EigenSystem &es, double t) {
    Eigen::VectorXcd phases(es.values.size());
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        phases(i) = std::exp(cxd(0.0, t * es.values(i)));
    }
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

double trace_distance(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) {
    double overlap2 = std::norm(a.dot(b));
    return std::sqrt(std::max(0.0, 1.0 - overlap2));
}

}  // namespace aqs
