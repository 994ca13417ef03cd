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

#include "aqs/errors.hpp"

namespace aqs {

/// Basis labeling for amplitude vectors. `occupation` indexes bitstrings
/// |n_1...n_L> with site 0 as the most significant bit; `single_particle_site`
/// indexes lattice sites directly.
enum class BasisKind {
    occupation,
    single_particle_site,
};

struct StateVector {
    Eigen::VectorXcd amplitudes;
    BasisKind basis_kind = BasisKind::occupation;

    StateVector() = default;
    StateVector(Eigen::VectorXcd amps, BasisKind kind)
        : amplitudes(std::move(amps)), basis_kind(kind) {}

    Eigen::Index dim() const { return amplitudes.size(); }
    double norm() const { return amplitudes.norm(); }

    void normalize() {
        double n = amplitudes.norm();
        if (n == 0.0) {
            throw InvalidSpec("cannot normalize a zero state");
        }
        amplitudes /= n;
    }

    /// Throws InvalidSpec if the 2-norm differs from 1 beyond `tol`.
    void check_normalized(double tol = 1e-9) const {
        if (std::abs(norm() - 1.0) > tol) {
            throw InvalidSpec("state vector is not normalized");
        }
    }
};

}  // namespace aqs
