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
#include <vector>

#include "aqs/sparse_operator.hpp"
#include "aqs/state_vector.hpp"

namespace aqs {

/// Out-of-time-ordered correlator job at one Hamiltonian parameter point.
struct OtocSpec {
    SparseOperator hamiltonian;
    SparseOperator v_op;
    StateVector psi0;
    double t_max = 50.0;
    int samples = 500;

    /// Checks Hermiticity of v_op (1e-12), normalization of psi0,
    /// matching dimensions, and the dense-evolution size cap.
    void validate() const;
};

struct OtocSeries {
    std::vector<double> times;
    std::vector<std::complex<double>> f_values;
    std::complex<double> f_hat{0.0, 0.0};  // trapezoidal time average
};

/// W(t) = e^{itH} W e^{-itH} by exact eigendecomposition of H.
/// Dense under the hood; dim above 256 throws DimensionTooLarge.
SparseOperator heisenberg_evolve(const SparseOperator &op, const SparseOperator &h,
                                 double t);

/// F(t_k) = <psi0| V(t_k) V V(t_k) V |psi0> at `samples` uniform times
/// on [0, t_max], endpoints included; f_hat is the trapezoidal average.
OtocSeries compute_F(const OtocSpec &spec);

/// C(t_k) = <psi0| [W(t_k), V]^dagger [W(t_k), V] |psi0>, a squared norm,
/// so every value is >= 0 up to roundoff.
std::vector<double> compute_C(const OtocSpec &spec, const SparseOperator &w_op);

/// Default probe operator sum_i X_i / N.
SparseOperator mean_transverse_magnetization(int sites);

}  // namespace aqs
