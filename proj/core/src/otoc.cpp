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

#include "aqs/otoc.hpp"

#include <cmath>

#include "aqs/algebra.hpp"
#include "aqs/dense.hpp"
#include "aqs/errors.hpp"

namespace aqs {

namespace {

constexpr int kMaxDenseDim = 256;

void check_dense_dim(int dim) {
    if (dim > kMaxDenseDim) {
        throw DimensionTooLarge("dense Heisenberg evolution capped at dim 256");
    }
}

std::vector<double> sample_times(double t_max, int samples) {
    std::vector<double> times(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        times[static_cast<std::size_t>(k)] = t_max * k / (samples - 1);
    }
    return times;
}

// Phase factors diag(e^{i t E_j}).
Eigen::VectorXcd phases(const Eigen::VectorXd &energies, double t) {
    Eigen::VectorXcd d(energies.size());
    for (Eigen::Index j = 0; j < energies.size(); ++j) {
        d(j) = std::exp(std::complex<double>(0.0, t * energies(j)));
    }
    return d;
}

}  // namespace

void OtocSpec::validate() const {
    if (hamiltonian.dim() != v_op.dim() ||
        hamiltonian.dim() != psi0.amplitudes.size()) {
        throw DimensionMismatch("hamiltonian, probe, and state dimensions differ");
    }
    check_dense_dim(hamiltonian.dim());
    if (!v_op.is_hermitian(1e-12)) {
        throw InvalidSpec("probe operator must be Hermitian");
    }
    psi0.check_normalized(1e-9);
    if (samples < 2) {
        throw InvalidSpec("need at least two time samples");
    }
    if (t_max <= 0.0) {
        throw InvalidSpec("t_max must be positive");
    }
}

SparseOperator heisenberg_evolve(const SparseOperator &op, const SparseOperator &h,
                                 double t) {
    if (op.dim() != h.dim()) {
        throw DimensionMismatch("operator and Hamiltonian dimensions differ");
    }
    check_dense_dim(h.dim());
    EigenSystem es = eigensystem(h);
    Eigen::MatrixXcd u = unitary_exp(es, t);
    Eigen::MatrixXcd evolved = u * op.dense() * u.adjoint();
    return SparseOperator::from_dense(evolved);
}

OtocSeries compute_F(const OtocSpec &spec) {
    spec.validate();
    EigenSystem es = eigensystem(spec.hamiltonian);
    // Everything in the eigenbasis of H: V(t) = D(t) V D(t)^dagger with
    // D(t) the phase diagonal, so each time is four mat-vec products.
    Eigen::MatrixXcd v = es.vectors.adjoint() * spec.v_op.dense() * es.vectors;
    Eigen::VectorXcd psi = es.vectors.adjoint() * spec.psi0.amplitudes;

    OtocSeries out;
    out.times = sample_times(spec.t_max, spec.samples);
    out.f_values.resize(out.times.size());
    for (std::size_t k = 0; k < out.times.size(); ++k) {
        Eigen::VectorXcd d = phases(es.values, out.times[k]);
        auto vt_apply = [&](const Eigen::VectorXcd &x) -> Eigen::VectorXcd {
            return d.asDiagonal() * (v * (d.conjugate().asDiagonal() * x));
        };
        Eigen::VectorXcd w = v * psi;
        w = vt_apply(w);
        w = v * w;
        w = vt_apply(w);
        out.f_values[k] = psi.dot(w);
    }

    double dt = out.times[1] - out.times[0];
    std::complex<double> integral = 0.0;
    for (std::size_t k = 0; k + 1 < out.f_values.size(); ++k) {
        integral += 0.5 * dt * (out.f_values[k] + out.f_values[k + 1]);
    }
    out.f_hat = integral / spec.t_max;
    return out;
}

std::vector<double> compute_C(const OtocSpec &spec, const SparseOperator &w_op) {
    spec.validate();
    if (w_op.dim() != spec.hamiltonian.dim()) {
        throw DimensionMismatch("scrambling operator dimension differs");
    }
    EigenSystem es = eigensystem(spec.hamiltonian);
    Eigen::MatrixXcd v = es.vectors.adjoint() * spec.v_op.dense() * es.vectors;
    Eigen::MatrixXcd w = es.vectors.adjoint() * w_op.dense() * es.vectors;
    Eigen::VectorXcd psi = es.vectors.adjoint() * spec.psi0.amplitudes;

    std::vector<double> times = sample_times(spec.t_max, spec.samples);
    std::vector<double> out(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        Eigen::VectorXcd d = phases(es.values, times[k]);
        auto wt_apply = [&](const Eigen::VectorXcd &x) -> Eigen::VectorXcd {
            return d.asDiagonal() * (w * (d.conjugate().asDiagonal() * x));
        };
        Eigen::VectorXcd commutator_psi = wt_apply(v * psi) - v * wt_apply(psi);
        out[k] = commutator_psi.squaredNorm();
    }
    return out;
}

SparseOperator mean_transverse_magnetization(int sites) {
    check_full_space_size(sites);
    SparseOperator sum = SparseOperator::zero(1 << sites);
    for (int i = 0; i < sites; ++i) {
        sum = sum + build_site_operator(SiteOpKind::pauli_x, SiteIndex(i), sites);
    }
    return (1.0 / sites) * sum;
}

}  // namespace aqs
