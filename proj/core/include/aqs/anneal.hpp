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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "aqs/schedule.hpp"
#include "aqs/sparse_operator.hpp"
#include "aqs/state_vector.hpp"

namespace aqs {

/// Interpolation H(t) = (1 - Gamma(t)) H0 + Gamma(t) H1. The s-convention
/// H(s) = s H0 + (1 - s) H1 is the same family with s = 1 - Gamma.
struct AnnealProblem {
    SparseOperator h0;  // target
    SparseOperator h1;  // driver
    Schedule schedule;
    /// Defaults to the ground state of h1 when absent.
    std::optional<StateVector> initial_state;

    /// Throws on dimension mismatch; returns false (a warning condition)
    /// when [H0, H1] = 0 and the interpolation is trivial.
    bool validate(double commute_tol = 1e-12) const;
};

struct EvolutionTrace {
    std::vector<double> times;
    std::vector<Eigen::VectorXcd> snapshots;
    std::vector<double> gammas;
    /// max |norm(psi) - 1| seen across the run; integration health metric.
    double norm_drift = 0.0;
};

/// Integrates i dpsi/dt = H(t) psi with an adaptive embedded
/// Dormand-Prince 5(4) pair, stepping exactly onto each snapshot time.
/// No renormalization is applied; norm drift is reported in the trace.
EvolutionTrace evolve(const AnnealProblem &problem, double t_end,
                      const std::vector<double> &snapshot_times,
                      double rel_tol = 1e-9);

/// Occupation probabilities of snapshots against the k lowest eigenstates
/// of `target`, aggregated per degenerate level (eigenvalues grouped
/// within 1e-9). Row = time, column = level.
struct OccupationProbabilities {
    std::vector<double> level_energies;  // one per aggregated level
    Eigen::MatrixXd probabilities;       // times x levels
};

OccupationProbabilities occupation_probabilities(const EvolutionTrace &trace,
                                                 const SparseOperator &target, int k);

/// Grid minimum of E1(s) - E0(s) for H(s) = (1-s) H1 + s H0; an upper
/// bound on the true infimum.
struct MinimalGap {
    double delta = 0.0;
    double s_at_min = 0.0;
};

MinimalGap minimal_gap(const AnnealProblem &problem, const std::vector<double> &s_grid);

/// 200 uniform snapshot times on [0, t_end], endpoints included.
std::vector<double> default_snapshot_times(double t_end, int count = 200);

}  // namespace aqs
