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

#include "aqs/anneal.hpp"

#include <algorithm>
#include <cmath>

#include "aqs/algebra.hpp"
#include "aqs/dense.hpp"

namespace aqs {

bool AnnealProblem::validate(double commute_tol) const {
    if (h0.dim() != h1.dim()) {
        throw DimensionMismatch("driver and target dimensions differ");
    }
    if (initial_state && initial_state->dim() != h0.dim()) {
        throw DimensionMismatch("initial state dimension differs from Hamiltonian");
    }
    return !commutator(h0, h1).approx_equal(SparseOperator::zero(h0.dim()), commute_tol);
}

std::vector<double> default_snapshot_times(double t_end, int count) {
    std::vector<double> times(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        times[static_cast<std::size_t>(i)] = t_end * i / (count - 1);
    }
    return times;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace

EvolutionTrace evolve(const AnnealProblem &problem, double t_end,
                      const std::vector<double> &snapshot_times, double rel_tol) {
    problem.validate();
    if (t_end <= 0.0) {
        throw InvalidSpec("t_end must be positive");
    }

    const Eigen::MatrixXcd h0 = problem.h0.dense();
    const Eigen::MatrixXcd h1 = problem.h1.dense();
    const Schedule &sched = problem.schedule;
    const double t_cap = sched.finite() ? sched.horizon : t_end;

    auto gamma_at = [&](double t) {
        return evaluate_schedule(sched, std::min(t, t_cap));
    };
    auto rhs = [&](double t, const Eigen::VectorXcd &y) -> Eigen::VectorXcd {
        double g = gamma_at(t);
        return cxd(0.0, -1.0) * ((1.0 - g) * (h0 * y) + g * (h1 * y));
    };

    Eigen::VectorXcd y;
    if (problem.initial_state) {
        problem.initial_state->check_normalized(1e-8);
        y = problem.initial_state->amplitudes;
    } else {
        y = ground_state(problem.h1);
    }

    std::vector<double> targets = snapshot_times;
    std::sort(targets.begin(), targets.end());
    if (!targets.empty() && (targets.front() < 0.0 || targets.back() > t_end)) {
        throw OutOfDomain("snapshot times outside [0, t_end]");
    }

    EvolutionTrace trace;
    trace.times.reserve(targets.size());
    trace.snapshots.reserve(targets.size());

    const double abs_tol = rel_tol;
    // Norm drift accumulates roughly linearly in time, so the local error
    // target must sit well below the user tolerance to keep the drift under
    // 1e-8 over long horizons. Scaled with t_end for horizons past 1e3.
    const double local_safety = 500.0 * std::max(1.0, t_end / 1000.0);
    double t = 0.0;
    double h = std::min(1e-3, t_end);
    std::size_t next_target = 0;

    auto record_if_due = [&](double at) {
        while (next_target < targets.size() &&
               std::abs(targets[next_target] - at) <= 1e-12 * std::max(1.0, t_end)) {
            trace.times.push_back(targets[next_target]);
            trace.snapshots.push_back(y);
            trace.gammas.push_back(gamma_at(targets[next_target]));
            ++next_target;
        }
    };
    record_if_due(0.0);

    Eigen::VectorXcd k[7];
    k[0] = rhs(t, y);  // FSAL

    while (t < t_end - 1e-12 * std::max(1.0, t_end)) {
        double limit = next_target < targets.size() ? targets[next_target] : t_end;
        bool hit_boundary = t + h >= limit - 1e-14 * std::max(1.0, t_end);
        double step = hit_boundary ? limit - t : h;

        for (int i = 1; i < 7; ++i) {
            Eigen::VectorXcd yi = y;
            for (int j = 0; j < i; ++j) {
                if (kA[i][j] != 0.0) {
                    yi += step * kA[i][j] * k[j];
                }
            }
            k[i] = rhs(t + kC[i] * step, yi);
        }

        Eigen::VectorXcd y5 = y;
        Eigen::VectorXcd y4 = y;
        for (int i = 0; i < 7; ++i) {
            if (kB5[i] != 0.0) {
                y5 += step * kB5[i] * k[i];
            }
            if (kB4[i] != 0.0) {
                y4 += step * kB4[i] * k[i];
            }
        }

        double scale =
            (abs_tol + rel_tol * std::max(y.norm(), y5.norm())) / local_safety;
        double err = (y5 - y4).norm() / scale;

        if (err <= 1.0) {
            t += step;
            y = std::move(y5);
            k[0] = k[6];  // FSAL: last stage is the next first stage
            trace.norm_drift = std::max(trace.norm_drift, std::abs(y.norm() - 1.0));
            record_if_due(t);
        }

        double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h = step * std::clamp(factor, 0.2, 5.0);
        if (h < 1e-14 * std::max(1.0, t_end)) {
            throw StepFailure("adaptive step size underflow");
        }
    }
    record_if_due(t);
    return trace;
}

OccupationProbabilities occupation_probabilities(const EvolutionTrace &trace,
                                                 const SparseOperator &target, int k) {
    if (k < 1 || k > target.dim()) {
        throw DimensionMismatch("requested level count outside [1, dim]");
    }
    EigenSystem es = eigensystem(target);

    // Group the k lowest eigenstates into degenerate levels.
    constexpr double kDegeneracyTol = 1e-9;
    std::vector<std::pair<double, std::vector<int>>> levels;
    for (int j = 0; j < k; ++j) {
        if (!levels.empty() && es.values(j) - levels.back().first <= kDegeneracyTol) {
            levels.back().second.push_back(j);
        } else {
            levels.push_back({es.values(j), {j}});
        }
    }

    OccupationProbabilities out;
    out.level_energies.reserve(levels.size());
    for (const auto &lv : levels) {
        out.level_energies.push_back(lv.first);
    }
    out.probabilities.resize(static_cast<Eigen::Index>(trace.snapshots.size()),
                             static_cast<Eigen::Index>(levels.size()));
    for (std::size_t s = 0; s < trace.snapshots.size(); ++s) {
        const Eigen::VectorXcd &psi = trace.snapshots[s];
        if (psi.size() != target.dim()) {
            throw DimensionMismatch("snapshot dimension differs from target");
        }
        for (std::size_t lv = 0; lv < levels.size(); ++lv) {
            double p = 0.0;
            for (int j : levels[lv].second) {
                p += std::norm(es.vectors.col(j).dot(psi));
            }
            out.probabilities(static_cast<Eigen::Index>(s),
                              static_cast<Eigen::Index>(lv)) = p;
        }
    }
    return out;
}

MinimalGap minimal_gap(const AnnealProblem &problem,
                       const std::vector<double> &s_grid) {
    if (s_grid.empty()) {
        throw InvalidSpec("empty interpolation grid");
    }
    if (problem.h0.dim() != problem.h1.dim()) {
        throw DimensionMismatch("driver and target dimensions differ");
    }
    const Eigen::MatrixXcd h0 = problem.h0.dense();
    const Eigen::MatrixXcd h1 = problem.h1.dense();

    MinimalGap out;
    out.delta = std::numeric_limits<double>::infinity();
    for (double s : s_grid) {
        Eigen::MatrixXcd h = s * h0 + (1.0 - s) * h1;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw DiagonalizationFailure("eigensolver failed along the path");
        }
        double gap = solver.eigenvalues()(1) - solver.eigenvalues()(0);
        if (gap < out.delta) {
            out.delta = gap;
            out.s_at_min = s;
        }
    }
    return out;
}

}  // namespace aqs
