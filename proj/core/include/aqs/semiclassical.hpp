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

#include "aqs/errors.hpp"
#include "aqs/state_vector.hpp"

namespace aqs {

/// Spin coherent state angles, |theta,phi> = cos(theta/2)|0> +
/// e^{i phi} sin(theta/2)|1> per site.
struct CoherentParams {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)
};

/// Parameters of the mean-field potential for the range-p Majorana chain
/// under interpolated non-stoquastic driving.
struct PotentialSpec {
    int p = 1;                // coupling range, p >= 1
    double s = 0.0;           // interpolation parameter in [0, 1]
    double lambda = 1.0;      // chain vs antiferromagnetic weight in [0, 1]
    double h_coupling = 1.0;  // uniform coupling coefficient

    void validate() const;
};

enum class TransitionOrder { none, first, second };

struct PhasePoint {
    double s = 0.0;
    double lambda = 0.0;
    double theta_min = 0.0;
    TransitionOrder order = TransitionOrder::none;
};

/// V(theta, phi) = s lambda cos^{p-1}(theta) sin^2(theta)
///               - (1 - s) sin(theta) cos(phi)
///               + s (1 - lambda) h sin^2(theta) cos^2(phi).
/// The phi = 0 slice minorizes every other phi slice exactly when
/// (1 - s) sin(theta) >= 2 s (1 - lambda) h sin^2(theta); in particular
/// always at lambda = 1. The analysis below fixes the phi = 0 slice.
double potential(const PotentialSpec &spec, const CoherentParams &params);

/// dV/dtheta on the phi = 0 slice.
double potential_dtheta(const PotentialSpec &spec, double theta);

/// d^2V/dtheta^2 at theta = pi/2, phi = 0. Its zero is the second-order
/// transition locus; for p = 2 and p >= 4 it reduces to
/// (1 - s) - 2 s (1 - lambda) h.
double potential_d2theta_equator(const PotentialSpec &spec);

enum class CoherentOpKind { X, n, majorana_pair_odd, majorana_pair_even };

/// Product-state expectation values:
///   X                  -> sin(theta) cos(phi)
///   n                  -> sin^2(theta / 2)
///   majorana_pair_odd  -> <c_{2(k+p)-1} c_{2k}>   = -i cos^{p-1} sin^2 cos^2(phi)
///   majorana_pair_even -> <c_{2(k+p)} c_{2k-1}>   = -i cos^{p-1} sin^2 sin^2(phi)
std::complex<double> coherent_expectation(CoherentOpKind kind,
                                          const CoherentParams &params, int p);

/// N-site product state |theta,phi>^{otimes N} in the occupation basis.
StateVector coherent_state(const CoherentParams &params, int sites);

/// Global minimizer of V over theta in [0, pi] on the phi = 0 slice.
/// Grid scan of `grid_size` intervals followed by derivative bisection
/// to |V'| < 1e-10 at interior minima; ties break toward smaller theta.
/// Requires grid_size >= 100.
double find_theta_min(const PotentialSpec &spec, int grid_size = 1000);

/// Classifies the transition along s at fixed (p, lambda).
///
/// A jump |d theta_min| > 10 pi / grid_size between adjacent s values is
/// a first-order candidate; the interval is then bisected until either
/// every sub-jump falls below the threshold (steep but continuous, e.g.
/// the square-root departure at a second-order onset) or the jump
/// persists down to interval width 1e-6. A persistent jump counts as
/// first-order only when moving off the old minimizer lowers V by more
/// than 1e-10, which rejects exact-degeneracy tie flips.
///
/// Second order is flagged where d^2V/dtheta^2 at the equator changes
/// sign between adjacent s values and theta_min departs continuously.
///
/// Throws GridTooCoarse when adjacent s spacing exceeds 0.01; at that
/// resolution continuous drift per step is not separable from a jump.
std::vector<PhasePoint> classify_transition(int p, double lambda,
                                            const std::vector<double> &s_grid,
                                            int grid_size = 1000,
                                            int threads = 0);

}  // namespace aqs
