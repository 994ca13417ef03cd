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

#include "aqs/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aqs/parallel.hpp"

namespace aqs {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) {
        r *= x;
    }
    return r;
}

double potential_phi0(const PotentialSpec &spec, double theta) {
    double c = std::cos(theta);
    double si = std::sin(theta);
    return spec.s * spec.lambda * ipow(c, spec.p - 1) * si * si -
           (1.0 - spec.s) * si +
           spec.s * (1.0 - spec.lambda) * spec.h_coupling * si * si;
}

}  // namespace

void PotentialSpec::validate() const {
    if (p < 1) {
        throw InvalidSpec("coupling range p must be at least 1");
    }
    if (s < 0.0 || s > 1.0 || lambda < 0.0 || lambda > 1.0) {
        throw OutOfDomain("s and lambda must lie in [0, 1]");
    }
}

double potential(const PotentialSpec &spec, const CoherentParams &params) {
    spec.validate();
    double c = std::cos(params.theta);
    double si = std::sin(params.theta);
    double cp = std::cos(params.phi);
    return spec.s * spec.lambda * ipow(c, spec.p - 1) * si * si -
           (1.0 - spec.s) * si * cp +
           spec.s * (1.0 - spec.lambda) * spec.h_coupling * si * si * cp * cp;
}

double potential_dtheta(const PotentialSpec &spec, double theta) {
    spec.validate();
    double c = std::cos(theta);
    double si = std::sin(theta);
    double chain;
    if (spec.p == 1) {
        chain = 2.0 * si * c;
    } else {
        // d/dtheta [cos^{p-1} sin^2] = sin cos^{p-2} (2 cos^2 - (p-1) sin^2)
        chain = si * ipow(c, spec.p - 2) * (2.0 * c * c - (spec.p - 1) * si * si);
    }
    return spec.s * spec.lambda * chain - (1.0 - spec.s) * c +
           2.0 * spec.s * (1.0 - spec.lambda) * spec.h_coupling * si * c;
}

double potential_d2theta_equator(const PotentialSpec &spec) {
    spec.validate();
    double chain_curvature = 0.0;
    if (spec.p == 1) {
        chain_curvature = -2.0;
    } else if (spec.p == 3) {
        chain_curvature = 2.0;
    }
    return spec.s * spec.lambda * chain_curvature + (1.0 - spec.s) -
           2.0 * spec.s * (1.0 - spec.lambda) * spec.h_coupling;
}

std::complex<double> coherent_expectation(CoherentOpKind kind,
                                          const CoherentParams &params, int p) {
    if (p < 1) {
        throw InvalidSpec("coupling range p must be at least 1");
    }
    double c = std::cos(params.theta);
    double si = std::sin(params.theta);
    double cp = std::cos(params.phi);
    double sp = std::sin(params.phi);
    switch (kind) {
        case CoherentOpKind::X:
            return si * cp;
        case CoherentOpKind::n: {
            double half = std::sin(params.theta / 2.0);
            return half * half;
        }
        case CoherentOpKind::majorana_pair_odd:
            return std::complex<double>(0.0, -1.0) * ipow(c, p - 1) * si * si * cp * cp;
        case CoherentOpKind::majorana_pair_even:
            return std::complex<double>(0.0, -1.0) * ipow(c, p - 1) * si * si * sp * sp;
    }
    throw InvalidSpec("unknown expectation kind");
}

StateVector coherent_state(const CoherentParams &params, int sites) {
    if (sites < 1 || sites > 24) {
        throw DimensionTooLarge("coherent product state limited to 24 sites");
    }
    std::complex<double> a0 = std::cos(params.theta / 2.0);
    std::complex<double> a1 =
        std::exp(std::complex<double>(0.0, params.phi)) * std::sin(params.theta / 2.0);
    std::int64_t dim = std::int64_t{1} << sites;
    StateVector out;
    out.basis_kind = BasisKind::occupation;
    out.amplitudes.resize(dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        std::complex<double> amp = 1.0;
        for (int site = 0; site < sites; ++site) {
            bool occ = (idx >> (sites - 1 - site)) & 1;
            amp *= occ ? a1 : a0;
        }
        out.amplitudes(idx) = amp;
    }
    return out;
}

double find_theta_min(const PotentialSpec &spec, int grid_size) {
    spec.validate();
    if (grid_size < 100) {
        throw InvalidSpec("theta grid needs at least 100 intervals");
    }
    double best_v = potential_phi0(spec, 0.0);
    int best_i = 0;
    for (int i = 1; i <= grid_size; ++i) {
        double v = potential_phi0(spec, kPi * i / grid_size);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double lo = kPi * std::max(best_i - 1, 0) / grid_size;
    double hi = kPi * std::min(best_i + 1, grid_size) / grid_size;
    double grid_theta = kPi * best_i / grid_size;
    // Interior minimum: bisect the sign change of the derivative. Value
    // comparisons alone cannot localize past sqrt(eps) because the potential
    // is flat to machine precision near the minimum.
    if (potential_dtheta(spec, lo) < 0.0 && potential_dtheta(spec, hi) > 0.0) {
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            double mid = 0.5 * (lo + hi);
            if (potential_dtheta(spec, mid) < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        double refined = 0.5 * (lo + hi);
        if (potential_phi0(spec, refined) <= best_v) {
            return refined;
        }
        return grid_theta;
    }
    constexpr double kGolden = 0.3819660112501051;
    while (hi - lo > 1e-13) {
        double m1 = lo + kGolden * (hi - lo);
        double m2 = hi - kGolden * (hi - lo);
        if (potential_phi0(spec, m1) <= potential_phi0(spec, m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    double refined = 0.5 * (lo + hi);
    // Keep the grid point on exact ties and when refinement does not help.
    if (potential_phi0(spec, refined) < best_v) {
        return refined;
    }
    return grid_theta;
}

namespace {

// Bisects [sa, sb] while the theta_min jump stays above the threshold.
// Returns true for a persistent, energy-lowering discontinuity.
bool refine_jump(PotentialSpec spec, int grid_size, double threshold, double sa,
                 double sb, double ta, double tb) {
    while (std::abs(tb - ta) > threshold) {
        if (sb - sa < 1e-6) {
            double gain = 0.0;
            {
                PotentialSpec at_b = spec;
                at_b.s = sb;
                gain = potential_phi0(at_b, ta) - potential_phi0(at_b, tb);
            }
            return gain > 1e-10;
        }
        double sm = 0.5 * (sa + sb);
        PotentialSpec mid = spec;
        mid.s = sm;
        double tm = find_theta_min(mid, grid_size);
        bool left = std::abs(tm - ta) > threshold;
        bool right = std::abs(tb - tm) > threshold;
        if (left && std::abs(tm - ta) >= std::abs(tb - tm)) {
            sb = sm;
            tb = tm;
        } else if (right) {
            sa = sm;
            ta = tm;
        } else {
            return false;  // both halves below threshold: continuous
        }
    }
    return false;
}

}  // namespace

std::vector<PhasePoint> classify_transition(int p, double lambda,
                                            const std::vector<double> &s_grid,
                                            int grid_size, int threads) {
    if (s_grid.size() < 2) {
        throw GridTooCoarse("classification needs at least two s values");
    }
    if (!std::is_sorted(s_grid.begin(), s_grid.end())) {
        throw InvalidSpec("s grid must be sorted");
    }
    if (s_grid.front() < 0.0 || s_grid.back() > 1.0) {
        throw OutOfDomain("s grid must lie in [0, 1]");
    }
    for (std::size_t i = 1; i < s_grid.size(); ++i) {
        if (s_grid[i] - s_grid[i - 1] > 0.01 + 1e-12) {
            throw GridTooCoarse("adjacent s spacing above 0.01");
        }
    }
    PotentialSpec base;
    base.p = p;
    base.lambda = lambda;
    base.validate();

    unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                   : default_thread_count();
    std::vector<PhasePoint> points(s_grid.size());
    parallel_for(s_grid.size(), workers, [&](std::size_t i) {
        PotentialSpec spec = base;
        spec.s = s_grid[i];
        points[i].s = s_grid[i];
        points[i].lambda = lambda;
        points[i].theta_min = find_theta_min(spec, grid_size);
    });

    double threshold = 10.0 * kPi / grid_size;
    for (std::size_t i = 1; i < s_grid.size(); ++i) {
        double ta = points[i - 1].theta_min;
        double tb = points[i].theta_min;
        if (std::abs(tb - ta) > threshold &&
            refine_jump(base, grid_size, threshold, s_grid[i - 1], s_grid[i], ta,
                        tb)) {
            points[i].order = TransitionOrder::first;
            continue;
        }
        PotentialSpec at_a = base;
        at_a.s = s_grid[i - 1];
        PotentialSpec at_b = base;
        at_b.s = s_grid[i];
        bool curvature_flip =
            potential_d2theta_equator(at_a) * potential_d2theta_equator(at_b) < 0.0;
        bool departs_from_equator = std::abs(ta - kPi / 2.0) <= threshold;
        if (curvature_flip && departs_from_equator) {
            points[i].order = TransitionOrder::second;
        }
    }
    return points;
}

}  // namespace aqs
