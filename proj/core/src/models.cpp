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

#include "aqs/models.hpp"

#include <cmath>
#include <numbers>

#include "aqs/algebra.hpp"
#include "aqs/dense.hpp"
#include "aqs/parallel.hpp"

namespace aqs {

void LatticeSpec::validate() const {
    if (width < 1 || height < 1) {
        throw InvalidSpec("lattice dimensions must be at least 1x1");
    }
    if (flux.num < 0 || flux.num >= flux.den) {
        throw InvalidSpec("flux must lie in [0, 1)");
    }
}

void MajoranaChainSpec::validate() const {
    if (sites < 2) {
        throw InvalidSpec("Majorana chain needs at least 2 sites");
    }
    if (range < 1 || range >= sites) {
        throw InvalidSpec("range parameter must satisfy 1 <= p < N");
    }
}

namespace {

// e^{2*pi*i*m*p/q} with the angle reduced mod 1 exactly in integers first.
cxd landau_phase(int m, const Rational &flux) {
    long r = (static_cast<long>(m) * flux.num) % flux.den;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                   static_cast<double>(flux.den);
    return std::polar(1.0, angle);
}

}  // namespace

SparseOperator build_hofstadter_single_particle(const LatticeSpec &spec) {
    spec.validate();
    SparseOperator h(spec.sites());
    for (int n = 0; n < spec.height; ++n) {
        for (int m = 0; m < spec.width; ++m) {
            if (m + 1 < spec.width) {
                // <m+1,n|H|m,n> = -e^{2 pi i theta_x} with theta_x = 0
                h.insert(spec.site(m + 1, n), spec.site(m, n), -1.0);
                h.insert(spec.site(m, n), spec.site(m + 1, n), -1.0);
            }
            if (n + 1 < spec.height) {
                cxd phase = -landau_phase(m, spec.flux);
                h.insert(spec.site(m, n + 1), spec.site(m, n), phase);
                h.insert(spec.site(m, n), spec.site(m, n + 1), std::conj(phase));
            }
        }
    }
    h.canonicalize();
    return h;
}

std::vector<std::pair<Rational, Eigen::VectorXd>> butterfly_sweep(
    int width, int height, const std::vector<Rational> &fluxes, unsigned threads) {
    std::vector<std::pair<Rational, Eigen::VectorXd>> out(fluxes.size());
    parallel_for(fluxes.size(), threads, [&](std::size_t i) {
        LatticeSpec spec{width, height, fluxes[i]};
        out[i] = {fluxes[i], spectrum(build_hofstadter_single_particle(spec))};
    });
    return out;
}

SparseOperator build_xx_driver_single_particle(const LatticeSpec &spec) {
    spec.validate();
    SparseOperator h(spec.sites());
    for (int n = 0; n < spec.height; ++n) {
        for (int m = 0; m < spec.width; ++m) {
            if (m + 1 < spec.width) {
                h.insert(spec.site(m + 1, n), spec.site(m, n), -1.0);
                h.insert(spec.site(m, n), spec.site(m + 1, n), -1.0);
            }
            if (n + 1 < spec.height) {
                h.insert(spec.site(m, n + 1), spec.site(m, n), -1.0);
                h.insert(spec.site(m, n), spec.site(m, n + 1), -1.0);
            }
        }
    }
    h.canonicalize();
    return h;
}

SparseOperator build_transverse_field(int N) {
    check_full_space_size(N);
    SparseOperator h = SparseOperator::zero(std::int64_t{1} << N);
    for (int i = 0; i < N; ++i) {
        h = h - build_site_operator(SiteOpKind::pauli_x, SiteIndex(i), N);
    }
    return h;
}

SparseOperator build_antiferromagnetic_term(int N) {
    check_full_space_size(N);
    SparseOperator sum_x = SparseOperator::zero(std::int64_t{1} << N);
    for (int i = 0; i < N; ++i) {
        sum_x = sum_x + build_site_operator(SiteOpKind::pauli_x, SiteIndex(i), N);
    }
    return (sum_x * sum_x) * cxd(1.0 / N, 0.0);
}

SparseOperator build_majorana_chain(const MajoranaChainSpec &spec) {
    spec.validate();
    check_full_space_size(spec.sites);
    const int N = spec.sites;
    const int p = spec.range;
    SparseOperator h = SparseOperator::zero(std::int64_t{1} << N);
    for (int k = 1; k <= N - p; ++k) {
        SparseOperator term = majorana(2 * (k + p) - 1, N) * majorana(2 * k, N) +
                              majorana(2 * (k + p), N) * majorana(2 * k - 1, N);
        h = h + term * cxd(0.0, 1.0);
    }
    return h;
}

}  // namespace aqs
