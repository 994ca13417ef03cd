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

#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "aqs/sparse_operator.hpp"

namespace aqs {

/// Exact rational flux p/q, reduced, kept exact so gauge phases do not
/// drift across denominators up to 101.
struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n, long d) : num(n), den(d) {
        if (den == 0) {
            throw InvalidSpec("rational with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational &) const = default;
};

enum class Gauge { landau };
enum class Boundary { open };

struct LatticeSpec {
    int width = 1;   // sites along m
    int height = 1;  // sites along n
    Rational flux;   // flux per plaquette, in [0, 1)
    Gauge gauge = Gauge::landau;
    Boundary boundary = Boundary::open;

    int sites() const { return width * height; }
    void validate() const;
    /// Row-major site index, n the slow axis.
    int site(int m, int n) const { return n * width + m; }
};

struct MajoranaChainSpec {
    int sites = 2;  // N
    int range = 1;  // p, hopping range in Majorana pairs
    void validate() const;
};

/// Single-particle hopping matrix on the width x height lattice with Landau
/// gauge phases (theta_x, theta_y) = (0, m*flux). Dimension width*height.
SparseOperator build_hofstadter_single_particle(const LatticeSpec &spec);

/// Per-flux sorted eigenvalue lists for the Hofstadter matrix.
std::vector<std::pair<Rational, Eigen::VectorXd>> butterfly_sweep(
    int width, int height, const std::vector<Rational> &fluxes, unsigned threads = 1);

/// Nearest-neighbor -1 hopping: the XX driver restricted to the
/// single-excitation sector, where X_i X_j acts as |i><j| + |j><i|.
SparseOperator build_xx_driver_single_particle(const LatticeSpec &spec);

/// -sum_i X_i on the full 2^N space.
SparseOperator build_transverse_field(int N);

/// +N ((1/N) sum_i X_i)^2 = (sum_i X_i)^2 / N, positive semidefinite.
SparseOperator build_antiferromagnetic_term(int N);

/// i sum_{k=1}^{N-p} (c_{2(k+p)-1} c_{2k} + c_{2(k+p)} c_{2k-1}).
SparseOperator build_majorana_chain(const MajoranaChainSpec &spec);

}  // namespace aqs
