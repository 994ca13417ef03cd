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

// Independent dense-matrix reference implementations used only by tests.
// These deliberately avoid the library's sparse arithmetic so they can
// serve as oracles for it.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Mat pauli_y() {
    Mat m(2, 2);
    m << 0, cxd(0, -1), cxd(0, 1), 0;
    return m;
}

inline Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline Mat lowering() {
    Mat m(2, 2);
    m << 0, 1, 0, 0;
    return m;
}

// Embeds a 2x2 matrix at `site` in an L-site chain, site 0 on the most
// significant factor.
inline Mat embed(const Mat &m, int site, int L) {
    Mat out = Mat::Identity(1, 1);
    for (int k = 0; k < L; ++k) {
        out = kron(out, k == site ? m : Mat::Identity(2, 2));
    }
    return out;
}

// Jordan-Wigner fermion with explicit Z-string, independent of the
// library's implementation.
inline Mat fermion(int site, int L, bool dagger) {
    Mat out = Mat::Identity(1 << L, 1 << L);
    for (int k = 0; k < site; ++k) {
        out = out * embed(pauli_z(), k, L);
    }
    Mat a = lowering();
    out = out * embed(dagger ? Mat(a.adjoint()) : a, site, L);
    return out;
}

inline Mat majorana(int mu, int L) {
    int k = (mu + 1) / 2;  // 1-based site
    Mat b = fermion(k - 1, L, false);
    Mat bd = fermion(k - 1, L, true);
    if (mu % 2 == 1) {
        return b + bd;
    }
    return cxd(0, -1) * (b - bd);
}

}  // namespace oracle
