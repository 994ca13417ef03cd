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

#include "aqs/sparse_operator.hpp"

namespace aqs {

/// Hard cap on full-space construction: 2^14 = 16384 amplitudes.
inline constexpr int kMaxFullSpaceSites = 14;

/// Zero-based site label in a chain of L sites.
struct SiteIndex {
    int index = 0;
    SiteIndex() = default;
    explicit SiteIndex(int i) : index(i) {}
};

enum class SiteOpKind {
    annihilate,  // a
    create,      // a^dagger
    number,      // n = a^dagger a
    pauli_x,
    pauli_y,
    pauli_z,
};

/// 2x2 single-site matrix for `kind`. Basis order (|0>, |1>), occupied = |1>.
SparseOperator single_site_matrix(SiteOpKind kind);

/// Embeds the single-site operator at `site` into the 2^L space,
/// identity on every other tensor factor. Site 0 is the most
/// significant bit of the basis index.
SparseOperator build_site_operator(SiteOpKind kind, SiteIndex site, int L);

/// AB - BA, exact sparse arithmetic.
SparseOperator commutator(const SparseOperator &a, const SparseOperator &b);

/// AB + BA.
SparseOperator anticommutator(const SparseOperator &a, const SparseOperator &b);

/// Fermionic operator with Z-string prefix on sites [0, site).
SparseOperator jordan_wigner(SiteIndex site, int L, bool dagger);

/// Majorana operator c_mu, mu in [1, 2L]. Odd mu = 2k-1 gives the
/// Z-string X at site k, even mu = 2k gives the Z-string Y.
SparseOperator majorana(int mu, int L);

/// Throws DimensionTooLarge when L exceeds the full-space cap.
void check_full_space_size(int L);

}  // namespace aqs
