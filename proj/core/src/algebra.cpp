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

#include "aqs/algebra.hpp"

namespace aqs {

void check_full_space_size(int L) {
    if (L < 1) {
        throw InvalidSpec("system size must be at least 1");
    }
    if (L > kMaxFullSpaceSites) {
        throw DimensionTooLarge("full-space construction capped at L = 14");
    }
}

SparseOperator single_site_matrix(SiteOpKind kind) {
    SparseOperator m(2);
    switch (kind) {
        case SiteOpKind::annihilate:
            m.insert(0, 1, 1.0);
            break;
        case SiteOpKind::create:
            m.insert(1, 0, 1.0);
            break;
        case SiteOpKind::number:
            m.insert(1, 1, 1.0);
            break;
        case SiteOpKind::pauli_x:
            m.insert(0, 1, 1.0);
            m.insert(1, 0, 1.0);
            break;
        case SiteOpKind::pauli_y:
            m.insert(0, 1, cxd(0.0, -1.0));
            m.insert(1, 0, cxd(0.0, 1.0));
            break;
        case SiteOpKind::pauli_z:
            m.insert(0, 0, 1.0);
            m.insert(1, 1, -1.0);
            break;
    }
    m.canonicalize();
    return m;
}

SparseOperator build_site_operator(SiteOpKind kind, SiteIndex site, int L) {
    check_full_space_size(L);
    if (site.index < 0 || site.index >= L) {
        throw InvalidSite("site index outside [0, L)");
    }
    SparseOperator left = SparseOperator::identity(std::int64_t{1} << site.index);
    SparseOperator right =
        SparseOperator::identity(std::int64_t{1} << (L - site.index - 1));
    return left.kron(single_site_matrix(kind)).kron(right);
}

SparseOperator commutator(const SparseOperator &a, const SparseOperator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("commutator requires equal dimensions");
    }
    return a * b - b * a;
}

SparseOperator anticommutator(const SparseOperator &a, const SparseOperator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("anticommutator requires equal dimensions");
    }
    return a * b + b * a;
}

SparseOperator jordan_wigner(SiteIndex site, int L, bool dagger) {
    check_full_space_size(L);
    if (site.index < 0 || site.index >= L) {
        throw InvalidSite("site index outside [0, L)");
    }
    SparseOperator op = build_site_operator(
        dagger ? SiteOpKind::create : SiteOpKind::annihilate, site, L);
    for (int j = 0; j < site.index; ++j) {
        op = build_site_operator(SiteOpKind::pauli_z, SiteIndex(j), L) * op;
    }
    return op;
}

SparseOperator majorana(int mu, int L) {
    check_full_space_size(L);
    if (mu < 1 || mu > 2 * L) {
        throw IndexOutOfRange("Majorana index outside [1, 2L]");
    }
    int k = (mu + 1) / 2;  // 1-based site
    SparseOperator op = build_site_operator(
        mu % 2 == 1 ? SiteOpKind::pauli_x : SiteOpKind::pauli_y, SiteIndex(k - 1), L);
    for (int j = 0; j < k - 1; ++j) {
        op = build_site_operator(SiteOpKind::pauli_z, SiteIndex(j), L) * op;
    }
    return op;
}

}  // namespace aqs
