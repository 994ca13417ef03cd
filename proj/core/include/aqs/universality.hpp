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

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "aqs/algebra.hpp"
#include "aqs/sparse_operator.hpp"
#include "aqs/state_vector.hpp"

namespace aqs {

// ---------------------------------------------------------------------------
// Normal-ordered operator decomposition
// ---------------------------------------------------------------------------

/// One normal-ordered monomial a^dag_{x_1}..a^dag_{x_M} a_{x'_1}..a_{x'_N}
/// with canonical (strictly ascending) site tuples. The stored coefficient
/// is the symmetric per-ordered-tuple value; the monomial therefore enters
/// the reconstruction with weight M! N! * coefficient.
struct DecompositionTerm {
    std::vector<int> create_sites;
    std::vector<int> annihilate_sites;
    cxd coefficient;
};

struct DecompositionResult {
    std::vector<DecompositionTerm> terms;  // lexicographic over (M, N), then tuples
    int max_create = 0;
    int max_annihilate = 0;
    double residual = 0.0;
};

/// Solves the coefficients by walking matrix elements between few-particle
/// states in order of increasing particle count, peeling off already-fixed
/// monomials. Throws NonConvergence if the final residual exceeds `tol`.
DecompositionResult decompose_operator(const SparseOperator &op, int L,
                                       double tol = 1e-9);

/// Re-expands a decomposition into an operator on the 2^L space.
SparseOperator reconstruct_operator(const DecompositionResult &result, int L);

// ---------------------------------------------------------------------------
// Gates and clock Hamiltonians
// ---------------------------------------------------------------------------

/// CNOT as 1 - n_c + n_c (a_t + a^dag_t); equals the permutation matrix.
SparseOperator build_cnot(SiteIndex control, SiteIndex target, int L);

struct ClockCircuit {
    int logical_qubits = 1;
    std::vector<SparseOperator> gates;  // each a 2^logical_qubits unitary

    int length() const { return static_cast<int>(gates.size()); }
    void validate(double unitary_tol = 1e-12) const;
};

/// Reads a line-oriented gate list: `GATE <name> <qubit...>` with the pool
/// {X, Z, H, RX(angle), CNOT}. Blank lines and lines starting with '#' are
/// skipped. Qubits are zero-based.
ClockCircuit parse_gate_list(std::istream &in, int logical_qubits);

struct ClockHamiltonians {
    SparseOperator h_init;
    SparseOperator h_final;
    SparseOperator h_prop;
    SparseOperator h_clock;
    SparseOperator h_clock_init;
    SparseOperator h_input;
};

/// Builds the clock Hamiltonians on logical_qubits + L qubits, clock
/// register in the domain-wall encoding |1..1 0..0> with tau ones.
/// Logical qubits occupy the most significant bits.
ClockHamiltonians build_clock_hamiltonians(const ClockCircuit &circuit);

/// The uniform superposition over partial executions,
/// sum_tau U_tau..U_1 |0..0> (x) |clock tau> / sqrt(L+1).
StateVector history_state(const ClockCircuit &circuit);

/// Basis index of the domain-wall clock state tau within the 2^L register.
std::int64_t clock_state_index(int L, int tau);

// ---------------------------------------------------------------------------
// 2-local Hamiltonian
// ---------------------------------------------------------------------------

enum class TwoLocalForm {
    pauli_z,  // h_z Z_i + J_ij Z_i Z_j
    number,   // h_z n_i + J_ij n_i n_j
};

SparseOperator build_two_local(const Eigen::VectorXd &h_z, const Eigen::VectorXd &h_x,
                               const Eigen::MatrixXd &J, const Eigen::MatrixXd &Gamma,
                               TwoLocalForm form);

// ---------------------------------------------------------------------------
// TSP encoding
// ---------------------------------------------------------------------------

struct TspInstance {
    int cities = 2;
    Eigen::MatrixXd distance;  // symmetric, zero diagonal, nonnegative
    double penalty1 = 0.0;     // one city per step
    double penalty2 = 0.0;     // one step per city

    void validate() const;
    /// 2 N max(D) + 1, large enough that the ground state is feasible.
    double default_penalty() const;
};

TspInstance random_tsp_instance(int cities, std::mt19937_64 &rng);

/// Diagonal operator on 2^{N^2} qubits, index map n_{i,t} = n_{i + N t}
/// (zero-based). Feasible one-hot states carry the open-tour cost; each
/// violated constraint adds its squared penalty.
SparseOperator build_tsp_hamiltonian(const TspInstance &inst);

/// Exhaustive enumeration of all N! visiting orders; returns the optimal
/// order and its open-tour cost.
std::pair<std::vector<int>, double> brute_force_tour(const TspInstance &inst);

/// Basis index of the one-hot state visiting cities in `order`.
std::int64_t tour_basis_index(const std::vector<int> &order, int cities);

}  // namespace aqs
