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

#include "aqs/universality.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

namespace aqs {

namespace {

// All strictly ascending k-subsets of {0, ..., L-1}, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int L, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < L; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Basis index of the occupation state with the given sites filled.
std::int64_t occupation_index(const std::vector<int> &sites, int L) {
    std::int64_t idx = 0;
    for (int s : sites) {
        idx |= std::int64_t{1} << (L - 1 - s);
    }
    return idx;
}

SparseOperator monomial_operator(const std::vector<int> &create,
                                 const std::vector<int> &annihilate, int L) {
    SparseOperator op = SparseOperator::identity(std::int64_t{1} << L);
    for (int s : create) {
        op = op * build_site_operator(SiteOpKind::create, SiteIndex(s), L);
    }
    for (int s : annihilate) {
        op = op * build_site_operator(SiteOpKind::annihilate, SiteIndex(s), L);
    }
    return op;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

}  // namespace

DecompositionResult decompose_operator(const SparseOperator &op, int L, double tol) {
    if (L < 1 || L > 4) {
        throw DimensionTooLarge("decomposition supported for 1 <= L <= 4");
    }
    if (op.dim() != (std::int64_t{1} << L)) {
        throw DimensionMismatch("operator dimension is not 2^L");
    }

    Eigen::MatrixXcd residual = op.dense();
    DecompositionResult result;

    for (int m = 0; m <= L; ++m) {
        for (int n = 0; n <= L; ++n) {
            double norm = factorial(m) * factorial(n);
            for (const auto &create : subsets_of_size(L, m)) {
                std::int64_t row = occupation_index(create, L);
                for (const auto &annihilate : subsets_of_size(L, n)) {
                    std::int64_t col = occupation_index(annihilate, L);
                    cxd elem = residual(row, col);
                    if (std::abs(elem) <= 1e-14) {
                        continue;
                    }
                    cxd coeff = elem / norm;
                    residual -= norm * coeff *
                                monomial_operator(create, annihilate, L).dense();
                    result.terms.push_back({create, annihilate, coeff});
                    result.max_create = std::max(result.max_create, m);
                    result.max_annihilate = std::max(result.max_annihilate, n);
                }
            }
        }
    }

    result.residual = residual.cwiseAbs().maxCoeff();
    if (result.residual > tol) {
        throw NonConvergence("decomposition residual exceeds tolerance");
    }
    return result;
}

SparseOperator reconstruct_operator(const DecompositionResult &result, int L) {
    SparseOperator op = SparseOperator::zero(std::int64_t{1} << L);
    for (const auto &term : result.terms) {
        double norm = factorial(static_cast<int>(term.create_sites.size())) *
                      factorial(static_cast<int>(term.annihilate_sites.size()));
        op = op + monomial_operator(term.create_sites, term.annihilate_sites, L) *
                      (term.coefficient * norm);
    }
    return op;
}

SparseOperator build_cnot(SiteIndex control, SiteIndex target, int L) {
    check_full_space_size(L);
    if (control.index == target.index) {
        throw InvalidSite("CNOT control and target must differ");
    }
    SparseOperator one = SparseOperator::identity(std::int64_t{1} << L);
    SparseOperator n_c = build_site_operator(SiteOpKind::number, control, L);
    SparseOperator flip =
        build_site_operator(SiteOpKind::annihilate, target, L) +
        build_site_operator(SiteOpKind::create, target, L);
    return one - n_c + n_c * flip;
}

void ClockCircuit::validate(double unitary_tol) const {
    check_full_space_size(logical_qubits);
    std::int64_t dim = std::int64_t{1} << logical_qubits;
    SparseOperator one = SparseOperator::identity(dim);
    for (const auto &gate : gates) {
        if (gate.dim() != dim) {
            throw DimensionMismatch("gate dimension does not match logical register");
        }
        if (!(gate * gate.adjoint()).approx_equal(one, unitary_tol)) {
            throw NonUnitaryGate("gate is not unitary");
        }
    }
}

ClockCircuit parse_gate_list(std::istream &in, int logical_qubits) {
    ClockCircuit circuit;
    circuit.logical_qubits = logical_qubits;
    const int L = logical_qubits;

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string tag, name;
        ls >> tag >> name;
        if (tag != "GATE") {
            throw InvalidSpec("gate list line must start with GATE: " + line);
        }
        if (name == "X" || name == "Z" || name == "H") {
            int q;
            if (!(ls >> q)) {
                throw InvalidSpec("missing qubit: " + line);
            }
            if (name == "X") {
                circuit.gates.push_back(
                    build_site_operator(SiteOpKind::pauli_x, SiteIndex(q), L));
            } else if (name == "Z") {
                circuit.gates.push_back(
                    build_site_operator(SiteOpKind::pauli_z, SiteIndex(q), L));
            } else {
                SparseOperator h =
                    (build_site_operator(SiteOpKind::pauli_x, SiteIndex(q), L) +
                     build_site_operator(SiteOpKind::pauli_z, SiteIndex(q), L)) *
                    cxd(1.0 / std::sqrt(2.0), 0.0);
                circuit.gates.push_back(h);
            }
        } else if (name.rfind("RX(", 0) == 0 && name.back() == ')') {
            double angle = std::stod(name.substr(3, name.size() - 4));
            int q;
            if (!(ls >> q)) {
                throw InvalidSpec("missing qubit: " + line);
            }
            SparseOperator rx =
                SparseOperator::identity(std::int64_t{1} << L) *
                    cxd(std::cos(angle / 2.0), 0.0) +
                build_site_operator(SiteOpKind::pauli_x, SiteIndex(q), L) *
                    cxd(0.0, -std::sin(angle / 2.0));
            circuit.gates.push_back(rx);
        } else if (name == "CNOT") {
            int c, t;
            if (!(ls >> c >> t)) {
                throw InvalidSpec("missing qubits: " + line);
            }
            circuit.gates.push_back(build_cnot(SiteIndex(c), SiteIndex(t), L));
        } else {
            throw InvalidSpec("unknown gate name: " + name);
        }
    }
    circuit.validate();
    return circuit;
}

std::int64_t clock_state_index(int L, int tau) {
    if (tau < 0 || tau > L) {
        throw IndexOutOfRange("clock time outside [0, L]");
    }
    std::int64_t idx = 0;
    for (int s = 0; s < tau; ++s) {
        idx |= std::int64_t{1} << (L - 1 - s);
    }
    return idx;
}

namespace {

// Operators on the clock register alone (dim 2^L).
SparseOperator clock_number(int site, int L) {
    return build_site_operator(SiteOpKind::number, SiteIndex(site), L);
}

SparseOperator clock_raise(int site, int L) {
    return build_site_operator(SiteOpKind::create, SiteIndex(site), L);
}

}  // namespace

ClockHamiltonians build_clock_hamiltonians(const ClockCircuit &circuit) {
    circuit.validate();
    const int n = circuit.logical_qubits;
    const int L = circuit.length();
    if (L < 1) {
        throw InvalidSpec("clock circuit needs at least one gate");
    }
    check_full_space_size(n + L);

    const std::int64_t logical_dim = std::int64_t{1} << n;
    const std::int64_t clock_dim = std::int64_t{1} << L;
    SparseOperator one_logical = SparseOperator::identity(logical_dim);
    SparseOperator one_clock = SparseOperator::identity(clock_dim);

    // Domain-wall penalty: 1 iff clock qubit tau is 0 while tau+1 is 1.
    SparseOperator h_clock_c = SparseOperator::zero(clock_dim);
    for (int tau = 0; tau + 1 < L; ++tau) {
        h_clock_c = h_clock_c +
                    (one_clock - clock_number(tau, L)) * clock_number(tau + 1, L);
    }
    SparseOperator h_clock_init_c = clock_number(0, L);

    SparseOperator h_input = SparseOperator::zero(logical_dim * clock_dim);
    {
        SparseOperator at_time_zero = one_clock - clock_number(0, L);
        for (int i = 0; i < n; ++i) {
            h_input = h_input + build_site_operator(SiteOpKind::number, SiteIndex(i), n)
                                    .kron(at_time_zero);
        }
    }

    SparseOperator h_prop = SparseOperator::zero(logical_dim * clock_dim);
    for (int tau = 1; tau <= L; ++tau) {
        // Clock-side factors: previous qubit occupied, next qubit empty.
        SparseOperator guard = one_clock;
        if (tau > 1) {
            guard = guard * clock_number(tau - 2, L);
        }
        if (tau < L) {
            guard = guard * (one_clock - clock_number(tau, L));
        }
        SparseOperator n_tau = clock_number(tau - 1, L);
        SparseOperator raise = clock_raise(tau - 1, L);

        const SparseOperator &u = circuit.gates[static_cast<std::size_t>(tau - 1)];
        SparseOperator h_tau =
            one_logical.kron(guard * (one_clock - n_tau)) -
            u.kron(guard * raise) -
            u.adjoint().kron(guard * raise.adjoint()) +
            one_logical.kron(guard * n_tau);
        h_prop = h_prop + h_tau;
    }
    h_prop = h_prop * cxd(0.5, 0.0);

    ClockHamiltonians out;
    out.h_clock = one_logical.kron(h_clock_c);
    out.h_clock_init = one_logical.kron(h_clock_init_c);
    out.h_input = h_input;
    out.h_prop = h_prop;
    out.h_init = out.h_clock_init + out.h_input + out.h_clock;
    out.h_final = out.h_prop + out.h_input + out.h_clock;
    return out;
}

StateVector history_state(const ClockCircuit &circuit) {
    circuit.validate();
    const int n = circuit.logical_qubits;
    const int L = circuit.length();
    const std::int64_t logical_dim = std::int64_t{1} << n;
    const std::int64_t clock_dim = std::int64_t{1} << L;

    Eigen::VectorXcd logical = Eigen::VectorXcd::Zero(logical_dim);
    logical(0) = 1.0;  // |0...0>
    Eigen::VectorXcd full = Eigen::VectorXcd::Zero(logical_dim * clock_dim);
    for (int tau = 0; tau <= L; ++tau) {
        if (tau > 0) {
            logical = circuit.gates[static_cast<std::size_t>(tau - 1)].apply(logical);
        }
        std::int64_t c = clock_state_index(L, tau);
        for (std::int64_t l = 0; l < logical_dim; ++l) {
            full(l * clock_dim + c) += logical(l);
        }
    }
    full /= std::sqrt(static_cast<double>(L + 1));
    return StateVector(std::move(full), BasisKind::occupation);
}

SparseOperator build_two_local(const Eigen::VectorXd &h_z, const Eigen::VectorXd &h_x,
                               const Eigen::MatrixXd &J, const Eigen::MatrixXd &Gamma,
                               TwoLocalForm form) {
    const int N = static_cast<int>(h_z.size());
    check_full_space_size(N);
    if (h_x.size() != N || J.rows() != N || J.cols() != N || Gamma.rows() != N ||
        Gamma.cols() != N) {
        throw DimensionMismatch("coupling arrays disagree on qubit count");
    }
    const std::int64_t dim = std::int64_t{1} << N;
    SiteOpKind diag_kind =
        form == TwoLocalForm::pauli_z ? SiteOpKind::pauli_z : SiteOpKind::number;

    SparseOperator h = SparseOperator::zero(dim);
    std::vector<SparseOperator> diag_ops, x_ops;
    diag_ops.reserve(N);
    x_ops.reserve(N);
    for (int i = 0; i < N; ++i) {
        diag_ops.push_back(build_site_operator(diag_kind, SiteIndex(i), N));
        x_ops.push_back(build_site_operator(SiteOpKind::pauli_x, SiteIndex(i), N));
    }
    for (int i = 0; i < N; ++i) {
        h = h + diag_ops[i] * cxd(h_z(i), 0.0) + x_ops[i] * cxd(h_x(i), 0.0);
        for (int j = 0; j < N; ++j) {
            if (J(i, j) != 0.0) {
                h = h + diag_ops[i] * diag_ops[j] * cxd(J(i, j), 0.0);
            }
            if (Gamma(i, j) != 0.0) {
                h = h + x_ops[i] * x_ops[j] * cxd(Gamma(i, j), 0.0);
            }
        }
    }
    return h;
}

void TspInstance::validate() const {
    if (cities < 2) {
        throw InvalidSpec("TSP needs at least 2 cities");
    }
    if (distance.rows() != cities || distance.cols() != cities) {
        throw InvalidSpec("distance matrix shape does not match city count");
    }
    for (int i = 0; i < cities; ++i) {
        if (distance(i, i) != 0.0) {
            throw InvalidSpec("distance matrix must have zero diagonal");
        }
        for (int j = 0; j < cities; ++j) {
            if (distance(i, j) < 0.0 || distance(i, j) != distance(j, i)) {
                throw InvalidSpec("distance matrix must be symmetric and nonnegative");
            }
        }
    }
    if (penalty1 <= 0.0 || penalty2 <= 0.0) {
        throw InvalidSpec("penalties must be positive");
    }
}

double TspInstance::default_penalty() const {
    return 2.0 * cities * distance.maxCoeff() + 1.0;
}

TspInstance random_tsp_instance(int cities, std::mt19937_64 &rng) {
    TspInstance inst;
    inst.cities = cities;
    inst.distance = Eigen::MatrixXd::Zero(cities, cities);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < cities; ++i) {
        for (int j = i + 1; j < cities; ++j) {
            double d = dist(rng);
            inst.distance(i, j) = d;
            inst.distance(j, i) = d;
        }
    }
    inst.penalty1 = inst.default_penalty();
    inst.penalty2 = inst.penalty1;
    return inst;
}

SparseOperator build_tsp_hamiltonian(const TspInstance &inst) {
    inst.validate();
    const int N = inst.cities;
    const int qubits = N * N;
    check_full_space_size(qubits);
    const std::int64_t dim = std::int64_t{1} << qubits;

    SparseOperator h(dim);
    std::vector<int> occ(static_cast<std::size_t>(qubits));
    for (std::int64_t b = 0; b < dim; ++b) {
        for (int q = 0; q < qubits; ++q) {
            occ[static_cast<std::size_t>(q)] =
                static_cast<int>((b >> (qubits - 1 - q)) & 1);
        }
        auto n_of = [&](int city, int step) { return occ[city + N * step]; };

        double energy = 0.0;
        for (int t = 0; t + 1 < N; ++t) {
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < N; ++j) {
                    energy += inst.distance(i, j) * n_of(i, t + 1) * n_of(j, t);
                }
            }
        }
        // Squared constraint penalties: one city per step, one step per city.
        for (int t = 0; t < N; ++t) {
            int count = 0;
            for (int i = 0; i < N; ++i) {
                count += n_of(i, t);
            }
            energy += inst.penalty1 * (count - 1) * (count - 1);
        }
        for (int i = 0; i < N; ++i) {
            int count = 0;
            for (int t = 0; t < N; ++t) {
                count += n_of(i, t);
            }
            energy += inst.penalty2 * (count - 1) * (count - 1);
        }
        if (energy != 0.0) {
            h.insert(b, b, energy);
        }
    }
    h.canonicalize();
    return h;
}

std::pair<std::vector<int>, double> brute_force_tour(const TspInstance &inst) {
    const int N = inst.cities;
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        order[static_cast<std::size_t>(i)] = i;
    }
    std::vector<int> best = order;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (int t = 0; t + 1 < N; ++t) {
            cost += inst.distance(order[t + 1], order[t]);
        }
        if (cost < best_cost) {
            best_cost = cost;
            best = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return {best, best_cost};
}

std::int64_t tour_basis_index(const std::vector<int> &order, int cities) {
    const int qubits = cities * cities;
    std::int64_t idx = 0;
    for (int t = 0; t < cities; ++t) {
        int q = order[static_cast<std::size_t>(t)] + cities * t;
        idx |= std::int64_t{1} << (qubits - 1 - q);
    }
    return idx;
}

}  // namespace aqs
