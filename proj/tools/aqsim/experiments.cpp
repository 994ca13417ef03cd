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

#include "experiments.hpp"

#include <cmath>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "aqs/algebra.hpp"
#include "aqs/anneal.hpp"
#include "aqs/dense.hpp"
#include "aqs/models.hpp"
#include "aqs/otoc.hpp"
#include "aqs/parallel.hpp"
#include "aqs/semiclassical.hpp"
#include "aqs/universality.hpp"

namespace aqsim {

namespace {

aqs::ScheduleKind parse_schedule(const std::string &name) {
    if (name == "exp_decay") {
        return aqs::ScheduleKind::exp_decay;
    }
    if (name == "inv_log") {
        return aqs::ScheduleKind::inv_log;
    }
    if (name == "arctan_finite") {
        return aqs::ScheduleKind::arctan_finite;
    }
    throw aqs::InvalidSpec("unknown schedule kind: " + name);
}

aqs::LatticeSpec make_lattice(int width, int height, int flux_num, int flux_den) {
    aqs::LatticeSpec spec;
    spec.width = width;
    spec.height = height;
    spec.flux = aqs::Rational(flux_num, flux_den);
    spec.validate();
    return spec;
}

/// H(s, lambda) = s (lambda chain + (1 - lambda) AF) + (1 - s) driver,
/// the annealed long-range Majorana chain with non-stoquastic mixing.
aqs::SparseOperator chain_hamiltonian(int sites, int p, double s, double lambda) {
    aqs::MajoranaChainSpec chain_spec;
    chain_spec.sites = sites;
    chain_spec.range = p;
    aqs::SparseOperator chain = aqs::build_majorana_chain(chain_spec);
    aqs::SparseOperator af = aqs::build_antiferromagnetic_term(sites);
    aqs::SparseOperator driver = aqs::build_transverse_field(sites);
    return aqs::cxd(s * lambda, 0.0) * chain +
           aqs::cxd(s * (1.0 - lambda), 0.0) * af +
           aqs::cxd(1.0 - s, 0.0) * driver;
}

std::string order_name(aqs::TransitionOrder order) {
    switch (order) {
        case aqs::TransitionOrder::none:
            return "none";
        case aqs::TransitionOrder::first:
            return "first";
        case aqs::TransitionOrder::second:
            return "second";
    }
    return "none";
}

std::string join_sites(const std::vector<int> &sites) {
    std::string out;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += std::to_string(sites[i]);
    }
    return out;
}

double resolve_t_end(const AnnealProbOpts &opts, aqs::ScheduleKind kind) {
    if (opts.t_end > 0.0) {
        return opts.t_end;
    }
    switch (kind) {
        case aqs::ScheduleKind::exp_decay:
            if (opts.gamma_stop <= 0.0 || opts.gamma_stop >= 1.0) {
                throw aqs::InvalidSpec("gamma_stop must lie in (0, 1)");
            }
            return std::log(1.0 / opts.gamma_stop) / opts.rate;
        case aqs::ScheduleKind::arctan_finite:
            return opts.tau;
        case aqs::ScheduleKind::inv_log:
            throw aqs::InvalidSpec("inv_log needs an explicit t-end");
    }
    throw aqs::InvalidSpec("unknown schedule kind");
}

}  // namespace

unsigned effective_threads(const Common &common) {
    return common.threads == 0 ? aqs::default_thread_count() : common.threads;
}

std::vector<Artifact> run_butterfly(const ButterflyOpts &opts, const Common &common) {
    if (opts.flux_den < 2) {
        throw aqs::InvalidSpec("flux denominator must be at least 2");
    }
    std::vector<aqs::Rational> fluxes;
    fluxes.reserve(static_cast<std::size_t>(opts.flux_den) - 1);
    for (int k = 1; k < opts.flux_den; ++k) {
        fluxes.emplace_back(k, opts.flux_den);
    }
    auto sweep = aqs::butterfly_sweep(opts.width, opts.height, fluxes,
                                      effective_threads(common));
    std::string csv = "flux_num,flux_den,eigenvalue_index,energy\n";
    for (std::size_t f = 0; f < sweep.size(); ++f) {
        // Report the requested (unreduced) flux label so rows stay aligned
        // with the sweep definition.
        const auto &values = sweep[f].second;
        for (Eigen::Index i = 0; i < values.size(); ++i) {
            csv += fmt(f + 1) + "," + fmt(opts.flux_den) + "," +
                   fmt(static_cast<int>(i)) + "," + fmt(values(i)) + "\n";
        }
    }
    return {{"butterfly.csv", csv}};
}

std::vector<Artifact> run_density(const DensityOpts &opts, const Common &common) {
    (void)common;
    aqs::LatticeSpec lattice =
        make_lattice(opts.width, opts.height, opts.flux_num, opts.flux_den);
    aqs::AnnealProblem problem;
    problem.h0 = aqs::build_hofstadter_single_particle(lattice);
    problem.h1 = aqs::build_xx_driver_single_particle(lattice);
    problem.schedule = aqs::Schedule{parse_schedule(opts.schedule), opts.rate,
                                     opts.tau};
    if (opts.t_end <= 0.0) {
        throw aqs::InvalidSpec("t-end must be positive");
    }
    auto trace = aqs::evolve(problem, opts.t_end, {opts.t_end}, opts.rel_tol);
    const Eigen::VectorXcd &psi = trace.snapshots.back();
    std::string csv = "m,n,density\n";
    for (int n = 0; n < lattice.height; ++n) {
        for (int m = 0; m < lattice.width; ++m) {
            csv += fmt(m) + "," + fmt(n) + "," +
                   fmt(std::norm(psi(lattice.site(m, n)))) + "\n";
        }
    }
    return {{"density.csv", csv}};
}

std::vector<Artifact> run_anneal_prob(const AnnealProbOpts &opts,
                                      const Common &common) {
    (void)common;
    aqs::LatticeSpec lattice =
        make_lattice(opts.width, opts.height, opts.flux_num, opts.flux_den);
    aqs::AnnealProblem problem;
    problem.h0 = aqs::build_hofstadter_single_particle(lattice);
    problem.h1 = aqs::build_xx_driver_single_particle(lattice);
    aqs::ScheduleKind kind = parse_schedule(opts.schedule);
    problem.schedule = aqs::Schedule{kind, opts.rate, opts.tau};
    double t_end = resolve_t_end(opts, kind);
    auto trace =
        aqs::evolve(problem, t_end, aqs::default_snapshot_times(t_end), opts.rel_tol);
    auto probs = aqs::occupation_probabilities(trace, problem.h0, 4);

    std::string csv = "t,gamma,P0,P1,P2,P3,norm_drift\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        csv += fmt(trace.times[i]) + "," + fmt(trace.gammas[i]);
        for (int level = 0; level < 4; ++level) {
            double p = level < probs.probabilities.cols()
                           ? probs.probabilities(static_cast<Eigen::Index>(i), level)
                           : 0.0;
            csv += "," + fmt(p);
        }
        csv += "," + fmt(std::abs(trace.snapshots[i].norm() - 1.0)) + "\n";
    }
    return {{"anneal.csv", csv}};
}

std::vector<Artifact> run_gap(const GapOpts &opts, const Common &common,
                              std::string &report) {
    (void)common;
    if (opts.s_points < 2) {
        throw aqs::InvalidSpec("gap sweep needs at least two s points");
    }
    aqs::LatticeSpec lattice =
        make_lattice(opts.width, opts.height, opts.flux_num, opts.flux_den);
    aqs::AnnealProblem problem;
    problem.h0 = aqs::build_hofstadter_single_particle(lattice);
    problem.h1 = aqs::build_xx_driver_single_particle(lattice);
    problem.schedule = aqs::Schedule{aqs::ScheduleKind::exp_decay, 1.0, 0.0};

    std::vector<double> grid(static_cast<std::size_t>(opts.s_points));
    for (int i = 0; i < opts.s_points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / (opts.s_points - 1);
    }
    const Eigen::MatrixXcd h0 = problem.h0.dense();
    const Eigen::MatrixXcd h1 = problem.h1.dense();
    std::string csv = "s,gap\n";
    for (double s : grid) {
        Eigen::MatrixXcd h = s * h0 + (1.0 - s) * h1;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                               Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw aqs::DiagonalizationFailure("eigensolver failed along the path");
        }
        csv += fmt(s) + "," + fmt(solver.eigenvalues()(1) - solver.eigenvalues()(0)) +
               "\n";
    }
    auto gap = aqs::minimal_gap(problem, grid);
    report = "minimal gap " + fmt(gap.delta) + " at s " + fmt(gap.s_at_min) + "\n";
    return {{"gap.csv", csv}};
}

std::vector<Artifact> run_phase_diagram(const PhaseDiagramOpts &opts,
                                        const Common &common) {
    if (opts.s_points < 2) {
        throw aqs::InvalidSpec("phase diagram needs at least two s points");
    }
    std::vector<double> grid(static_cast<std::size_t>(opts.s_points));
    for (int i = 0; i < opts.s_points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / (opts.s_points - 1);
    }
    auto points = aqs::classify_transition(opts.p, opts.lambda, grid, opts.grid_size,
                                           static_cast<int>(effective_threads(common)));
    std::string csv = "s,lambda,theta_min,order\n";
    for (const auto &pt : points) {
        csv += fmt(pt.s) + "," + fmt(pt.lambda) + "," + fmt(pt.theta_min) + "," +
               order_name(pt.order) + "\n";
    }
    std::vector<Artifact> artifacts = {{"phase.csv", csv}};

    if (opts.slice_s >= 0.0) {
        aqs::PotentialSpec spec;
        spec.p = opts.p;
        spec.s = opts.slice_s;
        spec.lambda = opts.lambda;
        spec.validate();
        std::string slice = "theta,V\n";
        for (int i = 0; i <= opts.grid_size; ++i) {
            double theta = M_PI * i / opts.grid_size;
            slice += fmt(theta) + "," + fmt(aqs::potential(spec, {theta, 0.0})) + "\n";
        }
        artifacts.push_back({"potential_slice.csv", slice});
    }
    return artifacts;
}

std::vector<Artifact> run_otoc(const OtocOpts &opts, const Common &common) {
    if (opts.s_points < 1) {
        throw aqs::InvalidSpec("otoc sweep needs at least one s point");
    }
    if (opts.s_min < 0.0 || opts.s_max > 1.0 || opts.s_min > opts.s_max) {
        throw aqs::OutOfDomain("otoc s range must lie inside [0, 1]");
    }
    std::vector<double> s_values(static_cast<std::size_t>(opts.s_points));
    for (int i = 0; i < opts.s_points; ++i) {
        s_values[static_cast<std::size_t>(i)] =
            opts.s_points == 1 ? opts.s_min
                               : opts.s_min + (opts.s_max - opts.s_min) * i /
                                                  (opts.s_points - 1);
    }
    {
        // Validate the model parameters before entering the worker pool;
        // exceptions must not originate inside worker threads.
        aqs::MajoranaChainSpec chain_spec;
        chain_spec.sites = opts.sites;
        chain_spec.range = opts.p;
        chain_spec.validate();
    }
    aqs::SparseOperator v_op = aqs::mean_transverse_magnetization(opts.sites);
    std::vector<aqs::OtocSeries> series(s_values.size());
    std::exception_ptr first_error;
    std::mutex error_mutex;
    aqs::parallel_for(s_values.size(), effective_threads(common), [&](std::size_t i) {
        try {
            aqs::OtocSpec spec;
            spec.hamiltonian = chain_hamiltonian(opts.sites, opts.p, s_values[i],
                                                 opts.lambda);
            spec.v_op = v_op;
            spec.psi0 = aqs::StateVector(aqs::ground_state(spec.hamiltonian),
                                         aqs::BasisKind::occupation);
            spec.t_max = opts.t_max;
            spec.samples = opts.samples;
            series[i] = aqs::compute_F(spec);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) {
                first_error = std::current_exception();
            }
        }
    });
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    std::string csv = "s,lambda,t,Re_F,Im_F\n";
    std::string summary = "s,lambda,Re_Fhat,Im_Fhat\n";
    for (std::size_t i = 0; i < s_values.size(); ++i) {
        for (std::size_t k = 0; k < series[i].times.size(); ++k) {
            csv += fmt(s_values[i]) + "," + fmt(opts.lambda) + "," +
                   fmt(series[i].times[k]) + "," + fmt(series[i].f_values[k].real()) +
                   "," + fmt(series[i].f_values[k].imag()) + "\n";
        }
        summary += fmt(s_values[i]) + "," + fmt(opts.lambda) + "," +
                   fmt(series[i].f_hat.real()) + "," + fmt(series[i].f_hat.imag()) +
                   "\n";
    }
    return {{"otoc.csv", csv}, {"otoc_summary.csv", summary}};
}

std::vector<Artifact> run_clock(const ClockOpts &opts, const Common &common,
                                std::string &report) {
    (void)common;
    std::ifstream in(opts.gates_file);
    if (!in) {
        throw IoError("cannot open gate list " + opts.gates_file);
    }
    aqs::ClockCircuit circuit = aqs::parse_gate_list(in, opts.qubits);
    circuit.validate();
    aqs::ClockHamiltonians h = aqs::build_clock_hamiltonians(circuit);
    aqs::StateVector history = aqs::history_state(circuit);

    double history_residual = h.h_final.apply(history.amplitudes).norm();
    Eigen::VectorXcd start = Eigen::VectorXcd::Zero(h.h_init.dim());
    start(aqs::clock_state_index(circuit.length(), 0)) = 1.0;
    double init_residual = h.h_init.apply(start).norm();
    double final_floor = aqs::spectrum(h.h_final)(0);
    double init_floor = aqs::spectrum(h.h_init)(0);

    std::string csv = "quantity,value\n";
    csv += "logical_qubits," + fmt(circuit.logical_qubits) + "\n";
    csv += "gates," + fmt(circuit.length()) + "\n";
    csv += "history_residual," + fmt(history_residual) + "\n";
    csv += "initial_state_residual," + fmt(init_residual) + "\n";
    csv += "h_final_min_eigenvalue," + fmt(final_floor) + "\n";
    csv += "h_init_min_eigenvalue," + fmt(init_floor) + "\n";
    for (int tau = 0; tau <= circuit.length(); ++tau) {
        csv += "clock_index_" + std::to_string(tau) + "," +
               fmt(aqs::clock_state_index(circuit.length(), tau)) + "\n";
    }
    report = "history state residual " + fmt(history_residual) + "\n";
    return {{"clock.csv", csv}};
}

std::vector<Artifact> run_decompose(const DecomposeOpts &opts, const Common &common,
                                    std::string &report) {
    if (opts.sites < 1 || opts.sites > 14) {
        throw aqs::InvalidSpec("decompose supports 1 to 14 sites");
    }
    std::int64_t dim = std::int64_t{1} << opts.sites;
    aqs::SparseOperator op;
    if (opts.op == "identity") {
        op = aqs::SparseOperator::identity(dim);
    } else if (opts.op == "pauli_x") {
        op = aqs::build_site_operator(aqs::SiteOpKind::pauli_x, aqs::SiteIndex(0),
                                      opts.sites);
    } else if (opts.op == "cnot") {
        if (opts.sites < 2) {
            throw aqs::InvalidSpec("cnot needs at least two sites");
        }
        op = aqs::build_cnot(aqs::SiteIndex(0), aqs::SiteIndex(1), opts.sites);
    } else if (opts.op == "random") {
        std::mt19937_64 rng(common.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Eigen::MatrixXcd m(dim, dim);
        for (std::int64_t r = 0; r < dim; ++r) {
            for (std::int64_t c = 0; c < dim; ++c) {
                m(r, c) = aqs::cxd(dist(rng), dist(rng));
            }
        }
        op = aqs::SparseOperator::from_dense(m);
    } else {
        throw aqs::InvalidSpec("unknown operator choice: " + opts.op);
    }

    auto result = aqs::decompose_operator(op, opts.sites);
    std::string csv = "create,annihilate,re,im\n";
    for (const auto &term : result.terms) {
        csv += join_sites(term.create_sites) + "," + join_sites(term.annihilate_sites) +
               "," + fmt(term.coefficient.real()) + "," + fmt(term.coefficient.imag()) +
               "\n";
    }
    report = "terms " + fmt(static_cast<int>(result.terms.size())) + ", residual " +
             fmt(result.residual) + "\n";
    return {{"coefficients.csv", csv}};
}

std::vector<Artifact> run_tsp(const TspOpts &opts, const Common &common,
                              std::string &report) {
    aqs::TspInstance inst;
    if (!opts.instance_file.empty()) {
        std::ifstream in(opts.instance_file);
        if (!in) {
            throw IoError("cannot open TSP instance " + opts.instance_file);
        }
        inst.cities = opts.cities;
        inst.distance = Eigen::MatrixXd::Zero(opts.cities, opts.cities);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            if (first) {
                first = false;
                if (line == "i,j,distance") {
                    continue;  // optional header
                }
            }
            std::istringstream ls(line);
            int i = 0;
            int j = 0;
            double d = 0.0;
            char comma = 0;
            if (!(ls >> i >> comma >> j >> comma >> d)) {
                throw aqs::InvalidSpec("malformed TSP instance row: " + line);
            }
            if (i < 0 || j < 0 || i >= opts.cities || j >= opts.cities) {
                throw aqs::InvalidSpec("TSP instance city index out of range");
            }
            inst.distance(i, j) = d;
            inst.distance(j, i) = d;
        }
        inst.penalty1 = inst.penalty2 = inst.default_penalty();
        inst.validate();
    } else {
        std::mt19937_64 rng(common.seed);
        inst = aqs::random_tsp_instance(opts.cities, rng);
    }

    aqs::SparseOperator h = aqs::build_tsp_hamiltonian(inst);
    auto [best_order, best_cost] = aqs::brute_force_tour(inst);

    Eigen::MatrixXcd d = h.dense();
    std::int64_t argmin = 0;
    for (std::int64_t i = 1; i < d.rows(); ++i) {
        if (d(i, i).real() < d(argmin, argmin).real()) {
            argmin = i;
        }
    }
    double ground_energy = d(argmin, argmin).real();
    std::int64_t best_index = aqs::tour_basis_index(best_order, inst.cities);
    double tour_energy = d(best_index, best_index).real();
    bool match = std::abs(ground_energy - best_cost) < 1e-10 &&
                 std::abs(tour_energy - best_cost) < 1e-10;

    std::string instance_csv = "i,j,distance\n";
    for (int i = 0; i < inst.cities; ++i) {
        for (int j = i + 1; j < inst.cities; ++j) {
            instance_csv += fmt(i) + "," + fmt(j) + "," + fmt(inst.distance(i, j)) +
                            "\n";
        }
    }
    std::string tour_csv = "step,city\n";
    for (std::size_t t = 0; t < best_order.size(); ++t) {
        tour_csv += fmt(static_cast<int>(t)) + "," + fmt(best_order[t]) + "\n";
    }

    report = "verification\n";
    report += "  brute force cost " + fmt(best_cost) + "\n";
    report += "  hamiltonian ground energy " + fmt(ground_energy) + "\n";
    report += std::string("  match ") + (match ? "yes" : "no") + "\n";
    if (!match) {
        throw aqs::NonConvergence("TSP ground state disagrees with brute force");
    }
    return {{"tsp.csv", instance_csv}, {"tour.csv", tour_csv}};
}

}  // namespace aqsim
