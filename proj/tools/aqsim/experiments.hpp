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
#include <string>
#include <vector>

#include "artifacts.hpp"

namespace aqsim {

/// Flags shared by every subcommand. threads = 0 selects all cores.
struct Common {
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::string out = ".";
    std::string config;  // informational; expanded before parsing
};

unsigned effective_threads(const Common &common);

struct ButterflyOpts {
    int width = 10;
    int height = 10;
    int flux_den = 101;
};

struct DensityOpts {
    int width = 20;
    int height = 20;
    int flux_num = 1;
    int flux_den = 11;
    std::string schedule = "exp_decay";
    double rate = 1.0;
    double tau = 10.0;
    double t_end = 20.0;
    double rel_tol = 1e-9;
};

struct AnnealProbOpts {
    int width = 3;
    int height = 3;
    int flux_num = 1;
    int flux_den = 3;
    std::string schedule = "exp_decay";
    double rate = 0.1;
    double tau = 10.0;
    double gamma_stop = 0.01;
    double t_end = 0.0;  // 0 = derive from the schedule and gamma_stop
    double rel_tol = 1e-9;
};

struct GapOpts {
    int width = 3;
    int height = 3;
    int flux_num = 1;
    int flux_den = 3;
    int s_points = 101;
};

struct PhaseDiagramOpts {
    int p = 6;
    double lambda = 1.0;
    int s_points = 1001;
    int grid_size = 1000;
    double slice_s = -1.0;  // >= 0 additionally emits a potential slice
};

struct OtocOpts {
    int sites = 8;
    int p = 6;
    double lambda = 1.0;
    double s_min = 0.0;
    double s_max = 1.0;
    int s_points = 21;
    double t_max = 50.0;
    int samples = 500;
};

struct ClockOpts {
    std::string gates_file;
    int qubits = 1;
};

struct DecomposeOpts {
    std::string op = "identity";  // identity | pauli_x | cnot | random
    int sites = 1;
};

struct TspOpts {
    int cities = 3;
    std::string instance_file;  // empty = random instance from the seed
};

std::vector<Artifact> run_butterfly(const ButterflyOpts &opts, const Common &common);
std::vector<Artifact> run_density(const DensityOpts &opts, const Common &common);
std::vector<Artifact> run_anneal_prob(const AnnealProbOpts &opts, const Common &common);
std::vector<Artifact> run_gap(const GapOpts &opts, const Common &common,
                              std::string &report);
std::vector<Artifact> run_phase_diagram(const PhaseDiagramOpts &opts,
                                        const Common &common);
std::vector<Artifact> run_otoc(const OtocOpts &opts, const Common &common);
std::vector<Artifact> run_clock(const ClockOpts &opts, const Common &common,
                                std::string &report);
std::vector<Artifact> run_decompose(const DecomposeOpts &opts, const Common &common,
                                    std::string &report);
std::vector<Artifact> run_tsp(const TspOpts &opts, const Common &common,
                              std::string &report);

}  // namespace aqsim
