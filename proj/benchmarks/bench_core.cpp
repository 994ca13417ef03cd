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

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "aqs/algebra.hpp"
#include "aqs/anneal.hpp"
#include "aqs/dense.hpp"
#include "aqs/models.hpp"
#include "aqs/otoc.hpp"
#include "aqs/schedule.hpp"
#include "aqs/semiclassical.hpp"
#include "aqs/universality.hpp"

namespace {

void BM_SparseProduct(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    auto chain = aqs::build_majorana_chain({L, 2});
    auto field = aqs::build_transverse_field(L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain * field);
    }
}
BENCHMARK(BM_SparseProduct)->Arg(8)->Arg(10)->Arg(12);

void BM_HofstadterSpectrum(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    aqs::LatticeSpec spec;
    spec.width = n;
    spec.height = n;
    spec.flux = aqs::Rational(1, 11);
    auto h = aqs::build_hofstadter_single_particle(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(aqs::spectrum(h));
    }
}
BENCHMARK(BM_HofstadterSpectrum)->Arg(10)->Arg(20);

void BM_Evolve(benchmark::State &state) {
    aqs::LatticeSpec spec;
    spec.width = static_cast<int>(state.range(0));
    spec.height = static_cast<int>(state.range(0));
    spec.flux = aqs::Rational(1, 3);
    aqs::AnnealProblem problem;
    problem.h0 = aqs::build_hofstadter_single_particle(spec);
    problem.h1 = aqs::build_xx_driver_single_particle(spec);
    problem.schedule = aqs::Schedule{aqs::ScheduleKind::exp_decay, 1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(aqs::evolve(problem, 5.0, {0.0, 5.0}));
    }
}
BENCHMARK(BM_Evolve)->Arg(3)->Arg(6);

void BM_FindThetaMin(benchmark::State &state) {
    aqs::PotentialSpec spec;
    spec.p = 6;
    spec.s = 0.7;
    spec.lambda = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(aqs::find_theta_min(spec));
    }
}
BENCHMARK(BM_FindThetaMin);

void BM_ClassifyTransition(benchmark::State &state) {
    std::vector<double> grid(101);
    for (int i = 0; i <= 100; ++i) {
        grid[i] = i / 100.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(aqs::classify_transition(6, 1.0, grid, 1000, 1));
    }
}
BENCHMARK(BM_ClassifyTransition);

void BM_ComputeF(benchmark::State &state) {
    const int sites = static_cast<int>(state.range(0));
    auto h = aqs::build_majorana_chain({sites, 2}) * aqs::cxd(0.5, 0.0) +
             aqs::build_transverse_field(sites) * aqs::cxd(0.5, 0.0);
    aqs::OtocSpec spec;
    spec.hamiltonian = h;
    spec.v_op = aqs::mean_transverse_magnetization(sites);
    spec.psi0 = aqs::StateVector(aqs::ground_state(h), aqs::BasisKind::occupation);
    spec.t_max = 50.0;
    spec.samples = 100;
    for (auto _ : state) {
        benchmark::DoNotOptimize(aqs::compute_F(spec));
    }
}
BENCHMARK(BM_ComputeF)->Arg(6)->Arg(8);

void BM_Decompose(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    auto op = aqs::build_cnot(aqs::SiteIndex(0), aqs::SiteIndex(L - 1), L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(aqs::decompose_operator(op, L));
    }
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
