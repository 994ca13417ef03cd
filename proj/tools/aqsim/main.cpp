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

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aqs/errors.hpp"
#include "artifacts.hpp"
#include "experiments.hpp"
#include "render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;
constexpr int kExitIo = 4;

using aqsim::Common;
using Params = std::map<std::string, std::string>;

/// Registers the flags every subcommand shares. The config file itself is
/// expanded into synthetic arguments before parsing (see expand_config), so
/// the --config option here only provides help text and arity checking.
void add_common(CLI::App *sub, Common &common) {
    // Config-derived arguments precede explicit CLI arguments, so taking the
    // last occurrence implements CLI-over-file precedence.
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--threads", common.threads,
                    "Worker pool size; 0 uses all cores");
    sub->add_option("--seed", common.seed, "Seed for all randomness");
    sub->add_option("--out", common.out, "Output directory");
    sub->add_option("--config", common.config,
                    "Flat key-value config file; CLI flags override it");
}

std::string trim(const std::string &s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

/// Pulls --config out of the argument list and splices the file's key-value
/// pairs in right after the subcommand name. Keys are the long option names
/// without the leading dashes; lines are `key value` or `key = value`, with
/// '#' comments. Unknown keys then fail parsing like any unknown flag.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw aqs::InvalidSpec("--config needs a file path");
            }
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (path.empty()) {
        return args;
    }
    if (args.empty()) {
        throw aqs::InvalidSpec("--config requires a subcommand");
    }
    std::ifstream in(path);
    if (!in) {
        throw aqs::InvalidSpec("cannot open config file " + path);
    }
    std::vector<std::string> expanded;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        std::size_t split = t.find_first_of("= \t");
        if (split == std::string::npos) {
            throw aqs::InvalidSpec("config line has no value: " + t);
        }
        std::string key = trim(t.substr(0, split));
        std::string value = trim(t.substr(split + 1));
        if (!value.empty() && value[0] == '=') {
            value = trim(value.substr(1));
        }
        if (key.empty() || value.empty()) {
            throw aqs::InvalidSpec("malformed config line: " + t);
        }
        expanded.push_back("--" + key);
        expanded.push_back(value);
    }
    std::vector<std::string> out;
    out.push_back(args.front());
    out.insert(out.end(), expanded.begin(), expanded.end());
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

Params common_params(const std::string &subcommand, const Common &common) {
    return {{"subcommand", subcommand},
            {"threads", std::to_string(common.threads)},
            {"seed", std::to_string(common.seed)}};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Lattice spectra, adiabatic evolution, phase classification, "
                 "and OTOC experiments"};
    app.require_subcommand(1);

    std::function<void()> runner;

    // butterfly
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::ButterflyOpts>();
        CLI::App *sub = app.add_subcommand("butterfly",
                                           "Spectrum sweep over rational fluxes");
        add_common(sub, *common);
        sub->add_option("--width", opts->width, "Lattice width");
        sub->add_option("--height", opts->height, "Lattice height");
        sub->add_option("--flux-den", opts->flux_den,
                        "Flux denominator q; sweeps k/q for k=1..q-1");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("butterfly", *common);
                params["width"] = aqsim::fmt(opts->width);
                params["height"] = aqsim::fmt(opts->height);
                params["flux_den"] = aqsim::fmt(opts->flux_den);
                aqsim::write_artifacts(common->out, "butterfly", params,
                                       aqsim::run_butterfly(*opts, *common));
            };
        });
    }

    // density
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::DensityOpts>();
        CLI::App *sub = app.add_subcommand(
            "density", "Final-time site densities of an annealed lattice particle");
        add_common(sub, *common);
        sub->add_option("--width", opts->width, "Lattice width");
        sub->add_option("--height", opts->height, "Lattice height");
        sub->add_option("--flux-num", opts->flux_num, "Flux numerator");
        sub->add_option("--flux-den", opts->flux_den, "Flux denominator");
        sub->add_option("--schedule", opts->schedule,
                        "exp_decay | inv_log | arctan_finite");
        sub->add_option("--rate", opts->rate, "exp_decay rate a");
        sub->add_option("--tau", opts->tau, "arctan_finite horizon");
        sub->add_option("--t-end", opts->t_end, "Evolution time");
        sub->add_option("--rel-tol", opts->rel_tol, "Integrator tolerance");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("density", *common);
                params["width"] = aqsim::fmt(opts->width);
                params["height"] = aqsim::fmt(opts->height);
                params["flux_num"] = aqsim::fmt(opts->flux_num);
                params["flux_den"] = aqsim::fmt(opts->flux_den);
                params["schedule"] = opts->schedule;
                params["rate"] = aqsim::fmt(opts->rate);
                params["tau"] = aqsim::fmt(opts->tau);
                params["t_end"] = aqsim::fmt(opts->t_end);
                params["rel_tol"] = aqsim::fmt(opts->rel_tol);
                aqsim::write_artifacts(common->out, "density", params,
                                       aqsim::run_density(*opts, *common));
            };
        });
    }

    // anneal_prob
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::AnnealProbOpts>();
        CLI::App *sub = app.add_subcommand(
            "anneal_prob", "Eigenstate occupation probabilities along an anneal");
        add_common(sub, *common);
        sub->add_option("--width", opts->width, "Lattice width");
        sub->add_option("--height", opts->height, "Lattice height");
        sub->add_option("--flux-num", opts->flux_num, "Flux numerator");
        sub->add_option("--flux-den", opts->flux_den, "Flux denominator");
        sub->add_option("--schedule", opts->schedule,
                        "exp_decay | inv_log | arctan_finite");
        sub->add_option("--rate", opts->rate, "exp_decay rate a");
        sub->add_option("--tau", opts->tau, "arctan_finite horizon");
        sub->add_option("--gamma-stop", opts->gamma_stop,
                        "Stop when the schedule reaches this value (exp_decay)");
        sub->add_option("--t-end", opts->t_end,
                        "Evolution time; 0 derives it from the schedule");
        sub->add_option("--rel-tol", opts->rel_tol, "Integrator tolerance");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("anneal_prob", *common);
                params["width"] = aqsim::fmt(opts->width);
                params["height"] = aqsim::fmt(opts->height);
                params["flux_num"] = aqsim::fmt(opts->flux_num);
                params["flux_den"] = aqsim::fmt(opts->flux_den);
                params["schedule"] = opts->schedule;
                params["rate"] = aqsim::fmt(opts->rate);
                params["tau"] = aqsim::fmt(opts->tau);
                params["gamma_stop"] = aqsim::fmt(opts->gamma_stop);
                params["t_end"] = aqsim::fmt(opts->t_end);
                params["rel_tol"] = aqsim::fmt(opts->rel_tol);
                aqsim::write_artifacts(common->out, "anneal_prob", params,
                                       aqsim::run_anneal_prob(*opts, *common));
            };
        });
    }

    // gap
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::GapOpts>();
        CLI::App *sub =
            app.add_subcommand("gap", "Spectral gap along the interpolation path");
        add_common(sub, *common);
        sub->add_option("--width", opts->width, "Lattice width");
        sub->add_option("--height", opts->height, "Lattice height");
        sub->add_option("--flux-num", opts->flux_num, "Flux numerator");
        sub->add_option("--flux-den", opts->flux_den, "Flux denominator");
        sub->add_option("--s-points", opts->s_points, "Interpolation grid points");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("gap", *common);
                params["width"] = aqsim::fmt(opts->width);
                params["height"] = aqsim::fmt(opts->height);
                params["flux_num"] = aqsim::fmt(opts->flux_num);
                params["flux_den"] = aqsim::fmt(opts->flux_den);
                params["s_points"] = aqsim::fmt(opts->s_points);
                std::string report;
                auto artifacts = aqsim::run_gap(*opts, *common, report);
                aqsim::write_artifacts(common->out, "gap", params, artifacts);
                std::cout << report;
            };
        });
    }

    // phase_diagram
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::PhaseDiagramOpts>();
        CLI::App *sub = app.add_subcommand(
            "phase_diagram", "Mean-field minimizer path and transition orders");
        add_common(sub, *common);
        sub->add_option("--p", opts->p, "Coupling range p");
        sub->add_option("--lambda", opts->lambda, "Chain weight in [0, 1]");
        sub->add_option("--s-points", opts->s_points, "s grid points");
        sub->add_option("--grid-size", opts->grid_size, "theta grid intervals");
        sub->add_option("--slice-s", opts->slice_s,
                        "Also emit the potential slice at this s (negative: off)");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("phase_diagram", *common);
                params["p"] = aqsim::fmt(opts->p);
                params["lambda"] = aqsim::fmt(opts->lambda);
                params["s_points"] = aqsim::fmt(opts->s_points);
                params["grid_size"] = aqsim::fmt(opts->grid_size);
                params["slice_s"] = aqsim::fmt(opts->slice_s);
                aqsim::write_artifacts(common->out, "phase_diagram", params,
                                       aqsim::run_phase_diagram(*opts, *common));
            };
        });
    }

    // otoc
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::OtocOpts>();
        CLI::App *sub = app.add_subcommand(
            "otoc", "Out-of-time-ordered correlator sweep across s");
        add_common(sub, *common);
        sub->add_option("--sites", opts->sites, "Chain sites N");
        sub->add_option("--p", opts->p, "Coupling range p");
        sub->add_option("--lambda", opts->lambda, "Chain weight in [0, 1]");
        sub->add_option("--s-min", opts->s_min, "Sweep start");
        sub->add_option("--s-max", opts->s_max, "Sweep end");
        sub->add_option("--s-points", opts->s_points, "Sweep points");
        sub->add_option("--t-max", opts->t_max, "Correlator horizon");
        sub->add_option("--samples", opts->samples, "Time samples");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("otoc", *common);
                params["sites"] = aqsim::fmt(opts->sites);
                params["p"] = aqsim::fmt(opts->p);
                params["lambda"] = aqsim::fmt(opts->lambda);
                params["s_min"] = aqsim::fmt(opts->s_min);
                params["s_max"] = aqsim::fmt(opts->s_max);
                params["s_points"] = aqsim::fmt(opts->s_points);
                params["t_max"] = aqsim::fmt(opts->t_max);
                params["samples"] = aqsim::fmt(opts->samples);
                aqsim::write_artifacts(common->out, "otoc", params,
                                       aqsim::run_otoc(*opts, *common));
            };
        });
    }

    // clock
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::ClockOpts>();
        CLI::App *sub = app.add_subcommand(
            "clock", "History-state diagnostics for a gate list");
        add_common(sub, *common);
        sub->add_option("--gates", opts->gates_file, "Gate list file")->required();
        sub->add_option("--qubits", opts->qubits, "Logical qubits");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("clock", *common);
                params["gates"] = opts->gates_file;
                params["qubits"] = aqsim::fmt(opts->qubits);
                std::string report;
                auto artifacts = aqsim::run_clock(*opts, *common, report);
                aqsim::write_artifacts(common->out, "clock", params, artifacts);
                std::cout << report;
            };
        });
    }

    // decompose
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::DecomposeOpts>();
        CLI::App *sub = app.add_subcommand(
            "decompose", "Normal-ordered ladder decomposition of an operator");
        add_common(sub, *common);
        sub->add_option("--op", opts->op, "identity | pauli_x | cnot | random");
        sub->add_option("--sites", opts->sites, "Sites L");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("decompose", *common);
                params["op"] = opts->op;
                params["sites"] = aqsim::fmt(opts->sites);
                std::string report;
                auto artifacts = aqsim::run_decompose(*opts, *common, report);
                aqsim::write_artifacts(common->out, "decompose", params, artifacts);
                std::cout << report;
            };
        });
    }

    // tsp
    {
        auto common = std::make_shared<Common>();
        auto opts = std::make_shared<aqsim::TspOpts>();
        CLI::App *sub = app.add_subcommand(
            "tsp", "Tour Hamiltonian ground state against brute force");
        add_common(sub, *common);
        sub->add_option("--cities", opts->cities, "Number of cities");
        sub->add_option("--instance", opts->instance_file,
                        "Distance CSV (i,j,distance); omitted: random instance");
        sub->callback([common, opts, &runner] {
            runner = [common, opts] {
                Params params = common_params("tsp", *common);
                params["cities"] = aqsim::fmt(opts->cities);
                params["instance"] = opts->instance_file;
                std::string report;
                auto artifacts = aqsim::run_tsp(*opts, *common, report);
                aqsim::write_artifacts(common->out, "tsp", params, artifacts);
                std::cout << report;
            };
        });
    }

    // render
    {
        auto common = std::make_shared<Common>();
        auto csv_path = std::make_shared<std::string>();
        auto kind_name = std::make_shared<std::string>();
        CLI::App *sub =
            app.add_subcommand("render", "Render an SVG plot from experiment CSV");
        add_common(sub, *common);
        sub->add_option("--csv", *csv_path, "Input CSV path")->required();
        sub->add_option("--kind", *kind_name, "butterfly | density | probability")
            ->required();
        sub->callback([common, csv_path, kind_name, &runner] {
            runner = [common, csv_path, kind_name] {
                aqsim::PlotKind kind;
                if (*kind_name == "butterfly") {
                    kind = aqsim::PlotKind::butterfly;
                } else if (*kind_name == "density") {
                    kind = aqsim::PlotKind::density;
                } else if (*kind_name == "probability") {
                    kind = aqsim::PlotKind::probability;
                } else {
                    throw aqs::InvalidSpec("unknown plot kind: " + *kind_name);
                }
                std::ifstream in(*csv_path, std::ios::binary);
                if (!in) {
                    throw aqsim::IoError("cannot open CSV " + *csv_path);
                }
                std::string csv((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
                std::string svg = aqsim::render_svg(csv, kind);
                Params params = common_params("render", *common);
                params["csv"] = *csv_path;
                params["kind"] = *kind_name;
                std::string name =
                    std::filesystem::path(*csv_path).stem().string() + ".svg";
                aqsim::write_artifacts(common->out, "render", params,
                                       {{name, svg}});
            };
        });
    }

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(std::move(args));
        std::reverse(args.begin(), args.end());  // parse() expects reversed args
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const aqs::Error &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        runner();
    } catch (const aqsim::IoError &e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const aqs::NonConvergence &e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const aqs::StepFailure &e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const aqs::DiagonalizationFailure &e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const aqs::Error &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitOk;
}
