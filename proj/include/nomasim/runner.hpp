// SPDX-License-Identifier: Apache-2.0
//
// noma-sim: link-level simulation library for power-domain NOMA
// Copyright (C) 2026 the noma-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NOMASIM_RUNNER_HPP
#define NOMASIM_RUNNER_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace nomasim
{

enum class ExperimentKind
{
    rate_region,
    sum_capacity,
    pa_bench,
    pairing_bench,
    mimo_ergodic,
    coop_outage,
    crs_sweep
};

struct RateRegionParams
{
    double strong_gain = 10.0; // |h| amplitude
    double weak_gain = 1.0;
    double noise_psd = 1.0;
    double total_power = 10.0;
    std::size_t grid_points = 1001;
};

struct SumCapacityParams
{
    double strong_gain = 10.0;
    double weak_gain = 1.0;
    double noise_psd = 1.0;
    double total_power = 10.0;
    std::vector<double> power_ratios{0.45, 0.55}; // strong first
    std::size_t grid_points = 101;
};

struct PaBenchParams
{
    std::vector<double> strengths{100.0, 1.0}; // |h|^2 / N, descending
    double total_power = 10.0;
    std::vector<double> fixed_ratios{0.2, 0.8};
    double ftpc_decay = 1.0;
    double maxmin_tolerance = 1e-9;
    double cr_weak_target = 1.0;
    std::vector<double> dynamic_oma_split{0.5, 0.5};
    std::vector<double> dynamic_oma_ratios{0.5, 0.5};
};

struct PairingBenchParams
{
    std::vector<double> strengths; // any order; runner sorts
    double pair_power = 10.0;      // budget per NOMA pair / leftover block
    std::vector<double> fpa_ratios{0.2, 0.8};
};

struct MimoErgodicParams
{
    std::size_t bs_antennas = 2;
    std::size_t ue_antennas = 2;
    double alpha_strong = 0.4;
    std::vector<double> snr_db{15.0, 20.0, 25.0, 30.0, 35.0};
    std::vector<double> weak_attenuation{1.0, 0.25, 0.0625};
};

struct CoopOutageParams
{
    std::vector<double> direct_msg{1.0, 0.5}; // Rayleigh mean-square gains, strongest first
    double inter_msg = 0.5;                   // strong-to-weak link mean-square gain
    std::vector<double> alpha{0.2, 0.8};      // direct-phase power fractions
    double relay_budget_fraction = 0.05;      // slot budget as a fraction of the total power
    std::vector<double> snr_db{0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
    std::vector<double> target_rates{1.0, 0.5};
    double prelog = 0.5;
};

struct CrsSweepParams
{
    double gain_sd = 1.0; // power gains
    double gain_sr = 20.0;
    double gain_rd = 1.0;
    double a1 = 0.6;
    double a2 = 0.4;
    double p_db_min = 0.0;
    double p_db_max = 40.0;
    double p_db_step = 1.0;
    bool joint_detection = false;
};

struct ExperimentConfig
{
    ExperimentKind kind = ExperimentKind::rate_region;
    std::uint64_t seed = 1;
    std::size_t trials = 1;
    std::string output_path;
    std::variant<RateRegionParams, SumCapacityParams, PaBenchParams, PairingBenchParams,
                 MimoErgodicParams, CoopOutageParams, CrsSweepParams>
        params;
};

struct RunOptions
{
    unsigned threads = 1; // affects speed only, never output bytes
};

struct RunResult
{
    std::string csv;     // full artifact, header row first
    std::string summary; // human-readable lines printed to stdout by run()
};

// Parse + validate a configuration; throws config_error on any unknown key,
// missing key or out-of-range value, before any computation.
ExperimentConfig parse_config_text(const std::string &text);
ExperimentConfig parse_config_file(const std::string &path);

// Built-in canonical configurations backing the bundled figure sweeps.
// Known keys: fig3, fig4, fig7_trend, coop_outage.
ExperimentConfig reproduce_config(const std::string &figure_key);

// Execute an experiment into memory. Deterministic: the result is a pure
// function of (config, seed), whatever options.threads says.
RunResult run_to_memory(const ExperimentConfig &config, const RunOptions &options = {});

// Execute and write the CSV to config.output_path; returns the result too.
RunResult run(const ExperimentConfig &config, const RunOptions &options = {});

} // namespace nomasim

#endif
