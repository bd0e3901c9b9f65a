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

#include "nomasim/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "nomasim/channel.hpp"
#include "nomasim/clustering.hpp"
#include "nomasim/common.hpp"
#include "nomasim/config.hpp"
#include "nomasim/coop.hpp"
#include "nomasim/csv.hpp"
#include "nomasim/mimo.hpp"
#include "nomasim/power_alloc.hpp"
#include "nomasim/siso_rates.hpp"

namespace nomasim
{

namespace
{

constexpr std::uint64_t k_point_stream_salt = 0x706f696e74ULL;

// Run fn(0..count-1) across threads; callers aggregate by index afterwards,
// so scheduling never reaches the output bytes.
void parallel_trials(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn)
{
    if (threads <= 1 || count < 2)
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto body = [&]() {
        while (!failed.load(std::memory_order_relaxed))
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try
            {
                fn(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(body);
    for (auto &t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

double check_range(double v, double lo, double hi, const std::string &key)
{
    if (!(v >= lo) || !(v <= hi))
        throw config_error("Key '" + key + "': value " + format_double(v, 6) + " outside [" +
                           format_double(lo, 6) + ", " + format_double(hi, 6) + "].");
    return v;
}

std::size_t check_count(std::uint64_t v, std::uint64_t lo, std::uint64_t hi, const std::string &key)
{
    if (v < lo || v > hi)
        throw config_error("Key '" + key + "': value " + std::to_string(v) + " outside [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "].");
    return static_cast<std::size_t>(v);
}

void check_fractions_sum_one(const std::vector<double> &v, const std::string &key)
{
    double sum = 0.0;
    for (double x : v)
    {
        check_range(x, 0.0, 1.0, key);
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw config_error("Key '" + key + "': fractions must sum to 1.");
}

ExperimentKind kind_from_string(const std::string &name)
{
    if (name == "rate_region")
        return ExperimentKind::rate_region;
    if (name == "sum_capacity")
        return ExperimentKind::sum_capacity;
    if (name == "pa_bench")
        return ExperimentKind::pa_bench;
    if (name == "pairing_bench")
        return ExperimentKind::pairing_bench;
    if (name == "mimo_ergodic")
        return ExperimentKind::mimo_ergodic;
    if (name == "coop_outage")
        return ExperimentKind::coop_outage;
    if (name == "crs_sweep")
        return ExperimentKind::crs_sweep;
    throw config_error("Unknown experiment '" + name + "'.");
}

const char *kind_name(ExperimentKind kind)
{
    switch (kind)
    {
    case ExperimentKind::rate_region:
        return "rate_region";
    case ExperimentKind::sum_capacity:
        return "sum_capacity";
    case ExperimentKind::pa_bench:
        return "pa_bench";
    case ExperimentKind::pairing_bench:
        return "pairing_bench";
    case ExperimentKind::mimo_ergodic:
        return "mimo_ergodic";
    case ExperimentKind::coop_outage:
        return "coop_outage";
    case ExperimentKind::crs_sweep:
        return "crs_sweep";
    }
    return "?";
}

std::size_t default_trials(ExperimentKind kind)
{
    switch (kind)
    {
    case ExperimentKind::mimo_ergodic:
        return 10000;
    case ExperimentKind::coop_outage:
        return 100000;
    default:
        return 1; // deterministic sweeps ignore the trial count
    }
}

// ---------------------------------------------------------------------
// Experiment implementations
// ---------------------------------------------------------------------

struct ExperimentOutput
{
    std::string csv;
    std::vector<std::string> notes;
};

ExperimentOutput run_rate_region(const ExperimentConfig &config)
{
    const auto &p = std::get<RateRegionParams>(config.params);
    const UserChannel strong(std::complex<double>(p.strong_gain, 0.0), p.noise_psd);
    const UserChannel weak(std::complex<double>(p.weak_gain, 0.0), p.noise_psd);
    const RateRegion region = rate_region_sweep(strong, weak, p.total_power, p.grid_points);

    CsvBuilder csv({"alpha_strong", "R_weak_noma", "R_strong_noma", "R_weak_oma", "R_strong_oma"});
    for (std::size_t i = 0; i < region.noma.size(); ++i)
    {
        csv.add(region.noma[i].alpha_strong, k_csv_exact_digits)
            .add(region.noma[i].r_weak, k_csv_exact_digits)
            .add(region.noma[i].r_strong, k_csv_exact_digits)
            .add(region.oma_equal_bw[i].r_weak, k_csv_exact_digits)
            .add(region.oma_equal_bw[i].r_strong, k_csv_exact_digits);
        csv.end_row();
    }
    return {csv.str(), {}};
}

ExperimentOutput run_sum_capacity(const ExperimentConfig &config)
{
    const auto &p = std::get<SumCapacityParams>(config.params);
    const UserChannel strong(std::complex<double>(p.strong_gain, 0.0), p.noise_psd);
    const UserChannel weak(std::complex<double>(p.weak_gain, 0.0), p.noise_psd);
    const PowerAllocation pa = make_power_allocation(
        {p.power_ratios[0] * p.total_power, p.power_ratios[1] * p.total_power}, p.total_power,
        identity_ordering(2));

    CsvBuilder csv({"w", "sum_noma", "sum_oma"});
    for (const SumCapacityPoint &pt : sum_capacity_vs_bandwidth(strong, weak, pa, p.grid_points))
    {
        csv.add(pt.w, k_csv_exact_digits)
            .add(pt.sum_noma, k_csv_exact_digits)
            .add(pt.sum_oma, k_csv_exact_digits);
        csv.end_row();
    }
    return {csv.str(), {}};
}

ExperimentOutput run_pa_bench(const ExperimentConfig &config)
{
    const auto &p = std::get<PaBenchParams>(config.params);

    struct Row
    {
        const char *name;
        PowerAllocation pa;
        std::string note;
    };
    std::vector<Row> rows;
    rows.push_back({"fixed", fixed_pa(p.strengths, p.total_power, p.fixed_ratios), ""});
    rows.push_back({"ftpc", ftpc_pa(p.strengths, p.total_power, p.ftpc_decay), ""});
    rows.push_back({"max_min", maxmin_pa(p.strengths, p.total_power, p.maxmin_tolerance).allocation, ""});
    rows.push_back({"sum_rate_optimal", sumrate_optimal_pa(p.strengths, p.total_power),
                    "entire budget on the strongest user; remaining users idle"});
    rows.push_back({"cr_inspired", cr_inspired_pa(p.strengths, p.total_power, p.cr_weak_target), ""});
    const DynamicPaInterval interval = dynamic_pa_interval(
        p.strengths, p.total_power, make_bandwidth_split(p.dynamic_oma_split), p.dynamic_oma_ratios);
    rows.push_back({"dynamic",
                    dynamic_pa(p.strengths, p.total_power, make_bandwidth_split(p.dynamic_oma_split),
                               p.dynamic_oma_ratios),
                    ""});

    CsvBuilder csv({"strategy", "p_strong", "p_weak", "rate_strong", "rate_weak", "sum_rate",
                    "min_rate", "note"});
    for (const Row &row : rows)
    {
        const std::vector<double> rates = downlink_rates_from_strengths(p.strengths, row.pa.powers);
        csv.add(row.name)
            .add(row.pa.powers[0], k_csv_exact_digits)
            .add(row.pa.powers[1], k_csv_exact_digits)
            .add(rates[0], k_csv_exact_digits)
            .add(rates[1], k_csv_exact_digits)
            .add(rates[0] + rates[1], k_csv_exact_digits)
            .add(std::min(rates[0], rates[1]), k_csv_exact_digits)
            .add(row.note);
        csv.end_row();
    }

    std::vector<std::string> notes;
    notes.push_back("dynamic feasible alpha interval [" + format_double(interval.alpha_low, 6) + ", " +
                    format_double(interval.alpha_high, 6) + "]");
    return {csv.str(), notes};
}

ExperimentOutput run_pairing_bench(const ExperimentConfig &config)
{
    const auto &p = std::get<PairingBenchParams>(config.params);

    // Sort descending, remembering original user ids; stable so equal
    // strengths keep their configured order.
    std::vector<std::size_t> rank_to_user(p.strengths.size());
    for (std::size_t i = 0; i < rank_to_user.size(); ++i)
        rank_to_user[i] = i;
    std::stable_sort(rank_to_user.begin(), rank_to_user.end(), [&](std::size_t a, std::size_t b) {
        return p.strengths[a] > p.strengths[b];
    });
    std::vector<double> sorted(p.strengths.size());
    for (std::size_t r = 0; r < sorted.size(); ++r)
        sorted[r] = p.strengths[rank_to_user[r]];

    const auto pair_rates = [&](double s_strong, double s_weak) {
        const std::vector<double> powers{p.fpa_ratios[0] * p.pair_power,
                                         p.fpa_ratios[1] * p.pair_power};
        const std::vector<double> noma = downlink_rates_from_strengths({s_strong, s_weak}, powers);
        const double oma = 0.5 * std::log2(1.0 + powers[0] * s_strong / 0.5) +
                           0.5 * std::log2(1.0 + powers[1] * s_weak / 0.5);
        return std::pair<double, double>{noma[0] + noma[1], oma};
    };

    CsvBuilder csv({"scheme", "slot", "user_a", "user_b", "kind", "sum_rate_noma", "sum_rate_oma"});
    const auto emit_plan = [&](const char *scheme, const PairingPlan &plan) {
        std::size_t slot = 0;
        for (const auto &[strong_rank, weak_rank] : plan.pairs)
        {
            const auto [noma, oma] = pair_rates(sorted[strong_rank], sorted[weak_rank]);
            csv.add(scheme)
                .add(static_cast<std::uint64_t>(slot++))
                .add(static_cast<std::uint64_t>(rank_to_user[strong_rank]))
                .add(static_cast<std::uint64_t>(rank_to_user[weak_rank]))
                .add("pair")
                .add(noma, k_csv_exact_digits)
                .add(oma, k_csv_exact_digits);
            csv.end_row();
        }
        for (const Leftover &left : plan.leftovers)
        {
            const double oma = std::log2(1.0 + p.pair_power * sorted[left.user]);
            csv.add(scheme)
                .add(static_cast<std::uint64_t>(slot++))
                .add(static_cast<std::uint64_t>(rank_to_user[left.user]))
                .add_empty()
                .add("leftover_oma")
                .add_empty()
                .add(oma, k_csv_exact_digits);
            csv.end_row();
        }
    };

    if (sorted.size() % 2 == 0)
    {
        emit_plan("best_worst", best_worst_pairing(sorted));
        emit_plan("two_group", two_group_pairing(sorted));
    }
    emit_plan("hybrid", hybrid_assign(sorted));
    return {csv.str(), {}};
}

ExperimentOutput run_mimo_ergodic(const ExperimentConfig &config, const RunOptions &options)
{
    const auto &p = std::get<MimoErgodicParams>(config.params);
    const std::size_t n_att = p.weak_attenuation.size();
    const std::size_t n_snr = p.snr_db.size();
    const std::size_t combos = n_att * n_snr;

    // Per-trial results indexed by (trial, attenuation, snr); the same fading
    // draw is reused across settings so gap comparisons are paired.
    std::vector<double> noma(config.trials * combos), oma(config.trials * combos);

    parallel_trials(config.trials, options.threads, [&](std::size_t t) {
        RngStream rng_user1(config.seed, t, 0);
        RngStream rng_user2(config.seed, t, 1);
        arma::cx_mat h1(p.ue_antennas, p.bs_antennas), h2_base(p.ue_antennas, p.bs_antennas);
        for (std::size_t c = 0; c < p.bs_antennas; ++c)
            for (std::size_t r = 0; r < p.ue_antennas; ++r)
                h1(r, c) = rng_user1.circular_gaussian(1.0);
        for (std::size_t c = 0; c < p.bs_antennas; ++c)
            for (std::size_t r = 0; r < p.ue_antennas; ++r)
                h2_base(r, c) = rng_user2.circular_gaussian(1.0);

        for (std::size_t a = 0; a < n_att; ++a)
        {
            const arma::cx_mat h2 = std::sqrt(p.weak_attenuation[a]) * h2_base;
            for (std::size_t s = 0; s < n_snr; ++s)
            {
                const double snr = std::pow(10.0, p.snr_db[s] / 10.0);
                const ClusterTrialRates rates =
                    cluster_noma_oma_rates(h1, h2, 0, snr, p.alpha_strong);
                const std::size_t cell = (t * n_att + a) * n_snr + s;
                noma[cell] = rates.noma_sum;
                oma[cell] = rates.oma_sum;
            }
        }
    });

    CsvBuilder csv({"snr_db", "weak_attenuation", "mean_sum_noma", "mean_sum_oma", "mean_gap",
                    "gap_ci95_low", "gap_ci95_high", "trials"});
    for (std::size_t a = 0; a < n_att; ++a)
    {
        for (std::size_t s = 0; s < n_snr; ++s)
        {
            double sum_noma = 0.0, sum_oma = 0.0, gap_sum = 0.0, gap_sq = 0.0;
            for (std::size_t t = 0; t < config.trials; ++t)
            {
                const std::size_t cell = (t * n_att + a) * n_snr + s;
                sum_noma += noma[cell];
                sum_oma += oma[cell];
                const double gap = noma[cell] - oma[cell];
                gap_sum += gap;
                gap_sq += gap * gap;
            }
            const MonteCarloSummary gap = mean_summary("gap", gap_sum, gap_sq, config.trials);
            csv.add(p.snr_db[s], k_csv_mc_digits)
                .add(p.weak_attenuation[a], k_csv_mc_digits)
                .add(sum_noma / static_cast<double>(config.trials), k_csv_mc_digits)
                .add(sum_oma / static_cast<double>(config.trials), k_csv_mc_digits)
                .add(gap.mean, k_csv_mc_digits)
                .add(gap.ci95_low, k_csv_mc_digits)
                .add(gap.ci95_high, k_csv_mc_digits)
                .add(static_cast<std::uint64_t>(config.trials));
            csv.end_row();
        }
    }
    return {csv.str(), {}};
}

// Builds the two-phase power plan for one total-power point of the
// cooperative outage experiment (2 users: one relay slot).
PhasePowerPlan coop_plan(const CoopOutageParams &p, double total_power)
{
    PhasePowerPlan plan;
    plan.direct_phase = make_power_allocation(
        {p.alpha[0] * total_power, p.alpha[1] * total_power}, total_power, identity_ordering(2));
    const double slot_budget = p.relay_budget_fraction * total_power;
    plan.relay_slots.push_back(
        make_power_allocation({slot_budget}, slot_budget, identity_ordering(1)));
    return plan;
}

ExperimentOutput run_coop_outage(const ExperimentConfig &config, const RunOptions &options)
{
    const auto &p = std::get<CoopOutageParams>(config.params);

    CoopOutageScenario scenario;
    scenario.direct.push_back(ChannelModel::rayleigh(p.direct_msg[0], 1.0));
    scenario.direct.push_back(ChannelModel::rayleigh(p.direct_msg[1], 1.0));
    scenario.relay_links.push_back({ChannelModel::rayleigh(p.inter_msg, 1.0)});

    OutageSpec outage;
    outage.target_rates = p.target_rates;
    outage.prelog = p.prelog;

    std::vector<CoopOutageResult> results(p.snr_db.size());
    parallel_trials(p.snr_db.size(), options.threads, [&](std::size_t i) {
        const double power = std::pow(10.0, p.snr_db[i] / 10.0);
        const std::uint64_t point_seed = substream_seed(config.seed, i, k_point_stream_salt);
        results[i] =
            cnoma_outage_mc(scenario, coop_plan(p, power), outage, config.trials, point_seed);
    });

    std::size_t violations = 0;
    CsvBuilder csv({"snr_db", "user", "outage_coop", "coop_ci95_low", "coop_ci95_high",
                    "outage_direct", "direct_ci95_low", "direct_ci95_high", "trials"});
    for (std::size_t i = 0; i < p.snr_db.size(); ++i)
    {
        violations += results[i].pairing_violations;
        for (std::size_t u = 0; u < 2; ++u)
        {
            const MonteCarloSummary &coop = results[i].cooperative[u];
            const MonteCarloSummary &direct = results[i].non_cooperative[u];
            csv.add(p.snr_db[i], k_csv_mc_digits)
                .add(static_cast<std::uint64_t>(u))
                .add(coop.mean, k_csv_mc_digits)
                .add(coop.ci95_low, k_csv_mc_digits)
                .add(coop.ci95_high, k_csv_mc_digits)
                .add(direct.mean, k_csv_mc_digits)
                .add(direct.ci95_low, k_csv_mc_digits)
                .add(direct.ci95_high, k_csv_mc_digits)
                .add(static_cast<std::uint64_t>(config.trials));
            csv.end_row();
        }
    }
    return {csv.str(), {"cooperative-worse-than-direct trials: " + std::to_string(violations)}};
}

ExperimentOutput run_crs_sweep(const ExperimentConfig &config)
{
    const auto &p = std::get<CrsSweepParams>(config.params);
    CoopTopology topo;
    topo.sd_power_gain = p.gain_sd;
    topo.sr_power_gain = p.gain_sr;
    topo.rd_power_gain = p.gain_rd;
    topo.noise_psd = 1.0;

    const std::size_t steps =
        static_cast<std::size_t>(std::llround((p.p_db_max - p.p_db_min) / p.p_db_step)) + 1;

    CsvBuilder csv({"p_db", "crs_rate_direct_symbol", "crs_rate_relayed_symbol", "crs_sum_rate",
                    "conventional_df_rate", "crs_minus_conventional"});
    for (std::size_t i = 0; i < steps; ++i)
    {
        const double p_db = p.p_db_min + static_cast<double>(i) * p.p_db_step;
        const double power = std::pow(10.0, p_db / 10.0);
        const CrsRates crs = crs_noma_capacity(topo, p.a1, p.a2, power, p.joint_detection);
        const double conventional = conventional_df_capacity(topo, power);
        csv.add(p_db, k_csv_exact_digits)
            .add(crs.symbol_direct, k_csv_exact_digits)
            .add(crs.symbol_relayed, k_csv_exact_digits)
            .add(crs.sum, k_csv_exact_digits)
            .add(conventional, k_csv_exact_digits)
            .add(crs.sum - conventional, k_csv_exact_digits);
        csv.end_row();
    }
    return {csv.str(), {}};
}

// ---------------------------------------------------------------------
// Configuration parsing
// ---------------------------------------------------------------------

RateRegionParams read_rate_region(ConfigView &view)
{
    RateRegionParams p;
    p.strong_gain = check_range(view.get_double("region.strong_gain"), 1e-9, 1e6, "region.strong_gain");
    p.weak_gain = check_range(view.get_double("region.weak_gain"), 1e-9, 1e6, "region.weak_gain");
    p.noise_psd = check_range(view.get_double("region.noise_psd", 1.0), 1e-12, 1e6, "region.noise_psd");
    p.total_power =
        check_range(view.get_double("region.total_power"), 1e-9, 1e9, "region.total_power");
    p.grid_points = check_count(view.get_u64("region.grid_points", 1001), 2, 200001, "region.grid_points");
    if (p.strong_gain < p.weak_gain)
        throw config_error("region.strong_gain must be at least region.weak_gain.");
    return p;
}

SumCapacityParams read_sum_capacity(ConfigView &view)
{
    SumCapacityParams p;
    p.strong_gain = check_range(view.get_double("sumcap.strong_gain"), 1e-9, 1e6, "sumcap.strong_gain");
    p.weak_gain = check_range(view.get_double("sumcap.weak_gain"), 1e-9, 1e6, "sumcap.weak_gain");
    p.noise_psd = check_range(view.get_double("sumcap.noise_psd", 1.0), 1e-12, 1e6, "sumcap.noise_psd");
    p.total_power = check_range(view.get_double("sumcap.total_power"), 1e-9, 1e9, "sumcap.total_power");
    p.power_ratios = view.get_double_list("sumcap.power_ratios");
    if (p.power_ratios.size() != 2)
        throw config_error("sumcap.power_ratios must list exactly 2 values (strong first).");
    check_fractions_sum_one(p.power_ratios, "sumcap.power_ratios");
    p.grid_points = check_count(view.get_u64("sumcap.grid_points", 101), 2, 200001, "sumcap.grid_points");
    if (p.strong_gain < p.weak_gain)
        throw config_error("sumcap.strong_gain must be at least sumcap.weak_gain.");
    return p;
}

PaBenchParams read_pa_bench(ConfigView &view)
{
    PaBenchParams p;
    p.strengths = view.get_double_list("pa.strengths");
    if (p.strengths.size() != 2)
        throw config_error("pa.strengths must list exactly 2 users (strong first).");
    for (double s : p.strengths)
        check_range(s, 1e-12, 1e9, "pa.strengths");
    if (p.strengths[0] < p.strengths[1])
        throw config_error("pa.strengths must be non-increasing.");
    p.total_power = check_range(view.get_double("pa.total_power"), 1e-9, 1e9, "pa.total_power");
    p.fixed_ratios = view.get_double_list("pa.fixed_ratios");
    if (p.fixed_ratios.size() != 2)
        throw config_error("pa.fixed_ratios must list exactly 2 values.");
    check_fractions_sum_one(p.fixed_ratios, "pa.fixed_ratios");
    p.ftpc_decay = check_range(view.get_double("pa.ftpc_decay", 1.0), 0.0, 100.0, "pa.ftpc_decay");
    p.maxmin_tolerance =
        check_range(view.get_double("pa.maxmin_tolerance", 1e-9), 1e-15, 1.0, "pa.maxmin_tolerance");
    p.cr_weak_target =
        check_range(view.get_double("pa.cr_weak_target", 1.0), 1e-9, 100.0, "pa.cr_weak_target");
    p.dynamic_oma_split = view.get_double_list("pa.dynamic_oma_split");
    if (p.dynamic_oma_split.size() != 2)
        throw config_error("pa.dynamic_oma_split must list exactly 2 fractions.");
    check_fractions_sum_one(p.dynamic_oma_split, "pa.dynamic_oma_split");
    p.dynamic_oma_ratios = view.get_double_list("pa.dynamic_oma_ratios");
    if (p.dynamic_oma_ratios.size() != 2)
        throw config_error("pa.dynamic_oma_ratios must list exactly 2 fractions.");
    check_fractions_sum_one(p.dynamic_oma_ratios, "pa.dynamic_oma_ratios");
    return p;
}

PairingBenchParams read_pairing_bench(ConfigView &view)
{
    PairingBenchParams p;
    p.strengths = view.get_double_list("pairing.strengths");
    if (p.strengths.empty() || p.strengths.size() > 64)
        throw config_error("pairing.strengths must list between 1 and 64 users.");
    for (double s : p.strengths)
        check_range(s, 1e-12, 1e9, "pairing.strengths");
    p.pair_power = check_range(view.get_double("pairing.pair_power"), 1e-9, 1e9, "pairing.pair_power");
    p.fpa_ratios = view.get_double_list("pairing.fpa_ratios");
    if (p.fpa_ratios.size() != 2)
        throw config_error("pairing.fpa_ratios must list exactly 2 values (strong first).");
    check_fractions_sum_one(p.fpa_ratios, "pairing.fpa_ratios");
    return p;
}

MimoErgodicParams read_mimo_ergodic(ConfigView &view)
{
    MimoErgodicParams p;
    p.bs_antennas = check_count(view.get_u64("mimo.bs_antennas", 2), 1, 8, "mimo.bs_antennas");
    p.ue_antennas = check_count(view.get_u64("mimo.ue_antennas", 2), 1, 8, "mimo.ue_antennas");
    if (p.ue_antennas < p.bs_antennas)
        throw config_error("mimo.ue_antennas must be at least mimo.bs_antennas for zero-forcing.");
    p.alpha_strong = check_range(view.get_double("mimo.alpha_strong", 0.4), 0.0, 1.0, "mimo.alpha_strong");
    p.snr_db = view.get_double_list("mimo.snr_db");
    for (double s : p.snr_db)
        check_range(s, -50.0, 100.0, "mimo.snr_db");
    p.weak_attenuation = view.get_double_list("mimo.weak_attenuation");
    for (double a : p.weak_attenuation)
        check_range(a, 1e-9, 1e3, "mimo.weak_attenuation");
    return p;
}

CoopOutageParams read_coop_outage(ConfigView &view)
{
    CoopOutageParams p;
    p.direct_msg = view.get_double_list("coop.direct_msg");
    if (p.direct_msg.size() != 2)
        throw config_error("coop.direct_msg must list exactly 2 mean-square gains (strong first).");
    for (double g : p.direct_msg)
        check_range(g, 1e-12, 1e9, "coop.direct_msg");
    if (p.direct_msg[0] < p.direct_msg[1])
        throw config_error("coop.direct_msg must be non-increasing (strongest user first).");
    p.inter_msg = check_range(view.get_double("coop.inter_msg"), 1e-12, 1e9, "coop.inter_msg");
    p.alpha = view.get_double_list("coop.alpha");
    if (p.alpha.size() != 2)
        throw config_error("coop.alpha must list exactly 2 fractions (strong first).");
    check_fractions_sum_one(p.alpha, "coop.alpha");
    p.relay_budget_fraction =
        check_range(view.get_double("coop.relay_budget_fraction", 0.05), 1e-9, 10.0,
                    "coop.relay_budget_fraction");
    p.snr_db = view.get_double_list("coop.snr_db");
    for (double s : p.snr_db)
        check_range(s, -50.0, 100.0, "coop.snr_db");
    p.target_rates = view.get_double_list("coop.target_rates");
    if (p.target_rates.size() != 2)
        throw config_error("coop.target_rates must list exactly 2 rates.");
    for (double r : p.target_rates)
        check_range(r, 1e-9, 100.0, "coop.target_rates");
    p.prelog = view.get_double("coop.prelog", 0.5);
    if (!(p.prelog > 0.0) || p.prelog > 1.0)
        throw config_error("coop.prelog must lie in (0, 1].");
    return p;
}

CrsSweepParams read_crs_sweep(ConfigView &view)
{
    CrsSweepParams p;
    p.gain_sd = check_range(view.get_double("crs.gain_sd"), 0.0, 1e9, "crs.gain_sd");
    p.gain_sr = check_range(view.get_double("crs.gain_sr"), 0.0, 1e9, "crs.gain_sr");
    p.gain_rd = check_range(view.get_double("crs.gain_rd"), 0.0, 1e9, "crs.gain_rd");
    p.a1 = check_range(view.get_double("crs.a1", 0.6), 0.0, 1.0, "crs.a1");
    p.a2 = check_range(view.get_double("crs.a2", 0.4), 0.0, 1.0, "crs.a2");
    if (std::abs(p.a1 + p.a2 - 1.0) > 1e-9)
        throw config_error("crs.a1 + crs.a2 must equal 1.");
    if (!(p.a1 > p.a2))
        throw config_error("crs.a1 must exceed crs.a2.");
    p.p_db_min = check_range(view.get_double("crs.p_db_min", 0.0), -50.0, 100.0, "crs.p_db_min");
    p.p_db_max = check_range(view.get_double("crs.p_db_max", 40.0), -50.0, 100.0, "crs.p_db_max");
    if (p.p_db_max < p.p_db_min)
        throw config_error("crs.p_db_max must be at least crs.p_db_min.");
    p.p_db_step = check_range(view.get_double("crs.p_db_step", 1.0), 1e-6, 50.0, "crs.p_db_step");
    p.joint_detection = view.get_bool("crs.joint_detection", false);
    return p;
}

} // namespace

ExperimentConfig parse_config_text(const std::string &text)
{
    ConfigView view(parse_key_values(text));

    ExperimentConfig config;
    config.kind = kind_from_string(view.get_string("experiment"));
    config.seed = view.get_u64("seed", 1);
    config.trials = check_count(view.get_u64("trials", default_trials(config.kind)), 1,
                                100000000, "trials");
    config.output_path = view.get_string("output", "");

    switch (config.kind)
    {
    case ExperimentKind::rate_region:
        config.params = read_rate_region(view);
        break;
    case ExperimentKind::sum_capacity:
        config.params = read_sum_capacity(view);
        break;
    case ExperimentKind::pa_bench:
        config.params = read_pa_bench(view);
        break;
    case ExperimentKind::pairing_bench:
        config.params = read_pairing_bench(view);
        break;
    case ExperimentKind::mimo_ergodic:
        config.params = read_mimo_ergodic(view);
        break;
    case ExperimentKind::coop_outage:
        config.params = read_coop_outage(view);
        break;
    case ExperimentKind::crs_sweep:
        config.params = read_crs_sweep(view);
        break;
    }

    view.finish();
    return config;
}

ExperimentConfig parse_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("Cannot open config file '" + path + "'.");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

ExperimentConfig reproduce_config(const std::string &figure_key)
{
    ExperimentConfig config;
    config.seed = 12345;
    config.output_path = figure_key + ".csv";

    if (figure_key == "fig3")
    {
        config.kind = ExperimentKind::rate_region;
        config.trials = 1;
        config.params = RateRegionParams{};
    }
    else if (figure_key == "fig4")
    {
        config.kind = ExperimentKind::sum_capacity;
        config.trials = 1;
        config.params = SumCapacityParams{};
    }
    else if (figure_key == "fig7_trend")
    {
        config.kind = ExperimentKind::mimo_ergodic;
        config.trials = 10000;
        config.params = MimoErgodicParams{};
    }
    else if (figure_key == "coop_outage")
    {
        config.kind = ExperimentKind::coop_outage;
        config.trials = 100000;
        config.params = CoopOutageParams{};
    }
    else
    {
        throw config_error("Unknown figure key '" + figure_key +
                           "' (known: fig3, fig4, fig7_trend, coop_outage).");
    }
    return config;
}

RunResult run_to_memory(const ExperimentConfig &config, const RunOptions &options)
{
    ExperimentOutput output;
    switch (config.kind)
    {
    case ExperimentKind::rate_region:
        output = run_rate_region(config);
        break;
    case ExperimentKind::sum_capacity:
        output = run_sum_capacity(config);
        break;
    case ExperimentKind::pa_bench:
        output = run_pa_bench(config);
        break;
    case ExperimentKind::pairing_bench:
        output = run_pairing_bench(config);
        break;
    case ExperimentKind::mimo_ergodic:
        output = run_mimo_ergodic(config, options);
        break;
    case ExperimentKind::coop_outage:
        output = run_coop_outage(config, options);
        break;
    case ExperimentKind::crs_sweep:
        output = run_crs_sweep(config);
        break;
    }

    RunResult result;
    result.csv = std::move(output.csv);

    std::ostringstream summary;
    const std::size_t rows = std::count(result.csv.begin(), result.csv.end(), '\n') - 1;
    summary << "experiment=" << kind_name(config.kind) << " rows=" << rows
            << " seed=" << config.seed << " trials=" << config.trials << "\n";
    for (const std::string &note : output.notes)
        summary << note << "\n";
    result.summary = summary.str();
    return result;
}

RunResult run(const ExperimentConfig &config, const RunOptions &options)
{
    if (config.output_path.empty())
        throw config_error("No output path: set 'output' in the config or pass --out.");
    RunResult result = run_to_memory(config, options);
    write_text_file(config.output_path, result.csv);
    return result;
}

} // namespace nomasim
