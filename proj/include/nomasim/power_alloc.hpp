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

#ifndef NOMASIM_POWER_ALLOC_HPP
#define NOMASIM_POWER_ALLOC_HPP

#include <cstddef>
#include <vector>

#include "nomasim/siso_rates.hpp"

namespace nomasim
{

// All strategies operate on a strength vector s_k = |h_k|^2 / N_k in the
// canonical SIC order (non-increasing, position 0 = strongest) and never
// reorder users. Strengths must be positive and finite.

// Fixed ratios by ordered position: P_k = ratio_k * total.
PowerAllocation fixed_pa(const std::vector<double> &strengths, double total_power,
                         const std::vector<double> &ratios);

// Fractional transmit power control: P_k proportional to s_k^(-decay_factor),
// normalized to the budget. decay_factor = 0 gives an equal split.
PowerAllocation ftpc_pa(const std::vector<double> &strengths, double total_power, double decay_factor);

struct MaxMinResult
{
    PowerAllocation allocation;
    double common_rate = 0.0; // minimum per-user rate actually achieved
};

/*!
 * Max-min fair allocation by bisection on the common target rate. Feasibility
 * of a target is decided in closed form by accumulating, through the SIC
 * interference chain, the minimum power that gives each user exactly the
 * target. The returned minimum rate is within `tolerance` of the supremum and
 * the allocation spends the full budget (leftover power is scaled back in,
 * which can only raise rates).
 */
MaxMinResult maxmin_pa(const std::vector<double> &strengths, double total_power, double tolerance);

// Throughput-maximal allocation: the entire budget to the strongest user
// (ties broken by lower index). Starves every other user by construction.
PowerAllocation sumrate_optimal_pa(const std::vector<double> &strengths, double total_power);

/*!
 * Two-user allocation treating the weak user like a primary whose rate target
 * binds first: the strong user receives the largest power that still leaves
 * the weak user at least `weak_target_rate`. Throws infeasible_error (with
 * the achievable rate as lower bound) when the target is unreachable even
 * with all power on the weak user.
 */
PowerAllocation cr_inspired_pa(const std::vector<double> &strengths, double total_power,
                               double weak_target_rate);

/*!
 * Two-user allocation that guarantees each user a strictly higher rate than
 * an OMA benchmark computed from the given bandwidth split and OMA power
 * ratios. The feasible strong-user power fractions form an interval
 * (alpha_low, alpha_high); the midpoint is returned. Throws infeasible_error
 * carrying both interval edges when it is empty (e.g. symmetric strengths).
 */
PowerAllocation dynamic_pa(const std::vector<double> &strengths, double total_power,
                           const BandwidthSplit &oma_split, const std::vector<double> &oma_ratios);

// Interval of strong-user power fractions where NOMA beats the OMA benchmark
// per user; exposed for testing and reporting.
struct DynamicPaInterval
{
    double alpha_low = 0.0;
    double alpha_high = 0.0;
};

DynamicPaInterval dynamic_pa_interval(const std::vector<double> &strengths, double total_power,
                                      const BandwidthSplit &oma_split, const std::vector<double> &oma_ratios);

// Strategy selection for config-driven experiments.
struct PaStrategy
{
    enum class Kind
    {
        fixed,
        ftpc,
        max_min,
        sum_rate_optimal,
        cr_inspired,
        dynamic
    };

    Kind kind = Kind::fixed;
    std::vector<double> fixed_ratios;
    double ftpc_decay = 1.0;
    double maxmin_tolerance = 1e-9;
    double cr_weak_target = 1.0;
    std::vector<double> dynamic_oma_split;  // bandwidth fractions
    std::vector<double> dynamic_oma_ratios; // power ratios of the benchmark
};

PowerAllocation apply_pa_strategy(const PaStrategy &strategy, const std::vector<double> &strengths,
                                  double total_power);

// Downlink NOMA rates directly from strengths (noise already folded in);
// convenience used by the strategies and the experiment runner.
std::vector<double> downlink_rates_from_strengths(const std::vector<double> &strengths,
                                                  const std::vector<double> &powers);

} // namespace nomasim

#endif
