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

#include "nomasim/power_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nomasim/common.hpp"

namespace nomasim
{

namespace
{

void check_strengths(const std::vector<double> &strengths)
{
    if (strengths.empty())
        throw std::invalid_argument("Strength vector must not be empty.");
    for (double s : strengths)
    {
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::invalid_argument("Strengths must be positive and finite.");
    }
    for (std::size_t k = 0; k + 1 < strengths.size(); ++k)
    {
        if (strengths[k] < strengths[k + 1])
            throw ordering_error("Strengths must be in canonical SIC order (non-increasing).");
    }
}

void check_total(double total_power)
{
    if (!(total_power > 0.0) || !std::isfinite(total_power))
        throw std::invalid_argument("Total power must be positive and finite.");
}

PowerAllocation wrap(std::vector<double> powers, double total)
{
    const std::size_t n = powers.size();
    return make_power_allocation(std::move(powers), total, identity_ordering(n));
}

// Minimum total power for every user to reach `target_rate` under the SIC
// interference chain; the per-user powers are accumulated strongest-first
// because user k is interfered only by users ranked above it.
double required_power_for_rate(const std::vector<double> &strengths, double target_rate,
                               std::vector<double> *powers_out)
{
    const double gamma = std::exp2(target_rate) - 1.0;
    double allocated = 0.0;
    if (powers_out)
        powers_out->resize(strengths.size());
    for (std::size_t k = 0; k < strengths.size(); ++k)
    {
        const double p = gamma * (allocated + 1.0 / strengths[k]);
        if (powers_out)
            (*powers_out)[k] = p;
        allocated += p;
    }
    return allocated;
}

} // namespace

std::vector<double> downlink_rates_from_strengths(const std::vector<double> &strengths,
                                                  const std::vector<double> &powers)
{
    std::vector<double> rates(strengths.size());
    double interference = 0.0;
    for (std::size_t k = 0; k < strengths.size(); ++k)
    {
        rates[k] = std::log2(1.0 + powers[k] * strengths[k] / (interference * strengths[k] + 1.0));
        interference += powers[k];
    }
    return rates;
}

PowerAllocation fixed_pa(const std::vector<double> &strengths, double total_power,
                         const std::vector<double> &ratios)
{
    check_strengths(strengths);
    check_total(total_power);
    if (ratios.size() != strengths.size())
        throw std::invalid_argument("Fixed-PA ratio count (" + std::to_string(ratios.size()) +
                                    ") does not match user count (" + std::to_string(strengths.size()) + ").");
    double sum = 0.0;
    for (double r : ratios)
    {
        if (!(r >= 0.0))
            throw std::invalid_argument("Fixed-PA ratios must be non-negative.");
        sum += r;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("Fixed-PA ratios must sum to 1.");

    std::vector<double> powers(ratios.size());
    for (std::size_t k = 0; k < ratios.size(); ++k)
        powers[k] = ratios[k] / sum * total_power;
    return wrap(std::move(powers), total_power);
}

PowerAllocation ftpc_pa(const std::vector<double> &strengths, double total_power, double decay_factor)
{
    check_strengths(strengths);
    check_total(total_power);
    if (!(decay_factor >= 0.0))
        throw std::invalid_argument("FTPC decay factor must be non-negative.");

    std::vector<double> weights(strengths.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < strengths.size(); ++k)
    {
        weights[k] = std::pow(strengths[k], -decay_factor);
        sum += weights[k];
    }
    std::vector<double> powers(strengths.size());
    for (std::size_t k = 0; k < strengths.size(); ++k)
        powers[k] = total_power * weights[k] / sum;
    return wrap(std::move(powers), total_power);
}

MaxMinResult maxmin_pa(const std::vector<double> &strengths, double total_power, double tolerance)
{
    check_strengths(strengths);
    check_total(total_power);
    if (!(tolerance > 0.0))
        throw std::invalid_argument("Bisection tolerance must be positive.");

    std::vector<double> powers;

    if (strengths.size() == 1)
    {
        powers = {total_power};
        const double rate = std::log2(1.0 + total_power * strengths[0]);
        return {wrap(std::move(powers), total_power), rate};
    }

    // Bracket: zero rate is feasible; the strongest user's single-user
    // capacity is infeasible once a second user needs power too.
    double lo = 0.0;
    double hi = std::log2(1.0 + total_power * strengths[0]);
    while (hi - lo > tolerance)
    {
        const double mid = 0.5 * (lo + hi);
        if (required_power_for_rate(strengths, mid, nullptr) <= total_power)
            lo = mid;
        else
            hi = mid;
    }

    required_power_for_rate(strengths, lo, &powers);
    const double used = std::accumulate(powers.begin(), powers.end(), 0.0);
    if (used > 0.0)
    {
        // Spend the slack by uniform scaling; every SINR increases with it.
        const double scale = total_power / used;
        for (double &p : powers)
            p *= scale;
    }
    else
    {
        powers.assign(strengths.size(), total_power / static_cast<double>(strengths.size()));
    }

    const std::vector<double> rates = downlink_rates_from_strengths(strengths, powers);
    const double common = *std::min_element(rates.begin(), rates.end());
    return {wrap(std::move(powers), total_power), common};
}

PowerAllocation sumrate_optimal_pa(const std::vector<double> &strengths, double total_power)
{
    check_strengths(strengths);
    check_total(total_power);
    const std::size_t best = static_cast<std::size_t>(
        std::max_element(strengths.begin(), strengths.end()) - strengths.begin());
    std::vector<double> powers(strengths.size(), 0.0);
    powers[best] = total_power;
    return wrap(std::move(powers), total_power);
}

PowerAllocation cr_inspired_pa(const std::vector<double> &strengths, double total_power,
                               double weak_target_rate)
{
    check_strengths(strengths);
    check_total(total_power);
    if (strengths.size() != 2)
        throw std::invalid_argument("CR-inspired PA is defined for 2 users.");
    if (!(weak_target_rate > 0.0))
        throw std::invalid_argument("Weak-user target rate must be positive.");

    const double s2 = strengths[1];
    const double gamma = std::exp2(weak_target_rate) - 1.0;
    // Largest strong-user power keeping the weak user at the target:
    // (P - P1) s2 >= gamma (P1 s2 + 1)
    double p1 = (total_power * s2 - gamma) / (s2 * std::exp2(weak_target_rate));
    if (p1 < 0.0)
    {
        const double achievable = std::log2(1.0 + total_power * s2);
        throw infeasible_error("Weak-user target rate " + std::to_string(weak_target_rate) +
                                   " bit/s/Hz exceeds the " + std::to_string(achievable) +
                                   " bit/s/Hz reachable with the full budget on the weak user.",
                               achievable, weak_target_rate);
    }
    p1 = std::min(p1, total_power);
    return wrap({p1, total_power - p1}, total_power);
}

DynamicPaInterval dynamic_pa_interval(const std::vector<double> &strengths, double total_power,
                                      const BandwidthSplit &oma_split, const std::vector<double> &oma_ratios)
{
    check_strengths(strengths);
    check_total(total_power);
    if (strengths.size() != 2)
        throw std::invalid_argument("Dynamic PA is defined for 2 users.");
    if (oma_split.fractions.size() != 2 || oma_ratios.size() != 2)
        throw std::invalid_argument("Dynamic PA needs a 2-user OMA benchmark.");

    const double s1 = strengths[0];
    const double s2 = strengths[1];
    const double w1 = oma_split.fractions[0];
    const double w2 = oma_split.fractions[1];
    const double q1 = oma_ratios[0] * total_power;
    const double q2 = oma_ratios[1] * total_power;

    const double r1_oma = (w1 == 0.0) ? 0.0 : w1 * std::log2(1.0 + q1 * s1 / w1);
    const double r2_oma = (w2 == 0.0) ? 0.0 : w2 * std::log2(1.0 + q2 * s2 / w2);

    // NOMA beats the benchmark per user iff alpha lies strictly inside:
    //   alpha > (2^r1_oma - 1) / (P s1)
    //   alpha < (P s2 - (2^r2_oma - 1)) / (P s2 2^r2_oma)
    DynamicPaInterval iv;
    iv.alpha_low = (std::exp2(r1_oma) - 1.0) / (total_power * s1);
    iv.alpha_high = (total_power * s2 - (std::exp2(r2_oma) - 1.0)) /
                    (total_power * s2 * std::exp2(r2_oma));
    return iv;
}

PowerAllocation dynamic_pa(const std::vector<double> &strengths, double total_power,
                           const BandwidthSplit &oma_split, const std::vector<double> &oma_ratios)
{
    const DynamicPaInterval iv = dynamic_pa_interval(strengths, total_power, oma_split, oma_ratios);
    if (!(iv.alpha_high - iv.alpha_low > 1e-12))
        throw infeasible_error("No power split gives both users a strictly higher rate than the "
                               "OMA benchmark (feasible interval [" + std::to_string(iv.alpha_low) +
                                   ", " + std::to_string(iv.alpha_high) + "] is empty).",
                               iv.alpha_low, iv.alpha_high);
    const double alpha = 0.5 * (iv.alpha_low + iv.alpha_high);
    return wrap({alpha * total_power, (1.0 - alpha) * total_power}, total_power);
}

PowerAllocation apply_pa_strategy(const PaStrategy &strategy, const std::vector<double> &strengths,
                                  double total_power)
{
    switch (strategy.kind)
    {
    case PaStrategy::Kind::fixed:
        return fixed_pa(strengths, total_power, strategy.fixed_ratios);
    case PaStrategy::Kind::ftpc:
        return ftpc_pa(strengths, total_power, strategy.ftpc_decay);
    case PaStrategy::Kind::max_min:
        return maxmin_pa(strengths, total_power, strategy.maxmin_tolerance).allocation;
    case PaStrategy::Kind::sum_rate_optimal:
        return sumrate_optimal_pa(strengths, total_power);
    case PaStrategy::Kind::cr_inspired:
        return cr_inspired_pa(strengths, total_power, strategy.cr_weak_target);
    case PaStrategy::Kind::dynamic:
        return dynamic_pa(strengths, total_power, make_bandwidth_split(strategy.dynamic_oma_split),
                          strategy.dynamic_oma_ratios);
    }
    throw std::logic_error("Unhandled PA strategy kind.");
}

} // namespace nomasim
