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

#include "nomasim/siso_rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nomasim/common.hpp"

namespace nomasim
{

namespace
{

constexpr double k_budget_slack = 1e-12;

void check_sorted_strongest_first(const std::vector<UserChannel> &channels)
{
    for (std::size_t k = 0; k + 1 < channels.size(); ++k)
    {
        if (channels[k].strength() < channels[k + 1].strength())
            throw ordering_error("Channels are not in SIC order (position " + std::to_string(k + 1) +
                                 " is stronger than position " + std::to_string(k) + ").");
    }
}

void check_pa_matches(const std::vector<UserChannel> &channels, const PowerAllocation &pa)
{
    if (pa.powers.size() != channels.size())
        throw std::invalid_argument("Power allocation covers " + std::to_string(pa.powers.size()) +
                                    " users, channels cover " + std::to_string(channels.size()) + ".");
}

// Strong users should carry less power than weak ones; detect violations.
bool powers_inverted(const std::vector<double> &powers)
{
    return !std::is_sorted(powers.begin(), powers.end());
}

double finish_sum(RateReport &report)
{
    double s = 0.0;
    for (double r : report.per_user_rate)
        s += r;
    report.sum_rate = s;
    return s;
}

} // namespace

PowerAllocation make_power_allocation(std::vector<double> powers, double total, SicOrdering assumed_order)
{
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::invalid_argument("Total power budget must be positive and finite.");
    double sum = 0.0;
    for (double p : powers)
    {
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("Per-user powers must be finite and non-negative.");
        sum += p;
    }
    if (sum > total + k_budget_slack)
        throw std::invalid_argument("Per-user powers exceed the total budget.");
    if (!assumed_order.order.empty() && assumed_order.order.size() != powers.size())
        throw std::invalid_argument("Assumed SIC order length does not match the power vector.");

    PowerAllocation pa;
    pa.powers = std::move(powers);
    pa.total = total;
    pa.assumed_order = std::move(assumed_order);
    return pa;
}

BandwidthSplit make_bandwidth_split(std::vector<double> fractions)
{
    double sum = 0.0;
    for (double f : fractions)
    {
        if (!(f >= 0.0) || f > 1.0)
            throw std::invalid_argument("Bandwidth fractions must lie in [0, 1].");
        sum += f;
    }
    if (std::abs(sum - 1.0) > k_budget_slack)
        throw std::invalid_argument("Bandwidth fractions must sum to 1.");
    return BandwidthSplit{std::move(fractions)};
}

RateReport downlink_noma_rates(const std::vector<UserChannel> &channels, const PowerAllocation &pa)
{
    check_pa_matches(channels, pa);
    check_sorted_strongest_first(channels);

    RateReport report;
    report.power_order_inverted = powers_inverted(pa.powers);
    report.per_user_rate.resize(channels.size());

    double interfering_power = 0.0; // sum of powers of users decoded after this one
    for (std::size_t k = 0; k < channels.size(); ++k)
    {
        const double g = channels[k].power_gain();
        const double sinr = pa.powers[k] * g / (interfering_power * g + channels[k].noise_psd);
        report.per_user_rate[k] = std::log2(1.0 + sinr);
        interfering_power += pa.powers[k];
    }
    finish_sum(report);
    return report;
}

RateReport downlink_oma_rates(const std::vector<UserChannel> &channels, const PowerAllocation &pa,
                              const BandwidthSplit &split)
{
    check_pa_matches(channels, pa);
    check_sorted_strongest_first(channels);
    if (split.fractions.size() != channels.size())
        throw std::invalid_argument("Bandwidth split covers " + std::to_string(split.fractions.size()) +
                                    " users, channels cover " + std::to_string(channels.size()) + ".");

    RateReport report;
    report.power_order_inverted = powers_inverted(pa.powers);
    report.per_user_rate.resize(channels.size());

    for (std::size_t k = 0; k < channels.size(); ++k)
    {
        const double w = split.fractions[k];
        if (w == 0.0)
        {
            report.per_user_rate[k] = 0.0;
            continue;
        }
        const double sinr = pa.powers[k] * channels[k].power_gain() / (w * channels[k].noise_psd);
        report.per_user_rate[k] = w * std::log2(1.0 + sinr);
    }
    finish_sum(report);
    return report;
}

RateReport uplink_noma_rates(const std::vector<UserChannel> &channels, const PowerAllocation &pa)
{
    check_pa_matches(channels, pa);
    check_sorted_strongest_first(channels);
    for (std::size_t k = 1; k < channels.size(); ++k)
    {
        if (channels[k].noise_psd != channels[0].noise_psd)
            throw std::invalid_argument("Uplink model has a single receiver noise PSD; "
                                        "per-user values are not supported.");
    }
    const double noise = channels[0].noise_psd;

    RateReport report;
    report.power_order_inverted = powers_inverted(pa.powers);
    report.per_user_rate.resize(channels.size());

    // Received power of the users not yet decoded at each SIC stage
    double residual = 0.0;
    for (std::size_t k = 0; k < channels.size(); ++k)
        residual += pa.powers[k] * channels[k].power_gain();

    for (std::size_t k = 0; k < channels.size(); ++k)
    {
        const double own = pa.powers[k] * channels[k].power_gain();
        residual -= own;
        report.per_user_rate[k] = std::log2(1.0 + own / (residual + noise));
    }
    finish_sum(report);
    return report;
}

namespace
{

struct TwoUserSetting
{
    double g_strong; // |h|^2
    double g_weak;
    double n_strong;
    double n_weak;
    double power;
};

RatePoint noma_point(const TwoUserSetting &s, double alpha_strong)
{
    const double p1 = alpha_strong * s.power;
    const double p2 = s.power - p1;
    RatePoint pt;
    pt.alpha_strong = alpha_strong;
    pt.bw_fraction = 1.0;
    pt.r_strong = std::log2(1.0 + p1 * s.g_strong / s.n_strong);
    pt.r_weak = std::log2(1.0 + p2 * s.g_weak / (p1 * s.g_weak + s.n_weak));
    return pt;
}

RatePoint oma_point(const TwoUserSetting &s, double alpha_strong, double w)
{
    const double p1 = alpha_strong * s.power;
    const double p2 = s.power - p1;
    RatePoint pt;
    pt.alpha_strong = alpha_strong;
    pt.bw_fraction = w;
    pt.r_strong = (w == 0.0) ? 0.0 : w * std::log2(1.0 + p1 * s.g_strong / (w * s.n_strong));
    pt.r_weak = (w == 1.0) ? 0.0 : (1.0 - w) * std::log2(1.0 + p2 * s.g_weak / ((1.0 - w) * s.n_weak));
    return pt;
}

TwoUserSetting validated_setting(const UserChannel &strong, const UserChannel &weak, double total_power)
{
    if (strong.strength() < weak.strength())
        throw ordering_error("Strong user is weaker than the weak user.");
    if (!(total_power > 0.0))
        throw std::invalid_argument("Total power must be positive.");
    return {strong.power_gain(), weak.power_gain(), strong.noise_psd, weak.noise_psd, total_power};
}

} // namespace

RateRegion rate_region_sweep(const UserChannel &strong, const UserChannel &weak, double total_power,
                             std::size_t grid_points)
{
    if (grid_points < 2)
        throw std::invalid_argument("Rate-region sweep needs at least 2 grid points.");
    const TwoUserSetting s = validated_setting(strong, weak, total_power);

    RateRegion region;
    region.noma.reserve(grid_points);
    region.oma_equal_bw.reserve(grid_points);

    std::vector<RatePoint> cloud;
    cloud.reserve(grid_points * grid_points);

    for (std::size_t i = 0; i < grid_points; ++i)
    {
        const double alpha = static_cast<double>(i) / static_cast<double>(grid_points - 1);
        region.noma.push_back(noma_point(s, alpha));
        region.oma_equal_bw.push_back(oma_point(s, alpha, 0.5));
        for (std::size_t j = 0; j < grid_points; ++j)
        {
            const double w = static_cast<double>(j) / static_cast<double>(grid_points - 1);
            cloud.push_back(oma_point(s, alpha, w));
        }
    }

    // Pareto frontier of the (alpha, W) cloud: sort by weak rate descending,
    // keep points whose strong rate improves on everything seen so far.
    std::sort(cloud.begin(), cloud.end(), [](const RatePoint &a, const RatePoint &b) {
        if (a.r_weak != b.r_weak)
            return a.r_weak > b.r_weak;
        return a.r_strong > b.r_strong;
    });
    double best_strong = -1.0;
    for (const RatePoint &pt : cloud)
    {
        if (pt.r_strong > best_strong)
        {
            best_strong = pt.r_strong;
            region.oma_boundary.push_back(pt);
        }
    }
    std::reverse(region.oma_boundary.begin(), region.oma_boundary.end()); // ascending weak rate
    return region;
}

std::vector<SumCapacityPoint> sum_capacity_vs_bandwidth(const UserChannel &strong, const UserChannel &weak,
                                                        const PowerAllocation &pa, std::size_t grid_points)
{
    if (grid_points < 2)
        throw std::invalid_argument("Bandwidth sweep needs at least 2 grid points.");
    if (pa.powers.size() != 2)
        throw std::invalid_argument("Bandwidth sweep is defined for 2 users.");
    const TwoUserSetting s = validated_setting(strong, weak, pa.total);
    const double alpha = pa.powers[0] / pa.total;

    const RatePoint n = noma_point(s, alpha);
    const double sum_noma = n.r_strong + n.r_weak;

    std::vector<SumCapacityPoint> points;
    points.reserve(grid_points);
    for (std::size_t j = 0; j < grid_points; ++j)
    {
        const double w = static_cast<double>(j) / static_cast<double>(grid_points - 1);
        const RatePoint o = oma_point(s, alpha, w);
        points.push_back({w, sum_noma, o.r_strong + o.r_weak});
    }
    return points;
}

} // namespace nomasim
