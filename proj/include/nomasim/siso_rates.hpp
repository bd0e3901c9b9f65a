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

#ifndef NOMASIM_SISO_RATES_HPP
#define NOMASIM_SISO_RATES_HPP

#include <cstddef>
#include <vector>

#include "nomasim/channel.hpp"

namespace nomasim
{

/*!
 * Per-user transmit powers in watts. The powers are indexed in the SIC order
 * they assume (position 0 = strongest user); assumed_order maps positions
 * back to original user indices. sum(powers) may not exceed total.
 */
struct PowerAllocation
{
    std::vector<double> powers;
    double total = 0.0;
    SicOrdering assumed_order;
};

// Validating constructor; throws std::invalid_argument on violated invariants.
PowerAllocation make_power_allocation(std::vector<double> powers, double total, SicOrdering assumed_order);

// Fractions of the 1 Hz system band per user; entries in [0,1], summing to 1.
struct BandwidthSplit
{
    std::vector<double> fractions;
};

BandwidthSplit make_bandwidth_split(std::vector<double> fractions);

/*!
 * Achievable rates, bit/s/Hz over the unit system bandwidth.
 * power_order_inverted is set when a stronger user was assigned more power
 * than a weaker one; rates are still valid for the declared decoding order,
 * the flag just marks the unconventional operating point.
 */
struct RateReport
{
    std::vector<double> per_user_rate;
    double sum_rate = 0.0;
    bool power_order_inverted = false;
};

/*!
 * Downlink NOMA with perfect SIC. Channels must already be in SIC order,
 * strongest first; user k sees superposition interference only from the
 * (lower-power) users ranked above it. Throws ordering_error if the channel
 * strengths contradict that order.
 */
RateReport downlink_noma_rates(const std::vector<UserChannel> &channels, const PowerAllocation &pa);

// FDMA baseline: user i alone on fraction W_i of the band, same power split.
// Noise scales with the band fraction; a zero fraction yields a zero rate.
RateReport downlink_oma_rates(const std::vector<UserChannel> &channels, const PowerAllocation &pa,
                              const BandwidthSplit &split);

/*!
 * Uplink NOMA at a single base-station receiver (one common noise PSD;
 * per-user noise values are rejected). The BS decodes strongest-first, so
 * user k is interfered only by the not-yet-decoded users ranked below it and
 * the last user is interference-free.
 */
RateReport uplink_noma_rates(const std::vector<UserChannel> &channels, const PowerAllocation &pa);

// One point of a two-user rate sweep. alpha_strong is the strong user's power
// fraction; bw_fraction the strong user's share of the band (OMA series only).
struct RatePoint
{
    double alpha_strong = 0.0;
    double bw_fraction = 0.0;
    double r_weak = 0.0;
    double r_strong = 0.0;
};

struct RateRegion
{
    std::vector<RatePoint> noma;          // alpha sweep, full shared band
    std::vector<RatePoint> oma_equal_bw;  // alpha sweep at W = 1/2
    std::vector<RatePoint> oma_boundary;  // Pareto frontier over (alpha, W)
};

/*!
 * Two-user downlink rate region: the NOMA curve over the power-fraction grid,
 * the equal-bandwidth OMA curve over the same grid, and the OMA boundary
 * obtained by sweeping bandwidth for every power fraction and keeping the
 * non-dominated points (sorted by weak-user rate).
 */
RateRegion rate_region_sweep(const UserChannel &strong, const UserChannel &weak, double total_power,
                             std::size_t grid_points);

struct SumCapacityPoint
{
    double w = 0.0;  // strong user's bandwidth fraction under OMA
    double sum_noma = 0.0;
    double sum_oma = 0.0;
};

// Sum capacity against the OMA bandwidth split for a fixed two-user power
// allocation. The NOMA sum does not depend on W and is repeated per row.
std::vector<SumCapacityPoint> sum_capacity_vs_bandwidth(const UserChannel &strong, const UserChannel &weak,
                                                        const PowerAllocation &pa, std::size_t grid_points);

} // namespace nomasim

#endif
