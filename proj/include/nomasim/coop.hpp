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

#ifndef NOMASIM_COOP_HPP
#define NOMASIM_COOP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nomasim/channel.hpp"
#include "nomasim/common.hpp"
#include "nomasim/siso_rates.hpp"

namespace nomasim
{

/*!
 * Link set for cooperative schemes, as squared-magnitude (power) gains.
 * direct_power_gain is indexed strongest-first like the downlink modules.
 * relay_link_power_gain[m] holds the gains from user m to the weaker users
 * m+1 .. K-1, in that order. The sd/sr/rd gains describe the dedicated-relay
 * topology used by the CRS and conventional-relaying operations.
 */
struct CoopTopology
{
    std::vector<double> direct_power_gain;
    std::vector<std::vector<double>> relay_link_power_gain;
    double sd_power_gain = 0.0; // source -> destination
    double sr_power_gain = 0.0; // source -> relay
    double rd_power_gain = 0.0; // relay -> destination
    double noise_psd = 1.0;

    double inter_user_gain(std::size_t from, std::size_t to) const;
};

/*!
 * Power budgets of the two-phase protocol: the base station's superposition
 * in the direct phase plus one budget per cooperative time slot. Slot m is
 * the broadcast by user m, superposing the K-1-m messages of users m+1..K-1
 * with slot-local coefficients.
 */
struct PhasePowerPlan
{
    PowerAllocation direct_phase;
    std::vector<PowerAllocation> relay_slots;
};

struct OutageSpec
{
    std::vector<double> target_rates; // bit/s/Hz per user, > 0
    double prelog = 1.0;              // time-share factor applied to each decode
};

/*!
 * Accumulated SINR tables for K-user two-phase cooperative NOMA with maximum
 * ratio combining: combined[k][j] (valid for j >= k) is the SINR of message j
 * at user k after adding the direct-phase observation and every relay slot
 * the user overheard; direct[k][j] is the direct phase alone. Branch SINRs
 * add because each observation carries independent noise.
 */
struct CnomaSinrTable
{
    std::vector<std::vector<double>> combined;
    std::vector<std::vector<double>> direct;
};

CnomaSinrTable cnoma_combined_sinrs(const CoopTopology &topology, const PhasePowerPlan &plan);

/*!
 * Scenario for outage Monte Carlo: fading models per link. All models must
 * share one noise PSD (single receiver noise per observation). Mean strengths
 * should be strongest-first so the fixed SIC roles match the long-term order.
 */
struct CoopOutageScenario
{
    std::vector<ChannelModel> direct;                   // per user
    std::vector<std::vector<ChannelModel>> relay_links; // [m] -> links to users m+1..K-1
};

struct CoopOutageResult
{
    std::vector<MonteCarloSummary> cooperative;     // per-user outage probability
    std::vector<MonteCarloSummary> non_cooperative; // same draws, direct phase only
    // trials where some user was in outage cooperatively but not without
    // cooperation; structurally zero since combining never lowers an SINR
    std::size_t pairing_violations = 0;
};

/*!
 * Seeded outage Monte Carlo. A user is in outage when its own message (or any
 * weaker user's message it must decode first) falls short of the target rate
 * at the given prelog. The non-cooperative reference is evaluated on the same
 * draws and at the same prelog, isolating the reliability effect of the
 * cooperative phase. Wilson 95% intervals.
 */
CoopOutageResult cnoma_outage_mc(const CoopOutageScenario &scenario, const PhasePowerPlan &plan,
                                 const OutageSpec &outage, std::size_t trials, std::uint64_t seed);

struct CrsRates
{
    double symbol_direct = 0.0;  // decoded at the destination in slot 1
    double symbol_relayed = 0.0; // forwarded by the relay in slot 2
    double sum = 0.0;
    // whether the relay's first SIC stage is at least as good as the
    // destination's direct decode, i.e. the decode-and-forward premise holds
    bool relay_sic_supported = true;
};

/*!
 * Cooperative relaying with a NOMA superposition at the source: the relay
 * SIC-decodes and forwards the second symbol with full power while the first
 * symbol is decoded from the direct link. a1 > a2 required (the symbol
 * decoded under interference needs the larger share). Half-duplex prelog 1/2.
 * When joint_detection is set, the destination also keeps its slot-1 copy of
 * the relayed symbol and combines it with the relay's transmission.
 */
CrsRates crs_noma_capacity(const CoopTopology &topology, double a1, double a2, double total_power,
                           bool joint_detection = false);

// Conventional decode-and-forward relaying: one symbol per two slots, relay
// decode constraint against maximum ratio combining of both copies.
double conventional_df_capacity(const CoopTopology &topology, double total_power);

struct RelayCandidate
{
    double primary_rate = 0.0;   // achievable rate of the user whose QoS binds
    double secondary_rate = 0.0; // achievable rate of the opportunistic user
};

struct RelaySelection
{
    std::size_t index = 0;
    bool target_met = false; // false -> fell back to the best primary rate
};

// Two-stage selection: keep candidates meeting the primary target, then pick
// the one with the best secondary rate; with no survivor, take the best
// primary performer and flag the miss. Ties break toward the lower index.
RelaySelection two_stage_relay_select(const std::vector<RelayCandidate> &candidates,
                                      double target_rate_primary);

} // namespace nomasim

#endif
