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

#include "nomasim/coop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nomasim
{

double CoopTopology::inter_user_gain(std::size_t from, std::size_t to) const
{
    if (from >= to)
        throw std::invalid_argument("Inter-user links run from stronger to weaker users only.");
    if (from >= relay_link_power_gain.size() ||
        to - from - 1 >= relay_link_power_gain[from].size())
        throw std::invalid_argument("Missing inter-user link " + std::to_string(from) + " -> " +
                                    std::to_string(to) + ".");
    return relay_link_power_gain[from][to - from - 1];
}

CnomaSinrTable cnoma_combined_sinrs(const CoopTopology &topology, const PhasePowerPlan &plan)
{
    const std::size_t k_users = topology.direct_power_gain.size();
    if (k_users < 2)
        throw std::invalid_argument("Cooperative NOMA needs at least two users.");
    if (plan.direct_phase.powers.size() != k_users)
        throw std::invalid_argument("Direct-phase allocation must cover every user.");
    if (plan.relay_slots.size() + 1 < k_users)
        throw std::invalid_argument("Plan must provide K-1 relay slots.");
    for (std::size_t m = 0; m + 1 < k_users; ++m)
    {
        if (plan.relay_slots[m].powers.size() != k_users - 1 - m)
            throw std::invalid_argument("Relay slot " + std::to_string(m) + " must superpose the " +
                                        std::to_string(k_users - 1 - m) + " weaker messages.");
    }
    const double noise = topology.noise_psd;

    CnomaSinrTable table;
    table.combined.assign(k_users, std::vector<double>(k_users, 0.0));
    table.direct.assign(k_users, std::vector<double>(k_users, 0.0));

    for (std::size_t k = 0; k < k_users; ++k)
    {
        const double g = topology.direct_power_gain[k];
        for (std::size_t j = k; j < k_users; ++j)
        {
            // Message j is sent on top of the lower-power messages of the
            // stronger users, which stay as interference until j is decoded.
            double interference = 0.0;
            for (std::size_t m = 0; m < j; ++m)
                interference += plan.direct_phase.powers[m];
            const double direct = plan.direct_phase.powers[j] * g / (interference * g + noise);

            double combined = direct;
            for (std::size_t m = 0; m < k; ++m)
            {
                if (j <= m)
                    continue; // slot m only carries messages m+1..K-1
                const double link = topology.inter_user_gain(m, k);
                const auto &slot = plan.relay_slots[m].powers;
                double slot_interference = 0.0;
                for (std::size_t jj = m + 1; jj < j; ++jj)
                    slot_interference += slot[jj - m - 1];
                combined += slot[j - m - 1] * link / (slot_interference * link + noise);
            }

            table.direct[k][j] = direct;
            table.combined[k][j] = combined;
        }
    }
    return table;
}

namespace
{

// A user fails when any message it must decode (weakest first, ending with
// its own) misses the target rate.
bool user_in_outage(const std::vector<std::vector<double>> &sinr, std::size_t user,
                    const OutageSpec &outage)
{
    const std::size_t k_users = sinr.size();
    for (std::size_t j = k_users; j-- > user;)
    {
        const double rate = outage.prelog * std::log2(1.0 + sinr[user][j]);
        if (rate < outage.target_rates[j])
            return true;
    }
    return false;
}

void check_outage_spec(const OutageSpec &outage, std::size_t k_users)
{
    if (outage.target_rates.size() != k_users)
        throw std::invalid_argument("Outage spec must provide one target per user.");
    for (double r : outage.target_rates)
    {
        if (!(r > 0.0))
            throw std::invalid_argument("Target rates must be positive.");
    }
    if (!(outage.prelog > 0.0) || outage.prelog > 1.0)
        throw std::invalid_argument("Prelog must lie in (0, 1].");
}

} // namespace

CoopOutageResult cnoma_outage_mc(const CoopOutageScenario &scenario, const PhasePowerPlan &plan,
                                 const OutageSpec &outage, std::size_t trials, std::uint64_t seed)
{
    const std::size_t k_users = scenario.direct.size();
    if (k_users < 2)
        throw std::invalid_argument("Cooperative NOMA needs at least two users.");
    if (scenario.relay_links.size() + 1 < k_users)
        throw std::invalid_argument("Scenario must model K-1 relay-slot link sets.");
    if (trials < 1)
        throw std::invalid_argument("At least one trial required.");
    check_outage_spec(outage, k_users);

    const double noise = scenario.direct[0].noise_psd();
    for (const auto &m : scenario.direct)
    {
        if (m.noise_psd() != noise)
            throw std::invalid_argument("All links must share one noise PSD.");
    }

    std::vector<std::size_t> coop_outages(k_users, 0), direct_outages(k_users, 0);
    std::size_t violations = 0;

    for (std::size_t t = 0; t < trials; ++t)
    {
        CoopTopology topo;
        topo.noise_psd = noise;
        topo.direct_power_gain.resize(k_users);
        std::uint64_t stream = 0;
        for (std::size_t k = 0; k < k_users; ++k)
        {
            RngStream rng(seed, t, stream++);
            topo.direct_power_gain[k] = sample_channel(scenario.direct[k], rng).power_gain();
        }
        topo.relay_link_power_gain.resize(scenario.relay_links.size());
        for (std::size_t m = 0; m < scenario.relay_links.size(); ++m)
        {
            topo.relay_link_power_gain[m].resize(scenario.relay_links[m].size());
            for (std::size_t j = 0; j < scenario.relay_links[m].size(); ++j)
            {
                RngStream rng(seed, t, stream++);
                topo.relay_link_power_gain[m][j] =
                    sample_channel(scenario.relay_links[m][j], rng).power_gain();
            }
        }

        const CnomaSinrTable table = cnoma_combined_sinrs(topo, plan);
        for (std::size_t k = 0; k < k_users; ++k)
        {
            const bool coop = user_in_outage(table.combined, k, outage);
            const bool direct = user_in_outage(table.direct, k, outage);
            coop_outages[k] += coop ? 1 : 0;
            direct_outages[k] += direct ? 1 : 0;
            if (coop && !direct)
                ++violations;
        }
    }

    CoopOutageResult result;
    result.pairing_violations = violations;
    for (std::size_t k = 0; k < k_users; ++k)
    {
        const std::string id = "user" + std::to_string(k);
        result.cooperative.push_back(wilson_summary("outage_coop_" + id, coop_outages[k], trials));
        result.non_cooperative.push_back(
            wilson_summary("outage_direct_" + id, direct_outages[k], trials));
    }
    return result;
}

CrsRates crs_noma_capacity(const CoopTopology &topology, double a1, double a2, double total_power,
                           bool joint_detection)
{
    if (std::abs(a1 + a2 - 1.0) > 1e-9)
        throw std::invalid_argument("Superposition coefficients must sum to 1.");
    if (!(a1 > a2))
        throw ordering_error("The symbol decoded under interference needs the larger share (a1 > a2).");
    if (!(total_power > 0.0))
        throw std::invalid_argument("Total power must be positive.");

    const double n = topology.noise_psd;
    const double p = total_power;
    const double sd = topology.sd_power_gain;
    const double sr = topology.sr_power_gain;
    const double rd = topology.rd_power_gain;

    CrsRates r;
    // Destination decodes the first symbol under the second's interference.
    r.symbol_direct = 0.5 * std::log2(1.0 + a1 * p * sd / (a2 * p * sd + n));

    // Relay chain: SIC at the relay leaves a interference-free second symbol,
    // forwarded at full power in the second slot.
    double second_copy = p * rd;
    if (joint_detection)
        second_copy += a2 * p * sd; // destination keeps its slot-1 copy after cancelling symbol 1
    r.symbol_relayed = 0.5 * std::log2(1.0 + std::min(a2 * p * sr, second_copy) / n);

    // The relay's first SIC stage must be at least as good as the direct
    // decode for the forwarded chain to be consistent.
    r.relay_sic_supported = a1 * p * sr / (a2 * p * sr + n) >= a1 * p * sd / (a2 * p * sd + n);

    r.sum = r.symbol_direct + r.symbol_relayed;
    return r;
}

double conventional_df_capacity(const CoopTopology &topology, double total_power)
{
    if (!(total_power > 0.0))
        throw std::invalid_argument("Total power must be positive.");
    const double n = topology.noise_psd;
    const double p = total_power;
    const double relay_decode = p * topology.sr_power_gain;
    const double mrc = p * topology.sd_power_gain + p * topology.rd_power_gain;
    return 0.5 * std::log2(1.0 + std::min(relay_decode, mrc) / n);
}

RelaySelection two_stage_relay_select(const std::vector<RelayCandidate> &candidates,
                                      double target_rate_primary)
{
    if (candidates.empty())
        throw std::invalid_argument("Relay selection needs at least one candidate.");

    RelaySelection best;
    double best_secondary = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        if (candidates[i].primary_rate >= target_rate_primary &&
            candidates[i].secondary_rate > best_secondary)
        {
            best_secondary = candidates[i].secondary_rate;
            best.index = i;
            best.target_met = true;
        }
    }
    if (best.target_met)
        return best;

    // No candidate meets the target: fall back to the best primary rate.
    std::size_t fallback = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
    {
        if (candidates[i].primary_rate > candidates[fallback].primary_rate)
            fallback = i;
    }
    return {fallback, false};
}

} // namespace nomasim
