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

#include "nomasim/clustering.hpp"

#include <cmath>
#include <stdexcept>

#include "nomasim/common.hpp"

namespace nomasim
{

namespace
{

void check_sorted(const std::vector<double> &strengths)
{
    if (strengths.empty())
        throw std::invalid_argument("Pairing requires at least one user.");
    for (std::size_t k = 0; k + 1 < strengths.size(); ++k)
    {
        if (strengths[k] < strengths[k + 1])
            throw ordering_error("Pairing expects strengths sorted descending.");
    }
}

void check_even(const std::vector<double> &strengths)
{
    if (strengths.size() % 2 != 0)
        throw std::invalid_argument("Pairing needs an even user count; use hybrid_assign for odd counts.");
}

} // namespace

PairingPlan best_worst_pairing(const std::vector<double> &strengths_desc)
{
    check_sorted(strengths_desc);
    check_even(strengths_desc);

    PairingPlan plan;
    const std::size_t n = strengths_desc.size();
    for (std::size_t k = 0; k < n / 2; ++k)
        plan.pairs.emplace_back(k, n - 1 - k);
    return plan;
}

PairingPlan two_group_pairing(const std::vector<double> &strengths_desc)
{
    check_sorted(strengths_desc);
    check_even(strengths_desc);

    PairingPlan plan;
    const std::size_t half = strengths_desc.size() / 2;
    for (std::size_t k = 0; k < half; ++k)
        plan.pairs.emplace_back(k, half + k);
    return plan;
}

PairingPlan hybrid_assign(const std::vector<double> &strengths_desc)
{
    check_sorted(strengths_desc);
    const std::size_t n = strengths_desc.size();
    if (n % 2 == 0)
        return two_group_pairing(strengths_desc);

    // Median-strength user goes to OMA so the two halves pair cleanly.
    const std::size_t median = n / 2;
    PairingPlan plan;
    for (std::size_t k = 0; k < median; ++k)
        plan.pairs.emplace_back(k, median + 1 + k);
    plan.leftovers.push_back({median, LeftoverMode::oma_fallback, std::nullopt});
    return plan;
}

RateReport virtual_pairing_rates(const UserChannel &strong, const UserChannel &weak_a,
                                 const UserChannel &weak_b, const PowerAllocation &half_a,
                                 const PowerAllocation &half_b)
{
    if (strong.strength() < weak_a.strength() || strong.strength() < weak_b.strength())
        throw ordering_error("Virtual pairing requires the shared user to be the strongest.");
    if (half_a.powers.size() != 2 || half_b.powers.size() != 2)
        throw std::invalid_argument("Each half-band budget covers exactly the strong and one weak user.");

    // Half-band NOMA pair: rate prefactor 1/2, noise scaled by the fraction.
    auto half_band_pair = [](const UserChannel &s, const UserChannel &w, const PowerAllocation &pa) {
        const double gs = s.power_gain();
        const double gw = w.power_gain();
        const double r_strong = 0.5 * std::log2(1.0 + pa.powers[0] * gs / (0.5 * s.noise_psd));
        const double r_weak =
            0.5 * std::log2(1.0 + pa.powers[1] * gw / (pa.powers[0] * gw + 0.5 * w.noise_psd));
        return std::pair<double, double>{r_strong, r_weak};
    };

    const auto [sa, ra] = half_band_pair(strong, weak_a, half_a);
    const auto [sb, rb] = half_band_pair(strong, weak_b, half_b);

    RateReport report;
    report.per_user_rate = {sa + sb, ra, rb};
    report.sum_rate = report.per_user_rate[0] + report.per_user_rate[1] + report.per_user_rate[2];
    return report;
}

} // namespace nomasim
