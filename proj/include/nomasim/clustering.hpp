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

#ifndef NOMASIM_CLUSTERING_HPP
#define NOMASIM_CLUSTERING_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nomasim/siso_rates.hpp"

namespace nomasim
{

enum class LeftoverMode
{
    oma_fallback,
    virtual_share
};

struct Leftover
{
    std::size_t user = 0;
    LeftoverMode mode = LeftoverMode::oma_fallback;
    std::optional<std::size_t> shared_strong; // partner when mode == virtual_share
};

/*!
 * Assignment of users to two-user NOMA clusters over orthogonal blocks.
 * Indices refer to positions in the strength-sorted input (0 = strongest);
 * every user appears exactly once across pairs and leftovers, and each pair
 * lists the stronger member first.
 */
struct PairingPlan
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // (strong, weak)
    std::vector<Leftover> leftovers;
};

// Pair extremes: 1st with last, 2nd with second-to-last, ... Requires an even
// user count (odd counts go through hybrid_assign) and strengths sorted
// descending.
PairingPlan best_worst_pairing(const std::vector<double> &strengths_desc);

// Split into a strong half and a weak half, then pair by rank within the
// halves: k-th strongest with the k-th strongest of the weak half.
PairingPlan two_group_pairing(const std::vector<double> &strengths_desc);

// Two-group pairing for any count: on an odd count the median-strength user
// is set aside as an OMA-fallback leftover so both halves stay intact.
PairingPlan hybrid_assign(const std::vector<double> &strengths_desc);

/*!
 * Virtual cluster of one strong and two weak users: the strong user shares
 * each half of the band with one weak user, under separate half-band power
 * budgets (powers[0] = strong, powers[1] = weak in each budget). Half-band
 * noise scales with the band fraction. Returns rates for
 * [strong, weak_a, weak_b]; the strong user's rate is the sum of both halves.
 */
RateReport virtual_pairing_rates(const UserChannel &strong, const UserChannel &weak_a,
                                 const UserChannel &weak_b, const PowerAllocation &half_a,
                                 const PowerAllocation &half_b);

} // namespace nomasim

#endif
