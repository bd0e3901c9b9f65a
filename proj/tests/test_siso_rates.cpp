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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "nomasim/channel.hpp"
#include "nomasim/common.hpp"
#include "nomasim/rng.hpp"
#include "nomasim/siso_rates.hpp"

using namespace nomasim;
using doctest::Approx;

namespace
{

std::vector<UserChannel> scalar_channels(const std::vector<double> &amplitudes,
                                         const std::vector<double> &noise)
{
    std::vector<UserChannel> ch;
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        ch.emplace_back(std::complex<double>(amplitudes[i], 0.0), noise[i]);
    return ch;
}

PowerAllocation pa_of(std::vector<double> powers, double total)
{
    const std::size_t n = powers.size();
    return make_power_allocation(std::move(powers), total, identity_ordering(n));
}

} // namespace

TEST_CASE("downlink NOMA rates for the two-user reference channel")
{
    const auto ch = scalar_channels({10.0, 1.0}, {1.0, 1.0});
    const RateReport r = downlink_noma_rates(ch, pa_of({4.5, 5.5}, 10.0));
    CHECK(r.per_user_rate[0] == Approx(std::log2(451.0)).epsilon(1e-12)); // 8.817
    CHECK(r.per_user_rate[1] == Approx(1.0).epsilon(1e-12));
    CHECK(r.sum_rate == Approx(r.per_user_rate[0] + r.per_user_rate[1]));
    CHECK_FALSE(r.power_order_inverted);
}

TEST_CASE("downlink NOMA zero-power user gets zero rate")
{
    const auto ch = scalar_channels({10.0, 1.0}, {1.0, 1.0});
    const RateReport r = downlink_noma_rates(ch, pa_of({10.0, 0.0}, 10.0));
    CHECK(r.per_user_rate[0] == Approx(std::log2(1.0 + 10.0 * 100.0)));
    CHECK(r.per_user_rate[1] == 0.0);
    CHECK(r.power_order_inverted); // the weaker user holds less power
}

TEST_CASE("downlink NOMA symmetric-channel closed form")
{
    const auto ch = scalar_channels({1.0, 1.0}, {1.0, 1.0});
    const RateReport r = downlink_noma_rates(ch, pa_of({0.5, 0.5}, 1.0));
    CHECK(r.per_user_rate[0] == Approx(std::log2(1.5)).epsilon(1e-12));
    CHECK(r.per_user_rate[1] == Approx(std::log2(4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("downlink NOMA rejects channels out of SIC order")
{
    const auto ch = scalar_channels({1.0, 10.0}, {1.0, 1.0});
    CHECK_THROWS_AS(downlink_noma_rates(ch, pa_of({4.5, 5.5}, 10.0)), ordering_error);
}

TEST_CASE("downlink OMA rates")
{
    const auto ch = scalar_channels({10.0, 1.0}, {1.0, 1.0});

    SUBCASE("equal bandwidth reference point")
    {
        const RateReport r =
            downlink_oma_rates(ch, pa_of({8.5, 1.5}, 10.0), make_bandwidth_split({0.5, 0.5}));
        CHECK(r.per_user_rate[0] == Approx(0.5 * std::log2(1701.0)).epsilon(1e-12)); // 5.365
        CHECK(r.per_user_rate[1] == Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("degenerate split gives the full single-user capacity")
    {
        const RateReport r =
            downlink_oma_rates(ch, pa_of({8.5, 1.5}, 10.0), make_bandwidth_split({1.0, 0.0}));
        CHECK(r.per_user_rate[0] == Approx(std::log2(1.0 + 8.5 * 100.0)));
        CHECK(r.per_user_rate[1] == 0.0); // zero band with positive power is not an error
    }
    SUBCASE("symmetric anchor for the region-equality property")
    {
        const auto sym = scalar_channels({1.0, 1.0}, {1.0, 1.0});
        const RateReport r =
            downlink_oma_rates(sym, pa_of({0.5, 0.5}, 1.0), make_bandwidth_split({0.5, 0.5}));
        CHECK(r.per_user_rate[0] == Approx(0.5).epsilon(1e-12));
        CHECK(r.per_user_rate[1] == Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("uplink NOMA rates")
{
    SUBCASE("two users, closed form and MAC identity")
    {
        const auto ch = scalar_channels({2.0, 1.0}, {1.0, 1.0});
        const RateReport r = uplink_noma_rates(ch, pa_of({1.0, 1.0}, 2.0));
        CHECK(r.per_user_rate[0] == Approx(std::log2(3.0)).epsilon(1e-12));
        CHECK(r.per_user_rate[1] == Approx(std::log2(2.0)).epsilon(1e-12));
        CHECK(r.sum_rate == Approx(std::log2(6.0)).epsilon(1e-12));
    }
    SUBCASE("silent user")
    {
        const auto ch = scalar_channels({2.0, 1.0}, {1.0, 1.0});
        const RateReport r = uplink_noma_rates(ch, pa_of({0.0, 3.0}, 3.0));
        CHECK(r.per_user_rate[0] == 0.0);
        CHECK(r.per_user_rate[1] == Approx(std::log2(4.0)));
    }
    SUBCASE("three users")
    {
        const auto ch = scalar_channels({3.0, 2.0, 1.0}, {1.0, 1.0, 1.0});
        const RateReport r = uplink_noma_rates(ch, pa_of({1.0, 1.0, 1.0}, 3.0));
        CHECK(r.per_user_rate[0] == Approx(std::log2(1.0 + 9.0 / 6.0)).epsilon(1e-12)); // 1.322
        CHECK(r.per_user_rate[1] == Approx(std::log2(3.0)).epsilon(1e-12));             // 1.585
        CHECK(r.per_user_rate[2] == Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("distinct per-user noise PSDs are rejected")
    {
        const auto ch = scalar_channels({2.0, 1.0}, {1.0, 2.0});
        CHECK_THROWS_AS(uplink_noma_rates(ch, pa_of({1.0, 1.0}, 2.0)), std::invalid_argument);
    }
}

TEST_CASE("uplink MAC sum identity holds on random instances")
{
    for (std::uint64_t trial = 0; trial < 1000; ++trial)
    {
        RngStream rng(314, trial, 0);
        const std::size_t users = 1 + static_cast<std::size_t>(rng.uniform() * 5.0);
        const double noise = 0.5 + rng.uniform();

        std::vector<double> amplitudes(users), noises(users, noise), powers(users);
        double received = 0.0, total = 0.0;
        for (std::size_t u = 0; u < users; ++u)
        {
            amplitudes[u] = 0.2 + 3.0 * rng.uniform();
            powers[u] = 0.1 + 5.0 * rng.uniform();
            total += powers[u];
        }
        std::sort(amplitudes.rbegin(), amplitudes.rend());
        for (std::size_t u = 0; u < users; ++u)
            received += powers[u] * amplitudes[u] * amplitudes[u];

        const RateReport r =
            uplink_noma_rates(scalar_channels(amplitudes, noises), pa_of(powers, total));
        const double capacity = std::log2(1.0 + received / noise);
        CHECK(std::abs(r.sum_rate - capacity) < 1e-12);
    }
}

TEST_CASE("downlink monotonicity in the strong user's power share")
{
    for (std::uint64_t trial = 0; trial < 50; ++trial)
    {
        RngStream rng(159, trial, 0);
        const double g_strong = 1.0 + 9.0 * rng.uniform();
        const double g_weak = 0.1 + 0.9 * rng.uniform();
        const double power = 1.0 + 19.0 * rng.uniform();
        const auto ch = scalar_channels({g_strong, g_weak}, {1.0, 1.0});

        double prev_strong = -1.0, prev_weak = 2.0 * std::log2(1.0 + power * g_weak * g_weak);
        for (int i = 0; i <= 20; ++i)
        {
            const double alpha = static_cast<double>(i) / 20.0;
            const RateReport r =
                downlink_noma_rates(ch, pa_of({alpha * power, (1.0 - alpha) * power}, power));
            CHECK(r.per_user_rate[0] >= prev_strong); // strictly increasing except equal endpoints
            CHECK(r.per_user_rate[1] <= prev_weak);
            if (i > 0)
            {
                CHECK(r.per_user_rate[0] > prev_strong);
                CHECK(r.per_user_rate[1] < prev_weak);
            }
            prev_strong = r.per_user_rate[0];
            prev_weak = r.per_user_rate[1];
        }
    }
}

TEST_CASE("rate region sweep endpoints and reference anchor")
{
    const UserChannel strong(std::complex<double>(10.0, 0.0), 1.0);
    const UserChannel weak(std::complex<double>(1.0, 0.0), 1.0);
    const RateRegion region = rate_region_sweep(strong, weak, 10.0, 1001);

    SUBCASE("alpha endpoints")
    {
        CHECK(region.noma.front().alpha_strong == 0.0);
        CHECK(region.noma.front().r_strong == 0.0);
        CHECK(region.noma.front().r_weak == Approx(std::log2(11.0)));
        CHECK(region.noma.back().alpha_strong == 1.0);
        CHECK(region.noma.back().r_weak == 0.0);
        CHECK(region.noma.back().r_strong == Approx(std::log2(1001.0)));
    }

    SUBCASE("NOMA curve passes through the quoted strong rate at weak rate 1")
    {
        double interpolated = 0.0;
        for (std::size_t i = 0; i + 1 < region.noma.size(); ++i)
        {
            const RatePoint &a = region.noma[i];
            const RatePoint &b = region.noma[i + 1];
            if ((a.r_weak - 1.0) * (b.r_weak - 1.0) <= 0.0)
            {
                const double t = (1.0 - a.r_weak) / (b.r_weak - a.r_weak);
                interpolated = a.r_strong + t * (b.r_strong - a.r_strong);
                break;
            }
        }
        CHECK(interpolated == Approx(8.817).epsilon(2e-3));
    }

    SUBCASE("every OMA boundary point is weakly dominated by the NOMA curve")
    {
        // NOMA points with alpha ascending have weak rate descending.
        for (const RatePoint &pt : region.oma_boundary)
        {
            double dominated_strong = -1.0;
            for (std::size_t i = 0; i + 1 < region.noma.size(); ++i)
            {
                const RatePoint &lo = region.noma[i + 1]; // smaller weak rate
                const RatePoint &hi = region.noma[i];
                if (pt.r_weak >= lo.r_weak - 1e-12 && pt.r_weak <= hi.r_weak + 1e-12)
                {
                    const double span = hi.r_weak - lo.r_weak;
                    const double t = span > 0.0 ? (pt.r_weak - lo.r_weak) / span : 0.0;
                    dominated_strong = lo.r_strong + t * (hi.r_strong - lo.r_strong);
                    break;
                }
            }
            REQUIRE(dominated_strong >= 0.0);
            CHECK(dominated_strong >= pt.r_strong - 1e-6);
        }
    }
}

TEST_CASE("sum capacity against the bandwidth split")
{
    const UserChannel strong(std::complex<double>(10.0, 0.0), 1.0);
    const UserChannel weak(std::complex<double>(1.0, 0.0), 1.0);
    const PowerAllocation pa = pa_of({4.5, 5.5}, 10.0);
    const auto points = sum_capacity_vs_bandwidth(strong, weak, pa, 101);

    CHECK(points.size() == 101);
    const double sum_noma = std::log2(451.0) + 1.0; // 9.817
    for (const SumCapacityPoint &pt : points)
    {
        CHECK(pt.sum_noma == Approx(sum_noma).epsilon(1e-12));
        CHECK(pt.sum_noma >= pt.sum_oma);
    }
    // full band to the weak user
    CHECK(points.front().w == 0.0);
    CHECK(points.front().sum_oma == Approx(std::log2(6.5)).epsilon(1e-12));
}

TEST_CASE("symmetric channels: NOMA and OMA boundaries coincide point by point")
{
    const double strength = 1.0, power = 10.0;
    const auto ch = scalar_channels({1.0, 1.0}, {1.0, 1.0});
    const double ps = power * strength;

    // Weak rate of the NOMA curve is continuous and monotone in alpha.
    const auto noma_at = [&](double alpha) {
        return downlink_noma_rates(ch, pa_of({alpha * power, (1.0 - alpha) * power}, power));
    };
    const auto solve_noma_alpha = [&](double weak_target) {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 100; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            (noma_at(mid).per_user_rate[1] > weak_target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    for (int k = 1; k <= 50; ++k)
    {
        // OMA boundary point: band share equal to power share.
        const double w = static_cast<double>(k) / 51.0;
        const RateReport oma = downlink_oma_rates(ch, pa_of({w * power, (1.0 - w) * power}, power),
                                                  make_bandwidth_split({w, 1.0 - w}));

        const double alpha = solve_noma_alpha(oma.per_user_rate[1]);
        const RateReport noma = noma_at(alpha);
        CHECK(std::abs(noma.per_user_rate[0] - oma.per_user_rate[0]) < 1e-9);
        CHECK(std::abs(noma.per_user_rate[1] - oma.per_user_rate[1]) < 1e-9);

        // And back: every NOMA point has an OMA twin with band share solving
        // the weak rate, which for proportional splits is linear in w.
        const RateReport noma_probe = noma_at(w);
        const double w_back = 1.0 - noma_probe.per_user_rate[1] / std::log2(1.0 + ps);
        const RateReport oma_back =
            downlink_oma_rates(ch, pa_of({w_back * power, (1.0 - w_back) * power}, power),
                               make_bandwidth_split({w_back, 1.0 - w_back}));
        CHECK(std::abs(oma_back.per_user_rate[0] - noma_probe.per_user_rate[0]) < 1e-9);
        CHECK(std::abs(oma_back.per_user_rate[1] - noma_probe.per_user_rate[1]) < 1e-9);
    }
}

TEST_CASE("allocation and split validation")
{
    CHECK_THROWS_AS(make_power_allocation({1.0, 2.0}, 2.5, identity_ordering(2)),
                    std::invalid_argument); // exceeds budget
    CHECK_THROWS_AS(make_power_allocation({-0.5, 1.0}, 2.0, identity_ordering(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_power_allocation({1.0}, 0.0, identity_ordering(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_bandwidth_split({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(make_bandwidth_split({1.5, -0.5}), std::invalid_argument);
    CHECK_NOTHROW(make_bandwidth_split({0.25, 0.75}));

    const auto ch = scalar_channels({10.0, 1.0}, {1.0, 1.0});
    CHECK_THROWS_AS(downlink_noma_rates(ch, pa_of({1.0}, 1.0)), std::invalid_argument);
}
