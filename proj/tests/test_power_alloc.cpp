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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "nomasim/common.hpp"
#include "nomasim/power_alloc.hpp"
#include "nomasim/rng.hpp"

using namespace nomasim;
using doctest::Approx;

namespace
{

// Independent brute-force reference for 2-user max-min: best minimum rate
// over a dense grid of strong-user power fractions.
double maxmin_grid_oracle(const std::vector<double> &strengths, double total, std::size_t points)
{
    double best = -1.0;
    for (std::size_t i = 0; i < points; ++i)
    {
        const double alpha = static_cast<double>(i) / static_cast<double>(points - 1);
        const double p0 = alpha * total;
        const double r0 = std::log2(1.0 + p0 * strengths[0]);
        const double r1 =
            std::log2(1.0 + (total - p0) * strengths[1] / (p0 * strengths[1] + 1.0));
        best = std::max(best, std::min(r0, r1));
    }
    return best;
}

double total_of(const PowerAllocation &pa)
{
    return std::accumulate(pa.powers.begin(), pa.powers.end(), 0.0);
}

} // namespace

TEST_CASE("fixed ratios scale the budget by ordered position")
{
    CHECK(fixed_pa({4.0, 1.0}, 10.0, {0.2, 0.8}).powers == std::vector<double>{2.0, 8.0});
    CHECK(fixed_pa({4.0, 1.0}, 10.0, {0.5, 0.5}).powers == std::vector<double>{5.0, 5.0});

    const auto three = fixed_pa({9.0, 4.0, 1.0}, 12.0, {1.0 / 6.0, 2.0 / 6.0, 3.0 / 6.0});
    CHECK(three.powers[0] == Approx(2.0).epsilon(1e-12));
    CHECK(three.powers[1] == Approx(4.0).epsilon(1e-12));
    CHECK(three.powers[2] == Approx(6.0).epsilon(1e-12));

    CHECK_THROWS_AS(fixed_pa({4.0, 1.0}, 10.0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_pa({4.0, 1.0}, 10.0, {0.3, 0.3}), std::invalid_argument);
}

TEST_CASE("fractional transmit power control")
{
    SUBCASE("inverse-strength weighting")
    {
        const auto pa = ftpc_pa({4.0, 1.0}, 10.0, 1.0);
        CHECK(pa.powers[0] == Approx(2.0).epsilon(1e-12));
        CHECK(pa.powers[1] == Approx(8.0).epsilon(1e-12));
    }
    SUBCASE("decay zero means equal split")
    {
        const auto pa = ftpc_pa({4.0, 1.0}, 10.0, 0.0);
        CHECK(pa.powers[0] == Approx(5.0));
        CHECK(pa.powers[1] == Approx(5.0));
    }
    SUBCASE("quadratic decay")
    {
        const auto pa = ftpc_pa({4.0, 1.0}, 10.0, 2.0);
        CHECK(pa.powers[0] == Approx(10.0 / 17.0).epsilon(1e-12));
        CHECK(pa.powers[1] == Approx(160.0 / 17.0).epsilon(1e-12));
    }
    SUBCASE("scale equivariance in the budget is exact")
    {
        const auto pa1 = ftpc_pa({3.7, 0.9}, 7.3, 1.4);
        const auto pa2 = ftpc_pa({3.7, 0.9}, 14.6, 1.4);
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(pa2.powers[k] == 2.0 * pa1.powers[k]);
    }
}

TEST_CASE("max-min allocation equalizes rates")
{
    SUBCASE("analytic symmetric case")
    {
        // With strength 2 per user and unit budget the equal-rate fraction
        // solves 4a^2 + 4a - 2 = 0, i.e. a = (sqrt(3) - 1) / 2.
        const auto [pa, rate] = maxmin_pa({2.0, 2.0}, 1.0, 1e-9);
        const double alpha = pa.powers[0] / 1.0;
        CHECK(alpha == Approx((std::sqrt(3.0) - 1.0) / 2.0).epsilon(1e-6));
        CHECK(rate == Approx(std::log2(1.0 + 2.0 * alpha)).epsilon(1e-9)); // 0.793
        CHECK(total_of(pa) == Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("single user receives everything")
    {
        const auto [pa, rate] = maxmin_pa({5.0}, 3.0, 1e-9);
        CHECK(pa.powers == std::vector<double>{3.0});
        CHECK(rate == Approx(std::log2(16.0)));
    }
    SUBCASE("matches the grid oracle on the reference channel")
    {
        const std::vector<double> strengths{100.0, 1.0};
        const auto [pa, rate] = maxmin_pa(strengths, 10.0, 1e-9);
        const double oracle = maxmin_grid_oracle(strengths, 10.0, 100001);
        CHECK(std::abs(rate - oracle) < 1e-4);
    }
    SUBCASE("per-user rates are mutually equal within ten tolerances")
    {
        for (std::uint64_t trial = 0; trial < 40; ++trial)
        {
            RngStream rng(271, trial, 0);
            std::vector<double> strengths{0.5 + 9.0 * rng.uniform(), 0.1 + 0.4 * rng.uniform()};
            std::sort(strengths.rbegin(), strengths.rend());
            const double total = 1.0 + 19.0 * rng.uniform();
            const double tol = 1e-9;

            const auto [pa, rate] = maxmin_pa(strengths, total, tol);
            const auto rates = downlink_rates_from_strengths(strengths, pa.powers);
            CHECK(std::abs(rates[0] - rates[1]) < 10.0 * tol);
            CHECK(std::abs(total_of(pa) - total) < 1e-9);
        }
    }
    SUBCASE("three users equalize too")
    {
        const std::vector<double> strengths{9.0, 3.0, 1.0};
        const auto [pa, rate] = maxmin_pa(strengths, 12.0, 1e-10);
        const auto rates = downlink_rates_from_strengths(strengths, pa.powers);
        CHECK(std::abs(rates[0] - rates[2]) < 1e-8);
        CHECK(std::abs(rates[1] - rates[2]) < 1e-8);
        CHECK(*std::min_element(rates.begin(), rates.end()) == Approx(rate));
    }
    CHECK_THROWS_AS(maxmin_pa({1.0}, -1.0, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(maxmin_pa({1.0}, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("sum-rate-optimal gives everything to the strongest user")
{
    CHECK(sumrate_optimal_pa({100.0, 1.0}, 10.0).powers == std::vector<double>{10.0, 0.0});
    CHECK(sumrate_optimal_pa({5.0, 5.0}, 4.0).powers == std::vector<double>{4.0, 0.0}); // tie

    // No split on a fine grid beats it.
    const std::vector<double> strengths{100.0, 1.0};
    const double winner = std::log2(1.0 + 10.0 * 100.0); // 9.967
    for (int i = 0; i <= 10000; ++i)
    {
        const double p0 = 10.0 * static_cast<double>(i) / 10000.0;
        const auto rates = downlink_rates_from_strengths(strengths, {p0, 10.0 - p0});
        CHECK(rates[0] + rates[1] <= winner + 1e-12);
    }
}

TEST_CASE("CR-inspired allocation binds the weak user's target")
{
    SUBCASE("reference point")
    {
        const auto pa = cr_inspired_pa({100.0, 1.0}, 10.0, 1.0);
        CHECK(pa.powers[0] == Approx(4.5).epsilon(1e-12));
        CHECK(pa.powers[1] == Approx(5.5).epsilon(1e-12));
    }
    SUBCASE("vacuous target releases the full budget")
    {
        const auto pa = cr_inspired_pa({100.0, 1.0}, 10.0, 1e-9);
        CHECK(pa.powers[0] == Approx(10.0).epsilon(1e-6));
    }
    SUBCASE("unreachable target raises infeasible_error naming the shortfall")
    {
        try
        {
            cr_inspired_pa({100.0, 1.0}, 10.0, 4.0);
            FAIL("expected infeasible_error");
        }
        catch (const infeasible_error &e)
        {
            CHECK(e.upper_bound == 4.0);                          // requested
            CHECK(e.lower_bound == Approx(std::log2(11.0)));      // achievable
        }
    }
    SUBCASE("weak-user constraint holds with equality when unclamped")
    {
        for (std::uint64_t trial = 0; trial < 50; ++trial)
        {
            RngStream rng(653, trial, 0);
            std::vector<double> strengths{1.0 + 9.0 * rng.uniform(), 0.2 + 0.7 * rng.uniform()};
            std::sort(strengths.rbegin(), strengths.rend());
            const double total = 5.0 + 10.0 * rng.uniform();
            const double max_rate = std::log2(1.0 + total * strengths[1]);
            const double target = 0.3 * max_rate + 0.4 * max_rate * rng.uniform();

            const auto pa = cr_inspired_pa(strengths, total, target);
            if (pa.powers[0] > 0.0 && pa.powers[0] < total)
            {
                const auto rates = downlink_rates_from_strengths(strengths, pa.powers);
                CHECK(std::abs(rates[1] - target) < 1e-9);
            }
        }
    }
}

TEST_CASE("dynamic allocation strictly beats the OMA benchmark")
{
    const std::vector<double> strengths{100.0, 1.0};
    const BandwidthSplit half = make_bandwidth_split({0.5, 0.5});
    const std::vector<double> equal{0.5, 0.5};

    SUBCASE("reference interval and midpoint")
    {
        const DynamicPaInterval iv = dynamic_pa_interval(strengths, 10.0, half, equal);
        CHECK(iv.alpha_low == Approx(0.0307).epsilon(2e-3));
        CHECK(iv.alpha_high == Approx(0.2317).epsilon(2e-3));

        const auto pa = dynamic_pa(strengths, 10.0, half, equal);
        CHECK(pa.powers[0] / 10.0 == Approx(0.1312).epsilon(2e-3));

        const auto noma = downlink_rates_from_strengths(strengths, pa.powers);
        CHECK(noma[0] == Approx(7.05).epsilon(2e-3));
        CHECK(noma[1] == Approx(2.25).epsilon(2e-3));

        // OMA benchmark rates for comparison
        const double r1_oma = 0.5 * std::log2(1.0 + 5.0 * 100.0 / 0.5);
        const double r2_oma = 0.5 * std::log2(1.0 + 5.0 * 1.0 / 0.5);
        CHECK(r1_oma == Approx(4.98).epsilon(2e-3));
        CHECK(r2_oma == Approx(1.73).epsilon(2e-3));
        CHECK(noma[0] > r1_oma);
        CHECK(noma[1] > r2_oma);
    }
    SUBCASE("midpoint verified against a dense alpha scan")
    {
        const DynamicPaInterval iv = dynamic_pa_interval(strengths, 10.0, half, equal);
        const double r1_oma = 0.5 * std::log2(1.0 + 5.0 * 100.0 / 0.5);
        const double r2_oma = 0.5 * std::log2(1.0 + 5.0 * 1.0 / 0.5);
        double lo_scan = 2.0, hi_scan = -1.0;
        for (int i = 0; i <= 200000; ++i)
        {
            const double alpha = static_cast<double>(i) / 200000.0;
            const auto r = downlink_rates_from_strengths(strengths, {10.0 * alpha, 10.0 * (1.0 - alpha)});
            if (r[0] > r1_oma && r[1] > r2_oma)
            {
                lo_scan = std::min(lo_scan, alpha);
                hi_scan = std::max(hi_scan, alpha);
            }
        }
        CHECK(std::abs(lo_scan - iv.alpha_low) < 1e-5);
        CHECK(std::abs(hi_scan - iv.alpha_high) < 1e-5);
    }
    SUBCASE("symmetric strengths collapse the interval")
    {
        try
        {
            dynamic_pa({2.0, 2.0}, 10.0, half, equal);
            FAIL("expected infeasible_error");
        }
        catch (const infeasible_error &e)
        {
            CHECK(std::abs(e.upper_bound - e.lower_bound) < 1e-9);
        }
    }
    SUBCASE("a zero-band benchmark constrains the strong user only")
    {
        const DynamicPaInterval iv =
            dynamic_pa_interval(strengths, 10.0, make_bandwidth_split({1.0, 0.0}), equal);
        CHECK(iv.alpha_high == Approx(1.0).epsilon(1e-12));
        CHECK(iv.alpha_low == Approx(0.5).epsilon(1e-9)); // needs 500 of 1000 linear SNR
        const auto pa = dynamic_pa(strengths, 10.0, make_bandwidth_split({1.0, 0.0}), equal);
        const auto noma = downlink_rates_from_strengths(strengths, pa.powers);
        CHECK(noma[1] > 0.0);
    }
}

TEST_CASE("every strategy spends the whole budget")
{
    for (std::uint64_t trial = 0; trial < 30; ++trial)
    {
        RngStream rng(987, trial, 0);
        std::vector<double> strengths{2.0 + 50.0 * rng.uniform(), 0.1 + 1.0 * rng.uniform()};
        std::sort(strengths.rbegin(), strengths.rend());
        const double total = 2.0 + 18.0 * rng.uniform();

        CHECK(std::abs(total_of(fixed_pa(strengths, total, {0.3, 0.7})) - total) < 1e-9);
        CHECK(std::abs(total_of(ftpc_pa(strengths, total, 0.8)) - total) < 1e-9);
        CHECK(std::abs(total_of(maxmin_pa(strengths, total, 1e-9).allocation) - total) < 1e-9);
        CHECK(total_of(sumrate_optimal_pa(strengths, total)) == total); // zero entries exact

        const double target = 0.5 * std::log2(1.0 + total * strengths[1]);
        CHECK(std::abs(total_of(cr_inspired_pa(strengths, total, target)) - total) < 1e-9);

        const auto pa = dynamic_pa(strengths, total, make_bandwidth_split({0.5, 0.5}), {0.5, 0.5});
        CHECK(std::abs(total_of(pa) - total) < 1e-9);
        const auto noma = downlink_rates_from_strengths(strengths, pa.powers);
        const double r1_oma = 0.5 * std::log2(1.0 + strengths[0] * total);
        const double r2_oma = 0.5 * std::log2(1.0 + strengths[1] * total);
        CHECK(noma[0] > r1_oma);
        CHECK(noma[1] > r2_oma);
    }
}

TEST_CASE("strategies demand the canonical SIC order")
{
    CHECK_THROWS_AS(fixed_pa({1.0, 2.0}, 10.0, {0.5, 0.5}), ordering_error);
    CHECK_THROWS_AS(ftpc_pa({1.0, 2.0}, 10.0, 1.0), ordering_error);
    CHECK_THROWS_AS(maxmin_pa({1.0, 2.0}, 10.0, 1e-9), ordering_error);
}

TEST_CASE("strategy dispatch covers every kind")
{
    const std::vector<double> strengths{100.0, 1.0};
    PaStrategy s;

    s.kind = PaStrategy::Kind::fixed;
    s.fixed_ratios = {0.2, 0.8};
    CHECK(apply_pa_strategy(s, strengths, 10.0).powers[0] == Approx(2.0));

    s.kind = PaStrategy::Kind::ftpc;
    CHECK(apply_pa_strategy(s, strengths, 10.0).powers[1] > 5.0);

    s.kind = PaStrategy::Kind::max_min;
    const auto mm = apply_pa_strategy(s, strengths, 10.0);
    CHECK(total_of(mm) == Approx(10.0));

    s.kind = PaStrategy::Kind::sum_rate_optimal;
    CHECK(apply_pa_strategy(s, strengths, 10.0).powers[1] == 0.0);

    s.kind = PaStrategy::Kind::cr_inspired;
    CHECK(apply_pa_strategy(s, strengths, 10.0).powers[0] == Approx(4.5));

    s.kind = PaStrategy::Kind::dynamic;
    s.dynamic_oma_split = {0.5, 0.5};
    s.dynamic_oma_ratios = {0.5, 0.5};
    CHECK(apply_pa_strategy(s, strengths, 10.0).powers[0] / 10.0 == Approx(0.1312).epsilon(2e-3));
}
