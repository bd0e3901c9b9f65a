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

#ifndef NOMASIM_COMMON_HPP
#define NOMASIM_COMMON_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace nomasim
{

// Thrown when a caller hands channels/powers that contradict the declared
// SIC decoding order (the rate formulas are only valid for the canonical
// strongest-first order).
class ordering_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when matrix dimensions do not admit the requested detection scheme
// (e.g. zero-forcing needs at least as many receive as transmit antennas).
class dimension_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a constraint set is empty, e.g. a QoS target that cannot be met
// with the available power. Carries the offending bounds where meaningful
// (lower/upper edge of the empty interval, or target vs. achievable value).
class infeasible_error : public std::runtime_error
{
  public:
    explicit infeasible_error(const std::string &what_arg,
                              double lower = std::numeric_limits<double>::quiet_NaN(),
                              double upper = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(what_arg), lower_bound(lower), upper_bound(upper)
    {
    }

    double lower_bound;
    double upper_bound;
};

// Thrown by the experiment runner for malformed or out-of-range configuration.
class config_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Thrown by the experiment runner when an output file cannot be written.
class io_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Aggregated statistic of one metric over seeded Monte Carlo trials.
struct MonteCarloSummary
{
    std::string metric;   // e.g. "outage_user1"
    double mean = 0.0;
    double ci95_low = 0.0;  // 95% confidence interval, ci95_low <= mean <= ci95_high
    double ci95_high = 0.0;
    std::size_t trials = 0;
};

// Wilson score interval for a binomial proportion at 95% confidence.
MonteCarloSummary wilson_summary(const std::string &metric, std::size_t successes, std::size_t trials);

// Normal-approximation interval for the mean of real-valued samples.
MonteCarloSummary mean_summary(const std::string &metric, double sum, double sum_sq, std::size_t trials);

} // namespace nomasim

#endif
