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

#include "nomasim/common.hpp"

#include <algorithm>
#include <cmath>

namespace nomasim
{

MonteCarloSummary wilson_summary(const std::string &metric, std::size_t successes, std::size_t trials)
{
    if (trials == 0)
        throw std::invalid_argument("Wilson interval needs at least one trial.");
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = (p + z2n / 2.0) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / denom;

    MonteCarloSummary s;
    s.metric = metric;
    s.mean = p;
    s.ci95_low = std::min(p, std::max(0.0, center - half));
    s.ci95_high = std::max(p, std::min(1.0, center + half));
    s.trials = trials;
    return s;
}

MonteCarloSummary mean_summary(const std::string &metric, double sum, double sum_sq, std::size_t trials)
{
    if (trials == 0)
        throw std::invalid_argument("Mean summary needs at least one trial.");
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    double var = (sum_sq - n * mean * mean) / std::max(1.0, n - 1.0);
    var = std::max(0.0, var);
    const double half = 1.959963984540054 * std::sqrt(var / n);

    MonteCarloSummary s;
    s.metric = metric;
    s.mean = mean;
    s.ci95_low = mean - half;
    s.ci95_high = mean + half;
    s.trials = trials;
    return s;
}

} // namespace nomasim
