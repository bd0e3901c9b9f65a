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

#ifndef NOMASIM_RNG_HPP
#define NOMASIM_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace nomasim
{

// Counter-based derivation of independent substream seeds from one root seed.
// Every (trial, stream) pair maps to its own generator state, so Monte Carlo
// results do not depend on how trials are batched across worker threads.
std::uint64_t substream_seed(std::uint64_t root_seed, std::uint64_t trial, std::uint64_t stream);

/*!
 * One independent random substream. Construction is cheap relative to a
 * simulation trial; typical use is one stream per (trial index, user index).
 * Draw sequences are fully determined by (root_seed, trial, stream).
 */
class RngStream
{
  public:
    RngStream(std::uint64_t root_seed, std::uint64_t trial, std::uint64_t stream)
        : gen_(substream_seed(root_seed, trial, stream))
    {
    }

    // Uniform in [0, 1)
    double uniform()
    {
        return std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
    }

    // Standard normal
    double gaussian()
    {
        return normal_(gen_);
    }

    // Circularly-symmetric complex Gaussian with E{|z|^2} = variance
    std::complex<double> circular_gaussian(double variance)
    {
        const double s = std::sqrt(variance / 2.0);
        return {s * gaussian(), s * gaussian()};
    }

    std::uint64_t next_u64()
    {
        return gen_();
    }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace nomasim

#endif
