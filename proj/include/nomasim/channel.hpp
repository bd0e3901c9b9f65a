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

#ifndef NOMASIM_CHANNEL_HPP
#define NOMASIM_CHANNEL_HPP

#include <armadillo>
#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "nomasim/rng.hpp"

namespace nomasim
{

/*!
 * One fading realization for one user: a complex gain (scalar, vector or
 * matrix form, exactly one populated) plus the noise power spectral density
 * seen by that user's receiver. Dimensionless amplitude gains; noise in W/Hz.
 */
struct UserChannel
{
    std::variant<std::complex<double>, arma::cx_vec, arma::cx_mat> gain;
    double noise_psd = 1.0;

    UserChannel(std::complex<double> h, double n0);
    UserChannel(arma::cx_vec h, double n0);
    UserChannel(arma::cx_mat h, double n0);

    bool is_scalar() const
    {
        return std::holds_alternative<std::complex<double>>(gain);
    }

    // Scalar-form accessors; throw std::invalid_argument for other forms.
    std::complex<double> scalar_gain() const;
    double power_gain() const;  // |h|^2
    double strength() const;    // |h|^2 / noise_psd, the SIC ordering metric
};

enum class FadingKind
{
    deterministic,
    rayleigh,
    rician
};

/*!
 * Statistical description of one user's scalar channel. Rayleigh draws a
 * circularly-symmetric complex Gaussian with E{|h|^2} = mean_square_gain.
 * Rician splits the same total mean-square gain into a fixed line-of-sight
 * part of power k/(k+1) and a scattered part of power 1/(k+1), so power
 * comparisons across K-factors stay fair; k = 0 degenerates to Rayleigh.
 */
class ChannelModel
{
  public:
    static ChannelModel deterministic(std::complex<double> value, double noise_psd);
    static ChannelModel rayleigh(double mean_square_gain, double noise_psd);
    static ChannelModel rician(double k_factor, double mean_square_gain, double noise_psd);

    FadingKind kind() const { return kind_; }
    double noise_psd() const { return noise_psd_; }
    double mean_square_gain() const { return mean_square_gain_; }
    double k_factor() const { return k_factor_; }
    std::complex<double> fixed_value() const { return fixed_value_; }

  private:
    ChannelModel() = default;

    FadingKind kind_ = FadingKind::deterministic;
    std::complex<double> fixed_value_{0.0, 0.0};
    double mean_square_gain_ = 1.0;
    double k_factor_ = 0.0;
    double noise_psd_ = 1.0;
};

// Draw one scalar realization from the model. Pure given the stream state.
UserChannel sample_channel(const ChannelModel &model, RngStream &stream);

/*!
 * SIC decoding order: order[0] is the strongest user (largest |h|^2 / N).
 * Always a valid permutation of 0..K-1.
 */
struct SicOrdering
{
    std::vector<std::size_t> order;
};

// Identity ordering over n users, for callers whose inputs are pre-sorted.
SicOrdering identity_ordering(std::size_t n);

// Canonical SIC ordering: sort by |h|^2 / noise_psd descending, ties broken
// by lower original index. Requires scalar-form channels.
SicOrdering order_users(const std::vector<UserChannel> &channels);

} // namespace nomasim

#endif
