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

#include "nomasim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nomasim
{

std::uint64_t substream_seed(std::uint64_t root_seed, std::uint64_t trial, std::uint64_t stream)
{
    // Murmur3-style finalizer applied to each counter in turn
    auto mix = [](std::uint64_t z) {
        z ^= z >> 33U;
        z *= 0xff51afd7ed558ccdULL;
        z ^= z >> 33U;
        z *= 0xc4ceb9fe1a85ec53ULL;
        z ^= z >> 33U;
        return z;
    };
    std::uint64_t h = mix(root_seed ^ 0x9e3779b97f4a7c15ULL);
    h = mix(h ^ (trial + 0x9e3779b97f4a7c15ULL));
    h = mix(h ^ (stream + 0xbf58476d1ce4e5b9ULL));
    return h;
}

static void check_noise(double n0)
{
    if (!(n0 > 0.0) || !std::isfinite(n0))
        throw std::invalid_argument("Noise PSD must be positive and finite.");
}

UserChannel::UserChannel(std::complex<double> h, double n0) : gain(h), noise_psd(n0)
{
    check_noise(n0);
    if (!std::isfinite(h.real()) || !std::isfinite(h.imag()))
        throw std::invalid_argument("Channel gain must be finite.");
}

UserChannel::UserChannel(arma::cx_vec h, double n0) : gain(std::move(h)), noise_psd(n0)
{
    check_noise(n0);
    if (!std::get<arma::cx_vec>(gain).is_finite())
        throw std::invalid_argument("Channel gain vector must be finite.");
}

UserChannel::UserChannel(arma::cx_mat h, double n0) : gain(std::move(h)), noise_psd(n0)
{
    check_noise(n0);
    if (!std::get<arma::cx_mat>(gain).is_finite())
        throw std::invalid_argument("Channel gain matrix must be finite.");
}

std::complex<double> UserChannel::scalar_gain() const
{
    if (!is_scalar())
        throw std::invalid_argument("Operation requires a scalar-form channel gain.");
    return std::get<std::complex<double>>(gain);
}

double UserChannel::power_gain() const
{
    return std::norm(scalar_gain());
}

double UserChannel::strength() const
{
    return power_gain() / noise_psd;
}

ChannelModel ChannelModel::deterministic(std::complex<double> value, double noise_psd)
{
    check_noise(noise_psd);
    ChannelModel m;
    m.kind_ = FadingKind::deterministic;
    m.fixed_value_ = value;
    m.noise_psd_ = noise_psd;
    return m;
}

ChannelModel ChannelModel::rayleigh(double mean_square_gain, double noise_psd)
{
    check_noise(noise_psd);
    if (!(mean_square_gain > 0.0))
        throw std::invalid_argument("Rayleigh mean-square gain must be positive.");
    ChannelModel m;
    m.kind_ = FadingKind::rayleigh;
    m.mean_square_gain_ = mean_square_gain;
    m.noise_psd_ = noise_psd;
    return m;
}

ChannelModel ChannelModel::rician(double k_factor, double mean_square_gain, double noise_psd)
{
    check_noise(noise_psd);
    if (!(mean_square_gain > 0.0))
        throw std::invalid_argument("Rician mean-square gain must be positive.");
    if (k_factor < 0.0)
        throw std::invalid_argument("Rician K-factor must be non-negative.");
    ChannelModel m;
    m.kind_ = FadingKind::rician;
    m.k_factor_ = k_factor;
    m.mean_square_gain_ = mean_square_gain;
    m.noise_psd_ = noise_psd;
    return m;
}

UserChannel sample_channel(const ChannelModel &model, RngStream &stream)
{
    switch (model.kind())
    {
    case FadingKind::deterministic:
        return {model.fixed_value(), model.noise_psd()};

    case FadingKind::rayleigh:
        return {stream.circular_gaussian(model.mean_square_gain()), model.noise_psd()};

    case FadingKind::rician:
    {
        const double k = model.k_factor();
        const double msg = model.mean_square_gain();
        // Fixed line-of-sight component on the real axis plus scattered part
        const std::complex<double> los(std::sqrt(k / (k + 1.0) * msg), 0.0);
        return {los + stream.circular_gaussian(msg / (k + 1.0)), model.noise_psd()};
    }
    }
    throw std::logic_error("Unhandled fading kind.");
}

SicOrdering identity_ordering(std::size_t n)
{
    SicOrdering s;
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    return s;
}

SicOrdering order_users(const std::vector<UserChannel> &channels)
{
    if (channels.empty())
        throw std::invalid_argument("Ordering requires at least one user.");

    std::vector<double> strength(channels.size());
    for (std::size_t i = 0; i < channels.size(); ++i)
        strength[i] = channels[i].strength();

    SicOrdering s = identity_ordering(channels.size());
    // stable sort keeps index order on ties
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](std::size_t a, std::size_t b) { return strength[a] > strength[b]; });
    return s;
}

} // namespace nomasim
