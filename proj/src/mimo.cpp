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

#include "nomasim/mimo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nomasim/common.hpp"

namespace nomasim
{

namespace
{

// Best unit vector inside the span of an orthonormal basis for the target
// functional |<target, v>|; falls back to the first basis vector when the
// target is orthogonal to the whole span.
arma::cx_vec best_in_span(const arma::cx_mat &basis, const arma::cx_vec &target)
{
    arma::cx_vec v = basis * (basis.t() * target);
    const double n = arma::norm(v);
    if (n < 1e-14)
        return basis.col(0);
    return v / n;
}

void check_detection_vector(const DetectionVector &d, std::size_t n_rx, const char *name)
{
    if (d.v.n_elem != n_rx)
        throw dimension_error(std::string(name) + " has wrong length.");
    if (std::abs(arma::norm(d.v) - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(name) + " must have unit norm.");
}

} // namespace

DetectionVector zf_detection_vector(const arma::cx_mat &h, std::size_t own_cluster)
{
    const std::size_t n_rx = h.n_rows;
    const std::size_t n_tx = h.n_cols;
    if (own_cluster >= n_tx)
        throw std::invalid_argument("Cluster index out of range.");
    if (n_rx < n_tx)
        throw dimension_error("Zero-forcing needs at least as many receive as transmit antennas "
                              "(N >= M); use signal alignment for N > M/2.");

    const arma::cx_vec own = h.col(own_cluster);

    if (n_tx == 1)
    {
        // No interference to null; combine along the own channel.
        const double n = arma::norm(own);
        if (n < 1e-14)
        {
            arma::cx_vec e(n_rx, arma::fill::zeros);
            e(0) = 1.0;
            return {e};
        }
        return {own / n};
    }

    arma::cx_mat others = h;
    others.shed_col(own_cluster);

    // v must satisfy others^H v = 0; dim(null) >= N - (M-1) >= 1 for N >= M
    arma::cx_mat basis = arma::null(others.t());
    if (basis.n_cols == 0)
        throw dimension_error("Interfering columns span the receive space; no zero-forcing "
                              "direction exists.");
    return {best_in_span(basis, own)};
}

ClusterRates cluster_zf_rates(const MimoCluster &cluster, const DetectionVector &v1,
                              const DetectionVector &v2)
{
    if (cluster.channel_user1.n_rows != cluster.channel_user2.n_rows ||
        cluster.channel_user1.n_cols != cluster.channel_user2.n_cols)
        throw dimension_error("Cluster members must share channel dimensions.");
    if (cluster.cluster_index >= cluster.channel_user1.n_cols)
        throw std::invalid_argument("Cluster index out of range.");
    if (!(cluster.snr > 0.0))
        throw std::invalid_argument("Transmit SNR must be positive.");
    if (cluster.power_coeff_user1 < 0.0 || cluster.power_coeff_user2 < 0.0 ||
        cluster.power_coeff_user1 + cluster.power_coeff_user2 > 1.0 + 1e-12)
        throw std::invalid_argument("Power coefficients must be non-negative and sum to at most 1.");
    check_detection_vector(v1, cluster.channel_user1.n_rows, "Detection vector 1");
    check_detection_vector(v2, cluster.channel_user2.n_rows, "Detection vector 2");

    const double g1 = std::norm(arma::cdot(v1.v, cluster.channel_user1.col(cluster.cluster_index)));
    const double g2 = std::norm(arma::cdot(v2.v, cluster.channel_user2.col(cluster.cluster_index)));
    if (g1 == 0.0 && g2 == 0.0)
        throw std::invalid_argument("Degenerate cluster: both effective gains are zero.");

    const bool user1_strong = g1 >= g2;
    const double g_strong = user1_strong ? g1 : g2;
    const double g_weak = user1_strong ? g2 : g1;
    const double a_strong = user1_strong ? cluster.power_coeff_user1 : cluster.power_coeff_user2;
    const double a_weak = user1_strong ? cluster.power_coeff_user2 : cluster.power_coeff_user1;
    const double rho = cluster.snr;

    ClusterRates r;
    r.weak_at_strong = std::log2(1.0 + rho * a_weak * g_strong / (rho * a_strong * g_strong + 1.0));
    r.weak = std::log2(1.0 + rho * a_weak * g_weak / (rho * a_strong * g_weak + 1.0));
    r.strong = std::log2(1.0 + rho * a_strong * g_strong);
    return r;
}

std::pair<arma::cx_vec, arma::cx_vec> signal_alignment_vectors(const arma::cx_mat &h1,
                                                               const arma::cx_mat &h2,
                                                               std::size_t own_cluster)
{
    const std::size_t n_rx = h1.n_rows;
    const std::size_t n_tx = h1.n_cols;
    if (h2.n_rows != n_rx || h2.n_cols != n_tx)
        throw dimension_error("Alignment requires equal channel dimensions.");
    if (own_cluster >= n_tx)
        throw std::invalid_argument("Cluster index out of range.");
    if (2 * n_rx <= n_tx)
        throw dimension_error("Signal alignment needs N > M/2; the stacked null space is empty.");

    // [v1; v2] lies in the null space of [h1^H, -h2^H] (M x 2N)
    arma::cx_mat constraint(n_tx, 2 * n_rx);
    constraint.head_cols(n_rx) = h1.t();
    constraint.tail_cols(n_rx) = -h2.t();

    arma::cx_mat basis = arma::null(constraint);
    if (basis.n_cols == 0)
        throw dimension_error("Alignment constraint has no null space for this channel pair.");

    // Prefer the direction with the largest aligned own-column gain. Both
    // halves see the same functional on the null space, so either column works.
    arma::cx_vec target(2 * n_rx, arma::fill::zeros);
    target.head(n_rx) = h1.col(own_cluster);
    arma::cx_vec u = best_in_span(basis, target) * std::sqrt(2.0);

    return {u.head(n_rx), u.tail(n_rx)};
}

arma::cx_vec aligned_precoder(const arma::cx_mat &effective_rows)
{
    const std::size_t n_tx = effective_rows.n_cols;
    if (n_tx == 0)
        throw std::invalid_argument("Precoder needs at least one transmit antenna.");

    arma::cx_vec e0(n_tx, arma::fill::zeros);
    e0(0) = 1.0;
    if (effective_rows.n_rows == 0 || arma::norm(effective_rows, "fro") == 0.0)
        return e0; // vacuous constraint

    // Rank decided at a loose tolerance so rows that collapsed onto a common
    // direction only up to round-off still count as one.
    const double smax = arma::svd(effective_rows).max();
    arma::cx_mat basis = arma::null(effective_rows, 1e-11 * smax);
    if (basis.n_cols == 0)
        throw infeasible_error("Effective rows span the full transmit space; no precoder column "
                               "can annihilate them (requires alignment-induced rank collapse).");
    return basis.col(0);
}

std::vector<SicVerdict> sic_feasibility(const std::vector<std::vector<double>> &sinr_table,
                                        const std::vector<double> &thresholds)
{
    const std::size_t k_users = thresholds.size();
    if (sinr_table.size() != k_users)
        throw std::invalid_argument("SINR table must have one row per user.");
    for (std::size_t n = 0; n < k_users; ++n)
    {
        if (sinr_table[n].size() != n + 1)
            throw std::invalid_argument("SINR table row " + std::to_string(n) +
                                        " must have " + std::to_string(n + 1) + " entries.");
    }

    std::vector<SicVerdict> verdicts(k_users);
    for (std::size_t k = 0; k < k_users; ++k)
    {
        for (std::size_t n = k; n < k_users; ++n)
        {
            if (sinr_table[n][k] < thresholds[k])
            {
                verdicts[k].feasible = false;
                verdicts[k].first_violation = std::make_pair(k, n);
                break;
            }
        }
    }
    return verdicts;
}

RateReport uplink_mmse_sic_rates(const std::vector<arma::cx_vec> &channels,
                                 const std::vector<double> &powers, double noise_psd,
                                 const SicOrdering &order)
{
    const std::size_t k_users = channels.size();
    if (k_users == 0)
        throw std::invalid_argument("MMSE-SIC needs at least one user.");
    if (powers.size() != k_users || order.order.size() != k_users)
        throw std::invalid_argument("Channels, powers and order must cover the same users.");
    if (!(noise_psd > 0.0))
        throw std::invalid_argument("Noise PSD must be positive.");
    const std::size_t n_ant = channels[0].n_elem;
    for (const auto &h : channels)
    {
        if (h.n_elem != n_ant)
            throw dimension_error("All user channel vectors must have the same length.");
    }

    std::vector<bool> decoded(k_users, false);
    RateReport report;
    report.per_user_rate.resize(k_users);

    for (std::size_t stage = 0; stage < k_users; ++stage)
    {
        const std::size_t u = order.order[stage];
        arma::cx_mat cov(n_ant, n_ant, arma::fill::eye);
        cov *= noise_psd;
        for (std::size_t j = 0; j < k_users; ++j)
        {
            if (j == u || decoded[j])
                continue;
            cov += powers[j] * channels[j] * channels[j].t();
        }
        const double sinr = powers[u] * std::real(arma::cdot(channels[u], arma::solve(cov, channels[u])));
        report.per_user_rate[u] = std::log2(1.0 + sinr);
        decoded[u] = true;
    }

    double sum = 0.0;
    for (double r : report.per_user_rate)
        sum += r;
    report.sum_rate = sum;
    return report;
}

double uplink_mac_sum_capacity(const std::vector<arma::cx_vec> &channels,
                               const std::vector<double> &powers, double noise_psd)
{
    if (channels.empty())
        throw std::invalid_argument("Sum capacity needs at least one user.");
    if (!(noise_psd > 0.0))
        throw std::invalid_argument("Noise PSD must be positive.");
    const std::size_t n_ant = channels[0].n_elem;
    arma::cx_mat gram(n_ant, n_ant, arma::fill::eye);
    for (std::size_t k = 0; k < channels.size(); ++k)
        gram += (powers[k] / noise_psd) * channels[k] * channels[k].t();
    return std::real(arma::log_det(gram)) / std::log(2.0);
}

ClusterTrialRates cluster_noma_oma_rates(const arma::cx_mat &h1, const arma::cx_mat &h2,
                                         std::size_t cluster_index, double snr, double alpha_strong)
{
    if (!(alpha_strong >= 0.0) || alpha_strong > 1.0)
        throw std::invalid_argument("Strong-user power fraction must lie in [0, 1].");

    const DetectionVector v1 = zf_detection_vector(h1, cluster_index);
    const DetectionVector v2 = zf_detection_vector(h2, cluster_index);

    const double g1 = std::norm(arma::cdot(v1.v, h1.col(cluster_index)));
    const double g2 = std::norm(arma::cdot(v2.v, h2.col(cluster_index)));
    const bool user1_strong = g1 >= g2;

    MimoCluster cluster;
    cluster.channel_user1 = h1;
    cluster.channel_user2 = h2;
    cluster.cluster_index = cluster_index;
    cluster.snr = snr;
    cluster.power_coeff_user1 = user1_strong ? alpha_strong : 1.0 - alpha_strong;
    cluster.power_coeff_user2 = user1_strong ? 1.0 - alpha_strong : alpha_strong;

    const ClusterRates rates = cluster_zf_rates(cluster, v1, v2);

    ClusterTrialRates out;
    out.noma_sum = rates.strong + rates.weak;
    // Matched baseline: each user gets the whole cluster power half the time.
    out.oma_sum = 0.5 * std::log2(1.0 + snr * std::max(g1, g2)) +
                  0.5 * std::log2(1.0 + snr * std::min(g1, g2));
    return out;
}

} // namespace nomasim
