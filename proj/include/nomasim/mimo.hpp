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

#ifndef NOMASIM_MIMO_HPP
#define NOMASIM_MIMO_HPP

#include <armadillo>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nomasim/channel.hpp"
#include "nomasim/siso_rates.hpp"

namespace nomasim
{

/*!
 * Two-user cluster in a cluster-based MIMO-NOMA downlink. Each user owns an
 * N x M channel matrix (N receive antennas, M transmit antennas = clusters
 * under the identity precoder); cluster_index selects the precoder column
 * that carries this cluster's superposed mixture. power coefficients are
 * fractions of the cluster's share of the transmit power, snr is the
 * transmit SNR (noise normalized to 1 after unit-norm detection).
 */
struct MimoCluster
{
    arma::cx_mat channel_user1; // N x M
    arma::cx_mat channel_user2; // N x M
    double power_coeff_user1 = 0.0;
    double power_coeff_user2 = 0.0;
    double snr = 1.0;
    std::size_t cluster_index = 0;
};

// Unit-norm receive combining vector (norm 1 within 1e-12).
struct DetectionVector
{
    arma::cx_vec v;
};

// Precoder whose columns (one per cluster) have unit norm.
struct PrecoderMatrix
{
    arma::cx_mat p; // M x C
};

/*!
 * Zero-forcing detection vector: orthogonal to every column of H except
 * own_cluster, leaving only the own cluster's mixture after combining.
 * Among all null-space directions the one with the largest own-column gain
 * is returned. Requires N >= M; smaller N needs signal alignment instead.
 */
DetectionVector zf_detection_vector(const arma::cx_mat &h, std::size_t own_cluster);

struct ClusterRates
{
    double strong = 0.0;         // strong user's own rate after SIC
    double weak = 0.0;           // weak user's rate decoding itself
    double weak_at_strong = 0.0; // rate of the weak user's signal at the strong user
};

/*!
 * Intra-cluster NOMA rates after zero-forcing. Strong/weak labels are decided
 * by the effective post-detection gains |v^H h|^2; the weak user's signal is
 * always decodable at the strong user (weak_at_strong >= weak), which is what
 * makes SIC inside the cluster work.
 */
ClusterRates cluster_zf_rates(const MimoCluster &cluster, const DetectionVector &v1,
                              const DetectionVector &v2);

/*!
 * Signal-alignment detection vectors: chosen so both users of a cluster
 * present the same effective row, v1^H h1 = v2^H h2 for every transmit
 * antenna. Feasible when 2N > M (the stacked null space is then nonempty).
 * The two halves share a common scaling (stacked norm sqrt(2)), which the
 * alignment equality requires; callers renormalize per branch if needed.
 */
std::pair<arma::cx_vec, arma::cx_vec> signal_alignment_vectors(const arma::cx_mat &h1,
                                                               const arma::cx_mat &h2,
                                                               std::size_t own_cluster);

/*!
 * Precoder column for one cluster given the effective channel rows of all
 * other clusters (2(M-1) rows of length M). A generic row set of that size
 * has no null space; alignment collapses each other cluster's two rows onto
 * one direction, which is what makes the system solvable. Throws when the
 * rows span the full space.
 */
arma::cx_vec aligned_precoder(const arma::cx_mat &effective_rows);

struct SicVerdict
{
    bool feasible = true;
    // first (signal k, observer n) entry below threshold, when infeasible
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

/*!
 * SIC feasibility under ascending decoding order: user k's signal must reach
 * its SINR threshold at every user n >= k that has to decode-and-cancel it.
 * sinr_table is lower-triangular, sinr_table[n][k] = SINR of signal k at
 * observer n for k <= n.
 */
std::vector<SicVerdict> sic_feasibility(const std::vector<std::vector<double>> &sinr_table,
                                        const std::vector<double> &thresholds);

/*!
 * Uplink MMSE-SIC at an M-antenna base station. Users are decoded in the
 * given order; each stage treats the not-yet-decoded users as colored
 * interference through the interference-plus-noise covariance. Individual
 * rates depend on the order, the sum equals log2 det(I + N0^-1 sum P_k h_k h_k^H)
 * for every order.
 */
RateReport uplink_mmse_sic_rates(const std::vector<arma::cx_vec> &channels,
                                 const std::vector<double> &powers, double noise_psd,
                                 const SicOrdering &order);

// Sum capacity of the uplink MIMO MAC, the order-independent reference.
double uplink_mac_sum_capacity(const std::vector<arma::cx_vec> &channels,
                               const std::vector<double> &powers, double noise_psd);

struct ClusterTrialRates
{
    double noma_sum = 0.0;
    double oma_sum = 0.0; // users time-share the block 50/50 with full cluster power
};

/*!
 * One cluster's sum rate under MIMO-NOMA and the matched time-shared
 * MIMO-OMA baseline, both after the same zero-forcing detection. Used per
 * Monte Carlo trial by the ergodic-rate experiment.
 */
ClusterTrialRates cluster_noma_oma_rates(const arma::cx_mat &h1, const arma::cx_mat &h2,
                                         std::size_t cluster_index, double snr, double alpha_strong);

} // namespace nomasim

#endif
