// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "juice/constellation.hpp"
#include "juice/kernels.hpp"
#include "juice/rng.hpp"

namespace juice {

// Large-scale fading draw: beta_k(dB) = -128.1 - 36.7 log10(d_k) with
// d_k ~ U(d_min, d_max) km, noise from the stated PSD over the bandwidth,
// all re-expressed relative to N0 so the internal convention stays SNR = 1/N0.
struct LargeScaleFading {
    double tx_power_dbm = 20.0;
    double d_min_km = 0.05;
    double d_max_km = 1.0;
    double pathloss_a_db = -128.1;
    double pathloss_b = 36.7;
    double noise_psd_dbm_hz = -169.0;
    double bandwidth_hz = 1e6;
};

struct SystemConfig {
    int K = 100;                 // potential users
    int L = 50;                  // spreading length
    int T = 7;                   // slots per frame
    double lambda = 0.1;         // activity probability
    double snr_db = 10.0;        // SNR = 1/N0
    int n_rs = 1;                // reference slots, placed first
    Constellation constellation = build_constellation("qpsk");
    std::vector<double> beta;    // per-user large-scale gains; empty = all 1
    std::optional<LargeScaleFading> fading;  // overrides beta when set
    double g_th_scale = 3.0;     // c in g_th = c * sqrt(beta N0 / (N0 + beta))

    double n0() const { return std::pow(10.0, -snr_db / 10.0); }
    double beta_of(int k) const { return beta.empty() ? 1.0 : beta[static_cast<std::size_t>(k)]; }
    double mean_beta() const;
    void validate() const;
};

struct FrameTruth {
    Eigen::MatrixXd A;    // L x K, entries N(0, 1/L)
    Eigen::VectorXcd h;   // K, h_k ~ CN(0, beta_k)
    Eigen::VectorXi u;    // K, Bernoulli(lambda)
    Eigen::MatrixXcd X;   // K x T, first n_rs columns pinned to s_p
    Eigen::MatrixXcd W;   // L x T, CN(0, N0)
    Eigen::MatrixXcd R;   // A diag(h) diag(u) X + W
    std::vector<double> beta;  // realized per-user gains (fading mode draws them)

    Eigen::VectorXcd effective_channel() const;  // g_k = h_k u_k
};

Eigen::MatrixXd generate_spreading_matrix(const SystemConfig& cfg, std::uint64_t seed);

FrameTruth generate_frame(const SystemConfig& cfg, std::uint64_t seed);
FrameTruth generate_frame_with_matrix(const SystemConfig& cfg, Eigen::MatrixXd A, std::uint64_t seed);

// Eq.-style a-priori messages for the effective channel g_k and the
// effective signal y_{k,t}. The y prior has mean 0 and second moment
// lambda * beta_k for a unit-energy constellation.
SpikeGM g_prior(double lambda, double beta_k);
SpikeGM y_prior(const SystemConfig& cfg, double beta_k);

struct PriorMessages {
    std::vector<SpikeGM> g;  // per user
    std::vector<SpikeGM> y;  // per user (identical across slots)
};
PriorMessages prior_messages(const SystemConfig& cfg, const std::vector<double>& beta);

// Per-user activity threshold: g_th_scale * sqrt(beta N0 / (N0 + beta)).
double activity_threshold(const SystemConfig& cfg, double beta_k);

}  // namespace juice
