// SPDX-License-Identifier: Apache-2.0
#include "juice/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace juice {

double SystemConfig::mean_beta() const {
    if (beta.empty()) return 1.0;
    double s = 0.0;
    for (double b : beta) s += b;
    return s / static_cast<double>(K);
}

void SystemConfig::validate() const {
    if (K < 1 || L < 1) throw std::invalid_argument("config: K and L must be >= 1");
    if (n_rs < 1 || T < n_rs) throw std::invalid_argument("config: need T >= n_rs >= 1");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("config: lambda in [0, 1]");
    if (!(n0() > 0.0)) throw std::invalid_argument("config: N0 must be positive");
    if (!beta.empty() && static_cast<int>(beta.size()) != K)
        throw std::invalid_argument("config: beta size must equal K");
    for (double b : beta)
        if (!(b > 0.0)) throw std::invalid_argument("config: beta entries must be positive");
}

Eigen::VectorXcd FrameTruth::effective_channel() const {
    Eigen::VectorXcd g = h;
    for (int k = 0; k < h.size(); ++k)
        if (u(k) == 0) g(k) = cplx(0.0, 0.0);
    return g;
}

Eigen::MatrixXd generate_spreading_matrix(const SystemConfig& cfg, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0xA5A5));
    Eigen::MatrixXd A(cfg.L, cfg.K);
    const double s = 1.0 / std::sqrt(static_cast<double>(cfg.L));
    for (int k = 0; k < cfg.K; ++k)
        for (int l = 0; l < cfg.L; ++l) A(l, k) = s * rng.gauss();
    return A;
}

namespace {

std::vector<double> draw_beta(const SystemConfig& cfg, Rng& rng) {
    if (!cfg.fading) {
        if (!cfg.beta.empty()) return cfg.beta;
        return std::vector<double>(static_cast<std::size_t>(cfg.K), 1.0);
    }
    const LargeScaleFading& f = *cfg.fading;
    const double noise_dbm = f.noise_psd_dbm_hz + 10.0 * std::log10(f.bandwidth_hz);
    std::vector<double> beta(static_cast<std::size_t>(cfg.K));
    for (double& b : beta) {
        const double d = rng.uniform(f.d_min_km, f.d_max_km);
        const double pl_db = f.pathloss_a_db - f.pathloss_b * std::log10(d);
        // received-power-to-noise ratio, so that internally N0 = n0() applies
        // against beta expressed in SNR units
        b = std::pow(10.0, (f.tx_power_dbm + pl_db - noise_dbm) / 10.0) * cfg.n0();
    }
    return beta;
}

}  // namespace

FrameTruth generate_frame(const SystemConfig& cfg, std::uint64_t seed) {
    return generate_frame_with_matrix(cfg, generate_spreading_matrix(cfg, seed), seed);
}

FrameTruth generate_frame_with_matrix(const SystemConfig& cfg, Eigen::MatrixXd A, std::uint64_t seed) {
    cfg.validate();
    FrameTruth out;
    out.A = std::move(A);

    Rng rng(derive_seed(seed, 0x5EED));
    out.beta = draw_beta(cfg, rng);

    out.h.resize(cfg.K);
    out.u.resize(cfg.K);
    for (int k = 0; k < cfg.K; ++k) {
        out.h(k) = rng.cgauss(out.beta[static_cast<std::size_t>(k)]);
        out.u(k) = rng.bernoulli(cfg.lambda) ? 1 : 0;
    }

    const cplx sp = cfg.constellation.reference_symbol();
    out.X.resize(cfg.K, cfg.T);
    for (int k = 0; k < cfg.K; ++k) {
        for (int t = 0; t < cfg.T; ++t)
            out.X(k, t) = t < cfg.n_rs ? sp : sample_symbol(cfg.constellation, rng);
    }

    const double n0 = cfg.n0();
    out.W.resize(cfg.L, cfg.T);
    for (int t = 0; t < cfg.T; ++t)
        for (int l = 0; l < cfg.L; ++l) out.W(l, t) = rng.cgauss(n0);

    Eigen::VectorXcd g = out.h;
    for (int k = 0; k < cfg.K; ++k)
        if (out.u(k) == 0) g(k) = cplx(0.0, 0.0);
    out.R = (out.A.cast<cplx>() * g.asDiagonal() * out.X) + out.W;
    return out;
}

SpikeGM g_prior(double lambda, double beta_k) {
    SpikeGM p;
    p.spike_weight = 1.0 - lambda;
    if (lambda > 0.0) p.components.push_back({lambda, {0.0, 0.0}, beta_k});
    return p;
}

SpikeGM y_prior(const SystemConfig& cfg, double beta_k) {
    SpikeGM p;
    p.spike_weight = 1.0 - cfg.lambda;
    const auto& pts = cfg.constellation.points;
    if (cfg.lambda > 0.0) {
        const double w = cfg.lambda / static_cast<double>(pts.size());
        for (const cplx& s : pts) p.components.push_back({w, {0.0, 0.0}, beta_k * std::norm(s)});
    }
    return p;
}

PriorMessages prior_messages(const SystemConfig& cfg, const std::vector<double>& beta) {
    PriorMessages m;
    m.g.reserve(static_cast<std::size_t>(cfg.K));
    m.y.reserve(static_cast<std::size_t>(cfg.K));
    for (int k = 0; k < cfg.K; ++k) {
        const double b = beta.empty() ? cfg.beta_of(k) : beta[static_cast<std::size_t>(k)];
        m.g.push_back(g_prior(cfg.lambda, b));
        m.y.push_back(y_prior(cfg, b));
    }
    return m;
}

double activity_threshold(const SystemConfig& cfg, double beta_k) {
    const double n0 = cfg.n0();
    return cfg.g_th_scale * std::sqrt(beta_k * n0 / (n0 + beta_k));
}

}  // namespace juice
