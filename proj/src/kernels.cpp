// SPDX-License-Identifier: Apache-2.0
#include "juice/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace juice {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// log CN(x; mu, v) up to the additive constant shared by one mixture pass.
double log_cn(cplx x, cplx mu, double v) {
    return -std::log(std::numbers::pi * v) - std::norm(x - mu) / v;
}
}  // namespace

cplx SpikeGM::mean() const {
    cplx m{0.0, 0.0};
    for (const auto& c : components) m += c.weight * c.mean;
    return m;
}

double SpikeGM::second_moment() const {
    double s = 0.0;
    for (const auto& c : components) s += c.weight * (c.var + std::norm(c.mean));
    return s;
}

double SpikeGM::variance() const {
    return std::max(0.0, second_moment() - std::norm(mean()));
}

GaussMsg awgn_posterior(const GaussMsg& prior, cplx r, double n0) {
    if (std::isinf(prior.var)) return {r, n0};
    const double denom = prior.var + n0;
    if (denom <= 0.0) return {prior.mean, 0.0};
    return {(prior.var * r + n0 * prior.mean) / denom, prior.var * n0 / denom};
}

SpikePosterior spike_gm_posterior_full(const SpikeGM& prior, const GaussMsg& obs) {
    SpikePosterior out;
    const std::size_t m = prior.components.size();
    out.resp.resize(m);
    out.comp_mean.resize(m);
    out.comp_var.resize(m);

    if (std::isinf(obs.var)) {  // flat likelihood: posterior equals the prior
        out.spike_resp = prior.spike_weight;
        for (std::size_t j = 0; j < m; ++j) {
            out.resp[j] = prior.components[j].weight;
            out.comp_mean[j] = prior.components[j].mean;
            out.comp_var[j] = prior.components[j].var;
        }
        out.mean = prior.mean();
        out.var = prior.variance();
        return out;
    }

    // Log marginal likelihood of each branch under r = Y + CN(0, obs.var).
    std::vector<double> lw(m + 1, -kInf);
    if (prior.spike_weight > 0.0)
        lw[m] = std::log(prior.spike_weight) + log_cn(obs.mean, {0.0, 0.0}, obs.var);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& c = prior.components[j];
        const double v = c.var + obs.var;
        if (c.weight > 0.0) lw[j] = std::log(c.weight) + log_cn(obs.mean, c.mean, v);
        out.comp_mean[j] = (c.var * obs.mean + obs.var * c.mean) / v;
        out.comp_var[j] = c.var * obs.var / v;
    }

    const double mx = *std::max_element(lw.begin(), lw.end());
    if (!std::isfinite(mx)) throw numerical_error("spike_gm_posterior: all responsibilities underflow");
    double total = 0.0;
    for (double& w : lw) {
        w = std::exp(w - mx);
        total += w;
    }

    out.spike_resp = lw[m] / total;
    cplx mean{0.0, 0.0};
    double m2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        out.resp[j] = lw[j] / total;
        mean += out.resp[j] * out.comp_mean[j];
        m2 += out.resp[j] * (out.comp_var[j] + std::norm(out.comp_mean[j]));
    }
    out.mean = mean;
    out.var = std::max(0.0, m2 - std::norm(mean));
    return out;
}

GaussMsg spike_gm_posterior(const SpikeGM& prior, const GaussMsg& obs) {
    const SpikePosterior p = spike_gm_posterior_full(prior, obs);
    return {p.mean, p.var};
}

GaussMsg gm_moment_match(std::span<const WeightedGauss> components) {
    if (components.empty()) throw std::invalid_argument("gm_moment_match: empty mixture");
    double total = 0.0;
    for (const auto& c : components) {
        if (c.weight < 0.0) throw std::invalid_argument("gm_moment_match: negative weight");
        total += c.weight;
    }
    if (total <= 0.0) throw std::invalid_argument("gm_moment_match: zero total weight");

    cplx mean{0.0, 0.0};
    double m2 = 0.0;
    for (const auto& c : components) {
        const double w = c.weight / total;
        mean += w * c.mean;
        m2 += w * (c.var + std::norm(c.mean));
    }
    return {mean, std::max(0.0, m2 - std::norm(mean))};
}

}  // namespace juice
