// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace juice {

using cplx = std::complex<double>;

// Raised when mixture responsibilities underflow to nothing; callers never
// receive silent NaNs.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gaussian message in mean/variance form. var = +inf is the uninformative
// sentinel.
struct GaussMsg {
    cplx mean{0.0, 0.0};
    double var = 0.0;
};

// Spike-and-Gaussian-mixture density: w * delta(y) + sum_j c_j CN(mu_j, tau_j)
// with w + sum_j c_j = 1. The delta is kept symbolic, never as a narrow
// Gaussian.
struct SpikeGM {
    struct Component {
        double weight = 0.0;
        cplx mean{0.0, 0.0};
        double var = 0.0;
    };
    double spike_weight = 0.0;
    std::vector<Component> components;

    cplx mean() const;
    double second_moment() const;  // E|Y|^2
    double variance() const;       // E|Y - EY|^2

    static SpikeGM pure_spike() { return SpikeGM{1.0, {}}; }
};

// Posterior of z ~ CN(prior) observed through r = z + CN(0, n0).
GaussMsg awgn_posterior(const GaussMsg& prior, cplx r, double n0);

// Full posterior breakdown of Y ~ prior given pseudo-observation
// r = Y + CN(0, obs.var): per-branch responsibilities plus the posterior
// moments. Responsibilities are combined in the log domain.
struct SpikePosterior {
    cplx mean{0.0, 0.0};
    double var = 0.0;
    double spike_resp = 0.0;             // posterior mass on Y = 0
    std::vector<double> resp;            // per-component responsibility
    std::vector<cplx> comp_mean;         // per-component posterior mean
    std::vector<double> comp_var;        // per-component posterior variance
};
SpikePosterior spike_gm_posterior_full(const SpikeGM& prior, const GaussMsg& obs);
GaussMsg spike_gm_posterior(const SpikeGM& prior, const GaussMsg& obs);

// Collapses a weighted Gaussian mixture to a single Gaussian with the same
// mean and variance. Weights are renormalized; variance clamped at >= 0.
struct WeightedGauss {
    double weight = 0.0;
    cplx mean{0.0, 0.0};
    double var = 0.0;
};
GaussMsg gm_moment_match(std::span<const WeightedGauss> components);

inline GaussMsg gm_moment_match(const std::vector<WeightedGauss>& components) {
    return gm_moment_match(std::span<const WeightedGauss>(components));
}

}  // namespace juice
