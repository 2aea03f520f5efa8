// SPDX-License-Identifier: Apache-2.0
#include "juice/smd.hpp"

#include <cmath>
#include <string>

namespace juice {

namespace {

// A is real; complex vectors multiply as two real products.
Eigen::VectorXcd real_mat_cplx_vec(const Eigen::MatrixXd& A, const Eigen::VectorXcd& x) {
    Eigen::VectorXd re = A * x.real();
    Eigen::VectorXd im = A * x.imag();
    Eigen::VectorXcd out(A.rows());
    out.real() = re;
    out.imag() = im;
    return out;
}

Eigen::VectorXcd real_matT_cplx_vec(const Eigen::MatrixXd& A, const Eigen::VectorXcd& x) {
    Eigen::VectorXd re = A.transpose() * x.real();
    Eigen::VectorXd im = A.transpose() * x.imag();
    Eigen::VectorXcd out(A.cols());
    out.real() = re;
    out.imag() = im;
    return out;
}

}  // namespace

GampResult gamp_slot(const SpreadOp& op, const Eigen::VectorXcd& r_slot,
                     const std::vector<SpikeGM>& priors, double n0,
                     const GampOptions& opt, const Eigen::VectorXcd* warm_s) {
    const int L = op.rows();
    const int K = op.cols();
    if (r_slot.size() != L || static_cast<int>(priors.size()) != K)
        throw std::invalid_argument("gamp_slot: dimension mismatch");

    GampResult res;
    res.y_hat.resize(K);
    res.v_y.resize(K);
    for (int k = 0; k < K; ++k) {
        res.y_hat(k) = priors[static_cast<std::size_t>(k)].mean();
        res.v_y(k) = priors[static_cast<std::size_t>(k)].variance();
    }
    res.s_hat = warm_s ? *warm_s : Eigen::VectorXcd::Zero(L);
    res.r_hat.resize(K);
    res.v_r.resize(K);

    Eigen::VectorXd v_p(L), v_z(L), v_s(L);
    Eigen::VectorXcd p_hat(L), z_hat(L);

    double prev_vy_sum = res.v_y.sum();
    for (int q = 1; q <= opt.max_iters; ++q) {
        // output side: cumulate messages at the observation rows
        v_p = op.A2 * res.v_y;
        p_hat = real_mat_cplx_vec(op.A, res.y_hat) - v_p.array().cwiseProduct(res.s_hat.array().abs() * 0.0).matrix().cast<cplx>();
        for (int l = 0; l < L; ++l) p_hat(l) = p_hat(l) + (-v_p(l)) * res.s_hat(l);
        for (int l = 0; l < L; ++l) {
            const GaussMsg post = awgn_posterior({p_hat(l), v_p(l)}, r_slot(l), n0);
            z_hat(l) = post.mean;
            v_z(l) = post.var;
            const double vp = std::max(v_p(l), 1e-300);
            v_s(l) = std::max(0.0, (1.0 - v_z(l) / vp) / vp);
            res.s_hat(l) = (z_hat(l) - p_hat(l)) / vp;
        }

        // input side: extrinsic means and variances per user
        Eigen::VectorXd denom = op.A2.transpose() * v_s;
        Eigen::VectorXcd corr = real_matT_cplx_vec(op.A, res.s_hat);
        double vy_sum = 0.0;
        for (int k = 0; k < K; ++k) {
            res.v_r(k) = 1.0 / std::max(denom(k), 1e-300);
            res.r_hat(k) = res.y_hat(k) + res.v_r(k) * corr(k);
            const GaussMsg post =
                spike_gm_posterior(priors[static_cast<std::size_t>(k)], {res.r_hat(k), res.v_r(k)});
            const double d = opt.damping;
            res.y_hat(k) = d * post.mean + (1.0 - d) * res.y_hat(k);
            res.v_y(k) = d * post.var + (1.0 - d) * res.v_y(k);
            vy_sum += res.v_y(k);
        }

        if (!std::isfinite(vy_sum) || !p_hat.allFinite() || !res.y_hat.allFinite())
            throw numerical_error("gamp_slot: non-finite intermediate at iteration " + std::to_string(q));

        res.iterations = q;
        if (opt.collect_trace)
            res.trace.push_back({p_hat, v_p, res.s_hat, res.y_hat, res.v_y});
        if (q > 1 && std::abs(vy_sum - prev_vy_sum) <= opt.tol * std::max(prev_vy_sum, 1e-300))
            break;
        prev_vy_sum = vy_sum;
    }
    return res;
}

}  // namespace juice
