// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "juice/kernels.hpp"

namespace juice {

// Spreading operator with the squared-entry matrix cached; the same frame
// reuses it across slots and outer iterations.
struct SpreadOp {
    Eigen::MatrixXd A;   // L x K
    Eigen::MatrixXd A2;  // entrywise square

    SpreadOp() = default;
    explicit SpreadOp(Eigen::MatrixXd a) : A(std::move(a)), A2(A.cwiseProduct(A)) {}
    int rows() const { return static_cast<int>(A.rows()); }
    int cols() const { return static_cast<int>(A.cols()); }
};

struct GampOptions {
    int max_iters = 20;       // Q
    double damping = 0.8;     // applied to the (y, v_y) update
    double tol = 1e-6;        // relative change of sum_k v_y
    bool collect_trace = false;
};

struct GampTraceEntry {
    Eigen::VectorXcd p_hat;
    Eigen::VectorXd v_p;
    Eigen::VectorXcd s_hat;
    Eigen::VectorXcd y_hat;
    Eigen::VectorXd v_y;
};

struct GampResult {
    Eigen::VectorXcd r_hat;  // extrinsic means, per user
    Eigen::VectorXd v_r;     // extrinsic variances, per user
    Eigen::VectorXcd y_hat;  // posterior means
    Eigen::VectorXd v_y;     // posterior variances
    Eigen::VectorXcd s_hat;  // final residual state (for warm starts)
    int iterations = 0;
    std::vector<GampTraceEntry> trace;
};

// One slot of multi-user detection: Gaussian message passing with the Onsager
// correction, the AWGN output step, and the spike-GM input denoiser.
// Throws numerical_error with the iteration index on non-finite intermediates.
GampResult gamp_slot(const SpreadOp& op, const Eigen::VectorXcd& r_slot,
                     const std::vector<SpikeGM>& priors, double n0,
                     const GampOptions& opt = {},
                     const Eigen::VectorXcd* warm_s = nullptr);

}  // namespace juice
