#ifndef LFC_CONDITIONAL_OPTIMIZER_HPP
#define LFC_CONDITIONAL_OPTIMIZER_HPP

#include <utility>
#include <vector>

#include "lfc/core_model.hpp"

namespace lfc {

/// Snapshot history of the alternating SNR maximization.
struct OptimizationTrace {
  struct Snapshot {
    Eigen::VectorXd combining;
    Eigen::MatrixXd encoding;
    double snr;
  };
  std::vector<Snapshot> iterates;
  bool converged = false;
  int iterations = 0;
};

/// Best strictly lower triangular encoding matrix for a fixed unit
/// combiner q under the power budget (1+sigma2) ||F||_F^2 <= N gamma rho:
///   f_{i,j} = -q_i q_j / ((1+sigma2) ||q_(j)||^2 + lambda),  i > j,
/// where q_(j) is the suffix [q_{j+1}, ..., q_N] and lambda >= 0 is the
/// smallest multiplier meeting the budget (lambda = 0 when it is slack).
Eigen::MatrixXd optimize_encoding_given_combiner(const Eigen::VectorXd& q,
                                                 const ChannelParams& params,
                                                 double gamma);

/// Best unit combiner for a fixed encoding matrix: the eigenvector of
/// M = (I+F)(I+F)^T + sigma2 F F^T for the smallest eigenvalue.  Sign
/// is fixed so the first nonzero entry is positive; the fully
/// degenerate F = 0 case returns e1.
Eigen::VectorXd optimize_combiner_given_encoding(const Eigen::MatrixXd& encoding,
                                                 double sigma2);

/// Least-squares / MVU combiner for a fixed message direction g:
/// q^T = g^T C^{-1} / (g^T C^{-1} g) with C = (I+F)(I+F)^T + sigma2 F F^T.
Eigen::VectorXd projection_combiner(const Eigen::MatrixXd& encoding,
                                    const Eigen::VectorXd& message_dir,
                                    double sigma2);

/// Alternates the two conditional maximizations from q0 until the SNR
/// gain drops below tol or max_iter is reached.  The SNR sequence in
/// the trace is non-decreasing.
std::pair<LinearScheme, OptimizationTrace> alternate_optimize(
    const Eigen::VectorXd& q0, const ChannelParams& params, double gamma,
    double tol = 1e-10, int max_iter = 500);

/// Received-SNR upper bound (1+sigma2) N rho / sigma2; +infinity at
/// sigma2 = 0 where the bound diverges.
double snr_upper_bound(const ChannelParams& params);

/// Butman's bound (1+sigma2) N rho / sigma2 + 2 ||F||_F^2 + N / sigma2,
/// strictly above snr_upper_bound; +infinity at sigma2 = 0.
double butman_bound(const LinearScheme& scheme);

}  // namespace lfc

#endif
