#include "lfc/conditional_optimizer.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace lfc {

namespace {

// Encoding matrix for a fixed combiner at a given multiplier.
Eigen::MatrixXd encoding_at_lambda(const Eigen::VectorXd& q, double sigma2,
                                   double lambda) {
  const int n = static_cast<int>(q.size());
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
  double suffix = 0.0;  // ||q_(j)||^2, built from the last column backward
  for (int j = n - 1; j >= 0; --j) {
    if (suffix > 0.0) {
      const double denom = (1.0 + sigma2) * suffix + lambda;
      for (int i = j + 1; i < n; ++i) f(i, j) = -q(i) * q(j) / denom;
    }
    suffix += q(j) * q(j);
  }
  return f;
}

}  // namespace

Eigen::MatrixXd optimize_encoding_given_combiner(const Eigen::VectorXd& q,
                                                 const ChannelParams& params,
                                                 double gamma) {
  const int n = static_cast<int>(q.size());
  if (gamma <= 0.0 || n < 2) return Eigen::MatrixXd::Zero(n, n);

  const double budget = n * gamma * params.rho / (1.0 + params.sigma2);
  const double s2 = params.sigma2;

  Eigen::MatrixXd f = encoding_at_lambda(q, s2, 0.0);
  if (f.squaredNorm() <= budget * (1.0 + 1e-12)) return f;

  // ||F(lambda)||^2 decreases strictly in lambda; bracket then bisect.
  double lo = 0.0;
  double hi = 1.0;
  while (encoding_at_lambda(q, s2, hi).squaredNorm() > budget) {
    hi *= 2.0;
    if (hi > 1e300) throw NumericalError("encoding budget not bracketable");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (encoding_at_lambda(q, s2, mid).squaredNorm() > budget) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12 * (1.0 + hi)) break;
  }
  return encoding_at_lambda(q, s2, hi);
}

Eigen::VectorXd optimize_combiner_given_encoding(
    const Eigen::MatrixXd& encoding, double sigma2) {
  const int n = static_cast<int>(encoding.rows());
  if (encoding.isZero(0.0)) {
    // M = I; every unit vector is optimal.  Deterministic tie-break.
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(n);
    e1(0) = 1.0;
    return e1;
  }
  const Eigen::MatrixXd iplusf =
      Eigen::MatrixXd::Identity(n, n) + encoding;
  const Eigen::MatrixXd m = iplusf * iplusf.transpose() +
                            sigma2 * encoding * encoding.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  Eigen::VectorXd q = solver.eigenvectors().col(0);
  for (int i = 0; i < n; ++i) {
    if (std::abs(q(i)) > 1e-12) {
      if (q(i) < 0.0) q = -q;
      break;
    }
  }
  return q;
}

Eigen::VectorXd projection_combiner(const Eigen::MatrixXd& encoding,
                                    const Eigen::VectorXd& message_dir,
                                    double sigma2) {
  const int n = static_cast<int>(encoding.rows());
  const Eigen::MatrixXd iplusf =
      Eigen::MatrixXd::Identity(n, n) + encoding;
  const Eigen::MatrixXd c = iplusf * iplusf.transpose() +
                            sigma2 * encoding * encoding.transpose();
  const Eigen::VectorXd cinvg = c.ldlt().solve(message_dir);
  return cinvg / message_dir.dot(cinvg);
}

std::pair<LinearScheme, OptimizationTrace> alternate_optimize(
    const Eigen::VectorXd& q0, const ChannelParams& params, double gamma,
    double tol, int max_iter) {
  const int n = params.n;
  LinearScheme scheme;
  scheme.params = params;
  scheme.gamma = gamma;
  scheme.signal_energy = (1.0 - gamma) * n * params.rho;

  Eigen::VectorXd q = q0.normalized();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
  OptimizationTrace trace;

  auto snr_of = [&](const Eigen::VectorXd& qv, const Eigen::MatrixXd& fv) {
    scheme.encoding = fv;
    scheme.combining = qv;
    scheme.message_dir = qv;
    return received_snr_direct(scheme);
  };

  double snr = snr_of(q, f);
  trace.iterates.push_back({q, f, snr});

  for (int iter = 0; iter < max_iter; ++iter) {
    f = optimize_encoding_given_combiner(q, params, gamma);
    q = optimize_combiner_given_encoding(f, params.sigma2);
    const double next = snr_of(q, f);
    trace.iterates.push_back({q, f, next});
    ++trace.iterations;
    if (next - snr < tol) {
      trace.converged = true;
      snr = std::max(snr, next);
      break;
    }
    snr = next;
  }

  scheme.encoding = f;
  scheme.combining = q;
  scheme.message_dir = q;
  return {scheme, trace};
}

double snr_upper_bound(const ChannelParams& params) {
  if (params.sigma2 <= 0.0) return std::numeric_limits<double>::infinity();
  return (1.0 + params.sigma2) * params.n * params.rho / params.sigma2;
}

double butman_bound(const LinearScheme& scheme) {
  const double s2 = scheme.params.sigma2;
  if (s2 <= 0.0) return std::numeric_limits<double>::infinity();
  return snr_upper_bound(scheme.params) +
         2.0 * scheme.encoding.squaredNorm() + scheme.params.n / s2;
}

}  // namespace lfc
