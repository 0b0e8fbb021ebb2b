#include "lfc/sk_scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace lfc {

LinearScheme build_sk_scheme(const ChannelParams& params) {
  const int n = params.n;
  if (n < 2) {
    throw std::invalid_argument("build_sk_scheme: blocklength must be >= 2");
  }
  if (!(params.rho > 0)) {
    throw std::invalid_argument("build_sk_scheme: rho must be positive");
  }
  const double rho = params.rho;
  const double alpha = std::sqrt(1.0 + rho);
  const double r = std::sqrt(rho);

  LinearScheme scheme;
  scheme.params = params;
  scheme.sk_baseline = true;
  scheme.gamma = (n - 1.0) / n;
  scheme.signal_energy = rho;  // (1 - gamma) N rho

  scheme.message_dir = Eigen::VectorXd::Zero(n);
  scheme.message_dir(0) = 1.0;

  Eigen::VectorXd q(n);
  q(0) = 1.0;
  for (int i = 1; i < n; ++i) q(i) = r / std::pow(alpha, i + 1);
  scheme.combining = q;

  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) f(i, 0) = -r / std::pow(alpha, i - 1);
  for (int j = 1; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      f(i, j) = -rho / std::pow(alpha, i - j);
    }
  }
  scheme.encoding = f;
  return scheme;
}

}  // namespace lfc
