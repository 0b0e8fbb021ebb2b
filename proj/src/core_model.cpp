#include "lfc/core_model.hpp"

#include <cmath>
#include <sstream>

namespace lfc {

double combined_noise_power(const LinearScheme& scheme) {
  const auto n = scheme.params.n;
  const Eigen::MatrixXd iplusf =
      Eigen::MatrixXd::Identity(n, n) + scheme.encoding;
  const Eigen::VectorXd qt_iplusf = iplusf.transpose() * scheme.combining;
  const Eigen::VectorXd qt_f = scheme.encoding.transpose() * scheme.combining;
  return qt_iplusf.squaredNorm() + scheme.params.sigma2 * qt_f.squaredNorm();
}

double received_snr_direct(const LinearScheme& scheme) {
  const double denom = combined_noise_power(scheme);
  if (denom < 1e-300) {
    throw NumericalError("received_snr_direct: degenerate combining, "
                         "noise power below 1e-300");
  }
  const double qg = scheme.combining.dot(scheme.message_dir);
  return scheme.signal_energy * qg * qg / denom;
}

PowerBreakdown transmit_power(const LinearScheme& scheme) {
  PowerBreakdown out;
  out.noise_cancel =
      (1.0 + scheme.params.sigma2) * scheme.encoding.squaredNorm();
  out.signal = scheme.signal_energy;
  out.total = out.noise_cancel + out.signal;
  return out;
}

TransmissionRecord simulate_transmission_matrix(const LinearScheme& scheme,
                                                const Eigen::VectorXd& z,
                                                const Eigen::VectorXd& n,
                                                double theta) {
  const auto len = scheme.params.n;
  if (z.size() != len || n.size() != len) {
    throw std::invalid_argument("simulate_transmission_matrix: noise vector "
                                "length does not match blocklength");
  }
  TransmissionRecord rec;
  rec.x = scheme.encoding * (z + n) + scheme.message_dir * theta;
  rec.y = rec.x + z;
  rec.theta_hat = scheme.combining.dot(rec.y);
  return rec;
}

std::vector<std::string> validate_scheme(const LinearScheme& scheme,
                                         double slack) {
  std::vector<std::string> out;
  const auto n = scheme.params.n;

  if (n < 1) out.push_back("blocklength must be at least 1");
  if (!(scheme.params.rho > 0)) out.push_back("rho must be positive");
  if (scheme.params.sigma2 < 0) out.push_back("sigma2 must be nonnegative");
  if (scheme.gamma < -1e-12 || scheme.gamma > 1.0 + 1e-12) {
    out.push_back("gamma not in [0,1]");
  }
  if (scheme.encoding.rows() != n || scheme.encoding.cols() != n ||
      scheme.combining.size() != n || scheme.message_dir.size() != n) {
    out.push_back("dimension mismatch");
    return out;
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (scheme.encoding(i, j) != 0.0) {
        out.push_back("encoding matrix not strictly lower triangular");
        i = n;
        break;
      }
    }
  }

  if (std::abs(scheme.message_dir.norm() - 1.0) > 1e-12) {
    out.push_back("message direction not unit");
  }
  if (scheme.sk_baseline) {
    const double qg = std::abs(scheme.combining.dot(scheme.message_dir));
    if (std::abs(qg - 1.0) > 1e-12) {
      out.push_back("baseline combiner does not satisfy |q^T g| = 1");
    }
  } else if (std::abs(scheme.combining.norm() - 1.0) > 1e-12) {
    out.push_back("q not unit");
  }

  const double expected_energy =
      (1.0 - scheme.gamma) * n * scheme.params.rho;
  if (std::abs(scheme.signal_energy - expected_energy) >
      1e-12 * std::max(1.0, std::abs(expected_energy))) {
    out.push_back("signal energy does not match (1 - gamma) N rho");
  }

  const double budget = n * scheme.gamma * scheme.params.rho;
  const double used =
      (1.0 + scheme.params.sigma2) * scheme.encoding.squaredNorm();
  if (used > budget + slack * std::max(1.0, budget)) {
    std::ostringstream msg;
    msg << "encoding power " << used << " exceeds budget " << budget;
    out.push_back(msg.str());
  }
  return out;
}

}  // namespace lfc
