#ifndef LFC_CORE_MODEL_HPP
#define LFC_CORE_MODEL_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfc {

/// Thrown when a computation cannot proceed for numerical reasons
/// (degenerate denominator, unbracketed root, ...).  The CLI maps this
/// to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Channel-side parameters of an inner code: blocklength, average
/// transmit power per channel use, and feedback noise variance.
struct ChannelParams {
  int n = 1;            ///< inner blocklength N (channel uses), N >= 1
  double rho = 1.0;     ///< average transmit power per use, rho > 0
  double sigma2 = 0.0;  ///< feedback noise variance, sigma2 >= 0
};

/// A linear feedback coding scheme.  Each transmission is a linear
/// function of the message and the past noisy feedback observations:
///   x = F (z + n) + g theta,   theta_hat = q^T y.
///
/// F is strictly lower triangular (causality).  For all constructed
/// schemes g = q and both are unit vectors; the Schalkwijk-Kailath
/// baseline keeps g = e1 with a non-unit q and |q^T g| = 1, flagged by
/// sk_baseline.
struct LinearScheme {
  Eigen::MatrixXd encoding;    ///< F, N x N strictly lower triangular
  Eigen::VectorXd combining;   ///< q, receiver combining vector
  Eigen::VectorXd message_dir; ///< g, message direction
  double gamma = 0.0;          ///< noise-cancellation power fraction in [0,1]
  ChannelParams params;
  double signal_energy = 0.0;  ///< E[theta^2] = (1 - gamma) N rho
  bool sk_baseline = false;    ///< exempts the unit-q invariant
};

/// One simulated use of the inner code.
struct TransmissionRecord {
  Eigen::VectorXd x;  ///< transmitted signal
  Eigen::VectorXd y;  ///< received signal, y = x + z
  double theta_hat;   ///< estimate q^T y
};

/// Transmit power split between noise cancellation and signal.
struct PowerBreakdown {
  double noise_cancel;  ///< (1 + sigma2) ||F||_F^2
  double signal;        ///< E[theta^2]
  double total;
};

/// Received SNR by explicit matrix arithmetic:
///   E[theta^2] |q^T g|^2 / (||q^T (I+F)||^2 + sigma2 ||q^T F||^2).
/// Throws NumericalError if the denominator is below 1e-300.
double received_snr_direct(const LinearScheme& scheme);

/// Denominator of the received SNR, equal to the estimator variance
/// q^T [(I+F)(I+F)^T + sigma2 F F^T] q when q is the combiner.
double combined_noise_power(const LinearScheme& scheme);

PowerBreakdown transmit_power(const LinearScheme& scheme);

/// One-shot transmission in matrix form on explicit noise draws.
TransmissionRecord simulate_transmission_matrix(const LinearScheme& scheme,
                                                const Eigen::VectorXd& z,
                                                const Eigen::VectorXd& n,
                                                double theta);

/// Checks every LinearScheme invariant; returns human-readable
/// violations (empty means valid).  `slack` is the tolerated relative
/// overshoot of the encoding-power budget.
std::vector<std::string> validate_scheme(const LinearScheme& scheme,
                                         double slack = 1e-9);

}  // namespace lfc

#endif
