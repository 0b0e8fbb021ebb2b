#ifndef LFC_SCHEME_BUILDER_HPP
#define LFC_SCHEME_BUILDER_HPP

#include "lfc/core_model.hpp"

namespace lfc {

/// Solution of the degree-2N polynomial fixing the combiner ratio beta.
struct BetaSolution {
  double beta0;     ///< exact smallest positive root in (0,1]
  double beta1;     ///< closed-form approximation 1/sqrt(1 + (1+sigma2) gamma rho)
  double residual;  ///< polynomial value at beta0
};

/// Optimal noise-cancellation power fraction.
struct GammaSolution {
  double gamma0;
  bool feedback_useful;  ///< false when noise cancellation cannot pay off
  double residual;       ///< stationarity polynomial value at gamma0
};

/// Value of beta^{2N} - (N + (1+sigma2) N gamma rho) beta^2 + (N-1).
double beta_polynomial(const ChannelParams& params, double gamma, double beta);

/// Smallest positive root of beta_polynomial in (0,1), by grid
/// bracketing, bisection and Newton polish.  gamma = 0 has no interior
/// root; the degenerate no-feedback limit beta = 1 is returned.
/// Throws std::invalid_argument for N = 1 and NumericalError when no
/// bracket is found.
BetaSolution solve_beta0(const ChannelParams& params, double gamma);

/// Analytic N = 2 root: sqrt(x + 1) - sqrt(x) with x = (1+sigma2) gamma rho / 2.
double beta0_closed_form_n2(double sigma2, double gamma, double rho);

/// Blocklength-aware approximation sqrt((N-1) / (N + (1+sigma2) N gamma rho)).
/// This is the form for which the excess-power identity
///   (1+sigma2) ||F||_F^2 - N gamma rho = beta^{2(N-1)} / (1+sigma2)
/// holds exactly.
double beta_blocklength_approx(const ChannelParams& params, double gamma);

/// Builds the proposed scheme for a given beta in (0,1]: geometric
/// combiner q_i ~ beta^{i-1}, g = q, Toeplitz F with column entries
/// -(1-beta^2)/((1+sigma2) beta), -(1-beta^2)/(1+sigma2),
/// -(1-beta^2) beta/(1+sigma2), ...
LinearScheme build_proposed_scheme(const ChannelParams& params, double gamma,
                                   double beta);

/// Closed-form received SNR (1+sigma2) N (1-gamma) rho / (sigma2 + beta^{2(N-1)}).
double scheme_snr_closed_form(const ChannelParams& params, double gamma,
                              double beta);

/// Closed-form ||F||_F^2 of the constructed scheme:
/// (beta^{2(N-1)} + (N-1)/beta^2 - N) / (1+sigma2)^2.
double frobenius_closed_form(double beta, const ChannelParams& params);

/// Stationarity polynomial a (1 + b gamma)^N - N b (1-gamma) + (b+1)
/// with a = sigma2, b = rho (1+sigma2).
double gamma_polynomial(const ChannelParams& params, double gamma);

/// Optimal power split: smallest root of gamma_polynomial in [0,1], or
/// gamma0 = 0 with feedback_useful = false when no useful root exists.
GammaSolution solve_gamma0(const ChannelParams& params);

/// The asymptotically optimal allocation 1/sqrt(N).
double asymptotic_gamma(int n);

}  // namespace lfc

#endif
