#include "lfc/scheme_builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lfc {

double beta_polynomial(const ChannelParams& params, double gamma,
                       double beta) {
  const double n = params.n;
  const double coeff = n + (1.0 + params.sigma2) * n * gamma * params.rho;
  return std::pow(beta, 2.0 * n) - coeff * beta * beta + (n - 1.0);
}

namespace {

// Bisection for a sign change of f on [lo, hi] with f(lo) > 0 > f(hi).
template <typename F>
double bisect_down(F f, double lo, double hi, int iters) {
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BetaSolution solve_beta0(const ChannelParams& params, double gamma) {
  if (params.n < 2) {
    throw std::invalid_argument("solve_beta0: blocklength must be at least 2");
  }
  BetaSolution out;
  out.beta1 =
      std::sqrt(1.0 / (1.0 + (1.0 + params.sigma2) * gamma * params.rho));
  if (gamma <= 0.0) {
    // Degenerate no-feedback limit: the polynomial has a double root at 1.
    out.beta0 = 1.0;
    out.residual = 0.0;
    return out;
  }

  auto poly = [&](double b) { return beta_polynomial(params, gamma, b); };

  // The polynomial is positive at 0 (value N-1) and negative at 1
  // (value -(1+sigma2) N gamma rho), so the smallest positive root is
  // bracketed by the first sign change on a grid scan.
  const int grid = 10000;
  double lo = 0.0;
  double hi = 1.0;
  bool found = false;
  double prev = poly(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double b = static_cast<double>(i) / grid;
    const double v = poly(b);
    if (prev > 0.0 && v <= 0.0) {
      lo = static_cast<double>(i - 1) / grid;
      hi = b;
      found = true;
      break;
    }
    prev = v;
  }
  if (!found) {
    throw NumericalError("solve_beta0: no sign change in (0,1)");
  }

  double root = bisect_down(poly, lo, hi, 200);

  // Newton polish.
  const double n = params.n;
  const double coeff = n + (1.0 + params.sigma2) * n * gamma * params.rho;
  for (int i = 0; i < 5; ++i) {
    const double f = poly(root);
    const double df =
        2.0 * n * std::pow(root, 2.0 * n - 1.0) - 2.0 * coeff * root;
    if (df == 0.0) break;
    const double next = root - f / df;
    if (next > lo && next < hi) root = next;
  }

  out.beta0 = root;
  out.residual = poly(root);
  return out;
}

double beta0_closed_form_n2(double sigma2, double gamma, double rho) {
  const double x = (1.0 + sigma2) * gamma * rho / 2.0;
  return std::sqrt(x + 1.0) - std::sqrt(x);
}

double beta_blocklength_approx(const ChannelParams& params, double gamma) {
  const double n = params.n;
  return std::sqrt((n - 1.0) /
                   (n + (1.0 + params.sigma2) * n * gamma * params.rho));
}

LinearScheme build_proposed_scheme(const ChannelParams& params, double gamma,
                                   double beta) {
  if (!(beta > 0.0) || beta > 1.0) {
    throw std::invalid_argument("build_proposed_scheme: beta must be in (0,1]");
  }
  const int n = params.n;
  const double s2 = params.sigma2;

  LinearScheme scheme;
  scheme.params = params;
  scheme.gamma = gamma;
  scheme.signal_energy = (1.0 - gamma) * n * params.rho;

  Eigen::VectorXd q(n);
  if (beta == 1.0) {
    q.setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  } else {
    const double normalizer =
        std::sqrt((1.0 - beta * beta) / (1.0 - std::pow(beta, 2.0 * n)));
    for (int i = 0; i < n; ++i) q(i) = normalizer * std::pow(beta, i);
  }
  scheme.combining = q;
  scheme.message_dir = q;

  // Toeplitz encoding matrix; the first subdiagonal gets an extra 1/beta.
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
  const double scale = (1.0 - beta * beta) / (1.0 + s2);
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      const int k = i - j;
      f(i, j) = (k == 1) ? -scale / beta : -scale * std::pow(beta, k - 2);
    }
  }
  scheme.encoding = f;
  return scheme;
}

double scheme_snr_closed_form(const ChannelParams& params, double gamma,
                              double beta) {
  const double n = params.n;
  const double s2 = params.sigma2;
  return (1.0 + s2) * n * (1.0 - gamma) * params.rho /
         (s2 + std::pow(beta, 2.0 * (n - 1.0)));
}

double frobenius_closed_form(double beta, const ChannelParams& params) {
  if (beta == 0.0) {
    throw std::invalid_argument("frobenius_closed_form: beta must be nonzero");
  }
  const double n = params.n;
  const double s2 = params.sigma2;
  return (std::pow(beta, 2.0 * (n - 1.0)) + (n - 1.0) / (beta * beta) - n) /
         ((1.0 + s2) * (1.0 + s2));
}

double gamma_polynomial(const ChannelParams& params, double gamma) {
  const double a = params.sigma2;
  const double b = params.rho * (1.0 + params.sigma2);
  const double n = params.n;
  // a (1 + b gamma)^N overflows gracefully to +inf for huge N; keep the
  // evaluation in log space to avoid spurious NaNs.
  double first = 0.0;
  if (a > 0.0) {
    const double t = n * std::log1p(b * gamma);
    first = (t > 700.0) ? std::numeric_limits<double>::infinity()
                        : a * std::exp(t);
  }
  return first - n * b * (1.0 - gamma) + (b + 1.0);
}

GammaSolution solve_gamma0(const ChannelParams& params) {
  if (params.n < 2) {
    throw std::invalid_argument("solve_gamma0: blocklength must be at least 2");
  }
  GammaSolution out;
  out.gamma0 = 0.0;
  out.feedback_useful = false;
  out.residual = 0.0;

  auto poly = [&](double g) { return gamma_polynomial(params, g); };

  // poly is strictly increasing in gamma, so a root in [0,1] exists iff
  // poly(0) <= 0; poly(0) > 0 is the feedback-not-useful region.
  const double at0 = poly(0.0);
  if (at0 > 0.0) return out;
  if (at0 == 0.0) {
    out.gamma0 = 0.0;
    out.feedback_useful = true;
    return out;
  }
  if (poly(1.0) < 0.0) {
    // No interior root; cancellation pays off everywhere, but gamma = 1
    // leaves no signal power.  Not expected for sane parameters.
    out.gamma0 = 1.0;
    out.feedback_useful = true;
    out.residual = poly(1.0);
    return out;
  }

  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (poly(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.gamma0 = 0.5 * (lo + hi);
  out.feedback_useful = true;
  out.residual = poly(out.gamma0);
  return out;
}

double asymptotic_gamma(int n) {
  if (n < 1) {
    throw std::invalid_argument("asymptotic_gamma: blocklength must be >= 1");
  }
  return 1.0 / std::sqrt(static_cast<double>(n));
}

}  // namespace lfc
