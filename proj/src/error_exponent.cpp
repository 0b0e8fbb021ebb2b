#include "lfc/error_exponent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lfc/scheme_builder.hpp"

namespace lfc {

namespace {

double capacity_nats(double p) { return 0.5 * std::log1p(p); }

double binary_entropy_nats(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

// Left side of the minimum-distance rate equation, strictly increasing
// in delta from 0 (delta = 0) to infinity.
double md_rate_of_delta(double delta) {
  if (delta <= 0.0) return 0.0;
  return (1.0 + delta) * binary_entropy_nats(delta / (1.0 + delta));
}

struct SnrTable {
  double rho;
  double sigma2;
  std::vector<double> snr;       // index n-1
  std::vector<double> capacity;  // nats, matching snr
};

SnrTable build_snr_table(double rho, double sigma2, int n_max) {
  SnrTable table;
  table.rho = rho;
  table.sigma2 = sigma2;
  table.snr.resize(n_max);
  table.capacity.resize(n_max);
  for (int n = 1; n <= n_max; ++n) {
    table.snr[n - 1] = inner_snr_at_blocklength(n, rho, sigma2);
    table.capacity[n - 1] = capacity_nats(table.snr[n - 1]);
  }
  return table;
}

double upper_envelope_at(double r, double p) {
  if (r <= 0.0) return p / 4.0;  // zero-rate limit of both bounds
  return std::min(min_distance_exponent(r, p), sphere_packing_exponent(r, p));
}

// Shared search over admissible blocklengths (n r strictly below the
// blocklength-n capacity); per_n evaluates the per-use bound.
template <typename PerN>
std::pair<double, int> best_blocklength(double r, const SnrTable& table,
                                        PerN per_n) {
  double best = 0.0;
  int best_n = 1;
  bool any = false;
  const int n_max = static_cast<int>(table.snr.size());
  for (int n = 1; n <= n_max; ++n) {
    if (n * r >= table.capacity[n - 1]) continue;
    const double value = per_n(n * r, table.snr[n - 1]) / n;
    if (!any || value > best) {
      best = value;
      best_n = n;
      any = true;
    }
  }
  if (!any) return {0.0, 1};
  return {best, best_n};
}

}  // namespace

RateThresholds rate_thresholds(double p) {
  RateThresholds out;
  const double root = std::sqrt(1.0 + p * p / 4.0);
  out.r1 = 0.5 * std::log(0.5 + 0.5 * root);
  out.r2 = 0.5 * std::log(0.5 + p / 4.0 + 0.5 * root);
  out.c = capacity_nats(p);
  return out;
}

double sphere_packing_exponent(double r, double p) {
  const double c = capacity_nats(p);
  if (r > c * (1.0 + 1e-12) + 1e-15) {
    throw std::domain_error("sphere_packing_exponent: rate above capacity");
  }
  if (!(r > 0.0)) {
    throw std::domain_error("sphere_packing_exponent: rate must be positive");
  }
  const double sin_t = std::exp(-r);
  const double cos_t = std::sqrt(std::max(0.0, 1.0 - sin_t * sin_t));
  const double sp = std::sqrt(p);
  const double gbar =
      0.5 * (sp * cos_t + std::sqrt(p * cos_t * cos_t + 4.0));
  return p / 2.0 - sp * gbar * cos_t / 2.0 - std::log(gbar * sin_t);
}

double delta_star(double r) {
  if (!(r > 0.0)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (md_rate_of_delta(hi) < r) {
    hi *= 2.0;
    if (hi > 1e12) throw NumericalError("delta_star: bracket failure");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (md_rate_of_delta(mid) < r) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double min_distance_exponent(double r, double p) {
  const double d = delta_star(r);
  const double dist =
      std::sqrt(2.0) * (std::sqrt(1.0 + d) - std::sqrt(d)) /
      std::sqrt(1.0 + 2.0 * d);
  return p / 8.0 * dist * dist;
}

double random_coding_lower_bound_openloop(double r, double p) {
  const RateThresholds th = rate_thresholds(p);
  if (r > th.c * (1.0 + 1e-12) + 1e-15) {
    throw std::domain_error(
        "random_coding_lower_bound_openloop: rate above capacity");
  }
  if (r < 0.0) {
    throw std::domain_error(
        "random_coding_lower_bound_openloop: rate must be nonnegative");
  }
  auto low_segment = [&](double rate) {
    return p / 4.0 * (1.0 - std::sqrt(std::max(0.0, 1.0 - std::exp(-2.0 * rate))));
  };
  if (r <= th.r1) return low_segment(r);
  if (r <= th.r2) return low_segment(th.r1) + th.r1 - r;
  return sphere_packing_exponent(std::min(r, th.c), p);
}

double inner_snr_at_blocklength(int n, double rho, double sigma2) {
  if (n < 1) throw std::invalid_argument("blocklength must be >= 1");
  if (n == 1) return rho;  // single use, no feedback possible
  ChannelParams params{n, rho, sigma2};
  const GammaSolution gamma = solve_gamma0(params);
  if (!gamma.feedback_useful || gamma.gamma0 <= 0.0) {
    return n * rho;  // beta = 1 limit of the closed form
  }
  const BetaSolution beta = solve_beta0(params, gamma.gamma0);
  return scheme_snr_closed_form(params, gamma.gamma0, beta.beta0);
}

std::pair<double, int> feedback_exponent_lower(double r, double rho,
                                               double sigma2, int n_max) {
  const SnrTable table = build_snr_table(rho, sigma2, n_max);
  return best_blocklength(r, table, random_coding_lower_bound_openloop);
}

std::pair<double, int> feedback_exponent_upper(double r, double rho,
                                               double sigma2, int n_max) {
  const SnrTable table = build_snr_table(rho, sigma2, n_max);
  return best_blocklength(r, table, upper_envelope_at);
}

std::vector<ExponentRow> exponent_curve(const std::vector<double>& rates,
                                        double rho, double sigma2,
                                        int n_max) {
  const SnrTable table = build_snr_table(rho, sigma2, n_max);
  std::vector<ExponentRow> curve;
  curve.reserve(rates.size());
  for (double r : rates) {
    const auto lower =
        best_blocklength(r, table, random_coding_lower_bound_openloop);
    const auto upper = best_blocklength(r, table, upper_envelope_at);
    curve.push_back({r, lower.first, upper.first, lower.second});
  }
  return curve;
}

int optimal_n_approx(double r, double rho, double sigma2,
                     bool verbatim_theta) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("optimal_n_approx: rate must be positive");
  }
  auto theta_of = [&](double n) {
    if (verbatim_theta) {
      const double arg = -n * r;
      if (arg < -1.0) return std::nan("");
      return std::asin(arg);
    }
    return std::asin(std::exp(-n * r));
  };
  auto gap = [&](double n) {
    const double theta = theta_of(n);
    if (std::isnan(theta) || theta == 0.0) return std::nan("");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double rhs = c * (1.0 - c) / (r * s * s);
    return 2.0 * (std::pow(n, 1.5) - n) - rhs;
  };

  // The left side grows from 0 at n = 1 while the right side tends to
  // 1/(2r); bracket the single crossing by doubling.
  double lo = 1.0;
  double hi = 2.0;
  bool bracketed = false;
  for (int i = 0; i < 64; ++i) {
    const double g = gap(hi);
    if (std::isnan(g)) break;
    if (g > 0.0) {
      bracketed = true;
      break;
    }
    lo = hi;
    hi *= 2.0;
  }
  if (!bracketed) {
    return feedback_exponent_lower(r, rho, sigma2).second;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  int n = std::max(1, static_cast<int>(std::floor(0.5 * (lo + hi))));

  // Keep the approximation admissible.
  while (n > 1 &&
         n * r >= capacity_nats(inner_snr_at_blocklength(n, rho, sigma2))) {
    --n;
  }
  return n;
}

std::vector<NStarRow> optimal_n_scaling_check(const std::vector<double>& rates,
                                              double rho, double sigma2) {
  std::vector<NStarRow> rows;
  rows.reserve(rates.size());
  for (double r : rates) {
    const auto lower = feedback_exponent_lower(r, rho, sigma2);
    const int n_star = lower.second;
    const double c = capacity_nats(inner_snr_at_blocklength(n_star, rho, sigma2));
    rows.push_back({r, n_star, optimal_n_approx(r, rho, sigma2), c / r});
  }
  return rows;
}

double zero_rate_exponent(double rho, double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("zero_rate_exponent: sigma2 must be positive");
  }
  return (1.0 + sigma2) * rho / (4.0 * sigma2);
}

double binary_error_exponent(double rho, double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("binary_error_exponent: sigma2 must be positive");
  }
  return (1.0 + sigma2) * rho / (2.0 * sigma2);
}

double feedback_useless_threshold(double rho, double sigma2, double gamma0) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument(
        "feedback_useless_threshold: sigma2 must be positive");
  }
  return 0.5 * std::log2(1.0 + 2.0 * (1.0 + sigma2) * (1.0 - gamma0) * rho /
                                   sigma2);
}

}  // namespace lfc
