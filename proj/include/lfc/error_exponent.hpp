#ifndef LFC_ERROR_EXPONENT_HPP
#define LFC_ERROR_EXPONENT_HPP

#include <vector>

#include "lfc/core_model.hpp"

namespace lfc {

/// Rate thresholds of the open-loop exponent bound, all in nats.
struct RateThresholds {
  double r1;
  double r2;
  double c;  ///< capacity log(1 + P) / 2
};

struct ExponentRow {
  double rate;    ///< nats per channel use
  double lower;
  double upper;
  int n_star;     ///< argmax blocklength of the lower bound
};

struct NStarRow {
  double rate;
  int n_star;       ///< grid-search optimum
  int n_approx;     ///< transcendental-equation approximation
  double c_over_r;  ///< capacity / rate, the claimed scaling
};

/// All formulas in this module use natural logarithms; only
/// feedback_useless_threshold is in bits.
RateThresholds rate_thresholds(double p);

/// Sphere-packing exponent at SNR p, valid on (0, C]: with
/// theta = arcsin(exp(-r)) and gbar = (sqrt(p) cos theta
/// + sqrt(p cos^2 theta + 4)) / 2,
///   p/2 - sqrt(p) gbar cos(theta)/2 - log(gbar sin theta).
/// Zero at r = C.  Throws std::domain_error above capacity.
double sphere_packing_exponent(double r, double p);

/// Root delta of r = (1 + delta) H(delta / (1 + delta)), H the natural
/// binary entropy; strictly increasing left side, solved by bisection.
double delta_star(double r);

/// Minimum-distance exponent (p/8) d^2 with
/// d = sqrt(2) (sqrt(1 + delta*) - sqrt(delta*)) / sqrt(1 + 2 delta*).
double min_distance_exponent(double r, double p);

/// Open-loop lower bound, piecewise in r:
///   (p/4)(1 - sqrt(1 - exp(-2 r)))   on [0, R1],
///   value(R1) + R1 - r               on (R1, R2],
///   sphere packing                   on (R2, C].
double random_coding_lower_bound_openloop(double r, double p);

/// Received SNR of the proposed inner code at blocklength n with the
/// optimal power split, using exact roots.  n = 1 degenerates to rho.
double inner_snr_at_blocklength(int n, double rho, double sigma2);

/// Feedback exponent lower bound: max over admissible n (n r below the
/// capacity of the blocklength-n superchannel) of
/// random_coding_lower_bound_openloop(n r; SNR(n)) / n.
/// Returns the value and the maximizing n.
std::pair<double, int> feedback_exponent_lower(double r, double rho,
                                               double sigma2,
                                               int n_max = 1024);

/// Matching upper bound: same search with
/// min(min_distance_exponent, sphere_packing_exponent) per blocklength.
std::pair<double, int> feedback_exponent_upper(double r, double rho,
                                               double sigma2,
                                               int n_max = 1024);

/// Samples lower and upper feedback bounds over a rate grid.
std::vector<ExponentRow> exponent_curve(const std::vector<double>& rates,
                                        double rho, double sigma2,
                                        int n_max = 1024);

/// Blocklength approximation: floor of the root n of
///   2 (n^{3/2} - n) = cos(theta_n) (1 - cos(theta_n)) / (r sin^2 theta_n),
/// theta_n = arcsin(exp(-n r)).  verbatim_theta switches to the printed
/// arcsin(-n r) form, which is only defined for n r <= 1 and kept for
/// comparison.  Clamped so the result times r stays below capacity.
int optimal_n_approx(double r, double rho, double sigma2,
                     bool verbatim_theta = false);

/// (rate, grid N*, approximate N*, C/r) rows over a low-rate grid.
std::vector<NStarRow> optimal_n_scaling_check(const std::vector<double>& rates,
                                              double rho, double sigma2);

/// Zero-rate feedback exponent (1 + sigma2) rho / (4 sigma2).
double zero_rate_exponent(double rho, double sigma2);

/// Exponent of the uncoded binary scheme, (1 + sigma2) rho / (2 sigma2).
double binary_error_exponent(double rho, double sigma2);

/// Rate threshold in bits per use above which feedback is not used:
/// log2(1 + 2 (1 + sigma2) (1 - gamma0) rho / sigma2) / 2.
double feedback_useless_threshold(double rho, double sigma2, double gamma0);

}  // namespace lfc

#endif
