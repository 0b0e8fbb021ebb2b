#ifndef LFC_CHANNEL_SIM_HPP
#define LFC_CHANNEL_SIM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lfc/core_model.hpp"
#include "lfc/outer_codes.hpp"
#include "lfc/rng.hpp"

namespace lfc {

/// Zero-mean equally-likely PAM alphabet.
struct SymbolSet {
  int m;                       ///< alphabet size
  std::vector<double> levels;  ///< strictly increasing, mean zero
  double energy;               ///< E[theta^2] over equally likely levels
};

/// Monte Carlo tallies.  Radii are 95% normal-approximation
/// half-widths; empirical_snr_stderr is a delta-method estimate.
struct SimReport {
  std::uint64_t trials = 0;
  double empirical_snr = 0.0;
  double empirical_snr_stderr = 0.0;
  double ber = 0.0;
  double ber_radius = 0.0;
  double fer = 0.0;
  double fer_radius = 0.0;
  std::uint64_t bit_errors = 0;
  std::uint64_t bits = 0;
  std::uint64_t frame_errors = 0;
  std::uint64_t frames = 0;
  std::uint64_t seed = 0;
};

/// Gaussian tail Q(x) = erfc(x / sqrt(2)) / 2.
double q_function(double x);

/// Antipodal error probability Q(sqrt(snr)).
double binary_error_prob_analytic(double snr);

/// Chernoff-style bound exp(-snr/2) / 2 >= Q(sqrt(snr)).
double binary_error_prob_bound(double snr);

/// Equally spaced zero-mean M-PAM scaled to the requested mean-square
/// energy.  Index i maps to level (2i - M + 1) * step (natural binary
/// order).
SymbolSet make_pam(int m, double energy);

/// Effective noise variance rho / snr_c of the superchannel formed by
/// an inner code of received SNR snr_c.
double effective_noise_variance(double snr_c, double rho);

/// Causal transmission on explicit draws: x[k] uses only feedback
/// observations with indices < k.  Agrees with
/// simulate_transmission_matrix on the same draws.
TransmissionRecord run_sequential_transmission(const LinearScheme& scheme,
                                               const Eigen::VectorXd& z,
                                               const Eigen::VectorXd& n,
                                               double theta);

/// Seeded variant; draws z then n from a fresh stream of rng.
TransmissionRecord run_sequential_transmission(const LinearScheme& scheme,
                                               CounterRng& rng, double theta);

/// Empirical SNR from repeated transmissions of random antipodal
/// messages: E[theta^2] |q^T g|^2 / samplevar(theta_hat - theta q^T g).
/// Returns (mean, stderr).
std::pair<double, double> estimate_empirical_snr(const LinearScheme& scheme,
                                                 std::uint64_t trials,
                                                 std::uint64_t seed);

/// Uncoded antipodal BER of the inner scheme at theta = +-sqrt(E).
SimReport simulate_binary_ber(const LinearScheme& scheme, std::uint64_t trials,
                              std::uint64_t seed);

/// Full concatenated chain: outer encode, PAM map with the scheme's
/// signal energy, per-symbol inner transmission, soft pass-through to
/// the outer decoder.  A null inner scheme pointer means direct
/// transmission of theta over one AWGN use per symbol.  Per-frame RNG
/// streams make the result independent of batch partitioning.
SimReport simulate_concatenated(const OuterCode& outer,
                                const LinearScheme* inner,
                                const SymbolSet& symbol_map,
                                std::uint64_t frames, std::uint64_t seed);

}  // namespace lfc

#endif
