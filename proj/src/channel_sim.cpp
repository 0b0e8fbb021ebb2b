#include "lfc/channel_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace lfc {

namespace {

constexpr double kZ95 = 1.959963984540054;

double binomial_radius(std::uint64_t successes, std::uint64_t n) {
  if (n == 0) return 0.0;
  const double p = static_cast<double>(successes) / static_cast<double>(n);
  return kZ95 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double binary_error_prob_analytic(double snr) {
  return q_function(std::sqrt(snr));
}

double binary_error_prob_bound(double snr) { return 0.5 * std::exp(-snr / 2.0); }

SymbolSet make_pam(int m, double energy) {
  if (m < 2) throw std::invalid_argument("make_pam: alphabet size must be >= 2");
  // Unit-spacing levels 2i - M + 1 have mean square (M^2 - 1) / 3.
  const double step = std::sqrt(3.0 * energy / (static_cast<double>(m) * m - 1.0));
  SymbolSet set;
  set.m = m;
  set.energy = energy;
  set.levels.resize(m);
  for (int i = 0; i < m; ++i) set.levels[i] = (2.0 * i - m + 1.0) * step;
  return set;
}

double effective_noise_variance(double snr_c, double rho) {
  if (!(snr_c > 0)) {
    throw std::invalid_argument("effective_noise_variance: snr must be positive");
  }
  return rho / snr_c;
}

TransmissionRecord run_sequential_transmission(const LinearScheme& scheme,
                                               const Eigen::VectorXd& z,
                                               const Eigen::VectorXd& n,
                                               double theta) {
  const int len = scheme.params.n;
  if (z.size() != len || n.size() != len) {
    throw std::invalid_argument("run_sequential_transmission: noise vector "
                                "length does not match blocklength");
  }
  TransmissionRecord rec;
  rec.x.resize(len);
  rec.y.resize(len);
  for (int k = 0; k < len; ++k) {
    double fb = 0.0;
    for (int j = 0; j < k; ++j) {
      fb += scheme.encoding(k, j) * (z(j) + n(j));
    }
    rec.x(k) = fb + scheme.message_dir(k) * theta;
    rec.y(k) = rec.x(k) + z(k);
  }
  rec.theta_hat = scheme.combining.dot(rec.y);
  return rec;
}

TransmissionRecord run_sequential_transmission(const LinearScheme& scheme,
                                               CounterRng& rng, double theta) {
  const int len = scheme.params.n;
  Eigen::VectorXd z(len), n(len);
  const double fb_sd = std::sqrt(scheme.params.sigma2);
  for (int k = 0; k < len; ++k) z(k) = rng.gaussian();
  for (int k = 0; k < len; ++k) n(k) = fb_sd * rng.gaussian();
  return run_sequential_transmission(scheme, z, n, theta);
}

std::pair<double, double> estimate_empirical_snr(const LinearScheme& scheme,
                                                 std::uint64_t trials,
                                                 std::uint64_t seed) {
  if (trials < 1000) {
    throw std::invalid_argument("estimate_empirical_snr: need >= 1000 trials");
  }
  const double qg = scheme.combining.dot(scheme.message_dir);
  const double amp = std::sqrt(scheme.signal_energy);

  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    const double theta = rng.uniform() < 0.5 ? -amp : amp;
    const auto rec = run_sequential_transmission(scheme, rng, theta);
    const double err = rec.theta_hat - theta * qg;
    sum += err;
    sumsq += err * err;
  }
  const double count = static_cast<double>(trials);
  const double var = (sumsq - sum * sum / count) / (count - 1.0);
  const double snr = scheme.signal_energy * qg * qg / var;
  // Delta method on the chi-square variance of the sample variance.
  const double stderr_snr = snr * std::sqrt(2.0 / (count - 1.0));
  return {snr, stderr_snr};
}

SimReport simulate_binary_ber(const LinearScheme& scheme, std::uint64_t trials,
                              std::uint64_t seed) {
  const int len = scheme.params.n;
  // theta_hat = u.z + v.n + (q^T g) theta with u = (I+F)^T q, v = F^T q.
  const Eigen::VectorXd v = scheme.encoding.transpose() * scheme.combining;
  const Eigen::VectorXd u = v + scheme.combining;
  const double qg = scheme.combining.dot(scheme.message_dir);
  const double amp = std::sqrt(scheme.signal_energy);
  const double fb_sd = std::sqrt(scheme.params.sigma2);

  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    const double theta = rng.uniform() < 0.5 ? -amp : amp;
    double est = qg * theta;
    for (int k = 0; k < len; ++k) est += u(k) * rng.gaussian();
    if (fb_sd > 0.0) {
      for (int k = 0; k < len; ++k) est += fb_sd * v(k) * rng.gaussian();
    }
    if ((est < 0.0) != (theta < 0.0)) ++errors;
  }

  SimReport report;
  report.trials = trials;
  report.seed = seed;
  report.bits = trials;
  report.bit_errors = errors;
  report.ber = static_cast<double>(errors) / static_cast<double>(trials);
  report.ber_radius = binomial_radius(errors, trials);
  report.frames = trials;
  report.frame_errors = errors;
  report.fer = report.ber;
  report.fer_radius = report.ber_radius;
  return report;
}

SimReport simulate_concatenated(const OuterCode& outer,
                                const LinearScheme* inner,
                                const SymbolSet& symbol_map,
                                std::uint64_t frames, std::uint64_t seed) {
  if (symbol_map.m != outer.alphabet_size()) {
    throw std::invalid_argument("simulate_concatenated: alphabet size of the "
                                "symbol map does not match the outer code");
  }
  const int k_info = outer.info_bits_per_block();
  const int k_sym = outer.symbols_per_block();
  const double qg =
      inner ? inner->combining.dot(inner->message_dir) : 1.0;
  const double fb_sd = inner ? std::sqrt(inner->params.sigma2) : 0.0;

  std::uint64_t bit_errors = 0, frame_errors = 0;
  std::vector<int> bits(k_info), decoded;
  std::vector<int> symbols;
  std::vector<double> soft(k_sym);

  for (std::uint64_t fr = 0; fr < frames; ++fr) {
    CounterRng rng(seed, fr);
    for (int i = 0; i < k_info; ++i) bits[i] = rng.uniform() < 0.5 ? 0 : 1;
    symbols = outer.encode(bits);

    for (int s = 0; s < k_sym; ++s) {
      const double theta = symbol_map.levels[symbols[s]];
      if (inner) {
        const int len = inner->params.n;
        Eigen::VectorXd z(len), n(len);
        for (int k = 0; k < len; ++k) z(k) = rng.gaussian();
        for (int k = 0; k < len; ++k) n(k) = fb_sd * rng.gaussian();
        soft[s] =
            run_sequential_transmission(*inner, z, n, theta).theta_hat / qg;
      } else {
        soft[s] = theta + rng.gaussian();
      }
    }

    decoded = outer.decode(soft, symbol_map.levels);
    int frame_bad = 0;
    for (int i = 0; i < k_info; ++i) {
      if (decoded[i] != bits[i]) {
        ++bit_errors;
        frame_bad = 1;
      }
    }
    frame_errors += frame_bad;
  }

  SimReport report;
  report.trials = frames;
  report.seed = seed;
  report.frames = frames;
  report.frame_errors = frame_errors;
  report.bits = frames * static_cast<std::uint64_t>(k_info);
  report.bit_errors = bit_errors;
  report.ber = static_cast<double>(bit_errors) / static_cast<double>(report.bits);
  report.ber_radius = binomial_radius(bit_errors, report.bits);
  report.fer =
      static_cast<double>(frame_errors) / static_cast<double>(frames);
  report.fer_radius = binomial_radius(frame_errors, frames);
  return report;
}

}  // namespace lfc
