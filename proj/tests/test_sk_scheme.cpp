#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfc/core_model.hpp"
#include "lfc/scheme_builder.hpp"
#include "lfc/sk_scheme.hpp"

using namespace lfc;

TEST_CASE("baseline structure at N=2") {
  LinearScheme s = build_sk_scheme({2, 3.0, 0.0});
  CHECK(s.encoding(1, 0) == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
  CHECK(s.combining(0) == 1.0);
  CHECK(s.combining(1) == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
  CHECK(s.message_dir(0) == 1.0);
  CHECK(s.gamma == doctest::Approx(0.5));
  CHECK(s.signal_energy == doctest::Approx(3.0));
  CHECK(received_snr_direct(s) == doctest::Approx(12.0).epsilon(1e-9));
  CHECK(validate_scheme(s, 1e-9).empty());
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(build_sk_scheme({1, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_sk_scheme({3, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("noiseless SNR matches the classical growth") {
  for (double rho : {0.5, 1.0, 3.0}) {
    for (int n = 2; n <= 10; ++n) {
      LinearScheme s = build_sk_scheme({n, rho, 0.0});
      const double classical = rho * std::pow(1.0 + rho, n - 1.0);
      CHECK(received_snr_direct(s) ==
            doctest::Approx(classical).epsilon(1e-9));
    }
  }
}

TEST_CASE("combiner pairing") {
  for (int n : {2, 4, 7}) {
    LinearScheme s = build_sk_scheme({n, 1.7, 0.0});
    CHECK(std::abs(s.combining.dot(s.message_dir)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("proposed scheme dominates the baseline") {
  for (double sigma2 : {0.01, 3.0}) {
    for (int n : {3, 10}) {
      for (double rho = 0.5; rho <= 4.0; rho += 0.25) {
        ChannelParams params{n, rho, sigma2};
        const double gamma = (n - 1.0) / n;
        auto beta = solve_beta0(params, gamma);
        LinearScheme prop = build_proposed_scheme(params, gamma, beta.beta0);
        LinearScheme sk = build_sk_scheme(params);
        CHECK(received_snr_direct(prop) >=
              received_snr_direct(sk) * (1.0 - 1e-9));
      }
    }
  }
}

TEST_CASE("gap widens with feedback noise") {
  // Both SNRs shrink as the feedback noise grows, so the absolute gap
  // shrinks too; the relative (dB) advantage with the optimal power
  // split is what grows.
  const int n = 5;
  const double rho = 1.0;
  double prev_gap = -1.0;
  for (double sigma2 = 0.01; sigma2 <= 3.0; sigma2 += 0.1) {
    ChannelParams params{n, rho, sigma2};
    auto gamma = solve_gamma0(params);
    auto beta = solve_beta0(params, gamma.gamma0);
    const double prop = received_snr_direct(
        build_proposed_scheme(params, gamma.gamma0, beta.beta0));
    const double sk = received_snr_direct(build_sk_scheme(params));
    const double gap = 10.0 * std::log10(prop / sk);
    CHECK(gap >= -1e-9);
    CHECK(gap >= prev_gap - 1e-9);
    prev_gap = gap;
  }
}

TEST_CASE("optimal split stretches the advantage at larger blocklengths") {
  const double sigma2 = 0.01;
  auto db_gap = [&](int n, double rho) {
    ChannelParams params{n, rho, sigma2};
    auto gamma = solve_gamma0(params);
    auto beta = solve_beta0(params, gamma.gamma0);
    const double prop = received_snr_direct(
        build_proposed_scheme(params, gamma.gamma0, beta.beta0));
    const double sk = received_snr_direct(build_sk_scheme(params));
    return 10.0 * std::log10(prop / sk);
  };
  for (double rho : {1.0, 2.0}) {
    CHECK(db_gap(10, rho) > db_gap(3, rho));
  }
}
