// Command-line front end: emits scheme JSON and sweep CSV data files.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfc/channel_sim.hpp"
#include "lfc/conditional_optimizer.hpp"
#include "lfc/core_model.hpp"
#include "lfc/error_exponent.hpp"
#include "lfc/outer_codes.hpp"
#include "lfc/scheme_builder.hpp"
#include "lfc/serialize.hpp"
#include "lfc/sk_scheme.hpp"

namespace {

using lfc::format_double;

constexpr int kExitBadConfig = 2;
constexpr int kExitNumerical = 3;

double to_db(double x) { return 10.0 * std::log10(x); }

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  file << content;
}

// gamma mode: a literal value or one of optimal|sk|asymptotic.
double resolve_gamma(const std::string& mode, const lfc::ChannelParams& params) {
  if (mode == "optimal") return lfc::solve_gamma0(params).gamma0;
  if (mode == "sk") return (params.n - 1.0) / params.n;
  if (mode == "asymptotic") return lfc::asymptotic_gamma(params.n);
  size_t used = 0;
  const double value = std::stod(mode, &used);
  if (used != mode.size() || value < 0.0 || value > 1.0) {
    throw CLI::ValidationError("--gamma", "expected a value in [0,1] or one of "
                                          "optimal|sk|asymptotic");
  }
  return value;
}

int cmd_build_scheme(int n, double rho, double sigma2,
                     const std::string& gamma_mode,
                     const std::string& out_path) {
  lfc::ChannelParams params{n, rho, sigma2};
  const double gamma = resolve_gamma(gamma_mode, params);
  const lfc::BetaSolution beta = lfc::solve_beta0(params, gamma);
  const lfc::GammaSolution gamma0 = lfc::solve_gamma0(params);
  lfc::LinearScheme scheme =
      lfc::build_proposed_scheme(params, gamma, beta.beta0);

  nlohmann::json doc = lfc::to_json(scheme);
  doc["diagnostics"] = {{"beta0", beta.beta0},
                        {"beta1", beta.beta1},
                        {"beta_residual", beta.residual},
                        {"gamma_used", gamma},
                        {"gamma0", gamma0.gamma0},
                        {"feedback_useful", gamma0.feedback_useful},
                        {"snr_closed_form",
                         lfc::scheme_snr_closed_form(params, gamma, beta.beta0)},
                        {"violations", lfc::validate_scheme(scheme)}};
  write_output(out_path, doc.dump(2) + "\n");
  return 0;
}

int cmd_sweep_snr(const std::vector<int>& n_list,
                  const std::vector<double>& rho_grid,
                  const std::vector<double>& sigma2_grid,
                  const std::string& gamma_mode, const std::string& out_path) {
  std::ostringstream csv;
  csv << "rho,sigma2,N,gamma,snr_proposed,snr_proposed_db,snr_sk,snr_sk_db,"
         "snr_upper_bound,butman_bound\n";
  for (int n : n_list) {
    for (double sigma2 : sigma2_grid) {
      for (double rho : rho_grid) {
        lfc::ChannelParams params{n, rho, sigma2};
        const double gamma = resolve_gamma(gamma_mode, params);
        const lfc::BetaSolution beta = lfc::solve_beta0(params, gamma);
        lfc::LinearScheme proposed =
            lfc::build_proposed_scheme(params, gamma, beta.beta0);
        lfc::LinearScheme sk = lfc::build_sk_scheme(params);
        const double snr_p = lfc::received_snr_direct(proposed);
        const double snr_sk = lfc::received_snr_direct(sk);
        csv << format_double(rho) << ',' << format_double(sigma2) << ',' << n
            << ',' << format_double(gamma) << ',' << format_double(snr_p)
            << ',' << format_double(to_db(snr_p)) << ','
            << format_double(snr_sk) << ',' << format_double(to_db(snr_sk))
            << ',' << format_double(lfc::snr_upper_bound(params)) << ','
            << format_double(lfc::butman_bound(sk)) << '\n';
      }
    }
  }
  write_output(out_path, csv.str());
  return 0;
}

int cmd_gamma_sweep(const std::vector<int>& n_list,
                    const std::vector<double>& rho_grid,
                    const std::vector<double>& sigma2_grid,
                    const std::string& out_path) {
  std::ostringstream csv;
  csv << "rho,sigma2,N,gamma0,feedback_useful\n";
  for (int n : n_list) {
    for (double sigma2 : sigma2_grid) {
      for (double rho : rho_grid) {
        lfc::ChannelParams params{n, rho, sigma2};
        const lfc::GammaSolution sol = lfc::solve_gamma0(params);
        csv << format_double(rho) << ',' << format_double(sigma2) << ',' << n
            << ',' << format_double(sol.gamma0) << ','
            << (sol.feedback_useful ? 1 : 0) << '\n';
      }
    }
  }
  write_output(out_path, csv.str());
  return 0;
}

int cmd_exponent_bounds(double rho, double sigma2,
                        const std::vector<double>& rates,
                        const std::string& out_path) {
  std::ostringstream csv;
  nlohmann::json header = {{"rho", rho},
                           {"sigma2", sigma2},
                           {"units", "nats"},
                           {"points", rates.size()}};
  csv << "# " << header.dump() << "\n";
  csv << "rate,lower,upper,n_star,openloop_lower,n_approx\n";
  const auto curve = lfc::exponent_curve(rates, rho, sigma2);
  const double c_openloop = 0.5 * std::log1p(rho);
  for (const auto& row : curve) {
    const double openloop =
        row.rate <= c_openloop
            ? lfc::random_coding_lower_bound_openloop(row.rate, rho)
            : 0.0;
    csv << format_double(row.rate) << ',' << format_double(row.lower) << ','
        << format_double(row.upper) << ',' << row.n_star << ','
        << format_double(openloop) << ','
        << lfc::optimal_n_approx(row.rate, rho, sigma2) << '\n';
  }
  write_output(out_path, csv.str());
  return 0;
}

int cmd_simulate(int n, const std::vector<double>& rho_grid, double sigma2,
                 const std::string& gamma_mode, std::uint64_t trials,
                 std::uint64_t seed, const std::string& out_path) {
  auto outer = lfc::make_repetition_code(3);
  std::ostringstream csv;
  csv << "rho,sigma2,N,gamma,energy_per_info_bit,ber_concatenated,"
         "ber_concatenated_radius,ber_openloop,ber_openloop_radius,frames,"
         "seed\n";
  for (double rho : rho_grid) {
    lfc::ChannelParams params{n, rho, sigma2};
    const double gamma = resolve_gamma(gamma_mode, params);
    const lfc::BetaSolution beta = lfc::solve_beta0(params, gamma);
    lfc::LinearScheme inner =
        lfc::build_proposed_scheme(params, gamma, beta.beta0);

    // Equal energy per info bit: the open-loop baseline spends the full
    // inner-block energy N rho on each BPSK symbol; both sides then use
    // 3 N rho per info bit through the rate-1/3 repetition code.
    const lfc::SymbolSet inner_map = lfc::make_pam(2, inner.signal_energy);
    const lfc::SymbolSet openloop_map = lfc::make_pam(2, n * rho);

    const lfc::SimReport cc =
        lfc::simulate_concatenated(*outer, &inner, inner_map, trials, seed);
    const lfc::SimReport ol =
        lfc::simulate_concatenated(*outer, nullptr, openloop_map, trials, seed);

    csv << format_double(rho) << ',' << format_double(sigma2) << ',' << n
        << ',' << format_double(gamma) << ',' << format_double(3.0 * n * rho)
        << ',' << format_double(cc.ber) << ',' << format_double(cc.ber_radius)
        << ',' << format_double(ol.ber) << ',' << format_double(ol.ber_radius)
        << ',' << trials << ',' << seed << '\n';
  }
  write_output(out_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear feedback coding toolkit"};
  app.require_subcommand(1);

  int n = 2;
  std::vector<int> n_list{2};
  double rho = 1.0;
  std::vector<double> rho_grid{1.0};
  double sigma2 = 0.0;
  std::vector<double> sigma2_grid{0.0};
  std::string gamma_mode = "optimal";
  std::vector<double> rates;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "csv";

  auto* build = app.add_subcommand("build-scheme", "construct one scheme");
  build->add_option("--N", n, "inner blocklength")->required();
  build->add_option("--rho", rho, "average power per use")->required();
  build->add_option("--sigma2", sigma2, "feedback noise variance");
  build->add_option("--gamma", gamma_mode,
                    "power split: value or optimal|sk|asymptotic");
  build->add_option("--out", out_path, "output file (default stdout)");
  build->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* sweep = app.add_subcommand("sweep-snr", "SNR comparison sweep");
  sweep->add_option("--N", n_list, "blocklength list");
  sweep->add_option("--rho", rho_grid, "power grid");
  sweep->add_option("--sigma2", sigma2_grid, "feedback noise grid");
  sweep->add_option("--gamma", gamma_mode);
  sweep->add_option("--out", out_path);
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv"}));

  auto* gsweep = app.add_subcommand("gamma-sweep", "optimal power split sweep");
  gsweep->add_option("--N", n_list);
  gsweep->add_option("--rho", rho_grid);
  gsweep->add_option("--sigma2", sigma2_grid);
  gsweep->add_option("--out", out_path);
  gsweep->add_option("--format", format)->check(CLI::IsMember({"csv"}));

  auto* exponent = app.add_subcommand("exponent-bounds", "exponent bound curve");
  exponent->add_option("--rho", rho)->required();
  exponent->add_option("--sigma2", sigma2)->required();
  exponent->add_option("--rates", rates, "rate grid in nats")->required();
  exponent->add_option("--out", out_path);
  exponent->add_option("--format", format)->check(CLI::IsMember({"csv"}));

  auto* simulate = app.add_subcommand("simulate", "concatenated A/B Monte Carlo");
  simulate->add_option("--N", n)->required();
  simulate->add_option("--rho", rho_grid);
  simulate->add_option("--sigma2", sigma2)->required();
  simulate->add_option("--gamma", gamma_mode);
  simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed)->required();
  simulate->add_option("--out", out_path);
  simulate->add_option("--format", format)->check(CLI::IsMember({"csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadConfig;
  }

  try {
    if (build->parsed()) {
      return cmd_build_scheme(n, rho, sigma2, gamma_mode, out_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep_snr(n_list, rho_grid, sigma2_grid, gamma_mode, out_path);
    }
    if (gsweep->parsed()) {
      return cmd_gamma_sweep(n_list, rho_grid, sigma2_grid, out_path);
    }
    if (exponent->parsed()) {
      return cmd_exponent_bounds(rho, sigma2, rates, out_path);
    }
    if (simulate->parsed()) {
      return cmd_simulate(n, rho_grid, sigma2, gamma_mode, trials, seed,
                          out_path);
    }
  } catch (const lfc::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return 0;
}
