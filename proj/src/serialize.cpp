#include "lfc/serialize.hpp"

#include <cstdio>

namespace lfc {

nlohmann::json to_json(const ChannelParams& params) {
  return {{"N", params.n}, {"rho", params.rho}, {"sigma2", params.sigma2}};
}

nlohmann::json to_json(const LinearScheme& scheme) {
  const int n = scheme.params.n;
  nlohmann::json f = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) row.push_back(scheme.encoding(i, j));
    f.push_back(row);
  }
  nlohmann::json q = nlohmann::json::array();
  nlohmann::json g = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    q.push_back(scheme.combining(i));
    g.push_back(scheme.message_dir(i));
  }
  return {{"F", f},
          {"q", q},
          {"g", g},
          {"gamma", scheme.gamma},
          {"params", to_json(scheme.params)},
          {"signal_energy", scheme.signal_energy},
          {"sk_baseline", scheme.sk_baseline}};
}

nlohmann::json to_json(const SimReport& report) {
  return {{"trials", report.trials},
          {"empirical_snr", report.empirical_snr},
          {"empirical_snr_stderr", report.empirical_snr_stderr},
          {"ber", report.ber},
          {"ber_radius", report.ber_radius},
          {"fer", report.fer},
          {"fer_radius", report.fer_radius},
          {"bit_errors", report.bit_errors},
          {"bits", report.bits},
          {"frame_errors", report.frame_errors},
          {"frames", report.frames},
          {"seed", report.seed}};
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace lfc
