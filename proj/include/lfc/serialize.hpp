#ifndef LFC_SERIALIZE_HPP
#define LFC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "lfc/channel_sim.hpp"
#include "lfc/core_model.hpp"

namespace lfc {

nlohmann::json to_json(const ChannelParams& params);
nlohmann::json to_json(const LinearScheme& scheme);
nlohmann::json to_json(const SimReport& report);

/// Shortest round-trip double formatting ("%.17g" trimmed by the JSON
/// writer is not locale-safe in CSV; this is).
std::string format_double(double value);

}  // namespace lfc

#endif
