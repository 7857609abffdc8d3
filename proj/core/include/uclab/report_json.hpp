#pragma once

#include <nlohmann/json.hpp>

#include "uclab/asymptotics.hpp"
#include "uclab/construction.hpp"
#include "uclab/family.hpp"
#include "uclab/metrics.hpp"
#include "uclab/rational.hpp"

namespace uclab {

// Big integers are written as decimal strings.

/// {"num": "...", "den": "...", "approx": ...}
nlohmann::json rational_json(const Rational& r);
nlohmann::json to_json(const MetricsReport& r);
nlohmann::json to_json(const BlockFamily& bf);
/// Parses {"k":..,"m":..,"s":..,"t_sets":[[..],..]}; t_sets is optional.
BlockFamily block_family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CountTable& c);
nlohmann::json to_json(const BlockMetrics& m);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const SeparationReport& r);
nlohmann::json to_json(const BandReport& b);

}  // namespace uclab
