#pragma once

#include <json.hpp>

#include "core/series.hpp"

namespace ssmthom {

using Json = nlohmann::ordered_json;

Json series_to_json(const GradedSeries& p);
GradedSeries series_from_json(const Json& j, const std::string& context = "series");

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j, const std::string& context);

std::string json_dump(const Json& j);

}  // namespace ssmthom
