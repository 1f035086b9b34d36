#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "entred/coupling.hpp"
#include "entred/dist.hpp"
#include "entred/partition.hpp"

namespace entred::io {

using nlohmann::json;

/// Raw probabilities from either `{"p": [...]}` or a one-column CSV. An
/// optional non-numeric header line and `#` comments are skipped in CSV.
std::vector<double> parse_probabilities(std::string_view text);
Dist parse_dist(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Rounds to 9 significant digits, the precision of every printed number.
double round_sig9(double x);

json to_json(const Dist& d);
json to_json(const Partition& partition);
/// `{"matrix": [[...], ...], "p": [...], "q": [...]}`
json to_json(const Coupling& coupling);

Partition partition_from_json(const json& j, std::size_t n);
Coupling coupling_from_json(const json& j);

}  // namespace entred::io
