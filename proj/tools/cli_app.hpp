#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "json.hpp"

namespace entred::cli {

enum class Command { Entropy, Bounds, ReduceMax, ReduceMin, ReduceExact, RatioBound, ZRho, Distance, Approx };
enum class OutputFormat { Json, Table };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::Entropy;
  std::optional<std::filesystem::path> input_path;
  std::optional<std::size_t> m;
  std::optional<double> rho;
  std::optional<std::size_t> n;  ///< ratio-bound support size, or size of a seeded random instance
  std::size_t exact_cap = 12;
  OutputFormat output = OutputFormat::Json;
  std::optional<std::uint64_t> seed;
};

/// Builds the full report for one command. Throws entred::Error on any
/// validation failure; nothing is printed until the report is complete.
nlohmann::json build_report(const RunConfig& config);

/// Prints the report. Returns 0 on success, 1 on validation errors, 2 otherwise.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Argument parsing plus run().
int main_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entred::cli
