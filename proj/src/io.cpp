#include "entred/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "entred/error.hpp"

namespace entred::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<double> numbers_from_json(const json& arr, std::string_view what) {
  if (!arr.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_number()) throw Error(ErrorKind::ParseError, std::string(what) + " holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<double> parse_csv(std::string_view text) {
  std::vector<double> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.find(',') != std::string_view::npos) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected a single column");
    }
    double value = 0.0;
    if (!parse_number(line, value)) {
      if (out.empty() && line_no == 1) continue;  // header
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": not a number");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::vector<double> parse_probabilities(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.contains("p")) throw Error(ErrorKind::ParseError, "missing key \"p\"");
    return numbers_from_json(j.at("p"), "\"p\"");
  }
  return parse_csv(body);
}

Dist parse_dist(std::string_view text) { return make_dist(parse_probabilities(text)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double round_sig9(double x) {
  if (!std::isfinite(x)) return x;
  if (x == 0.0) return 0.0;  // folds -0.0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

json to_json(const Dist& d) {
  json arr = json::array();
  for (double x : d.probs()) arr.push_back(round_sig9(x));
  return arr;
}

json to_json(const Partition& partition) { return partition.blocks(); }

json to_json(const Coupling& coupling) {
  json rows = json::array();
  for (const auto& row : coupling.matrix()) {
    json r = json::array();
    for (double x : row) r.push_back(round_sig9(x));
    rows.push_back(std::move(r));
  }
  return {{"matrix", std::move(rows)},
          {"p", to_json(coupling.col_marginal())},
          {"q", to_json(coupling.row_marginal())}};
}

Partition partition_from_json(const json& j, std::size_t n) {
  const json& blocks = j.is_object() ? j.at("blocks") : j;
  if (!blocks.is_array()) throw Error(ErrorKind::ParseError, "\"blocks\" must be an array");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& block : blocks) {
    if (!block.is_array()) throw Error(ErrorKind::ParseError, "each block must be an array");
    std::vector<std::size_t> b;
    for (const auto& idx : block) {
      if (!idx.is_number_integer() || idx.get<long long>() < 0) {
        throw Error(ErrorKind::BadPartition, "block entries must be non-negative integers");
      }
      b.push_back(idx.get<std::size_t>());
    }
    out.push_back(std::move(b));
  }
  return Partition(std::move(out), n);
}

Coupling coupling_from_json(const json& j) {
  if (!j.contains("matrix") || !j.contains("p") || !j.contains("q")) {
    throw Error(ErrorKind::ParseError, "coupling needs \"matrix\", \"p\" and \"q\"");
  }
  const auto sorted_marginal = [&](const char* key) {
    const auto raw = numbers_from_json(j.at(key), key);
    if (!std::is_sorted(raw.begin(), raw.end(), std::greater<>())) {
      throw Error(ErrorKind::ParseError, std::string("marginal \"") + key +
                                             "\" must be listed non-increasing");
    }
    return make_dist(raw);
  };
  Dist p = sorted_marginal("p");
  Dist q = sorted_marginal("q");
  std::vector<double> cells;
  for (const auto& row : j.at("matrix")) {
    const auto r = numbers_from_json(row, "matrix row");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return Coupling(std::move(cells), std::move(q), std::move(p));
}

}  // namespace entred::io
