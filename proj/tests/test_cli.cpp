#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "entred/aggregation.hpp"
#include "entred/coupling.hpp"
#include "entred/error.hpp"
#include "entred/io.hpp"
#include "entred/ratio_bounds.hpp"
#include "entred/reduction.hpp"

using namespace entred;
using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "entred");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("entred_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

const std::string kP4 = R"({"p": [0.4, 0.3, 0.2, 0.1]})";

}  // namespace

TEST_CASE("parse_probabilities: JSON and CSV") {
  CHECK(io::parse_probabilities(kP4) == std::vector<double>{0.4, 0.3, 0.2, 0.1});
  CHECK(io::parse_probabilities("0.5\n0.5\n") == std::vector<double>{0.5, 0.5});
  CHECK(io::parse_probabilities("p\n0.25\r\n0.75\n\n") == std::vector<double>{0.25, 0.75});
  CHECK(io::parse_probabilities("# comment\n1e-1\n9e-1\n") == std::vector<double>{0.1, 0.9});
  CHECK_THROWS_AS(io::parse_probabilities("0.5,0.5\n"), Error);
  CHECK_THROWS_AS(io::parse_probabilities("0.5\nabc\n"), Error);
  CHECK_THROWS_AS(io::parse_probabilities(R"({"q": [1]})"), Error);
  CHECK_THROWS_AS(io::parse_probabilities(R"({"p": [1, "x"]})"), Error);
  CHECK_THROWS_AS(io::parse_probabilities(R"({"p": [1)"), Error);
}

TEST_CASE("round_sig9") {
  CHECK(io::round_sig9(0.46899559358928122) == 0.468995594);
  CHECK(io::round_sig9(1.0) == 1.0);
  CHECK(io::round_sig9(-0.0) == 0.0);
  CHECK(io::round_sig9(123456789012.0) == 123456789000.0);
}

TEST_CASE("partition and coupling JSON") {
  const Dist p = make_dist({0.4, 0.3, 0.2, 0.1});
  const Partition part = io::partition_from_json(json::parse(R"({"blocks": [[1, 2, 3], [0]]})"), 4);
  CHECK(io::to_json(part) == json::parse("[[1, 2, 3], [0]]"));
  CHECK_THROWS_AS(io::partition_from_json(json::parse(R"({"blocks": [[1, 2], [0]]})"), 4), Error);
  CHECK_THROWS_AS(io::partition_from_json(json::parse(R"({"blocks": [[-1, 1, 2, 3]]})"), 4), Error);

  const Coupling mq = build_mq(p, part);
  const json j = io::to_json(mq);
  CHECK(j.at("matrix") == json::parse("[[0, 0.3, 0.2, 0.1], [0.4, 0, 0, 0]]"));
  CHECK(j.at("p") == json::parse("[0.4, 0.3, 0.2, 0.1]"));
  CHECK(j.at("q") == json::parse("[0.6, 0.4]"));
  const Coupling back = io::coupling_from_json(j);
  CHECK(back.cells() == mq.cells());

  json unsorted = j;
  unsorted["q"] = json::parse("[0.4, 0.6]");
  CHECK_THROWS_AS(io::coupling_from_json(unsorted), Error);
  json wrong = j;
  wrong["matrix"][0][1] = 0.2;
  CHECK_THROWS_AS(io::coupling_from_json(wrong), Error);
}

TEST_CASE("bounds command matches the library") {
  const auto path = write_temp("p4.json", kP4);
  const Outcome r = invoke({"bounds", path, "--m", "2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const BoundReport b = bound_report(make_dist({0.4, 0.3, 0.2, 0.1}), 2);
  CHECK(j.at("h_upper") == io::round_sig9(b.h_upper.bits));
  CHECK(j.at("h_lower_achievable") == io::round_sig9(b.h_lower_achievable.bits));
  CHECK(j.at("alpha") == io::round_sig9(alpha()));
  CHECK(j.at("h_upper").get<double>() == 1.0);
  CHECK(j.at("h_lower_achievable").get<double>() == 0.468995594);
  CHECK(j.at("alpha").get<double>() == 0.0860713321);
}

TEST_CASE("ratio-bound command") {
  const Outcome r = invoke({"ratio-bound", "--rho", "2", "--n", "4"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("lower_bound_bits").get<double>() == 1.91392867);
  CHECK(j.at("gap_bits") == io::round_sig9(theorem2_gap(2.0)));
  CHECK(j.at("prior_epsilon") == io::round_sig9(prior_bound_epsilon(2.0)));
}

TEST_CASE("entropy command from CSV") {
  const auto path = write_temp("pair.csv", "0.5\n0.5\n");
  const Outcome r = invoke({"entropy", "--input", path});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("entropy_bits").get<double>() == 1.0);
}

TEST_CASE("reduce commands match the library") {
  const auto path = write_temp("p4b.json", kP4);
  const Dist p = make_dist({0.4, 0.3, 0.2, 0.1});
  {
    const json j = json::parse(invoke({"reduce-max", path, "--m", "2"}).out);
    const auto h = huffman_max_aggregation(p, 2);
    CHECK(j.at("dist") == io::to_json(h.result.dist));
    CHECK(j.at("blocks") == io::to_json(h.result.partition));
    CHECK(j.at("h") == io::round_sig9(h.result.h.bits));
    CHECK(j.at("guarantee") == "additive_alpha");
    CHECK(j.at("exact_ran") == true);
    CHECK(j.at("exact_h").get<double>() == 1.0);
    CHECK(j.at("certified_interval") == json::array({io::round_sig9(h.result.h.bits), 1.0}));
    CHECK(j.at("merges").size() == 2);
    CHECK(j.at("i_q") == 0);
  }
  {
    const json j = json::parse(invoke({"reduce-max", path, "--m", "2", "--exact-cap", "3"}).out);
    CHECK(j.at("exact_ran") == false);
    CHECK_FALSE(j.contains("exact_h"));
  }
  {
    const json j = json::parse(invoke({"reduce-min", path, "--m", "3"}).out);
    CHECK(j.at("dist") == json::parse("[0.7, 0.2, 0.1]"));
    CHECK(j.at("guarantee") == "exact");
  }
  {
    const json j = json::parse(invoke({"reduce-exact", path, "--m", "2"}).out);
    CHECK(j.at("blocks") == json::parse("[[0, 3], [1, 2]]"));
    CHECK(j.at("candidates_evaluated") == 7);
  }
  {
    const Outcome r = invoke({"reduce-exact", path, "--m", "2", "--exact-cap", "3"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("TooLarge") != std::string::npos);
  }
}

TEST_CASE("zrho and approx commands") {
  const auto path = write_temp("zr.json", R"({"p": [0.3, 0.25, 0.25, 0.2]})");
  const json z = json::parse(invoke({"zrho", path, "--rho", "1.5"}).out);
  CHECK(z.at("z") == json::parse("[0.3, 0.3, 0.2, 0.2]"));
  CHECK(z.at("leading") == 2);

  const auto p4 = write_temp("p4c.json", kP4);
  const json a = json::parse(invoke({"approx", p4, "--m", "2"}).out);
  CHECK(a.at("q_bar") == json::parse("[0.6, 0.4]"));
  CHECK(a.at("d_upper").get<double>() == io::round_sig9(0.87548875021634685));
}

TEST_CASE("distance command: exact and M_q-labelled") {
  const auto small = write_temp("d1.json", R"({"p": [0.75, 0.25], "q": [0.5, 0.5]})");
  const json e = json::parse(invoke({"distance", small}).out);
  CHECK(e.at("exact") == true);
  CHECK(e.at("kind") == "exact");
  CHECK(e.at("w").get<double>() == 1.5);
  CHECK(e.at("d") == io::round_sig9(1.1887218755408671));

  const auto big = write_temp(
      "d2.json", R"({"p": [0.2, 0.15, 0.15, 0.1, 0.1, 0.1, 0.05, 0.05, 0.05, 0.05], "blocks": [[0, 9], [1, 2, 3], [4, 5, 6, 7, 8]]})");
  const json u = json::parse(invoke({"distance", big}).out);
  CHECK(u.at("exact") == false);
  CHECK(u.at("kind") == "mq_upper_bound");
  CHECK(u.at("q") == json::parse("[0.4, 0.35, 0.25]"));

  const auto big_q = write_temp(
      "d3.json", R"({"p": [0.2, 0.15, 0.15, 0.1, 0.1, 0.1, 0.05, 0.05, 0.05, 0.05], "q": [0.5, 0.5]})");
  const Outcome r = invoke({"distance", big_q});
  CHECK(r.code == 1);
  CHECK(r.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("validation failures exit 1 with a named diagnostic and no output") {
  const auto bad = write_temp("bad.csv", "0.3\n0.8\n");
  Outcome r = invoke({"entropy", bad});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("NotNormalized") != std::string::npos);

  const auto p4 = write_temp("p4d.json", kP4);
  r = invoke({"bounds", p4, "--m", "4"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("BadM") != std::string::npos);

  r = invoke({"bounds", p4});
  CHECK(r.code == 1);
  CHECK(r.err.find("--m") != std::string::npos);

  r = invoke({"zrho", write_temp("zr2.json", R"({"p": [0.6, 0.2, 0.2]})"), "--rho", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("RatioViolated") != std::string::npos);

  r = invoke({"frobnicate"});
  CHECK(r.code == 1);
  r = invoke({"entropy", "/nonexistent/file.json"});
  CHECK(r.code == 1);
}

TEST_CASE("seeded random instances are deterministic") {
  const Outcome a = invoke({"reduce-max", "--seed", "42", "--n", "9", "--m", "3"});
  const Outcome b = invoke({"reduce-max", "--seed", "42", "--n", "9", "--m", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Outcome c = invoke({"distance", "--seed", "7", "--n", "4", "--m", "3"});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out).at("exact") == true);
}

TEST_CASE("table output") {
  const auto path = write_temp("p4e.json", kP4);
  const Outcome r = invoke({"bounds", path, "--m", "2", "--output", "table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("h_upper") != std::string::npos);
  CHECK(r.out.find("0.468995594") != std::string::npos);
}
