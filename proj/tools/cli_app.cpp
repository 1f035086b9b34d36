#include "cli_app.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <utility>

#include "CLI11.hpp"

#include "entred/aggregation.hpp"
#include "entred/coupling.hpp"
#include "entred/error.hpp"
#include "entred/io.hpp"
#include "entred/ratio_bounds.hpp"
#include "entred/reduction.hpp"

namespace entred::cli {

using nlohmann::json;
using io::round_sig9;

namespace {

constexpr std::array<std::pair<std::string_view, Command>, 9> kCommands{{
    {"entropy", Command::Entropy},
    {"bounds", Command::Bounds},
    {"reduce-max", Command::ReduceMax},
    {"reduce-min", Command::ReduceMin},
    {"reduce-exact", Command::ReduceExact},
    {"ratio-bound", Command::RatioBound},
    {"zrho", Command::ZRho},
    {"distance", Command::Distance},
    {"approx", Command::Approx},
}};

std::string_view command_help(Command c) {
  switch (c) {
    case Command::Entropy: return "Shannon entropy of a distribution";
    case Command::Bounds: return "entropy bracket over all maps onto m symbols";
    case Command::ReduceMax: return "Huffman aggregation within alpha of the maximum";
    case Command::ReduceMin: return "minimum-entropy aggregation onto m symbols";
    case Command::ReduceExact: return "exhaustive maximum-entropy aggregation (small n)";
    case Command::RatioBound: return "entropy lower bound under a max/min ratio constraint";
    case Command::ZRho: return "extremal majorant for a ratio constraint";
    case Command::Distance: return "coupling divergence D(p, q), exact or M_q upper bound";
    case Command::Approx: return "m-symbol approximation within alpha of the best D";
  }
  return "";
}

[[noreturn]] void usage_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

std::size_t require_m(const RunConfig& c) {
  if (!c.m) usage_error(std::string(command_name(c.command)) + " requires --m");
  return *c.m;
}

double require_rho(const RunConfig& c) {
  if (!c.rho) usage_error(std::string(command_name(c.command)) + " requires --rho");
  return *c.rho;
}

std::mt19937_64 make_rng(const RunConfig& c) { return std::mt19937_64(*c.seed); }

std::size_t require_n(const RunConfig& c) {
  if (!c.n || *c.n == 0) usage_error("a seeded random instance requires --n >= 1");
  return *c.n;
}

// The input distribution: from --input, else a seeded random instance.
Dist load_dist(const RunConfig& c) {
  if (c.input_path) return io::parse_dist(io::read_file(*c.input_path));
  if (c.seed) {
    auto rng = make_rng(c);
    return sample_dist(require_n(c), rng);
  }
  usage_error("no input: pass --input or --seed with --n");
}

json aggregation_json(const AggregationResult& r) {
  return {{"dist", io::to_json(r.dist)},
          {"blocks", io::to_json(r.partition)},
          {"h", round_sig9(r.h.bits)},
          {"guarantee", r.guarantee == Guarantee::Exact ? "exact" : "additive_alpha"}};
}

json distance_report(const RunConfig& c) {
  Dist p = make_dist({1.0});
  std::optional<Dist> q;
  std::optional<Partition> partition;
  if (c.input_path) {
    json j;
    try {
      j = json::parse(io::read_file(*c.input_path));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("p")) usage_error("distance input needs a JSON object with \"p\"");
    p = make_dist(j.at("p").get<std::vector<double>>());
    if (j.contains("blocks")) {
      partition = io::partition_from_json(j, p.size());
      q = aggregate(p, *partition);
    } else if (j.contains("q")) {
      q = make_dist(j.at("q").get<std::vector<double>>());
    } else {
      usage_error("distance input needs \"q\" or \"blocks\"");
    }
  } else if (c.seed) {
    auto rng = make_rng(c);
    p = sample_dist(require_n(c), rng);
    q = sample_dist(require_m(c), rng);
  } else {
    usage_error("no input: pass --input or --seed with --n and --m");
  }

  const double hp = entropy(p).bits;
  const double hq = entropy(*q).bits;
  json report{{"p", io::to_json(p)}, {"q", io::to_json(*q)}, {"h_p", round_sig9(hp)}, {"h_q", round_sig9(hq)}};
  if (p.size() + q->size() <= kDefaultCouplingCap) {
    const ExactCoupling exact = min_entropy_coupling_exact(p, *q);
    report["w"] = round_sig9(exact.report.w.bits);
    report["d"] = round_sig9(exact.report.d);
    report["exact"] = true;
    report["kind"] = "exact";
    report["coupling"] = io::to_json(exact.coupling);
  } else if (partition) {
    const Coupling mq = build_mq(p, *partition);
    report["w"] = round_sig9(entropy(mq).bits);
    report["d"] = round_sig9(d_upper_via_mq(p, *partition));
    report["exact"] = false;
    report["kind"] = "mq_upper_bound";
    report["coupling"] = io::to_json(mq);
  } else {
    throw Error(ErrorKind::TooLarge, "exact coupling limited to m + n <= " +
                                         std::to_string(kDefaultCouplingCap) +
                                         "; supply \"blocks\" for the M_q upper bound");
  }
  return report;
}

void print_table(const json& report, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [key, _] : report.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : report.items()) {
    out << key << std::string(width - key.size() + 2, ' ');
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [text, cmd] : kCommands) {
    if (text == name) return cmd;
  }
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [text, cmd] : kCommands) {
    if (cmd == c) return text;
  }
  return "?";
}

json build_report(const RunConfig& c) {
  json report{{"command", std::string(command_name(c.command))}};
  switch (c.command) {
    case Command::Entropy: {
      const Dist p = load_dist(c);
      report["n"] = p.size();
      report["entropy_bits"] = round_sig9(entropy(p).bits);
      break;
    }
    case Command::Bounds: {
      const std::size_t m = require_m(c);
      const Dist p = load_dist(c);
      const BoundReport b = bound_report(p, m);
      report["n"] = p.size();
      report["m"] = b.m;
      report["h_upper"] = round_sig9(b.h_upper.bits);
      report["h_lower_achievable"] = round_sig9(b.h_lower_achievable.bits);
      report["alpha"] = round_sig9(b.alpha);
      break;
    }
    case Command::ReduceMax: {
      const std::size_t m = require_m(c);
      const Dist p = load_dist(c);
      const HuffmanAggregation huff = huffman_max_aggregation(p, m);
      const double h_upper = entropy(r_operator(p, m)).bits;
      report.update(aggregation_json(huff.result));
      report["m"] = m;
      report["h_upper"] = round_sig9(h_upper);
      // The true maximum lies in [h, h_upper]; h_upper - h <= alpha.
      report["certified_interval"] = {round_sig9(huff.result.h.bits), round_sig9(h_upper)};
      report["measured_gap"] = round_sig9(h_upper - huff.result.h.bits);
      report["alpha"] = round_sig9(alpha());
      report["i_q"] = huff.trace.i_q;
      json merges = json::array();
      for (const auto& s : huff.trace.merge_steps) {
        merges.push_back({{"a", s.node_a}, {"b", s.node_b}, {"mass_a", round_sig9(s.mass_a)},
                          {"mass_b", round_sig9(s.mass_b)}, {"merged", round_sig9(s.merged_mass)},
                          {"node", s.merged_node}});
      }
      report["merges"] = std::move(merges);
      report["exact_ran"] = p.size() <= c.exact_cap;
      if (p.size() <= c.exact_cap) {
        const AggregationResult exact = exact_max_aggregation(p, m, c.exact_cap);
        report["exact_h"] = round_sig9(exact.h.bits);
        report["exact_blocks"] = io::to_json(exact.partition);
      }
      break;
    }
    case Command::ReduceMin: {
      const std::size_t m = require_m(c);
      const Dist p = load_dist(c);
      report.update(aggregation_json(exact_min_aggregation(p, m)));
      report["m"] = m;
      break;
    }
    case Command::ReduceExact: {
      const std::size_t m = require_m(c);
      const Dist p = load_dist(c);
      const AggregationResult r = exact_max_aggregation(p, m, c.exact_cap);
      report.update(aggregation_json(r));
      report["m"] = m;
      report["candidates_evaluated"] = r.candidates_evaluated;
      break;
    }
    case Command::RatioBound: {
      const double rho = require_rho(c);
      std::size_t n = 0;
      if (c.input_path) {
        const Dist p = load_dist(c);
        n = p.size();
        report["ratio"] = p.back() > 0.0 ? json(round_sig9(p.front() / p.back())) : json(nullptr);
        report["entropy_bits"] = round_sig9(entropy(p).bits);
      } else if (c.n) {
        n = *c.n;
      } else {
        usage_error("ratio-bound requires --n or --input");
      }
      const RatioBound b = ratio_bound(n, rho);
      report["n"] = b.n;
      report["rho"] = round_sig9(b.rho);
      report["gap_bits"] = round_sig9(b.gap_bits);
      report["lower_bound_bits"] = round_sig9(b.lower_bound_bits);
      report["prior_epsilon"] = round_sig9(prior_bound_epsilon(rho));
      break;
    }
    case Command::ZRho: {
      const double rho = require_rho(c);
      const Dist p = load_dist(c);
      const ZRho z = z_rho_detail(p, rho);
      const double hz = entropy(z.z).bits;
      report["rho"] = round_sig9(rho);
      report["z"] = io::to_json(z.z);
      report["leading"] = z.leading;
      report["middle"] = round_sig9(z.middle);
      report["entropy_bits"] = round_sig9(hz);
      report["log2n_minus_h"] = round_sig9(std::log2(static_cast<double>(p.size())) - hz);
      report["gap_bits"] = round_sig9(theorem2_gap(rho));
      break;
    }
    case Command::Distance:
      report.update(distance_report(c));
      break;
    case Command::Approx: {
      const std::size_t m = require_m(c);
      const Dist p = load_dist(c);
      const Approximation a = approx_best_approximation(p, m);
      report["m"] = m;
      report["q_bar"] = io::to_json(a.q_bar);
      report["blocks"] = io::to_json(a.partition);
      report["d_upper"] = round_sig9(a.d_upper);
      report["alpha"] = round_sig9(alpha());
      break;
    }
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  json report;
  try {
    report = build_report(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  if (config.output == OutputFormat::Json) {
    out << report.dump(2) << '\n';
  } else {
    print_table(report, out);
  }
  return 0;
}

int main_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy bounds and aggregations of finite distributions"};
  app.require_subcommand(1);

  RunConfig config;
  std::string input;
  std::size_t m = 0;
  std::size_t n = 0;
  double rho = 0.0;
  std::uint64_t seed = 0;
  std::string output = "json";

  for (const auto& [name, cmd] : kCommands) {
    auto* sub = app.add_subcommand(std::string(name), std::string(command_help(cmd)));
    sub->add_option("input,-i,--input", input, "distribution file (JSON {\"p\": [...]} or one-column CSV)");
    sub->add_option("--m", m, "number of output symbols");
    sub->add_option("--n", n, "support size (ratio-bound, seeded random instances)");
    sub->add_option("--rho", rho, "bound on p_1 / p_n");
    sub->add_option("--exact-cap", config.exact_cap, "largest n for exhaustive search")->capture_default_str();
    sub->add_option("--output,-o", output, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    sub->add_option("--seed", seed, "generate a random instance instead of reading a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.command = *parse_command(sub->get_name());
  if (sub->count("input")) config.input_path = input;
  if (sub->count("--m")) config.m = m;
  if (sub->count("--n")) config.n = n;
  if (sub->count("--rho")) config.rho = rho;
  if (sub->count("--seed")) config.seed = seed;
  config.output = output == "table" ? OutputFormat::Table : OutputFormat::Json;
  return run(config, out, err);
}

}  // namespace entred::cli
