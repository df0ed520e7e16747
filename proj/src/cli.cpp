#include "stabiliscope/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "stabiliscope/batch.hpp"
#include "stabiliscope/errors.hpp"
#include "stabiliscope/json_io.hpp"

namespace stabiliscope {

namespace {

using io::json;

json load_input(const std::string& source, std::istream& in) {
  std::string text;
  if (source == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    text = source;  // inline JSON
  } else {
    std::ifstream f(source);
    if (!f) throw input_error("--input", "cannot open \"" + source + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("--input", e.what());
  }
}

std::uint64_t env_seed() {
  const char* s = std::getenv("STABILISCOPE_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw input_error("STABILISCOPE_SEED", "expected an unsigned integer");
  }
}

// Routes command output to --output or the default stream.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw input_error("--output", "cannot open \"" + path + "\"");
    os_ = &file_;
  }

  std::ostream& os() { return *os_; }

private:
  std::ofstream file_;
  std::ostream* os_;
};

std::string render_map_text(const PLMap& map) {
  std::ostringstream os;
  for (std::size_t i = 0; i < map.pieces().size(); ++i) {
    const AffinePiece& p = map.pieces()[i];
    os << "on [" << map.breakpoints()[i] << ", " << map.breakpoints()[i + 1]
       << "]: T(q) = " << p.slope << "*q + " << p.intercept << "\n";
  }
  return os.str();
}

std::string render_orbit_text(const ResolvedOrbit& o) {
  std::ostringstream os;
  os << "orbit: start " << o.start;
  for (const auto& [lo, hi] : o.points) os << " -> gap (" << lo << ", " << hi << ")";
  os << " [indeterminate]\nlength: " << o.points.size() << "\ninverse image:";
  for (const Rat& r : o.inverse) os << " " << r;
  os << "\n";
  return os.str();
}

std::string render_marked_text(const FiberModel& model) {
  std::ostringstream os;
  os << "marked:";
  for (const Rat& r : model.marked()) os << " " << r;
  os << "\n";
  return os.str();
}

std::string render_state_text(const LiftState& s) {
  std::ostringstream os;
  os << "comp=" << s.comp() << " lengths={";
  bool first = true;
  for (const std::size_t n : s.orbit_lengths()) {
    if (!first) os << ",";
    os << n;
    first = false;
  }
  os << "} length1_curves=" << s.length1_curves();
  return os.str();
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::string format = "text";
};

int cmd_tf(const CommonOpts& opt, std::istream& in, std::ostream& out) {
  const PLMap map = io::plmap_from_json(load_input(opt.input, in), "input");
  Sink sink(opt.output, out);
  if (opt.format == "json")
    sink.os() << io::canonical(io::to_json(map)) << "\n";
  else
    sink.os() << render_map_text(map);
  return 0;
}

int cmd_orbit(const CommonOpts& opt, const std::string& q0_text, std::size_t steps,
              std::istream& in, std::ostream& out) {
  const PLMap map = io::plmap_from_json(load_input(opt.input, in), "input");
  Rat q0;
  try {
    q0 = Rat::parse(q0_text);
  } catch (const std::exception& e) {
    throw input_error("q0", e.what());
  }
  std::vector<Rat> points;
  try {
    points = orbit(map, q0, steps);
  } catch (const std::domain_error& e) {
    throw input_error("q0", e.what());
  }
  Sink sink(opt.output, out);
  if (opt.format == "json") {
    json j{{"q0", q0.str()}, {"orbit", json::array()}};
    for (const Rat& r : points) j["orbit"].push_back(r.str());
    sink.os() << io::canonical(j) << "\n";
  } else {
    for (std::size_t i = 0; i < points.size(); ++i)
      sink.os() << (i ? " " : "") << points[i];
    sink.os() << "\n";
  }
  return 0;
}

struct Pair {
  FiberModel model;
  PLMap map;
};

Pair pair_from_input(const json& j) {
  return {io::model_from_json(j, "input"),
          io::plmap_from_json(j.at("map"), "input/map")};
}

int cmd_analyze(const CommonOpts& opt, std::istream& in, std::ostream& out) {
  const json j = load_input(opt.input, in);
  if (!j.is_object() || !j.contains("map")) throw input_error("input/map", "missing");
  const Pair pair = pair_from_input(j);
  const StabilityVerdict verdict = is_algebraically_stable(pair.model, pair.map);
  Sink sink(opt.output, out);
  if (opt.format == "json") {
    json doc{{"stable", verdict.stable}};
    if (verdict.orbit) doc["orbit"] = io::to_json(resolve(*verdict.orbit, pair.model));
    sink.os() << io::canonical(doc) << "\n";
  } else if (verdict.stable) {
    sink.os() << "stable\n";
  } else {
    sink.os() << "unstable\n" << render_orbit_text(resolve(*verdict.orbit, pair.model));
  }
  return verdict.stable ? 0 : 2;
}

int cmd_msa(const CommonOpts& opt, std::size_t budget, const std::string& strategy_name,
            std::istream& in, std::ostream& out) {
  const json j = load_input(opt.input, in);
  if (!j.is_object() || !j.contains("map")) throw input_error("input/map", "missing");
  const Pair pair = pair_from_input(j);
  Strategy strategy;
  try {
    strategy = Strategy::parse(strategy_name,
                               strategy_name == "random" ? env_seed() : 0);
  } catch (const input_error&) {
    throw;
  } catch (const std::exception& e) {
    throw input_error("--strategy", e.what());
  }
  const MsaResult result = run_msa(pair.model, pair.map, budget, strategy);
  Sink sink(opt.output, out);
  if (opt.format == "json") {
    for (std::size_t r = 0; r < result.trace.size(); ++r) {
      json line{{"round", r + 1}, {"orbit", io::to_json(result.trace[r].orbit)},
                {"inserted", json::array()}};
      for (const Rat& m : result.trace[r].inserted) line["inserted"].push_back(m.str());
      sink.os() << io::canonical(line) << "\n";
    }
    json summary{{"status", result.terminated() ? "terminated" : "budget-exhausted"},
                 {"rounds", result.rounds},
                 {"final", io::to_json(result.final_model)}};
    sink.os() << io::canonical(summary) << "\n";
  } else {
    for (std::size_t r = 0; r < result.trace.size(); ++r) {
      const MsaRound& round = result.trace[r];
      sink.os() << "round " << (r + 1) << ": orbit start " << round.orbit.start
                << " length " << round.orbit.points.size() << "; inserted";
      for (const Rat& m : round.inserted) sink.os() << " " << m;
      sink.os() << "\n";
    }
    sink.os() << (result.terminated() ? "terminated after " : "budget exhausted after ")
              << result.rounds << " rounds\n"
              << render_marked_text(result.final_model);
  }
  return result.terminated() ? 0 : 3;
}

int cmd_certify(const CommonOpts& opt, std::size_t steps, std::istream& in,
                std::ostream& out) {
  const PLMap map = io::plmap_from_json(load_input(opt.input, in), "input");
  const Certificate cert = verify_counterexample(map, steps);
  Sink sink(opt.output, out);
  if (opt.format == "json") {
    sink.os() << io::canonical(io::to_json(cert)) << "\n";
  } else {
    sink.os() << "slopes +-3/2: " << (cert.slopes_ok ? "ok" : "failed") << "\n"
              << "interior fold onto 1: " << (cert.fold_ok ? "ok" : "failed") << "\n"
              << "denominators 2^m with odd numerators: "
              << (cert.denominators_doubling ? "ok" : "failed") << " ("
              << cert.steps_checked << " steps)\n"
              << "certificate: " << (cert.valid() ? "valid" : "invalid") << "\n";
  }
  return 0;
}

int cmd_lift_sim(const CommonOpts& opt, std::istream& in, std::ostream& out) {
  LiftState state = io::lift_state_from_json(load_input(opt.input, in), "input");
  std::vector<LiftState> trajectory{state};
  while (!trajectory.back().stable()) trajectory.push_back(lift(trajectory.back()));
  const std::size_t lifts = trajectory.size() - 1;
  Sink sink(opt.output, out);
  if (opt.format == "json") {
    json doc{{"lifts", lifts}, {"trajectory", json::array()}};
    for (const LiftState& s : trajectory) doc["trajectory"].push_back(io::to_json(s));
    sink.os() << io::canonical(doc) << "\n";
  } else {
    for (std::size_t i = 0; i < trajectory.size(); ++i)
      sink.os() << "step " << i << ": " << render_state_text(trajectory[i]) << "\n";
    sink.os() << "stable after " << lifts << " lifts\n";
  }
  return 0;
}

int cmd_export_graph(const CommonOpts& opt, std::istream& in, std::ostream& out) {
  const FiberModel model = io::model_from_json(load_input(opt.input, in), "input");
  Sink sink(opt.output, out);
  if (opt.format == "json")
    sink.os() << io::canonical(io::to_json(model)) << "\n";
  else
    sink.os() << to_dot(model);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"piecewise-linear stabilisation toolkit for fiber dynamics"};
  app.require_subcommand(1);

  CommonOpts tf_opt, orbit_opt, analyze_opt, msa_opt, certify_opt, lift_opt, graph_opt;
  std::string q0_text;
  std::size_t steps = 0, budget = 0, certify_steps = 0;
  std::string strategy_name = "smallest-start";

  const auto add_common = [](CLI::App* cmd, CommonOpts& opt,
                             const std::vector<std::string>& formats) {
    cmd->add_option("--input", opt.input, "input file, '-' for stdin, or inline JSON")
        ->required();
    cmd->add_option("--output", opt.output, "write output to this file");
    opt.format = formats.front();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(formats));
  };

  CLI::App* tf = app.add_subcommand("tf", "build the induced fiber map");
  add_common(tf, tf_opt, {"text", "json"});

  CLI::App* orb = app.add_subcommand("orbit", "iterate the fiber map");
  add_common(orb, orbit_opt, {"text", "json"});
  orb->add_option("q0", q0_text, "starting point (rational)")->required();
  orb->add_option("--steps", steps, "iterations")->required()->check(CLI::PositiveNumber);

  CLI::App* analyze = app.add_subcommand("analyze", "decide algebraic stability");
  add_common(analyze, analyze_opt, {"text", "json"});

  CLI::App* msa = app.add_subcommand("msa", "run the minimal stabilisation algorithm");
  add_common(msa, msa_opt, {"text", "json"});
  msa->add_option("--budget", budget, "stability checks allowed")
      ->required()
      ->check(CLI::PositiveNumber);
  msa->add_option("--strategy", strategy_name, "orbit tie-break")
      ->check(CLI::IsMember({"smallest-start", "largest-start", "random"}));

  CLI::App* certify = app.add_subcommand("certify", "check the non-stabilisability certificate");
  add_common(certify, certify_opt, {"text", "json"});
  certify->add_option("--steps", certify_steps, "orbit steps to verify")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* lift_sim = app.add_subcommand("lift-sim", "simulate graph lifts to stability");
  add_common(lift_sim, lift_opt, {"text", "json"});

  CLI::App* graph = app.add_subcommand("export-graph", "emit the model's dual graph");
  add_common(graph, graph_opt, {"dot", "json"});

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("stabiliscope");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;  // 0 stays help/version; anything else is bad input
  }

  try {
    if (*tf) return cmd_tf(tf_opt, in, out);
    if (*orb) return cmd_orbit(orbit_opt, q0_text, steps, in, out);
    if (*analyze) return cmd_analyze(analyze_opt, in, out);
    if (*msa) return cmd_msa(msa_opt, budget, strategy_name, in, out);
    if (*certify) return cmd_certify(certify_opt, certify_steps, in, out);
    if (*lift_sim) return cmd_lift_sim(lift_opt, in, out);
    if (*graph) return cmd_export_graph(graph_opt, in, out);
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no command\n";
  return 1;
}

}  // namespace stabiliscope
