#include "logicmine/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "logicmine/dynamics.hpp"
#include "logicmine/error.hpp"
#include "logicmine/hebb.hpp"
#include "logicmine/mine.hpp"
#include "logicmine/text.hpp"
#include "logicmine/translate.hpp"

namespace logicmine {

namespace {

class IoError : public Error {
public:
  using Error::Error;
};

class UsageError : public Error {
public:
  using Error::Error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw IoError("cannot write '" + path + "'");
  f << text;
}

Representation parse_variant(const std::string &v) {
  if (v == "binary")
    return Representation::binary01;
  if (v == "bipolar")
    return Representation::bipolar;
  throw UsageError("unknown variant '" + v + "' (expected binary or bipolar)");
}

LearningRates parse_rates(const std::string &text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw UsageError("invalid learning rate '" + item + "'");
    }
  }
  if (v.size() != 3)
    throw UsageError("--rates expects three comma-separated values a1,a2,a3");
  LearningRates r{v[0], v[1], v[2]};
  try {
    r.validate();
  } catch (const Error &e) {
    throw UsageError(e.what());
  }
  return r;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Horn-clause compilation, relaxation, Hebbian learning and rule mining", "logicmine"};
  app.require_subcommand(1);

  std::string output;
  std::string variant;

  auto *compile_cmd = app.add_subcommand("compile", "compile a program into connection strengths");
  std::string compile_prog;
  compile_cmd->add_option("program", compile_prog, "program file")->required();
  compile_cmd->add_option("--variant", variant, "binary or bipolar")->default_val("binary");
  compile_cmd->add_option("-o,--output", output, "output file");

  auto *solve_cmd = app.add_subcommand("solve", "relax the compiled network from random starts");
  std::string solve_prog;
  SolveConfig solve_cfg;
  std::string solve_variant = "bipolar";
  solve_cmd->add_option("program", solve_prog, "program file")->required();
  solve_cmd->add_option("--variant", solve_variant, "binary or bipolar")->capture_default_str();
  solve_cmd->add_option("--restarts", solve_cfg.restarts, "number of random restarts")->capture_default_str();
  solve_cmd->add_option("--seed", solve_cfg.seed, "random seed")->capture_default_str();
  solve_cmd->add_option("--max-sweeps", solve_cfg.max_sweeps, "sweep limit per relaxation")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("-o,--output", output, "output file");

  std::string rates_text = "1,1,0.5";

  auto *learn_cmd = app.add_subcommand("learn", "learn connection strengths from events");
  std::string learn_events;
  learn_cmd->add_option("events", learn_events, "events CSV")->required();
  learn_cmd->add_option("--rates", rates_text, "learning rates a1,a2,a3")->capture_default_str();
  learn_cmd->add_option("-o,--output", output, "output file");

  auto *mine_cmd = app.add_subcommand("mine", "extract Horn clauses from events");
  std::string mine_events;
  double theta = 0.5;
  double min_confidence = -1.0;
  bool emit_denials = false;
  mine_cmd->add_option("events", mine_events, "events CSV")->required();
  mine_cmd->add_option("--rates", rates_text, "learning rates a1,a2,a3")->capture_default_str();
  mine_cmd->add_option("--theta", theta, "threshold fraction of each learning rate")->capture_default_str();
  auto *min_conf_opt = mine_cmd->add_option("--min-confidence", min_confidence, "drop rules below this confidence");
  mine_cmd->add_flag("--emit-denials", emit_denials, "emit headless clauses for strong negative connections");
  mine_cmd->add_option("-o,--output", output, "output file");

  auto *generate_cmd = app.add_subcommand("generate", "write the complete model set of a program as events");
  std::string generate_prog;
  generate_cmd->add_option("program", generate_prog, "program file")->required();
  generate_cmd->add_option("-o,--output", output, "output file");

  auto *verify_cmd = app.add_subcommand("verify", "report support and confidence of rules on events");
  std::string verify_rules;
  std::string verify_events;
  verify_cmd->add_option("rules", verify_rules, "rules file")->required();
  verify_cmd->add_option("events", verify_events, "events CSV")->required();
  verify_cmd->add_option("-o,--output", output, "output file");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*compile_cmd) {
      const auto program = parse_program(read_file(compile_prog));
      const auto s = compile(program, parse_variant(variant));
      emit(write_synapses(s, program.atoms()), output, out);
    } else if (*solve_cmd) {
      const auto program = parse_program(read_file(solve_prog));
      solve_cfg.representation = parse_variant(solve_variant);
      const auto result = solve(program, solve_cfg);
      emit(write_solutions(result.models, program.atoms(), result.stats.restarts, result.stats.successes), output,
           out);
      if (result.models.empty()) {
        err << "no model found\n";
        return exit_no_model;
      }
    } else if (*learn_cmd) {
      const auto rates = parse_rates(rates_text);
      const auto events = read_events(read_file(learn_events));
      emit(write_synapses(learn(events, rates), events.atoms()), output, out);
    } else if (*mine_cmd) {
      MineConfig cfg;
      cfg.rates = parse_rates(rates_text);
      cfg.threshold_fraction = theta;
      if (min_conf_opt->count() > 0)
        cfg.min_confidence = min_confidence;
      cfg.emit_denials = emit_denials;
      try {
        cfg.validate();
      } catch (const Error &e) {
        throw UsageError(e.what());
      }
      const auto events = read_events(read_file(mine_events));
      const auto result = mine(events, cfg);
      emit(write_rules(result, events.atoms()), output, out);
    } else if (*generate_cmd) {
      const auto program = parse_program(read_file(generate_prog));
      const auto models = enumerate_models(program);
      if (models.empty()) {
        err << "program has no model\n";
        return exit_no_model;
      }
      emit(write_events(EventTable(program.atoms(), models)), output, out);
    } else if (*verify_cmd) {
      const auto events = read_events(read_file(verify_events));
      const auto clauses = read_rule_clauses(read_file(verify_rules), events.atoms());
      std::string report;
      for (const auto &c : clauses) {
        const auto rc = rule_confidence(c, events);
        report += format_clause(c, events.atoms()) + "\tsupport=" + std::to_string(rc.support) +
                  "\tconfidence=" + format_short(rc.confidence) + "\n";
      }
      emit(report, output, out);
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return exit_format;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_format;
  }
  return exit_ok;
}

} // namespace logicmine
