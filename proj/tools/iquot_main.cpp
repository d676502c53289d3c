#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "iquot/config.hpp"
#include "iquot/errors.hpp"
#include "iquot/quotient.hpp"
#include "iquot/report.hpp"
#include "iquot/verifier.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string preset;
  std::string out_path;
  std::string conditions;  // comma-separated subset of A,B,C,straight,lclass
  std::int64_t sample = 0;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

iquot::CheckSelection parse_selection(const std::string& spec) {
  if (spec.empty()) return {};
  iquot::CheckSelection sel{false, false, false, false, false};
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok == "A") {
      sel.a = true;
    } else if (tok == "B") {
      sel.b = true;
    } else if (tok == "C") {
      sel.c = true;
    } else if (tok == "straight") {
      sel.straight = true;
    } else if (tok == "lclass") {
      sel.lclass = true;
    } else {
      throw std::runtime_error("unknown condition '" + tok +
                               "' (expected A,B,C,straight,lclass)");
    }
  }
  return sel;
}

int status_exit_code(iquot::Status s) {
  switch (s) {
    case iquot::Status::pass: return 0;
    case iquot::Status::fail: return 1;
    case iquot::Status::unknown: return 2;
  }
  return 2;
}

int run_command(const std::string& command, const Options& opt) {
  std::string text;
  iquot::RunReport report;
  report.command = command;
  if (command == "demo") {
    const auto& presets = iquot::demo_presets();
    auto it = presets.find(opt.preset);
    if (it == presets.end()) {
      std::ostringstream os;
      os << "unknown demo '" << opt.preset << "'; available:";
      for (const auto& [name, cfg] : presets) os << " " << name;
      throw std::runtime_error(os.str());
    }
    text = it->second;
    report.preset = opt.preset;
  } else {
    text = read_file(opt.config_path);
    report.config_file = opt.config_path;
  }

  const iquot::ProblemConfig cfg = iquot::parse_config(text);
  const iquot::Problem problem = iquot::build_problem(cfg);
  report.mode = problem.s.mode;
  report.window = problem.window;
  report.targets = problem.targets;
  report.element_count = problem.s.size();

  const iquot::SampleSpec sample{opt.seed, opt.sample};
  const bool reference = problem.s.mode == iquot::SubMode::reference;

  if (command == "check" || command == "demo") {
    report.conditions =
        iquot::condition_report(problem.s, problem.targets, parse_selection(opt.conditions));
  }
  if (command == "build" || command == "compare" || command == "demo") {
    const iquot::QuotientWindow qw = iquot::build_quotient(problem.s);
    report.structure = iquot::verify_quotient(qw, problem.s, sample);
    if (command == "compare" || (command == "demo" && reference)) {
      report.comparison = iquot::compare_to_reference(qw, problem.s);
    }
  }

  report.overall = iquot::Status::pass;
  if (report.conditions) report.overall = iquot::worse(report.overall, report.conditions->overall);
  if (report.structure) report.overall = iquot::worse(report.overall, report.structure->overall);
  if (report.comparison) {
    report.overall = iquot::worse(report.overall, report.comparison->overall);
  }

  std::cout << iquot::render_text(report);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + opt.out_path + "'");
    out << iquot::report_bytes(report);
  }
  return status_exit_code(report.overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"window-bounded verification of left I-orders in bisimple inverse "
               "omega-semigroups"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* validate = app.add_subcommand("validate", "validate the structures in a config");
  validate->add_option("config", opt.config_path, "problem config file")->required();
  validate->add_option("--out", opt.out_path, "write the machine-readable report here");

  CLI::App* check = app.add_subcommand("check", "run the left-I-order condition checks");
  check->add_option("config", opt.config_path, "problem config file")->required();
  check->add_option("--conditions", opt.conditions, "subset of A,B,C,straight,lclass");
  check->add_option("--out", opt.out_path, "write the machine-readable report here");

  CLI::App* build = app.add_subcommand("build", "build the quotient and verify its structure");
  build->add_option("config", opt.config_path, "problem config file")->required();
  build->add_option("--out", opt.out_path, "write the machine-readable report here");
  build->add_option("--sample", opt.sample, "sample this many associativity triples");
  build->add_option("--seed", opt.seed, "seed for sampling mode");

  CLI::App* compare =
      app.add_subcommand("compare", "build the quotient and compare it to the ambient semigroup");
  compare->add_option("config", opt.config_path, "problem config file")->required();
  compare->add_option("--out", opt.out_path, "write the machine-readable report here");
  compare->add_option("--sample", opt.sample, "sample this many associativity triples");
  compare->add_option("--seed", opt.seed, "seed for sampling mode");

  CLI::App* demo = app.add_subcommand("demo", "run a shipped preset end to end");
  demo->add_option("name", opt.preset, "preset name")->required();
  demo->add_option("--out", opt.out_path, "write the machine-readable report here");
  demo->add_option("--sample", opt.sample, "sample this many associativity triples");
  demo->add_option("--seed", opt.seed, "seed for sampling mode");

  CLI11_PARSE(app, argc, argv);

  try {
    return run_command(app.get_subcommands().front()->get_name(), opt);
  } catch (const iquot::parse_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const iquot::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
