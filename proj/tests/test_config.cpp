#include <doctest.h>

#include <fstream>
#include <sstream>

#include "iquot/config.hpp"
#include "iquot/errors.hpp"
#include "iquot/report.hpp"
#include "iquot/verifier.hpp"

using namespace iquot;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("every shipped preset parses, round-trips, and matches its demo file") {
  for (const auto& [name, text] : demo_presets()) {
    CAPTURE(name);
    const ProblemConfig cfg = parse_config(text);
    CHECK(parse_config(serialize_config(cfg)) == cfg);
    const std::string on_disk = read_file(std::string(IQUOT_DEMO_DIR) + "/" + name + ".cfg");
    CHECK(on_disk == text);
  }
}

TEST_CASE("the bicyclic preset parses to the expected problem") {
  const ProblemConfig cfg = parse_config(demo_presets().at("bicyclic-n0"));
  CHECK(cfg.group.order == 1);
  CHECK(cfg.sub.mode == SubMode::reference);
  CHECK(cfg.sub.generators == std::vector<ReillyElement>{{0, 0, 0}, {0, 0, 1}});
  CHECK(cfg.window == 20);
  CHECK(cfg.effective_targets() == 10);
  const Problem p = build_problem(cfg);
  CHECK(p.s.size() == 21);
}

TEST_CASE("the Z2 preset parses to the expected problem") {
  const ProblemConfig cfg = parse_config(demo_presets().at("reilly-z2"));
  CHECK(cfg.group.order == 2);
  REQUIRE(cfg.endo.has_value());
  CHECK(cfg.endo->map == std::vector<int>{0, 1});
  CHECK(cfg.sub.generators == std::vector<ReillyElement>{{0, 1, 0}, {0, 0, 1}});
  CHECK(cfg.window == 12);
  CHECK(cfg.effective_targets() == 6);
  CHECK(build_problem(cfg).s.size() == 26);
}

TEST_CASE("an empty config is missing its group section") {
  CHECK_THROWS_WITH_AS(parse_config(""), doctest::Contains("missing [group] section"),
                       parse_error);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_config("[group]\norder = 1\ntable = 0\nidentity = zero\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("unknown sections and keys are rejected") {
  CHECK_THROWS_AS(parse_config("[bogus]\n"), parse_error);
  const std::string text =
      "[group]\norder = 1\ntable = 0\nidentity = 0\ncolour = red\n"
      "[subsemigroup]\nmode = reference\ngenerators = (0,1)\n"
      "[run]\nwindow = 4\n";
  CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("unknown key 'colour'"),
                       parse_error);
}

TEST_CASE("targets beyond the window are rejected") {
  const std::string text =
      "[group]\norder = 1\ntable = 0\nidentity = 0\n"
      "[subsemigroup]\nmode = reference\ngenerators = (0,1)\n"
      "[run]\nwindow = 4\ntargets = 9\n";
  CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("targets"), parse_error);
}

TEST_CASE("pair generators require the trivial group") {
  const std::string text =
      "[group]\norder = 2\ntable = 0 1; 1 0\nidentity = 0\n"
      "[subsemigroup]\nmode = reference\ngenerators = (0,1)\n"
      "[run]\nwindow = 4\n";
  CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("triples"), parse_error);
}

TEST_CASE("targets default to half the window") {
  const std::string text =
      "[group]\norder = 1\ntable = 0\nidentity = 0\n"
      "[subsemigroup]\nmode = reference\ngenerators = (0,1)\n"
      "[run]\nwindow = 9\n";
  const ProblemConfig cfg = parse_config(text);
  CHECK_FALSE(cfg.targets.has_value());
  CHECK(cfg.effective_targets() == 4);
  CHECK(parse_config(serialize_config(cfg)) == cfg);
}

TEST_CASE("abstract products parse from bare lines and from a products key") {
  const std::string bare =
      "[group]\norder = 1\ntable = 0\nidentity = 0\n"
      "[subsemigroup]\nmode = abstract\nelements = u:(0,0) v:(0,0)\n"
      "u*u = u\nu*v = v\nv*u = u\nv*v = v\n"
      "[run]\nwindow = 0\n";
  const std::string keyed =
      "[group]\norder = 1\ntable = 0\nidentity = 0\n"
      "[subsemigroup]\nmode = abstract\nelements = u:(0,0) v:(0,0)\n"
      "products = u*u=u u*v=v v*u=u v*v=v\n"
      "[run]\nwindow = 0\n";
  CHECK(parse_config(bare) == parse_config(keyed));
  const Problem p = build_problem(parse_config(bare));
  CHECK(p.s.mode == SubMode::abstract_table);
  CHECK(p.s.size() == 2);
}

TEST_CASE("semantic errors surface through build_problem") {
  // generator outside the window
  const std::string text =
      "[group]\norder = 1\ntable = 0\nidentity = 0\n"
      "[subsemigroup]\nmode = reference\ngenerators = (0,9)\n"
      "[run]\nwindow = 4\n";
  CHECK_THROWS_AS(build_problem(parse_config(text)), validation_error);
}

TEST_CASE("reports are byte-stable across repeated pipeline runs") {
  const ProblemConfig cfg = parse_config(demo_presets().at("even-counterexample"));
  auto run_once = [&]() {
    const Problem p = build_problem(cfg);
    RunReport report;
    report.command = "check";
    report.mode = p.s.mode;
    report.window = p.window;
    report.targets = p.targets;
    report.element_count = p.s.size();
    report.conditions = condition_report(p.s, p.targets);
    report.overall = report.conditions->overall;
    return report_bytes(report);
  };
  CHECK(run_once() == run_once());
}
