#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "iquot/errors.hpp"
#include "iquot/verifier.hpp"
#include "support.hpp"

using namespace iquot;

namespace {

bool has_counterexample_target(const Verdict& v, const std::string& target) {
  return std::any_of(v.counterexamples.begin(), v.counterexamples.end(),
                     [&](const Witness& w) { return w.target == target; });
}

const Witness* witness_for(const Verdict& v, const std::string& target) {
  for (const Witness& w : v.witnesses) {
    if (w.target == target) return &w;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("condition A passes on the full bicyclic demo") {
  const SubsemigroupWindow s = testsupport::bicyclic_demo(20);
  const Verdict v = check_condition_a(s, 10);
  CHECK(v.status == Status::pass);
  REQUIRE(v.witnesses.size() == 121);
  const Witness* w = witness_for(v, "(3,7)");
  REQUIRE(w != nullptr);
  CHECK(w->elements == std::vector<std::string>{"(0,3)", "(0,7)"});
}

TEST_CASE("condition A fails on the even closure with all-even targets unreachable") {
  const SubsemigroupWindow s = testsupport::even_demo(8);
  const Verdict v = check_condition_a(s, 2);
  CHECK(v.status == Status::fail);
  CHECK(has_counterexample_target(v, "(1,1)"));
  CHECK(has_counterexample_target(v, "(0,0)"));
  CHECK_FALSE(has_counterexample_target(v, "(2,2)"));
}

TEST_CASE("condition A with targets 0 needs only one profile pair") {
  const SubsemigroupWindow s = testsupport::rightzero_demo();
  const Verdict v = check_condition_a(s, 0);
  CHECK(v.status == Status::pass);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].elements == std::vector<std::string>{"u", "u"});
}

TEST_CASE("cancellation B(i) fails on the right-zero table at (u, v, u)") {
  const SubsemigroupWindow s = testsupport::rightzero_demo();
  const Verdict v = check_condition_b(s, BSide::i);
  REQUIRE(v.status == Status::fail);
  REQUIRE(v.counterexamples.size() == 1);
  CHECK(v.counterexamples[0].elements == std::vector<std::string>{"u", "v", "u"});
  // re-check the counterexample directly: uu = u = vu
  CHECK(s.product_at(0, 0) == s.product_at(1, 0));
}

TEST_CASE("cancellation B(ii) holds on the right-zero table") {
  const SubsemigroupWindow s = testsupport::rightzero_demo();
  CHECK(check_condition_b(s, BSide::ii).status == Status::pass);
}

TEST_CASE("both cancellation sides hold on the bicyclic demo") {
  const SubsemigroupWindow s = testsupport::bicyclic_demo(20);
  CHECK(check_condition_b(s, BSide::i).status == Status::pass);
  CHECK(check_condition_b(s, BSide::ii).status == Status::pass);
}

TEST_CASE("cancellation is vacuously true on the empty window") {
  const SubsemigroupWindow s =
      close_generators({}, testsupport::trivial_context(), Window{4});
  CHECK(check_condition_b(s, BSide::i).status == Status::pass);
  CHECK(check_condition_b(s, BSide::ii).status == Status::pass);
}

TEST_CASE("condition C finds the prescribed witness profiles on the bicyclic demo") {
  const SubsemigroupWindow s = testsupport::bicyclic_demo(20);
  const Verdict v = check_condition_c(s);
  CHECK(v.status == Status::pass);
  const Witness* w = witness_for(v, "((0,2),(0,5))");
  REQUIRE(w != nullptr);
  // l(x) = 0-2+max(2,5) = 3 and l(y) = 0-5+max(2,5) = 0
  CHECK(w->elements == std::vector<std::string>{"(0,3)", "(0,0)"});
  const Witness* diag = witness_for(v, "((0,4),(0,4))");
  REQUIRE(diag != nullptr);
  CHECK(diag->elements == std::vector<std::string>{"(0,0)", "(0,0)"});
}

TEST_CASE("condition C fails within the window on the even closure") {
  const SubsemigroupWindow s = testsupport::even_demo(8);
  const Verdict v = check_condition_c(s);
  CHECK(v.status == Status::fail);
  // (b,c) = ((0,2),(0,4)) needs l(x) = 2 and l(y) = 0; nothing has l = 0
  CHECK(has_counterexample_target(v, "((0,2),(0,4))"));
  REQUIRE(v.limitation.has_value());
  CHECK(v.limitation->find("within the window") != std::string::npos);
}

TEST_CASE("straightness passes on both positive demos") {
  const SubsemigroupWindow bicyclic = testsupport::bicyclic_demo(20);
  const Verdict vb = check_straightness(bicyclic, 10);
  CHECK(vb.status == Status::pass);
  CHECK(vb.witnesses.size() == 121);
  const Witness* w = witness_for(vb, "(4,9)");
  REQUIRE(w != nullptr);
  CHECK(w->elements == std::vector<std::string>{"(0,4)", "(0,9)"});

  const SubsemigroupWindow z2 = testsupport::z2_demo(12);
  const Verdict vz = check_straightness(z2, 6);
  CHECK(vz.status == Status::pass);
  CHECK(vz.witnesses.size() == 7 * 2 * 7);
  const Witness* wz = witness_for(vz, "(3,1,5)");
  REQUIRE(wz != nullptr);
  CHECK(wz->elements == std::vector<std::string>{"(0,0,3)", "(0,1,5)"});
}

TEST_CASE("straightness with targets 0 uses the diagonal fraction") {
  const SubsemigroupWindow s = testsupport::bicyclic_demo(6);
  const Verdict v = check_straightness(s, 0);
  CHECK(v.status == Status::pass);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].target == "(0,0)");
  CHECK(v.witnesses[0].elements == std::vector<std::string>{"(0,0)", "(0,0)"});
}

TEST_CASE("straightness rejects abstract-mode input") {
  const SubsemigroupWindow s = testsupport::rightzero_demo();
  CHECK_THROWS_AS((void)check_straightness(s, 0), validation_error);
}

TEST_CASE("undetermined abstract products make cancellation unknown, not false") {
  // v*v leaves the window, so the triple (u, v, a=v) cannot be decided
  const SubsemigroupWindow s = load_abstract(
      {{"u", {0, 0}}, {"v", {0, 1}}},
      {{"u", "u", "u", false}, {"u", "v", "v", false}, {"v", "u", "v", false},
       {"v", "v", "", true}},
      Window{1});
  const Verdict b1 = check_condition_b(s, BSide::i);
  CHECK(b1.status == Status::unknown);
  REQUIRE(b1.limitation.has_value());
  CHECK(b1.limitation->find("undetermined") != std::string::npos);
  CHECK(check_condition_b(s, BSide::ii).status == Status::pass);
  const ConditionReport report = condition_report(s, 0);
  CHECK(report.overall == Status::unknown);
}

TEST_CASE("coverage verdict records the covered set and the gaps") {
  const SubsemigroupWindow even = testsupport::even_demo(8);
  const Verdict v = coverage_verdict(even, 2);
  CHECK(v.status == Status::fail);
  std::vector<std::string> covered;
  for (const Witness& w : v.witnesses) covered.push_back(w.target);
  CHECK(covered == std::vector<std::string>{"2", "4", "6", "8"});
  CHECK(has_counterexample_target(v, "0"));
  CHECK(has_counterexample_target(v, "1"));

  const SubsemigroupWindow full = testsupport::bicyclic_demo(20);
  CHECK(coverage_verdict(full, 10).status == Status::pass);
}

TEST_CASE("every stored pass witness re-evaluates against its condition") {
  const SubsemigroupWindow s = testsupport::z2_demo(8);
  const int targets = 4;

  for (const Witness& w : check_condition_a(s, targets).witnesses) {
    REQUIRE(w.elements.size() == 2);
    const int a = s.find_id(w.elements[0]);
    const int b = s.find_id(w.elements[1]);
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    const int t = std::max(s.r_of(a), s.r_of(b));
    std::ostringstream os;
    os << "(" << s.l_of(a) - s.r_of(a) + t << "," << s.l_of(b) - s.r_of(b) + t << ")";
    CHECK(os.str() == w.target);
  }

  for (const Witness& w : check_condition_c(s).witnesses) {
    REQUIRE(w.elements.size() == 2);
    const int x = s.find_id(w.elements[0]);
    const int y = s.find_id(w.elements[1]);
    REQUIRE(x >= 0);
    REQUIRE(y >= 0);
    CHECK(s.r_of(x) == s.r_of(y));
    // the witnessed pair (b, c) is encoded in the target string
    const std::string target = w.target;
    const auto comma = target.find("),(");
    REQUIRE(comma != std::string::npos);
    const int b = s.find_id(target.substr(1, comma));
    const int c = s.find_id(target.substr(comma + 2, target.size() - comma - 3));
    REQUIRE(b >= 0);
    REQUIRE(c >= 0);
    const int m = std::max(s.l_of(b), s.l_of(c));
    CHECK(s.l_of(x) == s.r_of(b) - s.l_of(b) + m);
    CHECK(s.l_of(y) == s.r_of(c) - s.l_of(c) + m);
    CHECK(s.ambient_product(x, b) == s.ambient_product(y, c));
  }
}

TEST_CASE("aggregate report on the bicyclic demo passes every check") {
  const SubsemigroupWindow s = testsupport::bicyclic_demo(20);
  const ConditionReport report = condition_report(s, 10);
  CHECK(report.overall == Status::pass);
  REQUIRE(report.checks.size() == 6);
  CHECK(report.checks[0].first == "A");
  CHECK(report.checks[1].first == "B(i)");
  CHECK(report.checks[2].first == "B(ii)");
  CHECK(report.checks[3].first == "C");
  CHECK(report.checks[4].first == "straight");
  CHECK(report.checks[5].first == "lclass");
}

TEST_CASE("aggregate report pins the failures of the counterexample demos") {
  const ConditionReport even = condition_report(testsupport::even_demo(8), 2);
  CHECK(even.overall == Status::fail);
  for (const auto& [name, v] : even.checks) {
    if (name == "A" || name == "lclass") CHECK(v.status == Status::fail);
  }

  const ConditionReport rz = condition_report(testsupport::rightzero_demo(), 0);
  CHECK(rz.overall == Status::fail);
  // no straightness check in abstract mode
  CHECK(rz.checks.size() == 5);
  for (const auto& [name, v] : rz.checks) {
    if (name == "B(i)") CHECK(v.status == Status::fail);
    if (name == "B(ii)" || name == "A" || name == "lclass") CHECK(v.status == Status::pass);
  }
}

TEST_CASE("positive demos pass at every target bound up to the slack limit") {
  const SubsemigroupWindow bicyclic = testsupport::bicyclic_demo(20);
  for (int t = 0; t <= 10; ++t) {
    CHECK(condition_report(bicyclic, t).overall == Status::pass);
  }
  const SubsemigroupWindow z2 = testsupport::z2_demo(12);
  for (int t = 0; t <= 6; ++t) {
    CHECK(condition_report(z2, t).overall == Status::pass);
  }
}

TEST_CASE("a coverage gap is always accompanied by an A or straightness failure") {
  for (const SubsemigroupWindow& s :
       {testsupport::even_demo(8),
        close_generators({{0, 0, 3}}, testsupport::trivial_context(), Window{9})}) {
    const int targets = s.window.bound / 4;
    const Verdict cov = coverage_verdict(s, targets);
    if (cov.status != Status::fail) continue;
    const Status a = check_condition_a(s, targets).status;
    const Status st = check_straightness(s, targets).status;
    CHECK((a == Status::fail || st == Status::fail));
  }
}
