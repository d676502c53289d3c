#pragma once

#include "iquot/swindow.hpp"
#include "iquot/verdict.hpp"

namespace iquot {

enum class BSide { i, ii };

// Condition A: every bicyclic target (i,j) with i,j <= targets must be the
// quotient (a phi)^-1 (b phi) of two element profiles. Targets reachable only
// through one-step overflow profiles are reported as unknown.
Verdict check_condition_a(const SubsemigroupWindow& s, int targets);

// Condition B: windowed cancellation. Side i: no x != y with
// l(x), l(y) >= r(a) and xa = ya. Side ii is the dual with ax = ay.
Verdict check_condition_b(const SubsemigroupWindow& s, BSide side);

// Condition C: every pair (b, c) admits x, y with xb = yc where
// l(x) = r(b)-l(b)+max(l(b),l(c)), l(y) = r(c)-l(c)+max(l(b),l(c)) and
// r(x) = r(y). A miss is reported as a within-window failure: the
// existential ranges over all of S, so no absolute refutation is possible.
Verdict check_condition_c(const SubsemigroupWindow& s);

// Straightness: every ambient element with both indices <= targets must equal
// invert(a) * b for some a, b in S with r(a) = r(b). Reference mode only.
Verdict check_straightness(const SubsemigroupWindow& s, int targets);

// L-class coverage up to `targets`; the full covered set up to the window
// bound is recorded in the witnesses.
Verdict coverage_verdict(const SubsemigroupWindow& s, int targets);

struct CheckSelection {
  bool a = true;
  bool b = true;
  bool c = true;
  bool straight = true;
  bool lclass = true;
};

// Runs the selected checks (straightness only in reference mode) and
// aggregates them; overall status is the worst component status.
ConditionReport condition_report(const SubsemigroupWindow& s, int targets,
                                 CheckSelection selection = {});

}  // namespace iquot
