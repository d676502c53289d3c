#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iquot {

// Three-valued outcome of a window-bounded check. "unknown" means the window
// blocked a quantifier: no witness was found but an undetermined product (or
// an element beyond the window) could still hide one.
enum class Status { pass, fail, unknown };

std::string to_string(Status s);

// fail > unknown > pass.
Status worse(Status a, Status b);

// Evidence for one target of a check: for a pass, the elements realising an
// existential claim; for a fail, the tuple that re-evaluates to a violation.
struct Witness {
  std::string target;                 // may be empty for unconditional claims
  std::vector<std::string> elements;  // canonical element ids
};

struct Verdict {
  Status status = Status::pass;
  std::vector<Witness> witnesses;
  std::vector<Witness> counterexamples;  // first entry is the primary one
  std::optional<std::string> limitation;

  bool failed() const { return status == Status::fail; }
};

// Aggregated condition checks for one subsemigroup window.
struct ConditionReport {
  int window = 0;
  int targets = 0;
  std::vector<std::pair<std::string, Verdict>> checks;
  Status overall = Status::pass;
};

}  // namespace iquot
