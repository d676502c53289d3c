#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iquot/swindow.hpp"

namespace iquot {

struct GroupSpec {
  int order = 1;
  std::vector<int> table{0};
  int identity = 0;
  std::optional<std::vector<int>> inverse;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct EndoSpec {
  std::vector<int> map;

  friend bool operator==(const EndoSpec&, const EndoSpec&) = default;
};

struct AbstractTableSpec {
  std::vector<AbstractElementSpec> elements;  // sorted by label
  std::vector<AbstractProductSpec> products;  // sorted by (left, right)

  friend bool operator==(const AbstractTableSpec& a, const AbstractTableSpec& b) {
    auto key = [](const AbstractElementSpec& e) { return std::pair{e.label, e.profile}; };
    if (a.elements.size() != b.elements.size() || a.products != b.products) return false;
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
      if (key(a.elements[i]) != key(b.elements[i])) return false;
    }
    return true;
  }
};

struct SubsemigroupSpec {
  SubMode mode = SubMode::reference;
  std::vector<ReillyElement> generators;  // reference mode, input order
  AbstractTableSpec table;                // abstract mode

  friend bool operator==(const SubsemigroupSpec&, const SubsemigroupSpec&) = default;
};

struct ProblemConfig {
  GroupSpec group;
  std::optional<EndoSpec> endo;  // identity map when absent
  SubsemigroupSpec sub;
  int window = 0;
  std::optional<int> targets;  // floor(window / 2) when absent

  int effective_targets() const { return targets.value_or(window / 2); }

  friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

// Parses the line-oriented config format; throws parse_error with the line
// number on syntax errors. Semantic validation happens in build_problem.
ProblemConfig parse_config(const std::string& text);

// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ProblemConfig& config);

// A validated, fully built problem instance.
struct Problem {
  std::shared_ptr<const ReillyContext> ambient;
  SubsemigroupWindow s;
  int window = 0;
  int targets = 0;
};

// Validates the group, endomorphism and subsemigroup data and constructs the
// window; throws validation_error on the first violated axiom.
Problem build_problem(const ProblemConfig& config);

// Shipped presets, by name, as config file text.
const std::map<std::string, std::string>& demo_presets();

}  // namespace iquot
