#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "iquot/quotient.hpp"
#include "iquot/swindow.hpp"
#include "iquot/verdict.hpp"

namespace iquot {

// One full tool run, assembled by the CLI. Sections are present according to
// the command that produced the report.
struct RunReport {
  std::string command;
  std::optional<std::string> preset;
  std::optional<std::string> config_file;
  SubMode mode = SubMode::reference;
  int window = 0;
  int targets = 0;
  int element_count = 0;
  std::optional<ConditionReport> conditions;
  std::optional<StructureReport> structure;
  std::optional<ComparisonReport> comparison;
  Status overall = Status::pass;
};

// Machine-readable form. Check objects carry exactly the keys
// name / status / witnesses / counterexample / limitation.
nlohmann::ordered_json to_json(const RunReport& report);

// Human-readable form, one line per check.
std::string render_text(const RunReport& report);

// Serialized JSON document with a trailing newline, byte-stable across runs.
std::string report_bytes(const RunReport& report);

}  // namespace iquot
