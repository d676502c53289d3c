#include "iquot/report.hpp"

#include <iomanip>
#include <sstream>

namespace iquot {

namespace {

using nlohmann::ordered_json;

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["target"] = w.target.empty() ? ordered_json(nullptr) : ordered_json(w.target);
  j["elements"] = w.elements;
  return j;
}

ordered_json check_json(const std::string& name, const Verdict& v) {
  ordered_json j;
  j["name"] = name;
  j["status"] = to_string(v.status);
  ordered_json witnesses = ordered_json::array();
  for (const Witness& w : v.witnesses) witnesses.push_back(witness_json(w));
  j["witnesses"] = std::move(witnesses);
  if (v.counterexamples.empty()) {
    j["counterexample"] = nullptr;
  } else {
    ordered_json ce = witness_json(v.counterexamples.front());
    if (v.counterexamples.size() > 1) {
      ordered_json all = ordered_json::array();
      for (const Witness& w : v.counterexamples) all.push_back(w.target);
      ce["all"] = std::move(all);
    }
    j["counterexample"] = std::move(ce);
  }
  j["limitation"] = v.limitation ? ordered_json(*v.limitation) : ordered_json(nullptr);
  return j;
}

void append_line(std::ostringstream& os, const std::string& name, const Verdict& v) {
  os << "  " << std::left << std::setw(18) << (name + ":") << to_string(v.status);
  if (!v.witnesses.empty()) os << "  (" << v.witnesses.size() << " witness(es))";
  if (!v.counterexamples.empty()) {
    os << "  counterexample:";
    if (!v.counterexamples.front().target.empty()) {
      os << " " << v.counterexamples.front().target;
    }
    if (!v.counterexamples.front().elements.empty()) {
      os << " [";
      for (std::size_t i = 0; i < v.counterexamples.front().elements.size(); ++i) {
        if (i > 0) os << ", ";
        os << v.counterexamples.front().elements[i];
      }
      os << "]";
    }
  }
  if (v.limitation) os << "  -- " << *v.limitation;
  os << "\n";
}

}  // namespace

ordered_json to_json(const RunReport& report) {
  ordered_json j;
  j["tool"] = "iquot";
  j["command"] = report.command;
  j["preset"] = report.preset ? ordered_json(*report.preset) : ordered_json(nullptr);
  j["config"] = report.config_file ? ordered_json(*report.config_file) : ordered_json(nullptr);
  j["mode"] = report.mode == SubMode::reference ? "reference" : "abstract";
  j["window"] = report.window;
  j["targets"] = report.targets;
  j["elements"] = report.element_count;

  ordered_json summary = ordered_json::object();
  if (report.structure) {
    summary["classes"] = report.structure->class_count;
    summary["idempotents"] = report.structure->idempotent_count;
    summary["certified"] = report.structure->certified;
  }
  if (report.comparison) {
    summary["mapped"] = report.comparison->mapped;
    summary["targets_total"] = report.comparison->target_count;
  }
  j["summary"] = std::move(summary);

  ordered_json checks = ordered_json::array();
  if (report.conditions) {
    for (const auto& [name, v] : report.conditions->checks) checks.push_back(check_json(name, v));
  }
  if (report.structure) {
    for (const auto& [name, v] : report.structure->items) {
      checks.push_back(check_json("quotient." + name, v));
    }
  }
  if (report.comparison) {
    for (const auto& [name, v] : report.comparison->items) {
      checks.push_back(check_json("comparison." + name, v));
    }
  }
  j["checks"] = std::move(checks);
  j["overall"] = to_string(report.overall);
  return j;
}

std::string render_text(const RunReport& report) {
  std::ostringstream os;
  os << "iquot " << report.command;
  if (report.preset) os << " " << *report.preset;
  if (report.config_file) os << " " << *report.config_file;
  os << "\n";
  os << "mode: " << (report.mode == SubMode::reference ? "reference" : "abstract")
     << ", window N=" << report.window << ", targets N'=" << report.targets << ", |S|="
     << report.element_count << "\n";
  if (report.conditions) {
    os << "conditions:\n";
    for (const auto& [name, v] : report.conditions->checks) append_line(os, name, v);
  }
  if (report.structure) {
    os << "quotient: " << report.structure->class_count << " classes, "
       << report.structure->idempotent_count << " idempotents, partition "
       << (report.structure->certified ? "certified" : "not certified") << " within window\n";
    for (const auto& [name, v] : report.structure->items) append_line(os, name, v);
  }
  if (report.comparison) {
    os << "comparison to the ambient semigroup: " << report.comparison->mapped
       << " classes onto " << report.comparison->target_count << " targets\n";
    for (const auto& [name, v] : report.comparison->items) append_line(os, name, v);
  }
  os << "overall: " << to_string(report.overall) << "\n";
  return os.str();
}

std::string report_bytes(const RunReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace iquot
