#include "iquot/config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "iquot/errors.hpp"

namespace iquot {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error(line, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw parse_error(line, "expected an integer, got '" + tok + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& value, int line) {
  std::vector<int> out;
  for (const std::string& tok : split_ws(value)) out.push_back(parse_int(tok, line));
  return out;
}

// "(m,n)" or "(m,g,n)"
std::vector<int> parse_tuple(const std::string& tok, int line) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') {
    throw parse_error(line, "expected a parenthesized tuple, got '" + tok + "'");
  }
  std::vector<int> parts;
  std::string inner = tok.substr(1, tok.size() - 2);
  std::istringstream is(inner);
  std::string piece;
  while (std::getline(is, piece, ',')) parts.push_back(parse_int(trim(piece), line));
  if (!inner.empty() && inner.back() == ',') {
    throw parse_error(line, "trailing comma in tuple '" + tok + "'");
  }
  return parts;
}

struct Line {
  int number;
  std::string section;
  std::string key;
  std::string value;
};

}  // namespace

ProblemConfig parse_config(const std::string& text) {
  ProblemConfig cfg;
  bool saw_group = false, saw_sub = false, saw_run = false, saw_window = false;
  bool saw_table = false, saw_identity = false, saw_order = false, saw_mode = false;

  std::string section;
  std::istringstream input(text);
  std::string raw;
  int line_no = 0;
  std::vector<Line> lines;
  while (std::getline(input, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw parse_error(line_no, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (section != "group" && section != "endo" && section != "subsemigroup" &&
          section != "run") {
        throw parse_error(line_no, "unknown section [" + section + "]");
      }
      if (section == "group") saw_group = true;
      if (section == "subsemigroup") saw_sub = true;
      if (section == "run") saw_run = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw parse_error(line_no, "expected 'key = value'");
    if (section.empty()) throw parse_error(line_no, "entry before any section header");
    lines.push_back({line_no, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
  }
  if (!saw_group) throw parse_error(line_no, "missing [group] section");
  if (!saw_sub) throw parse_error(line_no, "missing [subsemigroup] section");
  if (!saw_run) throw parse_error(line_no, "missing [run] section");

  std::vector<std::pair<Line, std::vector<int>>> generator_lines;

  for (const Line& ln : lines) {
    if (ln.section == "group") {
      if (ln.key == "order") {
        cfg.group.order = parse_int(ln.value, ln.number);
        saw_order = true;
      } else if (ln.key == "table") {
        cfg.group.table.clear();
        std::istringstream rows(ln.value);
        std::string row;
        while (std::getline(rows, row, ';')) {
          for (int v : parse_int_list(trim(row), ln.number)) cfg.group.table.push_back(v);
        }
        saw_table = true;
      } else if (ln.key == "identity") {
        cfg.group.identity = parse_int(ln.value, ln.number);
        saw_identity = true;
      } else if (ln.key == "inverse") {
        cfg.group.inverse = parse_int_list(ln.value, ln.number);
      } else {
        throw parse_error(ln.number, "unknown key '" + ln.key + "' in [group]");
      }
    } else if (ln.section == "endo") {
      if (ln.key == "map") {
        cfg.endo = EndoSpec{parse_int_list(ln.value, ln.number)};
      } else {
        throw parse_error(ln.number, "unknown key '" + ln.key + "' in [endo]");
      }
    } else if (ln.section == "subsemigroup") {
      if (ln.key.find('*') != std::string::npos) {
        // bare product line: "x*y = z" or "x*y = OVERFLOW"
        const auto star = ln.key.find('*');
        AbstractProductSpec p;
        p.left = trim(ln.key.substr(0, star));
        p.right = trim(ln.key.substr(star + 1));
        if (p.left.empty() || p.right.empty()) {
          throw parse_error(ln.number, "malformed product entry");
        }
        if (ln.value == "OVERFLOW") {
          p.overflow = true;
        } else {
          p.result = ln.value;
        }
        cfg.sub.table.products.push_back(std::move(p));
      } else if (ln.key == "mode") {
        if (ln.value == "reference") {
          cfg.sub.mode = SubMode::reference;
        } else if (ln.value == "abstract") {
          cfg.sub.mode = SubMode::abstract_table;
        } else {
          throw parse_error(ln.number, "mode must be 'reference' or 'abstract'");
        }
        saw_mode = true;
      } else if (ln.key == "generators") {
        for (const std::string& tok : split_ws(ln.value)) {
          generator_lines.push_back({ln, parse_tuple(tok, ln.number)});
        }
      } else if (ln.key == "products") {
        for (const std::string& tok : split_ws(ln.value)) {
          const auto star = tok.find('*');
          const auto eq2 = tok.find('=', star == std::string::npos ? 0 : star);
          if (star == std::string::npos || eq2 == std::string::npos) {
            throw parse_error(ln.number, "expected 'x*y=z', got '" + tok + "'");
          }
          AbstractProductSpec p;
          p.left = tok.substr(0, star);
          p.right = tok.substr(star + 1, eq2 - star - 1);
          const std::string result = tok.substr(eq2 + 1);
          if (p.left.empty() || p.right.empty() || result.empty()) {
            throw parse_error(ln.number, "expected 'x*y=z', got '" + tok + "'");
          }
          if (result == "OVERFLOW") {
            p.overflow = true;
          } else {
            p.result = result;
          }
          cfg.sub.table.products.push_back(std::move(p));
        }
      } else if (ln.key == "elements") {
        for (const std::string& tok : split_ws(ln.value)) {
          const auto colon = tok.find(':');
          if (colon == std::string::npos) {
            throw parse_error(ln.number, "expected 'label:(r,l)', got '" + tok + "'");
          }
          AbstractElementSpec e;
          e.label = tok.substr(0, colon);
          const std::vector<int> p = parse_tuple(tok.substr(colon + 1), ln.number);
          if (p.size() != 2) throw parse_error(ln.number, "profile must be a pair (r,l)");
          e.profile = {p[0], p[1]};
          cfg.sub.table.elements.push_back(std::move(e));
        }
      } else {
        throw parse_error(ln.number, "unknown key '" + ln.key + "' in [subsemigroup]");
      }
    } else if (ln.section == "run") {
      if (ln.key == "window") {
        cfg.window = parse_int(ln.value, ln.number);
        saw_window = true;
      } else if (ln.key == "targets") {
        cfg.targets = parse_int(ln.value, ln.number);
      } else {
        throw parse_error(ln.number, "unknown key '" + ln.key + "' in [run]");
      }
    }
  }

  if (!saw_order || !saw_table || !saw_identity) {
    throw parse_error(line_no, "[group] must declare order, table and identity");
  }
  if (!saw_mode) throw parse_error(line_no, "[subsemigroup] must declare mode");
  if (!saw_window) throw parse_error(line_no, "[run] must declare window");
  if (cfg.window < 0) throw parse_error(line_no, "window must be non-negative");
  if (cfg.targets && (*cfg.targets < 0 || *cfg.targets > cfg.window)) {
    throw parse_error(line_no, "targets must satisfy 0 <= targets <= window");
  }

  for (const auto& [ln, parts] : generator_lines) {
    if (parts.size() == 3) {
      cfg.sub.generators.push_back({parts[0], parts[1], parts[2]});
    } else if (parts.size() == 2 && cfg.group.order == 1) {
      cfg.sub.generators.push_back({parts[0], 0, parts[1]});
    } else {
      throw parse_error(ln.number,
                        "generators must be triples (m,g,n), or pairs (m,n) when order = 1");
    }
  }

  // canonical in-memory order for abstract tables
  std::sort(cfg.sub.table.elements.begin(), cfg.sub.table.elements.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });
  std::sort(cfg.sub.table.products.begin(), cfg.sub.table.products.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.left, a.right) < std::tie(b.left, b.right);
            });
  return cfg;
}

std::string serialize_config(const ProblemConfig& cfg) {
  std::ostringstream os;
  os << "[group]\n";
  os << "order = " << cfg.group.order << "\n";
  os << "table = ";
  for (int i = 0; i < cfg.group.order; ++i) {
    if (i > 0) os << "; ";
    for (int j = 0; j < cfg.group.order; ++j) {
      if (j > 0) os << " ";
      os << cfg.group.table[i * cfg.group.order + j];
    }
  }
  os << "\n";
  os << "identity = " << cfg.group.identity << "\n";
  if (cfg.group.inverse) {
    os << "inverse =";
    for (int v : *cfg.group.inverse) os << " " << v;
    os << "\n";
  }
  if (cfg.endo) {
    os << "\n[endo]\n";
    os << "map =";
    for (int v : cfg.endo->map) os << " " << v;
    os << "\n";
  }
  os << "\n[subsemigroup]\n";
  if (cfg.sub.mode == SubMode::reference) {
    os << "mode = reference\n";
    os << "generators =";
    for (const ReillyElement& g : cfg.sub.generators) {
      if (cfg.group.order == 1) {
        os << " (" << g.m << "," << g.n << ")";
      } else {
        os << " (" << g.m << "," << g.g << "," << g.n << ")";
      }
    }
    os << "\n";
  } else {
    os << "mode = abstract\n";
    os << "elements =";
    for (const AbstractElementSpec& e : cfg.sub.table.elements) {
      os << " " << e.label << ":(" << e.profile.r << "," << e.profile.l << ")";
    }
    os << "\n";
    for (const AbstractProductSpec& p : cfg.sub.table.products) {
      os << p.left << "*" << p.right << " = " << (p.overflow ? "OVERFLOW" : p.result) << "\n";
    }
  }
  os << "\n[run]\n";
  os << "window = " << cfg.window << "\n";
  if (cfg.targets) os << "targets = " << *cfg.targets << "\n";
  return os.str();
}

Problem build_problem(const ProblemConfig& cfg) {
  Problem problem;
  problem.window = cfg.window;
  problem.targets = cfg.effective_targets();

  const GroupTable group =
      validate_group(cfg.group.order, cfg.group.table, cfg.group.identity,
                     cfg.group.inverse ? std::optional<std::span<const int>>(*cfg.group.inverse)
                                       : std::nullopt);
  std::vector<int> identity_map(group.order);
  for (int i = 0; i < group.order; ++i) identity_map[i] = i;
  const Endomorphism endo =
      validate_endomorphism(group, cfg.endo ? cfg.endo->map : identity_map);

  // products chain at most a few elements deep in any sweep; 4N+8 iterate
  // maps cover every exponent the window arithmetic can produce
  problem.ambient =
      std::make_shared<const ReillyContext>(group, endo, 4 * cfg.window + 8);

  if (cfg.sub.mode == SubMode::reference) {
    problem.s = close_generators(cfg.sub.generators, problem.ambient, Window{cfg.window});
  } else {
    problem.s =
        load_abstract(cfg.sub.table.elements, cfg.sub.table.products, Window{cfg.window});
  }
  return problem;
}

const std::map<std::string, std::string>& demo_presets() {
  static const std::map<std::string, std::string> presets = {
      {"bicyclic-n0", R"(# S = {(0,n)} inside the bicyclic monoid: a straight left I-order.
[group]
order = 1
table = 0
identity = 0

[endo]
map = 0

[subsemigroup]
mode = reference
generators = (0,0) (0,1)

[run]
window = 20
targets = 10
)"},
      {"reilly-z2", R"(# S = R_0 (the top R-class) of the Reilly semigroup over Z2 with the identity map.
[group]
order = 2
table = 0 1; 1 0
identity = 0

[endo]
map = 0 1

[subsemigroup]
mode = reference
generators = (0,1,0) (0,0,1)

[run]
window = 12
targets = 6
)"},
      {"reilly-z4-doubling", R"(# S = R_0 of the Reilly semigroup over Z4 with the doubling endomorphism.
[group]
order = 4
table = 0 1 2 3; 1 2 3 0; 2 3 0 1; 3 0 1 2
identity = 0

[endo]
map = 0 2 0 2

[subsemigroup]
mode = reference
generators = (0,1,0) (0,0,1)

[run]
window = 8
targets = 4
)"},
      {"even-counterexample", R"(# The closure of (0,2): profiles stay even, so condition A and coverage fail.
[group]
order = 1
table = 0
identity = 0

[endo]
map = 0

[subsemigroup]
mode = reference
generators = (0,2)

[run]
window = 8
targets = 2
)"},
      {"rightzero-counterexample", R"(# Two-element right-zero semigroup: cancellation B(i) fails at (u, v, u).
[group]
order = 1
table = 0
identity = 0

[endo]
map = 0

[subsemigroup]
mode = abstract
elements = u:(0,0) v:(0,0)
u*u = u
u*v = v
v*u = u
v*v = v

[run]
window = 0
targets = 0
)"},
  };
  return presets;
}

}  // namespace iquot
