#include "iquot/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "internal.hpp"
#include "iquot/errors.hpp"

namespace iquot {

namespace {

std::string pair_str(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

std::string id_of(const SubsemigroupWindow& s, int i) { return s.elements[i].id; }

std::string pair_str_ids(const SubsemigroupWindow& s, int i, int j) {
  return "(" + id_of(s, i) + "," + id_of(s, j) + ")";
}

// Profiles of in-window elements plus, when `with_frontier`, the profiles of
// one-step overflow products. The frontier entries are flagged so callers can
// tell a window-certain answer from one that leans on hidden elements.
std::vector<std::pair<IndexProfile, bool>> profile_pool(const SubsemigroupWindow& s,
                                                        bool with_frontier) {
  std::set<IndexProfile> in_window;
  for (const SElement& e : s.elements) in_window.insert(e.profile);
  std::set<IndexProfile> frontier;
  if (with_frontier) {
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        if (s.product_at(i, j) != kNoProduct) continue;
        const IndexProfile p = profile_multiply(s.profile(i), s.profile(j));
        if (!in_window.contains(p)) frontier.insert(p);
      }
    }
  }
  std::vector<std::pair<IndexProfile, bool>> pool;
  for (const IndexProfile& p : in_window) pool.emplace_back(p, false);
  for (const IndexProfile& p : frontier) pool.emplace_back(p, true);
  return pool;
}

Bicyclic quotient_target(IndexProfile a, IndexProfile b) {
  const int t = std::max(a.r, b.r);
  return {a.l - a.r + t, b.l - b.r + t};
}

}  // namespace

Verdict check_condition_a(const SubsemigroupWindow& s, int targets) {
  Verdict v;
  // First witness per reachable target, scanning element pairs in canonical order.
  std::map<std::pair<int, int>, std::pair<int, int>> witness_for;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      const Bicyclic q = quotient_target(s.profile(a), s.profile(b));
      if (q.m > targets || q.n > targets) continue;
      witness_for.try_emplace({q.m, q.n}, a, b);
    }
  }
  // Targets with no in-window witness may still be reachable through profiles
  // of products that left the window.
  std::set<std::pair<int, int>> hidden;
  const auto pool = profile_pool(s, true);
  for (const auto& [pa, fa] : pool) {
    for (const auto& [pb, fb] : pool) {
      if (!fa && !fb) continue;
      const Bicyclic q = quotient_target(pa, pb);
      if (q.m <= targets && q.n <= targets) hidden.insert({q.m, q.n});
    }
  }

  int unknown_targets = 0;
  for (int i = 0; i <= targets; ++i) {
    for (int j = 0; j <= targets; ++j) {
      auto it = witness_for.find({i, j});
      if (it != witness_for.end()) {
        v.witnesses.push_back(
            {pair_str(i, j), {id_of(s, it->second.first), id_of(s, it->second.second)}});
      } else if (hidden.contains({i, j})) {
        ++unknown_targets;
      } else {
        v.counterexamples.push_back({pair_str(i, j), {}});
      }
    }
  }
  if (!v.counterexamples.empty()) {
    v.status = Status::fail;
    v.limitation = "targets listed have no witness over the window or one-step overflow profiles";
  } else if (unknown_targets > 0) {
    v.status = Status::unknown;
    v.limitation = std::to_string(unknown_targets) +
                   " target(s) reachable only through products beyond the window";
  }
  return v;
}

Verdict check_condition_b(const SubsemigroupWindow& s, BSide side) {
  Verdict v;
  detail::ProductOracle oracle{s};
  long blocked = 0;
  for (int x = 0; x < s.size() && !v.failed(); ++x) {
    for (int y = x + 1; y < s.size() && !v.failed(); ++y) {
      for (int a = 0; a < s.size(); ++a) {
        bool relevant, comparable, equal;
        if (side == BSide::i) {
          relevant = s.l_of(x) >= s.r_of(a) && s.l_of(y) >= s.r_of(a);
          if (!relevant) continue;
          comparable = oracle.comparable(x, a) && oracle.comparable(y, a);
          equal = comparable && oracle.products_equal(x, a, y, a);
        } else {
          relevant = s.r_of(x) >= s.l_of(a) && s.r_of(y) >= s.l_of(a);
          if (!relevant) continue;
          comparable = oracle.comparable(a, x) && oracle.comparable(a, y);
          equal = comparable && oracle.products_equal(a, x, a, y);
        }
        if (!comparable) {
          ++blocked;
          continue;
        }
        if (equal) {
          v.status = Status::fail;
          v.counterexamples.push_back({"", {id_of(s, x), id_of(s, y), id_of(s, a)}});
          break;
        }
      }
    }
  }
  if (!v.failed() && blocked > 0) {
    v.status = Status::unknown;
    v.limitation =
        std::to_string(blocked) + " relevant triple(s) have undetermined products";
  }
  return v;
}

Verdict check_condition_c(const SubsemigroupWindow& s) {
  Verdict v;
  detail::LIndex by_l(s);
  detail::ProductOracle oracle{s};
  int unknown_pairs = 0;
  for (int b = 0; b < s.size(); ++b) {
    for (int c = 0; c < s.size(); ++c) {
      const int m = std::max(s.l_of(b), s.l_of(c));
      const int lx = s.r_of(b) - s.l_of(b) + m;
      const int ly = s.r_of(c) - s.l_of(c) + m;
      bool found = false;
      bool blocked = false;
      for (int x : by_l.at(lx)) {
        for (int y : by_l.at(ly)) {
          if (s.r_of(x) != s.r_of(y)) continue;
          if (!oracle.comparable(x, b) || !oracle.comparable(y, c)) {
            blocked = true;
            continue;
          }
          if (oracle.products_equal(x, b, y, c)) {
            v.witnesses.push_back(
                {pair_str_ids(s, b, c), {id_of(s, x), id_of(s, y)}});
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) continue;
      if (blocked) {
        ++unknown_pairs;
      } else {
        v.counterexamples.push_back({pair_str_ids(s, b, c), {}});
      }
    }
  }
  if (!v.counterexamples.empty()) {
    v.status = Status::fail;
    v.limitation = "no witness within the window; the existential ranges over all of S";
  } else if (unknown_pairs > 0) {
    v.status = Status::unknown;
    v.limitation = std::to_string(unknown_pairs) + " pair(s) blocked by undetermined products";
  }
  return v;
}

Verdict check_straightness(const SubsemigroupWindow& s, int targets) {
  if (s.mode != SubMode::reference) {
    throw validation_error("straightness check requires a reference-mode subsemigroup");
  }
  const ReillyContext& ctx = *s.ambient;
  Verdict v;

  std::map<ReillyElement, std::pair<int, int>> witness_for;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (s.r_of(a) != s.r_of(b)) continue;
      const ReillyElement q =
          multiply(ctx, invert(ctx, s.elements[a].underlying), s.elements[b].underlying);
      if (q.m > targets || q.n > targets) continue;
      witness_for.try_emplace(q, a, b);
    }
  }

  // Decompositions that need one factor from just beyond the window.
  std::set<ReillyElement> hidden;
  {
    std::vector<ReillyElement> frontier;
    std::set<ReillyElement> seen;
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        if (s.product_at(i, j) != kNoProduct) continue;
        const ReillyElement p = s.ambient_product(i, j);
        if (seen.insert(p).second) frontier.push_back(p);
      }
    }
    std::vector<std::pair<ReillyElement, bool>> pool;
    for (const SElement& e : s.elements) pool.emplace_back(e.underlying, false);
    for (const ReillyElement& e : frontier) pool.emplace_back(e, true);
    for (const auto& [ea, fa] : pool) {
      for (const auto& [eb, fb] : pool) {
        if (!fa && !fb) continue;
        if (ea.m != eb.m) continue;
        const ReillyElement q = multiply(ctx, invert(ctx, ea), eb);
        if (q.m <= targets && q.n <= targets) hidden.insert(q);
      }
    }
  }

  int unknown_targets = 0;
  for (int m = 0; m <= targets; ++m) {
    for (int g = 0; g < ctx.group.order; ++g) {
      for (int n = 0; n <= targets; ++n) {
        const ReillyElement q{m, g, n};
        auto it = witness_for.find(q);
        if (it != witness_for.end()) {
          v.witnesses.push_back(
              {element_id(ctx, q), {id_of(s, it->second.first), id_of(s, it->second.second)}});
        } else if (hidden.contains(q)) {
          ++unknown_targets;
        } else {
          v.counterexamples.push_back({element_id(ctx, q), {}});
        }
      }
    }
  }
  if (!v.counterexamples.empty()) {
    v.status = Status::fail;
    v.limitation = "targets listed have no straight decomposition within the window";
  } else if (unknown_targets > 0) {
    v.status = Status::unknown;
    v.limitation = std::to_string(unknown_targets) +
                   " target(s) decomposable only through elements beyond the window";
  }
  return v;
}

Verdict coverage_verdict(const SubsemigroupWindow& s, int targets) {
  Verdict v;
  const std::vector<int> covered = l_class_coverage(s, s.window);
  std::set<int> covered_set(covered.begin(), covered.end());
  for (int n : covered) {
    for (int i = 0; i < s.size(); ++i) {
      if (s.l_of(i) == n) {
        v.witnesses.push_back({std::to_string(n), {id_of(s, i)}});
        break;
      }
    }
  }
  for (int n = 0; n <= targets; ++n) {
    if (!covered_set.contains(n)) v.counterexamples.push_back({std::to_string(n), {}});
  }
  if (!v.counterexamples.empty()) {
    v.status = Status::fail;
    v.limitation = "L-classes listed are not met within the window";
  }
  return v;
}

ConditionReport condition_report(const SubsemigroupWindow& s, int targets,
                                 CheckSelection selection) {
  ConditionReport report;
  report.window = s.window.bound;
  report.targets = targets;
  if (selection.a) report.checks.emplace_back("A", check_condition_a(s, targets));
  if (selection.b) {
    report.checks.emplace_back("B(i)", check_condition_b(s, BSide::i));
    report.checks.emplace_back("B(ii)", check_condition_b(s, BSide::ii));
  }
  if (selection.c) report.checks.emplace_back("C", check_condition_c(s));
  if (selection.straight && s.mode == SubMode::reference) {
    report.checks.emplace_back("straight", check_straightness(s, targets));
  }
  if (selection.lclass) report.checks.emplace_back("lclass", coverage_verdict(s, targets));
  for (const auto& [name, verdict] : report.checks) {
    report.overall = worse(report.overall, verdict.status);
  }
  return report;
}

}  // namespace iquot
