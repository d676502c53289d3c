#include "iquot/quotient.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "internal.hpp"
#include "iquot/errors.hpp"
#include "iquot/parallel.hpp"

namespace iquot {

namespace {

using detail::LIndex;
using detail::ProductOracle;

std::string pair_id(const SubsemigroupWindow& s, FractionPair p) {
  return "(" + s.elements[p.a].id + "," + s.elements[p.b].id + ")";
}

std::string class_id(const SubsemigroupWindow& s, const QuotientWindow& qw, int q) {
  const FractionPair rep = qw.classes[q].representative;
  return "[" + s.elements[rep.a].id + "," + s.elements[rep.b].id + "]";
}

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Roots stay the least member, so class order follows pair order.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

TildeResult tilde_impl(FractionPair p1, FractionPair p2, const SubsemigroupWindow& s,
                       const LIndex& idx, const ProductOracle& oracle) {
  const int a = p1.a, b = p1.b, c = p2.a, d = p2.b;
  if (s.l_of(a) != s.l_of(c) || s.l_of(b) != s.l_of(d)) {
    return {Status::fail, std::nullopt, "profile mismatch"};
  }
  bool blocked = false;
  for (int x : idx.at(s.r_of(a))) {
    for (int y : idx.at(s.r_of(c))) {
      if (s.r_of(x) != s.r_of(y)) continue;
      if (!oracle.comparable(x, a) || !oracle.comparable(y, c) || !oracle.comparable(x, b) ||
          !oracle.comparable(y, d)) {
        blocked = true;
        continue;
      }
      if (oracle.products_equal(x, a, y, c) && oracle.products_equal(x, b, y, d)) {
        return {Status::pass, std::make_pair(x, y), ""};
      }
    }
  }
  if (blocked) {
    return {Status::unknown, std::nullopt, "witness search blocked by undetermined products"};
  }
  return {Status::fail, std::nullopt, "no witness within window"};
}

ClassProduct class_product_impl(int q1, int q2, const QuotientWindow& qw,
                                const SubsemigroupWindow& s, const LIndex& idx,
                                const ProductOracle& oracle) {
  for (const FractionPair& p1 : qw.classes[q1].members) {
    for (const FractionPair& p2 : qw.classes[q2].members) {
      const int a = p1.a, b = p1.b, c = p2.a, d = p2.b;
      const int m = std::max(s.l_of(b), s.l_of(c));
      const int lx = s.r_of(b) - s.l_of(b) + m;
      const int ly = s.r_of(c) - s.l_of(c) + m;
      for (int x : idx.at(lx)) {
        for (int y : idx.at(ly)) {
          if (s.r_of(x) != s.r_of(y)) continue;
          if (!oracle.comparable(x, b) || !oracle.comparable(y, c)) continue;
          if (!oracle.products_equal(x, b, y, c)) continue;
          const int xa = s.product_at(x, a);
          const int yd = s.product_at(y, d);
          if (xa == kNoProduct || yd == kNoProduct) continue;
          const FractionPair result{xa, yd};
          assert(s.r_of(xa) == s.r_of(yd));
          const int cls = qw.class_of(result);
          assert(cls >= 0);
          return {cls, std::make_pair(x, y), result};
        }
      }
    }
  }
  return {};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Status item_status(const SweepOutcome& out) {
  if (out.violations > 0) return Status::fail;
  if (out.checked == 0 && out.blocked > 0) return Status::unknown;
  return Status::pass;
}

void note_counts(Verdict& v, const SweepOutcome& out, const std::string& unit) {
  std::ostringstream os;
  os << out.checked << " " << unit << " checked";
  if (out.blocked > 0) os << ", " << out.blocked << " blocked by the window";
  if (out.violations > 0) os << ", " << out.violations << " violation(s)";
  if (v.limitation) os << "; " << *v.limitation;
  v.limitation = os.str();
}

}  // namespace

int QuotientWindow::pair_index(FractionPair p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || !(*it == p)) return -1;
  return static_cast<int>(it - pairs.begin());
}

int QuotientWindow::class_of(FractionPair p) const {
  const int k = pair_index(p);
  return k < 0 ? -1 : pair_class[k];
}

TildeResult tilde(FractionPair p1, FractionPair p2, const SubsemigroupWindow& s) {
  const LIndex idx(s);
  const ProductOracle oracle{s};
  return tilde_impl(p1, p2, s, idx, oracle);
}

QuotientWindow build_quotient(const SubsemigroupWindow& s) {
  QuotientWindow qw;
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (s.r_of(i) == s.r_of(j)) qw.pairs.push_back({i, j});
    }
  }

  const LIndex idx(s);
  const ProductOracle oracle{s};

  // Pairs can only be related when their l-profiles agree, so the witness
  // search runs inside profile groups.
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int k = 0; k < static_cast<int>(qw.pairs.size()); ++k) {
    const FractionPair p = qw.pairs[k];
    groups[{s.l_of(p.a), s.l_of(p.b)}].push_back(k);
  }

  DisjointSets dsu(static_cast<int>(qw.pairs.size()));
  for (const auto& [profile, members] : groups) {
    for (std::size_t u = 0; u < members.size(); ++u) {
      for (std::size_t v = u + 1; v < members.size(); ++v) {
        if (dsu.find(members[u]) == dsu.find(members[v])) continue;
        const TildeResult t =
            tilde_impl(qw.pairs[members[u]], qw.pairs[members[v]], s, idx, oracle);
        if (t.status == Status::pass) {
          dsu.unite(members[u], members[v]);
        } else if (t.status == Status::unknown) {
          qw.certified = false;  // dropped edge: partition may over-split
        }
      }
    }
  }

  std::map<int, std::vector<int>> by_root;
  for (int k = 0; k < static_cast<int>(qw.pairs.size()); ++k) by_root[dsu.find(k)].push_back(k);
  qw.pair_class.assign(qw.pairs.size(), -1);
  for (const auto& [root, member_idx] : by_root) {
    FractionClass c;
    for (int k : member_idx) c.members.push_back(qw.pairs[k]);
    c.representative = c.members.front();
    c.profile = {s.l_of(c.representative.a), s.l_of(c.representative.b)};
    const int cls = static_cast<int>(qw.classes.size());
    for (int k : member_idx) qw.pair_class[k] = cls;
    qw.classes.push_back(std::move(c));
  }

  const int k = qw.class_count();
  qw.product.assign(static_cast<std::size_t>(k) * k, kNoProduct);
  for (int q1 = 0; q1 < k; ++q1) {
    for (int q2 = 0; q2 < k; ++q2) {
      qw.product[q1 * k + q2] = class_product_impl(q1, q2, qw, s, idx, oracle).cls;
    }
  }

  qw.embedding.assign(s.size(), kNoProduct);
  for (int a = 0; a < s.size(); ++a) {
    for (int x : idx.at(s.r_of(a))) {
      const int xa = s.product_at(x, a);
      if (xa == kNoProduct) continue;
      qw.embedding[a] = qw.class_of({x, xa});
      break;
    }
  }
  return qw;
}

ClassProduct multiply_classes(int q1, int q2, const QuotientWindow& qw,
                              const SubsemigroupWindow& s) {
  const LIndex idx(s);
  const ProductOracle oracle{s};
  return class_product_impl(q1, q2, qw, s, idx, oracle);
}

int invert_class(int q, const QuotientWindow& qw) {
  const FractionPair rep = qw.classes[q].representative;
  const int cls = qw.class_of({rep.b, rep.a});
  assert(cls >= 0);
  return cls;
}

int embed_element(int a, const QuotientWindow& qw, const SubsemigroupWindow&) {
  return qw.embedding[a];
}

std::vector<int> idempotent_classes(const QuotientWindow& qw) {
  std::vector<int> out;
  for (int q = 0; q < qw.class_count(); ++q) {
    if (qw.product_at(q, q) == q) out.push_back(q);
  }
  return out;
}

StructureReport verify_quotient(const QuotientWindow& qw, const SubsemigroupWindow& s,
                                const SampleSpec& sample) {
  StructureReport report;
  report.class_count = qw.class_count();
  report.certified = qw.certified;

  const LIndex idx(s);
  const ProductOracle oracle{s};
  const int k = qw.class_count();

  // (1) the pair relation behaves as an equivalence within the window:
  // reflexive on every pair, a clique inside each class, and no witnessed
  // edge across classes.
  {
    Verdict v;
    SweepOutcome out;
    for (const FractionPair& p : qw.pairs) {
      const TildeResult t = tilde_impl(p, p, s, idx, oracle);
      if (t.status == Status::pass) {
        ++out.checked;
      } else if (t.status == Status::unknown) {
        ++out.blocked;
      } else {
        ++out.violations;
        if (v.counterexamples.empty()) {
          v.counterexamples.push_back({pair_id(s, p) + " not reflexively related", {}});
        }
      }
    }
    for (const FractionClass& c : qw.classes) {
      for (const FractionPair& p : c.members) {
        for (const FractionPair& q : c.members) {
          if (p == q) continue;
          const TildeResult t = tilde_impl(p, q, s, idx, oracle);
          if (t.status == Status::pass) {
            ++out.checked;
          } else if (t.status == Status::unknown) {
            ++out.blocked;
          } else {
            ++out.violations;
            if (v.counterexamples.empty()) {
              v.counterexamples.push_back(
                  {"class members " + pair_id(s, p) + ", " + pair_id(s, q) + " not related", {}});
            }
          }
        }
      }
    }
    // same-profile pairs in different classes must stay unrelated
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int p = 0; p < static_cast<int>(qw.pairs.size()); ++p) {
      groups[{s.l_of(qw.pairs[p].a), s.l_of(qw.pairs[p].b)}].push_back(p);
    }
    for (const auto& [profile, members] : groups) {
      for (std::size_t u = 0; u < members.size(); ++u) {
        for (std::size_t v2 = u + 1; v2 < members.size(); ++v2) {
          if (qw.pair_class[members[u]] == qw.pair_class[members[v2]]) continue;
          const TildeResult t =
              tilde_impl(qw.pairs[members[u]], qw.pairs[members[v2]], s, idx, oracle);
          if (t.status == Status::fail) {
            ++out.checked;
          } else if (t.status == Status::unknown) {
            ++out.blocked;
          } else {
            ++out.violations;
            if (v.counterexamples.empty()) {
              v.counterexamples.push_back({"witnessed edge across classes " +
                                               pair_id(s, qw.pairs[members[u]]) + ", " +
                                               pair_id(s, qw.pairs[members[v2]]),
                                           {}});
            }
          }
        }
      }
    }
    v.status = item_status(out);
    note_counts(v, out, "relation instances");
    report.items.emplace_back("equivalence", std::move(v));
  }

  // (2) well-definedness: the class product must not depend on the chosen
  // members or witnesses.
  {
    Verdict v;
    auto probe = [&](std::int64_t i) {
      const int q1 = static_cast<int>(i / k);
      const int q2 = static_cast<int>(i % k);
      const int expected = qw.product_at(q1, q2);
      bool any = false;
      bool blocked = false;
      for (const FractionPair& p1 : qw.classes[q1].members) {
        for (const FractionPair& p2 : qw.classes[q2].members) {
          const int a = p1.a, b = p1.b, c = p2.a, d = p2.b;
          const int m = std::max(s.l_of(b), s.l_of(c));
          const int lx = s.r_of(b) - s.l_of(b) + m;
          const int ly = s.r_of(c) - s.l_of(c) + m;
          for (int x : idx.at(lx)) {
            for (int y : idx.at(ly)) {
              if (s.r_of(x) != s.r_of(y)) continue;
              if (!oracle.comparable(x, b) || !oracle.comparable(y, c)) {
                blocked = true;
                continue;
              }
              if (!oracle.products_equal(x, b, y, c)) continue;
              const int xa = s.product_at(x, a);
              const int yd = s.product_at(y, d);
              if (xa == kNoProduct || yd == kNoProduct) {
                blocked = true;
                continue;
              }
              const int cls = qw.class_of({xa, yd});
              if (expected == kNoProduct || cls != expected) return SweepResult::violation;
              any = true;
            }
          }
        }
      }
      if (expected != kNoProduct && !any) return SweepResult::violation;
      if (any) return SweepResult::ok;
      return blocked ? SweepResult::blocked : SweepResult::skipped;
    };
    const SweepOutcome out = parallel_sweep(static_cast<std::int64_t>(k) * k, probe);
    v.status = item_status(out);
    if (out.first_violation >= 0) {
      const int q1 = static_cast<int>(out.first_violation / k);
      const int q2 = static_cast<int>(out.first_violation % k);
      v.counterexamples.push_back({"product " + class_id(s, qw, q1) + class_id(s, qw, q2) +
                                       " depends on the member or witness choice",
                                   {}});
    }
    note_counts(v, out, "class products");
    report.items.emplace_back("well-defined", std::move(v));
  }

  // (3) associativity over class triples whose double products stay in-window.
  {
    Verdict v;
    const std::int64_t total = static_cast<std::int64_t>(k) * k * k;
    const bool sampled = sample.triples > 0 && total > sample.triples;
    const std::int64_t n = sampled ? sample.triples : total;
    auto probe = [&](std::int64_t i) {
      std::int64_t t = sampled ? static_cast<std::int64_t>(
                                     splitmix64(sample.seed ^ static_cast<std::uint64_t>(i)) %
                                     static_cast<std::uint64_t>(total))
                               : i;
      const int q1 = static_cast<int>(t / (static_cast<std::int64_t>(k) * k));
      const int q2 = static_cast<int>((t / k) % k);
      const int q3 = static_cast<int>(t % k);
      const int left1 = qw.product_at(q1, q2);
      if (left1 == kNoProduct) return SweepResult::blocked;
      const int left2 = qw.product_at(left1, q3);
      if (left2 == kNoProduct) return SweepResult::blocked;
      const int right1 = qw.product_at(q2, q3);
      if (right1 == kNoProduct) return SweepResult::blocked;
      const int right2 = qw.product_at(q1, right1);
      if (right2 == kNoProduct) return SweepResult::blocked;
      return left2 == right2 ? SweepResult::ok : SweepResult::violation;
    };
    const SweepOutcome out = parallel_sweep(n, probe);
    v.status = item_status(out);
    if (out.first_violation >= 0) {
      std::int64_t t = sampled
                           ? static_cast<std::int64_t>(
                                 splitmix64(sample.seed ^
                                            static_cast<std::uint64_t>(out.first_violation)) %
                                 static_cast<std::uint64_t>(total))
                           : out.first_violation;
      const int q1 = static_cast<int>(t / (static_cast<std::int64_t>(k) * k));
      const int q2 = static_cast<int>((t / k) % k);
      const int q3 = static_cast<int>(t % k);
      v.counterexamples.push_back({"triple " + class_id(s, qw, q1) + class_id(s, qw, q2) +
                                       class_id(s, qw, q3) + " does not associate",
                                   {}});
    }
    note_counts(v, out, "triples");
    if (sampled) {
      v.limitation = *v.limitation + "; sampled " + std::to_string(n) + " of " +
                     std::to_string(total) + " triples (seed " + std::to_string(sample.seed) + ")";
    }
    report.items.emplace_back("associativity", std::move(v));
  }

  // (4) regularity: q [b,a] q = q via the reversed pair.
  {
    Verdict v;
    SweepOutcome out;
    for (int q = 0; q < k; ++q) {
      const int qi = invert_class(q, qw);
      const int p1 = qw.product_at(q, qi);
      if (p1 == kNoProduct) {
        ++out.blocked;
        continue;
      }
      const int p2 = qw.product_at(p1, q);
      if (p2 == kNoProduct) {
        ++out.blocked;
        continue;
      }
      if (p2 == q) {
        ++out.checked;
      } else {
        ++out.violations;
        if (v.counterexamples.empty()) {
          v.counterexamples.push_back({class_id(s, qw, q) + " is not regular", {}});
        }
      }
    }
    v.status = item_status(out);
    note_counts(v, out, "classes");
    report.items.emplace_back("regularity", std::move(v));
  }

  // (5) idempotents: exactly the diagonal classes, commuting, totally ordered
  // by l-profile in agreement with the idempotent order.
  const std::vector<int> idem = idempotent_classes(qw);
  report.idempotent_count = static_cast<int>(idem.size());
  {
    Verdict v;
    SweepOutcome out;
    std::set<int> diagonal;
    for (int a = 0; a < s.size(); ++a) {
      const int cls = qw.class_of({a, a});
      if (cls >= 0) diagonal.insert(cls);
    }
    if (!std::equal(idem.begin(), idem.end(), diagonal.begin(), diagonal.end()) ||
        idem.size() != diagonal.size()) {
      ++out.violations;
      v.counterexamples.push_back(
          {"idempotent classes do not coincide with the diagonal classes", {}});
    }
    for (int e : idem) {
      for (int f : idem) {
        const int ef = qw.product_at(e, f);
        const int fe = qw.product_at(f, e);
        if (ef == kNoProduct || fe == kNoProduct) {
          ++out.blocked;
          continue;
        }
        const int le = qw.classes[e].profile.l;
        const int lf = qw.classes[f].profile.l;
        const int expected = idempotent_leq(le, lf) ? e : f;
        if (ef != fe || (ef != e && ef != f) || ef != expected) {
          ++out.violations;
          if (v.counterexamples.empty()) {
            v.counterexamples.push_back({"idempotent pair " + class_id(s, qw, e) + ", " +
                                             class_id(s, qw, f) + " breaks the chain order",
                                         {}});
          }
          continue;
        }
        ++out.checked;
      }
    }
    v.status = item_status(out);
    note_counts(v, out, "idempotent pairs");
    report.items.emplace_back("idempotent-chain", std::move(v));
  }

  // (6) bisimplicity: for idempotents e, f find q with q q^-1 = e, q^-1 q = f,
  // built from a pair (c, d) with r(c) = r(d) and the idempotents' l-profiles.
  {
    Verdict v;
    SweepOutcome out;
    for (int e : idem) {
      for (int f : idem) {
        const int la = qw.classes[e].profile.l;
        const int lb = qw.classes[f].profile.l;
        bool verified = false;
        bool blocked = false;
        std::optional<std::string> mismatch;
        for (int c : idx.at(la)) {
          if (verified) break;
          for (int d : idx.at(lb)) {
            if (s.r_of(c) != s.r_of(d)) continue;
            const int q = qw.class_of({c, d});
            const int qi = invert_class(q, qw);
            const int p1 = qw.product_at(q, qi);
            const int p2 = qw.product_at(qi, q);
            if (p1 == kNoProduct || p2 == kNoProduct) {
              blocked = true;
              continue;
            }
            if (p1 == e && p2 == f) {
              v.witnesses.push_back({"(" + class_id(s, qw, e) + "," + class_id(s, qw, f) + ")",
                                     {s.elements[c].id, s.elements[d].id}});
              verified = true;
              break;
            }
            // distinguish a window-split class with the right profile from
            // a genuinely wrong product
            if (qw.classes[p1].profile == qw.classes[e].profile &&
                qw.classes[p2].profile == qw.classes[f].profile) {
              blocked = true;
            } else {
              mismatch = class_id(s, qw, q) + " links " + class_id(s, qw, p1) + " to " +
                         class_id(s, qw, p2) + " instead of " + class_id(s, qw, e) + ", " +
                         class_id(s, qw, f);
            }
          }
        }
        if (verified) {
          ++out.checked;
        } else if (blocked || !mismatch) {
          ++out.blocked;
        } else {
          ++out.violations;
          if (v.counterexamples.empty()) v.counterexamples.push_back({*mismatch, {}});
        }
      }
    }
    v.status = item_status(out);
    note_counts(v, out, "idempotent pairs");
    report.items.emplace_back("bisimplicity", std::move(v));
  }

  // (7) every class is a fraction of embedded elements: [a,b] = (a e)^-1 (b e).
  {
    Verdict v;
    SweepOutcome out;
    for (int q = 0; q < k; ++q) {
      const FractionPair rep = qw.classes[q].representative;
      const int ea = qw.embedding[rep.a];
      const int eb = qw.embedding[rep.b];
      if (ea == kNoProduct || eb == kNoProduct) {
        ++out.blocked;
        continue;
      }
      const int p = qw.product_at(invert_class(ea, qw), eb);
      if (p == kNoProduct) {
        ++out.blocked;
        continue;
      }
      if (p == q) {
        ++out.checked;
        v.witnesses.push_back(
            {class_id(s, qw, q), {s.elements[rep.a].id, s.elements[rep.b].id}});
      } else {
        ++out.violations;
        if (v.counterexamples.empty()) {
          v.counterexamples.push_back(
              {class_id(s, qw, q) + " is not the fraction of its embedded parts", {}});
        }
      }
    }
    v.status = item_status(out);
    note_counts(v, out, "classes");
    report.items.emplace_back("left-i-quotient", std::move(v));
  }

  for (const auto& [name, verdict] : report.items) {
    report.overall = worse(report.overall, verdict.status);
  }
  return report;
}

ComparisonReport compare_to_reference(const QuotientWindow& qw, const SubsemigroupWindow& s) {
  if (s.mode != SubMode::reference) {
    throw validation_error("comparison requires a reference-mode subsemigroup");
  }
  const ReillyContext& ctx = *s.ambient;
  ComparisonReport report;
  report.mapped = qw.class_count();
  report.target_count = qw.class_count() == 0
                            ? 0
                            : (s.window.bound + 1) * (s.window.bound + 1) * ctx.group.order;

  auto fraction_value = [&](FractionPair p) {
    return multiply(ctx, invert(ctx, s.elements[p.a].underlying), s.elements[p.b].underlying);
  };

  std::vector<ReillyElement> value(qw.class_count());
  Verdict well_defined;
  Verdict injective;
  for (int q = 0; q < qw.class_count(); ++q) {
    value[q] = fraction_value(qw.classes[q].representative);
    for (const FractionPair& p : qw.classes[q].members) {
      if (!(fraction_value(p) == value[q]) && !well_defined.failed()) {
        well_defined.status = Status::fail;
        well_defined.counterexamples.push_back(
            {class_id(s, qw, q) + " member " + pair_id(s, p) + " maps elsewhere", {}});
      }
    }
  }
  std::map<ReillyElement, int> image;
  for (int q = 0; q < qw.class_count(); ++q) {
    auto [it, inserted] = image.emplace(value[q], q);
    if (!inserted && !injective.failed()) {
      injective.status = Status::fail;
      injective.counterexamples.push_back({class_id(s, qw, it->second) + " and " +
                                               class_id(s, qw, q) + " map to " +
                                               element_id(ctx, value[q]),
                                           {}});
    }
  }

  Verdict surjective;
  if (qw.class_count() == 0) {
    surjective.limitation = "empty quotient: no targets";
  } else {
    int missing = 0;
    for (int m = 0; m <= s.window.bound; ++m) {
      for (int g = 0; g < ctx.group.order; ++g) {
        for (int n = 0; n <= s.window.bound; ++n) {
          const ReillyElement target{m, g, n};
          if (!image.contains(target)) {
            ++missing;
            if (surjective.counterexamples.empty()) {
              surjective.counterexamples.push_back({element_id(ctx, target), {}});
            }
          }
        }
      }
    }
    if (missing > 0) {
      surjective.status = Status::fail;
      surjective.limitation = std::to_string(missing) + " ambient target(s) not reached";
    }
  }

  Verdict multiplicative;
  {
    SweepOutcome out;
    const int k = qw.class_count();
    for (int q1 = 0; q1 < k; ++q1) {
      for (int q2 = 0; q2 < k; ++q2) {
        const int p = qw.product_at(q1, q2);
        if (p == kNoProduct) {
          ++out.blocked;
          continue;
        }
        if (multiply(ctx, value[q1], value[q2]) == value[p]) {
          ++out.checked;
        } else {
          ++out.violations;
          if (multiplicative.counterexamples.empty()) {
            multiplicative.counterexamples.push_back(
                {class_id(s, qw, q1) + class_id(s, qw, q2) + " does not map to the product", {}});
          }
        }
      }
    }
    multiplicative.status = item_status(out);
    note_counts(multiplicative, out, "class products");
  }

  report.items.emplace_back("well-defined", std::move(well_defined));
  report.items.emplace_back("injective", std::move(injective));
  report.items.emplace_back("surjective", std::move(surjective));
  report.items.emplace_back("multiplicative", std::move(multiplicative));
  for (const auto& [name, verdict] : report.items) {
    report.overall = worse(report.overall, verdict.status);
  }
  return report;
}

}  // namespace iquot
