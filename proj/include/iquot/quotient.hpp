#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iquot/swindow.hpp"
#include "iquot/verdict.hpp"

namespace iquot {

// An ordered pair (a, b) of elements with r(a) = r(b), standing for the formal
// left fraction "invert(a) * b". Fields are indices into the subsemigroup.
struct FractionPair {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const FractionPair&, const FractionPair&) = default;
};

struct TildeResult {
  Status status = Status::pass;
  std::optional<std::pair<int, int>> witness;  // (x, y) element indices on pass
  std::string note;
};

// Decides whether two fraction pairs are equivalent: witnesses x, y must
// satisfy xa = yc, xb = yd with l(x) = r(a), l(y) = r(c), r(x) = r(y).
// fail means provably unrelated (l-profile mismatch) or, in reference mode,
// exhausted within the window; unknown means the search was blocked by
// undetermined products.
TildeResult tilde(FractionPair p1, FractionPair p2, const SubsemigroupWindow& s);

struct FractionClass {
  FractionPair representative;        // least member
  std::vector<FractionPair> members;  // sorted
  IndexProfile profile;               // (l(a), l(b)), shared by all members
};

// The set of equivalence classes of fraction pairs, with the induced partial
// multiplication. Built once from a subsemigroup window; read-only afterwards.
struct QuotientWindow {
  std::vector<FractionPair> pairs;   // all pairs with r(a) = r(b), sorted
  std::vector<FractionClass> classes;  // sorted by representative
  std::vector<std::int32_t> pair_class;  // pairs[k] -> class index
  std::vector<std::int32_t> product;     // class x class -> class or kNoProduct
  std::vector<std::int32_t> embedding;   // element -> class of (x, xa), or kNoProduct
  bool certified = true;  // false when unknown tilde edges were dropped

  int class_count() const { return static_cast<int>(classes.size()); }
  int pair_index(FractionPair p) const;       // -1 if absent
  int class_of(FractionPair p) const;         // -1 if absent
  int product_at(int q1, int q2) const { return product[q1 * class_count() + q2]; }
};

QuotientWindow build_quotient(const SubsemigroupWindow& s);

struct ClassProduct {
  int cls = kNoProduct;  // kNoProduct means the product left the window
  std::optional<std::pair<int, int>> witness;   // (x, y)
  std::optional<FractionPair> result_pair;      // (xa, yd)

  bool overflow() const { return cls == kNoProduct; }
};

// [a,b][c,d] = [xa, yd] for the first witness pair x, y with xb = yc and the
// prescribed profiles; overflow when no member/witness combination keeps the
// result inside the window.
ClassProduct multiply_classes(int q1, int q2, const QuotientWindow& qw,
                              const SubsemigroupWindow& s);

// [a,b] -> [b,a].
int invert_class(int q, const QuotientWindow& qw);

// a -> [x, xa] for the least x with l(x) = r(a); kNoProduct when no such x
// keeps xa inside the window.
int embed_element(int a, const QuotientWindow& qw, const SubsemigroupWindow& s);

// Classes q with q*q = q, ascending.
std::vector<int> idempotent_classes(const QuotientWindow& qw);

// Optional sampling mode for the associativity sweep on large windows.
struct SampleSpec {
  std::uint64_t seed = 0;
  std::int64_t triples = 0;  // 0 disables sampling
};

struct StructureReport {
  std::vector<std::pair<std::string, Verdict>> items;
  int class_count = 0;
  int idempotent_count = 0;
  bool certified = true;
  Status overall = Status::pass;
};

// Verifies the construction: equivalence behaviour of the pair relation,
// well-definedness of the multiplication across members and witnesses,
// associativity, regularity, the idempotent chain, bisimplicity, and that
// every class is a fraction of embedded elements.
StructureReport verify_quotient(const QuotientWindow& qw, const SubsemigroupWindow& s,
                                const SampleSpec& sample = {});

struct ComparisonReport {
  std::vector<std::pair<std::string, Verdict>> items;
  int mapped = 0;        // classes carried to ambient elements
  int target_count = 0;  // ambient elements with both indices <= window bound
  Status overall = Status::pass;
};

// Maps each class [a,b] to invert(a) * b in the ambient semigroup and checks
// the map is member-independent, injective, onto the ambient window, and
// multiplicative wherever both sides are defined. Reference mode only.
ComparisonReport compare_to_reference(const QuotientWindow& qw, const SubsemigroupWindow& s);

}  // namespace iquot
