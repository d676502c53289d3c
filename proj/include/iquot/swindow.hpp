#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "iquot/reilly.hpp"

namespace iquot {

// Truncation bound: an element is in-window iff both profile indices are <= bound.
struct Window {
  int bound = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

// Image of an element under the homomorphism to the bicyclic monoid.
struct IndexProfile {
  int r = 0;
  int l = 0;

  friend auto operator<=>(const IndexProfile&, const IndexProfile&) = default;
};

inline IndexProfile profile_multiply(IndexProfile a, IndexProfile b) {
  const Bicyclic p = bicyclic_multiply({a.r, a.l}, {b.r, b.l});
  return {p.m, p.n};
}

enum class SubMode { reference, abstract_table };

// Marker for a product that leaves the window or is undeclared; condition
// checks treat both the same way.
inline constexpr int kNoProduct = -1;

struct SElement {
  std::string id;        // canonical label; the triple itself in reference mode
  IndexProfile profile;  // (r(a), l(a))
  ReillyElement underlying{};  // meaningful only in reference mode
};

// A window-bounded candidate subsemigroup: either a finitely generated
// subsemigroup of a reference Reilly semigroup, or an abstract finite partial
// semigroup carrying a declared homomorphism to the bicyclic monoid.
// Immutable once built; elements are kept in canonical order.
struct SubsemigroupWindow {
  SubMode mode = SubMode::reference;
  Window window;
  std::vector<SElement> elements;
  std::vector<int> product;     // size() x size(); element index or kNoProduct
  std::vector<int> generators;  // element indices (reference mode)
  std::shared_ptr<const ReillyContext> ambient;  // reference mode only

  int size() const { return static_cast<int>(elements.size()); }
  int product_at(int i, int j) const { return product[i * size() + j]; }
  const IndexProfile& profile(int i) const { return elements[i].profile; }
  int r_of(int i) const { return elements[i].profile.r; }
  int l_of(int i) const { return elements[i].profile.l; }
  bool in_window(IndexProfile p) const { return p.r <= window.bound && p.l <= window.bound; }

  // Pairs whose product leaves the window (or is undeclared), in index order.
  std::vector<std::pair<int, int>> overflow_pairs() const;

  // Reference mode: the true product of the underlying triples, which may lie
  // outside the window.
  ReillyElement ambient_product(int i, int j) const;

  int find_underlying(const ReillyElement& e) const;  // -1 if absent
  int find_id(const std::string& id) const;           // -1 if absent
};

// Smallest product-closed subset of the ambient semigroup containing the
// generators, intersected with the window; products leaving the window are
// recorded as overflow.
SubsemigroupWindow close_generators(const std::vector<ReillyElement>& generators,
                                    std::shared_ptr<const ReillyContext> ambient,
                                    Window window);

struct AbstractElementSpec {
  std::string label;
  IndexProfile profile;
};

struct AbstractProductSpec {
  std::string left;
  std::string right;
  std::string result;  // ignored when overflow is set
  bool overflow = false;

  friend bool operator==(const AbstractProductSpec&, const AbstractProductSpec&) = default;
};

// Validates an abstract partial semigroup: labels must be declared, profiles
// in-window, and the declared profiles must form a homomorphism on every
// defined product.
SubsemigroupWindow load_abstract(const std::vector<AbstractElementSpec>& elements,
                                 const std::vector<AbstractProductSpec>& products,
                                 Window window);

// { n <= window.bound : some element has l(a) = n }, ascending.
std::vector<int> l_class_coverage(const SubsemigroupWindow& s, Window window);

}  // namespace iquot
