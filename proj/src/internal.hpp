#pragma once

// Shared search helpers for the verifier and the quotient builder.

#include <map>
#include <vector>

#include "iquot/swindow.hpp"

namespace iquot::detail {

// Element indices grouped by l-profile, ascending within each group.
class LIndex {
 public:
  explicit LIndex(const SubsemigroupWindow& s) {
    for (int i = 0; i < s.size(); ++i) by_l_[s.l_of(i)].push_back(i);
  }

  const std::vector<int>& at(int l) const {
    auto it = by_l_.find(l);
    return it == by_l_.end() ? empty_ : it->second;
  }

 private:
  std::map<int, std::vector<int>> by_l_;
  inline static const std::vector<int> empty_{};
};

// Answers product questions uniformly across the two modes. In reference mode
// every product is determined (the ambient value is computable even when it
// leaves the window); in abstract mode only declared entries are.
struct ProductOracle {
  const SubsemigroupWindow& s;

  bool reference() const { return s.mode == SubMode::reference; }

  bool comparable(int i, int j) const {
    return reference() || s.product_at(i, j) != kNoProduct;
  }

  // (i*j) == (k*l); both products must be comparable.
  bool products_equal(int i, int j, int k, int l) const {
    if (reference()) return s.ambient_product(i, j) == s.ambient_product(k, l);
    return s.product_at(i, j) == s.product_at(k, l);
  }
};

}  // namespace iquot::detail
