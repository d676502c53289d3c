#pragma once

// Exhaustive property sweeps over reference-mode windows, shared by the unit
// and acceptance suites. Products are evaluated in the ambient semigroup, so
// tuples qualify even when intermediate values leave the window.

#include <vector>

#include "iquot/swindow.hpp"

namespace testsupport {

struct SweepCounts {
  long long qualifying = 0;
  long long violations = 0;
};

// Whenever x1, x2 tie (a1, b1) to (a2, b2) and w1 a1 = w2 a2 with
// r(w1) = r(w2), the b-products must agree as well: w1 b1 = w2 b2.
inline SweepCounts witness_transfer_sweep(const iquot::SubsemigroupWindow& s) {
  const int n = s.size();
  std::vector<iquot::ReillyElement> prod(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) prod[i * n + j] = s.ambient_product(i, j);
  }
  auto at = [&](int i, int j) -> const iquot::ReillyElement& { return prod[i * n + j]; };

  SweepCounts counts;
  for (int a1 = 0; a1 < n; ++a1) {
    for (int b1 = 0; b1 < n; ++b1) {
      if (s.r_of(b1) != s.r_of(a1)) continue;
      for (int x1 = 0; x1 < n; ++x1) {
        if (s.l_of(x1) != s.r_of(a1)) continue;
        const iquot::ReillyElement x1a1 = at(x1, a1);
        const iquot::ReillyElement x1b1 = at(x1, b1);
        for (int x2 = 0; x2 < n; ++x2) {
          if (s.r_of(x2) != s.r_of(x1)) continue;
          for (int a2 = 0; a2 < n; ++a2) {
            if (s.r_of(a2) != s.l_of(x2) || !(at(x2, a2) == x1a1)) continue;
            for (int b2 = 0; b2 < n; ++b2) {
              if (s.r_of(b2) != s.r_of(a2) || !(at(x2, b2) == x1b1)) continue;
              for (int w1 = 0; w1 < n; ++w1) {
                const iquot::ReillyElement w1a1 = at(w1, a1);
                const iquot::ReillyElement w1b1 = at(w1, b1);
                for (int w2 = 0; w2 < n; ++w2) {
                  if (s.r_of(w2) != s.r_of(w1) || !(at(w2, a2) == w1a1)) continue;
                  ++counts.qualifying;
                  if (!(w1b1 == at(w2, b2))) ++counts.violations;
                }
              }
            }
          }
        }
      }
    }
  }
  return counts;
}

// If abc = dec with l(b) >= r(c) and l(e) >= r(c), the common right factor
// cancels: ab = de.
inline SweepCounts right_factor_cancellation_sweep(const iquot::SubsemigroupWindow& s) {
  const iquot::ReillyContext& ctx = *s.ambient;
  const int n = s.size();
  std::vector<iquot::ReillyElement> prod(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) prod[i * n + j] = s.ambient_product(i, j);
  }

  SweepCounts counts;
  for (int c = 0; c < n; ++c) {
    const iquot::ReillyElement ce = s.elements[c].underlying;
    std::vector<std::pair<iquot::ReillyElement, iquot::ReillyElement>> with_c;  // (ab, abc)
    with_c.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const iquot::ReillyElement ab = prod[a * n + b];
        if (s.l_of(b) >= s.r_of(c)) {
          with_c.emplace_back(ab, multiply(ctx, ab, ce));
        } else {
          with_c.emplace_back(ab, iquot::ReillyElement{-1, -1, -1});
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (s.l_of(b) < s.r_of(c)) continue;
        const auto& [ab, abc] = with_c[a * n + b];
        for (int d = 0; d < n; ++d) {
          for (int e = 0; e < n; ++e) {
            if (s.l_of(e) < s.r_of(c)) continue;
            const auto& [de, dec] = with_c[d * n + e];
            if (!(dec == abc)) continue;
            ++counts.qualifying;
            if (!(ab == de)) ++counts.violations;
          }
        }
      }
    }
  }
  return counts;
}

}  // namespace testsupport
