#pragma once

// Shared fixtures for the test suites: demo groups and windows.

#include <memory>
#include <numeric>
#include <vector>

#include "iquot/config.hpp"
#include "iquot/group.hpp"
#include "iquot/reilly.hpp"
#include "iquot/swindow.hpp"

namespace testsupport {

// Additive cyclic group of order n as a Cayley table.
inline iquot::GroupTable cyclic_group(int n) {
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  return iquot::validate_group(n, table, 0);
}

inline iquot::Endomorphism identity_endo(const iquot::GroupTable& g) {
  std::vector<int> map(g.order);
  std::iota(map.begin(), map.end(), 0);
  return iquot::validate_endomorphism(g, map);
}

inline std::shared_ptr<const iquot::ReillyContext> trivial_context(int max_exp = 64) {
  const iquot::GroupTable g = cyclic_group(1);
  return std::make_shared<const iquot::ReillyContext>(g, identity_endo(g), max_exp);
}

inline std::shared_ptr<const iquot::ReillyContext> z2_context(int max_exp = 64) {
  const iquot::GroupTable g = cyclic_group(2);
  return std::make_shared<const iquot::ReillyContext>(g, identity_endo(g), max_exp);
}

// Z4 with the doubling endomorphism g -> 2g.
inline std::shared_ptr<const iquot::ReillyContext> z4_doubling_context(int max_exp = 64) {
  const iquot::GroupTable g = cyclic_group(4);
  const iquot::Endomorphism theta = iquot::validate_endomorphism(g, std::vector<int>{0, 2, 0, 2});
  return std::make_shared<const iquot::ReillyContext>(g, theta, max_exp);
}

// S = {(0,n) : n <= bound} in the bicyclic monoid.
inline iquot::SubsemigroupWindow bicyclic_demo(int bound) {
  return iquot::close_generators({{0, 0, 0}, {0, 0, 1}}, trivial_context(4 * bound + 8),
                                 iquot::Window{bound});
}

// S = the full top R-class window of the Reilly semigroup over Z2.
inline iquot::SubsemigroupWindow z2_demo(int bound) {
  return iquot::close_generators({{0, 1, 0}, {0, 0, 1}}, z2_context(4 * bound + 8),
                                 iquot::Window{bound});
}

inline iquot::SubsemigroupWindow z4_demo(int bound) {
  return iquot::close_generators({{0, 1, 0}, {0, 0, 1}}, z4_doubling_context(4 * bound + 8),
                                 iquot::Window{bound});
}

// The closure of (0,2): every profile stays even.
inline iquot::SubsemigroupWindow even_demo(int bound) {
  return iquot::close_generators({{0, 0, 2}}, trivial_context(4 * bound + 8),
                                 iquot::Window{bound});
}

// Two-element right-zero semigroup with constant profiles.
inline iquot::SubsemigroupWindow rightzero_demo() {
  return iquot::load_abstract(
      {{"u", {0, 0}}, {"v", {0, 0}}},
      {{"u", "u", "u", false}, {"u", "v", "v", false}, {"v", "u", "u", false},
       {"v", "v", "v", false}},
      iquot::Window{0});
}

}  // namespace testsupport
