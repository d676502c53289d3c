#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace iquot {

// A finite group given extensionally by its full multiplication table.
// Elements are the indices 0..order-1; element identity is index equality.
struct GroupTable {
  int order = 0;
  std::vector<int> table;    // row-major: table[i * order + j] = i * j
  int identity = 0;
  std::vector<int> inverse;  // inverse[i] * i == i * inverse[i] == identity

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  bool is_trivial() const { return order == 1; }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

// A self-map of a group respecting multiplication: map(xy) = map(x)map(y).
struct Endomorphism {
  std::vector<int> map;

  int apply(int g) const { return map[g]; }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

// Checks every group axiom exhaustively and returns the validated table.
// When `inverse` is absent the inverse array is derived from the table.
// Throws validation_error naming the first violated axiom and a witness.
GroupTable validate_group(int order, std::span<const int> table, int identity,
                          std::optional<std::span<const int>> inverse = std::nullopt);

// Checks the homomorphism law over all pairs; throws with the witnessing
// pair (x, y) on failure.
Endomorphism validate_endomorphism(const GroupTable& group, std::span<const int> map);

// theta applied t times to g, by plain iteration. t = 0 returns g unchanged.
int endo_power(const Endomorphism& theta, int t, int g);

// Iterates of an endomorphism precomputed as full maps theta^0..theta^max_t.
// apply() falls back to iteration past max_t, so the bound is a performance
// knob rather than a correctness limit.
class EndoPowers {
 public:
  EndoPowers(const GroupTable& group, const Endomorphism& theta, int max_t);

  int apply(int t, int g) const;

 private:
  std::vector<std::vector<int>> powers_;
  Endomorphism theta_;
};

}  // namespace iquot
