#include "iquot/group.hpp"

#include <sstream>

#include "iquot/errors.hpp"

namespace iquot {

namespace {

std::string tuple2(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

GroupTable validate_group(int order, std::span<const int> table, int identity,
                          std::optional<std::span<const int>> inverse) {
  if (order <= 0) throw validation_error("group order must be positive");
  if (static_cast<int>(table.size()) != order * order) {
    throw validation_error("multiplication table must have " + std::to_string(order * order) +
                           " entries, got " + std::to_string(table.size()));
  }
  if (identity < 0 || identity >= order) {
    throw validation_error("identity index " + std::to_string(identity) + " out of range");
  }
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const int v = table[i * order + j];
      if (v < 0 || v >= order) {
        throw validation_error("table entry out of range at " + tuple2(i, j));
      }
    }
  }

  GroupTable g;
  g.order = order;
  g.table.assign(table.begin(), table.end());
  g.identity = identity;

  for (int x = 0; x < order; ++x) {
    if (g.mul(identity, x) != x || g.mul(x, identity) != x) {
      throw validation_error("identity axiom violated at x=" + std::to_string(x));
    }
  }
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      for (int k = 0; k < order; ++k) {
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) {
          throw validation_error("associativity violated at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }

  if (inverse.has_value()) {
    if (static_cast<int>(inverse->size()) != order) {
      throw validation_error("inverse array must have " + std::to_string(order) + " entries");
    }
    g.inverse.assign(inverse->begin(), inverse->end());
    for (int x = 0; x < order; ++x) {
      const int y = g.inverse[x];
      if (y < 0 || y >= order) {
        throw validation_error("inverse entry out of range at x=" + std::to_string(x));
      }
      if (g.mul(x, y) != identity || g.mul(y, x) != identity) {
        throw validation_error("inverse axiom violated at x=" + std::to_string(x));
      }
    }
  } else {
    g.inverse.assign(order, -1);
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) {
        if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
          g.inverse[x] = y;
          break;
        }
      }
      if (g.inverse[x] < 0) {
        throw validation_error("inverse axiom violated at x=" + std::to_string(x) +
                               ": no two-sided inverse exists");
      }
    }
  }
  return g;
}

Endomorphism validate_endomorphism(const GroupTable& group, std::span<const int> map) {
  if (static_cast<int>(map.size()) != group.order) {
    throw validation_error("endomorphism map must have " + std::to_string(group.order) +
                           " entries, got " + std::to_string(map.size()));
  }
  for (int g = 0; g < group.order; ++g) {
    if (map[g] < 0 || map[g] >= group.order) {
      throw validation_error("endomorphism image out of range at g=" + std::to_string(g));
    }
  }
  for (int x = 0; x < group.order; ++x) {
    for (int y = 0; y < group.order; ++y) {
      if (map[group.mul(x, y)] != group.mul(map[x], map[y])) {
        throw validation_error("homomorphism law violated at " + tuple2(x, y));
      }
    }
  }
  Endomorphism e;
  e.map.assign(map.begin(), map.end());
  return e;
}

int endo_power(const Endomorphism& theta, int t, int g) {
  for (int i = 0; i < t; ++i) g = theta.apply(g);
  return g;
}

EndoPowers::EndoPowers(const GroupTable& group, const Endomorphism& theta, int max_t)
    : theta_(theta) {
  powers_.resize(max_t + 1);
  powers_[0].resize(group.order);
  for (int g = 0; g < group.order; ++g) powers_[0][g] = g;
  for (int t = 1; t <= max_t; ++t) {
    powers_[t].resize(group.order);
    for (int g = 0; g < group.order; ++g) powers_[t][g] = theta.apply(powers_[t - 1][g]);
  }
}

int EndoPowers::apply(int t, int g) const {
  if (t < static_cast<int>(powers_.size())) return powers_[t][g];
  const int last = static_cast<int>(powers_.size()) - 1;
  g = powers_[last][g];
  return endo_power(theta_, t - last, g);
}

}  // namespace iquot
