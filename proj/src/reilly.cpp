#include "iquot/reilly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace iquot {

ReillyElement multiply(const ReillyContext& ctx, ReillyElement x, ReillyElement y) {
  const int t = std::max(x.n, y.m);
  const int g = ctx.group.mul(ctx.powers.apply(t - x.n, x.g), ctx.powers.apply(t - y.m, y.g));
  return {x.m - x.n + t, g, y.n - y.m + t};
}

ReillyElement invert(const ReillyContext& ctx, ReillyElement x) {
  return {x.n, ctx.group.inv(x.g), x.m};
}

bool is_idempotent(const ReillyContext& ctx, ReillyElement x) {
  return x.m == x.n && x.g == ctx.group.identity;
}

bool green_related(ReillyElement x, ReillyElement y, Green rel) {
  switch (rel) {
    case Green::R: return x.m == y.m;
    case Green::L: return x.n == y.n;
    case Green::H: return x.m == y.m && x.n == y.n;
    case Green::D: {
      // single D-class: (x.m, g, y.n) mediates x R z L y for any g
      assert(green_related(x, {x.m, 0, y.n}, Green::R) &&
             green_related({x.m, 0, y.n}, y, Green::L));
      return true;
    }
  }
  return false;
}

Bicyclic to_bicyclic(ReillyElement x) { return {x.m, x.n}; }

Bicyclic bicyclic_multiply(Bicyclic a, Bicyclic b) {
  const int t = std::max(a.n, b.m);
  return {a.m - a.n + t, b.n - b.m + t};
}

Bicyclic bicyclic_invert(Bicyclic a) { return {a.n, a.m}; }

bool idempotent_leq(int m, int n) { return m >= n; }

std::string element_id(const ReillyContext& ctx, ReillyElement x) {
  std::ostringstream os;
  if (ctx.group.is_trivial()) {
    os << "(" << x.m << "," << x.n << ")";
  } else {
    os << "(" << x.m << "," << x.g << "," << x.n << ")";
  }
  return os.str();
}

}  // namespace iquot
