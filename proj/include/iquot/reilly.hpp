#pragma once

#include <compare>
#include <string>

#include "iquot/group.hpp"

namespace iquot {

// An element (m, g, n) of the semigroup on N0 x G x N0 determined by a group
// G and an endomorphism theta. The trivial-group case is the bicyclic monoid.
struct ReillyElement {
  int m = 0;  // left index
  int g = 0;  // group element index
  int n = 0;  // right index

  friend auto operator<=>(const ReillyElement&, const ReillyElement&) = default;
};

// Projection of a Reilly element onto its index pair.
struct Bicyclic {
  int m = 0;
  int n = 0;

  friend auto operator<=>(const Bicyclic&, const Bicyclic&) = default;
};

// The ambient (G, theta) a Reilly element multiplies over. Elements stay plain
// values; the context is passed explicitly to every operation that needs it.
struct ReillyContext {
  GroupTable group;
  Endomorphism endo;
  EndoPowers powers;

  ReillyContext(GroupTable g, Endomorphism theta, int max_exponent)
      : group(std::move(g)), endo(std::move(theta)), powers(group, endo, max_exponent) {}
};

enum class Green { R, L, H, D };

// (m,g,n)(p,h,q) = (m-n+t, theta^{t-n}(g) * theta^{t-p}(h), q-p+t), t = max(n,p).
ReillyElement multiply(const ReillyContext& ctx, ReillyElement x, ReillyElement y);

// (m,g,n) -> (n, g^{-1}, m).
ReillyElement invert(const ReillyContext& ctx, ReillyElement x);

// x is idempotent iff it has the form (m, identity, m).
bool is_idempotent(const ReillyContext& ctx, ReillyElement x);

// R iff equal left index, L iff equal right index, H iff both. D is constant
// true: the semigroup has a single D-class because every H-class is nonempty,
// so a mediator (x.m, g, y.n) always exists; tests cross-check R∘L on samples.
bool green_related(ReillyElement x, ReillyElement y, Green rel);

// The index projection (m,g,n) -> (m,n); a homomorphism onto the bicyclic
// monoid whose kernel is the H relation.
Bicyclic to_bicyclic(ReillyElement x);

Bicyclic bicyclic_multiply(Bicyclic a, Bicyclic b);
Bicyclic bicyclic_invert(Bicyclic a);

// Natural partial order on the idempotent chain: e_m <= e_n iff m >= n.
bool idempotent_leq(int m, int n);

// Display form: "(m,g,n)", or "(m,n)" over the trivial group.
std::string element_id(const ReillyContext& ctx, ReillyElement x);

}  // namespace iquot
