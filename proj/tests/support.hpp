#pragma once
// Shared fixtures and brute-force oracles for the test suites.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "vchow/curve/curve.hpp"
#include "vchow/ellgroup/group.hpp"

namespace testsupport {

using vchow::curve::Curve;
using vchow::curve::Weierstrass;
using vchow::funcfield::FqPoly;
using vchow::funcfield::RatFn;
using vchow::gf::Fe;
using vchow::gf::FiniteField;

inline RatFn poly(const FiniteField& k, std::initializer_list<int64_t> c) {
  return RatFn(vchow::funcfield::poly_from_ints(k, c));
}

/// y^2 = x(x-1)(x-t^2) over F_5(t).
inline Curve legendre5() {
  const auto k = FiniteField::prime(5);
  return vchow::curve::make_curve({poly(k, {0}), poly(k, {-1, 0, -1}), poly(k, {0}), poly(k, {0, 0, 1}), poly(k, {0})});
}

/// y^2 + (1-t)xy - ty = x^3 - tx^2 over F_11(t).
inline Curve curve11() {
  const auto k = FiniteField::prime(11);
  return vchow::curve::make_curve({poly(k, {1, -1}), poly(k, {0, -1}), poly(k, {0, -1}), poly(k, {0}), poly(k, {0})});
}

/// Group structure Z/n1 x Z/n2 (n2 | n1) by brute-force orders; independent of
/// the library's counting routines.
struct GroupShape {
  uint64_t n1 = 1, n2 = 1;
};

inline uint64_t point_order(const Weierstrass<Fe>& e, const vchow::ellgroup::Point<Fe>& p) {
  uint64_t n = 1;
  auto q = p;
  while (!q.infinite) {
    q = vchow::ellgroup::add(e, q, p);
    ++n;
  }
  return n;
}

inline std::vector<vchow::ellgroup::Point<Fe>> brute_points(const Weierstrass<Fe>& e) {
  const FiniteField k = e.a1.field();
  std::vector<vchow::ellgroup::Point<Fe>> pts{vchow::ellgroup::Point<Fe>::identity()};
  const auto el = k.enumerate();
  for (const Fe& x : el)
    for (const Fe& y : el)
      if (vchow::ellgroup::on_curve(e, vchow::ellgroup::Point<Fe>::affine(x, y)))
        pts.push_back(vchow::ellgroup::Point<Fe>::affine(x, y));
  return pts;
}

inline GroupShape group_shape(const Weierstrass<Fe>& e) {
  const auto pts = brute_points(e);
  uint64_t exponent = 1;
  for (const auto& p : pts) exponent = std::lcm(exponent, point_order(e, p));
  return GroupShape{exponent, pts.size() / exponent};
}

/// F_l-rank of E[l] from the group shape.
inline int rank_from_shape(const GroupShape& g, unsigned l) { return (g.n1 % l == 0) + (g.n2 % l == 0); }

}  // namespace testsupport
