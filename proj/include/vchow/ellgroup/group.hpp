#pragma once
// Points, the chord-tangent group law, and point counts over finite fields.

#include <cstdint>
#include <vector>

#include "vchow/curve/curve.hpp"

namespace vchow::ellgroup {

using curve::Curve;
using curve::Weierstrass;
using gf::Fe;
using gf::FiniteField;

template <class K>
struct Point {
  K x, y;
  bool infinite = true;

  static Point identity() { return Point{}; }
  static Point affine(K x, K y) { return Point{std::move(x), std::move(y), false}; }
  friend bool operator==(const Point& p, const Point& q) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite;
    return p.x == q.x && p.y == q.y;
  }
};

template <class K>
bool on_curve(const Weierstrass<K>& e, const Point<K>& p) {
  if (p.infinite) return true;
  const K& x = p.x;
  const K& y = p.y;
  return (y * y + e.a1 * x * y + e.a3 * y - (x * x * x + e.a2 * x * x + e.a4 * x + e.a6)).is_zero();
}

template <class K>
Point<K> neg(const Weierstrass<K>& e, const Point<K>& p) {
  if (p.infinite) return p;
  return Point<K>::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

template <class K>
Point<K> add(const Weierstrass<K>& e, const Point<K>& p, const Point<K>& q) {
  if (p.infinite) return q;
  if (q.infinite) return p;
  K lambda, nu;
  if (p.x == q.x) {
    const K denom = p.y + q.y + e.a1 * q.x + e.a3;
    if (denom.is_zero()) return Point<K>::identity();
    const K x = p.x;
    const K d = p.y + p.y + e.a1 * x + e.a3;
    lambda = (x.from_int(3) * x * x + x.from_int(2) * e.a2 * x + e.a4 - e.a1 * p.y) / d;
    nu = (-(x * x * x) + e.a4 * x + x.from_int(2) * e.a6 - e.a3 * p.y) / d;
  } else {
    const K dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  }
  const K x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  const K y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return Point<K>::affine(x3, y3);
}

template <class K>
Point<K> scalar_mul(const Weierstrass<K>& e, Point<K> p, int64_t k) {
  if (k < 0) {
    p = neg(e, p);
    k = -k;
  }
  Point<K> acc = Point<K>::identity();
  while (k > 0) {
    if (k & 1) acc = add(e, acc, p);
    k >>= 1;
    if (k > 0) p = add(e, p, p);
  }
  return acc;
}

/// Number of points including the identity; checks the Hasse bound.
uint64_t count_points(const Weierstrass<Fe>& e);
/// All points, identity first. Fails past the enumeration bound.
std::vector<Point<Fe>> enumerate_points(const Weierstrass<Fe>& e);
/// dim_{F_l} of the rational l-torsion.
int l_torsion_rank(const Weierstrass<Fe>& e, unsigned l);
/// Fails with kInternal when |N - q - 1| > 2 sqrt(q).
void check_hasse(uint64_t n, uint64_t q);

}  // namespace vchow::ellgroup
