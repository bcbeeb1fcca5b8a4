#pragma once
// Division polynomials, kernel polynomials and Velu quotients.

#include <algorithm>
#include <string>
#include <vector>

#include "vchow/ellgroup/group.hpp"
#include "vchow/funcfield/roots.hpp"

namespace vchow::ellgroup {

using funcfield::RatFn;
using funcfield::RatPoly;

inline constexpr unsigned kMaxIsogenyDegree = 13;

/// 4x^3 + b2 x^2 + 2 b4 x + b6.
template <class K>
Poly<K> two_division_cubic(const Weierstrass<K>& e) {
  const auto inv = curve::invariants_of(e);
  return Poly<K>(e.a1, {inv.b6, inv.b4 + inv.b4, inv.b2, e.a1.from_int(4)});
}

/// x-only division polynomial: for l = 2 the cubic above, for odd l the
/// polynomial of degree (l^2 - 1)/2 whose roots are x(P) for P in E[l] \ O.
template <class K>
Poly<K> division_poly_of(const Weierstrass<K>& e, unsigned l) {
  using P = Poly<K>;
  const auto inv = curve::invariants_of(e);
  const K& b2 = inv.b2;
  const K& b4 = inv.b4;
  const K& b6 = inv.b6;
  const K& b8 = inv.b8;
  auto n = [&](int64_t v) { return e.a1.from_int(v); };
  const P F = two_division_cubic(e);
  if (l == 2) return F;
  const P F2 = F * F;
  std::vector<P> f(std::max<unsigned>(l + 1, 5), P(e.a1));
  f[1] = P::constant(n(1));
  f[2] = P::constant(n(1));
  f[3] = P(e.a1, {b8, n(3) * b6, n(3) * b4, b2, n(3)});
  f[4] = P(e.a1, {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, n(10) * b8, n(10) * b6, n(5) * b4, b2, n(2)});
  for (unsigned k = 5; k <= l; ++k) {
    const unsigned m = k / 2;
    if (k % 2 == 1) {
      const P a = f[m + 2] * f[m].pow(3);
      const P b = f[m - 1] * f[m + 1].pow(3);
      f[k] = (m % 2 == 0) ? F2 * a - b : a - F2 * b;
    } else {
      f[k] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
    }
  }
  return f[l];
}

/// Numerator and denominator of the x-coordinate of the doubling map.
template <class K>
std::pair<Poly<K>, Poly<K>> doubling_map(const Weierstrass<K>& e) {
  const auto inv = curve::invariants_of(e);
  const K z = e.a1.zero_like();
  Poly<K> num(e.a1, {-inv.b8, -(inv.b6 + inv.b6), -inv.b4, z, e.a1.one_like()});
  return {num, two_division_cubic(e)};
}

/// True when the roots of h are permuted by the doubling map, tested by
/// h | sum h_i N^i D^(k-i) with everything reduced modulo h.
template <class K>
bool kernel_is_stable(const Weierstrass<K>& e, const Poly<K>& h) {
  if (h.degree() < 1) return false;
  const auto [num, den] = doubling_map(e);
  const Poly<K> hm = h.monic();
  if (gcd(den, hm).degree() > 0) return false;
  const Poly<K> nm = num % hm;
  const Poly<K> dm = den % hm;
  const int k = hm.degree();
  Poly<K> acc(e.a1);
  // Horner in N/D: acc = sum_i h_i N^i D^(k-i).
  std::vector<Poly<K>> dpow{hm.one_like()};
  for (int i = 1; i <= k; ++i) dpow.push_back((dpow.back() * dm) % hm);
  Poly<K> npow = hm.one_like();
  for (int i = 0; i <= k; ++i) {
    acc = (acc + Poly<K>::constant(hm.coeff(i)) * npow * dpow[k - i]) % hm;
    npow = (npow * nm) % hm;
  }
  return acc.is_zero();
}

/// Velu/Kohel codomain for a kernel polynomial of an odd-degree cyclic
/// subgroup, or for h = x - x0 with x0 a root of the 2-division cubic.
template <class K>
Weierstrass<K> velu_codomain(const Weierstrass<K>& e, const Poly<K>& kernel, unsigned l) {
  const auto inv = curve::invariants_of(e);
  auto n = [&](int64_t v) { return e.a1.from_int(v); };
  const Poly<K> h = kernel.monic();
  K t, w;
  if (l == 2) {
    const K x0 = -h.coeff(0);
    const K y0 = -(e.a1 * x0 + e.a3) * n(2).inv();
    t = n(3) * x0 * x0 + n(2) * e.a2 * x0 + e.a4 - e.a1 * y0;
    w = x0 * t;
  } else {
    const int d = h.degree();
    auto s = [&](int i) {
      if (i > d) return e.a1.zero_like();
      const K c = h.coeff(static_cast<size_t>(d - i));
      return (i % 2 == 0) ? c : -c;
    };
    const K s1 = s(1), s2 = s(2), s3 = s(3);
    const K p2 = s1 * s1 - n(2) * s2;
    const K p3 = s1 * s1 * s1 - n(3) * s1 * s2 + n(3) * s3;
    t = n(6) * p2 + inv.b2 * s1 + n(d) * inv.b4;
    w = n(10) * p3 + n(2) * inv.b2 * p2 + n(3) * inv.b4 * s1 + n(d) * inv.b6;
  }
  return Weierstrass<K>{e.a1, e.a2, e.a3, e.a4 - n(5) * t, e.a6 - inv.b2 * t - n(7) * w};
}

/// Rational l-torsion count over a finite field of order q without
/// enumerating points: roots of the division polynomial in the field come from
/// gcd with x^q - x, and y is rational exactly when F(x) is a square there.
template <class K>
uint64_t l_torsion_count_by_division_poly(const Weierstrass<K>& e, unsigned l, const gf::BigInt& q) {
  const Poly<K> cubic = two_division_cubic(e);
  const Poly<K> psi = division_poly_of(e, l).monic();
  const Poly<K> x = Poly<K>::x(e.a1);
  const Poly<K> g = gcd(psi, x.powmod(q, psi) - x);
  if (l == 2) return 1 + static_cast<uint64_t>(std::max(g.degree(), 0));
  if (g.degree() < 1) return 1;
  const Poly<K> chi = (cubic % g).powmod(gf::BigInt((q - 1) / 2), g);
  const Poly<K> sq = gcd(g, chi - chi.one_like());
  return 1 + 2 * static_cast<uint64_t>(std::max(sq.degree(), 0));
}

/// dim_{F_l} from a count in {1, l, l^2}.
int rank_from_count(uint64_t count, unsigned l);

struct IsogenyData {
  RatPoly kernel_poly;  // monic
  Curve codomain;
  unsigned degree = 0;
  std::string source;   // "2-torsion", "root", "torsion point", "factor search", "user"
};

struct IsogenySearch {
  std::vector<IsogenyData> isogenies;
  bool complete = false;
  std::string note;
};

/// Checks p > 3, l prime, l != p and l <= kMaxIsogenyDegree.
void check_degree(const Curve& c, unsigned l);

RatPoly division_poly(const Curve& c, unsigned l);
/// Verifies the kernel polynomial (degree, divisibility, stability) and returns the quotient.
Curve velu_quotient(const Curve& c, const RatPoly& kernel, unsigned l);
/// Empty string when `kernel` is a valid kernel polynomial, else the reason.
std::string kernel_problem(const Curve& c, const RatPoly& kernel, unsigned l);

/// prod_{k=1}^{(l-1)/2} (x - x(kP)) for a point of exact order l.
RatPoly kernel_from_point(const Curve& c, const Point<RatFn>& p, unsigned l);

struct RationalTorsion {
  int rank = 0;
  std::vector<Point<RatFn>> points;  // nonzero points of E(F)[l]
};
RationalTorsion rational_l_torsion(const Curve& c, unsigned l);

IsogenySearch find_rational_isogenies(const Curve& c, unsigned l, const std::vector<RatPoly>& user_kernels = {});

}  // namespace vchow::ellgroup
