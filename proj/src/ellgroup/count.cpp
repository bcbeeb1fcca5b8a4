#include "vchow/ellgroup/group.hpp"

#include "vchow/simd/kernels.hpp"

namespace vchow::ellgroup {

void check_hasse(uint64_t n, uint64_t q) {
  const int64_t a = static_cast<int64_t>(q) + 1 - static_cast<int64_t>(n);
  if (static_cast<uint64_t>(a * a) > 4 * q)
    fail(ErrorCode::kInternal, "point count " + std::to_string(n) + " violates the Hasse bound for q = " + std::to_string(q));
}

namespace {

FiniteField field_of(const Weierstrass<Fe>& e) { return e.a1.field(); }

// 4x^3 + b2 x^2 + 2 b4 x + b6, low degree first.
std::vector<Fe> two_torsion_cubic(const Weierstrass<Fe>& e) {
  const auto inv = curve::invariants_of(e);
  return {inv.b6, inv.b4 + inv.b4, inv.b2, e.a1.from_int(4)};
}

uint64_t count_brute_force(const Weierstrass<Fe>& e, const std::vector<Fe>& elems) {
  uint64_t n = 1;
  for (const Fe& x : elems) {
    for (const Fe& y : elems) {
      if (on_curve(e, Point<Fe>::affine(x, y))) ++n;
    }
  }
  return n;
}

}  // namespace

uint64_t count_points(const Weierstrass<Fe>& e) {
  const FiniteField k = field_of(e);
  const uint64_t q = k.order();
  const uint32_t p = k.characteristic();
  uint64_t n;
  if (p == 2 || p == 3) {
    n = count_brute_force(e, k.enumerate());
  } else if (k.degree() == 1 && p <= simd::kMaxKernelPrime) {
    if (q > gf::enumeration_bound()) fail(ErrorCode::kBoundExceeded, "field too large to count points");
    const auto f = two_torsion_cubic(e);
    std::vector<uint32_t> coeffs;
    for (const Fe& c : f) coeffs.push_back(c.index());
    std::vector<int32_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y < p; ++y) chi[(y * y) % p] = 1;
    const int64_t s = simd::character_sum(coeffs, p, chi);
    n = static_cast<uint64_t>(static_cast<int64_t>(q) + 1 + s);
  } else {
    const auto f = two_torsion_cubic(e);
    int64_t s = 0;
    for (const Fe& x : k.enumerate()) {
      const Fe v = ((f[3] * x + f[2]) * x + f[1]) * x + f[0];
      if (!v.is_zero()) s += v.is_square() ? 1 : -1;
    }
    n = static_cast<uint64_t>(static_cast<int64_t>(q) + 1 + s);
  }
  check_hasse(n, q);
  return n;
}

std::vector<Point<Fe>> enumerate_points(const Weierstrass<Fe>& e) {
  const FiniteField k = field_of(e);
  const auto elems = k.enumerate();
  std::vector<Point<Fe>> out{Point<Fe>::identity()};
  if (k.characteristic() == 2) {
    for (const Fe& x : elems)
      for (const Fe& y : elems)
        if (on_curve(e, Point<Fe>::affine(x, y))) out.push_back(Point<Fe>::affine(x, y));
    return out;
  }
  const auto f = two_torsion_cubic(e);
  const Fe half = k.from_int(2).inv();
  for (const Fe& x : elems) {
    const Fe v = ((f[3] * x + f[2]) * x + f[1]) * x + f[0];
    const Fe b = -(e.a1 * x + e.a3);
    if (v.is_zero()) {
      out.push_back(Point<Fe>::affine(x, b * half));
    } else if (auto r = v.sqrt()) {
      out.push_back(Point<Fe>::affine(x, (b + *r) * half));
      out.push_back(Point<Fe>::affine(x, (b - *r) * half));
    }
  }
  return out;
}

int l_torsion_rank(const Weierstrass<Fe>& e, unsigned l) {
  const uint64_t n = count_points(e);
  if (n % l != 0) return 0;
  uint64_t killed = 0;
  for (const auto& pt : enumerate_points(e)) {
    if (scalar_mul(e, pt, l).infinite) ++killed;
  }
  if (killed == 1) return 0;
  if (killed == l) return 1;
  if (killed == uint64_t{l} * l) return 2;
  fail(ErrorCode::kInternal, "l-torsion count " + std::to_string(killed) + " is not a power of l");
}

}  // namespace vchow::ellgroup
