#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "vchow/ellgroup/isogeny.hpp"
#include "vchow/simd/kernels.hpp"

using namespace vchow::ellgroup;
using namespace vchow::funcfield;
using vchow::curve::LocalModel;
using vchow::curve::minimal_model_at;
using vchow::curve::reduce_model_table;
using testsupport::poly;

namespace {

Weierstrass<Fe> constant_curve(const FiniteField& k, std::array<int64_t, 5> a) {
  return {k.from_int(a[0]), k.from_int(a[1]), k.from_int(a[2]), k.from_int(a[3]), k.from_int(a[4])};
}

bool nonsingular(const Weierstrass<Fe>& e) { return !vchow::curve::invariants_of(e).disc.is_zero(); }

}  // namespace

TEST_CASE("group law basics") {
  const Curve e = testsupport::legendre5();
  const RatFn z = e.a1.zero_like();
  const Point<RatFn> p = Point<RatFn>::affine(z, z);
  CHECK(add(e, p, Point<RatFn>::identity()) == p);
  CHECK(scalar_mul(e, p, 2).infinite);
  CHECK(on_curve(e, p));
}

TEST_CASE("associativity on small curves") {
  for (uint32_t q : {5u, 7u}) {
    const auto k = FiniteField::prime(q);
    const auto e = constant_curve(k, {1, 2, 0, 3, 1});
    REQUIRE(nonsingular(e));
    const auto pts = enumerate_points(e);
    for (const auto& a : pts)
      for (const auto& b : pts)
        for (const auto& c : pts) CHECK(add(e, add(e, a, b), c) == add(e, a, add(e, b, c)));
  }
}

TEST_CASE("point counts") {
  const auto f5 = FiniteField::prime(5);
  CHECK(count_points(constant_curve(f5, {0, 0, 0, 1, 0})) == 4);
  std::mt19937_64 rng(17);
  for (auto [p, n] : {std::pair{5u, 1u}, {7u, 1u}, {11u, 1u}, {13u, 1u}, {5u, 2u}, {7u, 2u}, {3u, 2u}, {2u, 3u}}) {
    const auto k = FiniteField::make(p, n);
    std::uniform_int_distribution<uint64_t> pick(0, k.order() - 1);
    for (int i = 0; i < 10; ++i) {
      Weierstrass<Fe> e{k.element(pick(rng)), k.element(pick(rng)), k.element(pick(rng)), k.element(pick(rng)),
                        k.element(pick(rng))};
      if (!nonsingular(e)) continue;
      const uint64_t n_pts = count_points(e);
      CHECK(n_pts == testsupport::brute_points(e).size());
      CHECK(n_pts == enumerate_points(e).size());
    }
  }
}

TEST_CASE("scalar and vector kernels agree") {
  std::mt19937_64 rng(23);
  for (uint32_t p : {5u, 11u, 101u, 1009u, 65521u, 1048573u}) {
    std::uniform_int_distribution<uint32_t> pick(0, p - 1);
    std::vector<int32_t> chi(p);
    for (auto& c : chi) c = static_cast<int32_t>(pick(rng) % 3) - 1;
    for (int deg = 0; deg <= 5; ++deg) {
      std::vector<uint32_t> coeffs;
      for (int i = 0; i <= deg; ++i) coeffs.push_back(pick(rng));
      std::vector<uint32_t> xs(37);
      for (auto& x : xs) x = pick(rng);
      std::vector<uint32_t> a(xs.size()), b(xs.size());
      vchow::simd::scalar::eval_poly_mod_p(coeffs, p, xs, a);
      vchow::simd::eval_poly_mod_p(coeffs, p, xs, b);
      CHECK(a == b);
      if (p < 100000) CHECK(vchow::simd::scalar::character_sum(coeffs, p, chi) == vchow::simd::character_sum(coeffs, p, chi));
    }
  }
}

TEST_CASE("l-torsion ranks agree with group structure") {
  std::mt19937_64 rng(29);
  for (uint32_t q : {5u, 7u, 11u, 13u}) {
    const auto k = FiniteField::prime(q);
    std::uniform_int_distribution<uint64_t> pick(0, q - 1);
    for (int i = 0; i < 15; ++i) {
      Weierstrass<Fe> e{k.element(pick(rng)), k.element(pick(rng)), k.element(pick(rng)), k.element(pick(rng)),
                        k.element(pick(rng))};
      if (!nonsingular(e)) continue;
      const auto shape = testsupport::group_shape(e);
      for (unsigned l : {2u, 3u, 5u, 7u}) {
        if (l == q) continue;
        const int r = l_torsion_rank(e, l);
        CHECK(r == testsupport::rank_from_shape(shape, l));
        if (r == 2) CHECK((q - 1) % l == 0);
      }
    }
  }
}

TEST_CASE("division polynomials match brute-force torsion") {
  // Short curve: 3x^4 + 6Ax^2 + 12Bx - A^2.
  const auto f7 = FiniteField::prime(7);
  const Curve s = vchow::curve::make_curve({poly(f7, {0}), poly(f7, {0}), poly(f7, {0}), poly(f7, {2}), poly(f7, {3})});
  const RatPoly psi3 = division_poly(s, 3);
  CHECK(psi3 == RatPoly(s.a1, {poly(f7, {-4}), poly(f7, {36}), poly(f7, {12}), poly(f7, {0}), poly(f7, {3})}));
  CHECK(division_poly(testsupport::curve11(), 5).degree() == 12);

  int curves = 0;
  for (auto [p, a] : {std::pair{5u, std::array<int64_t, 5>{0, 0, 0, 1, 1}},
                      {7u, {1, 0, 1, 2, 3}},
                      {11u, {0, 1, 0, 3, 5}},
                      {13u, {1, 1, 0, 0, 2}},
                      {13u, {0, 0, 0, 1, 0}},
                      {7u, {0, 0, 0, 0, 1}}}) {
    const auto k = FiniteField::prime(p);
    const auto e = constant_curve(k, a);
    if (!nonsingular(e)) continue;
    ++curves;
    const auto k2 = FiniteField::make(p, 2);
    const auto e2 = constant_curve(k2, a);
    for (unsigned l : {3u, 5u}) {
      if (l == p) continue;
      const vchow::Poly<Fe> psi = division_poly_of(e, l);
      CHECK(psi.degree() == static_cast<int>((l * l - 1) / 2));
      std::set<uint32_t> roots;
      for (const Fe& x : k.enumerate())
        if (psi.eval(x).is_zero()) roots.insert(x.index());
      std::set<uint32_t> torsion_x;
      for (const auto& pt : testsupport::brute_points(e2)) {
        if (pt.infinite || !scalar_mul(e2, pt, l).infinite) continue;
        if (pt.x.index() < p) torsion_x.insert(pt.x.index());
      }
      CHECK(roots == torsion_x);
    }
  }
  CHECK(curves >= 5);
}

TEST_CASE("two-isogeny of y^2 = x^3 + x") {
  const auto f13 = FiniteField::prime(13);
  const Curve e = vchow::curve::make_curve({poly(f13, {0}), poly(f13, {0}), poly(f13, {0}), poly(f13, {1}), poly(f13, {0})});
  const RatFn z = e.a1.zero_like();
  const Curve q = velu_quotient(e, RatPoly::x(z.one_like()), 2);
  CHECK(q.a4 == poly(f13, {-4}));
  CHECK(q.a6.is_zero());
  const auto k = FiniteField::prime(13);
  CHECK(count_points(constant_curve(k, {0, 0, 0, 1, 0})) == count_points(constant_curve(k, {0, 0, 0, -4, 0})));
}

TEST_CASE("rational torsion of the examples") {
  const auto t2 = rational_l_torsion(testsupport::legendre5(), 2);
  CHECK(t2.rank == 2);
  CHECK(t2.points.size() == 3);
  const Curve e = testsupport::curve11();
  const auto t5 = rational_l_torsion(e, 5);
  CHECK(t5.rank == 1);
  REQUIRE(t5.points.size() == 4);
  for (const auto& p : t5.points) CHECK(scalar_mul(e, p, 5).infinite);
  CHECK(rational_l_torsion(e, 3).rank == 0);
}

TEST_CASE("isogenies of the examples preserve point counts") {
  const Curve leg = testsupport::legendre5();
  const auto s2 = find_rational_isogenies(leg, 2);
  CHECK(s2.complete);
  CHECK(s2.isogenies.size() == 3);
  const Curve e = testsupport::curve11();
  const auto s5 = find_rational_isogenies(e, 5);
  REQUIRE(!s5.isogenies.empty());
  const RatPoly kp = kernel_from_point(e, rational_l_torsion(e, 5).points.front(), 5);
  bool has_point_kernel = false;
  for (const auto& iso : s5.isogenies) has_point_kernel = has_point_kernel || iso.kernel_poly == kp;
  CHECK(has_point_kernel);

  int checked = 0;
  for (const auto* search : {&s2, &s5}) {
    for (const auto& iso : search->isogenies) {
      const Curve& src = search == &s2 ? leg : e;
      // Compare at places where both have good reduction.
      const FiniteField k = vchow::curve::constant_field(src);
      for (int d = 1; d <= 2; ++d) {
        for (const FqPoly& pi : monic_irreducibles(k, d)) {
          const Place v = Place::finite(pi);
          const auto ma = minimal_model_at(src, v);
          const auto mb = minimal_model_at(iso.codomain, v);
          if (ma.vdisc != 0 || mb.vdisc != 0) continue;
          const auto table = v.residue_field().table_field();
          CHECK(count_points(reduce_model_table(ma.model, v, table)) == count_points(reduce_model_table(mb.model, v, table)));
          ++checked;
        }
      }
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("irreducible 3-division polynomial gives no isogeny") {
  // Over F_7(t), y^2 = x^3 + t: search must be complete either way; any
  // kernel found must be a genuine root of psi_3.
  const auto k = FiniteField::prime(7);
  const Curve e = vchow::curve::make_curve({poly(k, {0}), poly(k, {0}), poly(k, {0}), poly(k, {0, 1}), poly(k, {1, 0, 1})});
  const auto s = find_rational_isogenies(e, 3);
  CHECK(s.complete);
  for (const auto& iso : s.isogenies) CHECK((division_poly(e, 3) % iso.kernel_poly).is_zero());
}

TEST_CASE("user kernels are verified") {
  const Curve e = testsupport::curve11();
  const RatFn one = e.a1.one_like();
  CHECK_THROWS_AS(find_rational_isogenies(e, 5, {RatPoly(one, {one, one, one})}), vchow::Error);
  CHECK_THROWS_AS(velu_quotient(e, RatPoly(one, {one, one}), 3), vchow::Error);
}
