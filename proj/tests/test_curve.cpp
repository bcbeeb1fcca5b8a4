#include <doctest.h>

#include <random>

#include "support.hpp"
#include "vchow/curve/curve.hpp"

using namespace vchow::curve;
using namespace vchow::funcfield;
using testsupport::poly;

TEST_CASE("invariants of the Legendre curve over F_5") {
  const Curve e = testsupport::legendre5();
  const auto k = constant_field(e);
  const auto inv = invariants(e);
  const RatFn t = RatFn::t(k);
  const RatFn one = t.one_like();
  CHECK(inv.disc == t.pow(4) * (t + one).pow(2) * (t - one).pow(2));
  CHECK(inv.c4 == t.pow(4) - t.pow(2) + one);
  CHECK(inv.c4.pow(3) - inv.c6.pow(2) == inv.disc * RatFn::constant(k.from_int(1728)));
  CHECK(*inv.j == inv.c4.pow(3) / inv.disc);
}

TEST_CASE("invariants of the curve over F_11") {
  const Curve e = testsupport::curve11();
  const auto k = constant_field(e);
  const auto inv = invariants(e);
  const RatFn t = RatFn::t(k);
  const RatFn one = t.one_like();
  CHECK(inv.disc == t.pow(5) * (t + one) * (t - one));
  CHECK(inv.c4 == (t * t + poly(k, {-1, 2})) * (t * t + poly(k, {-1, -3})));
}

TEST_CASE("constant curve y^2 = x^3 - x over F_5") {
  const auto k = FiniteField::prime(5);
  const Curve e = make_curve({poly(k, {0}), poly(k, {0}), poly(k, {0}), poly(k, {-1}), poly(k, {0})});
  const auto inv = invariants(e);
  CHECK(inv.disc == poly(k, {4}));
  CHECK(*inv.j == poly(k, {3}));
  CHECK(bad_places(e).empty());
  CHECK_THROWS_AS(make_curve({poly(k, {0}), poly(k, {0}), poly(k, {0}), poly(k, {0}), poly(k, {0})}), vchow::Error);
}

TEST_CASE("transformation law on random transforms") {
  std::mt19937_64 rng(5);
  const Curve e = testsupport::curve11();
  const auto k = constant_field(e);
  std::uniform_int_distribution<int64_t> c(0, 10);
  std::uniform_int_distribution<int64_t> nz(1, 10);
  const auto inv = invariants(e);
  for (int i = 0; i < 100; ++i) {
    const RatFn u = poly(k, {nz(rng), c(rng)}) / poly(k, {c(rng), 1});
    if (u.is_zero()) continue;
    const CurveTransform tr{u, poly(k, {c(rng), c(rng)}), poly(k, {c(rng)}), poly(k, {c(rng), 0, c(rng)})};
    const auto inv2 = invariants(apply_transform(e, tr));
    CHECK(inv2.disc == inv.disc * u.pow(-12));
    CHECK(inv2.c4 == inv.c4 * u.pow(-4));
    CHECK(inv2.c6 == inv.c6 * u.pow(-6));
    CHECK(*inv2.j == *inv.j);
    // Composition agrees with successive application.
    const CurveTransform tr2{poly(k, {2}), poly(k, {1, 1}), poly(k, {0, 1}), poly(k, {3})};
    CHECK(apply_transform(apply_transform(e, tr), tr2) == apply_transform(e, compose(tr, tr2)));
  }
}

TEST_CASE("square completion keeps the invariants") {
  const Curve e = testsupport::curve11();
  CurveTransform tr;
  const Curve s = complete_square(e, &tr);
  CHECK(s.a1.is_zero());
  CHECK(s.a3.is_zero());
  CHECK(invariants(s).disc == invariants(e).disc);
  CHECK(*invariants(s).j == *invariants(e).j);
  const auto k = FiniteField::prime(5);
  const Curve f = make_curve({poly(k, {1}), poly(k, {0}), poly(k, {0}), poly(k, {0}), poly(k, {1})});
  const Curve g = complete_square(f);
  CHECK(g.a2 == RatFn::constant(k.from_int(4).inv()));
}

TEST_CASE("minimal models at the example places") {
  const Curve e = testsupport::legendre5();
  const auto k = constant_field(e);
  const Place inf = Place::infinity(k);
  const LocalModel at_inf = minimal_model_at(e, inf);
  CHECK(at_inf.vdisc == 4);
  CHECK(at_inf.vc4 == 0);
  // Same shape with t replaced by s = 1/t.
  const RatFn s = RatFn::t(k).inv();
  CHECK(at_inf.model.a2 == -(s.one_like() + s * s));
  CHECK(at_inf.model.a4 == s * s);
  const LocalModel at0 = minimal_model_at(e, Place::finite(variable(k)));
  CHECK(at0.vdisc == 4);
  CHECK(at0.transform.is_identity());
  CHECK(at0.vj == -4);

  const Curve f = testsupport::curve11();
  const LocalModel m = minimal_model_at(f, Place::infinity(constant_field(f)));
  CHECK(m.vdisc == 5);
  CHECK(m.vj == -5);
}

TEST_CASE("bad places of the examples") {
  auto names = [](const Curve& c) {
    std::vector<std::string> out;
    for (const auto& v : bad_places(c)) out.push_back(v.to_string());
    return out;
  };
  CHECK(names(testsupport::legendre5()) == std::vector<std::string>{"t", "t+1", "t-1", "inf"});
  CHECK(names(testsupport::curve11()) == std::vector<std::string>{"t", "t+1", "t-1", "inf"});
}

TEST_CASE("minimal models are idempotent and consistent with j") {
  std::mt19937_64 rng(9);
  const auto k = FiniteField::prime(7);
  std::uniform_int_distribution<int64_t> c(0, 6);
  std::uniform_int_distribution<int64_t> nz(1, 6);
  int checked = 0;
  while (checked < 30) {
    std::array<RatFn, 5> a;
    for (auto& x : a) x = poly(k, {c(rng), c(rng), c(rng)}) / poly(k, {nz(rng), c(rng) % 2});
    Curve e;
    try {
      e = make_curve(a);
    } catch (const vchow::Error&) {
      continue;
    }
    ++checked;
    // A scaled copy has the same bad places.
    const RatFn z = a[0].zero_like();
    const Curve scaled = apply_transform(e, CurveTransform{RatFn::constant(k.from_int(3)), z, z, z});
    CHECK(bad_places(scaled) == bad_places(e));
    for (const Place& v : candidate_places(e)) {
      const LocalModel m = minimal_model_at(e, v);
      CHECK(m.vdisc >= 0);
      CHECK((m.vdisc < 12 || (m.vc4 && *m.vc4 < 4)));
      CHECK(minimal_model_at(m.model, v).transform.is_identity());
      const auto j = *invariants(e).j;
      if (!j.is_zero()) CHECK(m.vj == valuation(j, v));
      CHECK(apply_transform(e, m.transform) == m.model);
    }
  }
}
