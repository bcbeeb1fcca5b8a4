#include <doctest.h>

#include <random>

#include "vchow/funcfield/place.hpp"
#include "vchow/funcfield/roots.hpp"

using namespace vchow::funcfield;
using vchow::gf::FiniteField;

namespace {

FqPoly P(const FiniteField& k, std::initializer_list<int64_t> c) { return poly_from_ints(k, c); }

std::string factor_text(const Factorization& f) {
  std::string s;
  for (const auto& fc : f.factors) s += "(" + poly_text(fc.poly) + ")^" + std::to_string(fc.multiplicity);
  return s;
}

}  // namespace

TEST_CASE("factorization over F_5") {
  const auto k = FiniteField::prime(5);
  const FqPoly t = variable(k);
  const FqPoly delta = t.pow(4) * (t + P(k, {1})).pow(2) * (t - P(k, {1})).pow(2) * k.from_int(3);
  const Factorization f = factor(delta);
  CHECK(f.unit == k.from_int(3));
  CHECK(factor_text(f) == "(t)^4(t+1)^2(t-1)^2");
  CHECK(expand(f) == delta);
  CHECK(factor_text(factor(t * t + P(k, {1}))) == "(t+2)^1(t-2)^1");
  CHECK(is_irreducible(t * t + P(k, {2})));
}

TEST_CASE("factorization round trips on random polynomials") {
  std::mt19937_64 rng(11);
  for (uint32_t p : {2u, 3u, 7u}) {
    const auto k = FiniteField::prime(p);
    std::uniform_int_distribution<uint64_t> pick(0, p - 1);
    for (int i = 0; i < 30; ++i) {
      std::vector<vchow::gf::Fe> c;
      for (int j = 0; j < 9; ++j) c.push_back(k.element(pick(rng)));
      c.push_back(k.one());
      const FqPoly f(k.zero(), c);
      const Factorization fac = factor(f);
      CHECK(expand(fac) == f);
      for (const auto& fc : fac.factors) CHECK(is_irreducible(fc.poly));
    }
  }
}

TEST_CASE("rational functions") {
  const auto k = FiniteField::prime(5);
  const RatFn t = RatFn::t(k);
  const RatFn one = t.one_like();
  const RatFn x = (t * t - one) / (t - one);
  CHECK(x == t + one);
  CHECK(x.to_string() == "t+1");
  CHECK((one / t).to_string() == "1/t");
  CHECK((one / (t * t + one)).to_string() == "1/(t^2+1)");
  CHECK(invert_variable(t * t + one) == (t * t + one) / (t * t));
  auto s = ratfn_sqrt((t + one).pow(2) / t.pow(4));
  REQUIRE(s);
  CHECK((*s) * (*s) == (t + one).pow(2) / t.pow(4));
  CHECK_FALSE(ratfn_sqrt(t));
}

TEST_CASE("valuations and leading coefficients") {
  const auto k = FiniteField::prime(11);
  const RatFn t = RatFn::t(k);
  const RatFn one = t.one_like();
  const RatFn j = RatFn(k.from_int(3) == k.zero() ? t : t) * (t - one).pow(-2) * RatFn::constant(k.from_int(2));
  const Place v1 = Place::finite(variable(k) - P(k, {1}));
  CHECK(valuation(j, v1) == -2);
  const auto lead = leading_at(j, v1);
  CHECK(lead.valuation == -2);
  CHECK(lead.leading.to_string() == "2");
  const Place inf = Place::infinity(k);
  CHECK(valuation(j, inf) == 1);
  CHECK(leading_at(j, inf).leading.to_string() == "2");
  CHECK(reduce_at(t / (t + one), inf).is_one());
  CHECK_THROWS(Place::finite(P(k, {1, 0, 1}) * P(k, {2, 1})));
  CHECK(Place::finite(P(k, {1, 0, 1})).degree() == 2);  // t^2 + 1 is irreducible mod 11
}

TEST_CASE("residue fields of degree two") {
  const auto k = FiniteField::prime(5);
  const Place v = Place::finite(P(k, {2, 0, 1}));
  const ResidueField& rf = v.residue_field();
  CHECK(rf.order() == 25);
  const Residue a = rf.reduce(variable(k));
  CHECK((a * a).to_string() == rf.from_base(k.from_int(-2)).to_string());
  CHECK_FALSE(a.is_square());
  CHECK(rf.from_base(k.from_int(2)).is_square());
  const auto table = rf.table_field();
  CHECK(rf.from_fe(rf.to_fe(a + rf.one(), table)) == a + rf.one());
}

TEST_CASE("rational roots agree with the divisor search") {
  std::mt19937_64 rng(3);
  for (uint32_t p : {3u, 5u, 7u}) {
    const auto k = FiniteField::prime(p);
    std::uniform_int_distribution<uint64_t> pick(0, p - 1);
    auto random_poly = [&](int deg) {
      std::vector<vchow::gf::Fe> c;
      for (int j = 0; j <= deg; ++j) c.push_back(k.element(pick(rng)));
      return RatFn(FqPoly(k.zero(), c));
    };
    for (int i = 0; i < 25; ++i) {
      // (y - r1)(y - r2) * (y^2 + c) with random rational r1, r2.
      const RatFn r1 = random_poly(2) / (random_poly(1) + RatFn::t(k).pow(2));
      const RatFn r2 = random_poly(3);
      const RatFn c = random_poly(2);
      const RatFn one = RatFn::t(k).one_like();
      const RatPoly y = RatPoly::x(one);
      const RatPoly f = (y - RatPoly::constant(r1)) * (y - RatPoly::constant(r2)) *
                        (y * y + RatPoly::constant(c)) * RatPoly::constant(random_poly(1) + one);
      if (f.is_zero() || f.degree() < 1) continue;
      const auto roots = rational_roots(f);
      for (const auto& r : roots) CHECK(f.eval(r).is_zero());
      CHECK(std::find(roots.begin(), roots.end(), r1) != roots.end());
      CHECK(std::find(roots.begin(), roots.end(), r2) != roots.end());
      const auto oracle = rational_roots_divisor_search(f, 1'000'000);
      REQUIRE(oracle);
      CHECK(*oracle == roots);
    }
  }
}

TEST_CASE("inseparable root case") {
  const auto k = FiniteField::prime(3);
  const RatFn t = RatFn::t(k);
  const RatPoly y = RatPoly::x(t.one_like());
  // y^3 - t^3 = (y - t)^3
  const auto roots = rational_roots(y.pow(3) - RatPoly::constant(t.pow(3)));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == t);
  CHECK(rational_roots(y.pow(3) - RatPoly::constant(t)).empty());
}

TEST_CASE("degree-k factor search") {
  const auto k = FiniteField::prime(7);
  const FqPoly t = variable(k);
  const FqPoly one = t.one_like();
  const BiPoly x = BiPoly::x(one);
  const BiPoly a = x * x + BiPoly::constant(t) * x + BiPoly::constant(t * t + one);
  const BiPoly b = x * x * x + BiPoly::constant(t + P(k, {2}));
  const BiPoly c = x + BiPoly::constant(P(k, {3}));
  const FactorSearch fs = monic_factors_of_degree(a * b * c, 2);
  CHECK(fs.complete);
  bool found = false;
  for (const auto& h : fs.factors) found = found || h == a;
  CHECK(found);
  for (const auto& h : fs.factors) CHECK(divmod_monic(a * b * c, h).second.is_zero());
}
