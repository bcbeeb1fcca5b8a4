#include "vchow/curve/curve.hpp"

#include <algorithm>

namespace vchow::curve {

using funcfield::factor;
using funcfield::leading_at;
using funcfield::reduce_at;
using funcfield::valuation;

Curve make_curve(const std::array<RatFn, 5>& a) {
  Curve c{a[0], a[1], a[2], a[3], a[4]};
  if (invariants_of(c).disc.is_zero()) fail(ErrorCode::kSingularCurve, "singular curve: discriminant is zero");
  return c;
}

CurveInvariants invariants(const Curve& c) {
  CurveInvariants inv = invariants_of(c);
  if (inv.disc.is_zero()) fail(ErrorCode::kSingularCurve, "singular curve: discriminant is zero");
  return inv;
}

Curve complete_square(const Curve& c, CurveTransform* tr) {
  require_analysis_characteristic(c);
  const CurveTransform t = square_completing_transform(c);
  if (tr) *tr = t;
  return apply_transform(c, t);
}

FiniteField constant_field(const Curve& c) { return c.a1.field(); }

void require_analysis_characteristic(const Curve& c) {
  const uint32_t p = c.characteristic();
  if (p <= 3) fail(ErrorCode::kUnsupported, "characteristic " + std::to_string(p) + " is not supported (need p > 3)");
}

namespace {

constexpr int kWeights[5] = {1, 2, 3, 4, 6};

int integralizing_exponent(const Curve& c, const Place& v) {
  int k = 0;
  const auto a = c.coeffs();
  for (int i = 0; i < 5; ++i) {
    if (a[i].is_zero()) continue;
    const int val = valuation(a[i], v);
    if (val < 0) k = std::max(k, (-val + kWeights[i] - 1) / kWeights[i]);
  }
  return k;
}

std::optional<int> val_or_inf(const RatFn& x, const Place& v) { return funcfield::valuation_or_inf(x, v); }

bool reducible(int vdisc, const std::optional<int>& vc4) { return vdisc >= 12 && (!vc4 || *vc4 >= 4); }

}  // namespace

LocalModel minimal_model_at(const Curve& c, const Place& v) {
  require_analysis_characteristic(c);
  const RatFn pi = v.uniformizer();
  const RatFn one = pi.one_like();
  const RatFn zero = pi.zero_like();
  CurveTransform tr = CurveTransform::identity(one);
  const int k = integralizing_exponent(c, v);
  if (k > 0) tr = CurveTransform{pi.pow(-k), zero, zero, zero};
  Curve model = apply_transform(c, tr);
  CurveInvariants inv = invariants(model);
  int vdisc = valuation(inv.disc, v);
  std::optional<int> vc4 = val_or_inf(inv.c4, v);
  if (reducible(vdisc, vc4)) {
    const CurveTransform sf = short_form_transform(model);
    tr = compose(tr, sf);
    model = apply_transform(model, sf);
    const CurveTransform step{pi, zero, zero, zero};
    while (reducible(vdisc, vc4)) {
      tr = compose(tr, step);
      model = apply_transform(model, step);
      vdisc -= 12;
      if (vc4) *vc4 -= 4;
    }
    inv = invariants(model);
  }
  for (const RatFn& a : model.coeffs()) {
    if (!a.is_zero() && valuation(a, v) < 0) fail(ErrorCode::kInternal, "minimal model is not integral at " + v.to_string());
  }
  LocalModel out;
  out.place = v;
  out.model = model;
  out.transform = tr;
  out.vdisc = valuation(inv.disc, v);
  out.vc4 = vc4;
  if (vc4) out.vj = 3 * *vc4 - out.vdisc;
  return out;
}

std::vector<Place> candidate_places(const Curve& c) {
  const CurveInvariants inv = invariants(c);
  std::vector<FqPoly> polys{inv.disc.num(), inv.disc.den()};
  for (const RatFn& a : c.coeffs()) polys.push_back(a.den());
  std::vector<Place> out;
  for (const FqPoly& f : polys) {
    if (f.degree() < 1) continue;
    for (const auto& fc : factor(f).factors) {
      Place v = Place::finite(fc.poly);
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Place> bad_places(const Curve& c) {
  require_analysis_characteristic(c);
  std::vector<Place> out;
  for (const Place& v : candidate_places(c)) {
    if (minimal_model_at(c, v).vdisc > 0) out.push_back(v);
  }
  const Place inf = Place::infinity(constant_field(c));
  if (minimal_model_at(c, inf).vdisc > 0) out.push_back(inf);
  return out;
}

Weierstrass<Residue> reduce_model(const Curve& model, const Place& v) {
  return {reduce_at(model.a1, v), reduce_at(model.a2, v), reduce_at(model.a3, v), reduce_at(model.a4, v),
          reduce_at(model.a6, v)};
}

Weierstrass<Fe> reduce_model_table(const Curve& model, const Place& v, const FiniteField& table) {
  const auto r = reduce_model(model, v);
  const auto& rf = v.residue_field();
  return {rf.to_fe(r.a1, table), rf.to_fe(r.a2, table), rf.to_fe(r.a3, table), rf.to_fe(r.a4, table),
          rf.to_fe(r.a6, table)};
}

}  // namespace vchow::curve
