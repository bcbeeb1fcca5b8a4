#pragma once
// Weierstrass equations y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vchow/funcfield/place.hpp"

namespace vchow::curve {

using funcfield::FqPoly;
using funcfield::Place;
using funcfield::RatFn;
using funcfield::Residue;
using gf::Fe;
using gf::FiniteField;

template <class K>
struct Weierstrass {
  K a1, a2, a3, a4, a6;

  std::array<K, 5> coeffs() const { return {a1, a2, a3, a4, a6}; }
  uint32_t characteristic() const { return a1.characteristic(); }
  friend bool operator==(const Weierstrass& x, const Weierstrass& y) = default;
};

template <class K>
struct Invariants {
  K b2, b4, b6, b8, c4, c6, disc;
  std::optional<K> j;  // empty only for singular equations
};

template <class K>
Invariants<K> invariants_of(const Weierstrass<K>& e) {
  const K& a1 = e.a1;
  const K& a2 = e.a2;
  const K& a3 = e.a3;
  const K& a4 = e.a4;
  const K& a6 = e.a6;
  auto n = [&](int64_t v) { return a1.from_int(v); };
  Invariants<K> r;
  r.b2 = a1 * a1 + n(4) * a2;
  r.b4 = n(2) * a4 + a1 * a3;
  r.b6 = a3 * a3 + n(4) * a6;
  r.b8 = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  r.c4 = r.b2 * r.b2 - n(24) * r.b4;
  r.c6 = -(r.b2 * r.b2 * r.b2) + n(36) * r.b2 * r.b4 - n(216) * r.b6;
  r.disc = -(r.b2 * r.b2 * r.b8) - n(8) * r.b4 * r.b4 * r.b4 - n(27) * r.b6 * r.b6 + n(9) * r.b2 * r.b4 * r.b6;
  if (!r.disc.is_zero()) r.j = r.c4 * r.c4 * r.c4 / r.disc;
  return r;
}

/// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
template <class K>
struct Transform {
  K u, r, s, t;

  static Transform identity(const K& like) { return {like.one_like(), like.zero_like(), like.zero_like(), like.zero_like()}; }
  bool is_identity() const { return u.is_one() && r.is_zero() && s.is_zero() && t.is_zero(); }
};

/// Apply `first`, then `second` to the result.
template <class K>
Transform<K> compose(const Transform<K>& first, const Transform<K>& second) {
  const K& u1 = first.u;
  return {u1 * second.u, first.r + u1 * u1 * second.r, first.s + u1 * second.s,
          first.t + u1 * u1 * first.s * second.r + u1 * u1 * u1 * second.t};
}

template <class K>
Weierstrass<K> apply_transform(const Weierstrass<K>& e, const Transform<K>& tr) {
  if (tr.u.is_zero()) fail(ErrorCode::kInvalidArgument, "change of variables with u = 0");
  const K& r = tr.r;
  const K& s = tr.s;
  const K& t = tr.t;
  auto n = [&](int64_t v) { return r.from_int(v); };
  const K ui = tr.u.inv();
  const K ui2 = ui * ui;
  const K ui3 = ui2 * ui;
  const K ui4 = ui2 * ui2;
  const K ui6 = ui3 * ui3;
  Weierstrass<K> o;
  o.a1 = (e.a1 + n(2) * s) * ui;
  o.a2 = (e.a2 - s * e.a1 + n(3) * r - s * s) * ui2;
  o.a3 = (e.a3 + r * e.a1 + n(2) * t) * ui3;
  o.a4 = (e.a4 - s * e.a3 + n(2) * r * e.a2 - (t + r * s) * e.a1 + n(3) * r * r - n(2) * s * t) * ui4;
  o.a6 = (e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - t * e.a3 - t * t - r * t * e.a1) * ui6;
  return o;
}

/// Transform to a1 = a3 = 0 (odd characteristic).
template <class K>
Transform<K> square_completing_transform(const Weierstrass<K>& e) {
  if (e.characteristic() == 2) fail(ErrorCode::kUnsupported, "completing the square needs odd characteristic");
  const K half = e.a1.from_int(2).inv();
  const K s = -(e.a1 * half);
  const K t = -(e.a3 * half);
  return {e.a1.one_like(), e.a1.zero_like(), s, t};
}

/// Transform to y^2 = x^3 + A x + B (characteristic > 3).
template <class K>
Transform<K> short_form_transform(const Weierstrass<K>& e) {
  if (e.characteristic() == 2 || e.characteristic() == 3)
    fail(ErrorCode::kUnsupported, "short Weierstrass form needs characteristic > 3");
  const K b2 = e.a1 * e.a1 + e.a1.from_int(4) * e.a2;
  const K r = -(b2 * e.a1.from_int(12).inv());
  const K half = e.a1.from_int(2).inv();
  const K s = -(e.a1 * half);
  const K t = -((e.a3 + r * e.a1) * half);
  return {e.a1.one_like(), r, s, t};
}

template <class K>
std::string weierstrass_text(const Weierstrass<K>& e) {
  std::string out = "[";
  const auto c = e.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += c[i].to_string();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Curves over F_q(t)

using Curve = Weierstrass<RatFn>;
using CurveInvariants = Invariants<RatFn>;
using CurveTransform = Transform<RatFn>;

/// Build a curve from [a1, a2, a3, a4, a6]; fails with kSingularCurve when Delta = 0.
Curve make_curve(const std::array<RatFn, 5>& a);
CurveInvariants invariants(const Curve& c);
Curve complete_square(const Curve& c, CurveTransform* tr = nullptr);
FiniteField constant_field(const Curve& c);
/// Fails with kUnsupported unless p > 3.
void require_analysis_characteristic(const Curve& c);

struct LocalModel {
  Place place;
  Curve model;
  CurveTransform transform;  // from the input model
  int vdisc = 0;
  std::optional<int> vc4;    // empty when c4 = 0
  std::optional<int> vj;     // empty when j = 0
};

LocalModel minimal_model_at(const Curve& c, const Place& v);

/// Finite bad places in order, then infinity if bad there.
std::vector<Place> bad_places(const Curve& c);
/// Finite places that need checking: factors of Delta and of coefficient denominators.
std::vector<Place> candidate_places(const Curve& c);

/// Reduction of a v-integral model at v.
Weierstrass<Residue> reduce_model(const Curve& model, const Place& v);
/// The same reduction over a table-backed copy of the residue field.
Weierstrass<Fe> reduce_model_table(const Curve& model, const Place& v, const FiniteField& table);

}  // namespace vchow::curve
