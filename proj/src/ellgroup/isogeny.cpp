#include "vchow/ellgroup/isogeny.hpp"

#include <algorithm>

namespace vchow::ellgroup {

using funcfield::BiPoly;
using funcfield::FqPoly;
using funcfield::rational_roots;
using funcfield::ratfn_less;
using funcfield::ratfn_sqrt;

void check_degree(const Curve& c, unsigned l) {
  curve::require_analysis_characteristic(c);
  if (l < 2 || !gf::is_prime(l)) fail(ErrorCode::kInvalidArgument, "l = " + std::to_string(l) + " is not prime");
  if (l == c.characteristic()) fail(ErrorCode::kUnsupported, "l equals the characteristic");
  if (l > kMaxIsogenyDegree)
    fail(ErrorCode::kBoundExceeded, "l = " + std::to_string(l) + " exceeds the bound " + std::to_string(kMaxIsogenyDegree));
}

int rank_from_count(uint64_t count, unsigned l) {
  if (count == 1) return 0;
  if (count == l) return 1;
  if (count == uint64_t{l} * l) return 2;
  fail(ErrorCode::kInternal, "l-torsion has " + std::to_string(count) + " points, not a power of l");
}

RatPoly division_poly(const Curve& c, unsigned l) {
  check_degree(c, l);
  return division_poly_of(c, l);
}

namespace {

bool divides(const RatPoly& h, const RatPoly& f) { return (f % h).is_zero(); }

bool poly_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) == b.coeff(i)) continue;
    return ratfn_less(a.coeff(i), b.coeff(i));
  }
  return false;
}

RatPoly linear(const RatFn& root) {
  return RatPoly(root, {-root, root.one_like()});
}

// Integral model E' = E scaled by u = 1/d, so that x' = d^2 x.
struct IntegralModel {
  Curve model;
  RatFn d;
};

IntegralModel integral_model(const Curve& c) {
  FqPoly d = FqPoly::constant(curve::constant_field(c).one());
  for (const RatFn& a : c.coeffs()) {
    if (a.is_zero()) continue;
    d = d / gcd(d, a.den()) * a.den();
  }
  const RatFn dd(d);
  const RatFn z = dd.zero_like();
  return {curve::apply_transform(c, curve::CurveTransform{dd.inv(), z, z, z}), dd};
}

}  // namespace

std::string kernel_problem(const Curve& c, const RatPoly& kernel, unsigned l) {
  if (kernel.is_zero()) return "kernel polynomial is zero";
  const RatPoly h = kernel.monic();
  const int want = l == 2 ? 1 : static_cast<int>((l - 1) / 2);
  if (h.degree() != want) return "kernel polynomial must have degree " + std::to_string(want);
  if (!divides(h, division_poly_of(c, l))) return "kernel polynomial does not divide the division polynomial";
  if (l > 3 && !kernel_is_stable(c, h)) return "kernel polynomial is not stable under doubling";
  return "";
}

Curve velu_quotient(const Curve& c, const RatPoly& kernel, unsigned l) {
  check_degree(c, l);
  const std::string why = kernel_problem(c, kernel, l);
  if (!why.empty()) fail(ErrorCode::kInvalidArgument, "invalid kernel: " + why);
  return curve::make_curve(velu_codomain(c, kernel.monic(), l).coeffs());
}

RatPoly kernel_from_point(const Curve& c, const Point<RatFn>& p, unsigned l) {
  if (p.infinite || !scalar_mul(c, p, l).infinite) fail(ErrorCode::kInvalidArgument, "point does not have order l");
  const RatFn one = c.a1.one_like();
  RatPoly h = RatPoly::constant(one);
  if (l == 2) return linear(p.x);
  Point<RatFn> q = p;
  for (unsigned k = 1; k <= (l - 1) / 2; ++k) {
    h = h * linear(q.x);
    q = add(c, q, p);
  }
  return h;
}

RationalTorsion rational_l_torsion(const Curve& c, unsigned l) {
  check_degree(c, l);
  RationalTorsion out;
  const RatPoly cubic = two_division_cubic(c);
  const RatFn half = c.a1.from_int(2).inv();
  if (l == 2) {
    for (const RatFn& x : rational_roots(cubic)) out.points.push_back(Point<RatFn>::affine(x, -(c.a1 * x + c.a3) * half));
  } else {
    for (const RatFn& x : rational_roots(division_poly_of(c, l))) {
      const RatFn v = cubic.eval(x);
      if (v.is_zero()) fail(ErrorCode::kInternal, "odd torsion point with y = 0");
      if (auto r = ratfn_sqrt(v)) {
        const RatFn b = -(c.a1 * x + c.a3);
        out.points.push_back(Point<RatFn>::affine(x, (b + *r) * half));
        out.points.push_back(Point<RatFn>::affine(x, (b - *r) * half));
      }
    }
  }
  for (const auto& pt : out.points) {
    if (!on_curve(c, pt) || !scalar_mul(c, pt, l).infinite) fail(ErrorCode::kInternal, "torsion point check failed");
  }
  out.rank = rank_from_count(out.points.size() + 1, l);
  return out;
}

namespace {

// Degree-(l-1)/2 factors of the division polynomial through pi-adic lifting on
// an integral model; kernels are mapped back to the input coordinates.
std::pair<std::vector<RatPoly>, funcfield::FactorSearch> factor_search(const Curve& c, unsigned l) {
  const IntegralModel im = integral_model(c);
  const RatPoly psi = division_poly_of(im.model, l).monic();
  std::vector<FqPoly> coeffs;
  for (const RatFn& a : psi.coeffs()) {
    if (!a.is_polynomial()) fail(ErrorCode::kInternal, "division polynomial of an integral model is not integral");
    coeffs.push_back(a.num());
  }
  const BiPoly f(FqPoly(curve::constant_field(c).zero()), std::move(coeffs));
  const int k = static_cast<int>((l - 1) / 2);
  funcfield::FactorSearch fs = funcfield::monic_factors_of_degree(f, k);
  std::vector<RatPoly> out;
  const RatFn d2 = im.d * im.d;
  for (const BiPoly& h : fs.factors) {
    // h(x') with x' = d^2 x, made monic in x.
    std::vector<RatFn> hc;
    for (int i = 0; i <= h.degree(); ++i) hc.push_back(RatFn(h.coeff(i)) * d2.pow(i - k));
    out.emplace_back(c.a1, std::move(hc));
  }
  return {out, fs};
}

}  // namespace

IsogenySearch find_rational_isogenies(const Curve& c, unsigned l, const std::vector<RatPoly>& user_kernels) {
  check_degree(c, l);
  IsogenySearch out;
  std::vector<std::pair<RatPoly, std::string>> candidates;
  if (l == 2) {
    for (const RatFn& x : rational_roots(two_division_cubic(c))) candidates.emplace_back(linear(x), "2-torsion");
    out.complete = true;
  } else if (l == 3) {
    for (const RatFn& x : rational_roots(division_poly_of(c, l))) candidates.emplace_back(linear(x), "root");
    out.complete = true;
  } else {
    for (const auto& pt : rational_l_torsion(c, l).points) candidates.emplace_back(kernel_from_point(c, pt, l), "torsion point");
    auto [found, fs] = factor_search(c, l);
    for (auto& h : found) candidates.emplace_back(std::move(h), "factor search");
    out.complete = fs.complete;
    if (!fs.complete) out.note = fs.note;
  }
  for (const RatPoly& h : user_kernels) {
    if (h.is_zero()) fail(ErrorCode::kInvalidArgument, "invalid kernel: zero polynomial");
    const std::string why = kernel_problem(c, h, l);
    if (!why.empty()) fail(ErrorCode::kInvalidArgument, "invalid kernel " + h.to_string("x") + ": " + why);
    candidates.emplace_back(h.monic(), "user");
  }
  for (auto& [h, source] : candidates) {
    const RatPoly hm = h.monic();
    const bool seen = std::any_of(out.isogenies.begin(), out.isogenies.end(),
                                  [&](const IsogenyData& d) { return d.kernel_poly == hm; });
    if (seen) continue;
    if (!kernel_problem(c, hm, l).empty()) continue;
    IsogenyData d;
    d.kernel_poly = hm;
    d.codomain = curve::make_curve(velu_codomain(c, hm, l).coeffs());
    d.degree = l;
    d.source = source;
    out.isogenies.push_back(std::move(d));
  }
  std::stable_sort(out.isogenies.begin(), out.isogenies.end(),
                   [](const IsogenyData& a, const IsogenyData& b) { return poly_less(a.kernel_poly, b.kernel_poly); });
  return out;
}

}  // namespace vchow::ellgroup
