#include "vchow/funcfield/roots.hpp"

#include <algorithm>

namespace vchow::funcfield {

bool ratfn_less(const RatFn& a, const RatFn& b) {
  if (!(a.num() == b.num())) return poly_less(a.num(), b.num());
  return poly_less(a.den(), b.den());
}

namespace {

std::optional<FqPoly> poly_pth_root(const FqPoly& f) {
  const uint32_t p = f.characteristic();
  const FiniteField k = f.zero_coeff().field();
  // c^(1/p) = c^(q/p) in F_q.
  const uint64_t e = k.order() / p;
  std::vector<Fe> c;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % p != 0) {
      if (!f.coeff(i).is_zero()) return std::nullopt;
      continue;
    }
    c.push_back(f.coeff(i).pow(static_cast<int64_t>(e)));
  }
  return FqPoly(f.zero_coeff(), std::move(c));
}

void sort_unique(std::vector<RatFn>& v) {
  std::sort(v.begin(), v.end(), ratfn_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

RatPoly make_monic(const RatPoly& f) { return f.monic(); }

std::vector<RatFn> roots_of_separable_squarefree(const RatPoly& f) {
  std::vector<RatFn> out;
  if (f.degree() < 1) return out;
  const IntegralMonic im = integral_monic(f);
  const FactorSearch fs = monic_factors_of_degree(im.poly, 1);
  if (!fs.complete) fail(ErrorCode::kInternal, "root search incomplete: " + fs.note);
  const RatFn scale(im.scale);
  for (const auto& h : fs.factors) out.push_back(RatFn(-h.coeff(0)) / scale);
  return out;
}

}  // namespace

std::optional<RatFn> ratfn_pth_root(const RatFn& x) {
  auto n = poly_pth_root(x.num());
  if (!n) return std::nullopt;
  auto d = poly_pth_root(x.den());
  if (!d) return std::nullopt;
  return RatFn(*n, *d);
}

IntegralMonic integral_monic(const RatPoly& f_in) {
  if (f_in.is_zero()) fail(ErrorCode::kInvalidArgument, "integral form of the zero polynomial");
  const FiniteField k = f_in.lc().field();
  // Clear denominators.
  FqPoly den = FqPoly::constant(k.one());
  for (const auto& c : f_in.coeffs()) {
    if (c.is_zero()) continue;
    den = den / gcd(den, c.den()) * c.den();
  }
  std::vector<FqPoly> a;
  for (const auto& c : f_in.coeffs()) a.push_back((RatFn(den) * c).num());
  const int n = static_cast<int>(a.size()) - 1;
  const FqPoly lead = a.back();
  // G(y) = L^(n-1) F(y / L) = sum a_i L^(n-1-i) y^i.
  std::vector<FqPoly> g(a.size(), FqPoly(k.zero()));
  FqPoly lp = FqPoly::constant(k.one());
  for (int i = n - 1; i >= 0; --i) {
    g[i] = a[i] * lp;
    lp = lp * lead;
  }
  g[n] = FqPoly::constant(k.one());
  return IntegralMonic{BiPoly(FqPoly(k.zero()), std::move(g)), lead};
}

std::vector<RatFn> rational_roots(const RatPoly& f_in) {
  if (f_in.is_zero()) fail(ErrorCode::kInvalidArgument, "roots of the zero polynomial");
  std::vector<RatFn> out;
  if (f_in.degree() < 1) return out;
  RatPoly f = make_monic(f_in);
  const RatPoly df = f.derivative();
  if (df.is_zero()) {
    // f(y) = h(y^p): roots are p-th roots of roots of h.
    const uint32_t p = f.characteristic();
    std::vector<RatFn> hc;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) hc.push_back(f.coeff(i));
    for (const RatFn& s : rational_roots(RatPoly(f.lc().zero_like(), std::move(hc)))) {
      if (auto r = ratfn_pth_root(s)) out.push_back(*r);
    }
    sort_unique(out);
    return out;
  }
  const RatPoly g = gcd(f, df);
  if (g.degree() > 0) {
    out = roots_of_separable_squarefree(f / g);
    for (const RatFn& r : rational_roots(g)) out.push_back(r);
  } else {
    out = roots_of_separable_squarefree(f);
  }
  sort_unique(out);
  return out;
}

namespace {

// Monic divisors of a nonzero polynomial, nullopt past the cap.
std::optional<std::vector<FqPoly>> monic_divisors(const FqPoly& f, uint64_t cap) {
  const Factorization fac = factor(f);
  uint64_t count = 1;
  for (const auto& fc : fac.factors) {
    count *= static_cast<uint64_t>(fc.multiplicity + 1);
    if (count > cap) return std::nullopt;
  }
  std::vector<FqPoly> divs{FqPoly::constant(f.zero_coeff().one_like())};
  for (const auto& fc : fac.factors) {
    std::vector<FqPoly> next;
    for (const auto& d : divs) {
      FqPoly m = d;
      for (int e = 0; e <= fc.multiplicity; ++e) {
        next.push_back(m);
        m = m * fc.poly;
      }
    }
    divs = std::move(next);
  }
  return divs;
}

}  // namespace

std::optional<std::vector<RatFn>> rational_roots_divisor_search(const RatPoly& f_in, uint64_t cap) {
  if (f_in.is_zero()) fail(ErrorCode::kInvalidArgument, "roots of the zero polynomial");
  std::vector<RatFn> out;
  if (f_in.degree() < 1) return out;
  const IntegralMonic im = integral_monic(f_in);
  BiPoly g = im.poly;
  const FiniteField k = f_in.lc().field();
  const RatFn scale(im.scale);
  // Strip the root 0.
  size_t shift = 0;
  while (g.coeff(shift).is_zero()) ++shift;
  if (shift > 0) {
    out.push_back(RatFn(FqPoly(k.zero())));
    g = BiPoly(g.zero_coeff(), std::vector<FqPoly>(g.coeffs().begin() + static_cast<long>(shift), g.coeffs().end()));
  }
  if (g.degree() >= 1) {
    auto divs = monic_divisors(g.coeff(0), cap);
    if (!divs) return std::nullopt;
    const uint64_t units = k.order() - 1;
    if (static_cast<uint64_t>(divs->size()) * units > cap) return std::nullopt;
    const auto elements = k.enumerate();
    for (const auto& d : *divs) {
      for (size_t u = 1; u < elements.size(); ++u) {
        const FqPoly cand = d * elements[u];
        if (g.eval(cand).is_zero()) out.push_back(RatFn(cand) / scale);
      }
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace vchow::funcfield
