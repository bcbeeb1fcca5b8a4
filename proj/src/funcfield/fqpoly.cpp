#include "vchow/funcfield/fqpoly.hpp"

#include <algorithm>

namespace vchow::funcfield {

FqPoly poly_from_ints(const FiniteField& field, std::initializer_list<int64_t> coeffs_low_first) {
  std::vector<Fe> c;
  for (int64_t v : coeffs_low_first) c.push_back(field.from_int(v));
  return FqPoly(field.zero(), std::move(c));
}

FqPoly poly_from_index(const FiniteField& field, uint64_t index, int length) {
  std::vector<Fe> c;
  const uint64_t q = field.order();
  for (int i = 0; i < length; ++i) {
    c.push_back(field.element(index % q));
    index /= q;
  }
  return FqPoly(field.zero(), std::move(c));
}

FqPoly variable(const FiniteField& field) { return FqPoly::x(field.zero()); }

bool poly_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ai = a.coeff(i).index(), bi = b.coeff(i).index();
    if (ai != bi) return ai < bi;
  }
  return false;
}

FqPoly reversed(const FqPoly& f) {
  std::vector<Fe> c(f.coeffs().begin(), f.coeffs().end());
  std::reverse(c.begin(), c.end());
  return FqPoly(f.zero_coeff(), std::move(c));
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
FqPoly pth_root(const FqPoly& f) {
  const uint32_t p = f.characteristic();
  const FiniteField field = f.zero_coeff().field();
  const int64_t e = static_cast<int64_t>(field.order() / p);
  std::vector<Fe> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i).pow(e));
  return FqPoly(f.zero_coeff(), std::move(c));
}

}  // namespace

std::vector<std::pair<FqPoly, int>> squarefree_decomposition(const FqPoly& f_in) {
  if (f_in.is_zero()) fail(ErrorCode::kInvalidArgument, "square-free decomposition of zero");
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly f = f_in.monic();
  if (f.degree() == 0) return out;
  const int p = static_cast<int>(f.characteristic());
  FqPoly c = gcd(f, f.derivative());
  FqPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

std::vector<std::pair<FqPoly, int>> distinct_degree(const FqPoly& f_in) {
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly f = f_in.monic();
  const FqPoly x = FqPoly::x(f.zero_coeff());
  const uint64_t q = f.zero_coeff().field().order();
  FqPoly h = x % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = h.powmod(BigInt(q), f);
    FqPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<FqPoly> equal_degree(const FqPoly& f_in, int d) {
  FqPoly f = f_in.monic();
  if (f.degree() <= d) return {f};
  const FiniteField field = f.zero_coeff().field();
  const uint64_t q = field.order();
  const uint32_t p = field.characteristic();
  BigInt qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  std::vector<FqPoly> pending{f}, done;
  // Deterministic trial elements: index j read as base-q digits, starting at x.
  uint64_t j = q;
  while (!pending.empty()) {
    FqPoly g = pending.back();
    pending.pop_back();
    if (g.degree() == d) {
      done.push_back(g);
      continue;
    }
    for (;; ++j) {
      FqPoly a = poly_from_index(field, j, g.degree()) % g;
      if (a.degree() < 1) continue;
      FqPoly b;
      if (p == 2) {
        // Absolute trace to F_2 of F_{q^d}: sum of a^(2^i) for i < n*d.
        const int steps = static_cast<int>(field.degree()) * d;
        FqPoly acc = a, term = a;
        for (int i = 1; i < steps; ++i) {
          term = (term * term) % g;
          acc = acc + term;
        }
        b = acc;
      } else {
        b = a.powmod(BigInt((qd - 1) / 2), g) - g.one_like();
      }
      FqPoly h = gcd(b, g);
      if (h.degree() > 0 && h.degree() < g.degree()) {
        pending.push_back(h);
        pending.push_back(g / h);
        ++j;
        break;
      }
    }
  }
  std::sort(done.begin(), done.end(), poly_less);
  return done;
}

Factorization factor(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "factorization of the zero polynomial");
  Factorization out{f.lc(), {}};
  for (auto& [sf, mult] : squarefree_decomposition(f)) {
    for (auto& [part, d] : distinct_degree(sf)) {
      for (auto& irr : equal_degree(part, d)) out.factors.push_back({irr, mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

FqPoly expand(const Factorization& fac) {
  FqPoly r = FqPoly::constant(fac.unit);
  for (const auto& f : fac.factors) r = r * f.poly.pow(static_cast<uint64_t>(f.multiplicity));
  return r;
}

bool is_irreducible(const FqPoly& f_in) {
  if (f_in.degree() < 1) return false;
  if (f_in.degree() == 1) return true;
  FqPoly f = f_in.monic();
  const FqPoly x = FqPoly::x(f.zero_coeff());
  const uint64_t q = f.zero_coeff().field().order();
  if (gcd(f, f.derivative()).degree() > 0) return false;
  FqPoly h = x % f;
  for (int i = 1; i <= f.degree() / 2; ++i) {
    h = h.powmod(BigInt(q), f);
    if (gcd(h - x, f).degree() > 0) return false;
  }
  return true;
}

std::vector<FqPoly> monic_irreducibles(const FiniteField& field, int d) {
  std::vector<FqPoly> out;
  BigInt count = 1;
  for (int i = 0; i < d; ++i) count *= field.order();
  if (count > BigInt(gf::enumeration_bound()) * 64)
    fail(ErrorCode::kBoundExceeded, "too many monic polynomials of degree " + std::to_string(d));
  const uint64_t n = static_cast<uint64_t>(count);
  for (uint64_t idx = 0; idx < n; ++idx) {
    FqPoly f = poly_from_index(field, idx, d) + FqPoly::monomial(field.one(), static_cast<size_t>(d));
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

std::optional<FqPoly> poly_sqrt(const FqPoly& f) {
  if (f.characteristic() == 2) fail(ErrorCode::kUnsupported, "polynomial square roots need odd characteristic");
  if (f.is_zero()) return f;
  if (f.degree() % 2 != 0) return std::nullopt;
  auto top = f.lc().sqrt();
  if (!top) return std::nullopt;
  const int m = f.degree() / 2;
  std::vector<Fe> g(m + 1, f.zero_coeff());
  g[m] = *top;
  const Fe two_top_inv = (f.zero_coeff().from_int(2) * *top).inv();
  for (int k = 1; k <= m; ++k) {
    const int target = 2 * m - k;
    Fe known = f.zero_coeff();
    for (int i = m - k + 1; i <= m; ++i) {
      const int jj = target - i;
      if (jj > m - k && jj <= m) known += g[i] * g[jj];
    }
    g[m - k] = (f.coeff(target) - known) * two_top_inv;
  }
  FqPoly root(f.zero_coeff(), std::move(g));
  if (!(root * root == f)) return std::nullopt;
  return root;
}

}  // namespace vchow::funcfield
