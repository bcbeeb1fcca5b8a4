#include "vchow/funcfield/hensel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace vchow::funcfield {

namespace {

using RPoly = Poly<Residue>;

RPoly reduce_poly(const BiPoly& f, const ResidueField& rf) {
  std::vector<Residue> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(rf.reduce(a));
  return RPoly(rf.zero(), std::move(c));
}

RPoly change_ring(const RPoly& f, const ResidueField& rf) {
  std::vector<Residue> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(rf.reduce(a.rep()));
  return RPoly(rf.zero(), std::move(c));
}

BiPoly to_bipoly(const RPoly& f, const FqPoly& zero) {
  std::vector<FqPoly> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(a.rep());
  return BiPoly(zero, std::move(c));
}

FqPoly power(const FqPoly& pi, int e) { return pi.pow(static_cast<uint64_t>(e)); }

// One quadratic step: f = g*h mod m, s*g + t*h = 1 mod m, h monic; all inputs
// already coerced into the ring modulo m^2.
void lift_step(const RPoly& f, RPoly& g, RPoly& h, RPoly& s, RPoly& t) {
  const RPoly e = f - g * h;
  auto [q, r] = divmod_monic(s * e, h);
  RPoly g2 = g + t * e + q * g;
  RPoly h2 = h + r;
  const RPoly b = s * g2 + t * h2 - g2.one_like();
  auto [c, d] = divmod_monic(s * b, h2);
  s = s - d;
  t = t - t * b - c * g2;
  g = std::move(g2);
  h = std::move(h2);
}

// Two-factor lift of f = g*h from pi to pi^precision.
std::pair<RPoly, RPoly> lift_pair(const BiPoly& f, RPoly g, RPoly h, const FqPoly& pi, int precision) {
  auto x = xgcd(g, h);
  if (!x.g.is_one()) fail(ErrorCode::kInternal, "Hensel lifting needs coprime local factors");
  RPoly s = x.s, t = x.t;
  int e = 1;
  while (e < precision) {
    e = std::min(2 * e, precision);
    const ResidueField ring(power(pi, e));
    g = change_ring(g, ring);
    h = change_ring(h, ring);
    s = change_ring(s, ring);
    t = change_ring(t, ring);
    lift_step(reduce_poly(f, ring), g, h, s, t);
  }
  return {g, h};
}

// Number of index subsets with the given degree sum, saturating at cap + 1.
uint64_t count_subsets(const std::vector<int>& degs, int k, uint64_t cap) {
  std::vector<uint64_t> ways(k + 1, 0);
  ways[0] = 1;
  for (int d : degs) {
    for (int s = k; s >= d; --s) ways[s] = std::min<uint64_t>(cap + 1, ways[s] + ways[s - d]);
  }
  return ways[k];
}

struct LocalData {
  FqPoly pi;
  std::vector<RPoly> factors;  // monic over F_q[t]/pi
  uint64_t subsets = 0;
};

std::optional<LocalData> factor_locally(const BiPoly& f, const FqPoly& pi, int k, uint64_t cap) {
  const ResidueField rf(pi);
  FiniteField table;
  try {
    table = rf.table_field();
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<Fe> c;
  for (const auto& a : f.coeffs()) c.push_back(rf.to_fe(rf.reduce(a), table));
  const FqPoly fl(table.zero(), std::move(c));
  if (fl.degree() != f.degree()) return std::nullopt;
  if (gcd(fl, fl.derivative()).degree() > 0) return std::nullopt;
  const Factorization fac = factor(fl);
  LocalData out;
  out.pi = pi;
  std::vector<int> degs;
  for (const auto& fc : fac.factors) {
    std::vector<Residue> rc;
    for (const auto& a : fc.poly.coeffs()) rc.push_back(rf.from_fe(a));
    out.factors.emplace_back(rf.zero(), std::move(rc));
    degs.push_back(fc.poly.degree());
  }
  out.subsets = count_subsets(degs, k, cap);
  return out;
}

int deg_or_minus(const FqPoly& p) { return p.is_zero() ? -1 : p.degree(); }

}  // namespace

int coefficient_degree_bound(const BiPoly& f, int i) {
  // max_j deg(c_j) / (n - j) as a fraction num/den.
  const int n = f.degree();
  int64_t num = 0, den = 1;
  for (int j = 0; j < n; ++j) {
    const int d = deg_or_minus(f.coeff(j));
    if (d < 0) continue;
    if (int64_t(d) * den > num * (n - j)) {
      num = d;
      den = n - j;
    }
  }
  return static_cast<int>((num * i) / den);
}

std::vector<RPoly> hensel_lift(const BiPoly& f, const std::vector<RPoly>& local, const FqPoly& pi,
                               int precision) {
  std::vector<RPoly> out;
  if (local.empty()) return out;
  if (precision <= 1) return local;
  BiPoly rest = f;
  for (size_t i = 0; i + 1 < local.size(); ++i) {
    RPoly tail = local[i + 1];
    for (size_t j = i + 2; j < local.size(); ++j) tail = tail * local[j];
    auto [g, h] = lift_pair(rest, local[i], tail, pi, precision);
    out.push_back(g);
    rest = to_bipoly(h, f.zero_coeff());
  }
  out.push_back(reduce_poly(rest, ResidueField(power(pi, precision))));
  return out;
}

FactorSearch monic_factors_of_degree(const BiPoly& f, int k, uint64_t subset_cap) {
  FactorSearch result;
  const int n = f.degree();
  if (n < 1 || !f.lc().is_one()) fail(ErrorCode::kInvalidArgument, "factor search needs a monic polynomial");
  if (k < 1 || k > n) {
    result.complete = true;
    return result;
  }
  if (k == n) {
    result.factors.push_back(f);
    result.complete = true;
    return result;
  }
  const FiniteField fq = f.zero_coeff().zero_coeff().field();

  // Choose a prime of small degree where f stays squarefree, preferring few
  // recombination candidates.
  std::optional<LocalData> best;
  int tried = 0;
  for (int d = 1; d <= 6 && !(best && best->subsets <= 64); ++d) {
    BigInt order = 1;
    for (int i = 0; i < d; ++i) order *= fq.order();
    if (order > BigInt(1) << 16) break;
    for (const FqPoly& pi : monic_irreducibles(fq, d)) {
      auto loc = factor_locally(f, pi, k, subset_cap);
      if (!loc) continue;
      ++tried;
      if (!best || loc->subsets < best->subsets) best = std::move(loc);
      if (best->subsets <= 1 || tried >= 6) break;
    }
    if (best && tried >= 6) break;
  }
  if (!best) {
    result.note = "no small prime keeps the polynomial squarefree";
    return result;
  }
  result.prime = poly_text(best->pi);
  if (best->subsets == 0) {
    result.complete = true;
    return result;
  }
  if (best->subsets > subset_cap) {
    result.note = "local recombination exceeds the subset cap";
    return result;
  }

  const int bound = coefficient_degree_bound(f, k);
  const int precision = bound / best->pi.degree() + 1;
  const ResidueField ring(power(best->pi, precision));
  std::vector<RPoly> lifted = hensel_lift(f, best->factors, best->pi, precision);

  std::vector<int> degs;
  for (const auto& g : lifted) degs.push_back(g.degree());
  const FqPoly tzero = f.zero_coeff();

  // Depth-first enumeration of subsets with degree sum k.
  std::vector<size_t> chosen;
  std::function<void(size_t, int, const RPoly&)> walk = [&](size_t start, int sum, const RPoly& prod) {
    if (sum == k) {
      BiPoly h = to_bipoly(prod, tzero);
      for (int i = 1; i <= k; ++i) {
        if (deg_or_minus(h.coeff(k - i)) > coefficient_degree_bound(f, i)) return;
      }
      if (!divmod_monic(f, h).second.is_zero()) return;
      result.factors.push_back(std::move(h));
      return;
    }
    for (size_t i = start; i < lifted.size(); ++i) {
      if (sum + degs[i] > k) continue;
      walk(i + 1, sum + degs[i], prod * lifted[i]);
    }
  };
  walk(0, 0, RPoly::constant(ring.one()));

  std::sort(result.factors.begin(), result.factors.end(), [](const BiPoly& a, const BiPoly& b) {
    for (int i = a.degree(); i >= 0; --i) {
      const FqPoly& x = a.coeff(i);
      const FqPoly& y = b.coeff(i);
      if (x == y) continue;
      return poly_less(x, y);
    }
    return false;
  });
  result.complete = true;
  return result;
}

}  // namespace vchow::funcfield
