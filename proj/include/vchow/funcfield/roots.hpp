#pragma once
// Roots in F_q(t) of polynomials with coefficients in F_q(t).

#include <cstdint>
#include <optional>
#include <vector>

#include "vchow/funcfield/hensel.hpp"

namespace vchow::funcfield {

using RatPoly = Poly<RatFn>;

bool ratfn_less(const RatFn& a, const RatFn& b);

/// p-th root in F_q(t), when it exists.
std::optional<RatFn> ratfn_pth_root(const RatFn& x);

/// Monic integral form: roots of f are the roots of `poly` divided by `scale`.
struct IntegralMonic {
  BiPoly poly;
  FqPoly scale;
};
IntegralMonic integral_monic(const RatPoly& f);

/// Distinct roots of a nonzero polynomial, sorted.
std::vector<RatFn> rational_roots(const RatPoly& f);

/// Independent route through the rational root theorem: enumerates divisors of
/// the constant term of the integral monic form. nullopt when more than `cap`
/// candidates would be needed.
std::optional<std::vector<RatFn>> rational_roots_divisor_search(const RatPoly& f, uint64_t cap);

}  // namespace vchow::funcfield
