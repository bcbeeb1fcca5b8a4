#pragma once
// Monic factors of prescribed degree of polynomials over F_q[t].
//
// The input is a monic polynomial in x with coefficients in F_q[t],
// squarefree over F_q(t). Any monic factor over F_q(t) then has coefficients
// in F_q[t] of bounded degree. The search factors the input modulo a finite
// prime pi, lifts the local factorization pi-adically, and recombines local
// factors whose degrees add up to the target.

#include <cstdint>
#include <string>
#include <vector>

#include "vchow/funcfield/place.hpp"

namespace vchow::funcfield {

/// Polynomials in x over F_q[t].
using BiPoly = Poly<FqPoly>;

struct FactorSearch {
  std::vector<BiPoly> factors;  // monic, sorted
  bool complete = false;
  std::string note;             // reason when incomplete
  std::string prime;            // prime used for lifting
};

inline constexpr uint64_t kDefaultSubsetCap = 2'000'000;

/// floor(i * B) where B = max_j deg_t(c_j) / (n - j) bounds deg_t of every root;
/// the coefficient of x^(k-i) in a monic factor of degree k has degree <= floor(i * B).
int coefficient_degree_bound(const BiPoly& f, int i);

FactorSearch monic_factors_of_degree(const BiPoly& f, int k, uint64_t subset_cap = kDefaultSubsetCap);

/// Lift f = prod g_i (mod pi), g_i monic and pairwise coprime, to a
/// factorization modulo pi^precision.
std::vector<Poly<Residue>> hensel_lift(const BiPoly& f, const std::vector<Poly<Residue>>& local,
                                       const FqPoly& pi, int precision);

}  // namespace vchow::funcfield
