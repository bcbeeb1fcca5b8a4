#pragma once
// The polynomial ring F_q[t] and its factorization.

#include <optional>
#include <utility>
#include <vector>

#include "vchow/gf/field.hpp"
#include "vchow/poly.hpp"

namespace vchow::funcfield {

using gf::BigInt;
using gf::Fe;
using gf::FiniteField;
using FqPoly = Poly<Fe>;

struct Factor {
  FqPoly poly;  // monic irreducible
  int multiplicity = 0;
};

struct Factorization {
  Fe unit;  // leading coefficient of the input
  std::vector<Factor> factors;
};

FqPoly poly_from_ints(const FiniteField& field, std::initializer_list<int64_t> coeffs_low_first);
FqPoly poly_from_index(const FiniteField& field, uint64_t index, int length);
/// t, over the given constant field.
FqPoly variable(const FiniteField& field);

/// Degree first, then coefficients from the top down by element index.
bool poly_less(const FqPoly& a, const FqPoly& b);

/// Factor f != 0 into monic irreducibles, ordered by poly_less.
Factorization factor(const FqPoly& f);

/// Square-free decomposition: pairs (square-free monic part, multiplicity).
std::vector<std::pair<FqPoly, int>> squarefree_decomposition(const FqPoly& f);
/// Distinct-degree split of a monic square-free polynomial.
std::vector<std::pair<FqPoly, int>> distinct_degree(const FqPoly& f);
/// Equal-degree split of a monic square-free product of irreducibles of degree d.
std::vector<FqPoly> equal_degree(const FqPoly& f, int d);

bool is_irreducible(const FqPoly& f);

/// Monic irreducible polynomials of degree d, in index order.
std::vector<FqPoly> monic_irreducibles(const FiniteField& field, int d);

/// Square root in F_q[t] when f is a square (odd characteristic only).
std::optional<FqPoly> poly_sqrt(const FqPoly& f);

/// Reversal t^deg f(1/t).
FqPoly reversed(const FqPoly& f);

/// Expand a factorization back into a polynomial.
FqPoly expand(const Factorization& fac);

}  // namespace vchow::funcfield
