#pragma once
// Curve documents and the expression grammar
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' uint)?
//   base   := uint | 't' | '(' expr ')' | '-' factor
//
// plus 'g' (field generator) when n > 1, and 'x' in kernel polynomials.
//
// A document is a list of `key = value` statements separated by ';' or
// newlines, with '#' starting a comment. Keys: p, n, modulus (a polynomial in
// g, optional), a = [a1, a2, a3, a4, a6].

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vchow/curve/curve.hpp"
#include "vchow/funcfield/roots.hpp"

namespace vchow::io {

using curve::Curve;
using funcfield::Place;
using funcfield::RatFn;
using funcfield::RatPoly;
using gf::FiniteField;

inline constexpr uint64_t kMaxExponent = 4096;

struct CurveSpec {
  uint32_t p = 0;
  unsigned n = 1;
  std::optional<std::vector<int64_t>> modulus;  // low degree first
  std::array<std::string, 5> a;                  // canonical text of a1..a6
};

struct ParsedCurve {
  CurveSpec spec;
  FiniteField field;
  Curve curve;
};

ParsedCurve parse_curve(std::string_view text);
ParsedCurve load_curve_file(const std::string& path);

RatFn parse_ratfn(std::string_view text, const FiniteField& field);
/// A monic irreducible polynomial in t, or "inf".
Place parse_place(std::string_view text, const FiniteField& field);
/// A polynomial in x with coefficients in F_q(t).
RatPoly parse_kernel(std::string_view text, const FiniteField& field);

/// Factored display of a rational function, e.g. "t^4*(t+1)^2*(t-1)^2".
std::string factored_text(const RatFn& x);

}  // namespace vchow::io
