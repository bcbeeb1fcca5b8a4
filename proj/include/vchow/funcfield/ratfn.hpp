#pragma once
// Elements of the rational function field F_q(t) in canonical reduced form.

#include <string>

#include "vchow/funcfield/fqpoly.hpp"

namespace vchow::funcfield {

class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(FqPoly num);
  /// Reduces to canonical form; den must be nonzero.
  RatFn(FqPoly num, FqPoly den);

  static RatFn constant(Fe c) { return RatFn(FqPoly::constant(c)); }
  static RatFn t(const FiniteField& field) { return RatFn(variable(field)); }

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  FiniteField field() const { return num_.zero_coeff().field(); }
  uint32_t characteristic() const { return num_.characteristic(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// True when the value lies in the constant field F_q.
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  Fe constant_value() const;

  RatFn zero_like() const { return RatFn(num_.zero_like()); }
  RatFn one_like() const { return RatFn(num_.one_like()); }
  RatFn from_int(int64_t n) const { return RatFn(num_.from_int(n)); }

  RatFn inv() const;
  RatFn pow(int64_t e) const;

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inv(); }
  friend RatFn operator-(const RatFn& a);
  RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
  RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
  RatFn& operator*=(const RatFn& b) { return *this = *this * b; }
  RatFn& operator/=(const RatFn& b) { return *this = *this / b; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Canonical text in the input grammar (variable t).
  std::string to_string() const;

 private:
  struct Raw {};
  RatFn(FqPoly num, FqPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFn reduced(FqPoly num, FqPoly den);

  FqPoly num_;
  FqPoly den_;
};

/// Substitute t -> 1/t (an involution). Used to move the place at infinity to (t).
RatFn invert_variable(const RatFn& x);

/// Square root in F_q(t) if x is a square (odd characteristic).
std::optional<RatFn> ratfn_sqrt(const RatFn& x);

std::string poly_text(const FqPoly& f);

}  // namespace vchow::funcfield
