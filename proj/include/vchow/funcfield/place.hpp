#pragma once
// Places of F_q(t), valuations, residue fields and leading coefficients.
//
// The place at infinity is handled through the chart t -> 1/t: every local
// computation at infinity is the same computation at (t) after substitution,
// so the uniformizer there is s = 1/t.

#include <memory>
#include <optional>
#include <string>

#include "vchow/funcfield/ratfn.hpp"

namespace vchow::funcfield {

class Residue;

/// F_q[t]/(m) with polynomial-representative arithmetic. A field when m is
/// irreducible; Hensel lifting also uses it with m = pi^k.
class ResidueField {
 public:
  ResidueField() = default;
  explicit ResidueField(FqPoly modulus);

  const FqPoly& modulus() const { return *mod_; }
  int degree() const { return mod_->degree(); }
  FiniteField base() const { return mod_->zero_coeff().field(); }
  BigInt order() const;

  Residue reduce(const FqPoly& f) const;
  Residue from_base(Fe c) const;
  Residue zero() const;
  Residue one() const;

  /// Table-backed copy of this field: F_q itself for degree 1, else the tower
  /// F_q[t]/(pi). Fails when the order exceeds the table limit.
  FiniteField table_field() const;
  Fe to_fe(const Residue& r, const FiniteField& table) const;
  Residue from_fe(Fe x) const;

  friend bool operator==(const ResidueField& a, const ResidueField& b) { return *a.mod_ == *b.mod_; }

 private:
  std::shared_ptr<const FqPoly> mod_;
  friend class Residue;
};

class Residue {
 public:
  Residue() = default;
  Residue(ResidueField field, FqPoly rep);

  const ResidueField& field() const { return field_; }
  const FqPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }
  uint32_t characteristic() const { return rep_.characteristic(); }
  Residue zero_like() const { return field_.zero(); }
  Residue one_like() const { return field_.one(); }
  Residue from_int(int64_t n) const { return field_.reduce(rep_.from_int(n)); }

  Residue inv() const;
  Residue pow(const BigInt& e) const;
  /// x is an l-th power in the residue field; x must be nonzero.
  bool is_lth_power(uint64_t l) const;
  bool is_square() const { return is_lth_power(2); }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a);
  friend Residue operator/(const Residue& a, const Residue& b) { return a * b.inv(); }
  friend bool operator==(const Residue& a, const Residue& b) { return a.rep_ == b.rep_; }

  /// Element of F_q for degree-one fields, else "rep mod (pi)".
  std::string to_string() const;

 private:
  ResidueField field_;
  FqPoly rep_;
};

class Place {
 public:
  Place() = default;
  /// Finite place given by a monic irreducible polynomial (checked).
  static Place finite(const FqPoly& pi);
  static Place infinity(const FiniteField& constants);

  bool is_infinite() const { return infinite_; }
  /// Generator of the place in its chart: pi for finite places, t for infinity.
  const FqPoly& chart_pi() const { return pi_; }
  int degree() const { return pi_.degree(); }
  FiniteField constants() const { return pi_.zero_coeff().field(); }
  /// pi, or 1/t at infinity.
  RatFn uniformizer() const;
  /// Move x into the chart where this place is (chart_pi()).
  RatFn to_chart(const RatFn& x) const { return infinite_ ? invert_variable(x) : x; }
  RatFn from_chart(const RatFn& x) const { return infinite_ ? invert_variable(x) : x; }
  const ResidueField& residue_field() const { return residue_; }
  BigInt residue_order() const { return residue_.order(); }

  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite_ == b.infinite_ && a.pi_ == b.pi_;
  }
  /// Finite places by degree then coefficients; infinity last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  bool infinite_ = false;
  FqPoly pi_;
  ResidueField residue_;
};

struct LocalLeading {
  Place place;
  int valuation = 0;
  Residue leading;  // nonzero
};

/// v-adic valuation; x must be nonzero.
int valuation(const RatFn& x, const Place& v);
/// Valuation with +infinity for zero.
std::optional<int> valuation_or_inf(const RatFn& x, const Place& v);
/// Valuation of a polynomial at a finite prime.
int poly_valuation(const FqPoly& f, const FqPoly& pi);

LocalLeading leading_at(const RatFn& x, const Place& v);
/// Image of a v-integral x in the residue field.
Residue reduce_at(const RatFn& x, const Place& v);

/// Parse-free constructor helpers for tests and tools.
Place place_from_poly(const FqPoly& pi);

}  // namespace vchow::funcfield
