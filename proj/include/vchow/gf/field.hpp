#pragma once
// Finite fields F_{p^n} with table-driven arithmetic.
//
// An element is stored as an index in [0, q): the base-p digits of the index are
// its coordinates over F_p. Towers (an extension of an extension) nest this
// encoding, so addition is always digit-wise mod p and the image of an element
// of a subfield keeps its index. Multiplication goes through discrete
// log/exp tables built once per field; extension addition uses Zech logarithms.
//
// Field descriptors are interned and never destroyed, so element handles may
// hold a raw descriptor pointer and be copied freely across threads.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vchow::gf {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
struct FieldData;
}

class FiniteField;

/// Upper limit on the order of a table-backed field.
inline constexpr uint64_t kMaxFieldOrder = uint64_t{1} << 21;
/// Default cap on enumerations (point counting, brute-force oracles).
inline constexpr uint64_t kDefaultEnumerationBound = 100000;

/// Effective enumeration bound: VCHOW_ENUM_BOUND if set, else the default.
uint64_t enumeration_bound();

class Fe {
 public:
  Fe() = default;
  Fe(const detail::FieldData* field, uint32_t index) : f_(field), v_(index) {}

  FiniteField field() const;
  const detail::FieldData* data() const { return f_; }
  uint32_t index() const { return v_; }
  bool valid() const { return f_ != nullptr; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  uint32_t characteristic() const;

  Fe zero_like() const { return Fe(f_, 0); }
  Fe one_like() const { return Fe(f_, 1); }
  Fe from_int(int64_t n) const;

  Fe inv() const;
  Fe pow(int64_t e) const;
  Fe pow(const BigInt& e) const;
  Fe frobenius() const;  // x^p
  std::optional<Fe> sqrt() const;
  bool is_square() const;
  /// Coordinates over F_p, low digit first, length equal to the absolute degree.
  std::vector<uint32_t> coeffs() const;
  /// Discrete log to the table generator; x must be nonzero.
  uint32_t log() const;

  std::string to_string() const;

  friend Fe operator+(Fe a, Fe b);
  friend Fe operator-(Fe a, Fe b);
  friend Fe operator*(Fe a, Fe b);
  friend Fe operator/(Fe a, Fe b) { return a * b.inv(); }
  friend Fe operator-(Fe a);
  Fe& operator+=(Fe b) { return *this = *this + b; }
  Fe& operator-=(Fe b) { return *this = *this - b; }
  Fe& operator*=(Fe b) { return *this = *this * b; }
  Fe& operator/=(Fe b) { return *this = *this / b; }
  friend bool operator==(Fe a, Fe b) { return a.v_ == b.v_ && a.f_ == b.f_; }
  friend std::strong_ordering operator<=>(Fe a, Fe b) { return a.v_ <=> b.v_; }

 private:
  const detail::FieldData* f_ = nullptr;
  uint32_t v_ = 0;
};

class FiniteField {
 public:
  /// F_p.
  static FiniteField prime(uint32_t p);
  /// F_{p^n} with the first monic irreducible modulus of degree n in index order
  /// (coefficient of x^{n-1} most significant).
  static FiniteField make(uint32_t p, unsigned n);
  /// F_p[g]/(modulus); modulus is monic, coefficients over F_p low degree first.
  static FiniteField with_modulus(uint32_t p, std::span<const uint32_t> modulus);
  /// base[z]/(modulus); modulus is monic irreducible over base, low degree first.
  static FiniteField extension(const FiniteField& base, std::span<const Fe> modulus,
                               std::string symbol = "z");

  FiniteField() = default;
  explicit FiniteField(const detail::FieldData* d) : d_(d) {}

  uint32_t characteristic() const;
  /// Degree over the prime field.
  unsigned degree() const;
  /// Degree over the immediate base field (equal to degree() for F_p-extensions).
  unsigned relative_degree() const;
  uint64_t order() const;
  /// Base field of a tower, or the field itself for F_p.
  FiniteField base() const;
  /// Modulus over the base field (monic, low degree first); {0,1} for F_p.
  std::vector<Fe> modulus() const;
  const std::string& symbol() const;

  Fe zero() const { return Fe(d_, 0); }
  Fe one() const { return Fe(d_, 1); }
  Fe from_int(int64_t n) const;
  Fe element(uint64_t index) const;
  /// The class of the adjoined variable (index = base order), or 1 in F_p.
  Fe generator() const;
  /// The table generator of the multiplicative group.
  Fe primitive() const;
  /// Build an element from coordinates over the immediate base field.
  Fe from_base_coeffs(std::span<const Fe> coeffs) const;
  std::vector<Fe> to_base_coeffs(Fe x) const;
  /// Embed an element of a subfield in the tower (index preserving).
  Fe embed(Fe x) const;

  /// All q elements, zero first. Fails when q exceeds the enumeration bound.
  std::vector<Fe> enumerate(uint64_t bound = enumeration_bound()) const;

  /// True iff x is an l-th power: x^((q-1)/gcd(l,q-1)) == 1. x must be nonzero.
  bool is_lth_power(Fe x, uint64_t l) const;

  const detail::FieldData* data() const { return d_; }
  bool valid() const { return d_ != nullptr; }
  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.d_ == b.d_; }

 private:
  const detail::FieldData* d_ = nullptr;
};

/// Free form of FiniteField::is_lth_power.
bool is_lth_power(Fe x, uint64_t l);

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod);

}  // namespace vchow::gf
