#pragma once
// Dense univariate polynomials over a coefficient ring R.
//
// R is any value type with zero_like(), one_like(), from_int(), is_zero(),
// characteristic(), to_string(), ==, +, -, * and unary minus. Operations that
// divide by a leading coefficient additionally need R::inv(); divmod_monic
// works over any ring.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vchow/error.hpp"

namespace vchow {

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(R zero) : zero_(zero.zero_like()) {}
  Poly(R zero, std::vector<R> coeffs) : zero_(zero.zero_like()), c_(std::move(coeffs)) { trim(); }

  static Poly constant(R c) { return Poly(c, std::vector<R>{c}); }
  static Poly monomial(R c, size_t k) {
    std::vector<R> v(k + 1, c.zero_like());
    v[k] = c;
    return Poly(c, std::move(v));
  }
  /// The polynomial x over the ring of `like`.
  static Poly x(R like) { return monomial(like.one_like(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == zero_.one_like(); }
  bool is_constant() const { return c_.size() <= 1; }
  const R& lc() const {
    if (c_.empty()) fail(ErrorCode::kInvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
  }
  R coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  std::span<const R> coeffs() const { return c_; }
  const R& zero_coeff() const { return zero_; }
  uint32_t characteristic() const { return zero_.characteristic(); }

  Poly zero_like() const { return Poly(zero_); }
  Poly one_like() const { return constant(zero_.one_like()); }
  Poly from_int(int64_t n) const { return constant(zero_.from_int(n)); }

  void set_coeff(size_t i, R v) {
    if (i >= c_.size()) c_.resize(i + 1, zero_);
    c_[i] = std::move(v);
    trim();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& s = a.c_.size() >= b.c_.size() ? b : a;
    for (size_t i = 0; i < s.c_.size(); ++i) r.c_[i] = r.c_[i] + s.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), a.zero_);
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(a.zero_, std::move(r));
  }
  friend Poly operator*(const Poly& a, const R& s) {
    if (s.is_zero()) return Poly(a.zero_);
    Poly r = a;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  friend Poly operator*(const R& s, const Poly& a) { return a * s; }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply by x^k.
  Poly shift(size_t k) const {
    if (is_zero()) return *this;
    std::vector<R> v(k, zero_);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(zero_, std::move(v));
  }
  /// Keep terms of degree < k.
  Poly truncate(size_t k) const {
    if (c_.size() <= k) return *this;
    return Poly(zero_, std::vector<R>(c_.begin(), c_.begin() + k));
  }

  R eval(const R& x) const {
    R acc = zero_;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(zero_);
    std::vector<R> v;
    v.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * zero_.from_int(static_cast<int64_t>(i)));
    return Poly(zero_, std::move(v));
  }

  Poly pow(uint64_t e) const {
    Poly result = one_like();
    Poly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Substitute a polynomial for the variable.
  Poly compose(const Poly& g) const {
    Poly acc(zero_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
    return acc;
  }

  /// Division by a polynomial with leading coefficient 1; works over rings.
  friend std::pair<Poly, Poly> divmod_monic(const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
    if (!(g.lc() == g.zero_.one_like())) fail(ErrorCode::kInvalidArgument, "divisor is not monic");
    return f.divmod_by_lead(g, g.zero_.one_like());
  }

  /// Euclidean division over a field.
  friend std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
    return f.divmod_by_lead(g, g.lc().inv());
  }
  friend Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
  friend Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * lc().inv();
  }

  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  struct Xgcd {
    Poly g, s, t;  // g = s*a + t*b, g monic (or zero)
  };
  friend Xgcd xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = a.one_like(), s1 = a.zero_like();
    Poly t0 = a.zero_like(), t1 = a.one_like();
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      Poly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R inv = r0.lc().inv();
    return {r0 * inv, s0 * inv, t0 * inv};
  }

  /// this^e mod m over a field; exponent given as a sequence of bits, high first.
  template <class BigExp>
  Poly powmod(const BigExp& e, const Poly& m) const {
    Poly result = one_like() % m;
    Poly base = *this % m;
    BigExp k = e;
    while (k > 0) {
      if ((k & 1) != 0) result = (result * base) % m;
      k >>= 1;
      if (k > 0) base = (base * base) % m;
    }
    return result;
  }

  std::string to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::string c = c_[k].to_string();
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      std::string term;
      if (k == 0) {
        term = c;
      } else if (c == "1") {
        term = mono;
      } else if (c == "-1") {
        term = "-" + mono;
      } else if (c.find_first_of("+-/", 1) != std::string::npos) {
        term = "(" + c + ")*" + mono;
      } else {
        term = c + "*" + mono;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::pair<Poly, Poly> divmod_by_lead(const Poly& g, const R& lead_inv) const {
    if (degree() < g.degree()) return {Poly(zero_), *this};
    std::vector<R> r = c_;
    const size_t dg = g.c_.size() - 1;
    std::vector<R> q(c_.size() - dg, zero_);
    for (size_t i = c_.size(); i-- > dg;) {
      if (r[i].is_zero()) continue;
      R coef = r[i] * lead_inv;
      q[i - dg] = coef;
      for (size_t j = 0; j <= dg; ++j) r[i - dg + j] = r[i - dg + j] - coef * g.c_[j];
    }
    r.resize(dg);
    return {Poly(zero_, std::move(q)), Poly(zero_, std::move(r))};
  }

  R zero_{};
  std::vector<R> c_;
};

}  // namespace vchow
