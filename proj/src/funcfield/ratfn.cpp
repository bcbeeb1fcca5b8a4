#include "vchow/funcfield/ratfn.hpp"

namespace vchow::funcfield {

std::string poly_text(const FqPoly& f) { return f.to_string("t"); }

RatFn::RatFn(FqPoly num) : num_(std::move(num)), den_(num_.one_like()) {}

RatFn::RatFn(FqPoly num, FqPoly den) {
  if (den.is_zero()) fail(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  *this = reduced(std::move(num), std::move(den));
}

RatFn RatFn::reduced(FqPoly num, FqPoly den) {
  if (num.is_zero()) return RatFn(num.zero_like(), num.one_like(), Raw{});
  if (den.degree() > 0) {
    FqPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = num / g;
      den = den / g;
    }
  }
  const Fe lead = den.lc();
  if (!lead.is_one()) {
    const Fe inv = lead.inv();
    num = num * inv;
    den = den * inv;
  }
  return RatFn(std::move(num), std::move(den), Raw{});
}

Fe RatFn::constant_value() const {
  if (!is_constant()) fail(ErrorCode::kInvalidArgument, "rational function is not constant");
  return num_.coeff(0);
}

RatFn RatFn::inv() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero in F_q(t)");
  return reduced(den_, num_);
}

RatFn RatFn::pow(int64_t e) const {
  if (e < 0) return inv().pow(-e);
  const auto u = static_cast<uint64_t>(e);
  return RatFn(num_.pow(u), den_.pow(u), Raw{});
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFn::reduced(a.num_ + b.num_, a.den_);
  return RatFn::reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_, RatFn::Raw{}); }

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return a.zero_like();
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
  FqPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  FqPoly g1 = gcd(an, bd);
  if (g1.degree() > 0) {
    an = an / g1;
    bd = bd / g1;
  }
  FqPoly g2 = gcd(bn, ad);
  if (g2.degree() > 0) {
    bn = bn / g2;
    ad = ad / g2;
  }
  return RatFn::reduced(an * bn, ad * bd);
}

namespace {

bool atomic(const std::string& s) { return s.find_first_of("+-*/", 1) == std::string::npos && s[0] != '-'; }

}  // namespace

std::string RatFn::to_string() const {
  if (is_polynomial()) return poly_text(num_);
  std::string n = poly_text(num_);
  std::string d = poly_text(den_);
  if (n.find_first_of("+-", 1) != std::string::npos) n = "(" + n + ")";
  if (!atomic(d)) d = "(" + d + ")";
  return n + "/" + d;
}

RatFn invert_variable(const RatFn& x) {
  if (x.is_zero()) return x;
  const int dn = x.num().degree(), dd = x.den().degree();
  FqPoly n = reversed(x.num()), d = reversed(x.den());
  if (dd >= dn)
    n = n.shift(static_cast<size_t>(dd - dn));
  else
    d = d.shift(static_cast<size_t>(dn - dd));
  return RatFn(std::move(n), std::move(d));
}

std::optional<RatFn> ratfn_sqrt(const RatFn& x) {
  if (x.is_zero()) return x;
  // num/den = (num*den)/den^2 with num, den coprime.
  auto r = poly_sqrt(x.num() * x.den());
  if (!r) return std::nullopt;
  return RatFn(*r, x.den());
}

}  // namespace vchow::funcfield
