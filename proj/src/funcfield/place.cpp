#include "vchow/funcfield/place.hpp"

namespace vchow::funcfield {

// ---------------------------------------------------------------------------
// ResidueField / Residue

ResidueField::ResidueField(FqPoly modulus) : mod_(std::make_shared<const FqPoly>(std::move(modulus))) {}

BigInt ResidueField::order() const {
  BigInt r = 1;
  for (int i = 0; i < degree(); ++i) r *= base().order();
  return r;
}

Residue ResidueField::reduce(const FqPoly& f) const { return Residue(*this, divmod_monic(f, *mod_).second); }
Residue ResidueField::from_base(Fe c) const { return Residue(*this, FqPoly::constant(c)); }
Residue ResidueField::zero() const { return Residue(*this, mod_->zero_like()); }
Residue ResidueField::one() const { return Residue(*this, mod_->one_like()); }

FiniteField ResidueField::table_field() const {
  if (degree() == 1) return base();
  std::vector<Fe> m(mod_->coeffs().begin(), mod_->coeffs().end());
  return FiniteField::extension(base(), m, "t");
}

Fe ResidueField::to_fe(const Residue& r, const FiniteField& table) const {
  std::vector<Fe> c(r.rep().coeffs().begin(), r.rep().coeffs().end());
  if (degree() == 1) return c.empty() ? table.zero() : c[0];
  return table.from_base_coeffs(c);
}

Residue ResidueField::from_fe(Fe x) const {
  if (degree() == 1) return from_base(x);
  auto c = x.field().to_base_coeffs(x);
  return Residue(*this, FqPoly(mod_->zero_coeff(), std::move(c)));
}

Residue::Residue(ResidueField field, FqPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {}

Residue operator+(const Residue& a, const Residue& b) { return Residue(a.field_, a.rep_ + b.rep_); }
Residue operator-(const Residue& a, const Residue& b) { return Residue(a.field_, a.rep_ - b.rep_); }
Residue operator-(const Residue& a) { return Residue(a.field_, -a.rep_); }
Residue operator*(const Residue& a, const Residue& b) {
  return Residue(a.field_, divmod_monic(a.rep_ * b.rep_, a.field_.modulus()).second);
}

Residue Residue::inv() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero in a residue field");
  auto x = xgcd(rep_, field_.modulus());
  return Residue(field_, x.s % field_.modulus());
}

Residue Residue::pow(const BigInt& e) const {
  if (e < 0) return inv().pow(-e);
  return Residue(field_, rep_.powmod(e, field_.modulus()));
}

bool Residue::is_lth_power(uint64_t l) const {
  if (is_zero()) fail(ErrorCode::kInvalidArgument, "l-th power test of zero");
  const BigInt m = field_.order() - 1;
  if (m % l != 0) return true;  // l prime: gcd(l, Q-1) is 1 or l
  return pow(m / l).is_one();
}

std::string Residue::to_string() const {
  if (field_.degree() == 1) return rep_.is_zero() ? "0" : rep_.coeff(0).to_string();
  return "(" + poly_text(rep_) + ") mod (" + poly_text(field_.modulus()) + ")";
}

// ---------------------------------------------------------------------------
// Place

Place Place::finite(const FqPoly& pi) {
  if (pi.degree() < 1 || !pi.lc().is_one()) fail(ErrorCode::kInvalidArgument, "place must be a monic polynomial of positive degree");
  if (!is_irreducible(pi)) fail(ErrorCode::kInvalidArgument, "place polynomial " + poly_text(pi) + " is not irreducible");
  Place p;
  p.infinite_ = false;
  p.pi_ = pi;
  p.residue_ = ResidueField(pi);
  return p;
}

Place Place::infinity(const FiniteField& constants) {
  Place p;
  p.infinite_ = true;
  p.pi_ = variable(constants);
  p.residue_ = ResidueField(p.pi_);
  return p;
}

Place place_from_poly(const FqPoly& pi) { return Place::finite(pi); }

RatFn Place::uniformizer() const {
  if (infinite_) return RatFn(pi_.one_like(), pi_);
  return RatFn(pi_);
}

std::string Place::to_string() const { return infinite_ ? "inf" : poly_text(pi_); }

bool operator<(const Place& a, const Place& b) {
  if (a.infinite_ != b.infinite_) return !a.infinite_;
  return poly_less(a.pi_, b.pi_);
}

// ---------------------------------------------------------------------------
// Valuations

int poly_valuation(const FqPoly& f, const FqPoly& pi) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "valuation of zero");
  int k = 0;
  FqPoly g = f;
  while (g.degree() >= pi.degree()) {
    auto [q, r] = divmod_monic(g, pi);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++k;
  }
  return k;
}

int valuation(const RatFn& x, const Place& v) {
  if (x.is_zero()) fail(ErrorCode::kInvalidArgument, "valuation of zero is +infinity");
  if (v.is_infinite()) return x.den().degree() - x.num().degree();
  return poly_valuation(x.num(), v.chart_pi()) - poly_valuation(x.den(), v.chart_pi());
}

std::optional<int> valuation_or_inf(const RatFn& x, const Place& v) {
  if (x.is_zero()) return std::nullopt;
  return valuation(x, v);
}

namespace {

// Strip pi^k from f, returning (k, f / pi^k).
std::pair<int, FqPoly> strip(const FqPoly& f, const FqPoly& pi) {
  int k = 0;
  FqPoly g = f;
  while (true) {
    auto [q, r] = divmod_monic(g, pi);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++k;
  }
  return {k, g};
}

}  // namespace

LocalLeading leading_at(const RatFn& x, const Place& v) {
  if (x.is_zero()) fail(ErrorCode::kInvalidArgument, "leading coefficient of zero");
  const RatFn y = v.to_chart(x);
  const FqPoly& pi = v.chart_pi();
  auto [kn, un] = strip(y.num(), pi);
  auto [kd, ud] = strip(y.den(), pi);
  const ResidueField& rf = v.residue_field();
  Residue lead = rf.reduce(un) * rf.reduce(ud).inv();
  return LocalLeading{v, kn - kd, lead};
}

Residue reduce_at(const RatFn& x, const Place& v) {
  const ResidueField& rf = v.residue_field();
  if (x.is_zero()) return rf.zero();
  const RatFn y = v.to_chart(x);
  const FqPoly& pi = v.chart_pi();
  auto [kn, un] = strip(y.num(), pi);
  auto [kd, ud] = strip(y.den(), pi);
  if (kn < kd) fail(ErrorCode::kInvalidArgument, "reduction of a non-integral element at " + v.to_string());
  if (kn > kd) return rf.zero();
  return rf.reduce(un) * rf.reduce(ud).inv();
}

}  // namespace vchow::funcfield
