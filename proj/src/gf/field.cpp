#include "vchow/gf/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "vchow/error.hpp"

namespace vchow::gf {

namespace detail {

inline constexpr uint32_t kNoLog = std::numeric_limits<uint32_t>::max();

struct FieldData {
  uint32_t p = 0;
  unsigned n = 1;        // degree over F_p
  unsigned rel_deg = 1;  // degree over base
  uint64_t q = 0;
  uint64_t base_q = 0;
  const FieldData* base = nullptr;  // null for a prime field
  std::vector<uint32_t> rel_modulus;
  std::string symbol;
  uint32_t prim = 0;
  std::vector<uint32_t> log, exp, zech;
};

}  // namespace detail

using detail::FieldData;
using detail::kNoLog;

namespace {

// ---------------------------------------------------------------------------
// Element-level primitives on raw indices.

inline uint32_t raw_mul(const FieldData* f, uint32_t a, uint32_t b) {
  if (a == 0 || b == 0) return 0;
  uint64_t s = uint64_t{f->log[a]} + f->log[b];
  const uint64_t m = f->q - 1;
  if (s >= m) s -= m;
  return f->exp[s];
}

inline uint32_t raw_add(const FieldData* f, uint32_t a, uint32_t b) {
  if (f->n == 1) {
    uint32_t s = a + b;
    return s >= f->p ? s - f->p : s;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const uint64_t m = f->q - 1;
  const uint64_t la = f->log[a];
  const uint64_t k = (f->log[b] + m - la) % m;
  const uint32_t z = f->zech[k];
  if (z == kNoLog) return 0;
  uint64_t r = la + z;
  if (r >= m) r -= m;
  return f->exp[r];
}

inline uint32_t raw_neg(const FieldData* f, uint32_t a) {
  if (a == 0) return 0;
  if (f->n == 1) return f->p - a;
  if (f->p == 2) return a;
  const uint64_t m = f->q - 1;
  uint64_t r = f->log[a] + m / 2;
  if (r >= m) r -= m;
  return f->exp[r];
}

// ---------------------------------------------------------------------------
// Small polynomial helpers over an already-built base field, used only while
// constructing extension fields.

using RawPoly = std::vector<uint32_t>;

void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RawPoly poly_mul(const FieldData* f, const RawPoly& a, const RawPoly& b) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = raw_add(f, r[i + j], raw_mul(f, a[i], b[j]));
  }
  trim(r);
  return r;
}

RawPoly poly_mod(const FieldData* f, RawPoly a, const RawPoly& m) {
  trim(a);
  const size_t dm = m.size() - 1;
  const uint32_t lead_inv = f->exp[(f->q - 1 - f->log[m.back()]) % (f->q - 1)];
  while (a.size() > dm) {
    const uint32_t c = raw_mul(f, a.back(), lead_inv);
    const size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i)
      a[shift + i] = raw_add(f, a[shift + i], raw_neg(f, raw_mul(f, c, m[i])));
    trim(a);
  }
  return a;
}

RawPoly poly_sub(const FieldData* f, RawPoly a, const RawPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = raw_add(f, a[i], raw_neg(f, b[i]));
  trim(a);
  return a;
}

RawPoly poly_gcd(const FieldData* f, RawPoly a, RawPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RawPoly poly_powmod(const FieldData* f, RawPoly a, uint64_t e, const RawPoly& m) {
  RawPoly result{1};
  a = poly_mod(f, a, m);
  while (e > 0) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, a), m);
    e >>= 1;
    if (e > 0) a = poly_mod(f, poly_mul(f, a, a), m);
  }
  return result;
}

// Ben-Or: m of degree d is irreducible iff gcd(x^{Q^i} - x, m) = 1 for i <= d/2.
bool is_irreducible_over(const FieldData* base, const RawPoly& m) {
  const size_t d = m.size() - 1;
  if (d == 1) return true;
  const RawPoly x{0, 1};
  RawPoly h = x;
  for (size_t i = 1; i <= d / 2; ++i) {
    h = poly_powmod(base, h, base->q, m);
    RawPoly g = poly_gcd(base, m, poly_sub(base, h, x));
    if (g.size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Table construction.

void build_prime_tables(FieldData& f) {
  const uint32_t p = f.p;
  f.log.assign(p, 0);
  f.exp.assign(p, 0);
  if (p == 2) {
    f.prim = 1;
    f.exp[0] = 1;
    f.log[1] = 0;
    return;
  }
  const auto factors = prime_factors(p - 1);
  uint32_t g = 2;
  for (;; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](uint64_t r) { return powmod(g, (p - 1) / r, p) != 1; });
    if (ok) break;
  }
  f.prim = g;
  uint64_t x = 1;
  for (uint32_t k = 0; k + 1 < p; ++k) {
    f.exp[k] = static_cast<uint32_t>(x);
    f.log[x] = k;
    x = x * g % p;
  }
}

struct SlowMul {
  const FieldData* base;
  unsigned d;
  RawPoly modulus;

  RawPoly decode(uint64_t idx) const {
    RawPoly c(d, 0);
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<uint32_t>(idx % base->q);
      idx /= base->q;
    }
    return c;
  }
  uint32_t encode(const RawPoly& c) const {
    uint64_t idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * base->q + c[i];
    return static_cast<uint32_t>(idx);
  }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return encode(poly_mod(base, poly_mul(base, decode(a), decode(b)), modulus));
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return r;
  }
};

void build_extension_tables(FieldData& f) {
  SlowMul sm{f.base, f.rel_deg, f.rel_modulus};
  const uint64_t m = f.q - 1;
  const auto factors = prime_factors(m);
  uint32_t g = 1;
  for (;; ++g) {
    if (g >= f.q) fail(ErrorCode::kInternal, "no primitive element found");
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](uint64_t r) { return sm.pow(g, m / r) != 1; });
    if (ok) break;
  }
  f.prim = g;
  f.log.assign(f.q, 0);
  f.exp.assign(f.q, 0);
  uint32_t x = 1;
  for (uint64_t k = 0; k < m; ++k) {
    f.exp[k] = x;
    f.log[x] = static_cast<uint32_t>(k);
    x = sm.mul(x, g);
  }
  f.zech.assign(m, kNoLog);
  for (uint64_t k = 0; k < m; ++k) {
    const uint32_t e = f.exp[k];
    const uint32_t one_plus = (e % f.p == f.p - 1) ? e - (f.p - 1) : e + 1;
    f.zech[k] = one_plus == 0 ? kNoLog : f.log[one_plus];
  }
}

// ---------------------------------------------------------------------------
// Interning.

struct Registry {
  std::mutex mu;
  std::map<uint32_t, std::unique_ptr<FieldData>> primes;
  std::map<std::tuple<const FieldData*, RawPoly, std::string>, std::unique_ptr<FieldData>> exts;
};

Registry& registry() {
  static Registry* r = new Registry();
  return *r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Free helpers.

uint64_t enumeration_bound() {
  const char* env = std::getenv("VCHOW_ENUM_BOUND");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBound;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod) {
  unsigned __int128 r = 1 % mod, b = base % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<uint64_t>(r);
}

// ---------------------------------------------------------------------------
// FiniteField.

FiniteField FiniteField::prime(uint32_t p) {
  if (!is_prime(p)) fail(ErrorCode::kInvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxFieldOrder) fail(ErrorCode::kBoundExceeded, "prime field too large for table arithmetic");
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.primes[p];
  if (!slot) {
    auto f = std::make_unique<FieldData>();
    f->p = p;
    f->q = p;
    f->base_q = p;
    build_prime_tables(*f);
    slot = std::move(f);
  }
  return FiniteField(slot.get());
}

FiniteField FiniteField::extension(const FiniteField& base, std::span<const Fe> modulus, std::string symbol) {
  if (!base.valid()) fail(ErrorCode::kInvalidArgument, "extension of an invalid field");
  RawPoly m;
  for (const Fe& c : modulus) {
    if (c.data() != base.data()) fail(ErrorCode::kInvalidArgument, "modulus coefficients not in the base field");
    m.push_back(c.index());
  }
  trim(m);
  if (m.size() < 2) fail(ErrorCode::kInvalidArgument, "extension modulus must have degree >= 1");
  if (m.back() != 1) fail(ErrorCode::kInvalidArgument, "extension modulus must be monic");
  const unsigned d = static_cast<unsigned>(m.size() - 1);
  BigInt order = 1;
  for (unsigned i = 0; i < d; ++i) order *= base.order();
  if (order > kMaxFieldOrder)
    fail(ErrorCode::kBoundExceeded, "field of order " + order.str() + " exceeds the table limit");
  const FieldData* b = base.data();
  if (!is_irreducible_over(b, m)) fail(ErrorCode::kInvalidArgument, "extension modulus is reducible");

  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_tuple(b, m, symbol);
  auto& slot = reg.exts[key];
  if (!slot) {
    auto f = std::make_unique<FieldData>();
    f->p = b->p;
    f->n = b->n * d;
    f->rel_deg = d;
    f->q = static_cast<uint64_t>(order);
    f->base_q = b->q;
    f->base = b;
    f->rel_modulus = m;
    f->symbol = std::move(symbol);
    build_extension_tables(*f);
    slot = std::move(f);
  }
  return FiniteField(slot.get());
}

FiniteField FiniteField::with_modulus(uint32_t p, std::span<const uint32_t> modulus) {
  FiniteField fp = prime(p);
  std::vector<Fe> m;
  for (uint32_t c : modulus) m.push_back(fp.from_int(c));
  return extension(fp, m, "g");
}

FiniteField FiniteField::make(uint32_t p, unsigned n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  FiniteField fp = prime(p);
  if (n == 1) return fp;
  BigInt order = 1;
  for (unsigned i = 0; i < n; ++i) order *= p;
  if (order > kMaxFieldOrder) fail(ErrorCode::kBoundExceeded, "field order exceeds the table limit");
  const uint64_t count = static_cast<uint64_t>(order);
  for (uint64_t idx = 0; idx < count; ++idx) {
    RawPoly m(n + 1, 0);
    uint64_t v = idx;
    for (unsigned i = 0; i < n; ++i) {
      m[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    m[n] = 1;
    if (m[0] == 0) continue;
    if (is_irreducible_over(fp.data(), m)) return with_modulus(p, m);
  }
  fail(ErrorCode::kInternal, "no irreducible polynomial found");
}

uint32_t FiniteField::characteristic() const { return d_->p; }
unsigned FiniteField::degree() const { return d_->n; }
unsigned FiniteField::relative_degree() const { return d_->rel_deg; }
uint64_t FiniteField::order() const { return d_->q; }
FiniteField FiniteField::base() const { return d_->base ? FiniteField(d_->base) : *this; }
const std::string& FiniteField::symbol() const { return d_->symbol; }

std::vector<Fe> FiniteField::modulus() const {
  if (!d_->base) return {zero(), one()};
  std::vector<Fe> out;
  for (uint32_t c : d_->rel_modulus) out.emplace_back(d_->base, c);
  return out;
}

Fe FiniteField::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(d_->p);
  if (r < 0) r += d_->p;
  return Fe(d_, static_cast<uint32_t>(r));
}

Fe FiniteField::element(uint64_t index) const {
  if (index >= d_->q) fail(ErrorCode::kInvalidArgument, "element index out of range");
  return Fe(d_, static_cast<uint32_t>(index));
}

Fe FiniteField::generator() const { return d_->base ? Fe(d_, static_cast<uint32_t>(d_->base_q)) : one(); }
Fe FiniteField::primitive() const { return Fe(d_, d_->prim); }

Fe FiniteField::from_base_coeffs(std::span<const Fe> coeffs) const {
  if (!d_->base) {
    if (coeffs.size() > 1) fail(ErrorCode::kInvalidArgument, "too many coordinates for a prime field");
    return coeffs.empty() ? zero() : Fe(d_, coeffs[0].index());
  }
  if (coeffs.size() > d_->rel_deg) fail(ErrorCode::kInvalidArgument, "too many coordinates");
  uint64_t idx = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].data() != d_->base) fail(ErrorCode::kInvalidArgument, "coordinate not in base field");
    idx = idx * d_->base_q + coeffs[i].index();
  }
  return Fe(d_, static_cast<uint32_t>(idx));
}

std::vector<Fe> FiniteField::to_base_coeffs(Fe x) const {
  if (!d_->base) return {x};
  std::vector<Fe> out;
  uint64_t idx = x.index();
  for (unsigned i = 0; i < d_->rel_deg; ++i) {
    out.emplace_back(d_->base, static_cast<uint32_t>(idx % d_->base_q));
    idx /= d_->base_q;
  }
  return out;
}

Fe FiniteField::embed(Fe x) const {
  for (const FieldData* f = d_; f != nullptr; f = f->base)
    if (f == x.data()) return Fe(d_, x.index());
  fail(ErrorCode::kInvalidArgument, "element is not in a subfield of this tower");
}

std::vector<Fe> FiniteField::enumerate(uint64_t bound) const {
  if (d_->q > bound)
    fail(ErrorCode::kBoundExceeded, "field of order " + std::to_string(d_->q) +
                                        " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<Fe> out;
  out.reserve(d_->q);
  for (uint64_t i = 0; i < d_->q; ++i) out.emplace_back(d_, static_cast<uint32_t>(i));
  return out;
}

bool FiniteField::is_lth_power(Fe x, uint64_t l) const {
  if (x.is_zero()) fail(ErrorCode::kInvalidArgument, "l-th power test of zero");
  const uint64_t m = d_->q - 1;
  const uint64_t g = std::gcd(l, m);
  if (g == 1) return true;
  return x.pow(static_cast<int64_t>(m / g)).is_one();
}

bool is_lth_power(Fe x, uint64_t l) { return x.field().is_lth_power(x, l); }

// ---------------------------------------------------------------------------
// Fe.

FiniteField Fe::field() const { return FiniteField(f_); }
uint32_t Fe::characteristic() const { return f_->p; }
Fe Fe::from_int(int64_t n) const { return FiniteField(f_).from_int(n); }

Fe operator+(Fe a, Fe b) { return Fe(a.f_, raw_add(a.f_, a.v_, b.v_)); }
Fe operator-(Fe a, Fe b) { return Fe(a.f_, raw_add(a.f_, a.v_, raw_neg(a.f_, b.v_))); }
Fe operator*(Fe a, Fe b) { return Fe(a.f_, raw_mul(a.f_, a.v_, b.v_)); }
Fe operator-(Fe a) { return Fe(a.f_, raw_neg(a.f_, a.v_)); }

Fe Fe::inv() const {
  if (v_ == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero in F_" + std::to_string(f_->q));
  const uint64_t m = f_->q - 1;
  return Fe(f_, f_->exp[(m - f_->log[v_]) % m]);
}

uint32_t Fe::log() const {
  if (v_ == 0) fail(ErrorCode::kDivisionByZero, "discrete log of zero");
  return f_->log[v_];
}

Fe Fe::pow(int64_t e) const {
  if (e == 0) return one_like();
  if (v_ == 0) {
    if (e < 0) fail(ErrorCode::kDivisionByZero, "negative power of zero");
    return *this;
  }
  const int64_t m = static_cast<int64_t>(f_->q - 1);
  int64_t r = e % m;
  if (r < 0) r += m;
  const unsigned __int128 k = static_cast<unsigned __int128>(f_->log[v_]) * static_cast<uint64_t>(r);
  return Fe(f_, f_->exp[static_cast<uint64_t>(k % static_cast<uint64_t>(m))]);
}

Fe Fe::pow(const BigInt& e) const {
  const BigInt m = f_->q - 1;
  BigInt r = e % m;
  if (r < 0) r += m;
  if (e == 0) return one_like();
  if (v_ == 0) {
    if (e < 0) fail(ErrorCode::kDivisionByZero, "negative power of zero");
    return *this;
  }
  if (r == 0) return one_like();
  return pow(static_cast<int64_t>(r));
}

Fe Fe::frobenius() const { return pow(static_cast<int64_t>(f_->p)); }

std::optional<Fe> Fe::sqrt() const {
  if (v_ == 0) return *this;
  const uint64_t m = f_->q - 1;
  const uint64_t l = f_->log[v_];
  if (f_->p == 2) return Fe(f_, f_->exp[static_cast<uint64_t>((unsigned __int128)l * (f_->q / 2) % m)]);
  if (l % 2 != 0) return std::nullopt;
  return Fe(f_, f_->exp[l / 2]);
}

bool Fe::is_square() const { return v_ == 0 || f_->p == 2 || f_->log[v_] % 2 == 0; }

std::vector<uint32_t> Fe::coeffs() const {
  std::vector<uint32_t> out(f_->n, 0);
  uint32_t idx = v_;
  for (unsigned i = 0; i < f_->n; ++i) {
    out[i] = idx % f_->p;
    idx /= f_->p;
  }
  return out;
}

namespace {

bool is_compound(const std::string& s) {
  return s.find_first_of("+-", 1) != std::string::npos;
}

}  // namespace

std::string Fe::to_string() const {
  if (f_->base == nullptr) {
    if (v_ > f_->p / 2) return "-" + std::to_string(f_->p - v_);
    return std::to_string(v_);
  }
  if (v_ == 0) return "0";
  const auto cs = FiniteField(f_).to_base_coeffs(*this);
  std::string out;
  for (size_t k = cs.size(); k-- > 0;) {
    if (cs[k].is_zero()) continue;
    std::string c = cs[k].to_string();
    std::string term;
    std::string mono = k == 0 ? "" : (k == 1 ? f_->symbol : f_->symbol + "^" + std::to_string(k));
    if (k == 0) {
      term = c;
    } else if (c == "1") {
      term = mono;
    } else if (c == "-1") {
      term = "-" + mono;
    } else if (is_compound(c)) {
      term = "(" + c + ")*" + mono;
    } else {
      term = c + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace vchow::gf
