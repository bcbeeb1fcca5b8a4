// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "vchow/ellgroup/isogeny.hpp"
#include "vchow/io/output.hpp"
#include "vchow/report/report.hpp"

using namespace vchow;
using curve::Curve;
using curve::Weierstrass;
using ellgroup::Point;
using funcfield::FqPoly;
using funcfield::Place;
using funcfield::RatFn;
using funcfield::RatPoly;
using gf::Fe;
using gf::FiniteField;
using testsupport::poly;

namespace {

constexpr double kLegendreSeconds = 5.0;
constexpr double kCurve11Seconds = 10.0;
constexpr double kSweepSeconds = 300.0;
constexpr int kGoodPlacesPerCurve = 24;
constexpr uint64_t kMaxGoodResidueOrder = 11 * 11 * 11;
constexpr int kSweepCurves = 150;

class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream o;
    o << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& f : failures_) o << "; failed: " << f;
    return o.str();
  }

 private:
  int total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const report::PlaceEntry* entry(const report::GlobalReport& r, const std::string& name) {
  for (const auto& e : r.places)
    if (e.info.place.to_string() == name) return &e;
  return nullptr;
}

Weierstrass<Fe> constant_curve(const FiniteField& k, std::array<int64_t, 5> a) {
  return {k.from_int(a[0]), k.from_int(a[1]), k.from_int(a[2]), k.from_int(a[3]), k.from_int(a[4])};
}

bool nonsingular(const Weierstrass<Fe>& e) { return !curve::invariants_of(e).disc.is_zero(); }

// ---------------------------------------------------------------------------

std::string legendre_end_to_end(Check& check) {
  const auto t0 = std::chrono::steady_clock::now();
  const Curve e = testsupport::legendre5();
  const auto r = report::build_report(e, 2);
  const double secs = seconds_since(t0);
  std::set<std::string> names;
  for (const auto& p : r.places) names.insert(p.info.place.to_string());
  check(names == std::set<std::string>{"t", "t-1", "t+1", "inf"} && r.places.size() == 4, "bad places");
  for (const auto& p : r.places) {
    check(p.info.rtype == localdim::ReductionType::kSplitMult, "split at " + p.info.place.to_string());
    check(p.dim.known() && p.dim.dim == 1, "dim 1 at " + p.info.place.to_string());
  }
  check(r.coinv == 2, "coinv 2");
  check(r.surjective, "surjective");
  check(r.ker && *r.ker == report::Range{2, 2}, "ker 2");
  check(r.coker && *r.coker == report::Range{0, 0}, "coker 0");
  check(secs < kLegendreSeconds, "runtime");
  std::ostringstream o;
  o << "F_5 Legendre curve, l = 2 (" << secs << " s)";
  return o.str();
}

std::string curve11_end_to_end(Check& check) {
  const auto t0 = std::chrono::steady_clock::now();
  const Curve e = testsupport::curve11();
  const auto k = curve::constant_field(e);
  const auto r = report::build_report(e, 5);
  const double secs = seconds_since(t0);
  const RatFn expected_disc = poly(k, {0, 0, 0, 0, 0, 1}) * poly(k, {1, 1}) * poly(k, {-1, 1});
  check(curve::invariants(e).disc == expected_disc, "disc = t^5(t+1)(t-1)");
  check(curve::minimal_model_at(e, Place::infinity(k)).vdisc == 5, "v_inf(disc_min) = 5");
  const std::map<std::string, int> dims{{"t", 1}, {"t-1", 0}, {"t+1", 0}, {"inf", 1}};
  check(r.places.size() == 4, "four bad places");
  for (const auto& [name, dim] : dims) {
    const auto* p = entry(r, name);
    check(p && p->info.rtype == localdim::ReductionType::kSplitMult, "split at " + name);
    check(p && p->dim.known() && p->dim.dim == dim, "dim at " + name);
  }
  check(r.modl.torsion_rank == 1, "torsion rank 1");
  check(r.coinv == 1, "coinv 1");
  check(io::sequence_text(r) == "0 -> Ker -> F_5^2 -> F_5 -> Coker -> 0", "sequence");
  check(r.ker && r.coker && r.ker->lo - r.coker->lo == 1 && r.ker->hi - r.coker->hi == 1, "ker - coker = 1");
  check(secs < kCurve11Seconds, "runtime");
  std::ostringstream o;
  o << "F_11 curve, l = 5 (" << secs << " s; ker " << r.ker->lo << ".." << r.ker->hi << ", coker " << r.coker->lo
    << ".." << r.coker->hi << ")";
  return o.str();
}

std::string tate_triples(Check& check) {
  auto at = [](const Curve& e, std::initializer_list<int64_t> pi) {
    return localdim::classify_reduction(e, Place::finite(funcfield::poly_from_ints(curve::constant_field(e), pi)));
  };
  auto j_leading = [](const localdim::ReductionInfo& info) {
    return funcfield::leading_at(*curve::invariants(info.model.model).j, info.place);
  };
  const Curve leg = testsupport::legendre5();
  const auto a = at(leg, {0, 1});
  check(a.model.vj == -4 && j_leading(a).leading.is_one(), "Legendre at t: v(j) = -4, leading 1");
  check(a.tate && a.tate->vq == 4 && localdim::tate_is_lth_power(a, 2), "Legendre at t: Tate parameter is a square");

  const Curve e = testsupport::curve11();
  const auto b = at(e, {0, 1});
  check(b.model.vj == -5 && (j_leading(b).leading + b.place.residue_field().one()).is_zero(), "F_11 at t: v(j) = -5, leading -1");
  check(b.tate && b.tate->vq == 5 && localdim::tate_is_lth_power(b, 5), "F_11 at t: Tate parameter is a 5th power");
  for (int64_t c : {1, -1}) {
    const auto x = at(e, {c, 1});
    check(x.model.vj == -1, "F_11 at t+c: v(j) = -1");
    check(x.tate && x.tate->vq == 1 && !localdim::tate_is_lth_power(x, 5), "F_11 at t+c: not a 5th power");
  }
  return "Tate parameter triples";
}

std::string good_places(Check& check) {
  std::mt19937_64 rng(20240601);
  int compared = 0;
  struct Case {
    Curve e;
    std::vector<unsigned> ls;
  };
  for (const Case& cs : {Case{testsupport::legendre5(), {2, 3}}, Case{testsupport::curve11(), {5, 2, 3}}}) {
    const FiniteField k = curve::constant_field(cs.e);
    std::vector<FqPoly> pool;
    for (int d = 1;; ++d) {
      uint64_t order = 1;
      for (int i = 0; i < d; ++i) order *= k.order();
      if (order > kMaxGoodResidueOrder) break;
      for (const auto& pi : funcfield::monic_irreducibles(k, d)) pool.push_back(pi);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    int used = 0;
    for (const auto& pi : pool) {
      if (used == kGoodPlacesPerCurve) break;
      const Place v = Place::finite(pi);
      const auto info = localdim::classify_reduction(cs.e, v);
      if (info.rtype != localdim::ReductionType::kGood) continue;
      ++used;
      const auto table = v.residue_field().table_field();
      const auto shape = testsupport::group_shape(curve::reduce_model_table(info.model.model, v, table));
      for (unsigned l : cs.ls) {
        const int oracle = testsupport::rank_from_shape(shape, l);
        const auto d = localdim::local_dim(cs.e, info, l);
        check(d.known() && d.dim == oracle, "local_dim at " + v.to_string() + " for l = " + std::to_string(l));
        // Same place through the division-polynomial count.
        setenv("VCHOW_ENUM_BOUND", "1", 1);
        const auto d2 = localdim::local_dim(cs.e, info, l);
        unsetenv("VCHOW_ENUM_BOUND");
        check(d2.known() && d2.dim == oracle, "division-polynomial count at " + v.to_string());
        ++compared;
      }
    }
    check(used >= 20, "at least 20 good places");
  }
  return "good places vs brute-force l-torsion rank (" + std::to_string(compared) + " comparisons)";
}

std::string oracle_suites(Check& check) {
  // (a) transformation law.
  {
    std::mt19937_64 rng(5);
    const Curve e = testsupport::curve11();
    const auto k = curve::constant_field(e);
    std::uniform_int_distribution<int64_t> c(0, 10), nz(1, 10);
    const auto inv = curve::invariants(e);
    int done = 0;
    while (done < 100) {
      const RatFn u = poly(k, {nz(rng), c(rng)}) / poly(k, {c(rng), 1});
      if (u.is_zero()) continue;
      const curve::CurveTransform tr{u, poly(k, {c(rng), c(rng)}), poly(k, {c(rng)}), poly(k, {c(rng), 0, c(rng)})};
      const auto inv2 = curve::invariants(curve::apply_transform(e, tr));
      check(inv2.disc == inv.disc * u.pow(-12) && *inv2.j == *inv.j, "(a) transformation law");
      ++done;
    }
  }
  // (b) Hasse bound, re-checked independently of the library's own check.
  {
    std::mt19937_64 rng(11);
    for (auto [p, n] : {std::pair{5u, 1u}, {7u, 1u}, {11u, 1u}, {13u, 1u}, {5u, 2u}, {7u, 2u}}) {
      const auto k = FiniteField::make(p, n);
      std::uniform_int_distribution<uint64_t> pick(0, k.order() - 1);
      for (int i = 0; i < 20; ++i) {
        Weierstrass<Fe> e{k.element(pick(rng)), k.element(pick(rng)), k.element(pick(rng)), k.element(pick(rng)),
                          k.element(pick(rng))};
        if (!nonsingular(e)) continue;
        const int64_t q = static_cast<int64_t>(k.order());
        const int64_t a = q + 1 - static_cast<int64_t>(ellgroup::count_points(e));
        check(a * a <= 4 * q, "(b) Hasse bound");
        check(ellgroup::count_points(e) == testsupport::brute_points(e).size(), "(b) count vs enumeration");
      }
    }
  }
  // (c) division-polynomial roots vs brute-force torsion.
  {
    int curves = 0;
    for (auto [p, a] : {std::pair{5u, std::array<int64_t, 5>{0, 0, 0, 1, 1}},
                        {7u, {1, 0, 1, 2, 3}},
                        {11u, {0, 1, 0, 3, 5}},
                        {13u, {1, 1, 0, 0, 2}},
                        {13u, {0, 0, 0, 1, 0}},
                        {7u, {0, 0, 0, 0, 1}}}) {
      const auto k = FiniteField::prime(p);
      const auto e = constant_curve(k, a);
      if (!nonsingular(e)) continue;
      ++curves;
      const auto e2 = constant_curve(FiniteField::make(p, 2), a);
      for (unsigned l : {2u, 3u, 5u}) {
        if (l == p) continue;
        const Poly<Fe> psi = ellgroup::division_poly_of(e, l);
        std::set<uint32_t> roots, torsion_x;
        for (const Fe& x : k.enumerate())
          if (psi.eval(x).is_zero()) roots.insert(x.index());
        for (const auto& pt : testsupport::brute_points(e2))
          if (!pt.infinite && ellgroup::scalar_mul(e2, pt, l).infinite && pt.x.index() < p) torsion_x.insert(pt.x.index());
        check(roots == torsion_x, "(c) division polynomial roots over F_" + std::to_string(p));
      }
    }
    check(curves >= 5, "(c) at least 5 curves");
  }
  // (d) isogenous curves have equal point counts at good places.
  {
    int specializations = 0;
    for (auto [e, l] : {std::pair{testsupport::legendre5(), 2u}, {testsupport::curve11(), 5u}}) {
      const auto search = ellgroup::find_rational_isogenies(e, l);
      check(!search.isogenies.empty(), "(d) isogeny found");
      const FiniteField k = curve::constant_field(e);
      for (const auto& iso : search.isogenies) {
        for (int d = 1; d <= 2; ++d) {
          for (const FqPoly& pi : funcfield::monic_irreducibles(k, d)) {
            const Place v = Place::finite(pi);
            const auto ma = curve::minimal_model_at(e, v);
            const auto mb = curve::minimal_model_at(iso.codomain, v);
            if (ma.vdisc != 0 || mb.vdisc != 0) continue;
            const auto table = v.residue_field().table_field();
            check(ellgroup::count_points(curve::reduce_model_table(ma.model, v, table)) ==
                      ellgroup::count_points(curve::reduce_model_table(mb.model, v, table)),
                  "(d) point counts at " + v.to_string());
            ++specializations;
          }
        }
      }
    }
    check(specializations >= 10, "(d) at least 10 specializations");
  }
  // (e) coinvariant table over every (case, chi_trivial) pair.
  {
    using modl::ModLCase;
    const std::map<std::pair<ModLCase, bool>, std::optional<int>> expected{
        {{ModLCase::kFullTorsion, true}, 2}, {{ModLCase::kFullTorsion, false}, 2},
        {{ModLCase::kSC, true}, 1},          {{ModLCase::kSC, false}, 1},
        {{ModLCase::kBprime, true}, 1},      {{ModLCase::kBprime, false}, 0},
        {{ModLCase::kB, true}, 1},           {{ModLCase::kB, false}, 1},
        {{ModLCase::kBorelOther, true}, std::nullopt},   {{ModLCase::kBorelOther, false}, std::nullopt},
        {{ModLCase::kNoBorelFound, true}, std::nullopt}, {{ModLCase::kNoBorelFound, false}, std::nullopt},
        {{ModLCase::kUndetermined, true}, std::nullopt}, {{ModLCase::kUndetermined, false}, std::nullopt},
    };
    for (const auto& [key, value] : expected)
      check(modl::coinvariant_table(key.first, key.second) == value, std::string("(e) ") + modl::case_name(key.first));
  }
  return "oracle suites a-e";
}

// Random curves with t-degree <= 2 coefficients: generic ones and members of
// families with a rational 2-, 3- or 5-torsion point or full 2-torsion.
std::optional<Curve> sweep_curve(int family, const FiniteField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> c(0, k.order() - 1);
  auto quad = [&] { return poly(k, {c(rng), c(rng), c(rng)}); };
  const RatFn zero = poly(k, {0});
  std::array<RatFn, 5> a;
  switch (family) {
    case 0: a = {quad(), quad(), quad(), quad(), quad()}; break;
    case 1: a = {quad(), quad(), quad(), quad(), zero}; break;  // (0, 0) has order 2 when a3 = 0
    case 2: {
      const RatFn u = quad(), v = poly(k, {c(rng)});
      a = {zero, -(u + v), zero, u * v, zero};
      break;
    }
    case 3: a = {quad(), zero, quad(), zero, zero}; break;  // (0, 0) has order 3
    default: {
      const RatFn b = quad();
      a = {poly(k, {1}) - b, -b, -b, zero, zero};  // Tate normal form, (0, 0) has order 5
      break;
    }
  }
  if (family == 1) a[2] = zero;
  try {
    Curve e = curve::make_curve({a[0], a[1], a[2], a[3], a[4]});
    if (curve::invariants(e).j->is_constant()) return std::nullopt;
    return e;
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool consistent_solution(const report::GlobalReport& r) {
  if (!r.applicable) return r.sum.lo <= r.sum.hi;
  const int c = *r.coinv;
  for (int s = r.sum.lo; s <= r.sum.hi; ++s)
    for (int k = r.ker->lo; k <= r.ker->hi; ++k)
      for (int x = r.coker->lo; x <= r.coker->hi; ++x)
        if (s - c == k - x && k <= s && x <= c) return true;
  return false;
}

std::string sweep(Check& check) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(424242);
  int curves = 0, known = 0, intervals = 0, attempts = 0;
  std::map<std::string, int> cases;
  const uint32_t primes[] = {5, 7, 11};
  while (curves < kSweepCurves && attempts < 100 * kSweepCurves) {
    ++attempts;
    const auto k = FiniteField::prime(primes[attempts % 3]);
    const auto e = sweep_curve(attempts % 5, k, rng);
    if (!e) continue;
    ++curves;
    for (unsigned l : {2u, 3u, 5u}) {
      if (l == k.characteristic()) continue;
      const auto r = report::build_report(*e, l);
      const std::string where = curve::weierstrass_text(*e) + " over F_" + std::to_string(k.order()) + ", l = " + std::to_string(l);
      ++cases[modl::case_name(r.modl.kind)];
      check(!r.places.empty() && r.places.back().info.place.is_infinite(), "infinity listed for " + where);
      if (r.fully_known()) {
        ++known;
        check(r.sum.lo - *r.coinv == r.ker->lo - r.coker->lo, "exactness identity for " + where);
      } else {
        ++intervals;
      }
      check(consistent_solution(r), "consistent intervals for " + where);
      check(!r.sanity.applicable || r.sanity.consistent, "torsion sanity for " + where);
    }
  }
  const double secs = seconds_since(t0);
  check(curves >= kSweepCurves, "enough curves");
  check(known > 0, "some reports fully known");
  check(secs < kSweepSeconds, "runtime");
  std::ostringstream o;
  o << "randomized sweep: " << curves << " curves, " << known << " fully known reports, " << intervals
    << " with intervals (" << secs << " s;";
  for (const auto& [name, n] : cases) o << " " << name << "=" << n;
  o << ")";
  return o.str();
}

}  // namespace

int main() {
  const std::vector<std::function<std::string(Check&)>> criteria{legendre_end_to_end, curve11_end_to_end, tate_triples,
                                                                 good_places, oracle_suites, sweep};
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string label;
    try {
      label = criteria[i](check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    all = all && check.ok();
    std::printf("%s criterion %zu: %s [%s]\n", check.ok() ? "PASS" : "FAIL", i + 1, label.c_str(), check.summary().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
