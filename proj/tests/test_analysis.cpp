#include <doctest.h>

#include "support.hpp"
#include "vchow/report/report.hpp"

using namespace vchow;
using namespace vchow::localdim;
using funcfield::Place;
using funcfield::variable;
using testsupport::poly;

namespace {

Place finite(const gf::FiniteField& k, std::initializer_list<int64_t> c) {
  return Place::finite(funcfield::poly_from_ints(k, c));
}

}  // namespace

TEST_CASE("reduction types of the Legendre curve") {
  const auto e = testsupport::legendre5();
  const auto k = curve::constant_field(e);
  for (const auto& v : curve::bad_places(e)) CHECK(classify_reduction(e, v).rtype == ReductionType::kSplitMult);
  CHECK(classify_reduction(e, finite(k, {2, 0, 1})).rtype == ReductionType::kGood);
  const auto at0 = classify_reduction(e, finite(k, {0, 1}));
  CHECK(funcfield::reduce_at(-(curve::invariants(at0.model.model).c4 / curve::invariants(at0.model.model).c6), at0.place).is_one());
  const auto at_inf = classify_reduction(e, Place::infinity(k));
  CHECK(at_inf.gamma->valuation == 0);
  CHECK(at_inf.gamma->leading.is_one());
}

TEST_CASE("Tate parameter data") {
  const auto e = testsupport::legendre5();
  const auto i0 = classify_reduction(e, finite(curve::constant_field(e), {0, 1}));
  CHECK(i0.tate->vq == 4);
  CHECK(i0.tate->q_leading.to_string() == "1");
  CHECK(tate_is_lth_power(i0, 2));

  const auto f = testsupport::curve11();
  const auto k = curve::constant_field(f);
  const auto t0 = classify_reduction(f, finite(k, {0, 1}));
  CHECK(t0.tate->vq == 5);
  CHECK(t0.tate->q_leading.to_string() == "-1");
  CHECK(tate_is_lth_power(t0, 5));
  const auto t1 = classify_reduction(f, finite(k, {-1, 1}));
  CHECK(t1.tate->vq == 1);
  CHECK_FALSE(tate_is_lth_power(t1, 5));
  CHECK_THROWS(tate_is_lth_power(classify_reduction(f, finite(k, {2, 1})), 5));
}

TEST_CASE("local dimensions of the examples") {
  const auto e = testsupport::legendre5();
  for (const auto& v : curve::bad_places(e)) {
    const auto d = local_dim(e, v, 2);
    CHECK(d.known());
    CHECK(d.dim == 1);
  }
  const auto f = testsupport::curve11();
  const auto k = curve::constant_field(f);
  CHECK(local_dim(f, finite(k, {0, 1}), 5).dim == 1);
  CHECK(local_dim(f, finite(k, {-1, 1}), 5).dim == 0);
  CHECK(local_dim(f, finite(k, {1, 1}), 5).dim == 0);
  CHECK(local_dim(f, Place::infinity(k), 5).dim == 1);
}

TEST_CASE("coinvariant table") {
  using modl::ModLCase;
  CHECK(modl::coinvariant_table(ModLCase::kFullTorsion, true) == 2);
  CHECK(modl::coinvariant_table(ModLCase::kFullTorsion, false) == 2);
  CHECK(modl::coinvariant_table(ModLCase::kSC, true) == 1);
  CHECK(modl::coinvariant_table(ModLCase::kSC, false) == 1);
  CHECK(modl::coinvariant_table(ModLCase::kBprime, true) == 1);
  CHECK(modl::coinvariant_table(ModLCase::kBprime, false) == 0);
  CHECK(modl::coinvariant_table(ModLCase::kB, true) == 1);
  CHECK(modl::coinvariant_table(ModLCase::kB, false) == 1);
  CHECK_FALSE(modl::coinvariant_table(ModLCase::kNoBorelFound, true));
  CHECK_FALSE(modl::coinvariant_table(ModLCase::kBorelOther, false));
}

TEST_CASE("classification of the examples") {
  const auto a = modl::classify(testsupport::legendre5(), 2);
  CHECK(a.kind == modl::ModLCase::kFullTorsion);
  CHECK(a.coinv_dim == 2);
  CHECK(modl::surjectivity_flag(a));
  const auto b = modl::classify(testsupport::curve11(), 5);
  CHECK(b.torsion_rank == 1);
  CHECK(b.chi_trivial);
  CHECK(b.coinv_dim == 1);
}

TEST_CASE("reports of the examples") {
  const auto a = report::build_report(testsupport::legendre5(), 2);
  CHECK(a.places.size() == 4);
  CHECK(a.sum == report::Range{4, 4});
  CHECK(a.surjective);
  CHECK(a.ker == report::Range{2, 2});
  CHECK(a.coker == report::Range{0, 0});
  CHECK(a.sanity.consistent);

  const auto b = report::build_report(testsupport::curve11(), 5);
  std::vector<int> dims;
  for (const auto& p : b.places) dims.push_back(p.dim.dim);
  CHECK(dims == std::vector<int>{1, 0, 0, 1});
  CHECK(b.sum == report::Range{2, 2});
  CHECK(b.coinv == 1);
  REQUIRE(b.ker);
  CHECK(b.ker->lo == 1);
  CHECK(b.ker->hi == 2);
  CHECK(b.coker == report::Range{0, 1});
}

TEST_CASE("torsion sanity") {
  const auto e = testsupport::legendre5();
  CHECK(report::torsion_sanity(e, {{2, 2}}).consistent);
  CHECK(report::torsion_sanity(testsupport::curve11(), {{5, 1}}).consistent);
  CHECK_FALSE(report::torsion_sanity(e, {{7, 2}}).consistent);
  CHECK_FALSE(report::torsion_sanity(e, {{2, 2}, {3, 2}}).consistent);
}
