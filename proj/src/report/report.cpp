#include "vchow/report/report.hpp"

#include <algorithm>

namespace vchow::report {

namespace {

struct Group {
  int n1, n2;  // Z/n1 + Z/n2
};

std::vector<Group> allowed_groups() {
  std::vector<Group> g;
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) g.push_back({n, 1});
  for (int m : {2, 4, 6, 8}) g.push_back({m, 2});
  for (Group x : {Group{3, 3}, Group{6, 3}, Group{4, 4}, Group{5, 5}}) g.push_back(x);
  return g;
}

int l_rank(const Group& g, unsigned l) {
  return (g.n1 % static_cast<int>(l) == 0) + (g.n2 % static_cast<int>(l) == 0);
}

}  // namespace

TorsionSanity torsion_sanity(const Curve& c, const std::map<unsigned, int>& ranks) {
  TorsionSanity out;
  const auto j = *curve::invariants(c).j;
  if (j.is_constant()) {
    out.messages.push_back("j is constant: the curve is isotrivial and the torsion list does not apply");
    return out;
  }
  out.applicable = true;
  const auto groups = allowed_groups();
  const bool any = std::any_of(groups.begin(), groups.end(), [&](const Group& g) {
    for (const auto& [l, r] : ranks) {
      if (l_rank(g, l) != r) return false;
    }
    return true;
  });
  if (!any) {
    out.consistent = false;
    std::string what;
    for (const auto& [l, r] : ranks) what += (what.empty() ? "" : ", ") + std::to_string(l) + "-rank " + std::to_string(r);
    out.messages.push_back("computed torsion (" + what + ") is not in the list of torsion groups of non-isotrivial curves");
  }
  return out;
}

std::pair<Range, Range> exactness_ranges(const Range& sum, int c, bool surjective) {
  if (surjective) {
    const Range ker{sum.lo - c, sum.hi - c};
    if (ker.hi < 0) fail(ErrorCode::kInternal, "negative kernel dimension with surjective boundary map");
    return {Range{std::max(0, ker.lo), ker.hi}, Range{0, 0}};
  }
  return {Range{std::max(0, sum.lo - c), sum.hi}, Range{std::max(0, c - sum.hi), c}};
}

GlobalReport build_report(const Curve& c, unsigned l, const std::vector<modl::RatPoly>& user_kernels) {
  ellgroup::check_degree(c, l);
  GlobalReport r;
  r.curve = c;
  r.l = l;
  for (const auto& v : curve::bad_places(c)) {
    if (v.is_infinite()) continue;
    auto info = localdim::classify_reduction(c, v);
    auto dim = localdim::local_dim(c, info, l);
    r.places.push_back({std::move(info), std::move(dim)});
  }
  {
    const auto inf = funcfield::Place::infinity(curve::constant_field(c));
    auto info = localdim::classify_reduction(c, inf);
    auto dim = localdim::local_dim(c, info, l);
    r.places.push_back({std::move(info), std::move(dim)});
  }
  for (const auto& e : r.places) {
    if (e.dim.known()) {
      r.sum.lo += e.dim.dim;
      r.sum.hi += e.dim.dim;
    } else {
      r.sum.hi += 2;
    }
  }
  r.modl = modl::classify(c, l, user_kernels);
  r.surjective = modl::surjectivity_flag(r.modl);
  r.coinv = r.modl.coinv_dim;
  r.applicable = r.coinv && *r.coinv > 0;
  if (r.applicable) {
    auto [ker, coker] = exactness_ranges(r.sum, *r.coinv, r.surjective);
    r.ker = ker;
    r.coker = coker;
  } else if (r.coinv) {
    r.note = "coinvariants vanish: the exact sequence gives no information";
  } else {
    r.note = "coinvariant dimension undetermined: " + r.modl.reason;
  }
  r.sanity = torsion_sanity(c, {{l, r.modl.torsion_rank}});
  return r;
}

}  // namespace vchow::report
