#pragma once
// Global bookkeeping for the four-term exact sequence
// 0 -> Ker -> (sum over bad places and infinity of V(E_v)/l) -> E[l]_{G_F} -> Coker -> 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vchow/localdim/localdim.hpp"
#include "vchow/modl/modl.hpp"

namespace vchow::report {

using curve::Curve;
using localdim::LocalDim;
using localdim::ReductionInfo;
using modl::ModLClass;

/// Closed integer interval; a point value when lo == hi.
struct Range {
  int lo = 0, hi = 0;
  bool exact() const { return lo == hi; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

struct PlaceEntry {
  ReductionInfo info;
  LocalDim dim;
};

struct TorsionSanity {
  bool applicable = false;  // j is not constant
  bool consistent = true;
  std::vector<std::string> messages;
};

struct GlobalReport {
  Curve curve;
  unsigned l = 0;
  std::vector<PlaceEntry> places;  // bad finite places, then infinity (always present)
  ModLClass modl;
  bool surjective = false;
  Range sum;                       // dimension of the middle term
  std::optional<int> coinv;
  bool applicable = false;         // coinvariants known and nonzero
  std::optional<Range> ker;        // empty when not applicable
  std::optional<Range> coker;
  TorsionSanity sanity;
  std::string note;

  bool fully_known() const { return applicable && sum.exact() && ker && ker->exact() && coker && coker->exact(); }
};

GlobalReport build_report(const Curve& c, unsigned l, const std::vector<modl::RatPoly>& user_kernels = {});

/// Checks l-torsion ranks (prime -> rank) against the torsion groups allowed
/// for non-isotrivial curves over F_q(t).
TorsionSanity torsion_sanity(const Curve& c, const std::map<unsigned, int>& ranks);

/// Kernel and cokernel ranges from the middle-term range and the coinvariant
/// dimension c > 0.
std::pair<Range, Range> exactness_ranges(const Range& sum, int c, bool surjective);

}  // namespace vchow::report
