#pragma once
// Reduction types at a place and the local dimensions dim V(E_v)/l.

#include <optional>
#include <string>

#include "vchow/curve/curve.hpp"

namespace vchow::localdim {

using curve::Curve;
using curve::LocalModel;
using funcfield::LocalLeading;
using funcfield::Place;
using funcfield::Residue;
using gf::BigInt;

enum class ReductionType { kGood, kSplitMult, kNonsplitMult, kAdditive };

const char* reduction_name(ReductionType t);

/// Tate parameter data read off j: v(q) = -v(j), leading coefficient of q is
/// the inverse of that of j.
struct TatePeriodInfo {
  int vq = 0;
  Residue q_leading;
};

struct ReductionInfo {
  Place place;
  LocalModel model;
  ReductionType rtype = ReductionType::kGood;
  BigInt residue_order;
  std::optional<LocalLeading> gamma;  // gamma = -c4/c6, multiplicative only
  std::optional<TatePeriodInfo> tate;  // multiplicative only

  bool multiplicative() const {
    return rtype == ReductionType::kSplitMult || rtype == ReductionType::kNonsplitMult;
  }
};

enum class Verdict { kKnown, kAdditiveUndetermined, kNotDetermined };

const char* verdict_name(Verdict v);

struct LocalDim {
  Place place;
  unsigned l = 0;
  Verdict verdict = Verdict::kKnown;
  int dim = 0;         // meaningful when verdict == kKnown
  std::string reason;  // which rule applied

  bool known() const { return verdict == Verdict::kKnown; }
};

ReductionInfo classify_reduction(const Curve& c, const Place& v);
/// q is an l-th power in the local field; needs multiplicative reduction.
bool tate_is_lth_power(const ReductionInfo& info, unsigned l);
LocalDim local_dim(const Curve& c, const ReductionInfo& info, unsigned l);
LocalDim local_dim(const Curve& c, const Place& v, unsigned l);

/// dim_{F_l} of the rational l-torsion of the reduction at a good place.
int good_reduction_torsion_rank(const ReductionInfo& info, unsigned l);

}  // namespace vchow::localdim
