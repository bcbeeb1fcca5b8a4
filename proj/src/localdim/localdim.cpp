#include "vchow/localdim/localdim.hpp"

#include "vchow/ellgroup/isogeny.hpp"

namespace vchow::localdim {

using funcfield::leading_at;

const char* reduction_name(ReductionType t) {
  switch (t) {
    case ReductionType::kGood: return "good";
    case ReductionType::kSplitMult: return "split multiplicative";
    case ReductionType::kNonsplitMult: return "nonsplit multiplicative";
    case ReductionType::kAdditive: return "additive";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kKnown: return "known";
    case Verdict::kAdditiveUndetermined: return "additive-undetermined";
    case Verdict::kNotDetermined: return "not-determined";
  }
  return "?";
}

ReductionInfo classify_reduction(const Curve& c, const Place& v) {
  ReductionInfo info;
  info.place = v;
  info.model = curve::minimal_model_at(c, v);
  info.residue_order = v.residue_order();
  const LocalModel& m = info.model;
  if (m.vdisc == 0) {
    info.rtype = ReductionType::kGood;
    return info;
  }
  if (!m.vc4 || *m.vc4 > 0) {
    info.rtype = ReductionType::kAdditive;
    return info;
  }
  const auto inv = curve::invariants(m.model);
  const auto gamma = leading_at(-(inv.c4 / inv.c6), v);
  const bool split = gamma.valuation % 2 == 0 && gamma.leading.is_square();
  info.rtype = split ? ReductionType::kSplitMult : ReductionType::kNonsplitMult;
  info.gamma = gamma;
  const auto j = leading_at(*inv.j, v);
  if (j.valuation >= 0) fail(ErrorCode::kInternal, "multiplicative reduction with integral j at " + v.to_string());
  info.tate = TatePeriodInfo{-j.valuation, j.leading.inv()};
  return info;
}

bool tate_is_lth_power(const ReductionInfo& info, unsigned l) {
  if (!info.tate) fail(ErrorCode::kInvalidArgument, "Tate parameter needs multiplicative reduction");
  return info.tate->vq % static_cast<int>(l) == 0 && info.tate->q_leading.is_lth_power(l);
}

int good_reduction_torsion_rank(const ReductionInfo& info, unsigned l) {
  if (info.rtype != ReductionType::kGood) fail(ErrorCode::kInvalidArgument, "place does not have good reduction");
  const Place& v = info.place;
  if (info.residue_order <= gf::enumeration_bound()) {
    const auto table = v.residue_field().table_field();
    return ellgroup::l_torsion_rank(curve::reduce_model_table(info.model.model, v, table), l);
  }
  const auto e = curve::reduce_model(info.model.model, v);
  return ellgroup::rank_from_count(ellgroup::l_torsion_count_by_division_poly(e, l, info.residue_order), l);
}

LocalDim local_dim(const Curve& c, const ReductionInfo& info, unsigned l) {
  curve::require_analysis_characteristic(c);
  if (l < 2 || !gf::is_prime(l)) fail(ErrorCode::kInvalidArgument, "l = " + std::to_string(l) + " is not prime");
  if (l == c.characteristic()) fail(ErrorCode::kUnsupported, "l equals the characteristic");
  LocalDim out;
  out.place = info.place;
  out.l = l;
  const bool l_divides = (info.residue_order - 1) % l == 0;
  switch (info.rtype) {
    case ReductionType::kGood:
      out.dim = good_reduction_torsion_rank(info, l);
      out.reason = "good reduction: l-torsion rank of the reduced curve";
      break;
    case ReductionType::kSplitMult:
      if (!l_divides) {
        out.dim = 0;
        out.reason = "split multiplicative, l does not divide the residue order minus 1";
      } else if (tate_is_lth_power(info, l)) {
        out.dim = 1;
        out.reason = "split multiplicative, Tate parameter is an l-th power";
      } else {
        out.dim = 0;
        out.reason = "split multiplicative, Tate parameter is not an l-th power";
      }
      break;
    case ReductionType::kNonsplitMult:
      if (l > 3) {
        out.dim = 0;
        out.reason = "nonsplit multiplicative, l > 3";
      } else if (l == 3 && l_divides) {
        out.dim = 0;
        out.reason = "nonsplit multiplicative, l = 3 divides the residue order minus 1";
      } else if (l == 3 && info.tate->vq % 3 != 0) {
        out.dim = 0;
        out.reason = "nonsplit multiplicative, l = 3 does not divide v(j)";
      } else {
        out.verdict = Verdict::kNotDetermined;
        out.reason = l == 2 ? "nonsplit multiplicative with l = 2 is not covered"
                            : "nonsplit multiplicative with l = 3 outside the covered cases";
      }
      break;
    case ReductionType::kAdditive:
      out.verdict = Verdict::kAdditiveUndetermined;
      out.reason = "additive reduction";
      break;
  }
  return out;
}

LocalDim local_dim(const Curve& c, const Place& v, unsigned l) {
  curve::require_analysis_characteristic(c);
  if (l == c.characteristic()) fail(ErrorCode::kUnsupported, "l equals the characteristic");
  return local_dim(c, classify_reduction(c, v), l);
}

}  // namespace vchow::localdim
