#include "vchow/modl/modl.hpp"

namespace vchow::modl {

const char* case_name(ModLCase c) {
  switch (c) {
    case ModLCase::kFullTorsion: return "FullTorsion";
    case ModLCase::kSC: return "SC";
    case ModLCase::kBprime: return "Bprime";
    case ModLCase::kB: return "B";
    case ModLCase::kBorelOther: return "BorelOther";
    case ModLCase::kNoBorelFound: return "NoBorelFound";
    case ModLCase::kUndetermined: return "Undetermined";
  }
  return "?";
}

std::optional<int> coinvariant_table(ModLCase c, bool chi_trivial) {
  switch (c) {
    case ModLCase::kFullTorsion: return 2;
    case ModLCase::kSC: return 1;
    case ModLCase::kBprime: return chi_trivial ? 1 : 0;
    case ModLCase::kB: return 1;
    default: return std::nullopt;
  }
}

bool chi_trivial(const Curve& c, unsigned l) { return (curve::constant_field(c).order() - 1) % l == 0; }

ModLClass classify(const Curve& c, unsigned l, const std::vector<RatPoly>& user_kernels) {
  ellgroup::check_degree(c, l);
  ModLClass out;
  out.l = l;
  out.chi_trivial = chi_trivial(c, l);
  const auto torsion = ellgroup::rational_l_torsion(c, l);
  out.torsion_rank = torsion.rank;
  out.torsion_points = torsion.points;
  auto search = ellgroup::find_rational_isogenies(c, l, user_kernels);
  out.isogenies = std::move(search.isogenies);
  out.search_complete = search.complete;
  out.search_note = search.note;
  const size_t found = out.isogenies.size();

  if (out.torsion_rank == 2) {
    if (!out.chi_trivial) fail(ErrorCode::kInternal, "full rational l-torsion but l does not divide q - 1");
    out.kind = ModLCase::kFullTorsion;
    out.reason = "E[l] is rational";
  } else if (out.torsion_rank == 1) {
    if (found > 1) {
      out.kind = ModLCase::kSC;
      out.reason = "rational l-torsion point and " + std::to_string(found) + " rational l-isogenies";
    } else if (found == 1 && out.search_complete) {
      out.kind = ModLCase::kBprime;
      out.reason = "rational l-torsion point and a unique rational l-isogeny";
    } else {
      out.kind = ModLCase::kUndetermined;
      out.reason = "isogeny search incomplete: " + out.search_note;
    }
  } else {
    bool type_b = false;
    for (const auto& iso : out.isogenies) {
      if (ellgroup::rational_l_torsion(iso.codomain, l).rank >= 1) {
        type_b = true;
        break;
      }
    }
    if (type_b) {
      out.kind = ModLCase::kB;
      out.reason = "an l-isogenous curve has a rational l-torsion point";
    } else if (!out.search_complete) {
      out.kind = ModLCase::kUndetermined;
      out.reason = "isogeny search incomplete: " + out.search_note;
    } else if (found > 0) {
      out.kind = ModLCase::kBorelOther;
      out.reason = "rational l-isogenies exist but no isogenous curve has rational l-torsion";
    } else {
      out.kind = ModLCase::kNoBorelFound;
      out.reason = "no rational l-isogeny";
    }
  }
  out.coinv_dim = coinvariant_table(out.kind, out.chi_trivial);
  return out;
}

bool surjectivity_flag(const ModLClass& cls) {
  return cls.kind == ModLCase::kFullTorsion || cls.kind == ModLCase::kSC;
}

}  // namespace vchow::modl
