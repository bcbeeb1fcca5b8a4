#pragma once
// Mod-l image cases, coinvariant dimensions and the surjectivity flag.

#include <optional>
#include <string>
#include <vector>

#include "vchow/ellgroup/isogeny.hpp"

namespace vchow::modl {

using curve::Curve;
using ellgroup::IsogenyData;
using ellgroup::Point;
using funcfield::RatFn;
using funcfield::RatPoly;

enum class ModLCase {
  kFullTorsion,   // E[l] rational
  kSC,            // rank 1, more than one rational l-isogeny
  kBprime,        // rank 1, exactly one rational l-isogeny
  kB,             // rank 0, an isogenous curve with a rational l-torsion point
  kBorelOther,    // rank 0, rational isogenies but none of type B
  kNoBorelFound,  // rank 0, complete search found no isogeny
  kUndetermined,  // the isogeny search was incomplete
};

const char* case_name(ModLCase c);

/// dim E[l]_{G_F} as a function of the case and of whether l | q - 1;
/// empty where no value is known.
std::optional<int> coinvariant_table(ModLCase c, bool chi_trivial);

struct ModLClass {
  unsigned l = 0;
  int torsion_rank = 0;
  std::vector<Point<RatFn>> torsion_points;
  std::vector<IsogenyData> isogenies;
  bool search_complete = false;
  std::string search_note;
  ModLCase kind = ModLCase::kUndetermined;
  bool chi_trivial = false;
  std::optional<int> coinv_dim;
  std::string reason;
};

/// l | q - 1 for the constant field F_q.
bool chi_trivial(const Curve& c, unsigned l);

ModLClass classify(const Curve& c, unsigned l, const std::vector<RatPoly>& user_kernels = {});
bool surjectivity_flag(const ModLClass& cls);

}  // namespace vchow::modl
