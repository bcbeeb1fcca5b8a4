#pragma once
// JSON documents and text renderings for the command-line tool.

#include <string>

#include <json.hpp>

#include "vchow/io/parser.hpp"
#include "vchow/report/report.hpp"

namespace vchow::io {

using Json = nlohmann::ordered_json;

Json curve_json(const ParsedCurve& c);
Json reduction_json(const localdim::ReductionInfo& info);
Json local_dim_json(const localdim::LocalDim& d);

Json invariants_json(const ParsedCurve& c);
Json places_json(const ParsedCurve& c);
Json local_json(const ParsedCurve& c, const localdim::ReductionInfo& info, const localdim::LocalDim& d);
Json torsion_json(const ParsedCurve& c, unsigned l, const ellgroup::RationalTorsion& t, const report::TorsionSanity& s);
Json classify_json(const ParsedCurve& c, const modl::ModLClass& cls);
Json report_json(const ParsedCurve& c, const report::GlobalReport& r);
Json error_json(const Error& e);

std::string invariants_text(const ParsedCurve& c);
std::string places_text(const ParsedCurve& c);
std::string local_text(const localdim::ReductionInfo& info, const localdim::LocalDim& d);
std::string torsion_text(unsigned l, const ellgroup::RationalTorsion& t, const report::TorsionSanity& s);
std::string classify_text(const modl::ModLClass& cls);
std::string report_text(const ParsedCurve& c, const report::GlobalReport& r);

/// "0 -> Ker -> F_5^2 -> F_5 -> Coker -> 0", when the middle term is known.
std::string sequence_text(const report::GlobalReport& r);

}  // namespace vchow::io
