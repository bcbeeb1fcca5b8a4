#include "vchow/io/output.hpp"

#include <sstream>

namespace vchow::io {

using localdim::LocalDim;
using localdim::ReductionInfo;

namespace {

Json big_json(const gf::BigInt& v) {
  if (v <= gf::BigInt(1) << 53) return Json(static_cast<uint64_t>(v));
  return Json(v.str());
}

Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json range_json(const std::optional<report::Range>& r) {
  if (!r) return nullptr;
  Json j;
  j["lo"] = r->lo;
  j["hi"] = r->hi;
  return j;
}

Json weierstrass_json(const curve::Curve& c) {
  Json a = Json::array();
  for (const auto& x : c.coeffs()) a.push_back(x.to_string());
  return a;
}

Json value_json(const RatFn& x) {
  Json j;
  j["value"] = x.to_string();
  j["factored"] = factored_text(x);
  return j;
}

std::string range_text(const report::Range& r) {
  if (r.exact()) return std::to_string(r.lo);
  return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

std::string dim_text(const LocalDim& d) {
  if (d.known()) return std::to_string(d.dim);
  return localdim::verdict_name(d.verdict);
}

std::string point_text(const ellgroup::Point<RatFn>& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

Json sanity_json(const report::TorsionSanity& s) {
  Json j;
  j["applicable"] = s.applicable;
  j["consistent"] = s.consistent;
  j["messages"] = s.messages;
  return j;
}

Json command(const char* name, const ParsedCurve& c) {
  Json j;
  j["command"] = name;
  j["curve"] = curve_json(c);
  return j;
}

}  // namespace

Json curve_json(const ParsedCurve& c) {
  Json j;
  j["p"] = c.spec.p;
  j["n"] = c.spec.n;
  j["modulus"] = c.spec.modulus ? Json(*c.spec.modulus) : Json(nullptr);
  j["a"] = c.spec.a;
  return j;
}

Json reduction_json(const ReductionInfo& info) {
  Json j;
  j["place"] = info.place.to_string();
  j["degree"] = info.place.degree();
  j["residue_order"] = big_json(info.residue_order);
  j["reduction"] = localdim::reduction_name(info.rtype);
  j["vdisc"] = info.model.vdisc;
  j["vc4"] = opt_int(info.model.vc4);
  j["vj"] = opt_int(info.model.vj);
  j["minimal_model"] = weierstrass_json(info.model.model);
  const auto& tr = info.model.transform;
  j["transform"] = Json{{"u", tr.u.to_string()}, {"r", tr.r.to_string()}, {"s", tr.s.to_string()}, {"t", tr.t.to_string()}};
  if (info.gamma) {
    j["gamma"] = Json{{"valuation", info.gamma->valuation}, {"leading", info.gamma->leading.to_string()}};
  } else {
    j["gamma"] = nullptr;
  }
  if (info.tate) {
    j["tate"] = Json{{"vq", info.tate->vq}, {"q_leading", info.tate->q_leading.to_string()}};
  } else {
    j["tate"] = nullptr;
  }
  return j;
}

Json local_dim_json(const LocalDim& d) {
  Json j;
  j["l"] = d.l;
  j["verdict"] = localdim::verdict_name(d.verdict);
  j["dim"] = d.known() ? Json(d.dim) : Json(nullptr);
  j["reason"] = d.reason;
  return j;
}

Json invariants_json(const ParsedCurve& c) {
  Json j = command("invariants", c);
  const auto inv = curve::invariants(c.curve);
  Json v;
  v["b2"] = value_json(inv.b2);
  v["b4"] = value_json(inv.b4);
  v["b6"] = value_json(inv.b6);
  v["b8"] = value_json(inv.b8);
  v["c4"] = value_json(inv.c4);
  v["c6"] = value_json(inv.c6);
  v["disc"] = value_json(inv.disc);
  v["j"] = value_json(*inv.j);
  j["invariants"] = v;
  return j;
}

Json places_json(const ParsedCurve& c) {
  Json j = command("places", c);
  Json arr = Json::array();
  for (const auto& v : curve::bad_places(c.curve)) arr.push_back(reduction_json(localdim::classify_reduction(c.curve, v)));
  j["places"] = arr;
  return j;
}

Json local_json(const ParsedCurve& c, const ReductionInfo& info, const LocalDim& d) {
  Json j = command("local", c);
  j["l"] = d.l;
  j["reduction"] = reduction_json(info);
  j["local_dim"] = local_dim_json(d);
  return j;
}

Json torsion_json(const ParsedCurve& c, unsigned l, const ellgroup::RationalTorsion& t, const report::TorsionSanity& s) {
  Json j = command("torsion", c);
  j["l"] = l;
  j["rank"] = t.rank;
  Json pts = Json::array();
  for (const auto& p : t.points) pts.push_back(Json{{"x", p.x.to_string()}, {"y", p.y.to_string()}});
  j["points"] = pts;
  j["sanity"] = sanity_json(s);
  return j;
}

Json classify_json(const ParsedCurve& c, const modl::ModLClass& cls) {
  Json j = command("classify", c);
  j["l"] = cls.l;
  j["torsion_rank"] = cls.torsion_rank;
  j["case"] = modl::case_name(cls.kind);
  j["chi_trivial"] = cls.chi_trivial;
  j["coinv_dim"] = opt_int(cls.coinv_dim);
  j["surjective"] = modl::surjectivity_flag(cls);
  j["search_complete"] = cls.search_complete;
  j["search_note"] = cls.search_note;
  j["reason"] = cls.reason;
  Json isos = Json::array();
  for (const auto& iso : cls.isogenies) {
    isos.push_back(Json{{"kernel", iso.kernel_poly.to_string("x")},
                        {"codomain", weierstrass_json(iso.codomain)},
                        {"source", iso.source}});
  }
  j["isogenies"] = isos;
  return j;
}

Json report_json(const ParsedCurve& c, const report::GlobalReport& r) {
  Json j = command("report", c);
  j["l"] = r.l;
  Json places = Json::array();
  for (const auto& e : r.places) {
    Json p = reduction_json(e.info);
    p["local_dim"] = local_dim_json(e.dim);
    places.push_back(p);
  }
  j["places"] = places;
  j["sum"] = range_json(r.sum);
  j["case"] = modl::case_name(r.modl.kind);
  j["torsion_rank"] = r.modl.torsion_rank;
  j["coinv_dim"] = opt_int(r.coinv);
  j["surjective"] = r.surjective;
  j["applicable"] = r.applicable;
  j["ker_dim"] = range_json(r.ker);
  j["coker_dim"] = range_json(r.coker);
  const std::string seq = sequence_text(r);
  j["sequence"] = seq.empty() ? Json(nullptr) : Json(seq);
  j["sanity"] = sanity_json(r.sanity);
  j["note"] = r.note;
  return j;
}

Json error_json(const Error& e) {
  Json err;
  err["code"] = error_code_name(e.code());
  err["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  } else {
    err["line"] = nullptr;
    err["column"] = nullptr;
  }
  return Json{{"error", err}};
}

std::string sequence_text(const report::GlobalReport& r) {
  if (!r.sum.exact() || !r.coinv) return "";
  auto space = [&](int d) {
    if (d == 0) return std::string("0");
    std::string s = "F_" + std::to_string(r.l);
    return d == 1 ? s : s + "^" + std::to_string(d);
  };
  return "0 -> Ker -> " + space(r.sum.lo) + " -> " + space(*r.coinv) + " -> Coker -> 0";
}

std::string invariants_text(const ParsedCurve& c) {
  const auto inv = curve::invariants(c.curve);
  std::ostringstream o;
  o << "c4 = " << factored_text(inv.c4) << "\n";
  o << "c6 = " << factored_text(inv.c6) << "\n";
  o << "disc = " << factored_text(inv.disc) << "\n";
  o << "j = " << factored_text(*inv.j) << "\n";
  return o.str();
}

std::string places_text(const ParsedCurve& c) {
  std::ostringstream o;
  const auto places = curve::bad_places(c.curve);
  if (places.empty()) o << "no bad places\n";
  for (const auto& v : places) {
    const auto info = localdim::classify_reduction(c.curve, v);
    o << v.to_string() << ": " << localdim::reduction_name(info.rtype) << " (v(disc) = " << info.model.vdisc << ")\n";
  }
  return o.str();
}

std::string local_text(const ReductionInfo& info, const LocalDim& d) {
  std::ostringstream o;
  o << "place " << info.place.to_string() << " (degree " << info.place.degree() << ", residue field of order "
    << info.residue_order << ")\n";
  o << "reduction: " << localdim::reduction_name(info.rtype) << "\n";
  o << "minimal model: " << curve::weierstrass_text(info.model.model) << "\n";
  o << "v(disc) = " << info.model.vdisc;
  if (info.model.vc4) o << ", v(c4) = " << *info.model.vc4;
  if (info.model.vj) o << ", v(j) = " << *info.model.vj;
  o << "\n";
  if (info.gamma) o << "gamma: valuation " << info.gamma->valuation << ", leading " << info.gamma->leading.to_string() << "\n";
  if (info.tate) o << "Tate parameter: v(q) = " << info.tate->vq << ", leading " << info.tate->q_leading.to_string() << "\n";
  o << "dim V/" << d.l << " = " << dim_text(d) << " (" << d.reason << ")\n";
  return o.str();
}

std::string torsion_text(unsigned l, const ellgroup::RationalTorsion& t, const report::TorsionSanity& s) {
  std::ostringstream o;
  o << "rational " << l << "-torsion rank: " << t.rank << "\n";
  for (const auto& p : t.points) o << "  " << point_text(p) << "\n";
  for (const auto& m : s.messages) o << "note: " << m << "\n";
  return o.str();
}

std::string classify_text(const modl::ModLClass& cls) {
  std::ostringstream o;
  o << "l = " << cls.l << ": case " << modl::case_name(cls.kind) << " (" << cls.reason << ")\n";
  o << "torsion rank " << cls.torsion_rank << ", l | q-1: " << (cls.chi_trivial ? "yes" : "no") << "\n";
  o << "coinvariant dimension: " << (cls.coinv_dim ? std::to_string(*cls.coinv_dim) : "undetermined") << "\n";
  o << "boundary map surjective: " << (modl::surjectivity_flag(cls) ? "yes" : "not established") << "\n";
  o << "rational " << cls.l << "-isogenies" << (cls.search_complete ? "" : " (search incomplete)") << ":\n";
  for (const auto& iso : cls.isogenies) o << "  kernel " << iso.kernel_poly.to_string("x") << " [" << iso.source << "]\n";
  return o.str();
}

std::string report_text(const ParsedCurve& c, const report::GlobalReport& r) {
  std::ostringstream o;
  o << "curve " << curve::weierstrass_text(c.curve) << " over F_" << c.field.order() << "(t), l = " << r.l << "\n";
  for (const auto& e : r.places) {
    o << "  " << e.info.place.to_string() << ": " << localdim::reduction_name(e.info.rtype) << ", dim " << dim_text(e.dim)
      << "\n";
  }
  o << "sum over bad places and inf: " << range_text(r.sum) << "\n";
  o << "case " << modl::case_name(r.modl.kind) << ", coinvariants: "
    << (r.coinv ? std::to_string(*r.coinv) : "undetermined") << "\n";
  if (r.applicable) {
    const std::string seq = sequence_text(r);
    if (!seq.empty()) o << seq << "\n";
    o << "dim Ker = " << range_text(*r.ker) << ", dim Coker = " << range_text(*r.coker) << "\n";
  }
  if (!r.note.empty()) o << "note: " << r.note << "\n";
  for (const auto& m : r.sanity.messages) o << "note: " << m << "\n";
  return o.str();
}

}  // namespace vchow::io
