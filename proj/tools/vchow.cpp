#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vchow/ellgroup/isogeny.hpp"
#include "vchow/error.hpp"
#include "vchow/io/output.hpp"
#include "vchow/io/parser.hpp"
#include "vchow/report/report.hpp"

using namespace vchow;

namespace {

struct Options {
  std::string file;
  std::string place;
  unsigned l = 0;
  std::vector<std::string> kernels;
  bool json = false;
  bool strict = false;
};

void emit(const Options& o, const io::Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int finish(const Options& o, bool determined) { return o.strict && !determined ? 5 : 0; }

int run(const std::string& cmd, const Options& o) {
  const io::ParsedCurve pc = io::load_curve_file(o.file);
  const curve::Curve& c = pc.curve;
  if (cmd == "invariants") {
    emit(o, io::invariants_json(pc), io::invariants_text(pc));
    return 0;
  }
  curve::require_analysis_characteristic(c);
  if (cmd == "places") {
    emit(o, io::places_json(pc), io::places_text(pc));
    return 0;
  }
  if (cmd == "local") {
    const auto v = io::parse_place(o.place, pc.field);
    const auto info = localdim::classify_reduction(c, v);
    const auto d = localdim::local_dim(c, info, o.l);
    emit(o, io::local_json(pc, info, d), io::local_text(info, d));
    return finish(o, d.known());
  }
  ellgroup::check_degree(c, o.l);
  if (cmd == "torsion") {
    const auto t = ellgroup::rational_l_torsion(c, o.l);
    const auto s = report::torsion_sanity(c, {{o.l, t.rank}});
    emit(o, io::torsion_json(pc, o.l, t, s), io::torsion_text(o.l, t, s));
    return 0;
  }
  std::vector<funcfield::RatPoly> kernels;
  for (const auto& k : o.kernels) kernels.push_back(io::parse_kernel(k, pc.field));
  if (cmd == "classify") {
    const auto cls = modl::classify(c, o.l, kernels);
    emit(o, io::classify_json(pc, cls), io::classify_text(cls));
    return finish(o, cls.coinv_dim.has_value());
  }
  const auto r = report::build_report(c, o.l, kernels);
  emit(o, io::report_json(pc, r), io::report_text(pc, r));
  return finish(o, r.fully_known());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local and global mod-l invariants of elliptic curves over F_q(t)"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const char* name, const char* help, bool needs_l) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "curve file")->required();
    if (needs_l) sub->add_option("--l", o.l, "prime l different from p")->required();
    sub->add_flag("--json", o.json, "emit one JSON document");
    sub->add_flag("--strict", o.strict, "exit with status 5 if the requested value is undetermined");
    return sub;
  };
  add("invariants", "c4, c6, discriminant and j, factored", false);
  add("places", "bad places and reduction types", false);
  auto* local = add("local", "reduction data and local dimension at one place", true);
  local->add_option("--place", o.place, "monic irreducible polynomial in t, or inf")->required();
  add("torsion", "rational l-torsion", true);
  auto* classify = add("classify", "mod-l case and coinvariant dimension", true);
  classify->add_option("--kernel", o.kernels, "candidate kernel polynomial in x (repeatable)");
  auto* rep = add("report", "full exact-sequence report", true);
  rep->add_option("--kernel", o.kernels, "candidate kernel polynomial in x (repeatable)");

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    return run(cmd, o);
  } catch (const Error& e) {
    if (o.json) {
      std::cout << io::error_json(e).dump(2) << "\n";
    } else if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      std::cerr << "error: " << o.file << ":" << pe->line() << ":" << pe->column() << ": " << e.what() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
