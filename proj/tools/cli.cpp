#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "coordlat/coord.hpp"
#include "coordlat/error.hpp"
#include "coordlat/expr.hpp"
#include "coordlat/io.hpp"
#include "coordlat/regcheck.hpp"

namespace coordlat::cli {

namespace {

struct GlobalOptions {
  bool json = false;
  bool timings = false;
  Limits limits;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json timings_of(const GlobalOptions& g, const Stopwatch& sw) {
  if (!g.timings) return Json::object();
  return Json{{"total_ms", sw.ms()}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string optional_text(const std::optional<Index>& v) { return v ? std::to_string(*v) : "none"; }

int ring_check(const GlobalOptions& g, const std::string& expr, bool expect_regular, bool expect_irregular,
               bool expect_strong, bool expect_not_strong, std::ostream& out) {
  const Stopwatch sw;
  const RingPtr ring = parse_ring_expr(expr, g.limits);
  const RegularityReport report = is_von_neumann_regular(*ring);
  if (g.json) {
    out << save_document(report_document("ring check", Json::array({expr}), Json::array({to_json(report, *ring)}),
                                         timings_of(g, sw)));
  } else {
    out << "ring " << expr << " (order " << ring->order() << ")\n"
        << "  regular: " << yes_no(report.regular) << "\n"
        << "  strongly_regular: " << yes_no(report.strongly_regular) << "\n"
        << "  counterexample: " << optional_text(report.counterexample) << "\n"
        << "  idempotents: " << idempotents(*ring).size() << "\n";
  }
  bool ok = true;
  if (expect_regular && !report.regular) ok = false;
  if (expect_irregular && report.regular) ok = false;
  if (expect_strong && !report.strongly_regular) ok = false;
  if (expect_not_strong && report.strongly_regular) ok = false;
  return ok ? kOk : kCheckFailed;
}

int ring_validate(const GlobalOptions& g, const std::string& expr, bool force, std::ostream& out) {
  const Stopwatch sw;
  const RingPtr ring = parse_ring_expr(expr, g.limits);
  const RingValidation v = validate_ring(*ring, force, g.limits.max_exhaustive);
  if (g.json) {
    out << save_document(
        report_document("ring validate", Json::array({expr}), Json::array({to_json(v)}), timings_of(g, sw)));
  } else {
    out << "ring " << expr << " (order " << ring->order() << "): " << (v.valid() ? "valid" : "INVALID") << "\n";
    for (const auto& viol : v.violations) {
      out << "  " << viol.axiom << " at (";
      for (std::size_t i = 0; i < viol.witness.size(); ++i) out << (i ? ", " : "") << viol.witness[i];
      out << ")\n";
    }
  }
  return v.valid() ? kOk : kCheckFailed;
}

int module_check(const GlobalOptions& g, const std::string& expr, bool expect_regular, bool expect_irregular,
                 std::ostream& out) {
  const Stopwatch sw;
  const ModulePtr m = parse_module_expr(expr, g.limits);
  const ModuleRegularityReport report = module_is_regular(m, g.limits);
  if (g.json) {
    out << save_document(report_document("module check", Json::array({expr}), Json::array({to_json(report, *m)}),
                                         timings_of(g, sw)));
  } else {
    out << "module " << expr << " (order " << m->order() << ")\n"
        << "  regular: " << yes_no(report.regular) << "\n"
        << "  counterexample: " << optional_text(report.counterexample) << "\n"
        << "  |Hom(M, R)|: " << report.hom_count << "\n";
  }
  bool ok = true;
  if (expect_regular && !report.regular) ok = false;
  if (expect_irregular && report.regular) ok = false;
  return ok ? kOk : kCheckFailed;
}

int module_summands(const GlobalOptions& g, const std::string& expr, std::ostream& out) {
  const Stopwatch sw;
  const ModulePtr m = parse_module_expr(expr, g.limits);
  const SummandReport report = check_summand_property(m, g.limits);
  if (g.json) {
    out << save_document(
        report_document("module summands", Json::array({expr}), Json::array({to_json(report)}), timings_of(g, sw)));
  } else {
    out << "module " << expr << ": " << (report.passed ? "every submodule is a direct summand" : "FAILED") << "\n";
    for (const auto& e : report.entries) {
      out << "  " << format_set(e.submodule.elements()) << "  complement "
          << (e.complement ? format_set(e.complement->elements()) : std::string("none")) << "\n";
    }
  }
  return report.passed ? kOk : kCheckFailed;
}

int module_preimages(const GlobalOptions& g, const std::string& u_expr, const std::string& m_expr,
                     std::ostream& out) {
  const Stopwatch sw;
  const ModulePtr u = parse_module_expr(u_expr, g.limits);
  const ModulePtr m = parse_module_expr(m_expr, g.limits);
  const PreimageReport report = check_preimage_summands(u, m, g.limits);
  if (g.json) {
    out << save_document(report_document("module preimages", Json::array({u_expr, m_expr}),
                                         Json::array({to_json(report)}), timings_of(g, sw)));
  } else {
    const auto bad = std::count_if(report.entries.begin(), report.entries.end(),
                                   [](const PreimageEntry& e) { return !e.ok(); });
    out << "preimages " << u_expr << " -> " << m_expr << ": " << report.hom_count << " homs x "
        << report.submodule_count << " submodules, " << bad << " failures\n";
  }
  return report.passed ? kOk : kCheckFailed;
}

int module_relative(const GlobalOptions& g, const std::string& u_expr, const std::string& m_expr,
                    std::ostream& out) {
  const Stopwatch sw;
  const ModulePtr u = parse_module_expr(u_expr, g.limits);
  const ModulePtr m = parse_module_expr(m_expr, g.limits);
  const RelativeRegularityReport report = is_relative_regular(u, m, g.limits);
  if (g.json) {
    out << save_document(report_document("module relative", Json::array({u_expr, m_expr}),
                                         Json::array({to_json(report)}), timings_of(g, sw)));
  } else {
    out << m_expr << " is " << (report.holds ? "" : "not ") << u_expr << "-regular"
        << (report.counterexample ? " (fails at hom " + std::to_string(*report.counterexample) + ")" : "") << "\n";
  }
  return kOk;
}

Json lattice_properties_json(const FiniteLattice& l) {
  const LawCheck mod = is_modular(l);
  const LawCheck dist = is_distributive(l);
  const ComplementCheck comp = is_complemented(l);
  auto triple = [&](const LawCheck& c) {
    if (!c.counterexample) return Json(nullptr);
    Json t = Json::array();
    for (Index i : *c.counterexample) t.push_back(l.key(i));
    return t;
  };
  Json out = Json::object();
  out["modular"] = mod.holds;
  out["modular_counterexample"] = triple(mod);
  out["complemented"] = comp.holds;
  out["uncomplemented"] = comp.uncomplemented ? Json(l.key(*comp.uncomplemented)) : Json(nullptr);
  out["distributive"] = dist.holds;
  out["distributive_counterexample"] = triple(dist);
  return out;
}

int lattice_of(const GlobalOptions& g, const std::string& expr, const std::string& dot_path, std::ostream& out) {
  const Stopwatch sw;
  const ModulePtr m = parse_module_expr(expr, g.limits);
  const SubmoduleLattice subs = submodule_lattice(m, g.limits);
  const Json props = lattice_properties_json(subs.lattice);
  if (!dot_path.empty()) write_file(dot_path, export_dot(subs.lattice, "submodules"));
  if (g.json) {
    Json result = Json::object();
    result["lattice"] = lattice_body(subs.lattice);
    result["properties"] = props;
    out << save_document(report_document("lattice of", Json::array({expr}), Json::array({result}), timings_of(g, sw)));
  } else {
    out << "submodule lattice of " << expr << ": " << subs.lattice.size() << " elements\n"
        << "  modular: " << yes_no(props["modular"].get<bool>()) << "\n"
        << "  complemented: " << yes_no(props["complemented"].get<bool>()) << "\n"
        << "  distributive: " << yes_no(props["distributive"].get<bool>()) << "\n";
    for (const auto& key : subs.lattice.keys()) out << "  " << key << "\n";
    if (!dot_path.empty()) out << "  wrote " << dot_path << "\n";
  }
  return kOk;
}

int coordinatize(const GlobalOptions& g, const std::string& expr, std::ostream& out) {
  const Stopwatch sw;
  const ModulePtr m = parse_module_expr(expr, g.limits);
  const CoordinatizationReport report = verify_coordinatization(m, g.limits);
  const DistributivityReport dist = verify_distributivity_criterion(m, g.limits);
  if (g.json) {
    out << save_document(report_document("coordinatize", Json::array({expr}),
                                         Json::array({to_json(report), to_json(dist)}), timings_of(g, sw)));
  } else {
    out << "coordinatization of " << expr << "\n"
        << "  |End(M)|: " << report.end_ring_order << ", idempotents: " << report.idempotent_count << "\n"
        << "  End(M) regular: " << yes_no(report.s_regular) << "\n"
        << "  |L(M)|: " << report.module_lattice_size << ", |L(S_S)|: " << report.ideal_lattice_size << "\n"
        << "  phi/psi mutually inverse: " << yes_no(report.mutually_inverse) << "\n"
        << "  phi verified: " << yes_no(report.phi_verification.passed()) << "\n"
        << "  independent isomorphism: " << yes_no(report.iso_cross_check) << "\n"
        << "  modular/complemented/distributive: " << yes_no(report.lattice_props.modular) << "/"
        << yes_no(report.lattice_props.complemented) << "/" << yes_no(report.lattice_props.distributive) << "\n"
        << "  End(M) strongly regular: " << yes_no(report.strongly_regular) << "\n"
        << "  distributive iff strongly regular: " << yes_no(dist.biconditional_holds) << "\n"
        << "  coordinatizable: " << yes_no(report.coordinatizable) << "\n";
    for (const auto& f : report.failures) out << "  failure: " << f << "\n";
  }
  return report.all_checks_passed() && dist.biconditional_holds ? kOk : kCheckFailed;
}

int verify(const GlobalOptions& g, const std::string& corpus, std::ostream& out) {
  if (corpus != "default") throw UsageError("unknown corpus `" + corpus + "` (available: default)");
  const auto results = run_default_corpus(g.limits);
  const bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  if (g.json) {
    Json list = Json::array();
    Json timings = Json::object();
    for (const auto& r : results) {
      list.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      if (g.timings) timings[std::to_string(r.id)] = r.seconds;
    }
    out << save_document(report_document("verify", Json::array({corpus}), std::move(list), std::move(timings)));
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << std::left << std::setw(34) << r.name << " "
          << r.detail;
      if (g.timings) out << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
      out << "\n";
    }
    out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  }
  return all ? kOk : kCheckFailed;
}

int export_cmd(const GlobalOptions& g, const std::string& expr, const std::string& as, const std::string& path,
               std::ostream& out) {
  std::string text;
  if (as == "ring") {
    text = save_document(ring_document(*parse_ring_expr(expr, g.limits)));
  } else if (as == "module") {
    text = save_document(module_document(*parse_module_expr(expr, g.limits)));
  } else if (as == "lattice" || as == "dot") {
    const SubmoduleLattice subs = submodule_lattice(parse_module_expr(expr, g.limits), g.limits);
    text = as == "dot" ? export_dot(subs.lattice, "submodules") : save_document(lattice_document(subs.lattice));
  } else if (as == "ideals" || as == "ideals-dot") {
    const PrincipalIdealLattice ideals = principal_right_ideals(*parse_ring_expr(expr, g.limits));
    text = as == "ideals-dot" ? export_dot(ideals.lattice, "ideals") : save_document(lattice_document(ideals.lattice));
  } else {
    throw UsageError("unknown export kind `" + as + "`");
  }
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coordlat: finite rings, modules, submodule lattices and their coordinatization", "coordlat"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit a JSON report document");
  app.add_flag("--timings", g.timings, "Include wall-clock timings (output is then not reproducible)");
  app.add_option("--max-ring", g.limits.max_ring, "Largest ring order for constructors and End(M)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-module", g.limits.max_module, "Largest module order")->check(CLI::PositiveNumber);
  app.add_option("--max-hom-candidates", g.limits.max_hom_candidates, "Largest hom search space")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string expr, expr2, dot_path, corpus = "default", as = "ring", out_path;
  bool expect_regular = false, expect_irregular = false, expect_strong = false, expect_not_strong = false;
  bool force = false;

  auto* ring = app.add_subcommand("ring", "Ring constructors and regularity checks");
  ring->require_subcommand(1);
  auto* ring_check_cmd = ring->add_subcommand("check", "Von Neumann and strong regularity");
  ring_check_cmd->add_option("ring", expr, "Ring expression or file")->required();
  ring_check_cmd->add_flag("--expect-regular", expect_regular, "Exit 1 unless regular");
  ring_check_cmd->add_flag("--expect-irregular", expect_irregular, "Exit 1 if regular");
  ring_check_cmd->add_flag("--expect-strongly-regular", expect_strong, "Exit 1 unless strongly regular");
  ring_check_cmd->add_flag("--expect-not-strongly-regular", expect_not_strong, "Exit 1 if strongly regular");
  ring_check_cmd->callback([&] {
    action = [&] { return ring_check(g, expr, expect_regular, expect_irregular, expect_strong, expect_not_strong, out); };
  });
  auto* ring_validate_cmd = ring->add_subcommand("validate", "Exhaustive ring axiom check");
  ring_validate_cmd->add_option("ring", expr, "Ring expression or file")->required();
  ring_validate_cmd->add_flag("--force", force, "Check even above the exhaustive-check cap");
  ring_validate_cmd->callback([&] { action = [&] { return ring_validate(g, expr, force, out); }; });
  auto* ring_show = ring->add_subcommand("show", "Print the ring document");
  ring_show->add_option("ring", expr, "Ring expression or file")->required();
  ring_show->callback([&] { action = [&] { return export_cmd(g, expr, "ring", "", out); }; });

  auto* module = app.add_subcommand("module", "Module constructors and checks");
  module->require_subcommand(1);
  auto* module_check_cmd = module->add_subcommand("check", "Elementwise module regularity");
  module_check_cmd->add_option("module", expr, "Module expression or file")->required();
  module_check_cmd->add_flag("--expect-regular", expect_regular, "Exit 1 unless regular");
  module_check_cmd->add_flag("--expect-irregular", expect_irregular, "Exit 1 if regular");
  module_check_cmd->callback(
      [&] { action = [&] { return module_check(g, expr, expect_regular, expect_irregular, out); }; });
  auto* module_show = module->add_subcommand("show", "Print the module document");
  module_show->add_option("module", expr, "Module expression or file")->required();
  module_show->callback([&] { action = [&] { return export_cmd(g, expr, "module", "", out); }; });
  auto* summands = module->add_subcommand("summands", "Check that every submodule is a direct summand");
  summands->add_option("module", expr, "Module expression or file")->required();
  summands->callback([&] { action = [&] { return module_summands(g, expr, out); }; });
  auto* preimages = module->add_subcommand("preimages", "Preimages of submodules are direct summands");
  preimages->add_option("source", expr, "Source module U")->required();
  preimages->add_option("target", expr2, "Target module M (must be regular)")->required();
  preimages->callback([&] { action = [&] { return module_preimages(g, expr, expr2, out); }; });
  auto* relative = module->add_subcommand("relative", "Is the target U-regular for the source U");
  relative->add_option("source", expr, "Source module U")->required();
  relative->add_option("target", expr2, "Target module M")->required();
  relative->callback([&] { action = [&] { return module_relative(g, expr, expr2, out); }; });

  auto* lattice = app.add_subcommand("lattice", "Submodule lattices");
  lattice->require_subcommand(1);
  auto* lattice_of_cmd = lattice->add_subcommand("of", "Submodule lattice and its properties");
  lattice_of_cmd->add_option("module", expr, "Module expression or file")->required();
  lattice_of_cmd->add_option("--dot", dot_path, "Write the Hasse diagram to this file");
  lattice_of_cmd->callback([&] { action = [&] { return lattice_of(g, expr, dot_path, out); }; });

  auto* coord = app.add_subcommand("coordinatize", "Build End(M), both lattices, phi and psi, and verify them");
  coord->add_option("module", expr, "Module expression or file")->required();
  coord->callback([&] { action = [&] { return coordinatize(g, expr, out); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification corpus");
  verify_cmd->add_option("--corpus", corpus, "Corpus name")->default_val("default");
  verify_cmd->callback([&] { action = [&] { return verify(g, corpus, out); }; });

  auto* exp = app.add_subcommand("export", "Write a document or diagram");
  exp->add_option("expr", expr, "Ring or module expression or file")->required();
  exp->add_option("--as", as, "ring | module | lattice | dot | ideals | ideals-dot")
      ->check(CLI::IsMember({"ring", "module", "lattice", "dot", "ideals", "ideals-dot"}));
  exp->add_option("--out", out_path, "Output file (default: standard output)");
  exp->callback([&] { action = [&] { return export_cmd(g, expr, as, out_path, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const StructuralError& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InconsistencyError& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace coordlat::cli
