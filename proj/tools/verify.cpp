// The default verification corpus behind `coordlat verify --corpus default`.

#include <chrono>
#include <functional>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "coordlat/coord.hpp"
#include "coordlat/io.hpp"
#include "coordlat/regcheck.hpp"

namespace coordlat::cli {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && passed) {
      passed = false;
      detail = what;
    }
  }
};

CriterionResult timed(int id, std::string name, double limit, const std::function<Outcome()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit_seconds = limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    r.passed = o.passed;
    r.detail = o.passed ? (o.detail.empty() ? "ok" : o.detail) : o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.seconds > limit) {
    r.passed = false;
    r.detail = "exceeded time limit of " + std::to_string(limit) + " s";
  }
  return r;
}

struct NamedRing {
  std::string name;
  RingPtr ring;
  bool commutative;
};

struct NamedModule {
  std::string name;
  ModulePtr module;
};

std::vector<NamedRing> regular_rings(const Limits& l) {
  auto z2 = make_zmod(2, l.max_zmod), z3 = make_zmod(3, l.max_zmod);
  return {{"zmod:6", make_zmod(6, l.max_zmod), true},
          {"zmod:2", z2, true},
          {"zmod:3", z3, true},
          {"product:zmod:2:zmod:3", make_product(*z2, *z3, l.max_ring), true},
          {"matrix:zmod:2:2", make_matrix_ring(*z2, 2, l.max_ring), false}};
}

std::vector<NamedModule> regular_modules(const Limits& l) {
  auto z2 = make_zmod(2, l.max_zmod), z3 = make_zmod(3, l.max_zmod);
  return {{"free:zmod:2:0", make_free_module(z2, 0, l.max_module)},
          {"free:zmod:6:1", make_free_module(make_zmod(6, l.max_zmod), 1, l.max_module)},
          {"free:zmod:2:2", make_free_module(z2, 2, l.max_module)},
          {"free:product:zmod:2:zmod:3:1", make_free_module(make_product(*z2, *z3, l.max_ring), 1, l.max_module)},
          {"free:matrix:zmod:2:2:1", make_free_module(make_matrix_ring(*z2, 2, l.max_ring), 1, l.max_module)}};
}

// Subsets containing zero that are closed under addition and the action.
std::vector<ElementSet> subset_filter(const RightModule& m) {
  const std::size_t n = m.order();
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (!((bits >> m.zero()) & 1)) continue;
    auto in = [&](Index x) { return ((bits >> x) & 1) != 0; };
    bool closed = true;
    for (Index a = 0; a < n && closed; ++a) {
      if (!in(a)) continue;
      for (Index b = 0; b < n && closed; ++b) closed = !in(b) || in(m.add(a, b));
      for (Index r = 0; r < m.ring().order() && closed; ++r) closed = in(m.act(a, r));
    }
    if (!closed) continue;
    ElementSet s;
    for (Index x = 0; x < n; ++x) {
      if (in(x)) s.push_back(x);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::string capture(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = run(args, out, err);
  return out.str() + "\x1f" + err.str();
}

// Reads "nA -> nB;" edges back out of a DOT export.
std::vector<std::pair<Index, Index>> parse_dot_edges(const std::string& dot) {
  std::vector<std::pair<Index, Index>> edges;
  static const std::regex edge(R"(n(\d+) -> n(\d+);)");
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) {
    edges.emplace_back(static_cast<Index>(std::stoul((*it)[1])), static_cast<Index>(std::stoul((*it)[2])));
  }
  return edges;
}

}  // namespace

std::vector<CriterionResult> run_default_corpus(const Limits& limits) {
  std::vector<CriterionResult> results;

  results.push_back(timed(1, "ring regularity", 1.0, [&] {
    Outcome o;
    auto rings = regular_rings(limits);
    rings.push_back({"zmod:4", make_zmod(4, limits.max_zmod), true});
    for (const auto& [name, ring, comm] : rings) {
      const auto report = is_von_neumann_regular(*ring);
      bool oracle = true;
      for (Index r = 0; r < ring->order() && oracle; ++r) {
        bool any = false;
        for (Index s = 0; s < ring->order() && !any; ++s) any = ring->mul(ring->mul(r, s), r) == r;
        oracle = any;
      }
      o.require(report.regular == oracle, name + ": predicate disagrees with double-loop oracle");
      o.require(report.regular == (name != "zmod:4"), name + ": unexpected regularity");
      for (Index r = 0; r < report.witnesses.size(); ++r) {
        const Index s = report.witnesses[r];
        o.require(ring->mul(ring->mul(r, s), r) == r, name + ": witness fails r*s*r = r");
      }
      if (name == "zmod:4") o.require(report.counterexample == Index{2}, "zmod:4: counterexample is not 2");
    }
    o.detail = std::to_string(rings.size()) + " rings";
    return o;
  }));

  results.push_back(timed(2, "strong regularity", 1.0, [&] {
    Outcome o;
    auto rings = regular_rings(limits);
    rings.push_back({"zmod:4", make_zmod(4, limits.max_zmod), true});
    rings.push_back({"matrix:zmod:3:2", make_matrix_ring(*make_zmod(3, limits.max_zmod), 2, limits.max_ring), false});
    for (const auto& [name, ring, comm] : rings) {
      const bool strong = is_strongly_regular(*ring);
      const bool regular = is_von_neumann_regular(*ring).regular;
      o.require(!strong || regular, name + ": strongly regular but not regular");
      if (comm && regular) o.require(strong, name + ": commutative regular ring not strongly regular");
      if (name == "matrix:zmod:2:2") o.require(!strong, name + ": must not be strongly regular");
    }
    o.detail = std::to_string(rings.size()) + " rings";
    return o;
  }));

  results.push_back(timed(3, "modular complemented lattices", 5.0, [&] {
    Outcome o;
    const std::size_t expected[] = {1, 4, 5, 4, 5};
    const auto modules = regular_modules(limits);
    for (std::size_t i = 0; i < modules.size(); ++i) {
      const auto& [name, m] = modules[i];
      const auto subs = submodule_lattice(m, limits);
      o.require(subs.lattice.size() == expected[i], name + ": lattice size " + std::to_string(subs.lattice.size()));
      o.require(is_modular(subs.lattice).holds, name + ": not modular");
      o.require(is_complemented(subs.lattice).holds, name + ": not complemented");
      if (m->order() <= 20) {
        std::vector<ElementSet> found;
        for (const auto& s : subs.submodules) found.push_back(s.elements());
        o.require(found == subset_filter(*m), name + ": enumeration disagrees with subset filter");
      }
    }
    o.detail = "sizes 1, 4, 5, 4, 5";
    return o;
  }));

  results.push_back(timed(4, "coordinatization", 30.0, [&] {
    Outcome o;
    for (const auto& [name, m] : regular_modules(limits)) {
      const auto r = verify_coordinatization(m, limits);
      o.require(r.all_checks_passed(), name + ": " + (r.failures.empty() ? "not coordinatizable" : r.failures.front()));
      o.require(r.phi_monotone && r.psi_monotone && r.iso_cross_check, name + ": order or isomorphism check failed");
      if (name == "free:zmod:2:2") {
        o.require(r.end_ring_order == 16, "End(zmod2^2) order");
        o.require(r.module_lattice_size == 5 && r.ideal_lattice_size == 5, "zmod2^2 lattice sizes");
        o.require(r.idempotent_count == 8, "End(zmod2^2) idempotent count");
      }
    }
    return o;
  }));

  results.push_back(timed(5, "distributive iff strongly regular", 30.0, [&] {
    Outcome o;
    for (const auto& [name, m] : regular_modules(limits)) {
      const auto r = verify_distributivity_criterion(m, limits);
      o.require(r.biconditional_holds, name + ": biconditional fails");
      if (name == "free:zmod:6:1") o.require(r.distributive && r.strongly_regular, name + ": expected (true, true)");
      if (name == "free:zmod:2:2") {
        o.require(!r.distributive && !r.strongly_regular, name + ": expected (false, false)");
        bool atoms = r.counterexample.has_value();
        if (atoms) {
          const auto& t = *r.counterexample;
          for (const auto& s : t) atoms = atoms && s.size() == 2;
          atoms = atoms && !(t[0] == t[1]) && !(t[1] == t[2]) && !(t[0] == t[2]);
        }
        o.require(atoms, name + ": counterexample is not three distinct atoms");
      }
    }
    return o;
  }));

  results.push_back(timed(6, "preimages are direct summands", 60.0, [&] {
    Outcome o;
    const auto z6 = make_free_module(make_zmod(6, limits.max_zmod), 1, limits.max_module);
    const auto z22 = make_free_module(make_zmod(2, limits.max_zmod), 2, limits.max_module);
    const Index evens[] = {2};
    const auto sub = submodule_as_module(generate_submodule(z6, evens)).module;
    const std::vector<std::pair<ModulePtr, ModulePtr>> pairs = {{z6, z6}, {z22, z22}, {z6, sub}};
    std::size_t checked = 0;
    for (const auto& [u, m] : pairs) {
      const auto r = check_preimage_summands(u, m, limits);
      o.require(r.passed, "pair failed");
      checked += r.entries.size();
    }
    o.detail = std::to_string(checked) + " (f, N) pairs";
    return o;
  }));

  results.push_back(timed(7, "regular modules", 5.0, [&] {
    Outcome o;
    std::vector<NamedModule> modules;
    for (const auto& [name, ring, comm] : regular_rings(limits)) {
      modules.push_back({name + " as R_R", make_free_module(ring, 1, limits.max_module)});
    }
    modules.push_back({"free:zmod:2:2", make_free_module(make_zmod(2, limits.max_zmod), 2, limits.max_module)});
    const auto z4 = make_free_module(make_zmod(4, limits.max_zmod), 1, limits.max_module);
    const auto bad = module_is_regular(z4, limits);
    o.require(!bad.regular && bad.counterexample == Index{2}, "zmod:4 over itself: expected counterexample 2");
    o.require(!is_relative_regular(z4, z4, limits).holds, "zmod:4: relative regularity should fail");
    for (const auto& [name, m] : modules) {
      const auto r = module_is_regular(m, limits);
      o.require(r.regular, name + ": not regular");
      const auto rr = make_free_module(m->ring_ptr(), 1, limits.max_module);
      o.require(is_relative_regular(rr, m, limits).holds == r.regular, name + ": relative cross-check disagrees");
    }
    return o;
  }));

  results.push_back(timed(8, "determinism and formats", 5.0, [&] {
    Outcome o;
    const std::vector<std::vector<std::string>> invocations = {
        {"ring", "check", "zmod:4", "--json"},
        {"--json", "module", "check", "free:zmod:6:1"},
        {"--json", "lattice", "of", "free:zmod:2:2"},
        {"--json", "coordinatize", "free:zmod:2:2"},
        {"coordinatize", "free:matrix:zmod:2:2:1"},
        {"export", "free:zmod:2:2", "--as", "dot"},
    };
    for (const auto& args : invocations) {
      int c1 = 0, c2 = 0;
      const std::string a = capture(args, &c1);
      const std::string b = capture(args, &c2);
      o.require(c1 != kUsageError, "invocation rejected: `" + args[0] + " " + args[1] + "`");
      o.require(a == b && c1 == c2, "output differs between runs for `" + args[0] + " " + args[1] + "`");
    }

    std::vector<Document> docs;
    for (const auto& [name, ring, comm] : regular_rings(limits)) docs.push_back(ring_document(*ring));
    for (const auto& [name, m] : regular_modules(limits)) {
      docs.push_back(module_document(*m));
      const auto subs = submodule_lattice(m, limits);
      docs.push_back(lattice_document(subs.lattice));

      const std::string dot = export_dot(subs.lattice);
      const std::size_t n = subs.lattice.size();
      std::vector<char> closure(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) closure[i * n + i] = 1;
      for (const auto& [a, b] : parse_dot_edges(dot)) closure[a * n + b] = 1;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (closure[i * n + k] && closure[k * n + j]) closure[i * n + j] = 1;
          }
        }
      }
      o.require(closure == subs.lattice.leq_matrix(), name + ": DOT covers do not regenerate the order");
    }
    docs.push_back(report_document("verify", Json::array({"default"}), Json::array({Json{{"ok", true}}})));
    for (const auto& doc : docs) {
      const std::string text = save_document(doc);
      const Document back = load_document(text);
      o.require(back == doc && save_document(back) == text, "round trip failed for a document");
    }
    o.detail = std::to_string(invocations.size()) + " invocations, " + std::to_string(docs.size()) + " documents";
    return o;
  }));

  return results;
}

}  // namespace coordlat::cli
