// Acceptance run: one line per criterion, nonzero exit if any fails or runs
// past its time limit. Expected values are checked against the slow oracles
// in ../oracles.hpp rather than against the library's own answers.

#include <chrono>
#include <cstdio>
#include <functional>
#include <regex>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "coordlat/coord.hpp"
#include "coordlat/io.hpp"
#include "coordlat/regcheck.hpp"
#include "oracles.hpp"

using namespace coordlat;

namespace {

struct Check {
  bool ok = true;
  std::string why;

  void operator()(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c(secs < limit, "took " + std::to_string(secs) + " s");
  if (!c.ok) ++failures;
  std::printf("%s  criterion %d  %-36s %8.3f s / %5.1f s%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs, limit,
              c.ok ? "" : "  ", c.why.c_str());
}

struct Named {
  std::string name;
  RingPtr ring;
};

std::vector<Named> regular_rings() {
  auto z2 = make_zmod(2), z3 = make_zmod(3);
  return {{"zmod(6)", make_zmod(6)},
          {"zmod(2)", z2},
          {"zmod(3)", z3},
          {"zmod(2)xzmod(3)", make_product(*z2, *z3)},
          {"M2(zmod(2))", make_matrix_ring(*z2, 2)}};
}

bool commutative(const FiniteRing& r) {
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

std::vector<std::pair<std::string, ModulePtr>> regular_modules() {
  auto z2 = make_zmod(2);
  return {{"zero", make_free_module(z2, 0)},
          {"zmod(6)", make_free_module(make_zmod(6), 1)},
          {"zmod(2)^2", make_free_module(z2, 2)},
          {"zmod(2)xzmod(3)", make_free_module(make_product(*z2, *make_zmod(3)), 1)},
          {"M2(zmod(2))", make_free_module(make_matrix_ring(*z2, 2), 1)}};
}

std::string run_cli(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::run(args, out, err);
  return out.str() + err.str();
}

}  // namespace

int main() {
  criterion(1, "ring regularity", 1.0, [](Check& c) {
    auto rings = regular_rings();
    rings.push_back({"zmod(4)", make_zmod(4)});
    for (const auto& [name, r] : rings) {
      const auto rep = is_von_neumann_regular(*r);
      c(rep.regular == oracle::regular(*r), name + ": disagrees with double loop");
      c(rep.regular == (name != "zmod(4)"), name + ": wrong verdict");
      for (Index a = 0; a < rep.witnesses.size(); ++a) {
        c(r->mul(r->mul(a, rep.witnesses[a]), a) == a, name + ": bad witness");
      }
    }
    c(is_von_neumann_regular(*make_zmod(4)).counterexample == Index{2}, "zmod(4) counterexample");
  });

  criterion(2, "strong regularity", 1.0, [](Check& c) {
    auto rings = regular_rings();
    rings.push_back({"zmod(4)", make_zmod(4)});
    for (const auto& [name, r] : rings) {
      const bool strong = is_strongly_regular(*r);
      c(strong == oracle::strongly_regular(*r), name + ": disagrees with oracle");
      c(!strong || is_von_neumann_regular(*r).regular, name + ": strong but not regular");
      if (commutative(*r) && oracle::regular(*r)) c(strong, name + ": commutative regular not strong");
    }
    c(is_strongly_regular(*make_zmod(6)), "zmod(6)");
    c(!is_strongly_regular(*make_matrix_ring(*make_zmod(2), 2)), "M2(zmod(2))");
  });

  criterion(3, "modular complemented lattices", 5.0, [](Check& c) {
    const std::size_t sizes[] = {1, 4, 5, 4, 5};
    const auto mods = regular_modules();
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const auto& [name, m] = mods[i];
      const auto sl = submodule_lattice(m);
      const auto brute = oracle::submodules(*m);
      c(brute.size() == sizes[i], name + ": oracle lattice size");
      c(sl.lattice.size() == brute.size(), name + ": lattice size");
      for (std::size_t k = 0; k < brute.size() && k < sl.submodules.size(); ++k) {
        c(sl.submodules[k].elements() == brute[k], name + ": submodule mismatch");
      }
      const auto mod = is_modular(sl.lattice);
      c(mod.holds && !mod.counterexample && oracle::modular(sl.lattice), name + ": not modular");
      const auto comp = is_complemented(sl.lattice);
      c(comp.holds && !comp.uncomplemented, name + ": not complemented");
    }
  });

  criterion(4, "coordinatization", 30.0, [](Check& c) {
    for (const auto& [name, m] : regular_modules()) {
      const auto r = verify_coordinatization(m);
      c(r.coordinatizable && r.all_checks_passed(), name + ": not coordinatizable");
      c(r.s_regular && r.mutually_inverse && r.phi_monotone && r.psi_monotone && r.iso_cross_check,
        name + ": component check");
      const auto s = endomorphism_ring(m);
      c(oracle::regular(*s.ring()), name + ": End(M) not regular by oracle");
      if (r.module_lattice_size <= 8) {
        c(oracle::isomorphic(submodule_lattice(m).lattice, principal_right_ideals(s).lattice),
          name + ": lattices not isomorphic by permutation oracle");
      }
      if (name == "zmod(2)^2") {
        c(r.end_ring_order == 16 && oracle::homs(*m, *m).size() == 16, "|S| = 16");
        c(r.module_lattice_size == 5 && r.ideal_lattice_size == 5, "lattice sizes 5");
        c(r.idempotent_count == 8 && oracle::idempotents(*s.ring()).size() == 8, "8 idempotents");
      }
    }
  });

  criterion(5, "distributive iff strongly regular", 30.0, [](Check& c) {
    for (const auto& [name, m] : regular_modules()) {
      const auto r = verify_distributivity_criterion(m);
      c(r.biconditional_holds, name + ": biconditional");
      c(r.distributive == oracle::distributive(submodule_lattice(m).lattice), name + ": distributivity oracle");
      c(r.strongly_regular == oracle::strongly_regular(*endomorphism_ring(m).ring()), name + ": strong oracle");
      if (name == "zmod(6)") c(r.distributive && r.strongly_regular, "zmod(6): (true, true)");
      if (name == "zmod(2)^2") {
        c(!r.distributive && !r.strongly_regular, "zmod(2)^2: (false, false)");
        c(r.counterexample.has_value(), "zmod(2)^2: no counterexample");
        if (r.counterexample) {
          const auto& [x, y, z] = *r.counterexample;
          c(x.size() == 2 && y.size() == 2 && z.size() == 2, "counterexample entries are not atoms");
          c(!(x == y) && !(y == z) && !(x == z), "counterexample atoms are not distinct");
        }
      }
    }
  });

  criterion(6, "preimages are direct summands", 60.0, [](Check& c) {
    auto z6 = make_free_module(make_zmod(6), 1);
    auto z22 = make_free_module(make_zmod(2), 2);
    auto evens = submodule_as_module(SubmoduleRef::checked(z6, {0, 2, 4})).module;
    for (const auto& [u, m] : std::vector<std::pair<ModulePtr, ModulePtr>>{{z6, z6}, {z22, z22}, {z6, evens}}) {
      const auto rep = check_preimage_summands(u, m);
      c(rep.passed, "pair failed");
      const auto homs = oracle::homs(*u, *m);
      const auto subs = oracle::submodules(*m);
      const auto usubs = oracle::submodules(*u);
      c(rep.entries.size() == homs.size() * subs.size(), "entry count");
      // Recompute each preimage directly and check it is a complemented submodule.
      for (const auto& f : homs) {
        for (const auto& n : subs) {
          ElementSet pre;
          for (Index x = 0; x < u->order(); ++x) {
            if (std::binary_search(n.begin(), n.end(), f[x])) pre.push_back(x);
          }
          const bool is_sub = std::find(usubs.begin(), usubs.end(), pre) != usubs.end();
          c(is_sub, "preimage is not a submodule");
          bool summand = false;
          for (const auto& k : usubs) {
            ElementSet both;
            std::set_intersection(pre.begin(), pre.end(), k.begin(), k.end(), std::back_inserter(both));
            summand = summand || (both.size() == 1 && pre.size() * k.size() == u->order());
          }
          c(summand, "preimage is not a direct summand");
        }
      }
    }
  });

  criterion(7, "regular modules", 5.0, [](Check& c) {
    std::vector<std::pair<std::string, ModulePtr>> mods;
    for (const auto& [name, r] : regular_rings()) mods.emplace_back(name, make_free_module(r, 1));
    mods.emplace_back("zmod(2)^2", make_free_module(make_zmod(2), 2));
    mods.emplace_back("zmod(4)", make_free_module(make_zmod(4), 1));
    for (const auto& [name, m] : mods) {
      const auto rep = module_is_regular(m);
      c(rep.regular == (name != "zmod(4)"), name + ": wrong verdict");
      const auto rr = make_free_module(m->ring_ptr(), 1);
      c(rep.regular == is_relative_regular(rr, m).holds, name + ": relative cross-check");
      // Elementwise oracle: some g in Hom(M, R) with m * g(m) = m.
      std::vector<std::vector<Index>> gs;
      if (saturating_pow(rr->order(), m->order()) <= 1'000'000) {
        gs = oracle::homs(*m, *rr);
      } else {
        // m is R_R here: Hom(R_R, R_R) is the left multiplications x -> s*x.
        for (Index s = 0; s < rr->order(); ++s) {
          std::vector<Index> g;
          for (Index x = 0; x < m->order(); ++x) g.push_back(m->ring().mul(s, x));
          gs.push_back(g);
        }
      }
      c(gs.size() == rep.hom_count, name + ": Hom(M, R) count");
      bool all = true;
      for (Index x = 0; x < m->order(); ++x) {
        bool any = false;
        for (const auto& g : gs) any = any || m->act(x, g[x]) == x;
        all = all && any;
      }
      c(all == rep.regular, name + ": elementwise oracle");
      if (name == "zmod(4)") c(rep.counterexample == Index{2}, "zmod(4) counterexample");
    }
  });

  criterion(8, "determinism and formats", 5.0, [](Check& c) {
    const std::vector<std::vector<std::string>> calls = {{"--json", "ring", "check", "zmod:6"},
                                                         {"--json", "module", "check", "free:zmod:6:1"},
                                                         {"--json", "lattice", "of", "free:zmod:2:2"},
                                                         {"--json", "coordinatize", "free:zmod:2:2"},
                                                         {"export", "free:zmod:6:1", "--as", "dot"}};
    for (const auto& args : calls) {
      int a = 0, b = 0;
      const auto first = run_cli(args, &a);
      c(a == cli::kOk, "exit code for " + args[1]);
      c(first == run_cli(args, &b) && a == b, "output differs between runs");
    }
    static const std::regex edge(R"(n(\d+) -> n(\d+);)");
    for (const auto& [name, m] : regular_modules()) {
      const auto l = submodule_lattice(m).lattice;
      for (const auto& doc : {module_document(*m), ring_document(m->ring()), lattice_document(l)}) {
        const auto text = save_document(doc);
        c(load_document(text) == doc && save_document(load_document(text)) == text, name + ": round trip");
      }
      const std::string dot = export_dot(l);
      const std::size_t n = l.size();
      std::vector<char> cl(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) cl[i * n + i] = 1;
      for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) {
        cl[std::stoul((*it)[1]) * n + std::stoul((*it)[2])] = 1;
      }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (cl[i * n + k] && cl[k * n + j]) cl[i * n + j] = 1;
      c(cl == l.leq_matrix(), name + ": DOT closure");
    }
  });

  int code = 0;
  const auto table = run_cli({"verify", "--corpus", "default"}, &code);
  std::printf("%s  coordlat verify --corpus default (exit %d)\n", code == 0 ? "PASS" : "FAIL", code);
  if (code != 0) {
    std::printf("%s", table.c_str());
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
