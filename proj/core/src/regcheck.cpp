#include "coordlat/regcheck.hpp"

#include "coordlat/error.hpp"

namespace coordlat {

namespace {

bool is_closed_submodule(const RightModule& m, const ElementSet& set) {
  std::vector<char> mask(m.order(), 0);
  for (Index x : set) mask[x] = 1;
  if (!mask[m.zero()]) return false;
  for (Index a : set) {
    for (Index b : set) {
      if (!mask[m.add(a, b)]) return false;
    }
    for (Index r = 0; r < m.ring().order(); ++r) {
      if (!mask[m.act(a, r)]) return false;
    }
  }
  return true;
}

}  // namespace

ModuleRegularityReport module_is_regular(const ModulePtr& m, const Limits& limits) {
  const ModulePtr ring_module = make_free_module(m->ring_ptr(), 1, limits.max_module);
  const auto homs = hom_enumerate(m, ring_module, limits.max_hom_candidates);

  ModuleRegularityReport report;
  report.hom_count = homs.size();
  report.regular = true;
  std::vector<std::size_t> witness(m->order());
  for (Index x = 0; x < m->order(); ++x) {
    bool found = false;
    for (std::size_t gi = 0; gi < homs.size() && !found; ++gi) {
      // R_R shares its indices with the ring, so g(x) is a ring element.
      if (m->act(x, homs[gi].image[x]) == x) {
        witness[x] = gi;
        found = true;
      }
    }
    if (!found) {
      report.regular = false;
      report.counterexample = x;
      break;
    }
  }
  if (report.regular) report.witness = std::move(witness);
  return report;
}

RelativeRegularityReport is_relative_regular(const ModulePtr& u, const ModulePtr& m, const Limits& limits) {
  const auto homs_um = hom_enumerate(u, m, limits.max_hom_candidates);
  const auto homs_mu = hom_enumerate(m, u, limits.max_hom_candidates);

  RelativeRegularityReport report;
  report.hom_count_um = homs_um.size();
  report.hom_count_mu = homs_mu.size();
  report.holds = true;
  report.witnesses.resize(homs_um.size());
  for (std::size_t fi = 0; fi < homs_um.size(); ++fi) {
    const auto& f = homs_um[fi].image;
    for (std::size_t gi = 0; gi < homs_mu.size(); ++gi) {
      const auto& g = homs_mu[gi].image;
      bool factors = true;
      for (std::size_t x = 0; x < f.size() && factors; ++x) factors = f[g[f[x]]] == f[x];
      if (factors) {
        report.witnesses[fi] = gi;
        break;
      }
    }
    if (!report.witnesses[fi] && report.holds) {
      report.holds = false;
      report.counterexample = fi;
    }
  }
  return report;
}

SummandReport check_summand_property(const ModulePtr& m, const Limits& limits) {
  const auto subs = enumerate_submodules(m, limits.max_module);
  SummandReport report;
  for (const auto& n : subs) {
    auto complement = is_direct_summand(n, subs);
    if (!complement) report.passed = false;
    report.entries.push_back({n, std::move(complement)});
  }
  return report;
}

PreimageReport check_preimage_summands(const ModulePtr& u, const ModulePtr& m, const Limits& limits) {
  const auto regularity = module_is_regular(m, limits);
  if (!regularity.regular) {
    throw PreconditionError("target module is not regular (element " + std::to_string(*regularity.counterexample) +
                            " has no witness)");
  }
  const auto homs = hom_enumerate(u, m, limits.max_hom_candidates);
  const auto subs_m = enumerate_submodules(m, limits.max_module);
  const auto subs_u = enumerate_submodules(u, limits.max_module);

  PreimageReport report;
  report.note =
      "finite generation is automatic for finite modules; each preimage is checked to be a direct summand of the "
      "source and the kernel of the composite with the quotient projection";
  report.hom_count = homs.size();
  report.submodule_count = subs_m.size();

  std::vector<QuotientModule> quotients;
  quotients.reserve(subs_m.size());
  for (const auto& n : subs_m) quotients.push_back(quotient_module(n));

  for (std::size_t fi = 0; fi < homs.size(); ++fi) {
    for (std::size_t ni = 0; ni < subs_m.size(); ++ni) {
      PreimageEntry entry;
      entry.hom = fi;
      entry.submodule = ni;
      const SubmoduleRef pre = preimage(homs[fi], subs_m[ni]);
      entry.preimage = pre.elements();
      entry.is_submodule = is_closed_submodule(*u, pre.elements());
      if (entry.is_submodule) {
        if (auto c = is_direct_summand(pre, subs_u)) entry.complement = c->elements();
      }
      const ModuleHom composite = hom_compose(homs[fi], quotients[ni].projection);
      entry.equals_kernel = preimage(composite, zero_submodule(quotients[ni].module)).elements() == pre.elements();
      if (!entry.ok()) report.passed = false;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace coordlat
