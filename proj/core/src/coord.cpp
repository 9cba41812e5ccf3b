#include "coordlat/coord.hpp"

#include <algorithm>
#include <set>

#include "coordlat/error.hpp"
#include "coordlat/regcheck.hpp"

namespace coordlat {

EndRing::EndRing(ModulePtr module, std::vector<ModuleHom> homs, const Limits& limits)
    : module_(std::move(module)), homs_(std::move(homs)) {
  const std::size_t n = homs_.size();
  if (n == 0) throw UsageError("an endomorphism ring needs at least the zero map");
  if (n > limits.max_ring) {
    throw SizeLimitError("End(M) has " + std::to_string(n) + " elements, cap is " + std::to_string(limits.max_ring));
  }
  for (Index i = 0; i < n; ++i) {
    const ModuleHom& h = homs_[i];
    if (!same_module(h.source, module_) || !same_module(h.target, module_)) {
      throw UsageError("endomorphism list contains a map with other endpoints");
    }
    if (!by_image_.emplace(h.image, i).second) throw UsageError("endomorphism list contains duplicates");
  }
  const RightModule& m = *module_;
  auto lookup = [&](const std::vector<Index>& img) {
    auto it = by_image_.find(img);
    if (it == by_image_.end()) throw InconsistencyError("endomorphism list is not closed under the ring operations");
    return it->second;
  };

  std::vector<std::string> labels(n);
  for (Index i = 0; i < n; ++i) {
    std::string s = "[";
    for (std::size_t x = 0; x < m.order(); ++x) {
      if (x) s += ' ';
      s += m.label(homs_[i].image[x]);
    }
    labels[i] = s + "]";
  }

  std::vector<Index> add(n * n), mul(n * n);
  std::vector<Index> img(m.order());
  for (Index s = 0; s < n; ++s) {
    const auto& fs = homs_[s].image;
    for (Index t = 0; t < n; ++t) {
      const auto& ft = homs_[t].image;
      for (std::size_t x = 0; x < img.size(); ++x) img[x] = m.add(fs[x], ft[x]);
      add[s * n + t] = lookup(img);
      // (s * t)(x) = s(t(x))
      for (std::size_t x = 0; x < img.size(); ++x) img[x] = fs[ft[x]];
      mul[s * n + t] = lookup(img);
    }
  }
  const Index zero = lookup(zero_hom(module_, module_).image);
  const Index one = lookup(identity_hom(module_).image);
  ring_ = std::make_shared<const FiniteRing>(std::move(labels), std::move(add), std::move(mul), zero, one);
}

std::optional<Index> EndRing::index_of(const std::vector<Index>& image) const {
  auto it = by_image_.find(image);
  if (it == by_image_.end()) return std::nullopt;
  return it->second;
}

EndRing endomorphism_ring(const ModulePtr& m, const Limits& limits) {
  return EndRing(m, hom_enumerate(m, m, limits.max_hom_candidates), limits);
}

ElementSet principal_right_ideal(const FiniteRing& ring, Index s) {
  std::vector<char> mask(ring.order(), 0);
  for (Index t = 0; t < ring.order(); ++t) mask[ring.mul(s, t)] = 1;
  ElementSet out;
  for (Index x = 0; x < ring.order(); ++x) {
    if (mask[x]) out.push_back(x);
  }
  return out;
}

PrincipalIdealLattice principal_right_ideals(const FiniteRing& ring) {
  std::map<ElementSet, Index> first_generator;
  for (Index s = 0; s < ring.order(); ++s) first_generator.emplace(principal_right_ideal(ring, s), s);

  std::vector<PrincipalIdeal> ideals;
  for (auto& [set, gen] : first_generator) ideals.push_back({gen, set});
  std::stable_sort(ideals.begin(), ideals.end(), [](const PrincipalIdeal& a, const PrincipalIdeal& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });

  const bool regular = is_von_neumann_regular(ring).regular;
  std::vector<ElementSet> family;
  family.reserve(ideals.size());
  for (const auto& j : ideals) family.push_back(j.elements);
  try {
    FiniteLattice lattice = lattice_from_sets(family);
    return PrincipalIdealLattice{std::move(ideals), std::move(lattice), regular};
  } catch (const StructuralError& e) {
    throw StructuralError(std::string(e.what()) +
                          (regular ? "" : " (ring is not von Neumann regular, so principal right ideals need not "
                                          "form a lattice)"));
  }
}

PrincipalIdealLattice principal_right_ideals(const EndRing& s) { return principal_right_ideals(*s.ring()); }

std::optional<Index> SubmoduleLattice::index_of(const ElementSet& elements) const {
  auto it = std::lower_bound(submodules.begin(), submodules.end(), elements,
                             [](const SubmoduleRef& a, const ElementSet& b) {
                               if (a.size() != b.size()) return a.size() < b.size();
                               return a.elements() < b;
                             });
  if (it == submodules.end() || it->elements() != elements) return std::nullopt;
  return static_cast<Index>(it - submodules.begin());
}

SubmoduleLattice submodule_lattice(const ModulePtr& m, const Limits& limits) {
  auto subs = enumerate_submodules(m, limits.max_module);
  std::vector<ElementSet> family;
  family.reserve(subs.size());
  for (const auto& s : subs) family.push_back(s.elements());
  SubmoduleLattice out{std::move(subs), lattice_from_sets(family)};

  const auto& l = out.lattice;
  for (Index a = 0; a < l.size(); ++a) {
    for (Index b = a; b < l.size(); ++b) {
      if (sum(out.submodules[a], out.submodules[b]).elements() != family[l.join(a, b)]) {
        throw InconsistencyError("join of " + l.key(a) + " and " + l.key(b) + " is not their sum");
      }
      if (intersect(out.submodules[a], out.submodules[b]).elements() != family[l.meet(a, b)]) {
        throw InconsistencyError("meet of " + l.key(a) + " and " + l.key(b) + " is not their intersection");
      }
    }
  }
  return out;
}

SubmoduleRef phi(const EndRing& s, const PrincipalIdeal& j) {
  if (j.generator >= s.ring()->order() || principal_right_ideal(*s.ring(), j.generator) != j.elements) {
    throw UsageError("phi: ideal does not belong to this endomorphism ring");
  }
  std::vector<char> seen(s.module()->order(), 0);
  std::vector<Index> images;
  for (Index f : j.elements) {
    for (Index y : s.hom(f).image) {
      if (!seen[y]) {
        seen[y] = 1;
        images.push_back(y);
      }
    }
  }
  return generate_submodule(s.module(), images);
}

PrincipalIdeal psi(const EndRing& s, const SubmoduleRef& n) {
  if (!same_module(n.module(), s.module())) throw UsageError("psi: submodule of a different module");
  const std::vector<char> inside = n.mask();
  ElementSet filtered;
  for (Index f = 0; f < s.homs().size(); ++f) {
    const auto& img = s.hom(f).image;
    if (std::all_of(img.begin(), img.end(), [&](Index y) { return inside[y] != 0; })) filtered.push_back(f);
  }

  const auto complement = is_direct_summand(n);
  if (!complement) throw InconsistencyError("psi: " + format_set(n.elements()) + " is not a direct summand");
  const ModuleHom e = projection_idempotent(n, *complement);
  const auto e_index = s.index_of(e.image);
  if (!e_index) throw InconsistencyError("psi: projection idempotent missing from End(M)");
  ElementSet generated = principal_right_ideal(*s.ring(), *e_index);
  if (generated != filtered) {
    throw InconsistencyError("psi: maps into " + format_set(n.elements()) + " do not form eS");
  }
  return PrincipalIdeal{*e_index, std::move(generated)};
}

namespace {

// a <= b iff f(a) <= f(b), for all pairs.
bool order_embedding(const FiniteLattice& s, const FiniteLattice& t, const std::vector<Index>& f) {
  for (Index a = 0; a < s.size(); ++a) {
    for (Index b = 0; b < s.size(); ++b) {
      if (s.leq(a, b) != t.leq(f[a], f[b])) return false;
    }
  }
  return true;
}

}  // namespace

CoordinatizationReport verify_coordinatization(const ModulePtr& m, const Limits& limits) {
  const auto regularity = module_is_regular(m, limits);
  if (!regularity.regular) {
    throw PreconditionError("module is not regular (element " + std::to_string(*regularity.counterexample) +
                            " has no witness)");
  }
  CoordinatizationReport report;
  report.module_regular = true;

  const EndRing s = endomorphism_ring(m, limits);
  const FiniteRing& ring = *s.ring();
  report.end_ring_order = ring.order();
  report.s_regular = is_von_neumann_regular(ring).regular;
  const auto idem = idempotents(ring);
  report.idempotent_count = idem.size();

  PrincipalIdealLattice ideals = principal_right_ideals(s);
  SubmoduleLattice subs = submodule_lattice(m, limits);
  report.ideal_lattice_size = ideals.lattice.size();
  report.module_lattice_size = subs.lattice.size();
  auto ideal_lattice = std::make_shared<const FiniteLattice>(ideals.lattice);
  auto module_lattice = std::make_shared<const FiniteLattice>(subs.lattice);

  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };

  report.phi_map = LatticeMap{ideal_lattice, module_lattice, {}};
  for (const auto& j : ideals.ideals) {
    const SubmoduleRef n = phi(s, j);
    const auto idx = subs.index_of(n.elements());
    if (!idx) throw InconsistencyError("phi produced a set that is not a submodule");
    report.phi_map.image.push_back(*idx);
  }

  auto ideal_index = [&](const ElementSet& set) -> std::optional<Index> {
    for (Index i = 0; i < ideals.ideals.size(); ++i) {
      if (ideals.ideals[i].elements == set) return i;
    }
    return std::nullopt;
  };
  report.psi_map = LatticeMap{module_lattice, ideal_lattice, {}};
  report.psi_is_idempotent_ideal = true;
  for (const auto& n : subs.submodules) {
    const PrincipalIdeal j = psi(s, n);
    if (ring.mul(j.generator, j.generator) != j.generator) {
      report.psi_is_idempotent_ideal = false;
      fail("psi(" + format_set(n.elements()) + ") generator is not idempotent");
    }
    const auto idx = ideal_index(j.elements);
    if (!idx) throw InconsistencyError("psi produced a set that is not a principal right ideal");
    report.psi_map.image.push_back(*idx);
  }

  const auto& phi_img = report.phi_map.image;
  const auto& psi_img = report.psi_map.image;
  report.mutually_inverse = phi_img.size() == psi_img.size();
  for (Index i = 0; i < phi_img.size() && report.mutually_inverse; ++i) {
    if (psi_img[phi_img[i]] != i) {
      report.mutually_inverse = false;
      fail("psi(phi(J)) != J for J = " + ideal_lattice->key(i));
    }
  }
  for (Index k = 0; k < psi_img.size() && report.mutually_inverse; ++k) {
    if (phi_img[psi_img[k]] != k) {
      report.mutually_inverse = false;
      fail("phi(psi(N)) != N for N = " + module_lattice->key(k));
    }
  }
  if (report.mutually_inverse) {
    report.phi_monotone = order_embedding(*ideal_lattice, *module_lattice, phi_img);
    report.psi_monotone = order_embedding(*module_lattice, *ideal_lattice, psi_img);
  }
  if (!report.phi_monotone) fail("phi is not an order embedding");
  if (!report.psi_monotone) fail("psi is not an order embedding");

  report.phi_verification = verify_map(report.phi_map);
  for (const auto& item : report.phi_verification.items) {
    if (!item.passed) fail("phi map: " + item.name + " " + item.detail);
  }

  report.phi_on_idempotents = true;
  for (Index e : idem) {
    const PrincipalIdeal j{e, principal_right_ideal(ring, e)};
    if (phi(s, j).elements() != image(s.hom(e)).elements()) {
      report.phi_on_idempotents = false;
      fail("phi(eS) != e(M) for e = " + ring.label(e));
    }
  }

  // The two isomorphisms can differ by an automorphism, so compare through psi.
  if (auto iso = are_isomorphic(ideal_lattice, module_lattice); iso && report.mutually_inverse) {
    LatticeMap twist{ideal_lattice, ideal_lattice, {}};
    for (Index v : iso->image) twist.image.push_back(psi_img[v]);
    report.iso_cross_check = verify_map(*iso).passed() && verify_map(twist).passed();
  }
  if (!report.iso_cross_check) fail("independent isomorphism search found no isomorphism");

  const FiniteLattice& lm = *module_lattice;
  report.lattice_props = {is_modular(lm).holds, is_complemented(lm).holds, is_distributive(lm).holds};
  if (!report.lattice_props.modular) fail("submodule lattice is not modular");
  if (!report.lattice_props.complemented) fail("submodule lattice is not complemented");
  report.strongly_regular = is_strongly_regular(ring);
  report.distributivity_criterion = report.lattice_props.distributive == report.strongly_regular;
  if (!report.distributivity_criterion) fail("distributivity does not match strong regularity of End(M)");
  if (!report.s_regular) fail("End(M) is not von Neumann regular");

  report.coordinatizable = report.s_regular && report.mutually_inverse && report.phi_verification.passed();
  return report;
}

DistributivityReport verify_distributivity_criterion(const ModulePtr& m, const Limits& limits) {
  const auto regularity = module_is_regular(m, limits);
  if (!regularity.regular) {
    throw PreconditionError("module is not regular (element " + std::to_string(*regularity.counterexample) +
                            " has no witness)");
  }
  DistributivityReport report;
  const SubmoduleLattice subs = submodule_lattice(m, limits);
  const LawCheck law = is_distributive(subs.lattice);
  report.distributive = law.holds;
  if (law.counterexample) {
    const auto& [x, y, z] = *law.counterexample;
    report.counterexample = std::array<SubmoduleRef, 3>{subs.submodules[x], subs.submodules[y], subs.submodules[z]};
  }
  const EndRing s = endomorphism_ring(m, limits);
  report.strongly_regular = true;
  for (Index r = 0; r < s.ring()->order(); ++r) {
    if (!strong_witness(*s.ring(), r)) {
      report.strongly_regular = false;
      report.non_strong_element = r;
      break;
    }
  }
  report.biconditional_holds = report.distributive == report.strongly_regular;
  return report;
}

}  // namespace coordlat
