#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coordlat/finmod.hpp"
#include "coordlat/finring.hpp"
#include "coordlat/latt.hpp"

namespace coordlat {

/// S = End_R(M) as a FiniteRing whose element i is homs()[i].
///
/// Addition is pointwise. Multiplication is composition with endomorphisms
/// written on the left of their arguments: (s * t)(x) = s(t(x)), so t is
/// applied first. With this convention a right ideal eS consists of the
/// maps e o t, whose images lie in e(M).
class EndRing {
 public:
  EndRing(ModulePtr module, std::vector<ModuleHom> homs, const Limits& limits = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const ModulePtr& module() const noexcept { return module_; }
  const std::vector<ModuleHom>& homs() const noexcept { return homs_; }
  const ModuleHom& hom(Index s) const { return homs_.at(s); }

  /// Ring index of an endomorphism, or nullopt if it is not in the list.
  std::optional<Index> index_of(const std::vector<Index>& image) const;

 private:
  ModulePtr module_;
  std::vector<ModuleHom> homs_;
  std::map<std::vector<Index>, Index> by_image_;
  RingPtr ring_;
};

EndRing endomorphism_ring(const ModulePtr& m, const Limits& limits = {});

/// The right ideal sS of a ring, recorded with its least generator.
struct PrincipalIdeal {
  Index generator = 0;
  ElementSet elements;

  bool operator==(const PrincipalIdeal&) const = default;
};

/// sS = { s * t : t in S }.
ElementSet principal_right_ideal(const FiniteRing& ring, Index s);

struct PrincipalIdealLattice {
  std::vector<PrincipalIdeal> ideals;
  FiniteLattice lattice;
  // The family of principal right ideals of a regular ring is always a
  // lattice; for other rings it was only found to be one.
  bool closure_guaranteed = false;
};

/// Principal right ideals ordered by inclusion, sorted by (cardinality,
/// lexicographic). StructuralError when the family is not a lattice, which
/// can only happen for a non-regular ring.
PrincipalIdealLattice principal_right_ideals(const FiniteRing& ring);
PrincipalIdealLattice principal_right_ideals(const EndRing& s);

/// The submodule lattice together with the submodules behind each index.
struct SubmoduleLattice {
  std::vector<SubmoduleRef> submodules;
  FiniteLattice lattice;

  /// Lattice index of a submodule, or nullopt.
  std::optional<Index> index_of(const ElementSet& elements) const;
};

/// Submodules under inclusion. The abstract join and meet are cross-checked
/// against sum and intersection (InconsistencyError on disagreement).
SubmoduleLattice submodule_lattice(const ModulePtr& m, const Limits& limits = {});

/// JM: additive closure of all f(x) with f in J and x in M.
SubmoduleRef phi(const EndRing& s, const PrincipalIdeal& j);

/// { f in S : f(M) <= N }, returned as eS with e the projection onto N
/// along its least complement. InconsistencyError if N has no complement
/// or the filtered set differs from eS.
PrincipalIdeal psi(const EndRing& s, const SubmoduleRef& n);

struct LatticeProperties {
  bool modular = false;
  bool complemented = false;
  bool distributive = false;
};

struct CoordinatizationReport {
  bool module_regular = false;
  bool s_regular = false;
  std::size_t end_ring_order = 0;
  std::size_t idempotent_count = 0;
  std::size_t module_lattice_size = 0;
  std::size_t ideal_lattice_size = 0;

  LatticeMap phi_map;  // ideal lattice -> submodule lattice
  LatticeMap psi_map;  // submodule lattice -> ideal lattice
  MapVerification phi_verification;

  bool mutually_inverse = false;
  bool phi_monotone = false;
  bool psi_monotone = false;
  bool phi_on_idempotents = false;  // phi(eS) = e(M) for every idempotent e
  bool psi_is_idempotent_ideal = false;
  bool iso_cross_check = false;     // an independent search finds an isomorphism

  LatticeProperties lattice_props;
  bool strongly_regular = false;
  bool distributivity_criterion = false;  // distributive == strongly_regular

  // s_regular && mutually_inverse && phi_verification.passed()
  bool coordinatizable = false;

  std::vector<std::string> failures;

  bool all_checks_passed() const { return coordinatizable && failures.empty(); }
};

/// Builds S = End(M), both lattices and the maps induced by phi and psi and
/// checks that they are mutually inverse lattice isomorphisms.
/// PreconditionError when M is not regular.
CoordinatizationReport verify_coordinatization(const ModulePtr& m, const Limits& limits = {});

struct DistributivityReport {
  bool distributive = false;
  bool strongly_regular = false;
  bool biconditional_holds = false;
  // Failing (x, y, z) of the distributive law in the submodule lattice.
  std::optional<std::array<SubmoduleRef, 3>> counterexample;
  // Element of End(M) with no s satisfying r * r * s = r.
  std::optional<Index> non_strong_element;
};

/// Distributivity of the submodule lattice against strong regularity of
/// End(M). PreconditionError when M is not regular.
DistributivityReport verify_distributivity_criterion(const ModulePtr& m, const Limits& limits = {});

}  // namespace coordlat
