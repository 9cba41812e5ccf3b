#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coordlat/finring.hpp"
#include "coordlat/types.hpp"

namespace coordlat {

/// A finite right module over a finite ring, given by its addition table
/// and the action table (m, r) -> m.r.
class RightModule {
 public:
  RightModule(RingPtr ring, std::vector<std::string> labels, std::vector<Index> add, std::vector<Index> act,
              Index zero);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }

  std::size_t order() const noexcept { return labels_.size(); }

  Index add(Index a, Index b) const noexcept { return add_[a * order() + b]; }
  Index act(Index m, Index r) const noexcept { return act_[m * ring_->order() + r]; }
  Index zero() const noexcept { return zero_; }

  const std::string& label(Index m) const { return labels_.at(m); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const Index> add_table() const noexcept { return add_; }
  std::span<const Index> act_table() const noexcept { return act_; }

  bool operator==(const RightModule& other) const;

 private:
  RingPtr ring_;
  std::vector<std::string> labels_;
  std::vector<Index> add_;
  std::vector<Index> act_;
  Index zero_;
};

using ModulePtr = std::shared_ptr<const RightModule>;

/// True when both pointers name the same module or structurally equal ones.
bool same_module(const ModulePtr& a, const ModulePtr& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// A module homomorphism stored as its full image table.
struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Index> image;

  Index operator()(Index x) const { return image[x]; }
  bool operator==(const ModuleHom& other) const;
};

/// A submodule identified by its sorted element set.
class SubmoduleRef {
 public:
  /// Checks that elements is a sorted set containing zero and closed under
  /// addition and the action; throws UsageError otherwise.
  static SubmoduleRef checked(ModulePtr module, ElementSet elements);
  /// Caller guarantees the submodule invariant.
  static SubmoduleRef trusted(ModulePtr module, ElementSet elements);

  const ModulePtr& module() const noexcept { return module_; }
  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Index x) const;
  /// Membership bitmap over the whole module.
  std::vector<char> mask() const;

  bool operator==(const SubmoduleRef& other) const;

 private:
  SubmoduleRef(ModulePtr module, ElementSet elements) : module_(std::move(module)), elements_(std::move(elements)) {}

  ModulePtr module_;
  ElementSet elements_;
};

/// Submodule sort order: (cardinality, lexicographic element set).
bool submodule_less(const SubmoduleRef& a, const SubmoduleRef& b);

/// R^k with componentwise action; tuples are indexed in radix order with
/// the first coordinate most significant. k = 0 gives the zero module.
ModulePtr make_free_module(RingPtr ring, std::size_t k, std::size_t cap = Limits{}.max_module);

/// Raw tables for make_module_from_tables and the module file format.
struct ModuleDescription {
  RingPtr ring;
  std::vector<std::string> labels;
  std::vector<Index> add;
  std::vector<Index> act;
  Index zero = 0;
};

/// Exhaustive abelian-group and right-action axiom check (first
/// `sample` failures per axiom are kept).
std::vector<AxiomViolation> validate_module(const RightModule& module, std::size_t sample = 8);

/// Builds a module from tables; AxiomError names the first violated axiom
/// and its witnessing tuple.
ModulePtr make_module_from_tables(ModuleDescription description);

/// Least submodule containing the given elements.
SubmoduleRef generate_submodule(const ModulePtr& module, std::span<const Index> generators);
SubmoduleRef cyclic_submodule(const ModulePtr& module, Index m);
SubmoduleRef zero_submodule(const ModulePtr& module);
SubmoduleRef full_submodule(const ModulePtr& module);

/// Every submodule, sorted by submodule_less. Seeds with the cyclic
/// submodules and closes under sums.
std::vector<SubmoduleRef> enumerate_submodules(const ModulePtr& module, std::size_t cap = Limits{}.max_module);

SubmoduleRef sum(const SubmoduleRef& a, const SubmoduleRef& b);
SubmoduleRef intersect(const SubmoduleRef& a, const SubmoduleRef& b);

/// Greedy generating set: scan indices upward, keep each element not yet
/// in the submodule generated so far.
std::vector<Index> greedy_generators(const ModulePtr& module);

/// All R-homomorphisms u -> m, sorted lexicographically by image table.
std::vector<ModuleHom> hom_enumerate(const ModulePtr& u, const ModulePtr& m,
                                     std::uint64_t cap = Limits{}.max_hom_candidates);

/// Full check of the homomorphism invariant.
bool is_module_hom(const ModuleHom& f);

ModuleHom identity_hom(const ModulePtr& module);
ModuleHom zero_hom(const ModulePtr& source, const ModulePtr& target);

/// Diagrammatic composition: the map x -> g(f(x)), i.e. apply f first,
/// then g. Requires f.target == g.source.
ModuleHom hom_compose(const ModuleHom& f, const ModuleHom& g);

/// Pointwise sum of two homs with the same endpoints.
ModuleHom hom_add(const ModuleHom& f, const ModuleHom& g);

SubmoduleRef image(const ModuleHom& f);
SubmoduleRef preimage(const ModuleHom& f, const SubmoduleRef& n);

struct QuotientModule {
  ModulePtr module;
  ModuleHom projection;
};

/// m / n with cosets indexed in order of their least representative.
QuotientModule quotient_module(const SubmoduleRef& n);

/// Least submodule (in enumeration order) complementing n, if any.
std::optional<SubmoduleRef> is_direct_summand(const SubmoduleRef& n);
/// Same, scanning a precomputed enumerate_submodules() list.
std::optional<SubmoduleRef> is_direct_summand(const SubmoduleRef& n, std::span<const SubmoduleRef> submodules);

/// The idempotent endomorphism with image n and kernel complement.
ModuleHom projection_idempotent(const SubmoduleRef& n, const SubmoduleRef& complement);

struct EmbeddedSubmodule {
  ModulePtr module;
  ModuleHom inclusion;
};

/// A submodule as a module in its own right (elements renumbered in
/// ascending order) together with its inclusion.
EmbeddedSubmodule submodule_as_module(const SubmoduleRef& n);

}  // namespace coordlat
