#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coordlat/types.hpp"

namespace coordlat {

/// An explicit finite lattice: order matrix plus join and meet tables.
/// Element keys are opaque provenance strings (usually the rendered set).
class FiniteLattice {
 public:
  /// Derives join and meet from a partial order given as a row-major
  /// size x size matrix (leq[a * size + b] != 0 iff a <= b).
  /// StructuralError if leq is not a partial order or some pair lacks a
  /// least upper or greatest lower bound.
  static FiniteLattice from_order(std::vector<std::string> keys, std::vector<char> leq);

  /// Takes all tables as given and checks them against each other.
  static FiniteLattice from_tables(std::vector<std::string> keys, std::vector<char> leq, std::vector<Index> join,
                                   std::vector<Index> meet);

  std::size_t size() const noexcept { return keys_.size(); }
  bool leq(Index a, Index b) const noexcept { return leq_[a * size() + b] != 0; }
  Index join(Index a, Index b) const noexcept { return join_[a * size() + b]; }
  Index meet(Index a, Index b) const noexcept { return meet_[a * size() + b]; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

  const std::string& key(Index a) const { return keys_.at(a); }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  const std::vector<char>& leq_matrix() const noexcept { return leq_; }
  const std::vector<Index>& join_table() const noexcept { return join_; }
  const std::vector<Index>& meet_table() const noexcept { return meet_; }

  bool operator==(const FiniteLattice&) const = default;

 private:
  FiniteLattice() = default;

  std::vector<std::string> keys_;
  std::vector<char> leq_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  Index bottom_ = 0;
  Index top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Index-level map between two lattices.
struct LatticeMap {
  LatticePtr source;
  LatticePtr target;
  std::vector<Index> image;
};

/// Lattice of a family of sets under inclusion. Keys default to the
/// rendered sets. Duplicates or a missing least/greatest bound raise
/// StructuralError naming the pair.
FiniteLattice lattice_from_sets(const std::vector<ElementSet>& family, std::vector<std::string> keys = {});

/// Outcome of an exhaustive law check over all triples.
struct LawCheck {
  bool holds = true;
  std::optional<std::array<Index, 3>> counterexample;
};

/// x <= z implies x v (y ^ z) = (x v y) ^ z.
LawCheck is_modular(const FiniteLattice& l);

/// x ^ (y v z) = (x ^ y) v (x ^ z).
LawCheck is_distributive(const FiniteLattice& l);

struct ComplementCheck {
  bool holds = true;
  std::optional<Index> uncomplemented;
};

ComplementCheck is_complemented(const FiniteLattice& l);

/// Least complement of x, if any.
std::optional<Index> complement_of(const FiniteLattice& l, Index x);

/// Cover pairs (a, b) with a < b and nothing strictly between, in
/// lexicographic order.
std::vector<std::pair<Index, Index>> cover_relation(const FiniteLattice& l);

/// Length of the longest chain from bottom to each element.
std::vector<std::size_t> ranks(const FiniteLattice& l);

/// Backtracking search for an order isomorphism a -> b. Candidates are
/// pruned by rank and up/down cover degree; the first map in
/// lexicographic assignment order is returned.
std::optional<LatticeMap> are_isomorphic(const LatticePtr& a, const LatticePtr& b);

LatticeMap identity_map(const LatticePtr& l);

struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct MapVerification {
  std::vector<CheckItem> items;

  bool passed() const;
};

/// Itemized check of bijectivity and preservation of join, meet and order
/// (both directions).
MapVerification verify_map(const LatticeMap& map);

/// Hasse diagram as a DOT digraph, edges pointing from lower to upper
/// covers.
std::string export_dot(const FiniteLattice& l, const std::string& graph_name = "lattice");

}  // namespace coordlat
