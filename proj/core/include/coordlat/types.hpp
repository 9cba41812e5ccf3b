#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coordlat {

/// Index of an element inside a finite structure.
using Index = std::uint32_t;

/// Sorted, duplicate-free set of element indices.
using ElementSet = std::vector<Index>;

/// Size caps shared by constructors and exhaustive searches.
struct Limits {
  std::size_t max_ring = 4096;
  std::size_t max_zmod = 256;
  std::size_t max_module = 4096;
  std::uint64_t max_hom_candidates = 10'000'000;
  // Cubic axiom checks refuse larger structures unless forced.
  std::size_t max_exhaustive = 256;
};

/// One failed axiom instance with the tuple that witnesses it.
struct AxiomViolation {
  std::string axiom;
  std::vector<Index> witness;

  bool operator==(const AxiomViolation&) const = default;
};

/// Renders a set as "{a,b,c}" using raw indices.
std::string format_set(const ElementSet& set);

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace coordlat
