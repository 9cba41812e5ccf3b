#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coordlat/finmod.hpp"

namespace coordlat {

struct ModuleRegularityReport {
  bool regular = false;
  // Per module element, the index into hom_enumerate(M, R_R) of the least
  // g with m.g(m) = m. Filled only when regular.
  std::vector<std::size_t> witness;
  std::optional<Index> counterexample;
  std::size_t hom_count = 0;
};

/// Elementwise regularity: every m admits g in Hom(M, R_R) with m.g(m) = m.
ModuleRegularityReport module_is_regular(const ModulePtr& m, const Limits& limits = {});

struct RelativeRegularityReport {
  bool holds = false;
  // Per f in hom_enumerate(U, M), the least g in hom_enumerate(M, U) with
  // f = f o g o f, or nullopt.
  std::vector<std::optional<std::size_t>> witnesses;
  std::optional<std::size_t> counterexample;
  std::size_t hom_count_um = 0;
  std::size_t hom_count_mu = 0;
};

/// M is U-regular: every f: U -> M factors as f = f o g o f.
RelativeRegularityReport is_relative_regular(const ModulePtr& u, const ModulePtr& m, const Limits& limits = {});

struct SummandEntry {
  SubmoduleRef submodule;
  std::optional<SubmoduleRef> complement;
};

struct SummandReport {
  bool passed = true;
  std::vector<SummandEntry> entries;
};

/// Every submodule of m must be a direct summand.
SummandReport check_summand_property(const ModulePtr& m, const Limits& limits = {});

struct PreimageEntry {
  std::size_t hom = 0;
  std::size_t submodule = 0;
  ElementSet preimage;
  bool is_submodule = false;
  std::optional<ElementSet> complement;
  bool equals_kernel = false;

  bool ok() const { return is_submodule && complement.has_value() && equals_kernel; }
};

struct PreimageReport {
  bool passed = true;
  std::string note;
  std::size_t hom_count = 0;
  std::size_t submodule_count = 0;
  std::vector<PreimageEntry> entries;
};

/// For every f: U -> M and every submodule N of M checks that f^-1(N) is a
/// submodule of U, that it is a direct summand of U, and that it equals
/// the kernel of U -> M -> M/N. Finite generation is automatic for finite
/// modules, so the summand property is what gets tested. PreconditionError
/// when M is not regular.
PreimageReport check_preimage_summands(const ModulePtr& u, const ModulePtr& m, const Limits& limits = {});

}  // namespace coordlat
