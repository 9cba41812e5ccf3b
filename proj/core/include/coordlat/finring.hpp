#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coordlat/types.hpp"

namespace coordlat {

/// A finite ring given by Cayley tables over the indices 0..order-1.
///
/// The constructor checks table dimensions and index ranges only; the ring
/// axioms are checked by validate_ring(). Instances are immutable and are
/// normally shared through RingPtr.
class FiniteRing {
 public:
  FiniteRing(std::vector<std::string> labels, std::vector<Index> add, std::vector<Index> mul, Index zero,
             Index one);

  std::size_t order() const noexcept { return labels_.size(); }

  Index add(Index a, Index b) const noexcept { return add_[a * order() + b]; }
  Index mul(Index a, Index b) const noexcept { return mul_[a * order() + b]; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }

  /// Least b with a + b = zero, if any.
  std::optional<Index> additive_inverse(Index a) const;

  const std::string& label(Index a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Row-major tables, entry (a, b) at a * order() + b.
  std::span<const Index> add_table() const noexcept { return add_; }
  std::span<const Index> mul_table() const noexcept { return mul_; }

  bool operator==(const FiniteRing&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  Index zero_;
  Index one_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Handle to one element of a ring.
struct RingElement {
  RingPtr ring;
  Index index;

  RingElement(RingPtr r, Index i);
};

/// The integers modulo n, labelled "0".."n-1".
RingPtr make_zmod(std::size_t n, std::size_t cap = Limits{}.max_zmod);

/// k x k matrices over base. Element indices are the row-major entry
/// sequence read as a base-|base| numeral with the (0,0) entry most
/// significant.
RingPtr make_matrix_ring(const FiniteRing& base, std::size_t k, std::size_t cap = Limits{}.max_ring);

/// Componentwise product; the pair (i, j) sits at index i * b.order() + j.
RingPtr make_product(const FiniteRing& a, const FiniteRing& b, std::size_t cap = Limits{}.max_ring);

struct RingValidation {
  std::vector<AxiomViolation> violations;
  // Violations beyond the per-axiom sample are counted but not stored.
  std::size_t total_failures = 0;

  bool valid() const noexcept { return total_failures == 0; }
};

/// Exhaustively checks the ring axioms over all pairs and triples. Rings
/// larger than max_exhaustive are refused with SizeLimitError unless force
/// is set.
RingValidation validate_ring(const FiniteRing& ring, bool force = false,
                             std::size_t max_exhaustive = Limits{}.max_exhaustive);

/// Least s with r * s * r = r.
std::optional<Index> quasi_inverse(const FiniteRing& ring, Index r);
std::optional<RingElement> quasi_inverse(const RingElement& r);

/// Least s with r * r * s = r.
std::optional<Index> strong_witness(const FiniteRing& ring, Index r);

struct RegularityReport {
  bool regular = false;
  bool strongly_regular = false;
  // Least quasi-inverse per element; filled only when regular.
  std::vector<Index> witnesses;
  // Least element without a quasi-inverse.
  std::optional<Index> counterexample;
};

RegularityReport is_von_neumann_regular(const FiniteRing& ring);
bool is_strongly_regular(const FiniteRing& ring);

/// All e with e * e = e, ascending.
std::vector<Index> idempotents(const FiniteRing& ring);

}  // namespace coordlat
