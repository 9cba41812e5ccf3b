#include "coordlat/finring.hpp"

#include <map>
#include <string>

#include "coordlat/error.hpp"
#include "coordlat/parallel.hpp"

namespace coordlat {

namespace {

void check_table(const std::vector<Index>& table, std::size_t rows, std::size_t cols, std::size_t range,
                 const char* name) {
  if (table.size() != rows * cols) {
    throw UsageError(std::string(name) + " table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= range) {
      throw UsageError(std::string(name) + " table entry (" + std::to_string(i / cols) + ", " +
                       std::to_string(i % cols) + ") = " + std::to_string(table[i]) + " is out of range");
    }
  }
}

void check_cap(std::uint64_t order, std::size_t cap, const std::string& what) {
  if (order > cap) {
    throw SizeLimitError(what + " would have " + std::to_string(order) + " elements, cap is " + std::to_string(cap));
  }
}

// Keeps the first few failures per axiom and counts the rest.
class ViolationLog {
 public:
  explicit ViolationLog(std::size_t sample) : sample_(sample) {}

  void record(const char* axiom, std::vector<Index> witness) {
    ++total_;
    std::size_t& seen = per_axiom_[axiom];
    if (seen++ < sample_) violations_.push_back({axiom, std::move(witness)});
  }

  std::vector<AxiomViolation> take() { return std::move(violations_); }
  std::size_t total() const { return total_; }

 private:
  std::size_t sample_;
  std::size_t total_ = 0;
  std::map<std::string, std::size_t> per_axiom_;
  std::vector<AxiomViolation> violations_;
};

}  // namespace

FiniteRing::FiniteRing(std::vector<std::string> labels, std::vector<Index> add, std::vector<Index> mul, Index zero,
                       Index one)
    : labels_(std::move(labels)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
  const std::size_t n = labels_.size();
  if (n == 0) throw UsageError("a ring needs at least one element");
  check_table(add_, n, n, n, "add");
  check_table(mul_, n, n, n, "mul");
  if (zero_ >= n) throw UsageError("zero index out of range");
  if (one_ >= n) throw UsageError("one index out of range");
}

std::optional<Index> FiniteRing::additive_inverse(Index a) const {
  for (Index b = 0; b < order(); ++b) {
    if (add(a, b) == zero_) return b;
  }
  return std::nullopt;
}

RingElement::RingElement(RingPtr r, Index i) : ring(std::move(r)), index(i) {
  if (!ring) throw UsageError("ring element without a ring");
  if (index >= ring->order()) {
    throw UsageError("element index " + std::to_string(index) + " out of range for ring of order " +
                     std::to_string(ring->order()));
  }
}

RingPtr make_zmod(std::size_t n, std::size_t cap) {
  if (n == 0) throw UsageError("zmod needs n >= 1");
  check_cap(n, cap, "zmod:" + std::to_string(n));
  std::vector<std::string> labels(n);
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Index>((a + b) % n);
      mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  }
  return std::make_shared<const FiniteRing>(std::move(labels), std::move(add), std::move(mul), 0,
                                            static_cast<Index>(1 % n));
}

RingPtr make_matrix_ring(const FiniteRing& base, std::size_t k, std::size_t cap) {
  if (k == 0) throw UsageError("matrix ring needs k >= 1");
  const std::size_t b = base.order();
  const std::size_t cells = k * k;
  const std::uint64_t count = saturating_pow(b, cells);
  check_cap(count, cap, "matrix ring of size " + std::to_string(k));
  const std::size_t n = static_cast<std::size_t>(count);

  // entries[idx * cells + pos], (0,0) most significant
  std::vector<Index> entries(n * cells);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t pos = cells; pos-- > 0;) {
      entries[idx * cells + pos] = static_cast<Index>(rest % b);
      rest /= b;
    }
  }
  auto encode = [&](const std::vector<Index>& cellsv) {
    std::size_t idx = 0;
    for (Index v : cellsv) idx = idx * b + v;
    return static_cast<Index>(idx);
  };

  std::vector<std::string> labels(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < k; ++j) {
        if (j) s += ',';
        s += base.label(entries[idx * cells + i * k + j]);
      }
      s += ']';
    }
    labels[idx] = s + "]";
  }

  std::vector<Index> add(n * n), mul(n * n);
  std::vector<Index> cell(cells);
  for (std::size_t x = 0; x < n; ++x) {
    const Index* ex = &entries[x * cells];
    for (std::size_t y = 0; y < n; ++y) {
      const Index* ey = &entries[y * cells];
      for (std::size_t pos = 0; pos < cells; ++pos) cell[pos] = base.add(ex[pos], ey[pos]);
      add[x * n + y] = encode(cell);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          Index acc = base.zero();
          for (std::size_t l = 0; l < k; ++l) acc = base.add(acc, base.mul(ex[i * k + l], ey[l * k + j]));
          cell[i * k + j] = acc;
        }
      }
      mul[x * n + y] = encode(cell);
    }
  }

  std::vector<Index> zero_cells(cells, base.zero()), one_cells(cells, base.zero());
  for (std::size_t i = 0; i < k; ++i) one_cells[i * k + i] = base.one();
  return std::make_shared<const FiniteRing>(std::move(labels), std::move(add), std::move(mul), encode(zero_cells),
                                            encode(one_cells));
}

RingPtr make_product(const FiniteRing& a, const FiniteRing& b, std::size_t cap) {
  const std::uint64_t count = static_cast<std::uint64_t>(a.order()) * b.order();
  check_cap(count, cap, "product ring");
  const std::size_t n = static_cast<std::size_t>(count);
  const std::size_t nb = b.order();
  auto pair = [nb](std::size_t i, std::size_t j) { return static_cast<Index>(i * nb + j); };

  std::vector<std::string> labels(n);
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Index xi = static_cast<Index>(x / nb), xj = static_cast<Index>(x % nb);
    labels[x] = "(" + a.label(xi) + "," + b.label(xj) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Index yi = static_cast<Index>(y / nb), yj = static_cast<Index>(y % nb);
      add[x * n + y] = pair(a.add(xi, yi), b.add(xj, yj));
      mul[x * n + y] = pair(a.mul(xi, yi), b.mul(xj, yj));
    }
  }
  return std::make_shared<const FiniteRing>(std::move(labels), std::move(add), std::move(mul),
                                            pair(a.zero(), b.zero()), pair(a.one(), b.one()));
}

RingValidation validate_ring(const FiniteRing& r, bool force, std::size_t max_exhaustive) {
  const Index n = static_cast<Index>(r.order());
  if (n > max_exhaustive && !force) {
    throw SizeLimitError("ring of order " + std::to_string(n) + " exceeds the exhaustive-check cap of " +
                         std::to_string(max_exhaustive) + " (force to override)");
  }
  ViolationLog log(8);
  const Index z = r.zero(), one = r.one();

  for (Index a = 0; a < n; ++a) {
    if (r.add(a, z) != a || r.add(z, a) != a) log.record("add_identity", {a});
    if (!r.additive_inverse(a)) log.record("add_inverse", {a});
    if (r.mul(one, a) != a || r.mul(a, one) != a) log.record("mul_identity", {a});
    if (r.mul(a, z) != z || r.mul(z, a) != z) log.record("zero_annihilates", {a});
    for (Index b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) log.record("add_commutative", {a, b});
      const Index ab_sum = r.add(a, b);
      const Index ab_mul = r.mul(a, b);
      for (Index c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) log.record("add_associative", {a, b, c});
        if (r.mul(ab_mul, c) != r.mul(a, r.mul(b, c))) log.record("mul_associative", {a, b, c});
        if (r.mul(a, r.add(b, c)) != r.add(ab_mul, r.mul(a, c))) log.record("left_distributive", {a, b, c});
        if (r.mul(ab_sum, c) != r.add(r.mul(a, c), r.mul(b, c))) log.record("right_distributive", {a, b, c});
      }
    }
  }
  RingValidation out;
  out.total_failures = log.total();
  out.violations = log.take();
  return out;
}

std::optional<Index> quasi_inverse(const FiniteRing& ring, Index r) {
  for (Index s = 0; s < ring.order(); ++s) {
    if (ring.mul(ring.mul(r, s), r) == r) return s;
  }
  return std::nullopt;
}

std::optional<RingElement> quasi_inverse(const RingElement& r) {
  if (auto s = quasi_inverse(*r.ring, r.index)) return RingElement(r.ring, *s);
  return std::nullopt;
}

std::optional<Index> strong_witness(const FiniteRing& ring, Index r) {
  const Index square = ring.mul(r, r);
  for (Index s = 0; s < ring.order(); ++s) {
    if (ring.mul(square, s) == r) return s;
  }
  return std::nullopt;
}

namespace {

// Per-element witness scan; the result does not depend on how the range is
// split because each slot is written by exactly one worker.
template <class Witness>
std::vector<std::optional<Index>> scan_all(const FiniteRing& ring, Witness witness) {
  const std::size_t n = ring.order();
  std::vector<std::optional<Index>> out(n);
  parallel_chunks(
      n,
      [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t r = begin; r < end; ++r) out[r] = witness(ring, static_cast<Index>(r));
      },
      64);
  return out;
}

}  // namespace

RegularityReport is_von_neumann_regular(const FiniteRing& ring) {
  RegularityReport report;
  const auto found = scan_all(ring, [](const FiniteRing& r, Index x) { return quasi_inverse(r, x); });
  report.regular = true;
  for (Index r = 0; r < found.size(); ++r) {
    if (!found[r]) {
      report.regular = false;
      report.counterexample = r;
      break;
    }
  }
  if (report.regular) {
    report.witnesses.reserve(found.size());
    for (const auto& s : found) report.witnesses.push_back(*s);
  }
  report.strongly_regular = report.regular && is_strongly_regular(ring);
  return report;
}

bool is_strongly_regular(const FiniteRing& ring) {
  const auto found = scan_all(ring, [](const FiniteRing& r, Index x) { return strong_witness(r, x); });
  for (const auto& s : found) {
    if (!s) return false;
  }
  return true;
}

std::vector<Index> idempotents(const FiniteRing& ring) {
  std::vector<Index> out;
  for (Index e = 0; e < ring.order(); ++e) {
    if (ring.mul(e, e) == e) out.push_back(e);
  }
  return out;
}

}  // namespace coordlat
