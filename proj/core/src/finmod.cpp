#include "coordlat/finmod.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
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
                       std::to_string(i % cols) + ") is out of range");
    }
  }
}

void require_same_module(const ModulePtr& a, const ModulePtr& b, const char* op) {
  if (!same_module(a, b)) throw UsageError(std::string(op) + ": submodules of different modules");
}

ElementSet from_mask(const std::vector<char>& mask) {
  ElementSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

bool hom_table_ok(const RightModule& u, const RightModule& m, const std::vector<Index>& image) {
  if (image.size() != u.order()) return false;
  for (Index v : image) {
    if (v >= m.order()) return false;
  }
  if (image[u.zero()] != m.zero()) return false;
  const std::size_t n = u.order();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (image[u.add(a, b)] != m.add(image[a], image[b])) return false;
    }
    for (Index r = 0; r < u.ring().order(); ++r) {
      if (image[u.act(a, r)] != m.act(image[a], r)) return false;
    }
  }
  return true;
}

}  // namespace

RightModule::RightModule(RingPtr ring, std::vector<std::string> labels, std::vector<Index> add, std::vector<Index> act,
                         Index zero)
    : ring_(std::move(ring)), labels_(std::move(labels)), add_(std::move(add)), act_(std::move(act)), zero_(zero) {
  if (!ring_) throw UsageError("module without a ring");
  const std::size_t n = labels_.size();
  if (n == 0) throw UsageError("a module needs at least one element");
  check_table(add_, n, n, n, "add");
  check_table(act_, n, ring_->order(), n, "act");
  if (zero_ >= n) throw UsageError("zero index out of range");
}

bool RightModule::operator==(const RightModule& other) const {
  return same_ring(ring_, other.ring_) && labels_ == other.labels_ && add_ == other.add_ && act_ == other.act_ &&
         zero_ == other.zero_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

bool same_module(const ModulePtr& a, const ModulePtr& b) { return a == b || (a && b && *a == *b); }

bool ModuleHom::operator==(const ModuleHom& other) const {
  return image == other.image && same_module(source, other.source) && same_module(target, other.target);
}

SubmoduleRef SubmoduleRef::checked(ModulePtr module, ElementSet elements) {
  if (!module) throw UsageError("submodule without a module");
  const RightModule& m = *module;
  if (!std::is_sorted(elements.begin(), elements.end()) ||
      std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw UsageError("submodule elements must be sorted and distinct");
  }
  std::vector<char> mask(m.order(), 0);
  for (Index x : elements) {
    if (x >= m.order()) throw UsageError("submodule element out of range");
    mask[x] = 1;
  }
  if (!mask[m.zero()]) throw UsageError("submodule must contain zero");
  for (Index a : elements) {
    for (Index b : elements) {
      if (!mask[m.add(a, b)]) throw UsageError("set is not closed under addition");
    }
    for (Index r = 0; r < m.ring().order(); ++r) {
      if (!mask[m.act(a, r)]) throw UsageError("set is not closed under the ring action");
    }
  }
  return SubmoduleRef(std::move(module), std::move(elements));
}

SubmoduleRef SubmoduleRef::trusted(ModulePtr module, ElementSet elements) {
  return SubmoduleRef(std::move(module), std::move(elements));
}

bool SubmoduleRef::contains(Index x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::vector<char> SubmoduleRef::mask() const {
  std::vector<char> out(module_->order(), 0);
  for (Index x : elements_) out[x] = 1;
  return out;
}

bool SubmoduleRef::operator==(const SubmoduleRef& other) const {
  return elements_ == other.elements_ && same_module(module_, other.module_);
}

bool submodule_less(const SubmoduleRef& a, const SubmoduleRef& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

ModulePtr make_free_module(RingPtr ring, std::size_t k, std::size_t cap) {
  if (!ring) throw UsageError("free module without a ring");
  const std::size_t q = ring->order();
  const std::uint64_t count = saturating_pow(q, k);
  if (count > cap) {
    throw SizeLimitError("free module of rank " + std::to_string(k) + " would have " + std::to_string(count) +
                         " elements, cap is " + std::to_string(cap));
  }
  const std::size_t n = static_cast<std::size_t>(count);

  std::vector<Index> digits(n * k);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t pos = k; pos-- > 0;) {
      digits[idx * k + pos] = static_cast<Index>(rest % q);
      rest /= q;
    }
  }
  auto encode = [&](auto&& coord) {
    std::size_t idx = 0;
    for (std::size_t pos = 0; pos < k; ++pos) idx = idx * q + coord(pos);
    return static_cast<Index>(idx);
  };

  std::vector<std::string> labels(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (k == 0) {
      labels[idx] = "0";
    } else if (k == 1) {
      labels[idx] = ring->label(digits[idx]);
    } else {
      std::string s = "(";
      for (std::size_t pos = 0; pos < k; ++pos) {
        if (pos) s += ',';
        s += ring->label(digits[idx * k + pos]);
      }
      labels[idx] = s + ")";
    }
  }

  std::vector<Index> add(n * n), act(n * q);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      add[x * n + y] = encode([&](std::size_t p) { return ring->add(digits[x * k + p], digits[y * k + p]); });
    }
    for (std::size_t r = 0; r < q; ++r) {
      act[x * q + r] = encode([&](std::size_t p) { return ring->mul(digits[x * k + p], static_cast<Index>(r)); });
    }
  }
  const Index zero = encode([&](std::size_t) { return ring->zero(); });
  return std::make_shared<const RightModule>(std::move(ring), std::move(labels), std::move(add), std::move(act), zero);
}

std::vector<AxiomViolation> validate_module(const RightModule& m, std::size_t sample) {
  std::vector<AxiomViolation> out;
  std::map<std::string, std::size_t> seen;
  auto record = [&](const char* axiom, std::vector<Index> witness) {
    if (seen[axiom]++ < sample) out.push_back({axiom, std::move(witness)});
  };
  const FiniteRing& ring = m.ring();
  const Index n = static_cast<Index>(m.order());
  const Index q = static_cast<Index>(ring.order());
  const Index z = m.zero();

  for (Index a = 0; a < n; ++a) {
    if (m.add(a, z) != a || m.add(z, a) != a) record("add_identity", {a});
    bool has_inverse = false;
    for (Index b = 0; b < n && !has_inverse; ++b) has_inverse = m.add(a, b) == z;
    if (!has_inverse) record("add_inverse", {a});
    if (m.act(a, ring.one()) != a) record("unital", {a});
    for (Index b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a)) record("add_commutative", {a, b});
      const Index ab = m.add(a, b);
      for (Index c = 0; c < n; ++c) {
        if (m.add(ab, c) != m.add(a, m.add(b, c))) record("add_associative", {a, b, c});
      }
      for (Index r = 0; r < q; ++r) {
        if (m.act(ab, r) != m.add(m.act(a, r), m.act(b, r))) record("distributive_over_module_sum", {a, b, r});
      }
    }
    for (Index r = 0; r < q; ++r) {
      for (Index s = 0; s < q; ++s) {
        if (m.act(a, ring.add(r, s)) != m.add(m.act(a, r), m.act(a, s))) {
          record("distributive_over_ring_sum", {a, r, s});
        }
        if (m.act(a, ring.mul(r, s)) != m.act(m.act(a, r), s)) record("action_associative", {a, r, s});
      }
    }
  }
  return out;
}

ModulePtr make_module_from_tables(ModuleDescription d) {
  auto module = std::make_shared<const RightModule>(std::move(d.ring), std::move(d.labels), std::move(d.add),
                                                    std::move(d.act), d.zero);
  const auto violations = validate_module(*module, 1);
  if (!violations.empty()) {
    const AxiomViolation& v = violations.front();
    std::string witness;
    for (std::size_t i = 0; i < v.witness.size(); ++i) witness += (i ? ", " : "") + std::to_string(v.witness[i]);
    throw AxiomError("module axiom `" + v.axiom + "` fails at (" + witness + ")");
  }
  return module;
}

SubmoduleRef generate_submodule(const ModulePtr& module, std::span<const Index> generators) {
  const RightModule& m = *module;
  std::vector<char> mask(m.order(), 0);
  std::vector<Index> list;
  auto visit = [&](Index x) {
    if (!mask[x]) {
      mask[x] = 1;
      list.push_back(x);
    }
  };
  visit(m.zero());
  for (Index g : generators) {
    if (g >= m.order()) throw UsageError("generator out of range");
    visit(g);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Index x = list[i];
    for (Index r = 0; r < m.ring().order(); ++r) visit(m.act(x, r));
    for (std::size_t j = 0; j <= i; ++j) visit(m.add(x, list[j]));
  }
  return SubmoduleRef::trusted(module, from_mask(mask));
}

SubmoduleRef cyclic_submodule(const ModulePtr& module, Index m) {
  const Index gens[] = {m};
  return generate_submodule(module, gens);
}

SubmoduleRef zero_submodule(const ModulePtr& module) {
  return SubmoduleRef::trusted(module, ElementSet{module->zero()});
}

SubmoduleRef full_submodule(const ModulePtr& module) {
  ElementSet all(module->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  return SubmoduleRef::trusted(module, std::move(all));
}

std::vector<SubmoduleRef> enumerate_submodules(const ModulePtr& module, std::size_t cap) {
  if (module->order() > cap) {
    throw SizeLimitError("module of order " + std::to_string(module->order()) + " exceeds cap " +
                         std::to_string(cap));
  }
  std::set<ElementSet> cyclic_sets;
  for (Index x = 0; x < module->order(); ++x) cyclic_sets.insert(cyclic_submodule(module, x).elements());
  std::vector<SubmoduleRef> cyclics;
  for (const auto& s : cyclic_sets) cyclics.push_back(SubmoduleRef::trusted(module, s));

  // Every submodule is a sum of cyclic ones, so closing under "add one
  // cyclic submodule" reaches all of them.
  std::set<ElementSet> found(cyclic_sets);
  std::deque<SubmoduleRef> work(cyclics.begin(), cyclics.end());
  while (!work.empty()) {
    const SubmoduleRef current = std::move(work.front());
    work.pop_front();
    for (const auto& c : cyclics) {
      SubmoduleRef s = sum(current, c);
      if (found.insert(s.elements()).second) work.push_back(std::move(s));
    }
  }
  std::vector<SubmoduleRef> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(SubmoduleRef::trusted(module, s));
  std::stable_sort(out.begin(), out.end(), submodule_less);
  return out;
}

SubmoduleRef sum(const SubmoduleRef& a, const SubmoduleRef& b) {
  require_same_module(a.module(), b.module(), "sum");
  const RightModule& m = *a.module();
  std::vector<char> mask(m.order(), 0);
  for (Index x : a.elements()) {
    for (Index y : b.elements()) mask[m.add(x, y)] = 1;
  }
  return SubmoduleRef::trusted(a.module(), from_mask(mask));
}

SubmoduleRef intersect(const SubmoduleRef& a, const SubmoduleRef& b) {
  require_same_module(a.module(), b.module(), "intersect");
  ElementSet out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return SubmoduleRef::trusted(a.module(), std::move(out));
}

std::vector<Index> greedy_generators(const ModulePtr& module) {
  std::vector<Index> gens;
  SubmoduleRef current = zero_submodule(module);
  for (Index x = 0; x < module->order(); ++x) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = generate_submodule(module, gens);
    if (current.size() == module->order()) break;
  }
  return gens;
}

namespace {

// One evaluation step of the extension procedure: dst = src . operand (Act)
// or dst = src + operand (Add). When dst was already reached the step is a
// consistency check instead of an assignment.
struct ExtensionStep {
  enum class Kind : std::uint8_t { Act, Add };
  Kind kind;
  bool check;
  Index src;
  Index operand;
  Index dst;
};

// The breadth-first exploration of u from its generators visits elements in
// an order that depends only on u, so it is computed once and replayed for
// every candidate assignment.
std::vector<ExtensionStep> extension_plan(const RightModule& u, const std::vector<Index>& gens) {
  std::vector<ExtensionStep> steps;
  std::vector<char> reached(u.order(), 0);
  std::vector<Index> order;
  reached[u.zero()] = 1;
  order.push_back(u.zero());
  for (Index g : gens) {
    reached[g] = 1;
    order.push_back(g);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Index x = order[i];
    for (Index r = 0; r < u.ring().order(); ++r) {
      const Index y = u.act(x, r);
      steps.push_back({ExtensionStep::Kind::Act, reached[y] != 0, x, r, y});
      if (!reached[y]) {
        reached[y] = 1;
        order.push_back(y);
      }
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Index z = order[j];
      const Index y = u.add(x, z);
      steps.push_back({ExtensionStep::Kind::Add, reached[y] != 0, x, z, y});
      if (!reached[y]) {
        reached[y] = 1;
        order.push_back(y);
      }
    }
  }
  return steps;
}

}  // namespace

std::vector<ModuleHom> hom_enumerate(const ModulePtr& u, const ModulePtr& m, std::uint64_t cap) {
  if (!same_ring(u->ring_ptr(), m->ring_ptr())) throw UsageError("hom_enumerate: modules over different rings");
  const std::vector<Index> gens = greedy_generators(u);
  const std::uint64_t target = m->order();
  const std::uint64_t candidates = saturating_pow(target, gens.size());
  if (candidates > cap) {
    throw SizeLimitError("hom search needs " + std::to_string(target) + "^" + std::to_string(gens.size()) +
                         " candidates, cap is " + std::to_string(cap));
  }
  const std::vector<ExtensionStep> plan = extension_plan(*u, gens);
  const RightModule& src = *u;
  const RightModule& tgt = *m;
  constexpr Index kUnset = ~Index{0};

  const std::size_t total = static_cast<std::size_t>(candidates);
  std::vector<std::vector<std::vector<Index>>> per_worker(chunk_count(total, 1024));
  parallel_chunks(
      total,
      [&](std::size_t begin, std::size_t end, std::size_t worker) {
        std::vector<Index> img(src.order());
        for (std::size_t c = begin; c < end; ++c) {
          std::fill(img.begin(), img.end(), kUnset);
          img[src.zero()] = tgt.zero();
          std::size_t rest = c;
          bool ok = true;
          for (std::size_t gi = gens.size(); gi-- > 0;) {
            img[gens[gi]] = static_cast<Index>(rest % target);
            rest /= target;
          }
          for (const ExtensionStep& step : plan) {
            const Index value = step.kind == ExtensionStep::Kind::Act ? tgt.act(img[step.src], step.operand)
                                                                      : tgt.add(img[step.src], img[step.operand]);
            if (step.check) {
              if (img[step.dst] != value) {
                ok = false;
                break;
              }
            } else {
              img[step.dst] = value;
            }
          }
          if (ok && hom_table_ok(src, tgt, img)) per_worker[worker].push_back(img);
        }
      },
      1024);

  std::vector<std::vector<Index>> images;
  for (auto& chunk : per_worker) {
    for (auto& img : chunk) images.push_back(std::move(img));
  }
  std::sort(images.begin(), images.end());
  std::vector<ModuleHom> out;
  out.reserve(images.size());
  for (auto& img : images) out.push_back(ModuleHom{u, m, std::move(img)});
  return out;
}

bool is_module_hom(const ModuleHom& f) {
  if (!f.source || !f.target || !same_ring(f.source->ring_ptr(), f.target->ring_ptr())) return false;
  return hom_table_ok(*f.source, *f.target, f.image);
}

ModuleHom identity_hom(const ModulePtr& module) {
  std::vector<Index> img(module->order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Index>(i);
  return ModuleHom{module, module, std::move(img)};
}

ModuleHom zero_hom(const ModulePtr& source, const ModulePtr& target) {
  return ModuleHom{source, target, std::vector<Index>(source->order(), target->zero())};
}

ModuleHom hom_compose(const ModuleHom& f, const ModuleHom& g) {
  if (!same_module(f.target, g.source)) throw UsageError("hom_compose: target of f is not the source of g");
  std::vector<Index> img(f.image.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.image[f.image[x]];
  return ModuleHom{f.source, g.target, std::move(img)};
}

ModuleHom hom_add(const ModuleHom& f, const ModuleHom& g) {
  if (!same_module(f.source, g.source) || !same_module(f.target, g.target)) {
    throw UsageError("hom_add: homs with different endpoints");
  }
  std::vector<Index> img(f.image.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = f.target->add(f.image[x], g.image[x]);
  return ModuleHom{f.source, f.target, std::move(img)};
}

SubmoduleRef image(const ModuleHom& f) {
  std::vector<char> mask(f.target->order(), 0);
  for (Index y : f.image) mask[y] = 1;
  return SubmoduleRef::trusted(f.target, from_mask(mask));
}

SubmoduleRef preimage(const ModuleHom& f, const SubmoduleRef& n) {
  if (!same_module(f.target, n.module())) throw UsageError("preimage: submodule is not inside the target of f");
  const std::vector<char> inside = n.mask();
  ElementSet out;
  for (std::size_t x = 0; x < f.image.size(); ++x) {
    if (inside[f.image[x]]) out.push_back(static_cast<Index>(x));
  }
  return SubmoduleRef::trusted(f.source, std::move(out));
}

QuotientModule quotient_module(const SubmoduleRef& n) {
  const ModulePtr& module = n.module();
  const RightModule& m = *module;
  std::vector<Index> rep(m.order());
  for (Index x = 0; x < m.order(); ++x) {
    Index least = x;
    for (Index a : n.elements()) least = std::min(least, m.add(x, a));
    rep[x] = least;
  }
  std::vector<Index> reps(rep.begin(), rep.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Index> coset(m.order());
  for (Index x = 0; x < m.order(); ++x) {
    coset[x] = static_cast<Index>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  }
  const std::size_t k = reps.size();
  const std::size_t q = m.ring().order();
  std::vector<std::string> labels(k);
  std::vector<Index> add(k * k), act(k * q);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = m.label(reps[i]) + "+N";
    for (std::size_t j = 0; j < k; ++j) add[i * k + j] = coset[m.add(reps[i], reps[j])];
    for (std::size_t r = 0; r < q; ++r) act[i * q + r] = coset[m.act(reps[i], static_cast<Index>(r))];
  }
  auto quotient = std::make_shared<const RightModule>(m.ring_ptr(), std::move(labels), std::move(add),
                                                      std::move(act), coset[m.zero()]);
  return QuotientModule{quotient, ModuleHom{module, quotient, std::move(coset)}};
}

std::optional<SubmoduleRef> is_direct_summand(const SubmoduleRef& n) {
  const auto subs = enumerate_submodules(n.module());
  return is_direct_summand(n, subs);
}

std::optional<SubmoduleRef> is_direct_summand(const SubmoduleRef& n, std::span<const SubmoduleRef> submodules) {
  const std::size_t order = n.module()->order();
  for (const auto& c : submodules) {
    require_same_module(n.module(), c.module(), "is_direct_summand");
    if (n.size() * c.size() != order) continue;
    if (intersect(n, c).size() == 1) return c;
  }
  return std::nullopt;
}

ModuleHom projection_idempotent(const SubmoduleRef& n, const SubmoduleRef& complement) {
  require_same_module(n.module(), complement.module(), "projection_idempotent");
  const RightModule& m = *n.module();
  if (intersect(n, complement).size() != 1 || n.size() * complement.size() != m.order()) {
    throw UsageError("projection_idempotent: submodules do not form a direct sum decomposition");
  }
  std::vector<Index> img(m.order());
  for (Index a : n.elements()) {
    for (Index b : complement.elements()) img[m.add(a, b)] = a;
  }
  return ModuleHom{n.module(), n.module(), std::move(img)};
}

EmbeddedSubmodule submodule_as_module(const SubmoduleRef& n) {
  const RightModule& m = *n.module();
  const ElementSet& elems = n.elements();
  const std::size_t k = elems.size();
  const std::size_t q = m.ring().order();
  auto pos = [&](Index x) {
    return static_cast<Index>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  };
  std::vector<std::string> labels(k);
  std::vector<Index> add(k * k), act(k * q);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = m.label(elems[i]);
    for (std::size_t j = 0; j < k; ++j) add[i * k + j] = pos(m.add(elems[i], elems[j]));
    for (std::size_t r = 0; r < q; ++r) act[i * q + r] = pos(m.act(elems[i], static_cast<Index>(r)));
  }
  auto sub = std::make_shared<const RightModule>(m.ring_ptr(), std::move(labels), std::move(add), std::move(act),
                                                 pos(m.zero()));
  return EmbeddedSubmodule{sub, ModuleHom{sub, n.module(), elems}};
}

}  // namespace coordlat
