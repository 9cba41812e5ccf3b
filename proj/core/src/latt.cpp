#include "coordlat/latt.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "coordlat/error.hpp"

namespace coordlat {

namespace {

std::string pair_name(const std::vector<std::string>& keys, Index a, Index b) {
  return "(" + keys[a] + ", " + keys[b] + ")";
}

// Least element of `candidates` below all others, or nullopt. A single pass
// moves the candidate down whenever a smaller one appears, then verifies.
template <class Leq>
std::optional<Index> least_of(const std::vector<Index>& candidates, Leq leq) {
  if (candidates.empty()) return std::nullopt;
  Index best = candidates.front();
  for (Index c : candidates) {
    if (leq(c, best)) best = c;
  }
  for (Index c : candidates) {
    if (!leq(best, c)) return std::nullopt;
  }
  return best;
}

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::string> keys, std::vector<char> leq) {
  const std::size_t n = keys.size();
  if (n == 0) throw StructuralError("a lattice needs at least one element");
  if (leq.size() != n * n) throw StructuralError("order matrix has the wrong dimension");
  auto le = [&](Index a, Index b) { return leq[a * n + b] != 0; };

  for (Index a = 0; a < n; ++a) {
    if (!le(a, a)) throw StructuralError("order is not reflexive at " + keys[a]);
    for (Index b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a)) throw StructuralError("order is not antisymmetric at " + pair_name(keys, a, b));
      if (!le(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (le(b, c) && !le(a, c)) throw StructuralError("order is not transitive at " + keys[a] + " <= " + keys[b] + " <= " + keys[c]);
      }
    }
  }

  FiniteLattice l;
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  std::vector<Index> bounds;
  bounds.reserve(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      bounds.clear();
      for (Index c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c)) bounds.push_back(c);
      }
      const auto lub = least_of(bounds, le);
      if (!lub) throw StructuralError("no least upper bound for " + pair_name(keys, a, b));
      bounds.clear();
      for (Index c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b)) bounds.push_back(c);
      }
      const auto glb = least_of(bounds, [&](Index x, Index y) { return le(y, x); });
      if (!glb) throw StructuralError("no greatest lower bound for " + pair_name(keys, a, b));
      l.join_[a * n + b] = l.join_[b * n + a] = *lub;
      l.meet_[a * n + b] = l.meet_[b * n + a] = *glb;
    }
  }
  // A lattice is bounded: fold join and meet over everything.
  Index top = 0, bottom = 0;
  for (Index a = 1; a < n; ++a) {
    top = l.join_[top * n + a];
    bottom = l.meet_[bottom * n + a];
  }
  l.keys_ = std::move(keys);
  l.leq_ = std::move(leq);
  l.top_ = top;
  l.bottom_ = bottom;
  return l;
}

FiniteLattice FiniteLattice::from_tables(std::vector<std::string> keys, std::vector<char> leq,
                                         std::vector<Index> join, std::vector<Index> meet) {
  FiniteLattice derived = from_order(std::move(keys), std::move(leq));
  if (join != derived.join_) throw StructuralError("join table disagrees with the order");
  if (meet != derived.meet_) throw StructuralError("meet table disagrees with the order");
  return derived;
}

FiniteLattice lattice_from_sets(const std::vector<ElementSet>& family, std::vector<std::string> keys) {
  if (family.empty()) throw StructuralError("empty family of sets");
  const std::size_t n = family.size();
  if (keys.empty()) {
    keys.reserve(n);
    for (const auto& s : family) keys.push_back(format_set(s));
  } else if (keys.size() != n) {
    throw UsageError("lattice_from_sets: one key per set required");
  }
  {
    std::set<ElementSet> unique(family.begin(), family.end());
    if (unique.size() != n) throw StructuralError("family contains duplicate sets");
  }
  std::vector<char> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a * n + b] = std::includes(family[b].begin(), family[b].end(), family[a].begin(), family[a].end()) ? 1 : 0;
    }
  }
  return FiniteLattice::from_order(std::move(keys), std::move(leq));
}

LawCheck is_modular(const FiniteLattice& l) {
  const Index n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        if (!l.leq(x, z)) continue;
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return {false, std::array<Index, 3>{x, y, z}};
      }
    }
  }
  return {};
}

LawCheck is_distributive(const FiniteLattice& l) {
  const Index n = static_cast<Index>(l.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return {false, std::array<Index, 3>{x, y, z}};
        }
      }
    }
  }
  return {};
}

std::optional<Index> complement_of(const FiniteLattice& l, Index x) {
  for (Index y = 0; y < l.size(); ++y) {
    if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) return y;
  }
  return std::nullopt;
}

ComplementCheck is_complemented(const FiniteLattice& l) {
  for (Index x = 0; x < l.size(); ++x) {
    if (!complement_of(l, x)) return {false, x};
  }
  return {};
}

std::vector<std::pair<Index, Index>> cover_relation(const FiniteLattice& l) {
  const Index n = static_cast<Index>(l.size());
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool covered = true;
      for (Index c = 0; c < n && covered; ++c) {
        if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> ranks(const FiniteLattice& l) {
  const std::size_t n = l.size();
  // Elements with fewer predecessors come first in any linear extension.
  std::vector<std::size_t> below(n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) below[a] += l.leq(b, a) ? 1 : 0;
  }
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return below[a] < below[b]; });
  std::vector<std::vector<Index>> lower_covers(n);
  for (const auto& [a, b] : cover_relation(l)) lower_covers[b].push_back(a);
  std::vector<std::size_t> rank(n, 0);
  for (Index b : order) {
    for (Index a : lower_covers[b]) rank[b] = std::max(rank[b], rank[a] + 1);
  }
  return rank;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteLattice& l) {
  const auto r = ranks(l);
  std::vector<std::size_t> up(l.size(), 0), down(l.size(), 0);
  for (const auto& [a, b] : cover_relation(l)) {
    ++up[a];
    ++down[b];
  }
  std::vector<Signature> out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out[i] = {r[i], up[i], down[i]};
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteLattice& a, const FiniteLattice& b, std::vector<Signature> sa, std::vector<Signature> sb)
      : a_(a), b_(b), sig_a_(std::move(sa)), sig_b_(std::move(sb)), image_(a.size()), used_(b.size(), 0) {}

  bool run() { return extend(0); }
  std::vector<Index> take() { return std::move(image_); }

 private:
  bool extend(Index i) {
    if (i == a_.size()) return true;
    for (Index c = 0; c < b_.size(); ++c) {
      if (used_[c] || sig_a_[i] != sig_b_[c] || !consistent(i, c)) continue;
      image_[i] = c;
      used_[c] = 1;
      if (extend(i + 1)) return true;
      used_[c] = 0;
    }
    return false;
  }

  bool consistent(Index i, Index c) const {
    for (Index p = 0; p < i; ++p) {
      if (a_.leq(i, p) != b_.leq(c, image_[p]) || a_.leq(p, i) != b_.leq(image_[p], c)) return false;
    }
    return true;
  }

  const FiniteLattice& a_;
  const FiniteLattice& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Index> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<LatticeMap> are_isomorphic(const LatticePtr& a, const LatticePtr& b) {
  if (a->size() != b->size()) return std::nullopt;
  auto sa = signatures(*a);
  auto sb = signatures(*b);
  {
    auto ms_a = sa, ms_b = sb;
    std::sort(ms_a.begin(), ms_a.end());
    std::sort(ms_b.begin(), ms_b.end());
    if (ms_a != ms_b) return std::nullopt;
  }
  IsoSearch search(*a, *b, std::move(sa), std::move(sb));
  if (!search.run()) return std::nullopt;
  return LatticeMap{a, b, search.take()};
}

LatticeMap identity_map(const LatticePtr& l) {
  std::vector<Index> img(l->size());
  std::iota(img.begin(), img.end(), Index{0});
  return LatticeMap{l, l, std::move(img)};
}

bool MapVerification::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

MapVerification verify_map(const LatticeMap& map) {
  MapVerification out;
  const bool formed = map.source && map.target && map.image.size() == map.source->size() &&
                      std::all_of(map.image.begin(), map.image.end(),
                                  [&](Index v) { return v < map.target->size(); });
  out.items.push_back({"well_formed", formed, formed ? "" : "image table does not fit the endpoints"});
  if (!formed) {
    for (const char* name : {"bijective", "preserves_join", "preserves_meet", "preserves_order", "reflects_order"}) {
      out.items.push_back({name, false, "skipped: map is not well formed"});
    }
    return out;
  }
  const FiniteLattice& s = *map.source;
  const FiniteLattice& t = *map.target;
  const auto& f = map.image;
  const Index n = static_cast<Index>(s.size());

  {
    CheckItem item{"bijective", true, ""};
    std::vector<char> hit(t.size(), 0);
    for (Index a = 0; a < n && item.passed; ++a) {
      if (hit[f[a]]) {
        item.passed = false;
        item.detail = "two elements map to " + t.key(f[a]);
      }
      hit[f[a]] = 1;
    }
    if (item.passed && s.size() != t.size()) {
      item.passed = false;
      item.detail = "not surjective: " + std::to_string(s.size()) + " -> " + std::to_string(t.size());
    }
    out.items.push_back(std::move(item));
  }

  auto pairwise = [&](const char* name, auto&& holds, const char* what) {
    CheckItem item{name, true, ""};
    for (Index a = 0; a < n && item.passed; ++a) {
      for (Index b = 0; b < n && item.passed; ++b) {
        if (!holds(a, b)) {
          item.passed = false;
          item.detail = std::string(what) + " fails at " + pair_name(s.keys(), a, b);
        }
      }
    }
    out.items.push_back(std::move(item));
  };
  pairwise("preserves_join", [&](Index a, Index b) { return f[s.join(a, b)] == t.join(f[a], f[b]); }, "join");
  pairwise("preserves_meet", [&](Index a, Index b) { return f[s.meet(a, b)] == t.meet(f[a], f[b]); }, "meet");
  pairwise("preserves_order", [&](Index a, Index b) { return !s.leq(a, b) || t.leq(f[a], f[b]); }, "order");
  pairwise("reflects_order", [&](Index a, Index b) { return !t.leq(f[a], f[b]) || s.leq(a, b); }, "order reflection");
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const FiniteLattice& l, const std::string& graph_name) {
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Index a = 0; a < l.size(); ++a) {
    out += "  n" + std::to_string(a) + " [label=\"" + dot_escape(l.key(a)) + "\"];\n";
  }
  for (const auto& [a, b] : cover_relation(l)) {
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace coordlat
