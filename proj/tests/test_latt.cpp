#include <gtest/gtest.h>

#include "coordlat/coord.hpp"
#include "coordlat/error.hpp"
#include "coordlat/latt.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coordlat;

namespace {

LatticePtr share(FiniteLattice l) { return std::make_shared<const FiniteLattice>(std::move(l)); }

std::vector<FiniteLattice> small_lattices() {
  return {fixture::chain(1), fixture::chain(2), fixture::chain(3), fixture::chain(4),
          fixture::boolean_square(), fixture::diamond(), fixture::pentagon()};
}

}  // namespace

TEST(FromSets, Examples) {
  const auto one = lattice_from_sets({{0}});
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.bottom(), one.top());

  const auto sq = lattice_from_sets({{0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
  EXPECT_TRUE(oracle::isomorphic(sq, fixture::boolean_square()));

  const auto m3 = lattice_from_sets({{0}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 2, 3}});
  EXPECT_TRUE(oracle::isomorphic(m3, fixture::diamond()));
  EXPECT_EQ(ranks(m3)[m3.top()], 2u);
  EXPECT_EQ(m3.key(1), "{0,1}");
}

TEST(FromSets, StructuralErrors) {
  EXPECT_THROW(lattice_from_sets({}), StructuralError);
  EXPECT_THROW(lattice_from_sets({{0}, {0}}), StructuralError);
  // Two maximal sets and no top.
  EXPECT_THROW(lattice_from_sets({{0}, {0, 1}, {0, 2}}), StructuralError);
}

TEST(FromOrder, RejectsNonLattice) {
  // Two minimal elements.
  EXPECT_ANY_THROW(FiniteLattice::from_order({"a", "b"}, {1, 0, 0, 1}));
  // Not antisymmetric.
  EXPECT_ANY_THROW(FiniteLattice::from_order({"a", "b"}, {1, 1, 1, 1}));
}

TEST(Tables, AgreeWithOrderOracle) {
  for (const auto& l : small_lattices()) {
    for (Index a = 0; a < l.size(); ++a) {
      for (Index b = 0; b < l.size(); ++b) {
        EXPECT_EQ(l.join(a, b), oracle::join_from_leq(l, a, b));
        EXPECT_EQ(l.meet(a, b), oracle::meet_from_leq(l, a, b));
      }
    }
  }
}

TEST(FromTables, RejectsWrongJoin) {
  const auto sq = fixture::boolean_square();
  auto join = sq.join_table();
  join[1 * 4 + 2] = 1;
  EXPECT_ANY_THROW(FiniteLattice::from_tables(sq.keys(), sq.leq_matrix(), join, sq.meet_table()));
  EXPECT_EQ(FiniteLattice::from_tables(sq.keys(), sq.leq_matrix(), sq.join_table(), sq.meet_table()), sq);
}

TEST(Modular, Examples) {
  EXPECT_TRUE(is_modular(fixture::chain(4)).holds);
  EXPECT_TRUE(is_modular(fixture::diamond()).holds);
  const auto n5 = is_modular(fixture::pentagon());
  EXPECT_FALSE(n5.holds);
  ASSERT_TRUE(n5.counterexample.has_value());
  const auto [x, y, z] = *n5.counterexample;
  const auto p = fixture::pentagon();
  EXPECT_TRUE(p.leq(x, z));
  EXPECT_NE(p.join(x, p.meet(y, z)), p.meet(p.join(x, y), z));
}

TEST(Complemented, Examples) {
  EXPECT_TRUE(is_complemented(fixture::chain(2)).holds);
  const auto c3 = is_complemented(fixture::chain(3));
  EXPECT_FALSE(c3.holds);
  EXPECT_EQ(c3.uncomplemented, Index{1});
  EXPECT_TRUE(is_complemented(fixture::diamond()).holds);
  EXPECT_EQ(complement_of(fixture::boolean_square(), 1), Index{2});
}

TEST(Distributive, Examples) {
  EXPECT_TRUE(is_distributive(fixture::boolean_square()).holds);
  EXPECT_TRUE(is_distributive(fixture::chain(1)).holds);
  const auto m3 = is_distributive(fixture::diamond());
  EXPECT_FALSE(m3.holds);
  EXPECT_EQ(m3.counterexample, (std::array<Index, 3>{1, 2, 3}));
}

TEST(Laws, AgreeWithOracle) {
  for (const auto& l : small_lattices()) {
    EXPECT_EQ(is_modular(l).holds, oracle::modular(l));
    EXPECT_EQ(is_distributive(l).holds, oracle::distributive(l));
    if (is_distributive(l).holds) {
      EXPECT_TRUE(is_modular(l).holds);
    }
  }
}

TEST(Isomorphism, Examples) {
  auto sq = share(fixture::boolean_square());
  const auto self = are_isomorphic(sq, sq);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->image, identity_map(sq).image);
  EXPECT_FALSE(are_isomorphic(sq, share(fixture::chain(4))).has_value());
  EXPECT_FALSE(are_isomorphic(share(fixture::diamond()), share(fixture::pentagon())).has_value());

  auto z6 = submodule_lattice(make_free_module(make_zmod(6), 1)).lattice;
  auto prod = submodule_lattice(make_free_module(make_product(*make_zmod(2), *make_zmod(3)), 1)).lattice;
  const auto iso = are_isomorphic(share(z6), share(prod));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(verify_map(*iso).passed());
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  const auto all = small_lattices();
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto found = are_isomorphic(share(a), share(b));
      EXPECT_EQ(found.has_value(), oracle::isomorphic(a, b));
      if (found) {
        EXPECT_TRUE(verify_map(*found).passed());
        EXPECT_TRUE(are_isomorphic(share(b), share(a)).has_value());
      }
    }
  }
}

TEST(VerifyMap, Examples) {
  auto two = share(fixture::chain(2));
  EXPECT_TRUE(verify_map(identity_map(two)).passed());
  const auto constant = verify_map(LatticeMap{two, two, {0, 0}});
  EXPECT_FALSE(constant.passed());
  bool bijective_failed = false;
  for (const auto& item : constant.items) {
    if (item.name == "bijective") bijective_failed = !item.passed;
  }
  EXPECT_TRUE(bijective_failed);
  // A bijection that is not order preserving.
  auto sq = share(fixture::boolean_square());
  EXPECT_FALSE(verify_map(LatticeMap{sq, sq, {3, 1, 2, 0}}).passed());
}

TEST(Dot, Examples) {
  EXPECT_EQ(export_dot(fixture::chain(1), "g"),
            "digraph g {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"x0\"];\n}\n");
  EXPECT_EQ(export_dot(fixture::chain(2), "g"),
            "digraph g {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"x0\"];\n  n1 [label=\"x1\"];\n"
            "  n0 -> n1;\n}\n");
  EXPECT_EQ(cover_relation(fixture::diamond()).size(), 6u);
  const std::string dot = export_dot(fixture::diamond());
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  EXPECT_EQ(edges, 6u);
}
