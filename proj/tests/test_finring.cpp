#include <gtest/gtest.h>

#include "coordlat/error.hpp"
#include "coordlat/finring.hpp"
#include "oracles.hpp"

using namespace coordlat;

TEST(Zmod, TrivialRingHasZeroEqualToOne) {
  auto r = make_zmod(1);
  EXPECT_EQ(r->order(), 1u);
  EXPECT_EQ(r->zero(), r->one());
}

TEST(Zmod, ArithmeticMatchesIntegers) {
  auto r6 = make_zmod(6);
  EXPECT_EQ(r6->mul(2, 5), 4u);
  EXPECT_EQ(make_zmod(4)->add(3, 3), 2u);
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; ++b) {
      EXPECT_EQ(r6->add(a, b), (a + b) % 6);
      EXPECT_EQ(r6->mul(a, b), (a * b) % 6);
    }
  }
  EXPECT_EQ(r6->label(5), "5");
}

TEST(Zmod, CapAndZero) {
  EXPECT_THROW(make_zmod(257), SizeLimitError);
  EXPECT_THROW(make_zmod(10, 8), SizeLimitError);
  EXPECT_ANY_THROW(make_zmod(0));
}

TEST(Matrix, Orders) {
  auto z2 = make_zmod(2);
  EXPECT_EQ(make_matrix_ring(*z2, 1)->order(), 2u);
  EXPECT_EQ(make_matrix_ring(*z2, 2)->order(), 16u);
  EXPECT_EQ(make_matrix_ring(*make_zmod(3), 2)->order(), 81u);
  EXPECT_THROW(make_matrix_ring(*make_zmod(3), 3), SizeLimitError);
}

TEST(Matrix, OneByOneIsTheBaseRing) {
  auto z2 = make_zmod(2);
  auto m = make_matrix_ring(*z2, 1);
  for (Index a = 0; a < 2; ++a) {
    for (Index b = 0; b < 2; ++b) {
      EXPECT_EQ(m->add(a, b), z2->add(a, b));
      EXPECT_EQ(m->mul(a, b), z2->mul(a, b));
    }
  }
}

TEST(Matrix, TablesAgreeWithIntegerMatrixProduct) {
  for (std::uint32_t n : {2u, 3u}) {
    auto m = make_matrix_ring(*make_zmod(n), 2);
    for (Index a = 0; a < m->order(); ++a) {
      for (Index b = 0; b < m->order(); ++b) {
        const auto x = oracle::Mat2::decode(n, a), y = oracle::Mat2::decode(n, b);
        ASSERT_EQ(m->mul(a, b), (x * y).encode());
        ASSERT_EQ(m->add(a, b), (x + y).encode());
      }
    }
    EXPECT_EQ(m->one(), (oracle::Mat2{n, {1, 0, 0, 1}}).encode());
  }
  EXPECT_EQ(make_matrix_ring(*make_zmod(2), 2)->label(6), "[[0,1],[1,0]]");
}

TEST(Product, Identity) {
  auto p = make_product(*make_zmod(2), *make_zmod(3));
  EXPECT_EQ(p->order(), 6u);
  EXPECT_EQ(p->one(), 1u * 3 + 1);
  EXPECT_EQ(p->label(p->one()), "(1,1)");
}

TEST(Product, Componentwise) {
  auto z2 = make_zmod(2);
  auto p = make_product(*z2, *z2);
  // (1,0) is index 2, (0,1) is index 1.
  EXPECT_EQ(p->mul(2, 1), p->zero());
  EXPECT_EQ(p->add(2, 1), 3u);
}

TEST(Product, TrivialFactor) {
  auto p = make_product(*make_zmod(1), *make_zmod(5));
  auto z5 = make_zmod(5);
  EXPECT_EQ(p->add_table().size(), 25u);
  EXPECT_TRUE(std::equal(p->mul_table().begin(), p->mul_table().end(), z5->mul_table().begin()));
  EXPECT_TRUE(std::equal(p->add_table().begin(), p->add_table().end(), z5->add_table().begin()));
}

TEST(ValidateRing, ConstructorsAreValid) {
  auto z2 = make_zmod(2), z3 = make_zmod(3);
  for (const auto& r : {make_zmod(1), make_zmod(6), make_zmod(4), make_matrix_ring(*z2, 2),
                        make_product(*z2, *z3), make_matrix_ring(*z3, 2)}) {
    const auto v = validate_ring(*r, true);
    EXPECT_TRUE(v.valid()) << r->order();
    EXPECT_TRUE(v.violations.empty());
  }
}

TEST(ValidateRing, DamagedTableIsReported) {
  auto z4 = make_zmod(4);
  std::vector<Index> mul(z4->mul_table().begin(), z4->mul_table().end());
  for (Index b = 0; b < 4; ++b) mul[2 * 4 + b] = 0;
  const FiniteRing bad(z4->labels(), {z4->add_table().begin(), z4->add_table().end()}, mul, 0, 1);
  const auto v = validate_ring(bad);
  ASSERT_FALSE(v.valid());
  bool named = false;
  for (const auto& x : v.violations) {
    named = named || x.axiom == "mul_identity" || x.axiom == "left_distributive" ||
            x.axiom == "right_distributive";
  }
  EXPECT_TRUE(named);
}

TEST(ValidateRing, LargeRingNeedsForce) {
  auto big = make_matrix_ring(*make_zmod(3), 2);
  EXPECT_TRUE(validate_ring(*big).valid());
}

TEST(QuasiInverse, Examples) {
  auto z6 = make_zmod(6);
  EXPECT_EQ(quasi_inverse(*z6, 2), Index{2});
  EXPECT_EQ(quasi_inverse(*z6, 0), Index{0});
  EXPECT_EQ(quasi_inverse(*make_zmod(4), 2), std::nullopt);
  EXPECT_EQ(quasi_inverse(*make_zmod(4), 0), Index{0});
}

TEST(QuasiInverse, AgreesWithOracleEverywhere) {
  auto z2 = make_zmod(2);
  for (const auto& r : {make_zmod(6), make_zmod(4), make_zmod(9), make_matrix_ring(*z2, 2), make_product(*z2, *make_zmod(4))}) {
    for (Index a = 0; a < r->order(); ++a) EXPECT_EQ(quasi_inverse(*r, a), oracle::quasi_inverse(*r, a));
  }
}

TEST(QuasiInverse, ElementOverload) {
  auto z6 = make_zmod(6);
  auto s = quasi_inverse(RingElement{z6, 5});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->index, 5u);
  EXPECT_THROW(RingElement(z6, 6), UsageError);
}

TEST(Regularity, Zmod) {
  const auto r6 = is_von_neumann_regular(*make_zmod(6));
  EXPECT_TRUE(r6.regular);
  EXPECT_EQ(r6.witnesses.size(), 6u);
  EXPECT_FALSE(r6.counterexample.has_value());

  const auto r4 = is_von_neumann_regular(*make_zmod(4));
  EXPECT_FALSE(r4.regular);
  EXPECT_EQ(r4.counterexample, Index{2});
  EXPECT_TRUE(r4.witnesses.empty());

  EXPECT_TRUE(is_von_neumann_regular(*make_zmod(2)).regular);
}

TEST(StrongRegularity, Examples) {
  EXPECT_TRUE(is_strongly_regular(*make_zmod(6)));
  EXPECT_TRUE(is_strongly_regular(*make_zmod(1)));
  auto m2 = make_matrix_ring(*make_zmod(2), 2);
  EXPECT_FALSE(is_strongly_regular(*m2));
  EXPECT_TRUE(is_von_neumann_regular(*m2).regular);
  // [[0,1],[0,0]] squares to zero.
  EXPECT_EQ(strong_witness(*m2, 4), std::nullopt);
}

TEST(Idempotents, Examples) {
  EXPECT_EQ(idempotents(*make_zmod(6)), (std::vector<Index>{0, 1, 3, 4}));
  EXPECT_EQ(idempotents(*make_zmod(5)), (std::vector<Index>{0, 1}));
  auto m2 = make_matrix_ring(*make_zmod(2), 2);
  EXPECT_EQ(idempotents(*m2).size(), 8u);
  EXPECT_EQ(idempotents(*m2), oracle::idempotents(*m2));
}
