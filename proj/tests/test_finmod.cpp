#include <gtest/gtest.h>

#include "coordlat/error.hpp"
#include "coordlat/finmod.hpp"
#include "coordlat/io.hpp"
#include "oracles.hpp"

using namespace coordlat;

namespace {

ModulePtr z6() { return make_free_module(make_zmod(6), 1); }
ModulePtr z4() { return make_free_module(make_zmod(4), 1); }
ModulePtr z2sq() { return make_free_module(make_zmod(2), 2); }

ModuleHom mul_by(const ModulePtr& m, Index k) {
  ModuleHom f{m, m, {}};
  for (Index x = 0; x < m->order(); ++x) f.image.push_back(m->act(x, k));
  return f;
}

SubmoduleRef sub(const ModulePtr& m, ElementSet s) { return SubmoduleRef::checked(m, std::move(s)); }

}  // namespace

TEST(FreeModule, Orders) {
  EXPECT_EQ(z2sq()->order(), 4u);
  EXPECT_EQ(make_free_module(make_zmod(3), 0)->order(), 1u);
  EXPECT_EQ(make_free_module(make_zmod(3), 0)->label(0), "0");
  EXPECT_EQ(z2sq()->label(2), "(1,0)");
  EXPECT_THROW(make_free_module(make_zmod(2), 13), SizeLimitError);
}

TEST(FreeModule, RankOneIsTheRing) {
  auto r = make_zmod(6);
  auto m = make_free_module(r, 1);
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; ++b) {
      EXPECT_EQ(m->add(a, b), r->add(a, b));
      EXPECT_EQ(m->act(a, b), r->mul(a, b));
    }
  }
  EXPECT_TRUE(validate_module(*m).empty());
}

TEST(ModuleTables, Z3OverZ6IsAccepted) {
  auto r = make_zmod(6);
  ModuleDescription d;
  d.ring = r;
  d.labels = {"0", "1", "2"};
  for (Index a = 0; a < 3; ++a) {
    for (Index b = 0; b < 3; ++b) d.add.push_back((a + b) % 3);
  }
  for (Index m = 0; m < 3; ++m) {
    for (Index x = 0; x < 6; ++x) d.act.push_back((m * (x % 3)) % 3);
  }
  auto m = make_module_from_tables(d);
  EXPECT_EQ(m->order(), 3u);
  EXPECT_EQ(oracle::submodules(*m).size(), 2u);
}

TEST(ModuleTables, NonUnitalIsRejected) {
  auto base = z6();
  ModuleDescription d{base->ring_ptr(), base->labels(), {base->add_table().begin(), base->add_table().end()},
                      {base->act_table().begin(), base->act_table().end()}, 0};
  d.act[1 * 6 + 1] = 2;
  try {
    make_module_from_tables(d);
    FAIL() << "expected rejection";
  } catch (const AxiomError& e) {
    EXPECT_NE(std::string(e.what()).find("unital"), std::string::npos) << e.what();
  }
  const RightModule raw(d.ring, d.labels, d.add, d.act, d.zero);
  const auto v = validate_module(raw);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().axiom, "unital");
  EXPECT_EQ(v.front().witness, (std::vector<Index>{1}));
}

TEST(ModuleTables, RoundTripThroughDocument) {
  auto m = z2sq();
  auto back = module_from_document(load_document(save_document(module_document(*m))));
  EXPECT_TRUE(*back == *m);
}

TEST(Submodules, Cyclic) {
  EXPECT_EQ(cyclic_submodule(z6(), 0).elements(), (ElementSet{0}));
  EXPECT_EQ(cyclic_submodule(z6(), 2).elements(), (ElementSet{0, 2, 4}));
  EXPECT_EQ(cyclic_submodule(z2sq(), 2).elements(), (ElementSet{0, 2}));
}

TEST(Submodules, Enumerate) {
  auto zero = make_free_module(make_zmod(2), 0);
  ASSERT_EQ(enumerate_submodules(zero).size(), 1u);

  std::vector<ElementSet> got;
  for (const auto& s : enumerate_submodules(z6())) got.push_back(s.elements());
  EXPECT_EQ(got, (std::vector<ElementSet>{{0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}}));
  EXPECT_EQ(enumerate_submodules(z2sq()).size(), 5u);
}

TEST(Submodules, EnumerateAgreesWithSubsetFilter) {
  auto z2 = make_zmod(2);
  for (const auto& m : {z6(), z4(), z2sq(), make_free_module(make_zmod(8), 1), make_free_module(make_zmod(3), 2),
                        make_free_module(make_product(*z2, *make_zmod(3)), 1),
                        make_free_module(make_matrix_ring(*z2, 2), 1), make_free_module(z2, 4)}) {
    std::vector<ElementSet> got;
    for (const auto& s : enumerate_submodules(m)) got.push_back(s.elements());
    EXPECT_EQ(got, oracle::submodules(*m)) << m->order();
  }
}

TEST(Submodules, SumAndIntersect) {
  auto m = z6();
  auto evens = sub(m, {0, 2, 4}), threes = sub(m, {0, 3});
  EXPECT_EQ(sum(evens, threes), full_submodule(m));
  EXPECT_EQ(intersect(evens, threes), zero_submodule(m));
  EXPECT_EQ(sum(zero_submodule(m), threes), threes);
  EXPECT_EQ(sum(evens, evens), evens);
  EXPECT_EQ(intersect(full_submodule(m), threes), threes);
  EXPECT_EQ(intersect(evens, evens), evens);
  EXPECT_THROW(sum(evens, zero_submodule(z4())), UsageError);
  EXPECT_THROW(intersect(evens, zero_submodule(z4())), UsageError);
}

TEST(Submodules, CheckedRejectsNonSubmodule) {
  EXPECT_ANY_THROW(SubmoduleRef::checked(z6(), {0, 2}));
}

TEST(Homs, Counts) {
  auto zero = make_free_module(z6()->ring_ptr(), 0);
  EXPECT_EQ(hom_enumerate(zero, z6()).size(), 1u);
  EXPECT_EQ(hom_enumerate(z2sq(), z2sq()).size(), 16u);
  EXPECT_EQ(hom_enumerate(z6(), z6()).size(), 6u);
  EXPECT_EQ(hom_enumerate(z4(), z4()).size(), 4u);
}

TEST(Homs, AgreeWithAllFunctionsFilter) {
  auto z2 = make_zmod(2);
  auto evens = submodule_as_module(sub(z6(), {0, 2, 4})).module;
  const std::vector<std::pair<ModulePtr, ModulePtr>> pairs = {
      {z2sq(), z2sq()}, {z6(), z6()}, {z4(), z4()}, {z6(), evens}, {evens, z6()},
      {make_free_module(z2, 1), z2sq()}, {z2sq(), make_free_module(z2, 3)}};
  for (const auto& [u, m] : pairs) {
    std::vector<std::vector<Index>> got;
    for (const auto& f : hom_enumerate(u, m)) {
      EXPECT_TRUE(is_module_hom(f));
      got.push_back(f.image);
    }
    auto want = oracle::homs(*u, *m);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << u->order() << " -> " << m->order();
  }
}

TEST(Homs, EndOfZ6IsMultiplication) {
  const auto homs = hom_enumerate(z6(), z6());
  for (Index k = 0; k < 6; ++k) EXPECT_EQ(homs[k], mul_by(z6(), k));
}

TEST(Homs, CapIsEnforced) {
  EXPECT_THROW(hom_enumerate(z2sq(), z2sq(), 15), SizeLimitError);
}

TEST(Homs, Compose) {
  auto m = z6();
  auto f = mul_by(m, 2);
  EXPECT_EQ(hom_compose(f, identity_hom(m)), f);
  EXPECT_EQ(hom_compose(identity_hom(m), f), f);
  EXPECT_EQ(hom_compose(zero_hom(m, m), f), zero_hom(m, m));
  EXPECT_EQ(hom_compose(f, mul_by(m, 5)), mul_by(m, 4));
  EXPECT_EQ(hom_add(f, mul_by(m, 5)), mul_by(m, 1));
  EXPECT_THROW(hom_compose(f, identity_hom(z4())), UsageError);
}

TEST(Homs, ComposeIsDiagrammatic) {
  auto m = z2sq();
  // (a,b) -> (b,0) and (a,b) -> (a,0); indices are 2a+b.
  ModuleHom shift{m, m, {0, 2, 0, 2}};
  ModuleHom proj{m, m, {0, 0, 2, 2}};
  ASSERT_TRUE(is_module_hom(shift));
  ASSERT_TRUE(is_module_hom(proj));
  const auto fg = hom_compose(shift, proj);
  for (Index x = 0; x < 4; ++x) EXPECT_EQ(fg(x), proj(shift(x)));
  EXPECT_NE(hom_compose(shift, proj), hom_compose(proj, shift));
}

TEST(Homs, Preimage) {
  auto m = z6();
  EXPECT_EQ(preimage(mul_by(m, 2), full_submodule(m)), full_submodule(m));
  EXPECT_EQ(preimage(identity_hom(m), sub(m, {0, 3})).elements(), (ElementSet{0, 3}));
  EXPECT_EQ(preimage(mul_by(m, 2), zero_submodule(m)).elements(), (ElementSet{0, 3}));
  EXPECT_THROW(preimage(mul_by(m, 2), zero_submodule(z4())), UsageError);
  EXPECT_EQ(image(mul_by(m, 3)).elements(), (ElementSet{0, 3}));
}

TEST(Quotient, Examples) {
  auto m = z6();
  auto q0 = quotient_module(zero_submodule(m));
  EXPECT_EQ(q0.module->order(), 6u);
  auto qe = quotient_module(sub(m, {0, 2, 4}));
  EXPECT_EQ(qe.module->order(), 2u);
  EXPECT_TRUE(is_module_hom(qe.projection));
  EXPECT_EQ(qe.projection(3), qe.projection(1));
  EXPECT_NE(qe.projection(1), qe.projection(2));
  EXPECT_EQ(quotient_module(full_submodule(m)).module->order(), 1u);
}

TEST(DirectSummand, Examples) {
  auto m = z6();
  EXPECT_EQ(is_direct_summand(zero_submodule(m)), full_submodule(m));
  EXPECT_EQ(is_direct_summand(sub(m, {0, 2, 4}))->elements(), (ElementSet{0, 3}));
  EXPECT_EQ(is_direct_summand(sub(z4(), {0, 2})), std::nullopt);
}

TEST(DirectSummand, ProjectionIdempotent) {
  auto m = z6();
  EXPECT_EQ(projection_idempotent(full_submodule(m), zero_submodule(m)), identity_hom(m));
  EXPECT_EQ(projection_idempotent(zero_submodule(m), full_submodule(m)), zero_hom(m, m));
  const auto e = projection_idempotent(sub(m, {0, 2, 4}), sub(m, {0, 3}));
  EXPECT_EQ(e(1), 4u);
  EXPECT_EQ(hom_compose(e, e), e);
  EXPECT_THROW(projection_idempotent(sub(m, {0, 2, 4}), zero_submodule(m)), UsageError);
}

TEST(Generators, GenerateTheModule) {
  for (const auto& m : {z6(), z2sq(), make_free_module(make_matrix_ring(*make_zmod(2), 2), 1)}) {
    const auto g = greedy_generators(m);
    EXPECT_EQ(generate_submodule(m, g), full_submodule(m));
  }
}
