#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sidem;
using namespace fixtures;
using oracle::Set;

namespace {

Submodule sub(const ModulePtr& m, std::initializer_list<Elem> gens) { return submodule_generated(*m, gens); }

}  // namespace

TEST(IdempotentElement, Examples) {
  ModulePtr z4 = regular(4);
  const MultSet s = closure(z4->ring_ptr(), {3});
  EXPECT_FALSE(is_s_idempotent_element(*z4, s, 2).holds);
  const Verdict zero = is_s_idempotent_element(*z4, s, 0);
  ASSERT_TRUE(zero.holds);
  EXPECT_EQ(zero.witness->s, std::optional<Elem>(1));
  EXPECT_EQ(zero.witness->a, std::optional<Elem>(0));

  ModulePtr z6 = regular(6);
  const Verdict two = is_s_idempotent_element(*z6, trivial_mult_set(z6->ring_ptr()), 2);
  ASSERT_TRUE(two.holds);
  EXPECT_EQ(two.witness->s, std::optional<Elem>(1));
  EXPECT_EQ(two.witness->a, std::optional<Elem>(4));
}

TEST(IdempotentSubmodule, Examples) {
  ModulePtr z4 = regular(4);
  const MultSet s = closure(z4->ring_ptr(), {3});
  const Verdict v = is_s_idempotent_submodule(*z4, s, sub(z4, {2}));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample.has_value());
  for (const auto& n : {whole_module(*z4), zero_submodule(*z4)}) {
    const Verdict w = is_s_idempotent_submodule(*z4, s, n);
    ASSERT_TRUE(w.holds);
    EXPECT_EQ(w.witness->s, std::optional<Elem>(1));
  }
}

TEST(FullyIdempotent, Examples) {
  ModulePtr z6 = regular(6);
  EXPECT_TRUE(is_fully_s_idempotent(*z6, trivial_mult_set(z6->ring_ptr())).holds);
  EXPECT_TRUE(is_fully_idempotent(*z6).holds);

  ModulePtr z4 = regular(4);
  const Verdict v = is_fully_s_idempotent(*z4, closure(z4->ring_ptr(), {3}));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample && v.counterexample->submodule);
  EXPECT_EQ(oracle::of(*v.counterexample->submodule), (Set{0, 2}));

  // Z3 over Z12 with S = {1,3,9}: 3 annihilates the module.
  ModulePtr z3 = zd(12, 3);
  const Verdict a = is_fully_s_idempotent(*z3, closure(z3->ring_ptr(), {3}));
  EXPECT_TRUE(a.holds);
  EXPECT_FALSE(is_fully_idempotent(*zd(12, 4)).holds);
}

TEST(FullyIdempotent, DegenerateSetHoldsAndIsFlagged) {
  ModulePtr z4 = regular(4);
  const Verdict v = is_fully_s_idempotent(*z4, closure(z4->ring_ptr(), {2}));
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.degenerate);
  EXPECT_FALSE(is_fully_s_idempotent(*z4, closure(z4->ring_ptr(), {3})).degenerate);
}

TEST(Multiplication, Examples) {
  ModulePtr z4 = regular(4);
  for (const auto& s : mult_sets(z4->ring_ptr())) EXPECT_TRUE(is_s_multiplication(*z4, s).holds);
  ModulePtr v = sum_over(2, 2, 2);
  const Verdict w = is_multiplication(*v);
  EXPECT_FALSE(w.holds);
  ASSERT_TRUE(w.counterexample && w.counterexample->submodule);
  const Submodule& n = *w.counterexample->submodule;
  EXPECT_EQ(n.size(), 2u) << "a line of the plane";
  EXPECT_EQ(oracle::of(colon_into(*v, n)), (Set{0}));
  EXPECT_TRUE(is_multiplication(*zd(6, 1)).holds);
}

TEST(Pure, Examples) {
  ModulePtr z6 = regular(6);
  EXPECT_TRUE(is_pure_submodule(*z6, sub(z6, {2})).holds);
  ModulePtr z4 = regular(4);
  const MultSet s = closure(z4->ring_ptr(), {3});
  const Verdict v = is_s_pure_submodule(*z4, s, sub(z4, {2}));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample && v.counterexample->ideal);
  EXPECT_EQ(oracle::of(*v.counterexample->ideal), (Set{0, 2}));
  const Verdict whole = is_s_pure_submodule(*z4, s, whole_module(*z4));
  ASSERT_TRUE(whole.holds);
  EXPECT_EQ(whole.witness->s, std::optional<Elem>(1));
}

TEST(Copure, Examples) {
  ModulePtr z6 = regular(6);
  EXPECT_TRUE(is_copure_submodule(*z6, sub(z6, {2})).holds);
  ModulePtr z4 = regular(4);
  const MultSet s = closure(z4->ring_ptr(), {3});
  const Verdict v = is_s_copure_submodule(*z4, s, sub(z4, {2}));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample && v.counterexample->ideal);
  EXPECT_EQ(oracle::of(*v.counterexample->ideal), (Set{0, 2}));
  EXPECT_TRUE(is_s_copure_submodule(*z4, s, whole_module(*z4)).holds);
}

TEST(Fully, Examples) {
  ModulePtr z6 = regular(6);
  EXPECT_TRUE(is_fully(FullyProperty::s_pure, *z6, trivial_mult_set(z6->ring_ptr())).holds);
  ModulePtr z4 = regular(4);
  EXPECT_FALSE(is_fully(FullyProperty::s_idempotent, *z4, closure(z4->ring_ptr(), {3})).holds);
  ModulePtr zero = zd(6, 1);
  for (auto p : {FullyProperty::s_idempotent, FullyProperty::s_pure, FullyProperty::s_copure})
    EXPECT_TRUE(is_fully(p, *zero, trivial_mult_set(zero->ring_ptr())).holds);
}

// Every checker against the literal definition, every fixture, every
// multiplicative set of the standard families.
TEST(Oracle, CheckersMatchDefinitions) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    const oracle::Lattice lat(m);
    for (const auto& s : mult_sets(m.ring_ptr())) {
      const Set ss = oracle::of(s.elements);
      const std::string where = f.name + " S=" + std::to_string(s.size()) + "@" + std::to_string(product_of_elements(s));
      for (Elem x = 0; x < m.size(); ++x)
        ASSERT_EQ(is_s_idempotent_element(m, s, x).holds, oracle::s_idempotent_element(m, ss, x)) << where;
      for (const auto& n : enumerate_submodules(m)) {
        const Set nn = oracle::of(n);
        ASSERT_EQ(is_s_idempotent_submodule(m, s, n).holds, oracle::s_idempotent(m, ss, nn)) << where;
        ASSERT_EQ(is_s_pure_submodule(m, s, n).holds, oracle::s_pure(m, lat, ss, nn)) << where;
        ASSERT_EQ(is_s_copure_submodule(m, s, n).holds, oracle::s_copure(m, lat, ss, nn)) << where;
      }
      EXPECT_EQ(is_fully_s_idempotent(m, s).holds, oracle::fully_s_idempotent(m, lat, ss)) << where;
      EXPECT_EQ(is_s_multiplication(m, s).holds, oracle::s_multiplication(m, lat, ss)) << where;
    }
  }
}

TEST(Oracle, WitnessesAreGenuine) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    const oracle::Lattice lat(m);
    for (const auto& s : mult_sets(m.ring_ptr())) {
      const Verdict full = is_fully_s_idempotent(m, s);
      if (full.holds) {
        ASSERT_EQ(full.witness->per_submodule.size(), enumerate_submodules(m).size());
        for (const auto& w : full.witness->per_submodule) {
          EXPECT_TRUE(s.contains(w.s));
          EXPECT_TRUE(oracle::s_idempotent(m, {w.s}, oracle::of(w.submodule))) << f.name;
        }
      } else {
        ASSERT_TRUE(full.counterexample && full.counterexample->submodule);
        EXPECT_FALSE(oracle::s_idempotent(m, oracle::of(s.elements), oracle::of(*full.counterexample->submodule)));
      }
      const Verdict mult = is_s_multiplication(m, s);
      if (mult.holds)
        for (const auto& w : mult.witness->per_submodule) {
          ASSERT_TRUE(w.ideal.has_value());
          const Set im = oracle::ideal_times(m, oracle::of(*w.ideal), oracle::all(m.size()));
          const Set nn = oracle::of(w.submodule);
          EXPECT_TRUE(oracle::subset(im, nn));
          EXPECT_TRUE(oracle::subset(oracle::scaled(m, w.s, nn), im));
        }
      for (Elem x = 0; x < m.size(); ++x) {
        const Verdict e = is_s_idempotent_element(m, s, x);
        if (!e.holds) continue;
        EXPECT_EQ(m.act(*e.witness->s, x), m.act(*e.witness->a, x));
        EXPECT_TRUE(oracle::subset(oracle::scaled(m, *e.witness->a, oracle::all(m.size())), oracle::span(m, {x})));
      }
    }
  }
}

// The fast path uses I = (N:M); the definition quantifies over every ideal.
TEST(Oracle, MultiplicationFastPathMatchesDefinitionUpTo64) {
  auto all = small_modules();
  for (auto& f : medium_modules()) all.push_back(f);
  for (const auto& f : all) {
    const Module& m = *f.module;
    const oracle::Lattice lat(m);
    for (const auto& s : mult_sets(m.ring_ptr())) {
      const bool fast = is_s_multiplication(m, s).holds;
      EXPECT_EQ(fast, is_s_multiplication_by_definition(m, s).holds) << f.name;
      EXPECT_EQ(fast, oracle::s_multiplication(m, lat, oracle::of(s.elements))) << f.name;
    }
  }
}

TEST(Laws, FullyIdempotentImpliesMultiplication) {
  for (const auto& f : small_modules())
    for (const auto& s : mult_sets(f.module->ring_ptr()))
      if (is_fully_s_idempotent(*f.module, s).holds) { EXPECT_TRUE(is_s_multiplication(*f.module, s).holds) << f.name; }
}

TEST(Laws, UnitSetsChangeNothing) {
  for (const auto& f : small_modules()) {
    const bool plain = is_fully_idempotent(*f.module).holds;
    for (const auto& s : mult_sets(f.module->ring_ptr()))
      if (is_subset_units(s)) { EXPECT_EQ(is_fully_s_idempotent(*f.module, s).holds, plain) << f.name; }
  }
}

TEST(Laws, LargerSetsPreserveAndSaturationIsInvisible) {
  for (const auto& f : small_modules()) {
    const auto sets = mult_sets(f.module->ring_ptr());
    for (const auto& a : sets) {
      const bool va = is_fully_s_idempotent(*f.module, a).holds;
      EXPECT_EQ(va, is_fully_s_idempotent(*f.module, saturation(a)).holds) << f.name;
      for (const auto& b : sets)
        if (va && a.elements.is_subset_of(b.elements)) { EXPECT_TRUE(is_fully_s_idempotent(*f.module, b).holds) << f.name; }
    }
  }
}

TEST(Laws, PlainPropertiesAreTheTrivialSetCase) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    const MultSet one = trivial_mult_set(m.ring_ptr());
    EXPECT_EQ(is_multiplication(m).holds, is_s_multiplication(m, one).holds);
    for (const auto& n : enumerate_submodules(m)) {
      EXPECT_EQ(is_idempotent_submodule(m, n).holds, is_s_idempotent_submodule(m, one, n).holds);
      EXPECT_EQ(is_pure_submodule(m, n).holds, is_s_pure_submodule(m, one, n).holds);
      EXPECT_EQ(is_copure_submodule(m, n).holds, is_s_copure_submodule(m, one, n).holds);
    }
  }
}

TEST(FindWitness, PrefersProductThenCanonicalOrder) {
  RingPtr z12 = zn(12);
  const MultSet s = closure(z12, {3});
  auto w = find_witness(s, [](Elem t) { return t != 1; });
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, 3u);
  EXPECT_FALSE(find_witness(s, [](Elem) { return false; }).has_value());
}
