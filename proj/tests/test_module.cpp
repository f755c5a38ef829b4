#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sidem;
using namespace fixtures;
using oracle::Set;

namespace {

std::set<Set> library_submodules(const Module& m) {
  std::set<Set> out;
  for (const auto& n : enumerate_submodules(m)) out.insert(oracle::of(n));
  return out;
}

}  // namespace

TEST(ModulePresentation, Z2OverZ6) {
  ModulePresentation p{{2}, {{{1}}}};
  ModulePtr m = Module::create(zn(6), p);
  EXPECT_EQ(m->size(), 2u);
  for (Elem r = 0; r < 6; ++r) EXPECT_EQ(m->act(r, 1), r % 2);
}

TEST(ModulePresentation, RejectsNonUnitalAction) {
  ModulePresentation p{{3}, {{{2}}}};
  try {
    Module::create(zn(4), p);
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "unitality");
  }
}

TEST(ModulePresentation, RegularModuleIsValid) {
  ModulePtr m = regular(4);
  EXPECT_EQ(m->size(), 4u);
  for (Elem r = 0; r < 4; ++r)
    for (Elem x = 0; x < 4; ++x) EXPECT_EQ(m->act(r, x), (r * x) % 4);
}

TEST(Span, Examples) {
  EXPECT_EQ(oracle::of(submodule_generated(*regular(6), {4})), (Set{0, 2, 4}));
  EXPECT_EQ(oracle::of(submodule_generated(*regular(6), {})), (Set{0}));
  ModulePtr v = sum_over(2, 2, 2);
  EXPECT_EQ(oracle::of(submodule_generated(*v, {v->element({1, 1})})), (Set{0, v->element({1, 1})}));
}

TEST(Span, AgreesWithOracle) {
  for (const auto& f : small_modules())
    for (Elem x = 0; x < f.module->size(); ++x)
      for (Elem y = x; y < f.module->size(); ++y)
        ASSERT_EQ(oracle::of(submodule_generated(*f.module, {x, y})), oracle::span(*f.module, {x, y})) << f.name;
}

TEST(Submodules, Counts) {
  EXPECT_EQ(enumerate_submodules(*sum_over(2, 2, 2)).size(), 5u);
  EXPECT_EQ(enumerate_submodules(*regular(4)).size(), 3u);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(enumerate_submodules(*regular(p)).size(), 2u);
}

TEST(Submodules, AgreeWithSubsetBruteForce) {
  for (const auto& f : small_modules()) {
    const auto got = library_submodules(*f.module);
    EXPECT_EQ(got.size(), enumerate_submodules(*f.module).size()) << f.name << ": duplicates";
    EXPECT_EQ(got, oracle::submodules_by_subsets(*f.module)) << f.name;
  }
}

TEST(Submodules, AgreeWithGrowthOracleUpTo64) {
  auto all = small_modules();
  for (auto& f : medium_modules()) all.push_back(f);
  for (const auto& f : all) {
    ASSERT_LE(f.module->size(), 64u);
    EXPECT_EQ(library_submodules(*f.module), oracle::submodules_by_growth(*f.module)) << f.name;
  }
}

TEST(Submodules, GeneratorsSpanAndOrderIsCanonical) {
  for (const auto& f : small_modules()) {
    const auto& subs = enumerate_submodules(*f.module);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      EXPECT_EQ(oracle::span(*f.module, subs[i].generators), oracle::of(subs[i]));
      EXPECT_EQ(submodule_index(*f.module, subs[i]), i);
    }
  }
}

TEST(Colon, Examples) {
  ModulePtr z4 = regular(4);
  EXPECT_EQ(oracle::of(colon_into(*z4, submodule_generated(*z4, {2}))), (Set{0, 2}));
  EXPECT_EQ(oracle::of(colon_into(*z4, whole_module(*z4))), oracle::all(4));
  ModulePtr v = sum_over(2, 2, 2);
  EXPECT_EQ(oracle::of(colon_into(*v, submodule_generated(*v, {v->element({1, 0})}))), (Set{0}));
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(oracle::of(annihilator(*zd(6, 2))), (Set{0, 2, 4}));
  EXPECT_EQ(oracle::of(annihilator(*regular(6))), (Set{0}));
  EXPECT_EQ(oracle::of(annihilator(*zd(6, 1))), oracle::all(6));
}

TEST(Colon, ColonInModuleExamples) {
  ModulePtr z6 = regular(6);
  const Submodule n = submodule_generated(*z6, {2});
  EXPECT_EQ(oracle::of(colon_in_module(*z6, n, ideal_generated(z6->ring(), {3}))), (Set{0, 2, 4}));
  EXPECT_EQ(oracle::of(colon_in_module(*z6, n, zero_ideal(z6->ring()))), oracle::all(6));
  EXPECT_EQ(colon_in_module(*z6, n, unit_ideal(z6->ring())), n);
}

TEST(Colon, AgreesWithOracle) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    const auto& subs = enumerate_submodules(m);
    for (const auto& k : subs)
      for (const auto& n : subs) ASSERT_EQ(oracle::of(colon(m, k, n)), oracle::colon(m, oracle::of(k), oracle::of(n))) << f.name;
    for (const auto& n : subs)
      for (const auto& i : enumerate_ideals(m.ring())) {
        ASSERT_EQ(oracle::of(colon_in_module(m, n, i)), oracle::colon_in_module(m, oracle::of(n), oracle::of(i)));
        ASSERT_EQ(oracle::of(ideal_times_submodule(m, i, n)), oracle::ideal_times(m, oracle::of(i), oracle::of(n)));
      }
  }
}

TEST(IdealTimesSubmodule, Examples) {
  ModulePtr z4 = regular(4);
  const Ideal two = ideal_generated(z4->ring(), {2});
  EXPECT_EQ(oracle::of(ideal_times_submodule(*z4, two, whole_module(*z4))), (Set{0, 2}));
  for (const auto& n : enumerate_submodules(*z4)) {
    EXPECT_EQ(ideal_times_submodule(*z4, unit_ideal(z4->ring()), n), n);
    EXPECT_EQ(oracle::of(ideal_times_submodule(*z4, zero_ideal(z4->ring()), n)), (Set{0}));
  }
}

TEST(Containments, ColonTimesModuleStaysInside) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    for (const auto& n : enumerate_submodules(m)) {
      const Submodule once = colon_times(m, n);
      const Submodule twice = colon_square_times(m, n);
      EXPECT_TRUE(once.is_subset_of(n)) << f.name;
      EXPECT_TRUE(twice.is_subset_of(once)) << f.name;
      const Ideal q = colon_into(m, n);
      EXPECT_EQ(oracle::of(twice), oracle::ideal_times(m, oracle::ideal_product(m.ring(), oracle::of(q), oracle::of(q)), oracle::all(m.size())));
    }
  }
}

TEST(SumIntersect, Examples) {
  ModulePtr z6 = regular(6);
  const Submodule a = submodule_generated(*z6, {2}), b = submodule_generated(*z6, {3});
  EXPECT_EQ(oracle::of(sub_intersect(*z6, a, b)), (Set{0}));
  EXPECT_EQ(oracle::of(sub_sum(*z6, a, b)), oracle::all(6));
  EXPECT_EQ(sub_sum(*z6, a, zero_submodule(*z6)), a);
}

TEST(SumIntersect, IntersectionIsLargestCommonSubmodule) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    const auto& subs = enumerate_submodules(m);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        const Submodule c = sub_intersect(m, a, b);
        EXPECT_EQ(oracle::of(c), oracle::intersect(oracle::of(a), oracle::of(b)));
        for (const auto& d : subs)
          if (d.is_subset_of(a) && d.is_subset_of(b)) { EXPECT_TRUE(d.is_subset_of(c)); }
        EXPECT_EQ(oracle::of(sub_sum(m, a, b)), oracle::sum(m, oracle::of(a), oracle::of(b)));
      }
  }
}

TEST(Quotient, Examples) {
  ModulePtr z4 = regular(4);
  EXPECT_EQ(quotient_module(*z4, submodule_generated(*z4, {2})).module->size(), 2u);
  EXPECT_EQ(quotient_module(*z4, zero_submodule(*z4)).module->size(), 4u);
  EXPECT_EQ(quotient_module(*z4, whole_module(*z4)).module->size(), 1u);
}

TEST(Quotient, ProjectionIsSurjectiveLinearWithKernelN) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    for (const auto& n : enumerate_submodules(m)) {
      const Quotient q = quotient_module(m, n);
      const Module& mq = *q.module;
      ASSERT_EQ(mq.size() * n.size(), m.size()) << f.name;
      std::vector<char> hit(mq.size(), 0);
      for (Elem x = 0; x < m.size(); ++x) {
        hit[q.projection[x]] = 1;
        EXPECT_EQ(q.projection[x] == 0, n.contains(x));
        for (Elem y = 0; y < m.size(); ++y) ASSERT_EQ(q.projection[m.add(x, y)], mq.add(q.projection[x], q.projection[y]));
        for (Elem r = 0; r < m.ring().size(); ++r) ASSERT_EQ(q.projection[m.act(r, x)], mq.act(r, q.projection[x]));
      }
      EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), static_cast<long>(mq.size()));
      for (Elem c = 0; c < mq.size(); ++c) {
        EXPECT_EQ(q.projection[q.lift[c]], c);
        for (Elem y : n.elements) EXPECT_LE(q.lift[c], m.add(q.lift[c], y)) << "cosets are named by their least member";
      }
    }
  }
}

TEST(HomImageSum, Examples) {
  ModulePtr v = sum_over(2, 2, 2);
  const Submodule line = submodule_generated(*v, {v->element({1, 0})});
  EXPECT_EQ(hom_image_sum(*v, line), line);
  std::size_t homs = for_each_hom_into(*v, line, [](const Homomorphism&) {});
  EXPECT_EQ(homs, 4u);
  EXPECT_EQ(oracle::of(hom_image_sum(*v, zero_submodule(*v))), (Set{0}));
  ModulePtr z4 = regular(4);
  EXPECT_EQ(hom_image_sum(*z4, whole_module(*z4)), whole_module(*z4));
}

TEST(HomImageSum, AgreesWithOracle) {
  for (const auto& f : small_modules()) {
    const Module& m = *f.module;
    for (const auto& n : enumerate_submodules(m))
      EXPECT_EQ(oracle::of(hom_image_sum(m, n)), oracle::hom_image_sum(m, oracle::of(n))) << f.name;
  }
}

TEST(HomImageSum, CapIsEnforced) {
  Caps caps = default_caps();
  caps.hom_cap = 2;
  ModulePtr v = sum_over(2, 2, 2);
  EXPECT_THROW(hom_image_sum(*v, whole_module(*v), caps), SizeExceeded);
}

TEST(Caps, EnumerationCap) {
  Caps caps = default_caps();
  caps.enumeration_cap = 3;
  EXPECT_THROW(enumerate_submodules(*sum_over(2, 2, 2), caps), SizeExceeded);
}
