#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finmod/localize.hpp"

using namespace finmod;

TEST_CASE("mcs closure") {
  Ring r12 = make_zn(12);
  MulClosedSet s = mcs_closure(r12, {3});
  CHECK(s.members.indices() == std::vector<int>{1, 3, 9});
  CHECK(s.contains(9));
  CHECK_FALSE(s.contains_zero());
  CHECK_THROWS_AS(mcs_closure(r12, {6}), InvalidMCS);  // 6*6 = 0
  CHECK_THROWS_AS(mcs_closure(r12, {12}), InvalidMCS);

  Bitset bad(12);
  bad.set(1);
  bad.set(2);
  CHECK_THROWS_AS(mcs_from_bitset(r12, bad), InvalidMCS);  // 4 missing
}

TEST_CASE("integer-base residues") {
  IntegerBaseReduction red = integer_base_reduce(IntegerBaseDescriptor{12, {2, 3}});
  CHECK(red.mcs.members.indices() == std::vector<int>{1, 5, 7, 11});
  CHECK(red.generator_meets_S(5));
  CHECK_FALSE(red.generator_meets_S(8));
  CHECK_FALSE(red.generator_meets_S(0));

  // no excluded prime divides the exponent: the residue set contains 0
  IntegerBaseReduction all = integer_base_reduce(IntegerBaseDescriptor{4, {}});
  CHECK(all.mcs.contains_zero());
  CHECK(all.mcs.size() == 4);

  CHECK_THROWS_AS(integer_base_reduce(IntegerBaseDescriptor{1, {}}), InvalidMCS);
  CHECK_THROWS_AS(integer_base_reduce(IntegerBaseDescriptor{4, {4}}), InvalidMCS);
}

TEST_CASE("ring localization and saturation") {
  Ring r12 = make_zn(12);
  MulClosedSet s = mcs_closure(r12, {3});  // {1,3,9}
  RingLocalization loc = localize_ring(r12, s);
  // inverting 3 kills the 3-part: S^-1 Z_12 = Z_4
  CHECK(loc.ring->order == 4);
  CHECK(loc.ring->characteristic() == 4);

  MulClosedSet sat = saturate(s);
  CHECK(sat.members.indices() == std::vector<int>{1, 3, 5, 7, 9, 11});
  // saturation is idempotent
  CHECK(saturate(sat).members == sat.members);

  IntegerBaseReduction zero = integer_base_reduce(IntegerBaseDescriptor{4, {}});
  CHECK_THROWS_AS(localize_ring(zero.ring, MulClosedSet{zero.ring, zero.mcs.members}),
                  InvalidMCS);
}

TEST_CASE("fast path matches the fraction oracle") {
  struct Case {
    int n;
    std::vector<int> orders;
    std::vector<int> seeds;
  };
  std::vector<Case> cases = {
      {12, {12}, {3}}, {12, {2, 6}, {3}}, {12, {12}, {5}}, {8, {8}, {3}},
      {6, {6}, {2}},   {6, {2, 6}, {3}},  {16, {4, 4}, {3}}, {9, {9}, {4}},
      {36, {4, 9}, {5}}, {36, {4, 9}, {9}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.n);
    Ring r = make_zn(c.n);
    ModulePtr m = make_natural_module(r, c.orders);
    MulClosedSet s = mcs_closure(r, c.seeds);
    LocalizedModule fast = localize_module(m, s);
    LocalizedModule oracle = localization_fraction_oracle(m, s);
    CHECK(fast.ring_loc->order == oracle.ring_loc->order);
    REQUIRE(fast.carrier->size == oracle.carrier->size);
    CHECK(modules_isomorphic(*fast.carrier, *oracle.carrier));
    // every s acts bijectively on the localized module
    for (int sv : s.elements()) {
      int ls = fast.ring_localization.map[sv];
      Bitset seen(fast.carrier->size);
      for (int x = 0; x < fast.carrier->size; ++x) seen.set(fast.carrier->act(ls, x));
      CHECK(seen.count() == static_cast<std::size_t>(fast.carrier->size));
    }
    // the canonical map commutes with the ring map on a sample
    for (int x = 0; x < m->size; ++x)
      CHECK(fast.canonical_map[m->act(2 % c.n, x)] ==
            fast.carrier->act(fast.ring_localization.map[2 % c.n],
                              fast.canonical_map[x]));
  }
}

TEST_CASE("localizing at units is the identity") {
  Ring r9 = make_zn(9);
  ModulePtr m = make_natural_module(r9, {9});
  MulClosedSet s = mcs_closure(r9, {2});  // all units
  LocalizedModule lm = localize_module(m, s);
  CHECK(lm.carrier->size == 9);
  CHECK(lm.ring_loc->order == 9);
  CHECK(modules_isomorphic(*lm.carrier, *localization_fraction_oracle(m, s).carrier));
}
