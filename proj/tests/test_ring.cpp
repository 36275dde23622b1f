#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finmod/ring.hpp"

using namespace finmod;

TEST_CASE("Z_n tables") {
  Ring r = make_zn(6);
  CHECK(r->order == 6);
  CHECK(r->one == 1);
  CHECK(r->add(4, 5) == 3);
  CHECK(r->mul(4, 5) == 2);
  CHECK(r->neg(2) == 4);
  CHECK(r->sub(1, 4) == 3);
  CHECK(r->characteristic() == 6);
  CHECK(r->is_unit(5));
  CHECK_FALSE(r->is_unit(2));
  CHECK(r->pow(5, 2) == 1);
  CHECK(r->name(3) == "3");
  CHECK_THROWS_AS(make_zn(1), InvalidRing);
}

TEST_CASE("product ring") {
  Ring a = make_zn(2), b = make_zn(3);
  Ring p = make_product({a, b});
  CHECK(p->order == 6);
  CHECK(p->kind == RingKind::Product);
  // one = (1,1)
  CHECK(p->one == product_encode({a, b}, {1, 1}));
  int x = product_encode({a, b}, {1, 2});
  int y = product_encode({a, b}, {1, 1});
  auto c = product_decode({a, b}, p->mul(x, y));
  CHECK(c == std::vector<int>{1, 2});
  // Z_2 x Z_3 is isomorphic to Z_6: characteristic 6
  CHECK(p->characteristic() == 6);
  CHECK(p->name(x) == "(1,2)");
}

TEST_CASE("units and radical") {
  Ring r = make_zn(12);
  Bitset u = ring_units(*r);
  CHECK(u.indices() == std::vector<int>{1, 5, 7, 11});

  Bitset i4(12);  // ideal 4Z_12 = {0,4,8}
  i4.set(0);
  i4.set(4);
  i4.set(8);
  Ideal I = ideal_from_bitset(r, i4, {4});
  Ideal rad = ideal_radical(I);
  // rad(4Z_12) = 2Z_12
  CHECK(rad.members.indices() == std::vector<int>{0, 2, 4, 6, 8, 10});
}

TEST_CASE("invalid tables are rejected") {
  auto r = std::make_shared<FiniteRing>();
  r->order = 2;
  r->one = 1;
  r->add_table = {0, 1, 1, 1};  // not a group
  r->mul_table = {0, 0, 0, 1};
  r->names = {"0", "1"};
  detail::fill_neg_table(*r);
  CHECK_THROWS_AS(detail::validate_ring(*r), InvalidRing);
}
