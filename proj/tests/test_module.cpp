#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finmod/module.hpp"

using namespace finmod;

TEST_CASE("natural module and submodule generation") {
  Ring r4 = make_zn(4);
  ModulePtr m = make_natural_module(r4, {4});
  CHECK(m->size == 4);
  CHECK(m->act(3, 3) == 1);

  Submodule n = submodule_generate(m, {2});
  CHECK(n.members.indices() == std::vector<int>{0, 2});
  CHECK(n.size() == 2);
  CHECK_FALSE(n.is_zero());
  CHECK_FALSE(n.is_full());
  CHECK(full_submodule(m).is_full());
  CHECK(zero_submodule(m).is_zero());
}

TEST_CASE("lattice sizes") {
  Ring r4 = make_zn(4);
  CHECK(submodule_lattice(*make_natural_module(r4, {4})).size() == 3);

  Ring r2 = make_zn(2);
  CHECK(submodule_lattice(*make_natural_module(r2, {2, 2})).size() == 5);

  Ring r36 = make_zn(36);
  CHECK(submodule_lattice(*make_natural_module(r36, {4, 9})).size() == 9);
}

TEST_CASE("completely irreducible submodules of Z_4") {
  Ring r4 = make_zn(4);
  ModulePtr m = make_natural_module(r4, {4});
  auto ci = completely_irreducible_list(m);
  REQUIRE(ci.size() == 2);
  CHECK(ci[0].members.indices() == std::vector<int>{0});
  CHECK(ci[1].members.indices() == std::vector<int>{0, 2});
}

TEST_CASE("colon and annihilator") {
  Ring r12 = make_zn(12);
  ModulePtr m = make_natural_module(r12, {12});
  Submodule n = submodule_generate(m, {4});  // {0,4,8}
  Ideal ann = annihilator(n);
  CHECK(ann.members.indices() == std::vector<int>{0, 3, 6, 9});
  Ideal col = colon_ideal(n, full_submodule(m));  // (N :_R M)
  CHECK(col.members.indices() == std::vector<int>{0, 4, 8});
  Submodule back = colon_into(n, 2);  // {x : 2x in N}
  CHECK(back.members.indices() == std::vector<int>{0, 2, 4, 6, 8, 10});
  // (N :_M Ann(N)): 3m in N forces m in N here
  Submodule in = colon_into(n, ann);
  CHECK(in.members == n.members);
}

TEST_CASE("prime and second lists, rad and sec") {
  Ring r4 = make_zn(4);
  ModulePtr m = make_natural_module(r4, {4});
  auto primes = prime_submodules(m);
  REQUIRE(primes.size() == 1);
  CHECK(primes[0].members.indices() == std::vector<int>{0, 2});
  auto seconds = second_submodules(m);
  REQUIRE(seconds.size() == 1);
  CHECK(seconds[0].members.indices() == std::vector<int>{0, 2});

  CHECK(rad(zero_submodule(m)).members.indices() == std::vector<int>{0, 2});
  CHECK(sec(full_submodule(m)).members.indices() == std::vector<int>{0, 2});
}

TEST_CASE("quotient module") {
  Ring r4 = make_zn(4);
  ModulePtr m = make_natural_module(r4, {4});
  Submodule n = submodule_generate(m, {2});
  QuotientModule q = quotient_module(m, n);
  CHECK(q.module->size == 2);
  CHECK(q.proj[0] == q.proj[2]);
  CHECK(q.proj[1] == q.proj[3]);
  CHECK(q.proj[0] != q.proj[1]);
}

TEST_CASE("direct sum, powers and maps") {
  Ring r6 = make_zn(6);
  ModulePtr a = make_natural_module(r6, {2});
  ModulePtr b = make_natural_module(r6, {3});
  ModulePtr s = direct_sum(a, b);
  CHECK(s->size == 6);
  CHECK(s->sum_sizes == std::vector<int>{2, 3});

  ModuleMap inc = inclusion_map({a, b}, s, 1);
  CHECK(inc.injective);
  Submodule img = map_image(inc, full_submodule(b));
  CHECK(img.size() == 3);
  Submodule pre = map_preimage(inc, img);
  CHECK(pre.is_full());

  ModulePtr m2 = free_tensor(a, 2);
  CHECK(m2->size == 4);
  Submodule p = power_submodule(zero_submodule(a), m2, 2);
  CHECK(p.is_zero());
  CHECK(free_tensor(a, 1) == a);
}

TEST_CASE("idealization") {
  Ring r4 = make_zn(4);
  ModulePtr z2 = make_natural_module(r4, {2});
  Ring ideal = make_idealization(r4, z2);
  CHECK(ideal->order == 8);
  CHECK(ideal->one == 2);  // (1,0)
  // (0,1)^2 = (0, 0*1 + 0*1) = 0: the module part squares to zero
  CHECK(ideal->mul(1, 1) == 0);
  CHECK(ideal->name(3) == "(1,1)");

  MulClosedSet base = mcs_closure(r4, {3});
  MulClosedSet lifted = idealization_mcs(ideal, base, false);
  CHECK(lifted.members.indices() == std::vector<int>{2, 6});
  MulClosedSet whole = idealization_mcs(ideal, base, true);
  CHECK(whole.size() == 4);
}

TEST_CASE("ideal lattice is cached on the ring") {
  Ring r8 = make_zn(8);
  const auto& a = ideal_lattice(r8);
  CHECK(a.size() == 4);  // 0, 4Z, 2Z, Z
  const auto& b = ideal_lattice(r8);
  CHECK(&a == &b);
}
