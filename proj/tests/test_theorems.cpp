#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finmod/theorems.hpp"

using namespace finmod;

TEST_CASE("registry has 25 checks with unique ids") {
  auto checks = builtin_checks();
  CHECK(checks.size() == 25);
  std::set<std::string> ids;
  for (const auto& c : checks) {
    CHECK(!c.title.empty());
    CHECK(ids.insert(c.id).second);
  }
}

TEST_CASE("smoke family: no refutations, every check fires") {
  auto checks = builtin_checks();
  auto fam = build_smoke_family();
  auto outcomes = run_registry(checks, fam);
  REQUIRE(outcomes.size() == checks.size());
  for (const auto& o : outcomes) {
    CAPTURE(o.id);
    CHECK(o.failures.empty());
    CHECK_FALSE(o.untested());
    CHECK(o.tested == static_cast<int>(fam.size()));
  }
}

TEST_CASE("the documented non-strong claim is surfaced as a discrepancy") {
  auto checks = builtin_checks();
  auto fam = build_smoke_family();
  auto outcomes = run_registry(checks, fam);
  int discrepancies = 0;
  for (const auto& o : outcomes)
    for (const auto& [inst, detail] : o.discrepancies) {
      ++discrepancies;
      CHECK(o.id == "strong-vs-s");
      CHECK(inst == "Z4/Z4/S{1,3}");
      CHECK(std::string(o.status()) == "paper-discrepancy");
    }
  CHECK(discrepancies == 1);
}

TEST_CASE("single-check verify") {
  auto checks = builtin_checks();
  auto fam = build_smoke_family();
  for (const auto& c : checks)
    if (c.id == "four-equivalences") {
      VerificationOutcome o = verify(c, fam);
      CHECK(std::string(o.status()) == "pass");
      CHECK(o.asserted > 0);
    }
}

TEST_CASE("a refutation is reported as refuted") {
  // deliberately broken check: claims every nonzero submodule is S-second
  TheoremCheck bogus{"bogus", "always-false claim", [](Env& e) {
    detail::Tally t;
    for (const Submodule& n : e.subs()) {
      if (n.is_zero()) continue;
      const CheckReport& r = e.s_second(n.members);
      if (r.verdict == Verdict::PreconditionFailed) continue;
      if (r.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members));
    }
    return t.done();
  }};
  auto fam = build_smoke_family();
  VerificationOutcome o = verify(bogus, fam);
  CHECK(o.refuted());
  CHECK(std::string(o.status()) == "refuted");
  CHECK(!o.failures.empty());
}

TEST_CASE("default family shape") {
  auto fam = build_default_family();
  CHECK(fam.size() > 500);
  int flagged = 0;
  std::set<std::string> names;
  for (const auto& inst : fam) {
    CHECK(names.insert(inst.name).second);  // unique labels
    if (inst.doc_claims_not_strong) ++flagged;
  }
  CHECK(flagged == 1);
  int products = 0;
  for (const auto& inst : fam)
    if (!inst.factor_modules.empty()) ++products;
  CHECK(products == 4);
}
