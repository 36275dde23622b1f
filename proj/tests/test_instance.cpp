#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finmod/instance.hpp"

using namespace finmod;

TEST_CASE("parse a Z_n document") {
  std::string text = R"({
    "ring": {"kind": "zn", "n": 12},
    "module": {"orders": [2, 6], "action": "natural"},
    "submodules": {"N": [[1, 0]], "K": [7]},
    "mcs": {"seeds": [5]}
  })";
  InstanceDoc doc = parse_instance(text);
  CHECK(doc.ring->order == 12);
  CHECK(doc.module->size == 12);
  REQUIRE(doc.submodules.size() == 2);
  CHECK(doc.submodules[0].first == "K");  // sorted by name
  CHECK(doc.submodules[1].first == "N");
  // coordinate generator [1,0] is flat index 6 in the (2,6) mixed radix
  CHECK(doc.submodules[1].second.members.test(6));
  CHECK(doc.mcs.members.indices() == std::vector<int>{1, 5});  // 5*5 = 1
}

TEST_CASE("round trip: emit then parse is stable") {
  std::string text = R"({
    "mcs": {"seeds": [3]},
    "ring": {"kind": "zn", "n": 4},
    "module": {"orders": [4], "action": "natural"},
    "submodules": {"N": [2]}
  })";
  InstanceDoc doc = parse_instance(text);
  std::string out = emit_instance(doc);
  // canonical key order regardless of input order
  CHECK(out.find("\"ring\"") < out.find("\"module\""));
  CHECK(out.find("\"module\"") < out.find("\"submodules\""));
  CHECK(out.find("\"submodules\"") < out.find("\"mcs\""));
  InstanceDoc again = parse_instance(out);
  CHECK(emit_instance(again) == out);
  CHECK(again.mcs.members == doc.mcs.members);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_instance("{\n  \"ring\": [,]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("syntax error at line 2") != std::string::npos);
  }
}

TEST_CASE("semantic errors carry a document path") {
  auto expect_path = [](const std::string& text, const std::string& needle) {
    try {
      parse_instance(text);
      FAIL_CHECK("expected ParseError for " << needle);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_path(R"({"ring": {"kind": "frobnicate"}, "module": {}, "mcs": {}})",
              "$.ring.kind");
  expect_path(R"({"ring": {"kind": "zn", "n": 4},
                  "module": {"orders": [5], "action": "natural"}, "mcs": {}})",
              "$.module");
  expect_path(R"({"ring": {"kind": "zn", "n": 4},
                  "module": {"orders": [4], "action": "natural"},
                  "submodules": {"N": [9]}, "mcs": {"seeds": []}})",
              "$.submodules.N[0]");
  // nilpotent seed: the closure reaches 0
  expect_path(R"({"ring": {"kind": "zn", "n": 4},
                  "module": {"orders": [4], "action": "natural"},
                  "mcs": {"seeds": [2]}})",
              "$.mcs");
  expect_path(R"({"ring": {"kind": "zn", "n": 4},
                  "module": {"orders": [4], "action": "natural"},
                  "mcs": "residues"})",
              "$.mcs");
}

TEST_CASE("integer-base rings and residues") {
  std::string text = R"({
    "ring": {"kind": "integer_base", "exponent": 12, "excluded_primes": [2, 3]},
    "module": {"orders": [12], "action": "natural"},
    "mcs": "residues"
  })";
  InstanceDoc doc = parse_instance(text);
  REQUIRE(doc.int_base.has_value());
  CHECK(doc.int_base->exponent == 12);
  CHECK(doc.mcs.members.indices() == std::vector<int>{1, 5, 7, 11});
}

TEST_CASE("product ring with factor modules and factor mcs") {
  std::string text = R"({
    "ring": {"kind": "product",
             "factors": [{"kind": "zn", "n": 9}, {"kind": "zn", "n": 4}]},
    "module": {"factors": [{"orders": [9], "action": "natural"},
                           {"orders": [4], "action": "natural"}]},
    "mcs": {"factors": [{"seeds": [4]}, {"seeds": [3]}]}
  })";
  InstanceDoc doc = parse_instance(text);
  CHECK(doc.ring->order == 36);
  CHECK(doc.module->size == 36);
  REQUIRE(doc.factor_modules.size() == 2);
  REQUIRE(doc.factor_mcs.size() == 2);
  CHECK(doc.factor_mcs[0].members.indices() == std::vector<int>{1, 4, 7});
  CHECK(doc.factor_mcs[1].members.indices() == std::vector<int>{1, 3});
  CHECK(doc.mcs.size() == 6);
  Instance inst = doc_to_instance(doc, "p");
  CHECK(inst.factor_modules.size() == 2);
}

TEST_CASE("explicit action rows") {
  // Z_2 acting on Z_2 x Z_2 with 1 swapping nothing (identity action rows)
  std::string text = R"({
    "ring": {"kind": "zn", "n": 2},
    "module": {"orders": [2, 2], "action": [[0, 0], [2, 1]]},
    "mcs": {"seeds": []}
  })";
  InstanceDoc doc = parse_instance(text);
  CHECK(doc.module->size == 4);
  // generators are (1,0) = index 2 and (0,1) = index 1; row for ring 1
  // maps them to themselves
  CHECK(doc.module->act(1, 2) == 2);
  CHECK(doc.module->act(1, 1) == 1);
  CHECK(doc.module->act(0, 3) == 0);
}

TEST_CASE("gen is deterministic and parseable") {
  InstanceDoc a = gen_instance(7, 64);
  InstanceDoc b = gen_instance(7, 64);
  CHECK(emit_instance(a) == emit_instance(b));
  CHECK(emit_instance(a) != emit_instance(gen_instance(8, 64)));
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    InstanceDoc d = gen_instance(seed, 64);
    InstanceDoc back = parse_instance(emit_instance(d));
    CHECK(back.module->size == d.module->size);
    CHECK(back.mcs.members == d.mcs.members);
    CHECK(back.module->size <= 64);
  }
}
