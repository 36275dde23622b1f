// Command-line workbench for finite ring/module predicate checking.
//
// Commands:
//   check    evaluate predicates on the named submodules of a document
//   classify evaluate one predicate on every submodule of the lattice
//   verify   run the builtin theorem registry on a document or the
//            default instance family
//   gen      emit a deterministic random instance document

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "finmod/instance.hpp"

namespace {

using finmod::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw finmod::ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string set_string(const finmod::FiniteRing& R, const finmod::Bitset& b) {
  std::string s = "{";
  bool first = true;
  for (int i : b.indices()) {
    if (!first) s += ",";
    s += R.name(i);
    first = false;
  }
  return s + "}";
}

std::string members_string(const finmod::FiniteModule& M, const finmod::Bitset& b) {
  std::string s = "{";
  bool first = true;
  for (int i : b.indices()) {
    if (!first) s += ",";
    s += M.name(i);
    first = false;
  }
  return s + "}";
}

std::string report_suffix(const finmod::CheckReport& rep, const finmod::FiniteModule& M) {
  std::string line;
  if (rep.witness_s)
    line += " witness_s=" + M.ring->name(*rep.witness_s);
  if (rep.counterexample)
    line += " counterexample[" + rep.counterexample->describe(M) + "]";
  if (rep.verdict == finmod::Verdict::False)
    line += " violating_s=" + std::to_string(rep.violating_s);
  return line;
}

json report_json(const finmod::CheckReport& rep, const finmod::FiniteModule& M) {
  json r;
  r["predicate"] = rep.predicate;
  r["verdict"] = finmod::to_string(rep.verdict);
  r["algorithm"] =
      rep.algorithm == finmod::Algo::Definitional ? "definitional" : "characterization";
  if (rep.witness_s) r["witness_s"] = M.ring->name(*rep.witness_s);
  if (rep.counterexample) r["counterexample"] = rep.counterexample->describe(M);
  if (rep.verdict == finmod::Verdict::False) r["violating_s"] = rep.violating_s;
  return r;
}

struct Expect {
  bool enabled = false;
  bool value = false;
  bool mismatch = false;

  void observe(const finmod::CheckReport& rep) {
    if (!enabled) return;
    bool got = rep.verdict == finmod::Verdict::True;
    if (rep.verdict == finmod::Verdict::PreconditionFailed || got != value)
      mismatch = true;
  }
};

int cmd_check(const std::string& file, std::vector<std::string> predicates,
              const std::string& format, Expect& expect,
              const finmod::CheckOptions& opt) {
  finmod::InstanceDoc doc = finmod::parse_instance(read_input(file));
  std::vector<std::pair<std::string, finmod::Submodule>> targets = doc.submodules;
  if (targets.empty()) targets.emplace_back("M", finmod::full_submodule(doc.module));

  json out;
  out["command"] = "check";
  json results = json::array();
  std::ostringstream text;
  text << "command: check\n";
  text << "mcs: " << set_string(*doc.ring, doc.mcs.members) << "\n";
  for (auto& [name, sub] : targets)
    for (const std::string& pname : predicates) {
      finmod::PredicateFn fn = finmod::predicate_by_name(pname);
      finmod::CheckReport rep = fn(sub, doc.mcs, opt);
      expect.observe(rep);
      text << name << " " << pname << ": " << finmod::to_string(rep.verdict)
           << report_suffix(rep, *doc.module) << "\n";
      json r = report_json(rep, *doc.module);
      r["target"] = name;
      results.push_back(r);
    }
  out["results"] = results;

  if (format == "structured")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return expect.mismatch ? 1 : 0;
}

int cmd_classify(const std::string& file, const std::string& predicate,
                 const std::string& format, Expect& expect,
                 const finmod::CheckOptions& opt) {
  finmod::InstanceDoc doc = finmod::parse_instance(read_input(file));
  auto rows = finmod::classify(doc.module, doc.mcs, predicate, opt);

  json out;
  out["command"] = "classify";
  out["predicate"] = predicate;
  json results = json::array();
  std::ostringstream text;
  text << "command: classify\n";
  text << "predicate: " << predicate << "\n";
  for (auto& [sub, rep] : rows) {
    expect.observe(rep);
    text << members_string(*doc.module, sub.members) << ": "
         << finmod::to_string(rep.verdict) << report_suffix(rep, *doc.module) << "\n";
    json r = report_json(rep, *doc.module);
    r["members"] = members_string(*doc.module, sub.members);
    results.push_back(r);
  }
  out["results"] = results;

  if (format == "structured")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return expect.mismatch ? 1 : 0;
}

int cmd_verify(const std::string& file, const std::string& check_ids,
               const std::string& format, const finmod::CheckOptions& opt) {
  std::vector<finmod::Instance> family;
  if (file.empty()) {
    family = finmod::build_default_family();
  } else {
    finmod::InstanceDoc doc = finmod::parse_instance(read_input(file));
    family.push_back(finmod::doc_to_instance(doc, file));
  }

  std::vector<finmod::TheoremCheck> checks = finmod::builtin_checks();
  if (check_ids != "all") {
    std::vector<finmod::TheoremCheck> picked;
    std::stringstream ss(check_ids);
    std::string id;
    while (std::getline(ss, id, ',')) {
      bool found = false;
      for (auto& c : checks)
        if (c.id == id) {
          picked.push_back(c);
          found = true;
        }
      if (!found) throw finmod::ParseError("unknown check id: " + id);
    }
    checks = picked;
  }

  auto outcomes = finmod::run_registry(checks, family, opt);

  json out;
  out["command"] = "verify";
  json jchecks = json::array();
  std::ostringstream text;
  text << "command: verify\n";
  int refuted = 0;
  for (auto& o : outcomes) {
    if (o.refuted()) ++refuted;
    text << o.id << ": " << o.status() << " tested=" << o.tested
         << " asserted=" << o.asserted << " vacuous=" << o.vacuous
         << " skipped=" << o.skipped << "\n";
    for (auto& [inst, detail] : o.failures)
      text << "  failure " << inst << ": " << detail << "\n";
    for (auto& [inst, detail] : o.discrepancies)
      text << "  discrepancy " << inst << ": " << detail << "\n";
    json c;
    c["id"] = o.id;
    c["title"] = o.title;
    c["status"] = o.status();
    c["tested"] = o.tested;
    c["asserted"] = o.asserted;
    c["vacuous"] = o.vacuous;
    c["skipped"] = o.skipped;
    json fails = json::array();
    for (auto& [inst, detail] : o.failures)
      fails.push_back({{"instance", inst}, {"detail", detail}});
    c["failures"] = fails;
    json discs = json::array();
    for (auto& [inst, detail] : o.discrepancies)
      discs.push_back({{"instance", inst}, {"detail", detail}});
    c["discrepancies"] = discs;
    jchecks.push_back(c);
  }
  text << "total: checks=" << outcomes.size() << " refuted=" << refuted << "\n";
  out["checks"] = jchecks;
  out["refuted"] = refuted;

  if (format == "structured")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return refuted ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring/module predicate workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string expect_str;
  int max_lattice = finmod::kDefaultLatticeCap;
  int max_order = finmod::kDefaultOrderCap;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--expect", expect_str, "expected verdict")
      ->check(CLI::IsMember({"true", "false"}));
  app.add_option("--max-lattice", max_lattice, "submodule lattice cap");
  app.add_option("--max-order", max_order, "module order cap");

  std::string file;
  std::vector<std::string> predicates;
  auto* check = app.add_subcommand("check", "check predicates on named submodules");
  check->add_option("file", file, "instance document (or - for stdin)")->required();
  check->add_option("--predicate", predicates, "predicate names")
      ->required()
      ->delimiter(',');

  std::string cls_predicate;
  auto* classify = app.add_subcommand("classify", "classify the whole lattice");
  classify->add_option("file", file, "instance document (or - for stdin)")->required();
  classify->add_option("--predicate", cls_predicate, "predicate name")->required();

  std::string verify_file;
  std::string check_ids = "all";
  auto* verify = app.add_subcommand("verify", "run the theorem registry");
  verify->add_option("file", verify_file,
                     "instance document (defaults to the builtin family)");
  verify->add_option("--checks", check_ids, "comma-separated check ids or 'all'");

  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a random instance document");
  gen->add_option("--seed", seed, "random seed")->required();

  CLI11_PARSE(app, argc, argv);

  Expect expect;
  if (!expect_str.empty()) {
    expect.enabled = true;
    expect.value = expect_str == "true";
  }
  finmod::CheckOptions opt;
  opt.lattice_cap = max_lattice;

  try {
    if (gen->parsed()) {
      std::cout << finmod::emit_instance(finmod::gen_instance(seed, max_order));
      return 0;
    }
    if (check->parsed()) return cmd_check(file, predicates, format, expect, opt);
    if (classify->parsed()) return cmd_classify(file, cls_predicate, format, expect, opt);
    if (verify->parsed()) return cmd_verify(verify_file, check_ids, format, opt);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
