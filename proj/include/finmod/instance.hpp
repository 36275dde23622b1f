#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "finmod/localize.hpp"
#include "finmod/theorems.hpp"

namespace finmod {

using json = nlohmann::ordered_json;

// A parsed instance document: the constructed objects plus the canonical
// form of the document (normalized field order, flat generator indices).
struct InstanceDoc {
  Ring ring;
  ModulePtr module;
  std::vector<std::pair<std::string, Submodule>> submodules;  // sorted by name
  MulClosedSet mcs;
  std::optional<IntegerBaseDescriptor> int_base;
  std::vector<ModulePtr> factor_modules;  // product rings only
  std::vector<MulClosedSet> factor_mcs;
  json canonical;
};

namespace detail {

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

inline int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  return j.get<int>();
}

inline std::vector<int> as_int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// Carrier = product of cyclic groups; action given by the image of each
// generator under each ring element, extended additively.
inline ModulePtr make_table_module(Ring ring, const std::vector<int>& orders,
                                   const std::vector<std::vector<int>>& rows,
                                   const std::string& path) {
  if (orders.empty()) throw ParseError(path + ": empty orders");
  long long sz = 1;
  for (int d : orders) {
    if (d < 1) throw ParseError(path + ": orders must be positive");
    sz *= d;
    if (sz > kDefaultOrderCap) throw ParseError(path + ": module order cap exceeded");
  }
  int n = static_cast<int>(sz);
  if (static_cast<int>(rows.size()) != ring->order)
    throw ParseError(path + ": need one action row per ring element");
  auto m = std::make_shared<FiniteModule>();
  m->ring = ring;
  m->size = n;
  m->cyclic_orders = orders;
  m->add_table.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> dec(n);
  for (int i = 0; i < n; ++i) dec[i] = mixed_radix_decode(orders, i);
  std::vector<int> tmp(orders.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < orders.size(); ++k)
        tmp[k] = (dec[a][k] + dec[b][k]) % orders[k];
      m->add_table[a * n + b] = mixed_radix_encode(orders, tmp);
    }
  m->act_table.resize(static_cast<std::size_t>(ring->order) * n);
  for (int r = 0; r < ring->order; ++r) {
    const auto& row = rows[r];
    if (static_cast<int>(row.size()) != static_cast<int>(orders.size()))
      throw ParseError(path + ": action row " + std::to_string(r) +
                       " must list one image per generator");
    for (int g : row)
      if (g < 0 || g >= n)
        throw ParseError(path + ": action image out of range");
    for (int x = 0; x < n; ++x) {
      int acc = 0;
      for (std::size_t k = 0; k < orders.size(); ++k)
        for (int c = 0; c < dec[x][k]; ++c) acc = m->add_table[acc * n + row[k]];
      m->act_table[r * n + x] = acc;
    }
  }
  m->names.resize(n);
  for (int i = 0; i < n; ++i) {
    if (orders.size() == 1) {
      m->names[i] = std::to_string(i);
    } else {
      std::string s = "(";
      for (std::size_t k = 0; k < orders.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(dec[i][k]);
      }
      m->names[i] = s + ")";
    }
  }
  fill_module_neg(*m);
  validate_module(*m);
  return m;
}

}  // namespace detail

inline Ring parse_ring_doc(const json& j, const std::string& path,
                           std::optional<IntegerBaseDescriptor>* int_base);

inline ModulePtr parse_module_doc(const json& j, Ring ring, const std::string& path,
                                  std::vector<ModulePtr>* factor_out);

inline Ring parse_ring_doc(const json& j, const std::string& path,
                           std::optional<IntegerBaseDescriptor>* int_base) {
  const json& kind = detail::field(j, "kind", path);
  if (!kind.is_string()) throw ParseError(path + ".kind: expected a string");
  std::string k = kind.get<std::string>();
  try {
    if (k == "zn") return make_zn(detail::as_int(detail::field(j, "n", path), path + ".n"));
    if (k == "integer_base") {
      IntegerBaseDescriptor d;
      d.exponent = detail::as_int(detail::field(j, "exponent", path), path + ".exponent");
      d.excluded_primes = detail::as_int_list(
          detail::field(j, "excluded_primes", path), path + ".excluded_primes");
      IntegerBaseReduction red = integer_base_reduce(d);
      if (int_base) *int_base = d;
      return red.ring;
    }
    if (k == "product") {
      const json& fs = detail::field(j, "factors", path);
      if (!fs.is_array() || fs.empty())
        throw ParseError(path + ".factors: expected a nonempty array");
      std::vector<Ring> factors;
      for (std::size_t i = 0; i < fs.size(); ++i)
        factors.push_back(
            parse_ring_doc(fs[i], path + ".factors[" + std::to_string(i) + "]", nullptr));
      return make_product(factors);
    }
    if (k == "idealization") {
      Ring base = parse_ring_doc(detail::field(j, "base", path), path + ".base", nullptr);
      ModulePtr mod = parse_module_doc(detail::field(j, "module", path), base,
                                       path + ".module", nullptr);
      return make_idealization(base, mod);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ".kind: unknown ring kind '" + k + "'");
}

inline ModulePtr parse_module_doc(const json& j, Ring ring, const std::string& path,
                                  std::vector<ModulePtr>* factor_out) {
  try {
    if (j.is_object() && j.contains("factors")) {
      const json& fs = j["factors"];
      if (ring->kind != RingKind::Product)
        throw ParseError(path + ": factor modules require a product ring");
      if (!fs.is_array() || fs.size() != ring->factors.size())
        throw ParseError(path + ".factors: need one module per ring factor");
      std::vector<ModulePtr> parts;
      for (std::size_t i = 0; i < fs.size(); ++i)
        parts.push_back(parse_module_doc(fs[i], ring->factors[i],
                                         path + ".factors[" + std::to_string(i) + "]",
                                         nullptr));
      if (factor_out) *factor_out = parts;
      return product_module(parts, ring);
    }
    const json& action = detail::field(j, "action", path);
    if (action.is_string() && action.get<std::string>() == "regular") {
      return regular_module(ring);
    }
    std::vector<int> orders = detail::as_int_list(detail::field(j, "orders", path),
                                                  path + ".orders");
    if (action.is_string() && action.get<std::string>() == "natural") {
      if (ring->kind != RingKind::Zn)
        throw ParseError(path + ".action: 'natural' requires a Z_n ring");
      return make_natural_module(ring, orders);
    }
    if (action.is_array()) {
      std::vector<std::vector<int>> rows;
      for (std::size_t i = 0; i < action.size(); ++i)
        rows.push_back(detail::as_int_list(action[i],
                                           path + ".action[" + std::to_string(i) + "]"));
      return detail::make_table_module(ring, orders, rows, path);
    }
    throw ParseError(path + ".action: expected 'natural', 'regular', or rows");
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline InstanceDoc parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte ? e.byte - 1 : 0);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("$: expected a JSON object");

  InstanceDoc doc;
  doc.ring = parse_ring_doc(detail::field(j, "ring", "$"), "$.ring", &doc.int_base);
  doc.module = parse_module_doc(detail::field(j, "module", "$"), doc.ring, "$.module",
                                &doc.factor_modules);

  // mcs
  const json& mj = detail::field(j, "mcs", "$");
  try {
    if (mj.is_string() && mj.get<std::string>() == "residues") {
      if (!doc.int_base)
        throw ParseError("$.mcs: 'residues' requires an integer_base ring");
      IntegerBaseReduction red = integer_base_reduce(*doc.int_base);
      doc.mcs = MulClosedSet{doc.ring, red.mcs.members};
    } else if (mj.is_object() && mj.contains("factors")) {
      if (doc.ring->kind != RingKind::Product)
        throw ParseError("$.mcs.factors: requires a product ring");
      const json& fs = mj["factors"];
      if (!fs.is_array() || fs.size() != doc.ring->factors.size())
        throw ParseError("$.mcs.factors: need one entry per ring factor");
      std::vector<MulClosedSet> parts;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        std::string p = "$.mcs.factors[" + std::to_string(i) + "]";
        std::vector<int> seeds =
            detail::as_int_list(detail::field(fs[i], "seeds", p), p + ".seeds");
        parts.push_back(mcs_closure(doc.ring->factors[i], seeds));
      }
      doc.factor_mcs = parts;
      doc.mcs = product_mcs(doc.ring, parts);
    } else if (mj.is_object() && mj.contains("seeds")) {
      doc.mcs = mcs_closure(doc.ring,
                            detail::as_int_list(mj["seeds"], "$.mcs.seeds"));
    } else {
      throw ParseError("$.mcs: expected {\"seeds\": [...]}, factor seeds, or 'residues'");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("$.mcs: ") + e.what());
  }

  // submodules: name -> generator list; generators are flat indices or
  // coordinate arrays over the module's summand sizes
  if (j.contains("submodules")) {
    const json& sj = j["submodules"];
    if (!sj.is_object()) throw ParseError("$.submodules: expected an object");
    std::map<std::string, Submodule> named;
    for (auto it = sj.begin(); it != sj.end(); ++it) {
      std::string p = "$.submodules." + it.key();
      if (!it.value().is_array()) throw ParseError(p + ": expected a generator list");
      std::vector<int> gens;
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        const json& g = it.value()[i];
        std::string gp = p + "[" + std::to_string(i) + "]";
        int idx;
        if (g.is_array()) {
          const std::vector<int>& radii = doc.module->sum_sizes.empty()
                                              ? doc.module->cyclic_orders
                                              : doc.module->sum_sizes;
          if (radii.size() < 2)
            throw ParseError(gp + ": coordinate generators need a multi-factor module");
          std::vector<int> c = detail::as_int_list(g, gp);
          if (c.size() != radii.size())
            throw ParseError(gp + ": wrong coordinate count");
          for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] < 0 || c[k] >= radii[k])
              throw ParseError(gp + ": coordinate out of range");
          idx = detail::mixed_radix_encode(radii, c);
        } else {
          idx = detail::as_int(g, gp);
        }
        if (idx < 0 || idx >= doc.module->size)
          throw ParseError(gp + ": generator index out of range");
        gens.push_back(idx);
      }
      named.emplace(it.key(), submodule_generate(doc.module, gens));
    }
    doc.submodules.assign(named.begin(), named.end());
  }

  // canonical form
  json c;
  c["ring"] = j["ring"];
  c["module"] = j["module"];
  json subs = json::object();
  for (auto& [name, sub] : doc.submodules) subs[name] = sub.generators;
  c["submodules"] = subs;
  if (mj.is_string())
    c["mcs"] = "residues";
  else
    c["mcs"] = mj;
  doc.canonical = c;
  return doc;
}

inline std::string emit_instance(const InstanceDoc& doc) {
  return doc.canonical.dump(2) + "\n";
}

// Deterministic random instance generation.
inline InstanceDoc gen_instance(std::uint64_t seed, int max_order) {
  if (max_order < 2) max_order = 2;
  if (max_order > kDefaultOrderCap) max_order = kDefaultOrderCap;
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
  };

  json j;
  int n = pick(2, std::min(max_order, 16));
  j["ring"] = {{"kind", "zn"}, {"n", n}};

  // module: regular, or one/two cyclic factors with divisor orders
  std::vector<int> divisors;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  int style = pick(0, 2);
  if (style == 0) {
    j["module"] = {{"orders", {n}}, {"action", "natural"}};
  } else if (style == 1) {
    j["module"] = {{"orders", {divisors[pick(0, (int)divisors.size() - 1)]}},
                   {"action", "natural"}};
  } else {
    int d1 = divisors[pick(0, (int)divisors.size() - 1)];
    int d2 = divisors[pick(0, (int)divisors.size() - 1)];
    if (static_cast<long long>(d1) * d2 > max_order) d2 = divisors[0];
    if (static_cast<long long>(d1) * d2 > max_order) {
      j["module"] = {{"orders", {divisors[0]}}, {"action", "natural"}};
    } else {
      j["module"] = {{"orders", {d1, d2}}, {"action", "natural"}};
    }
  }

  // mcs: retry random seeds until the closure avoids 0
  Ring ring = make_zn(n);
  std::vector<int> seeds;
  for (int tries = 0; tries < 20; ++tries) {
    std::vector<int> cand;
    if (pick(0, 1)) cand.push_back(pick(1, n - 1));
    try {
      mcs_closure(ring, cand);
      seeds = cand;
      break;
    } catch (const InvalidMCS&) {
    }
  }
  j["mcs"] = {{"seeds", seeds}};

  // one or two named cyclic submodules
  InstanceDoc probe = parse_instance(j.dump());
  json subs = json::object();
  subs["N"] = std::vector<int>{pick(0, probe.module->size - 1)};
  if (pick(0, 1)) subs["K"] = std::vector<int>{pick(0, probe.module->size - 1)};
  j["submodules"] = subs;

  return parse_instance(j.dump());
}

// Instance-document to theorem-suite instance.
inline Instance doc_to_instance(const InstanceDoc& doc, const std::string& name) {
  return Instance{name, doc.module, doc.mcs, doc.factor_modules, doc.factor_mcs, false};
}

}  // namespace finmod
