#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finmod/bitset.hpp"
#include "finmod/errors.hpp"
#include "finmod/mcs.hpp"
#include "finmod/ring.hpp"

namespace finmod {

inline constexpr int kDefaultOrderCap = 4096;
inline constexpr int kDefaultLatticeCap = 20000;

// Finite module over a FiniteRing. The carrier is index-based with
// explicit addition and scalar-action tables, so quotients, direct
// sums and localized carriers all share one representation. Index 0
// is the zero element.
struct FiniteModule {
  Ring ring;
  int size = 0;
  std::vector<int> add_table;   // size x size
  std::vector<int> neg_table;
  std::vector<int> act_table;   // ring order x size
  std::vector<int> cyclic_orders;  // set when the carrier is a product of cyclics
  std::vector<int> sum_sizes;      // set when built as a direct sum
  std::vector<std::string> names;

  mutable std::optional<std::vector<Bitset>> lattice_cache;

  int add(int a, int b) const { return add_table[a * size + b]; }
  int neg(int a) const { return neg_table[a]; }
  int act(int r, int m) const { return act_table[r * size + m]; }

  const std::string& name(int i) const { return names[i]; }
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

struct Submodule {
  ModulePtr module;
  Bitset members;
  std::vector<int> generators;

  bool contains(int x) const { return members.test(x); }
  std::size_t size() const { return members.count(); }
  bool is_zero() const { return members.count() == 1; }
  bool is_full() const {
    return members.count() == static_cast<std::size_t>(module->size);
  }
};

namespace detail {

inline void fill_module_neg(FiniteModule& m) {
  m.neg_table.assign(m.size, -1);
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      if (m.add(a, b) == 0) {
        m.neg_table[a] = b;
        break;
      }
}

inline void validate_module(const FiniteModule& m) {
  const FiniteRing& R = *m.ring;
  for (int x = 0; x < m.size; ++x) {
    if (m.add(x, 0) != x) throw InvalidModule("0 is not an additive identity");
    if (m.act(R.one, x) != x) throw InvalidModule("action not unital");
    if (m.neg_table[x] < 0) throw InvalidModule("missing additive inverse");
  }
  long long work = static_cast<long long>(R.order) * m.size * m.size;
  auto check = [&](int r, int x, int y) {
    if (m.add(x, y) != m.add(y, x)) throw InvalidModule("addition not commutative");
    if (m.act(r, m.add(x, y)) != m.add(m.act(r, x), m.act(r, y)))
      throw InvalidModule("action not additive in module argument");
  };
  auto check2 = [&](int r, int s, int x) {
    if (m.act(R.add(r, s), x) != m.add(m.act(r, x), m.act(s, x)))
      throw InvalidModule("action not additive in ring argument");
    if (m.act(R.mul(r, s), x) != m.act(r, m.act(s, x)))
      throw InvalidModule("action not associative with ring multiplication");
  };
  if (work <= 2'000'000) {
    for (int r = 0; r < R.order; ++r)
      for (int x = 0; x < m.size; ++x)
        for (int y = 0; y < m.size; ++y) check(r, x, y);
    for (int r = 0; r < R.order; ++r)
      for (int s = 0; s < R.order; ++s)
        for (int x = 0; x < m.size; ++x) check2(r, s, x);
  } else {
    std::mt19937 rng(0xabcd);
    std::uniform_int_distribution<int> dr(0, R.order - 1), dm(0, m.size - 1);
    for (int i = 0; i < 10000; ++i) {
      check(dr(rng), dm(rng), dm(rng));
      check2(dr(rng), dr(rng), dm(rng));
    }
  }
}

inline int mixed_radix_encode(const std::vector<int>& radii, const std::vector<int>& c) {
  int idx = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) idx = idx * radii[i] + c[i];
  return idx;
}

inline std::vector<int> mixed_radix_decode(const std::vector<int>& radii, int idx) {
  std::vector<int> c(radii.size());
  for (std::size_t i = radii.size(); i-- > 0;) {
    c[i] = idx % radii[i];
    idx /= radii[i];
  }
  return c;
}

}  // namespace detail

// Carrier Z_{d1} x ... x Z_{dr} with the ring residue acting by integer
// multiplication on each coordinate. Only meaningful over Z_n rings,
// and requires each d_i to divide the ring characteristic.
inline ModulePtr make_natural_module(Ring ring, const std::vector<int>& orders) {
  if (ring->kind != RingKind::Zn)
    throw InvalidModule("natural action requires a Z_n base ring");
  if (orders.empty()) throw InvalidModule("need at least one cyclic factor");
  long long sz = 1;
  for (int d : orders) {
    if (d < 1) throw InvalidModule("cyclic order must be >= 1");
    if (ring->zn_n % d != 0)
      throw InvalidModule("cyclic order must divide the ring characteristic");
    sz *= d;
    if (sz > kDefaultOrderCap) throw InvalidModule("module order cap exceeded");
  }
  auto m = std::make_shared<FiniteModule>();
  m->ring = ring;
  m->size = static_cast<int>(sz);
  m->cyclic_orders = orders;
  m->add_table.resize(static_cast<std::size_t>(m->size) * m->size);
  m->act_table.resize(static_cast<std::size_t>(ring->order) * m->size);
  std::vector<std::vector<int>> dec(m->size);
  for (int i = 0; i < m->size; ++i) dec[i] = detail::mixed_radix_decode(orders, i);
  std::vector<int> tmp(orders.size());
  for (int a = 0; a < m->size; ++a)
    for (int b = 0; b < m->size; ++b) {
      for (std::size_t k = 0; k < orders.size(); ++k)
        tmp[k] = (dec[a][k] + dec[b][k]) % orders[k];
      m->add_table[a * m->size + b] = detail::mixed_radix_encode(orders, tmp);
    }
  for (int r = 0; r < ring->order; ++r)
    for (int a = 0; a < m->size; ++a) {
      for (std::size_t k = 0; k < orders.size(); ++k)
        tmp[k] = (r * dec[a][k]) % orders[k];
      m->act_table[r * m->size + a] = detail::mixed_radix_encode(orders, tmp);
    }
  m->names.resize(m->size);
  for (int i = 0; i < m->size; ++i) {
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
  detail::fill_module_neg(*m);
  detail::validate_module(*m);
  return m;
}

// R as a module over itself.
inline ModulePtr regular_module(Ring ring) {
  auto m = std::make_shared<FiniteModule>();
  m->ring = ring;
  m->size = ring->order;
  m->add_table = ring->add_table;
  m->act_table = ring->mul_table;
  m->neg_table = ring->neg_table;
  m->names = ring->names;
  if (ring->kind == RingKind::Zn) m->cyclic_orders = {ring->zn_n};
  detail::validate_module(*m);
  return m;
}

inline ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw InvalidModule("direct_sum: empty part list");
  Ring ring = parts[0]->ring;
  long long sz = 1;
  std::vector<int> sizes;
  for (const auto& p : parts) {
    if (p->ring != ring) throw InvalidModule("direct_sum: mixed base rings");
    sizes.push_back(p->size);
    sz *= p->size;
    if (sz > kDefaultOrderCap) throw InvalidModule("module order cap exceeded");
  }
  auto m = std::make_shared<FiniteModule>();
  m->ring = ring;
  m->size = static_cast<int>(sz);
  m->sum_sizes = sizes;
  bool cyc = true;
  for (const auto& p : parts) cyc = cyc && !p->cyclic_orders.empty();
  if (cyc)
    for (const auto& p : parts)
      m->cyclic_orders.insert(m->cyclic_orders.end(), p->cyclic_orders.begin(),
                              p->cyclic_orders.end());
  m->add_table.resize(static_cast<std::size_t>(m->size) * m->size);
  m->act_table.resize(static_cast<std::size_t>(ring->order) * m->size);
  std::vector<std::vector<int>> dec(m->size);
  for (int i = 0; i < m->size; ++i) dec[i] = detail::mixed_radix_decode(sizes, i);
  std::vector<int> tmp(parts.size());
  for (int a = 0; a < m->size; ++a)
    for (int b = 0; b < m->size; ++b) {
      for (std::size_t k = 0; k < parts.size(); ++k)
        tmp[k] = parts[k]->add(dec[a][k], dec[b][k]);
      m->add_table[a * m->size + b] = detail::mixed_radix_encode(sizes, tmp);
    }
  for (int r = 0; r < ring->order; ++r)
    for (int a = 0; a < m->size; ++a) {
      for (std::size_t k = 0; k < parts.size(); ++k)
        tmp[k] = parts[k]->act(r, dec[a][k]);
      m->act_table[r * m->size + a] = detail::mixed_radix_encode(sizes, tmp);
    }
  m->names.resize(m->size);
  for (int i = 0; i < m->size; ++i) {
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) s += ",";
      s += parts[k]->name(dec[i][k]);
    }
    m->names[i] = s + ")";
  }
  detail::fill_module_neg(*m);
  detail::validate_module(*m);
  return m;
}

inline ModulePtr direct_sum(ModulePtr a, ModulePtr b) { return direct_sum({a, b}); }

// M^k with the diagonal action; stands in for F (x) M with F = R^k.
inline ModulePtr free_tensor(ModulePtr m, int k) {
  if (k < 1) throw InvalidModule("free_tensor: k >= 1 required");
  if (k == 1) return m;
  return direct_sum(std::vector<ModulePtr>(k, m));
}

// M_1 x ... x M_n over R_1 x ... x R_n, componentwise action.
inline ModulePtr product_module(const std::vector<ModulePtr>& parts, Ring prod_ring) {
  if (prod_ring->kind != RingKind::Product ||
      prod_ring->factors.size() != parts.size())
    throw InvalidModule("product_module: ring is not the matching product ring");
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k]->ring != prod_ring->factors[k])
      throw InvalidModule("product_module: factor ring mismatch");
  long long sz = 1;
  std::vector<int> sizes;
  for (const auto& p : parts) {
    sizes.push_back(p->size);
    sz *= p->size;
    if (sz > kDefaultOrderCap) throw InvalidModule("module order cap exceeded");
  }
  auto m = std::make_shared<FiniteModule>();
  m->ring = prod_ring;
  m->size = static_cast<int>(sz);
  m->sum_sizes = sizes;
  m->add_table.resize(static_cast<std::size_t>(m->size) * m->size);
  m->act_table.resize(static_cast<std::size_t>(prod_ring->order) * m->size);
  std::vector<std::vector<int>> dec(m->size);
  for (int i = 0; i < m->size; ++i) dec[i] = detail::mixed_radix_decode(sizes, i);
  std::vector<int> tmp(parts.size());
  for (int a = 0; a < m->size; ++a)
    for (int b = 0; b < m->size; ++b) {
      for (std::size_t k = 0; k < parts.size(); ++k)
        tmp[k] = parts[k]->add(dec[a][k], dec[b][k]);
      m->add_table[a * m->size + b] = detail::mixed_radix_encode(sizes, tmp);
    }
  for (int r = 0; r < prod_ring->order; ++r) {
    std::vector<int> rc = product_decode(prod_ring->factors, r);
    for (int a = 0; a < m->size; ++a) {
      for (std::size_t k = 0; k < parts.size(); ++k)
        tmp[k] = parts[k]->act(rc[k], dec[a][k]);
      m->act_table[r * m->size + a] = detail::mixed_radix_encode(sizes, tmp);
    }
  }
  m->names.resize(m->size);
  for (int i = 0; i < m->size; ++i) {
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) s += ",";
      s += parts[k]->name(dec[i][k]);
    }
    m->names[i] = s + ")";
  }
  detail::fill_module_neg(*m);
  detail::validate_module(*m);
  return m;
}

// Idealization R(+)M: pairs (a,m) with (a,m)(b,m') = (ab, am' + bm).
inline Ring make_idealization(Ring base, ModulePtr mod) {
  if (mod->ring != base) throw InvalidRing("make_idealization: module/ring mismatch");
  long long ord = static_cast<long long>(base->order) * mod->size;
  if (ord > kDefaultOrderCap) throw InvalidRing("make_idealization: order cap exceeded");
  int n = static_cast<int>(ord);
  int ms = mod->size;
  auto r = std::make_shared<FiniteRing>();
  r->order = n;
  r->kind = RingKind::Idealization;
  r->ideal_base = base;
  r->ideal_mod = mod;
  r->one = base->one * ms;  // (1, 0), pairs ordered by (a, m)
  r->add_table.resize(static_cast<std::size_t>(n) * n);
  r->mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int a = i / ms, m = i % ms;
    for (int j = 0; j < n; ++j) {
      int b = j / ms, m2 = j % ms;
      r->add_table[i * n + j] = base->add(a, b) * ms + mod->add(m, m2);
      r->mul_table[i * n + j] =
          base->mul(a, b) * ms + mod->add(mod->act(a, m2), mod->act(b, m));
    }
  }
  r->names.resize(n);
  for (int i = 0; i < n; ++i)
    r->names[i] = "(" + base->name(i / ms) + "," + mod->name(i % ms) + ")";
  detail::fill_neg_table(*r);
  detail::validate_ring(*r);
  return r;
}

// S(+)0 or S(+)M inside an idealization ring.
inline MulClosedSet idealization_mcs(Ring ideal_ring, const MulClosedSet& base_s,
                                     bool whole_module) {
  if (ideal_ring->kind != RingKind::Idealization)
    throw InvalidMCS("idealization_mcs: not an idealization ring");
  if (base_s.ring != ideal_ring->ideal_base)
    throw InvalidMCS("idealization_mcs: base ring mismatch");
  int ms = ideal_ring->ideal_mod->size;
  Bitset b(ideal_ring->order);
  for (int s : base_s.elements()) {
    if (whole_module)
      for (int m = 0; m < ms; ++m) b.set(s * ms + m);
    else
      b.set(s * ms);
  }
  return MulClosedSet{ideal_ring, b};
}

// ---- submodule machinery ----

inline Bitset additive_closure(const FiniteModule& M, std::vector<int> seeds) {
  Bitset out(M.size);
  out.set(0);
  std::vector<int> work;
  for (int g : seeds)
    if (!out.test(g)) {
      out.set(g);
      work.push_back(g);
    }
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int y : out.indices()) {
      int z = M.add(x, y);
      if (!out.test(z)) {
        out.set(z);
        work.push_back(z);
      }
    }
  }
  return out;
}

inline Submodule submodule_generate(ModulePtr M, const std::vector<int>& gens) {
  std::vector<int> seeds;
  for (int g : gens) {
    if (g < 0 || g >= M->size) throw InvalidModule("generator index out of range");
    for (int r = 0; r < M->ring->order; ++r) seeds.push_back(M->act(r, g));
  }
  return Submodule{M, additive_closure(*M, seeds), gens};
}

inline Submodule zero_submodule(ModulePtr M) {
  Bitset b(M->size);
  b.set(0);
  return Submodule{M, b, {}};
}

inline Submodule full_submodule(ModulePtr M) {
  Bitset b(M->size);
  for (int i = 0; i < M->size; ++i) b.set(i);
  return Submodule{M, b, {}};
}

inline Bitset cyclic_bits(const FiniteModule& M, int m) {
  Bitset b(M.size);
  for (int r = 0; r < M.ring->order; ++r) b.set(M.act(r, m));
  return b;
}

inline Bitset sub_sum_bits(const FiniteModule& M, const Bitset& a, const Bitset& b) {
  Bitset out(M.size);
  auto ia = a.indices(), ib = b.indices();
  for (int x : ia)
    for (int y : ib) out.set(M.add(x, y));
  return out;
}

inline Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  Bitset out = sub_sum_bits(*a.module, a.members, b.members);
  return Submodule{a.module, out, {}};
}

inline Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
  return Submodule{a.module, a.members & b.members, {}};
}

inline Bitset scale_elem_bits(const FiniteModule& M, int r, const Bitset& n) {
  Bitset out(M.size);
  for (int x : n.indices()) out.set(M.act(r, x));
  return out;
}

inline Submodule scale(int r, const Submodule& n) {
  return Submodule{n.module, scale_elem_bits(*n.module, r, n.members), {}};
}

inline Bitset scale_ideal_bits(const FiniteModule& M, const Bitset& ideal,
                               const Bitset& n) {
  std::vector<int> seeds;
  for (int i : ideal.indices())
    for (int x : n.indices()) seeds.push_back(M.act(i, x));
  return additive_closure(M, seeds);
}

inline Submodule scale(const Ideal& I, const Submodule& n) {
  return Submodule{n.module, scale_ideal_bits(*n.module, I.members, n.members), {}};
}

// (N :_M r) = {m : rm in N}
inline Bitset colon_into_bits(const FiniteModule& M, const Bitset& n, int r) {
  Bitset out(M.size);
  for (int m = 0; m < M.size; ++m)
    if (n.test(M.act(r, m))) out.set(m);
  return out;
}

inline Submodule colon_into(const Submodule& n, int r) {
  return Submodule{n.module, colon_into_bits(*n.module, n.members, r), {}};
}

// (N :_M I): every generator of I must send m into N.
inline Submodule colon_into(const Submodule& n, const Ideal& I) {
  const FiniteModule& M = *n.module;
  Bitset out(M.size);
  auto gens = I.generators.empty() ? I.members.indices() : I.generators;
  for (int m = 0; m < M.size; ++m) {
    bool ok = true;
    for (int g : gens)
      if (!n.members.test(M.act(g, m))) {
        ok = false;
        break;
      }
    if (ok) out.set(m);
  }
  return Submodule{n.module, out, {}};
}

// (K :_R N) = {r : rN subset of K}
inline Bitset colon_ideal_bits(const FiniteModule& M, const Bitset& k,
                               const Bitset& n) {
  const FiniteRing& R = *M.ring;
  Bitset out(R.order);
  auto in = n.indices();
  for (int r = 0; r < R.order; ++r) {
    bool ok = true;
    for (int x : in)
      if (!k.test(M.act(r, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(r);
  }
  return out;
}

inline Ideal colon_ideal(const Submodule& k, const Submodule& n) {
  Bitset b = colon_ideal_bits(*n.module, k.members, n.members);
  return Ideal{n.module->ring, b, b.indices()};
}

inline Ideal annihilator(const Submodule& n) {
  Bitset z(n.module->size);
  z.set(0);
  Bitset b = colon_ideal_bits(*n.module, z, n.members);
  return Ideal{n.module->ring, b, b.indices()};
}

// All submodules, by join-closure over cyclic submodules, sorted by
// (size, lexicographic bitset). Cached on the module.
inline const std::vector<Bitset>& submodule_lattice(const FiniteModule& M,
                                                    int cap = kDefaultLatticeCap) {
  if (M.lattice_cache) return *M.lattice_cache;
  std::set<Bitset> cyclics;
  for (int m = 0; m < M.size; ++m) cyclics.insert(cyclic_bits(M, m));
  std::set<Bitset> all(cyclics);
  {
    Bitset z(M.size);
    z.set(0);
    all.insert(z);
  }
  std::vector<Bitset> work(all.begin(), all.end());
  while (!work.empty()) {
    Bitset cur = work.back();
    work.pop_back();
    for (const Bitset& c : cyclics) {
      if (c.is_subset_of(cur)) continue;
      Bitset j = sub_sum_bits(M, cur, c);
      if (all.insert(j).second) {
        if (static_cast<int>(all.size()) > cap)
          throw CapExceeded("submodule lattice cap exceeded");
        work.push_back(j);
      }
    }
  }
  M.lattice_cache = std::vector<Bitset>(all.begin(), all.end());
  return *M.lattice_cache;
}

inline std::vector<Submodule> submodule_enumerate(ModulePtr M,
                                                  int cap = kDefaultLatticeCap) {
  std::vector<Submodule> out;
  for (const Bitset& b : submodule_lattice(*M, cap))
    out.push_back(Submodule{M, b, b.indices()});
  return out;
}

inline const std::vector<Bitset>& ideal_lattice(Ring ring, int cap = kDefaultLatticeCap) {
  if (!ring->ideal_cache) {
    ModulePtr reg = regular_module(ring);
    ring->ideal_cache = submodule_lattice(*reg, cap);
  }
  return *ring->ideal_cache;
}

inline std::vector<Ideal> ideal_enumerate(Ring ring, int cap = kDefaultLatticeCap) {
  std::vector<Ideal> out;
  for (const Bitset& b : ideal_lattice(ring, cap))
    out.push_back(Ideal{ring, b, b.indices()});
  return out;
}

// Proper N whose unique minimal strict over-intersection is strict:
// the finite-lattice criterion for complete irreducibility.
inline std::vector<Submodule> completely_irreducible_list(
    ModulePtr M, int cap = kDefaultLatticeCap) {
  const auto& lat = submodule_lattice(*M, cap);
  std::vector<Submodule> out;
  for (const Bitset& n : lat) {
    if (n.count() == static_cast<std::size_t>(M->size)) continue;  // proper only
    Bitset meet = full_submodule(M).members;
    for (const Bitset& l : lat)
      if (n.is_subset_of(l) && !(l == n)) meet &= l;
    if (!(meet == n)) out.push_back(Submodule{M, n, n.indices()});
  }
  return out;
}

inline bool is_prime_bits(const FiniteModule& M, const Bitset& n) {
  if (n.count() == static_cast<std::size_t>(M.size)) return false;
  Bitset full(M.size);
  for (int i = 0; i < M.size; ++i) full.set(i);
  Bitset colon = colon_ideal_bits(M, n, full);  // (N :_R M)
  for (int r = 0; r < M.ring->order; ++r) {
    if (colon.test(r)) continue;
    for (int m = 0; m < M.size; ++m)
      if (n.test(M.act(r, m)) && !n.test(m)) return false;
  }
  return true;
}

inline bool is_second_bits(const FiniteModule& M, const Bitset& n) {
  if (n.count() <= 1) return false;
  for (int a = 0; a < M.ring->order; ++a) {
    Bitset an = scale_elem_bits(M, a, n);
    if (!(an == n) && an.count() != 1) return false;
  }
  return true;
}

inline std::vector<Submodule> prime_submodules(ModulePtr M,
                                               int cap = kDefaultLatticeCap) {
  std::vector<Submodule> out;
  for (const Bitset& b : submodule_lattice(*M, cap))
    if (is_prime_bits(*M, b)) out.push_back(Submodule{M, b, b.indices()});
  return out;
}

inline std::vector<Submodule> second_submodules(ModulePtr M,
                                                int cap = kDefaultLatticeCap) {
  std::vector<Submodule> out;
  for (const Bitset& b : submodule_lattice(*M, cap))
    if (is_second_bits(*M, b)) out.push_back(Submodule{M, b, b.indices()});
  return out;
}

// rad(N): intersection of primes containing N, or M if none.
inline Submodule rad(const Submodule& n, int cap = kDefaultLatticeCap) {
  Bitset out = full_submodule(n.module).members;
  bool found = false;
  for (const Bitset& p : submodule_lattice(*n.module, cap)) {
    if (!is_prime_bits(*n.module, p)) continue;
    if (n.members.is_subset_of(p)) {
      out &= p;
      found = true;
    }
  }
  if (!found) return full_submodule(n.module);
  return Submodule{n.module, out, out.indices()};
}

// sec(N): sum of second submodules inside N, or 0 if none.
inline Submodule sec(const Submodule& n, int cap = kDefaultLatticeCap) {
  Bitset out(n.module->size);
  out.set(0);
  for (const Bitset& s : submodule_lattice(*n.module, cap)) {
    if (!is_second_bits(*n.module, s)) continue;
    if (s.is_subset_of(n.members)) out = sub_sum_bits(*n.module, out, s);
  }
  return Submodule{n.module, out, out.indices()};
}

inline bool is_multiplication(ModulePtr M, int cap = kDefaultLatticeCap) {
  Submodule full = full_submodule(M);
  for (const Bitset& n : submodule_lattice(*M, cap)) {
    Bitset colon = colon_ideal_bits(*M, n, full.members);
    Bitset im = scale_ideal_bits(*M, colon, full.members);
    if (!(im == n)) return false;
  }
  return true;
}

inline bool is_comultiplication(ModulePtr M, int cap = kDefaultLatticeCap) {
  for (const Bitset& n : submodule_lattice(*M, cap)) {
    Submodule N{M, n, {}};
    Ideal ann = annihilator(N);
    Submodule back = colon_into(zero_submodule(M), ann);
    if (!(back.members == n)) return false;
  }
  return true;
}

// DAC: I = Ann_R((0 :_M I)) for every ideal I.
inline bool has_dac(ModulePtr M, int cap = kDefaultLatticeCap) {
  for (const Ideal& I : ideal_enumerate(M->ring, cap)) {
    Submodule z = colon_into(zero_submodule(M), I);
    Ideal back = annihilator(z);
    if (!(back.members == I.members)) return false;
  }
  return true;
}

// ---- module maps ----

struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<int> table;
  bool injective = false;

  int operator()(int x) const { return table[x]; }
};

inline ModuleMap make_module_map(ModulePtr src, ModulePtr dst,
                                 const std::function<int(int)>& f) {
  if (src->ring != dst->ring) throw InvalidMap("map across different base rings");
  ModuleMap m;
  m.source = src;
  m.target = dst;
  m.table.resize(src->size);
  for (int x = 0; x < src->size; ++x) {
    int y = f(x);
    if (y < 0 || y >= dst->size) throw InvalidMap("image out of range");
    m.table[x] = y;
  }
  for (int x = 0; x < src->size; ++x)
    for (int y = 0; y < src->size; ++y)
      if (m.table[src->add(x, y)] != dst->add(m.table[x], m.table[y]))
        throw InvalidMap("table is not additive");
  for (int r = 0; r < src->ring->order; ++r)
    for (int x = 0; x < src->size; ++x)
      if (m.table[src->act(r, x)] != dst->act(r, m.table[x]))
        throw InvalidMap("table is not scalar-compatible");
  Bitset seen(dst->size);
  m.injective = true;
  for (int x = 0; x < src->size; ++x) {
    if (seen.test(m.table[x])) m.injective = false;
    seen.set(m.table[x]);
  }
  return m;
}

inline Submodule map_image(const ModuleMap& f, const Submodule& n) {
  Bitset out(f.target->size);
  for (int x : n.members.indices()) out.set(f.table[x]);
  return Submodule{f.target, out, {}};
}

inline Submodule map_preimage(const ModuleMap& f, const Submodule& n) {
  Bitset out(f.source->size);
  for (int x = 0; x < f.source->size; ++x)
    if (n.members.test(f.table[x])) out.set(x);
  return Submodule{f.source, out, {}};
}

// Inclusion of part `which` into a direct sum built from `parts`.
inline ModuleMap inclusion_map(const std::vector<ModulePtr>& parts, ModulePtr sum,
                               std::size_t which) {
  std::vector<int> sizes;
  for (const auto& p : parts) sizes.push_back(p->size);
  return make_module_map(parts[which], sum, [&](int x) {
    std::vector<int> c(parts.size(), 0);
    c[which] = x;
    return detail::mixed_radix_encode(sizes, c);
  });
}

// ---- quotient ----

struct QuotientModule {
  ModulePtr module;           // M/N
  std::vector<int> proj;      // M -> M/N
  std::vector<int> rep;       // M/N -> minimal coset representative in M
};

inline QuotientModule quotient_module(ModulePtr M, const Submodule& N) {
  const FiniteModule& m = *M;
  std::vector<int> coset_of(m.size, -1);
  std::vector<int> reps;
  for (int x = 0; x < m.size; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);  // minimal index in the coset, since x ascends
    for (int nn : N.members.indices()) coset_of[m.add(x, nn)] = id;
  }
  auto q = std::make_shared<FiniteModule>();
  q->ring = m.ring;
  q->size = static_cast<int>(reps.size());
  q->add_table.resize(static_cast<std::size_t>(q->size) * q->size);
  q->act_table.resize(static_cast<std::size_t>(m.ring->order) * q->size);
  for (int a = 0; a < q->size; ++a)
    for (int b = 0; b < q->size; ++b)
      q->add_table[a * q->size + b] = coset_of[m.add(reps[a], reps[b])];
  for (int r = 0; r < m.ring->order; ++r)
    for (int a = 0; a < q->size; ++a)
      q->act_table[r * q->size + a] = coset_of[m.act(r, reps[a])];
  q->names.resize(q->size);
  for (int a = 0; a < q->size; ++a) q->names[a] = m.name(reps[a]) + "~";
  detail::fill_module_neg(*q);
  detail::validate_module(*q);
  return QuotientModule{q, coset_of, reps};
}

// Power submodule N^k inside M^k (all components in N).
inline Submodule power_submodule(const Submodule& n, ModulePtr mk, int k) {
  std::vector<int> sizes(k, n.module->size);
  Bitset out(mk->size);
  for (int i = 0; i < mk->size; ++i) {
    auto c = detail::mixed_radix_decode(sizes, i);
    bool ok = true;
    for (int x : c)
      if (!n.members.test(x)) {
        ok = false;
        break;
      }
    if (ok) out.set(i);
  }
  return Submodule{mk, out, {}};
}

}  // namespace finmod
