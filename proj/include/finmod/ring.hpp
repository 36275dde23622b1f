#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "finmod/bitset.hpp"
#include "finmod/errors.hpp"

namespace finmod {

struct FiniteModule;

enum class RingKind { Zn, Product, Idealization, Table };

// Finite commutative ring with identity, stored as explicit operation
// tables. Index 0 is always the additive identity; the index of the
// multiplicative identity is recorded in `one` (for Z_n it is 1, for
// product and idealization rings it follows the mixed-radix encoding).
struct FiniteRing {
  int order = 0;
  RingKind kind = RingKind::Table;
  int one = 1;
  std::vector<int> add_table;  // order x order, row-major
  std::vector<int> mul_table;
  std::vector<int> neg_table;
  std::vector<std::string> names;

  // structure metadata
  int zn_n = 0;
  std::vector<std::shared_ptr<const FiniteRing>> factors;
  std::shared_ptr<const FiniteRing> ideal_base;
  std::shared_ptr<const FiniteModule> ideal_mod;

  mutable std::optional<std::vector<Bitset>> ideal_cache;

  int add(int a, int b) const { return add_table[a * order + b]; }
  int mul(int a, int b) const { return mul_table[a * order + b]; }
  int neg(int a) const { return neg_table[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  int pow(int a, int e) const {
    int r = one;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  bool is_unit(int a) const {
    for (int x = 0; x < order; ++x)
      if (mul(a, x) == one) return true;
    return false;
  }

  // additive order of the multiplicative identity
  int characteristic() const {
    int c = 1;
    int x = one;
    while (x != 0) {
      x = add(x, one);
      ++c;
    }
    return c;
  }

  const std::string& name(int i) const { return names[i]; }
};

using Ring = std::shared_ptr<const FiniteRing>;

// Ideal of a finite ring: bitset over element indices plus the
// generators it was built from.
struct Ideal {
  Ring ring;
  Bitset members;
  std::vector<int> generators;

  bool contains(int x) const { return members.test(x); }
  std::size_t size() const { return members.count(); }
};

namespace detail {

inline void fill_neg_table(FiniteRing& r) {
  r.neg_table.assign(r.order, -1);
  for (int a = 0; a < r.order; ++a)
    for (int b = 0; b < r.order; ++b)
      if (r.add(a, b) == 0) {
        r.neg_table[a] = b;
        break;
      }
}

// Ring axiom audit: full scan for order <= 64, sampled triples above.
inline void validate_ring(const FiniteRing& r) {
  auto check_triple = [&](int a, int b, int c) {
    if (r.add(a, b) != r.add(b, a)) throw InvalidRing("addition not commutative");
    if (r.mul(a, b) != r.mul(b, a)) throw InvalidRing("multiplication not commutative");
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
      throw InvalidRing("addition not associative");
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
      throw InvalidRing("multiplication not associative");
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
      throw InvalidRing("distributivity fails");
  };
  for (int a = 0; a < r.order; ++a) {
    if (r.add(a, 0) != a) throw InvalidRing("0 is not an additive identity");
    if (r.mul(a, r.one) != a) throw InvalidRing("1 is not a multiplicative identity");
    if (r.neg_table[a] < 0) throw InvalidRing("missing additive inverse");
  }
  if (r.order <= 64) {
    for (int a = 0; a < r.order; ++a)
      for (int b = 0; b < r.order; ++b)
        for (int c = 0; c < r.order; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> d(0, r.order - 1);
    for (int i = 0; i < 10000; ++i) check_triple(d(rng), d(rng), d(rng));
  }
}

}  // namespace detail

inline Ring make_zn(int n) {
  if (n < 2) throw InvalidRing("make_zn: need n >= 2");
  auto r = std::make_shared<FiniteRing>();
  r->order = n;
  r->kind = RingKind::Zn;
  r->zn_n = n;
  r->one = 1;
  r->add_table.resize(n * n);
  r->mul_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r->add_table[a * n + b] = (a + b) % n;
      r->mul_table[a * n + b] = (a * b) % n;
    }
  r->names.resize(n);
  for (int a = 0; a < n; ++a) r->names[a] = std::to_string(a);
  detail::fill_neg_table(*r);
  detail::validate_ring(*r);
  return r;
}

// Mixed-radix encoding with the leftmost factor most significant.
inline int product_encode(const std::vector<Ring>& fs, const std::vector<int>& comps) {
  int idx = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) idx = idx * fs[i]->order + comps[i];
  return idx;
}

inline std::vector<int> product_decode(const std::vector<Ring>& fs, int idx) {
  std::vector<int> comps(fs.size());
  for (std::size_t i = fs.size(); i-- > 0;) {
    comps[i] = idx % fs[i]->order;
    idx /= fs[i]->order;
  }
  return comps;
}

inline Ring make_product(const std::vector<Ring>& factors) {
  if (factors.empty()) throw InvalidRing("make_product: empty factor list");
  long long ord = 1;
  for (const auto& f : factors) {
    ord *= f->order;
    if (ord > 4096) throw InvalidRing("make_product: order cap (4096) exceeded");
  }
  int n = static_cast<int>(ord);
  auto r = std::make_shared<FiniteRing>();
  r->order = n;
  r->kind = RingKind::Product;
  r->factors = factors;
  r->add_table.resize(static_cast<std::size_t>(n) * n);
  r->mul_table.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> dec(n);
  for (int i = 0; i < n; ++i) dec[i] = product_decode(factors, i);
  std::vector<int> tmp(factors.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < factors.size(); ++k)
        tmp[k] = factors[k]->add(dec[a][k], dec[b][k]);
      r->add_table[a * n + b] = product_encode(factors, tmp);
      for (std::size_t k = 0; k < factors.size(); ++k)
        tmp[k] = factors[k]->mul(dec[a][k], dec[b][k]);
      r->mul_table[a * n + b] = product_encode(factors, tmp);
    }
  for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k]->one;
  r->one = product_encode(factors, tmp);
  r->names.resize(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) s += ",";
      s += factors[k]->name(dec[i][k]);
    }
    s += ")";
    r->names[i] = s;
  }
  detail::fill_neg_table(*r);
  detail::validate_ring(*r);
  return r;
}

inline Ideal ideal_from_bitset(Ring ring, Bitset members, std::vector<int> gens = {}) {
  return Ideal{std::move(ring), std::move(members), std::move(gens)};
}

// {a : a^k in I for some k >= 1}, by following the power orbit of each
// element until it cycles.
inline Ideal ideal_radical(const Ideal& I) {
  const FiniteRing& R = *I.ring;
  Bitset out(R.order);
  for (int a = 0; a < R.order; ++a) {
    Bitset seen(R.order);
    int x = a;
    while (!seen.test(x)) {
      seen.set(x);
      if (I.members.test(x)) {
        out.set(a);
        break;
      }
      x = R.mul(x, a);
    }
  }
  std::vector<int> gens = out.indices();
  return Ideal{I.ring, out, gens};
}

inline Bitset ring_units(const FiniteRing& R) {
  Bitset u(R.order);
  for (int a = 0; a < R.order; ++a)
    if (R.is_unit(a)) u.set(a);
  return u;
}

}  // namespace finmod
