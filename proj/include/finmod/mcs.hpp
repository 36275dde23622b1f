#pragma once

#include <vector>

#include "finmod/bitset.hpp"
#include "finmod/errors.hpp"
#include "finmod/ring.hpp"

namespace finmod {

// Multiplicatively closed subset of a finite ring: 1 in S, 0 not in S,
// closed under products. Residue sets coming from an integer-base
// descriptor with no excluded prime dividing the exponent may contain
// 0; such sets make every annihilator guard fail, which is exactly the
// intended semantics, and they are flagged by contains_zero().
struct MulClosedSet {
  Ring ring;
  Bitset members;

  bool contains(int x) const { return members.test(x); }
  bool contains_zero() const { return members.test(0); }
  std::vector<int> elements() const { return members.indices(); }
  std::size_t size() const { return members.count(); }
};

// Smallest m.c.s. containing the seeds and 1.
inline MulClosedSet mcs_closure(Ring ring, const std::vector<int>& seeds) {
  const FiniteRing& R = *ring;
  Bitset s(R.order);
  s.set(R.one);
  std::vector<int> work(seeds);
  work.push_back(R.one);
  for (int x : seeds) {
    if (x < 0 || x >= R.order) throw InvalidMCS("seed out of range");
    s.set(x);
  }
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int y : s.indices()) {
      int z = R.mul(x, y);
      if (!s.test(z)) {
        s.set(z);
        work.push_back(z);
      }
    }
  }
  if (s.test(0)) throw InvalidMCS("seeds generate a set containing 0");
  return MulClosedSet{ring, s};
}

inline MulClosedSet mcs_from_bitset(Ring ring, Bitset members, bool allow_zero = false) {
  const FiniteRing& R = *ring;
  if (!members.test(R.one)) throw InvalidMCS("1 must belong to the set");
  if (!allow_zero && members.test(0)) throw InvalidMCS("0 must not belong to the set");
  for (int x : members.indices())
    for (int y : members.indices())
      if (!members.test(R.mul(x, y)))
        throw InvalidMCS("set is not closed under multiplication");
  return MulClosedSet{ring, std::move(members)};
}

// S_1 x S_2 x ... as a m.c.s. of the matching product ring.
inline MulClosedSet product_mcs(Ring prod, const std::vector<MulClosedSet>& parts) {
  if (prod->kind != RingKind::Product || prod->factors.size() != parts.size())
    throw InvalidMCS("product_mcs: ring is not the matching product ring");
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k].ring != prod->factors[k])
      throw InvalidMCS("product_mcs: factor ring mismatch");
  Bitset b(prod->order);
  for (int i = 0; i < prod->order; ++i) {
    auto c = product_decode(prod->factors, i);
    bool in = true;
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (!parts[k].members.test(c[k])) {
        in = false;
        break;
      }
    if (in) b.set(i);
  }
  return MulClosedSet{prod, b};
}

// ---- integer-base reduction ----
//
// Represents the m.c.s. S = Z minus the union of p_i Z acting on a
// Z-module of exponent e, reduced to Z_e with the residues of S.

struct IntegerBaseDescriptor {
  int exponent = 0;
  std::vector<int> excluded_primes;
};

namespace detail {
inline bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

struct IntegerBaseReduction {
  Ring ring;  // Z_e
  MulClosedSet mcs;
  IntegerBaseDescriptor desc;

  // Decides S intersect mZ != empty for an integer generator m.
  bool generator_meets_S(long long m) const {
    if (m == 0) return false;
    for (int p : desc.excluded_primes)
      if (m % p == 0) return false;
    return true;
  }
};

inline IntegerBaseReduction integer_base_reduce(const IntegerBaseDescriptor& desc) {
  if (desc.exponent < 2) throw InvalidMCS("integer_base: exponent must be >= 2");
  for (int p : desc.excluded_primes)
    if (!detail::is_prime_int(p)) throw InvalidMCS("integer_base: excluded value not prime");
  Ring ring = make_zn(desc.exponent);
  Bitset b(desc.exponent);
  for (int r = 0; r < desc.exponent; ++r) {
    bool in = true;
    for (int p : desc.excluded_primes)
      if (desc.exponent % p == 0 && r % p == 0) {
        in = false;
        break;
      }
    if (in) b.set(r);
  }
  if (b.none()) throw InvalidMCS("integer_base: empty residue set");
  bool has_unit = false;
  for (int r : b.indices())
    if (ring->is_unit(r)) has_unit = true;
  if (b.test(0) && !has_unit)
    throw InvalidMCS("integer_base: residue set contains 0 and no unit");
  MulClosedSet s = mcs_from_bitset(ring, b, /*allow_zero=*/true);
  return IntegerBaseReduction{ring, s, desc};
}

}  // namespace finmod
