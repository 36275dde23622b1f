#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "finmod/mcs.hpp"
#include "finmod/module.hpp"

namespace finmod {

// Localizing a finite ring at S equals cutting down to eR where e is
// the idempotent power of t = prod(S): every s in S divides a power of
// t, and t acts invertibly on eR.
namespace detail {

inline int idempotent_power(const FiniteRing& R, int t) {
  int x = t;
  for (int i = 0; i < 2 * R.order + 2; ++i) {
    if (R.mul(x, x) == x) return x;
    x = R.mul(x, t);
  }
  throw InvalidRing("no idempotent power found");  // unreachable in a finite ring
}

inline int mcs_product(const FiniteRing& R, const MulClosedSet& S) {
  int t = R.one;
  for (int s : S.elements()) t = R.mul(t, s);
  return t;
}

}  // namespace detail

struct RingLocalization {
  Ring ring;                  // S^{-1}R as eR
  std::vector<int> map;       // R -> localized index, x |-> index of e*x
  int idem = 0;               // e inside the original ring
  std::vector<int> carrier;   // localized index -> original element of eR
};

inline RingLocalization localize_ring(Ring ring, const MulClosedSet& S) {
  if (S.contains_zero()) throw InvalidMCS("cannot localize at a set containing 0");
  const FiniteRing& R = *ring;
  int e = detail::idempotent_power(R, detail::mcs_product(R, S));
  std::vector<int> carrier;
  std::vector<int> pos(R.order, -1);
  for (int x = 0; x < R.order; ++x) {
    int ex = R.mul(e, x);
    if (pos[ex] < 0) {
      pos[ex] = 0;  // mark, renumber below
      carrier.push_back(ex);
    }
  }
  // carrier is ascending by construction; index 0 is e*0 = 0
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
  int n = static_cast<int>(carrier.size());
  auto loc = std::make_shared<FiniteRing>();
  loc->order = n;
  loc->kind = RingKind::Table;
  loc->one = pos[e];
  loc->add_table.resize(static_cast<std::size_t>(n) * n);
  loc->mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      loc->add_table[i * n + j] = pos[R.add(carrier[i], carrier[j])];
      loc->mul_table[i * n + j] = pos[R.mul(carrier[i], carrier[j])];
    }
  loc->names.resize(n);
  for (int i = 0; i < n; ++i) loc->names[i] = R.name(carrier[i]) + "'";
  detail::fill_neg_table(*loc);
  detail::validate_ring(*loc);
  std::vector<int> cmap(R.order);
  for (int x = 0; x < R.order; ++x) cmap[x] = pos[R.mul(e, x)];
  return RingLocalization{loc, cmap, e, carrier};
}

// Saturation S* = preimage of the units of S^{-1}R.
inline MulClosedSet saturate(const MulClosedSet& S) {
  RingLocalization loc = localize_ring(S.ring, S);
  Bitset units = ring_units(*loc.ring);
  Bitset out(S.ring->order);
  for (int x = 0; x < S.ring->order; ++x)
    if (units.test(loc.map[x])) out.set(x);
  return MulClosedSet{S.ring, out};
}

struct LocalizedModule {
  ModulePtr carrier;              // module over ring_loc
  Ring ring_loc;
  std::vector<int> canonical_map; // M -> carrier index, m |-> e*m
  std::vector<int> carrier_elems; // carrier index -> original element of eM
  RingLocalization ring_localization;
};

inline LocalizedModule localize_module(ModulePtr M, const MulClosedSet& S) {
  RingLocalization rl = localize_ring(M->ring, S);
  const FiniteModule& m = *M;
  int e = rl.idem;
  std::vector<int> carrier;
  std::vector<int> pos(m.size, -1);
  for (int x = 0; x < m.size; ++x) {
    int ex = m.act(e, x);
    if (pos[ex] < 0) {
      pos[ex] = 0;
      carrier.push_back(ex);
    }
  }
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
  int n = static_cast<int>(carrier.size());
  auto q = std::make_shared<FiniteModule>();
  q->ring = rl.ring;
  q->size = n;
  q->add_table.resize(static_cast<std::size_t>(n) * n);
  q->act_table.resize(static_cast<std::size_t>(rl.ring->order) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      q->add_table[i * n + j] = pos[m.add(carrier[i], carrier[j])];
  for (int r = 0; r < rl.ring->order; ++r) {
    int orig = rl.carrier[r];
    for (int i = 0; i < n; ++i)
      q->act_table[r * n + i] = pos[m.act(orig, carrier[i])];
  }
  q->names.resize(n);
  for (int i = 0; i < n; ++i) q->names[i] = m.name(carrier[i]) + "'";
  detail::fill_module_neg(*q);
  detail::validate_module(*q);
  std::vector<int> cmap(m.size);
  for (int x = 0; x < m.size; ++x) cmap[x] = pos[m.act(e, x)];
  return LocalizedModule{q, rl.ring, cmap, carrier, rl};
}

// S^{-1}N as a submodule of the localized carrier.
inline Submodule localize_submodule(const LocalizedModule& lm, const Submodule& n) {
  Bitset out(lm.carrier->size);
  for (int x : n.members.indices()) out.set(lm.canonical_map[x]);
  return Submodule{lm.carrier, out, {}};
}

// Definitional oracle: formal fractions (m, s) modulo
// (m,s) ~ (m',s')  iff  exists u in S with u(s'm - sm') = 0.
// Built without the idempotent shortcut; used to validate the fast path.
inline LocalizedModule localization_fraction_oracle(ModulePtr M, const MulClosedSet& S) {
  RingLocalization rl = localize_ring(M->ring, S);  // target ring only
  const FiniteModule& m = *M;
  const FiniteRing& R = *M->ring;
  std::vector<int> svals = S.elements();
  int ns = static_cast<int>(svals.size());
  int np = m.size * ns;
  auto pair_m = [&](int p) { return p / ns; };
  auto pair_s = [&](int p) { return svals[p % ns]; };
  auto related = [&](int p, int q) {
    int diff = m.add(m.act(pair_s(q), pair_m(p)), m.neg(m.act(pair_s(p), pair_m(q))));
    for (int u : svals)
      if (m.act(u, diff) == 0) return true;
    return false;
  };
  // union-find
  std::vector<int> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < np; ++p)
    for (int q = p + 1; q < np; ++q) {
      if (find(p) == find(q)) continue;
      if (related(p, q)) parent[find(q)] = find(p);
    }
  std::map<int, int> class_id;  // root -> class index, ordered by min pair
  for (int p = 0; p < np; ++p) {
    int r = find(p);
    if (!class_id.count(r)) class_id[r] = 0;
  }
  std::vector<int> roots;
  for (int p = 0; p < np; ++p) {
    int r = find(p);
    if (class_id[r] == 0) {
      class_id[r] = 1;
      roots.push_back(r);  // ordered by first occurrence = min pair index
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) class_id[roots[i]] = static_cast<int>(i);
  int n = static_cast<int>(roots.size());
  auto cls = [&](int p) { return class_id[find(p)]; };
  auto pair_of = [&](int mm, int ss_idx) { return mm * ns + ss_idx; };
  // representative pair per class (the first occurrence)
  std::vector<int> rep(n, -1);
  for (int p = 0; p < np; ++p)
    if (rep[cls(p)] < 0) rep[cls(p)] = p;

  auto q = std::make_shared<FiniteModule>();
  q->ring = rl.ring;
  q->size = n;
  q->add_table.resize(static_cast<std::size_t>(n) * n);
  q->act_table.resize(static_cast<std::size_t>(rl.ring->order) * n);
  std::vector<int> sidx(R.order, -1);
  for (int i = 0; i < ns; ++i) sidx[svals[i]] = i;
  for (int i = 0; i < n; ++i) {
    int mi = pair_m(rep[i]), si = pair_s(rep[i]);
    for (int j = 0; j < n; ++j) {
      int mj = pair_m(rep[j]), sj = pair_s(rep[j]);
      // m_i/s_i + m_j/s_j = (s_j m_i + s_i m_j) / (s_i s_j)
      int num = m.add(m.act(sj, mi), m.act(si, mj));
      int den = R.mul(si, sj);
      q->add_table[i * n + j] = cls(pair_of(num, sidx[den]));
    }
  }
  for (int r = 0; r < rl.ring->order; ++r) {
    int orig = rl.carrier[r];
    for (int i = 0; i < n; ++i) {
      int mi = pair_m(rep[i]), si = pair_s(rep[i]);
      q->act_table[r * n + i] = cls(pair_of(m.act(orig, mi), sidx[si]));
    }
  }
  q->names.resize(n);
  for (int i = 0; i < n; ++i)
    q->names[i] = m.name(pair_m(rep[i])) + "/" + R.name(pair_s(rep[i]));
  detail::fill_module_neg(*q);
  detail::validate_module(*q);
  std::vector<int> cmap(m.size);
  int one_idx = sidx[R.one];
  for (int x = 0; x < m.size; ++x) cmap[x] = cls(pair_of(x, one_idx));
  return LocalizedModule{q, rl.ring, cmap, {}, rl};
}

// Backtracking isomorphism test between small modules over the same
// ring (additive bijection commuting with the action).
inline bool modules_isomorphic(const FiniteModule& A, const FiniteModule& B) {
  // accept distinct ring objects with identical tables (e.g. the same
  // localization computed twice)
  bool same_ring = A.ring == B.ring ||
                   (A.ring->order == B.ring->order && A.ring->one == B.ring->one &&
                    A.ring->add_table == B.ring->add_table &&
                    A.ring->mul_table == B.ring->mul_table);
  if (!same_ring || A.size != B.size) return false;
  if (A.size > 64 + 1) throw CapExceeded("isomorphism search cap (|M| <= 64)");
  const FiniteRing& R = *A.ring;

  auto add_order = [](const FiniteModule& M, int x) {
    int o = 1, y = x;
    while (y != 0) {
      y = M.add(y, x);
      ++o;
    }
    return o;
  };
  auto ann_of = [&](const FiniteModule& M, int x) {
    Bitset b(R.order);
    for (int r = 0; r < R.order; ++r)
      if (M.act(r, x) == 0) b.set(r);
    return b;
  };

  std::vector<int> map(A.size, -1);
  std::vector<char> used(B.size, 0);
  map[0] = 0;
  used[0] = 1;

  // extend the partial map over <dom + R*g> after assigning g -> h
  std::function<bool()> solve = [&]() {
    int g = -1;
    for (int x = 0; x < A.size; ++x)
      if (map[x] < 0) {
        g = x;
        break;
      }
    if (g < 0) return true;
    for (int h = 0; h < B.size; ++h) {
      if (add_order(A, g) != add_order(B, h)) continue;
      if (!(ann_of(A, g) == ann_of(B, h))) continue;
      std::vector<std::pair<int, int>> changes;
      bool ok = true;
      for (int x = 0; x < A.size && ok; ++x) {
        if (map[x] < 0) continue;
        for (int r = 0; r < R.order && ok; ++r) {
          int xa = A.add(x, A.act(r, g));
          int xb = B.add(map[x], B.act(r, h));
          if (map[xa] < 0) {
            if (used[xb]) {
              ok = false;
              break;
            }
            map[xa] = xb;
            used[xb] = 1;
            changes.emplace_back(xa, xb);
          } else if (map[xa] != xb) {
            ok = false;
          }
        }
      }
      if (ok && solve()) return true;
      for (auto& [xa, xb] : changes) {
        map[xa] = -1;
        used[xb] = 0;
      }
    }
    return false;
  };
  if (!solve()) return false;
  // full verification
  for (int x = 0; x < A.size; ++x)
    for (int y = 0; y < A.size; ++y)
      if (map[A.add(x, y)] != B.add(map[x], map[y])) return false;
  for (int r = 0; r < R.order; ++r)
    for (int x = 0; x < A.size; ++x)
      if (map[A.act(r, x)] != B.act(r, map[x])) return false;
  return true;
}

}  // namespace finmod
