#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finmod/mcs.hpp"
#include "finmod/module.hpp"

namespace finmod {

enum class Verdict { True, False, PreconditionFailed };
enum class Algo { Definitional, Characterization };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "precondition-failed";
  }
}

struct Counterexample {
  std::optional<int> a, b, r, m;
  std::optional<Bitset> K, L1, L2, I, J;

  std::string describe(const FiniteModule& M) const {
    const FiniteRing& R = *M.ring;
    std::string s;
    auto app = [&](const char* tag, const std::string& v) {
      if (!s.empty()) s += ", ";
      s += tag;
      s += "=";
      s += v;
    };
    auto sub = [&](const Bitset& b) {
      std::string t = "{";
      bool first = true;
      for (int i : b.indices()) {
        if (!first) t += ",";
        t += M.name(i);
        first = false;
      }
      return t + "}";
    };
    auto ide = [&](const Bitset& b) {
      std::string t = "{";
      bool first = true;
      for (int i : b.indices()) {
        if (!first) t += ",";
        t += R.name(i);
        first = false;
      }
      return t + "}";
    };
    if (a) app("a", R.name(*a));
    if (b) app("b", R.name(*b));
    if (r) app("r", R.name(*r));
    if (m) app("m", M.name(*m));
    if (I) app("I", ide(*I));
    if (J) app("J", ide(*J));
    if (K) app("K", sub(*K));
    if (L1) app("L1", sub(*L1));
    if (L2) app("L2", sub(*L2));
    return s;
  }
};

struct CheckReport {
  std::string predicate;
  Verdict verdict = Verdict::PreconditionFailed;
  std::optional<int> witness_s;
  std::optional<Counterexample> counterexample;
  int violating_s = 0;  // number of s in S defeated by some tuple
  std::map<int, Counterexample> per_s;
  Algo algorithm = Algo::Definitional;

  bool ok() const { return verdict == Verdict::True; }
};

struct CheckOptions {
  bool per_s_map = false;
  int lattice_cap = kDefaultLatticeCap;
};

namespace detail {

// Per-submodule scratch: rN for every ring element, Ann_R(N), (N :_R M).
struct SubCtx {
  const FiniteModule* M;
  Bitset N;
  std::vector<Bitset> rN;
  Bitset ann;
  Bitset colonM;

  explicit SubCtx(const Submodule& n) : M(n.module.get()), N(n.members) {
    const FiniteRing& R = *M->ring;
    rN.reserve(R.order);
    for (int r = 0; r < R.order; ++r) rN.push_back(scale_elem_bits(*M, r, N));
    Bitset z(M->size);
    z.set(0);
    ann = colon_ideal_bits(*M, z, N);
    Bitset full(M->size);
    for (int i = 0; i < M->size; ++i) full.set(i);
    colonM = colon_ideal_bits(*M, N, full);  // (N :_R M)
  }
};

// Shared existential-s driver: `violation(s)` returns a counterexample
// defeating s, or nullopt. Minimal witness by ascending canonical index.
template <typename F>
CheckReport exists_s(const std::string& pred, Algo algo, const MulClosedSet& S,
                     F&& violation, const CheckOptions& opt) {
  CheckReport rep;
  rep.predicate = pred;
  rep.algorithm = algo;
  std::optional<int> witness;
  for (int s : S.elements()) {
    auto cex = violation(s);
    if (!cex) {
      if (!witness) witness = s;
      if (!opt.per_s_map) break;
    } else {
      ++rep.violating_s;
      if (!rep.counterexample) rep.counterexample = *cex;
      if (opt.per_s_map) rep.per_s[s] = *cex;
      if (witness && !opt.per_s_map) break;
    }
  }
  if (witness) {
    rep.verdict = Verdict::True;
    rep.witness_s = witness;
    if (!opt.per_s_map) {
      rep.counterexample.reset();
      rep.violating_s = 0;  // not fully counted on early exit; irrelevant when true
    }
  } else {
    rep.verdict = Verdict::False;
  }
  return rep;
}

}  // namespace detail

// ---- non-S checkers ----

inline CheckReport is_prime(const Submodule& n) {
  CheckReport rep;
  rep.predicate = "prime";
  if (n.is_full()) return rep;  // proper required
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  for (int r = 0; r < M.ring->order; ++r) {
    if (c.colonM.test(r)) continue;
    for (int m = 0; m < M.size; ++m)
      if (c.N.test(M.act(r, m)) && !c.N.test(m)) {
        rep.verdict = Verdict::False;
        Counterexample cx;
        cx.r = r;
        cx.m = m;
        rep.counterexample = cx;
        return rep;
      }
  }
  rep.verdict = Verdict::True;
  return rep;
}

inline CheckReport is_second(const Submodule& n) {
  CheckReport rep;
  rep.predicate = "second";
  if (n.is_zero()) return rep;  // nonzero required
  detail::SubCtx c(n);
  const FiniteRing& R = *n.module->ring;
  for (int a = 0; a < R.order; ++a)
    if (!(c.rN[a] == c.N) && c.rN[a].count() != 1) {
      rep.verdict = Verdict::False;
      Counterexample cx;
      cx.r = a;
      rep.counterexample = cx;
      return rep;
    }
  rep.verdict = Verdict::True;
  return rep;
}

inline CheckReport is_2_absorbing(const Submodule& n) {
  CheckReport rep;
  rep.predicate = "2-absorbing";
  if (n.is_full()) return rep;
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  for (int a = 0; a < R.order; ++a)
    for (int b = a; b < R.order; ++b) {
      int ab = R.mul(a, b);
      if (c.colonM.test(ab)) continue;
      for (int m = 0; m < M.size; ++m)
        if (c.N.test(M.act(ab, m)) && !c.N.test(M.act(a, m)) &&
            !c.N.test(M.act(b, m))) {
          rep.verdict = Verdict::False;
          Counterexample cx;
          cx.a = a;
          cx.b = b;
          cx.m = m;
          rep.counterexample = cx;
          return rep;
        }
    }
  rep.verdict = Verdict::True;
  return rep;
}

inline CheckReport is_strongly_2_absorbing_second(const Submodule& n,
                                                  const CheckOptions& opt = {}) {
  CheckReport rep;
  rep.predicate = "strongly-2-absorbing-second";
  if (n.is_zero()) return rep;
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  const auto& lat = submodule_lattice(M, opt.lattice_cap);
  for (int a = 0; a < R.order; ++a)
    for (int b = a; b < R.order; ++b) {
      int ab = R.mul(a, b);
      if (c.ann.test(ab)) continue;
      for (const Bitset& K : lat) {
        if (!c.rN[ab].is_subset_of(K)) continue;
        if (!c.rN[a].is_subset_of(K) && !c.rN[b].is_subset_of(K)) {
          rep.verdict = Verdict::False;
          Counterexample cx;
          cx.a = a;
          cx.b = b;
          cx.K = K;
          rep.counterexample = cx;
          return rep;
        }
      }
    }
  rep.verdict = Verdict::True;
  return rep;
}

// ---- S-relativized checkers ----

inline CheckReport is_S_prime(const Submodule& n, const MulClosedSet& S,
                              const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  if (c.colonM.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s-prime";
    return rep;
  }
  return detail::exists_s(
      "s-prime", Algo::Definitional, S,
      [&](int s) -> std::optional<Counterexample> {
        for (int a = 0; a < R.order; ++a)
          for (int m = 0; m < M.size; ++m)
            if (c.N.test(M.act(a, m)) && !c.colonM.test(R.mul(s, a)) &&
                !c.N.test(M.act(s, m))) {
              Counterexample cx;
              cx.a = a;
              cx.m = m;
              return cx;
            }
        return std::nullopt;
      },
      opt);
}

inline CheckReport is_S_second(const Submodule& n, const MulClosedSet& S,
                               const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  if (c.ann.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s-second";
    return rep;
  }
  const auto& lat = submodule_lattice(M, opt.lattice_cap);
  return detail::exists_s(
      "s-second", Algo::Definitional, S,
      [&](int s) -> std::optional<Counterexample> {
        for (int r = 0; r < R.order; ++r) {
          if (c.ann.test(R.mul(r, s))) continue;  // rsN = 0
          for (const Bitset& K : lat)
            if (c.rN[r].is_subset_of(K) && !c.rN[s].is_subset_of(K)) {
              Counterexample cx;
              cx.r = r;
              cx.K = K;
              return cx;
            }
        }
        return std::nullopt;
      },
      opt);
}

inline CheckReport is_S_2_absorbing(const Submodule& n, const MulClosedSet& S,
                                    const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  if (c.colonM.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s-2-absorbing";
    return rep;
  }
  return detail::exists_s(
      "s-2-absorbing", Algo::Definitional, S,
      [&](int s) -> std::optional<Counterexample> {
        for (int a = 0; a < R.order; ++a)
          for (int b = a; b < R.order; ++b) {
            int ab = R.mul(a, b);
            if (c.colonM.test(R.mul(s, ab))) continue;
            for (int m = 0; m < M.size; ++m)
              if (c.N.test(M.act(ab, m)) && !c.N.test(M.act(R.mul(s, a), m)) &&
                  !c.N.test(M.act(R.mul(s, b), m))) {
                Counterexample cx;
                cx.a = a;
                cx.b = b;
                cx.m = m;
                return cx;
              }
          }
        return std::nullopt;
      },
      opt);
}

// Characterization via colon identities:
// (N :_M s^2 ab) = (N :_M s^2 a)  or  ... = (N :_M s^2 b)  or  (N :_M s^3 ab) = M.
inline CheckReport is_S_2_absorbing_via_colon(const Submodule& n, const MulClosedSet& S,
                                              const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  if (c.colonM.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s-2-absorbing-colon";
    rep.algorithm = Algo::Characterization;
    return rep;
  }
  std::vector<Bitset> colonN(R.order);
  for (int x = 0; x < R.order; ++x) colonN[x] = colon_into_bits(M, c.N, x);
  std::size_t full = static_cast<std::size_t>(M.size);
  return detail::exists_s(
      "s-2-absorbing-colon", Algo::Characterization, S,
      [&](int s) -> std::optional<Counterexample> {
        int s2 = R.mul(s, s);
        int s3 = R.mul(s2, s);
        for (int a = 0; a < R.order; ++a)
          for (int b = a; b < R.order; ++b) {
            int ab = R.mul(a, b);
            if (colonN[R.mul(s2, ab)] == colonN[R.mul(s2, a)]) continue;
            if (colonN[R.mul(s2, ab)] == colonN[R.mul(s2, b)]) continue;
            if (colonN[R.mul(s3, ab)].count() == full) continue;
            Counterexample cx;
            cx.a = a;
            cx.b = b;
            return cx;
          }
        return std::nullopt;
      },
      opt);
}

// Definitional S-2-absorbing-second check (quantifies K over the lattice).
inline CheckReport is_S_2_absorbing_second(const Submodule& n, const MulClosedSet& S,
                                           const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  if (c.ann.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s-2-absorbing-second";
    return rep;
  }
  const auto& lat = submodule_lattice(M, opt.lattice_cap);
  return detail::exists_s(
      "s-2-absorbing-second", Algo::Definitional, S,
      [&](int s) -> std::optional<Counterexample> {
        for (int a = 0; a < R.order; ++a)
          for (int b = a; b < R.order; ++b) {
            int ab = R.mul(a, b);
            if (c.ann.test(R.mul(s, ab))) continue;  // sabN = 0
            const Bitset& saN = c.rN[R.mul(s, a)];
            const Bitset& sbN = c.rN[R.mul(s, b)];
            for (const Bitset& K : lat) {
              if (!c.rN[ab].is_subset_of(K)) continue;
              if (!saN.is_subset_of(K) && !sbN.is_subset_of(K)) {
                Counterexample cx;
                cx.a = a;
                cx.b = b;
                cx.K = K;
                return cx;
              }
            }
          }
        return std::nullopt;
      },
      opt);
}

// Characterization (element identities, no K quantifier):
// s^2 abN = s^2 aN  or  s^2 abN = s^2 bN  or  s^3 abN = 0.
inline CheckReport is_s2as_via_elements(const Submodule& n, const MulClosedSet& S,
                                        const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteRing& R = *n.module->ring;
  if (c.ann.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s2as-elements";
    rep.algorithm = Algo::Characterization;
    return rep;
  }
  return detail::exists_s(
      "s2as-elements", Algo::Characterization, S,
      [&](int s) -> std::optional<Counterexample> {
        int s2 = R.mul(s, s);
        int s3 = R.mul(s2, s);
        for (int a = 0; a < R.order; ++a)
          for (int b = a; b < R.order; ++b) {
            int ab = R.mul(a, b);
            if (c.rN[R.mul(s2, ab)] == c.rN[R.mul(s2, a)]) continue;
            if (c.rN[R.mul(s2, ab)] == c.rN[R.mul(s2, b)]) continue;
            if (c.ann.test(R.mul(s3, ab))) continue;
            Counterexample cx;
            cx.a = a;
            cx.b = b;
            return cx;
          }
        return std::nullopt;
      },
      opt);
}

// Characterization via completely irreducible intersections.
inline CheckReport is_s2as_via_ci(const Submodule& n, const MulClosedSet& S,
                                  const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  if (c.ann.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s2as-ci";
    rep.algorithm = Algo::Characterization;
    return rep;
  }
  auto ci = completely_irreducible_list(n.module, opt.lattice_cap);
  return detail::exists_s(
      "s2as-ci", Algo::Characterization, S,
      [&](int s) -> std::optional<Counterexample> {
        for (int a = 0; a < R.order; ++a)
          for (int b = a; b < R.order; ++b) {
            int ab = R.mul(a, b);
            if (c.ann.test(R.mul(s, ab))) continue;
            const Bitset& saN = c.rN[R.mul(s, a)];
            const Bitset& sbN = c.rN[R.mul(s, b)];
            for (std::size_t i = 0; i < ci.size(); ++i)
              for (std::size_t j = i; j < ci.size(); ++j) {
                Bitset L = ci[i].members & ci[j].members;
                if (!c.rN[ab].is_subset_of(L)) continue;
                if (!saN.is_subset_of(L) && !sbN.is_subset_of(L)) {
                  Counterexample cx;
                  cx.a = a;
                  cx.b = b;
                  cx.L1 = ci[i].members;
                  cx.L2 = ci[j].members;
                  return cx;
                }
              }
          }
        return std::nullopt;
      },
      opt);
}

// Characterization via ideals: IJN in K forces sIJ in Ann(N) or
// sIN in K or sJN in K.
inline CheckReport is_s2as_via_ideals(const Submodule& n, const MulClosedSet& S,
                                      const CheckOptions& opt = {}) {
  detail::SubCtx c(n);
  const FiniteModule& M = *n.module;
  const FiniteRing& R = *M.ring;
  if (c.ann.intersects(S.members)) {
    CheckReport rep;
    rep.predicate = "s2as-ideals";
    rep.algorithm = Algo::Characterization;
    return rep;
  }
  auto ideals = ideal_enumerate(n.module->ring, opt.lattice_cap);
  const auto& lat = submodule_lattice(M, opt.lattice_cap);
  std::size_t ni = ideals.size();
  std::vector<Bitset> IN(ni);
  for (std::size_t i = 0; i < ni; ++i)
    IN[i] = scale_ideal_bits(M, ideals[i].members, c.N);
  // product ideal member sets
  std::vector<std::vector<Bitset>> IJ(ni, std::vector<Bitset>(ni));
  std::vector<std::vector<Bitset>> IJN(ni, std::vector<Bitset>(ni));
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = i; j < ni; ++j) {
      std::vector<int> prods;
      for (int x : ideals[i].members.indices())
        for (int y : ideals[j].members.indices()) prods.push_back(R.mul(x, y));
      Bitset pj(R.order);
      for (int p : prods) pj.set(p);
      // additive closure inside the ring
      Bitset closed(R.order);
      closed.set(0);
      std::vector<int> work = pj.indices();
      for (int p : work) closed.set(p);
      while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int y : closed.indices()) {
          int z = R.add(x, y);
          if (!closed.test(z)) {
            closed.set(z);
            work.push_back(z);
          }
        }
      }
      IJ[i][j] = closed;
      IJN[i][j] = scale_ideal_bits(M, closed, c.N);
    }
  return detail::exists_s(
      "s2as-ideals", Algo::Characterization, S,
      [&](int s) -> std::optional<Counterexample> {
        std::vector<Bitset> sIN(ni);
        for (std::size_t i = 0; i < ni; ++i) sIN[i] = scale_elem_bits(M, s, IN[i]);
        for (std::size_t i = 0; i < ni; ++i)
          for (std::size_t j = i; j < ni; ++j) {
            bool s_kills = true;
            for (int x : IJ[i][j].indices())
              if (!c.ann.test(R.mul(s, x))) {
                s_kills = false;
                break;
              }
            if (s_kills) continue;
            for (const Bitset& K : lat) {
              if (!IJN[i][j].is_subset_of(K)) continue;
              if (!sIN[i].is_subset_of(K) && !sIN[j].is_subset_of(K)) {
                Counterexample cx;
                cx.I = ideals[i].members;
                cx.J = ideals[j].members;
                cx.K = K;
                return cx;
              }
            }
          }
        return std::nullopt;
      },
      opt);
}

// Ideal variants: an ideal is S-2-absorbing (second) iff it is so as a
// submodule of R over itself.
inline Submodule ideal_as_submodule(const Ideal& I) {
  ModulePtr reg = regular_module(I.ring);
  return Submodule{reg, I.members, I.generators};
}

inline CheckReport is_S_2_absorbing_ideal(const Ideal& I, const MulClosedSet& S,
                                          const CheckOptions& opt = {}) {
  return is_S_2_absorbing(ideal_as_submodule(I), S, opt);
}

inline CheckReport is_S_2_absorbing_second_ideal(const Ideal& I, const MulClosedSet& S,
                                                 const CheckOptions& opt = {}) {
  return is_S_2_absorbing_second(ideal_as_submodule(I), S, opt);
}

// ---- classify ----

using PredicateFn = std::function<CheckReport(const Submodule&, const MulClosedSet&,
                                              const CheckOptions&)>;

inline PredicateFn predicate_by_name(const std::string& name) {
  if (name == "prime")
    return [](const Submodule& n, const MulClosedSet&, const CheckOptions&) {
      return is_prime(n);
    };
  if (name == "second")
    return [](const Submodule& n, const MulClosedSet&, const CheckOptions&) {
      return is_second(n);
    };
  if (name == "2a" || name == "2-absorbing")
    return [](const Submodule& n, const MulClosedSet&, const CheckOptions&) {
      return is_2_absorbing(n);
    };
  if (name == "strong-2as" || name == "strongly-2-absorbing-second")
    return [](const Submodule& n, const MulClosedSet&, const CheckOptions& o) {
      return is_strongly_2_absorbing_second(n, o);
    };
  if (name == "s-prime") return is_S_prime;
  if (name == "s-second") return is_S_second;
  if (name == "s2a" || name == "s-2-absorbing") return is_S_2_absorbing;
  if (name == "s2a-colon") return is_S_2_absorbing_via_colon;
  if (name == "s2as" || name == "s-2-absorbing-second") return is_S_2_absorbing_second;
  if (name == "s2as-elements") return is_s2as_via_elements;
  if (name == "s2as-ci") return is_s2as_via_ci;
  if (name == "s2as-ideals") return is_s2as_via_ideals;
  throw ParseError("unknown predicate: " + name);
}

inline std::vector<std::pair<Submodule, CheckReport>> classify(
    ModulePtr M, const MulClosedSet& S, const std::string& predicate,
    const CheckOptions& opt = {}) {
  PredicateFn fn = predicate_by_name(predicate);
  std::vector<std::pair<Submodule, CheckReport>> out;
  for (const Submodule& n : submodule_enumerate(M, opt.lattice_cap))
    out.emplace_back(n, fn(n, S, opt));
  return out;
}

}  // namespace finmod
