#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "finmod/checkers.hpp"
#include "finmod/localize.hpp"

namespace finmod {

// One test subject: a module with a multiplicatively closed set. Product
// instances additionally carry the factor modules and factor sets so the
// product dichotomy check can relate the whole to its parts.
struct Instance {
  std::string name;
  ModulePtr M;
  MulClosedSet S;
  std::vector<ModulePtr> factor_modules;
  std::vector<MulClosedSet> factor_mcs;
  // The source literature asserts the full module here is NOT strongly
  // 2-absorbing second; check 9 compares that claim against the scan.
  bool doc_claims_not_strong = false;
};

enum class CheckStatus { Asserted, Vacuous, Skipped, Refuted, Discrepancy };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Asserted: return "pass";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Refuted: return "refuted";
    default: return "paper-discrepancy";
  }
}

struct InstanceResult {
  CheckStatus status = CheckStatus::Vacuous;
  std::string detail;
};

class Env;

struct TheoremCheck {
  std::string id;
  std::string title;
  std::function<InstanceResult(Env&)> run;
};

struct VerificationOutcome {
  std::string id;
  std::string title;
  int tested = 0;
  int asserted = 0;
  int vacuous = 0;
  int skipped = 0;
  std::vector<std::pair<std::string, std::string>> failures;       // (instance, detail)
  std::vector<std::pair<std::string, std::string>> discrepancies;  // (instance, detail)

  bool refuted() const { return !failures.empty(); }
  // hypotheses never fired on the family: the family must be extended
  bool untested() const {
    return asserted == 0 && failures.empty() && discrepancies.empty();
  }
  const char* status() const {
    if (refuted()) return "refuted";
    if (!discrepancies.empty()) return "paper-discrepancy";
    if (untested()) return "untested";
    return "pass";
  }
};

// Per-instance evaluation context with memoized predicate reports, shared
// by all checks run against the same instance.
class Env {
 public:
  Env(const Instance& instance, CheckOptions options = {})
      : inst(instance), opt(options) {}

  const Instance& inst;
  CheckOptions opt;

  const FiniteModule& M() const { return *inst.M; }
  const FiniteRing& R() const { return *inst.M->ring; }

  Submodule sub(const Bitset& b) const { return Submodule{inst.M, b, {}}; }
  Submodule rsub(const Bitset& b) { return Submodule{reg(), b, {}}; }

  const std::vector<Submodule>& subs() {
    if (!subs_) subs_ = submodule_enumerate(inst.M, opt.lattice_cap);
    return *subs_;
  }

  ModulePtr reg() {
    if (!reg_) reg_ = regular_module(inst.M->ring);
    return reg_;
  }

  const std::vector<Bitset>& ideals() {
    return ideal_lattice(inst.M->ring, opt.lattice_cap);
  }

  ModulePtr tensor(int k) {
    auto it = tensors_.find(k);
    if (it != tensors_.end()) return it->second;
    ModulePtr t = free_tensor(inst.M, k);
    tensors_[k] = t;
    return t;
  }

  const CheckReport& s2as(const Bitset& b) {
    return cached(0, b, [&] { return is_S_2_absorbing_second(sub(b), inst.S, opt); });
  }
  const CheckReport& s2as_elems(const Bitset& b) {
    return cached(1, b, [&] { return is_s2as_via_elements(sub(b), inst.S, opt); });
  }
  const CheckReport& s2as_ci(const Bitset& b) {
    return cached(2, b, [&] { return is_s2as_via_ci(sub(b), inst.S, opt); });
  }
  const CheckReport& s2as_ideals(const Bitset& b) {
    return cached(3, b, [&] { return is_s2as_via_ideals(sub(b), inst.S, opt); });
  }
  const CheckReport& s2a(const Bitset& b) {
    return cached(4, b, [&] { return is_S_2_absorbing(sub(b), inst.S, opt); });
  }
  const CheckReport& s2a_colon(const Bitset& b) {
    return cached(5, b, [&] { return is_S_2_absorbing_via_colon(sub(b), inst.S, opt); });
  }
  const CheckReport& s_second(const Bitset& b) {
    return cached(6, b, [&] { return is_S_second(sub(b), inst.S, opt); });
  }
  const CheckReport& strong(const Bitset& b) {
    return cached(7, b, [&] { return is_strongly_2_absorbing_second(sub(b), opt); });
  }
  // ideal predicates evaluated in R as a module over itself
  const CheckReport& ideal_s2a(const Bitset& b) {
    return cached(8, b, [&] { return is_S_2_absorbing(rsub(b), inst.S, opt); });
  }
  const CheckReport& ideal_s2as(const Bitset& b) {
    return cached(9, b, [&] { return is_S_2_absorbing_second(rsub(b), inst.S, opt); });
  }

  bool mult() {
    if (!mult_) mult_ = is_multiplication(inst.M, opt.lattice_cap);
    return *mult_;
  }
  bool comult() {
    if (!comult_) comult_ = is_comultiplication(inst.M, opt.lattice_cap);
    return *comult_;
  }
  bool dac() {
    if (!dac_) dac_ = has_dac(inst.M, opt.lattice_cap);
    return *dac_;
  }

  Bitset ann_bits(const Bitset& b) const {
    Bitset z(inst.M->size);
    z.set(0);
    return colon_ideal_bits(*inst.M, z, b);
  }

  Bitset full_bits() const {
    Bitset f(inst.M->size);
    for (int i = 0; i < inst.M->size; ++i) f.set(i);
    return f;
  }

  std::string sub_name(const Bitset& b) const {
    std::ostringstream os;
    os << "{";
    auto idx = b.indices();
    for (std::size_t i = 0; i < idx.size() && i < 8; ++i) {
      if (i) os << ",";
      os << inst.M->name(idx[i]);
    }
    if (idx.size() > 8) os << ",...(" << idx.size() << ")";
    os << "}";
    return os.str();
  }

  std::string ideal_name(const Bitset& b) const {
    std::ostringstream os;
    os << "{";
    auto idx = b.indices();
    for (std::size_t i = 0; i < idx.size() && i < 8; ++i) {
      if (i) os << ",";
      os << inst.M->ring->name(idx[i]);
    }
    if (idx.size() > 8) os << ",...(" << idx.size() << ")";
    os << "}";
    return os.str();
  }

 private:
  template <typename F>
  const CheckReport& cached(int slot, const Bitset& b, F&& f) {
    auto it = memo_[slot].find(b);
    if (it != memo_[slot].end()) return it->second;
    return memo_[slot].emplace(b, f()).first->second;
  }

  std::map<Bitset, CheckReport> memo_[10];
  std::optional<std::vector<Submodule>> subs_;
  ModulePtr reg_;
  std::map<int, ModulePtr> tensors_;
  std::optional<bool> mult_, comult_, dac_;
};

namespace detail {

// Aggregates sub-assertions of one check against one instance.
struct Tally {
  int fired = 0;
  std::string fail_detail;
  std::string disc_detail;

  void fire() { ++fired; }
  void fail(const std::string& d) {
    if (fail_detail.empty()) fail_detail = d;
  }
  void discrepancy(const std::string& d) {
    if (disc_detail.empty()) disc_detail = d;
  }
  bool failed() const { return !fail_detail.empty(); }
  InstanceResult done() const {
    if (!fail_detail.empty()) return {CheckStatus::Refuted, fail_detail};
    if (!disc_detail.empty()) return {CheckStatus::Discrepancy, disc_detail};
    if (fired == 0) return {CheckStatus::Vacuous, ""};
    return {CheckStatus::Asserted, ""};
  }
};

inline std::vector<Bitset> rn_table(const FiniteModule& M, const Bitset& n) {
  std::vector<Bitset> rn;
  rn.reserve(M.ring->order);
  for (int r = 0; r < M.ring->order; ++r) rn.push_back(scale_elem_bits(M, r, n));
  return rn;
}

}  // namespace detail

// ---- the registry ----

// 1. The colon-identity characterization of S-2-absorbing agrees with the
// definitional scan on every submodule (verdicts match three-valued).
inline InstanceResult chk_colon_agrees(Env& e) {
  detail::Tally t;
  for (const Submodule& n : e.subs()) {
    const CheckReport& a = e.s2a(n.members);
    const CheckReport& c = e.s2a_colon(n.members);
    if (a.verdict != c.verdict)
      t.fail("N=" + e.sub_name(n.members) + ": definitional " +
             to_string(a.verdict) + " vs colon " + to_string(c.verdict));
    else if (a.verdict != Verdict::PreconditionFailed)
      t.fire();
  }
  return t.done();
}

// 2. Colon commutes with k-th powers: (N :_M r)^k = (N^k :_{M^k} r).
inline InstanceResult chk_free_colon(Env& e) {
  detail::Tally t;
  for (int k = 2; k <= 3; ++k) {
    long long sz = 1;
    for (int i = 0; i < k; ++i) sz *= e.M().size;
    if (sz > 1024 || sz < 2) continue;
    ModulePtr mk = e.tensor(k);
    for (const Submodule& n : e.subs()) {
      Bitset nk = power_submodule(n, mk, k).members;
      for (int r = 0; r < e.R().order; ++r) {
        Bitset lhs = power_submodule(colon_into(n, r), mk, k).members;
        Bitset rhs = colon_into_bits(*mk, nk, r);
        if (!(lhs == rhs)) {
          t.fail("k=" + std::to_string(k) + ", N=" + e.sub_name(n.members) +
                 ", r=" + e.R().name(r));
          return t.done();
        }
        t.fire();
      }
    }
  }
  return t.done();
}

// 3. S-2-absorbing is preserved and reflected by N -> N^k inside M^k.
inline InstanceResult chk_free_2abs(Env& e) {
  detail::Tally t;
  for (int k = 1; k <= 3; ++k) {
    long long sz = 1;
    for (int i = 0; i < k; ++i) sz *= e.M().size;
    if (sz > 256 || sz < 2) continue;
    ModulePtr mk = e.tensor(k);
    for (const Submodule& n : e.subs()) {
      const CheckReport& base = e.s2a(n.members);
      CheckReport lifted = is_S_2_absorbing(power_submodule(n, mk, k), e.inst.S, e.opt);
      if (lifted.verdict != base.verdict)
        t.fail("k=" + std::to_string(k) + ", N=" + e.sub_name(n.members) + ": " +
               to_string(base.verdict) + " vs " + to_string(lifted.verdict));
      else if (base.verdict != Verdict::PreconditionFailed)
        t.fire();
    }
  }
  return t.done();
}

// 4. For an S-2-absorbing N there is one s with (N:_M th) inside (N:_M ts)
// or (N:_M sh), and likewise for the colon ideal, for all t, h in S.
inline InstanceResult chk_colon_dichotomy(Env& e) {
  detail::Tally t;
  const FiniteModule& M = e.M();
  const FiniteRing& R = e.R();
  auto svals = e.inst.S.elements();
  for (const Submodule& n : e.subs()) {
    const CheckReport& rep = e.s2a(n.members);
    if (!rep.ok()) continue;
    std::vector<Bitset> cn(R.order);
    for (int x = 0; x < R.order; ++x) cn[x] = colon_into_bits(M, n.members, x);
    Bitset cm = colon_ideal_bits(M, n.members, e.full_bits());
    auto rc = [&](int x) {
      Bitset b(R.order);
      for (int r = 0; r < R.order; ++r)
        if (cm.test(R.mul(r, x))) b.set(r);
      return b;
    };
    auto holds = [&](int s) {
      for (int tt : svals)
        for (int h : svals) {
          int th = R.mul(tt, h);
          if (!cn[th].is_subset_of(cn[R.mul(tt, s)]) &&
              !cn[th].is_subset_of(cn[R.mul(s, h)]))
            return false;
          if (!rc(th).is_subset_of(rc(R.mul(tt, s))) &&
              !rc(th).is_subset_of(rc(R.mul(s, h))))
            return false;
        }
      return true;
    };
    bool found = holds(*rep.witness_s);
    for (std::size_t i = 0; !found && i < svals.size(); ++i) found = holds(svals[i]);
    if (found)
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": no s satisfies the dichotomy");
  }
  return t.done();
}

// 5. The radical of an S-2-absorbing ideal is S-2-absorbing, and some fixed
// s has s*a^2 in I for every a in the radical.
inline InstanceResult chk_radical_ideal(Env& e) {
  detail::Tally t;
  const FiniteRing& R = e.R();
  for (const Bitset& ib : e.ideals()) {
    if (!e.ideal_s2a(ib).ok()) continue;
    Ideal I{e.inst.M->ring, ib, ib.indices()};
    Bitset rad_bits = ideal_radical(I).members;
    if (!e.ideal_s2a(rad_bits).ok()) {
      t.fail("I=" + e.ideal_name(ib) + ": radical not S-2-absorbing");
      continue;
    }
    bool found = false;
    for (int s : e.inst.S.elements()) {
      bool all = true;
      for (int a : rad_bits.indices())
        if (!ib.test(R.mul(s, R.mul(a, a)))) {
          all = false;
          break;
        }
      if (all) {
        found = true;
        break;
      }
    }
    if (found)
      t.fire();
    else
      t.fail("I=" + e.ideal_name(ib) + ": no s with s*a^2 in I on the radical");
  }
  return t.done();
}

// 6. In a multiplication module the radical of an S-2-absorbing submodule
// is S-2-absorbing.
inline InstanceResult chk_mult_rad(Env& e) {
  detail::Tally t;
  if (!e.mult()) return t.done();
  for (const Submodule& n : e.subs()) {
    if (n.is_full() || !e.s2a(n.members).ok()) continue;
    Bitset r = rad(n, e.opt.lattice_cap).members;
    if (e.s2a(r).ok())
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": rad(N)=" + e.sub_name(r) +
             " not S-2-absorbing");
  }
  return t.done();
}

// 7. Ideal-shaped conclusions for an S-2-absorbing-second N: the two-ideal
// characterization holds, and so does the single-ideal form
// IaN in K => saN in K or sIN in K or Ias in Ann(N).
inline InstanceResult chk_ideal_form(Env& e) {
  detail::Tally t;
  const FiniteModule& M = e.M();
  const FiniteRing& R = e.R();
  for (const Submodule& n : e.subs()) {
    if (!e.s2as(n.members).ok()) continue;
    if (!e.s2as_ideals(n.members).ok()) {
      t.fail("N=" + e.sub_name(n.members) + ": two-ideal form fails");
      continue;
    }
    auto rn = detail::rn_table(M, n.members);
    Bitset ann = e.ann_bits(n.members);
    const auto& ids = e.ideals();
    std::vector<Bitset> in(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      in[i] = scale_ideal_bits(M, ids[i], n.members);
    bool found = false;
    for (int s : e.inst.S.elements()) {
      bool all = true;
      for (int a = 0; a < R.order && all; ++a) {
        int sa = R.mul(s, a);
        for (std::size_t i = 0; i < ids.size() && all; ++i) {
          Bitset ian = scale_elem_bits(M, a, in[i]);
          Bitset sin = scale_elem_bits(M, s, in[i]);
          bool kills = true;
          for (int x : ids[i].indices())
            if (!ann.test(R.mul(x, sa))) {
              kills = false;
              break;
            }
          if (kills) continue;
          for (const Submodule& k : e.subs())
            if (ian.is_subset_of(k.members) && !rn[sa].is_subset_of(k.members) &&
                !sin.is_subset_of(k.members)) {
              all = false;
              break;
            }
        }
      }
      if (all) {
        found = true;
        break;
      }
    }
    if (found)
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": single-ideal form fails for all s");
  }
  return t.done();
}

// 8. The four S-2-absorbing-second characterizations agree in verdict.
inline InstanceResult chk_four_equiv(Env& e) {
  detail::Tally t;
  for (const Submodule& n : e.subs()) {
    const CheckReport& a = e.s2as(n.members);
    const CheckReport& b = e.s2as_elems(n.members);
    const CheckReport& c = e.s2as_ci(n.members);
    const CheckReport& d = e.s2as_ideals(n.members);
    if (a.verdict != b.verdict || a.verdict != c.verdict || a.verdict != d.verdict)
      t.fail("N=" + e.sub_name(n.members) + ": " + to_string(a.verdict) + "/" +
             to_string(b.verdict) + "/" + to_string(c.verdict) + "/" +
             to_string(d.verdict));
    else if (a.verdict != Verdict::PreconditionFailed)
      t.fire();
  }
  return t.done();
}

// 9. Strongly 2-absorbing second with empty S-annihilator overlap implies
// S-2-absorbing second; when S consists of units, the converse. Also
// cross-examines the documented claim on flagged instances.
inline InstanceResult chk_strong_vs_s(Env& e) {
  detail::Tally t;
  Bitset units = ring_units(e.R());
  bool s_units = e.inst.S.members.is_subset_of(units);
  Bitset full = e.full_bits();
  for (const Submodule& n : e.subs()) {
    if (n.is_zero()) continue;
    const CheckReport& st = e.strong(n.members);
    const CheckReport& s2 = e.s2as(n.members);
    if (st.ok() && s2.verdict != Verdict::PreconditionFailed) {
      if (s2.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) + ": strong but not S-2-absorbing-second");
    }
    if (s_units && s2.ok()) {
      if (st.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) +
               ": S-2-absorbing-second with unit S but not strong");
    }
    if (e.inst.doc_claims_not_strong && n.members == full && st.ok())
      t.discrepancy(
          "scan finds the full module strongly 2-absorbing second, "
          "contradicting the documented claim");
  }
  return t.done();
}

// 10. Monotone in S: true for a sub-m.c.s. implies true for S when the
// annihilator guard still holds.
inline InstanceResult chk_monotone(Env& e) {
  detail::Tally t;
  std::set<Bitset> seen;
  std::vector<MulClosedSet> smaller;
  for (int x : e.inst.S.elements()) {
    if (smaller.size() >= 4) break;
    try {
      MulClosedSet s1 = mcs_closure(e.inst.M->ring, {x});
      if (s1.members == e.inst.S.members) continue;
      if (!s1.members.is_subset_of(e.inst.S.members)) continue;
      if (seen.insert(s1.members).second) smaller.push_back(s1);
    } catch (const InvalidMCS&) {
      continue;  // seed generates 0 (possible when S itself contains 0)
    }
  }
  for (const MulClosedSet& s1 : smaller)
    for (const Submodule& n : e.subs()) {
      CheckReport r1 = is_S_2_absorbing_second(n, s1, e.opt);
      if (!r1.ok()) continue;
      const CheckReport& r2 = e.s2as(n.members);
      if (r2.verdict == Verdict::PreconditionFailed) continue;  // guard hypothesis
      if (r2.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) + ": true for sub-m.c.s. but false for S");
    }
  return t.done();
}

// 11. Verdicts are invariant under saturation of S.
inline InstanceResult chk_saturation(Env& e) {
  detail::Tally t;
  if (e.inst.S.contains_zero()) return t.done();
  MulClosedSet star = saturate(e.inst.S);
  for (const Submodule& n : e.subs()) {
    CheckReport rs = is_S_2_absorbing_second(n, star, e.opt);
    const CheckReport& r = e.s2as(n.members);
    if (r.verdict != rs.verdict)
      t.fail("N=" + e.sub_name(n.members) + ": S " + to_string(r.verdict) +
             " vs S* " + to_string(rs.verdict));
    else if (r.verdict != Verdict::PreconditionFailed || rs.verdict != r.verdict)
      t.fire();
  }
  return t.done();
}

// 12. The localization of an S-2-absorbing-second submodule is strongly
// 2-absorbing second in the localized module.
inline InstanceResult chk_localized_strong(Env& e) {
  detail::Tally t;
  if (e.inst.S.contains_zero()) return t.done();
  std::optional<LocalizedModule> lm;
  for (const Submodule& n : e.subs()) {
    if (!e.s2as(n.members).ok()) continue;
    if (!lm) lm = localize_module(e.inst.M, e.inst.S);
    Submodule ln = localize_submodule(*lm, n);
    if (is_strongly_2_absorbing_second(ln, e.opt).ok())
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": localized image not strong");
  }
  return t.done();
}

// 13. N is S-2-absorbing second iff s^3 N is nonzero and strongly
// 2-absorbing second for some s in S.
inline InstanceResult chk_cube_scaling(Env& e) {
  detail::Tally t;
  const FiniteRing& R = e.R();
  for (const Submodule& n : e.subs()) {
    const CheckReport& r = e.s2as(n.members);
    if (r.verdict == Verdict::PreconditionFailed) continue;
    bool rhs = false;
    for (int s : e.inst.S.elements()) {
      int s3 = R.mul(s, R.mul(s, s));
      Bitset p = scale_elem_bits(e.M(), s3, n.members);
      if (p.count() > 1 && e.strong(p).ok()) {
        rhs = true;
        break;
      }
    }
    if (r.ok() == rhs)
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": definitional " +
             std::string(r.ok() ? "true" : "false") + " but cube-scaled strong " +
             (rhs ? "true" : "false"));
  }
  return t.done();
}

// 14. Quotients: K S-2-absorbing second and N strictly below K give an
// S-2-absorbing-second K/N in M/N (skipping quotients whose annihilator
// meets S, where the property is undefined).
inline InstanceResult chk_quotient(Env& e) {
  detail::Tally t;
  for (const Submodule& n : e.subs()) {
    std::vector<const Submodule*> above;
    for (const Submodule& k : e.subs())
      if (n.members.is_subset_of(k.members) && !(n.members == k.members) &&
          e.s2as(k.members).ok())
        above.push_back(&k);
    if (above.empty()) continue;
    QuotientModule q = quotient_module(e.inst.M, n);
    for (const Submodule* k : above) {
      Bitset img(q.module->size);
      for (int x : k->members.indices()) img.set(q.proj[x]);
      CheckReport r = is_S_2_absorbing_second(Submodule{q.module, img, {}}, e.inst.S, e.opt);
      if (r.verdict == Verdict::PreconditionFailed) continue;
      if (r.ok())
        t.fire();
      else
        t.fail("K=" + e.sub_name(k->members) + ", N=" + e.sub_name(n.members) +
               ": K/N not S-2-absorbing-second");
    }
  }
  return t.done();
}

// 15. For an S-2-absorbing-second N: Ann(N) is an S-2-absorbing ideal;
// (K : N) is one whenever it misses S; and the witness has s^3 N = s^4 N.
inline InstanceResult chk_ann_colon(Env& e) {
  detail::Tally t;
  const FiniteModule& M = e.M();
  const FiniteRing& R = e.R();
  for (const Submodule& n : e.subs()) {
    const CheckReport& r = e.s2as(n.members);
    if (!r.ok()) continue;
    Bitset ann = e.ann_bits(n.members);
    if (!e.ideal_s2a(ann).ok()) {
      t.fail("N=" + e.sub_name(n.members) + ": Ann(N) not S-2-absorbing");
      continue;
    }
    t.fire();
    for (const Submodule& k : e.subs()) {
      Bitset c = colon_ideal_bits(M, k.members, n.members);
      if (c.intersects(e.inst.S.members)) continue;
      if (e.ideal_s2a(c).ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) + ", K=" + e.sub_name(k.members) +
               ": (K:N) not S-2-absorbing");
    }
    int s = *r.witness_s;
    int s3 = R.mul(s, R.mul(s, s));
    int s4 = R.mul(s3, s);
    if (scale_elem_bits(M, s3, n.members) == scale_elem_bits(M, s4, n.members))
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": s^3 N != s^4 N for witness s=" +
             R.name(s));
  }
  return t.done();
}

// 16. Scaled containment dichotomy: some s has tsN in thN or hsN in thN
// for all t, h in S, and the matching annihilator-colon containments.
inline InstanceResult chk_scaled_dichotomy(Env& e) {
  detail::Tally t;
  const FiniteModule& M = e.M();
  const FiniteRing& R = e.R();
  auto svals = e.inst.S.elements();
  for (const Submodule& n : e.subs()) {
    const CheckReport& rep = e.s2as(n.members);
    if (!rep.ok()) continue;
    auto rn = detail::rn_table(M, n.members);
    Bitset ann = e.ann_bits(n.members);
    auto ac = [&](int x) {
      Bitset b(R.order);
      for (int r = 0; r < R.order; ++r)
        if (ann.test(R.mul(r, x))) b.set(r);
      return b;
    };
    auto holds = [&](int s) {
      for (int tt : svals)
        for (int h : svals) {
          int th = R.mul(tt, h);
          if (!rn[R.mul(tt, s)].is_subset_of(rn[th]) &&
              !rn[R.mul(h, s)].is_subset_of(rn[th]))
            return false;
          if (!ac(th).is_subset_of(ac(R.mul(tt, s))) &&
              !ac(th).is_subset_of(ac(R.mul(s, h))))
            return false;
        }
      return true;
    };
    bool found = holds(*rep.witness_s);
    for (std::size_t i = 0; !found && i < svals.size(); ++i) found = holds(svals[i]);
    if (found)
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": no s satisfies the scaled dichotomy");
  }
  return t.done();
}

// 17. Comultiplication transfer: Ann(N) S-2-absorbing forces N
// S-2-absorbing second; if additionally the zero submodule is
// S-2-absorbing, every guard-satisfying N qualifies.
inline InstanceResult chk_comult_ann(Env& e) {
  detail::Tally t;
  if (!e.comult()) return t.done();
  Bitset zero(e.M().size);
  zero.set(0);
  bool zero_2abs = e.s2a(zero).ok();
  for (const Submodule& n : e.subs()) {
    const CheckReport& r = e.s2as(n.members);
    if (r.verdict == Verdict::PreconditionFailed) continue;
    if (e.ideal_s2a(e.ann_bits(n.members)).ok()) {
      if (r.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) +
               ": Ann S-2-absorbing but N not S-2-absorbing-second");
    }
    if (zero_2abs) {
      if (r.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) +
               ": zero submodule S-2-absorbing but N not S-2-absorbing-second");
    }
  }
  return t.done();
}

// 18. Multiplication transfer: if M itself is S-2-absorbing second, every
// submodule with (N:M) missing S is S-2-absorbing.
inline InstanceResult chk_mult_transfer(Env& e) {
  detail::Tally t;
  if (!e.mult()) return t.done();
  if (!e.s2as(e.full_bits()).ok()) return t.done();
  for (const Submodule& n : e.subs()) {
    const CheckReport& r = e.s2a(n.members);
    if (r.verdict == Verdict::PreconditionFailed) continue;
    if (r.ok())
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": not S-2-absorbing");
  }
  return t.done();
}

// 19. Over a comultiplication module with the dual annihilator condition,
// three statements agree: N is S-2-absorbing second, Ann(N) is an
// S-2-absorbing ideal, and N = (0 :_M I) for some S-2-absorbing ideal I.
inline InstanceResult chk_comult_dac(Env& e) {
  detail::Tally t;
  if (!e.comult() || !e.dac()) return t.done();
  Submodule zero = zero_submodule(e.inst.M);
  for (const Submodule& n : e.subs()) {
    const CheckReport& r = e.s2as(n.members);
    if (r.verdict == Verdict::PreconditionFailed) continue;
    bool a = r.ok();
    bool b = e.ideal_s2a(e.ann_bits(n.members)).ok();
    bool c = false;
    for (const Bitset& ib : e.ideals()) {
      if (!e.ideal_s2a(ib).ok()) continue;
      Ideal I{e.inst.M->ring, ib, ib.indices()};
      if (colon_into(zero, I).members == n.members) {
        c = true;
        break;
      }
    }
    if (a == b && b == c)
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": equivalence broken (" +
             std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
             ")");
  }
  return t.done();
}

// 20. Derived two-element property of S-second submodules:
// abN in K => sa in Ann(N) or sb in Ann(N) or sN in K.
inline InstanceResult chk_s_second_two(Env& e) {
  detail::Tally t;
  const FiniteModule& M = e.M();
  const FiniteRing& R = e.R();
  for (const Submodule& n : e.subs()) {
    if (!e.s_second(n.members).ok()) continue;
    auto rn = detail::rn_table(M, n.members);
    Bitset ann = e.ann_bits(n.members);
    bool found = false;
    for (int s : e.inst.S.elements()) {
      bool all = true;
      for (int a = 0; a < R.order && all; ++a) {
        if (ann.test(R.mul(s, a))) continue;
        for (int b = a; b < R.order && all; ++b) {
          if (ann.test(R.mul(s, b))) continue;
          int ab = R.mul(a, b);
          for (const Submodule& k : e.subs())
            if (rn[ab].is_subset_of(k.members) && !rn[s].is_subset_of(k.members)) {
              all = false;
              break;
            }
        }
      }
      if (all) {
        found = true;
        break;
      }
    }
    if (found)
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": derived property fails for all s");
  }
  return t.done();
}

// 21. The sum of two S-second submodules is S-2-absorbing second.
inline InstanceResult chk_sum_seconds(Env& e) {
  detail::Tally t;
  std::vector<const Submodule*> seconds;
  for (const Submodule& n : e.subs())
    if (e.s_second(n.members).ok()) seconds.push_back(&n);
  for (std::size_t i = 0; i < seconds.size(); ++i)
    for (std::size_t j = i; j < seconds.size(); ++j) {
      Bitset sum = sub_sum_bits(e.M(), seconds[i]->members, seconds[j]->members);
      if (e.s2as(sum).ok())
        t.fire();
      else
        t.fail("N1=" + e.sub_name(seconds[i]->members) + ", N2=" +
               e.sub_name(seconds[j]->members) + ": sum not S-2-absorbing-second");
    }
  return t.done();
}

// 22. Idealization: for an ideal I inside Ann(M) missing S, the verdicts
// of I over R, I(+)0 over R(+)M with S(+)0, and with S(+)M all agree; the
// strong variant matches between I and I(+)0 as well.
inline InstanceResult chk_idealization(Env& e) {
  detail::Tally t;
  if (e.inst.S.contains_zero()) return t.done();
  long long ord = static_cast<long long>(e.R().order) * e.M().size;
  if (ord > 64) return {CheckStatus::Skipped, "idealization ring order > 64"};
  Ring rm = make_idealization(e.inst.M->ring, e.inst.M);
  MulClosedSet s0 = idealization_mcs(rm, e.inst.S, false);
  MulClosedSet sm = idealization_mcs(rm, e.inst.S, true);
  ModulePtr reg_rm = regular_module(rm);
  Bitset ann_m = e.ann_bits(e.full_bits());
  int ms = e.M().size;
  for (const Bitset& ib : e.ideals()) {
    if (!ib.is_subset_of(ann_m)) continue;
    if (ib.intersects(e.inst.S.members)) continue;
    Bitset lifted(rm->order);
    for (int x : ib.indices()) lifted.set(x * ms);
    const CheckReport& a = e.ideal_s2as(ib);
    CheckReport b = is_S_2_absorbing_second(Submodule{reg_rm, lifted, {}}, s0, e.opt);
    CheckReport c = is_S_2_absorbing_second(Submodule{reg_rm, lifted, {}}, sm, e.opt);
    if (a.verdict != b.verdict || a.verdict != c.verdict) {
      t.fail("I=" + e.ideal_name(ib) + ": verdicts " + to_string(a.verdict) + "/" +
             to_string(b.verdict) + "/" + to_string(c.verdict));
      continue;
    }
    CheckReport sa = is_strongly_2_absorbing_second(e.rsub(ib), e.opt);
    CheckReport sb =
        is_strongly_2_absorbing_second(Submodule{reg_rm, lifted, {}}, e.opt);
    if (sa.verdict != sb.verdict) {
      t.fail("I=" + e.ideal_name(ib) + ": strong verdicts differ");
      continue;
    }
    if (a.verdict != Verdict::PreconditionFailed ||
        sa.verdict != Verdict::PreconditionFailed)
      t.fire();
  }
  return t.done();
}

// 23. Product dichotomy: a product submodule is S-2-absorbing second iff
// one factor is and all other factors' annihilators meet their sets, or
// two factors are S-second and the remaining annihilators meet their sets.
inline InstanceResult chk_product(Env& e) {
  detail::Tally t;
  std::size_t nf = e.inst.factor_modules.size();
  if (nf < 2) return t.done();
  std::vector<std::vector<Bitset>> lats(nf);
  std::vector<int> sizes;
  for (std::size_t k = 0; k < nf; ++k) {
    lats[k] = submodule_lattice(*e.inst.factor_modules[k], e.opt.lattice_cap);
    sizes.push_back(e.inst.factor_modules[k]->size);
  }
  std::vector<std::map<Bitset, CheckReport>> m_s2as(nf), m_sec(nf);
  auto factor_s2as = [&](std::size_t k, const Bitset& b) -> const CheckReport& {
    auto it = m_s2as[k].find(b);
    if (it != m_s2as[k].end()) return it->second;
    CheckReport r = is_S_2_absorbing_second(
        Submodule{e.inst.factor_modules[k], b, {}}, e.inst.factor_mcs[k], e.opt);
    return m_s2as[k].emplace(b, std::move(r)).first->second;
  };
  auto factor_sec = [&](std::size_t k, const Bitset& b) -> const CheckReport& {
    auto it = m_sec[k].find(b);
    if (it != m_sec[k].end()) return it->second;
    CheckReport r = is_S_second(Submodule{e.inst.factor_modules[k], b, {}},
                                e.inst.factor_mcs[k], e.opt);
    return m_sec[k].emplace(b, std::move(r)).first->second;
  };
  std::vector<std::size_t> pick(nf, 0);
  for (;;) {
    // assemble the product submodule from the picked factor submodules
    Bitset nb(e.M().size);
    for (int i = 0; i < e.M().size; ++i) {
      auto c = detail::mixed_radix_decode(sizes, i);
      bool in = true;
      for (std::size_t k = 0; k < nf; ++k)
        if (!lats[k][pick[k]].test(c[k])) {
          in = false;
          break;
        }
      if (in) nb.set(i);
    }
    bool lhs = e.s2as(nb).ok();
    // guard fails for factor k iff its own check is precondition-failed
    auto guard_fails = [&](std::size_t k) {
      return factor_s2as(k, lats[k][pick[k]]).verdict == Verdict::PreconditionFailed;
    };
    bool rhs = false;
    for (std::size_t k = 0; k < nf && !rhs; ++k) {
      if (!factor_s2as(k, lats[k][pick[k]]).ok()) continue;
      bool others = true;
      for (std::size_t u = 0; u < nf; ++u)
        if (u != k && !guard_fails(u)) others = false;
      rhs = others;
    }
    for (std::size_t k1 = 0; k1 < nf && !rhs; ++k1)
      for (std::size_t k2 = k1 + 1; k2 < nf && !rhs; ++k2) {
        if (!factor_sec(k1, lats[k1][pick[k1]]).ok()) continue;
        if (!factor_sec(k2, lats[k2][pick[k2]]).ok()) continue;
        bool others = true;
        for (std::size_t u = 0; u < nf; ++u)
          if (u != k1 && u != k2 && !guard_fails(u)) others = false;
        rhs = others;
      }
    if (lhs == rhs)
      t.fire();
    else
      t.fail("N=" + e.sub_name(nb) + ": product verdict " +
             std::string(lhs ? "true" : "false") + " but factor dichotomy " +
             (rhs ? "true" : "false"));
    // next tuple
    std::size_t k = 0;
    while (k < nf && ++pick[k] == lats[k].size()) pick[k++] = 0;
    if (k == nf) break;
  }
  return t.done();
}

// 24. In a comultiplication module, sec(N) of an S-2-absorbing-second N is
// again S-2-absorbing second.
inline InstanceResult chk_sec(Env& e) {
  detail::Tally t;
  if (!e.comult()) return t.done();
  for (const Submodule& n : e.subs()) {
    if (!e.s2as(n.members).ok()) continue;
    Bitset sb = sec(n, e.opt.lattice_cap).members;
    if (e.s2as(sb).ok())
      t.fire();
    else
      t.fail("N=" + e.sub_name(n.members) + ": sec(N)=" + e.sub_name(sb) +
             " not S-2-absorbing-second");
  }
  return t.done();
}

// 25. Monomorphisms: the image of an S-2-absorbing-second submodule under
// the inclusion M -> M + M is one, and preimages of such submodules of
// the target contained in the image are too.
inline InstanceResult chk_mono(Env& e) {
  detail::Tally t;
  long long sq = static_cast<long long>(e.M().size) * e.M().size;
  if (sq > 256) return {CheckStatus::Skipped, "doubled module order > 256"};
  ModulePtr sum = direct_sum(e.inst.M, e.inst.M);
  ModuleMap f = inclusion_map({e.inst.M, e.inst.M}, sum, 0);
  std::map<Bitset, CheckReport> memo;
  auto target = [&](const Bitset& b) -> const CheckReport& {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    CheckReport r = is_S_2_absorbing_second(Submodule{sum, b, {}}, e.inst.S, e.opt);
    return memo.emplace(b, std::move(r)).first->second;
  };
  for (const Submodule& n : e.subs()) {
    Bitset img = map_image(f, n).members;
    const CheckReport& down = e.s2as(n.members);
    const CheckReport& up = target(img);
    if (down.ok()) {
      if (up.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) + ": image not S-2-absorbing-second");
    }
    if (up.ok()) {
      if (down.ok())
        t.fire();
      else
        t.fail("N=" + e.sub_name(n.members) +
               ": image S-2-absorbing-second but preimage is not");
    }
  }
  return t.done();
}

inline std::vector<TheoremCheck> builtin_checks() {
  return {
      {"colon-characterization", "colon identities match the definitional scan",
       chk_colon_agrees},
      {"free-power-colon", "colon commutes with diagonal powers", chk_free_colon},
      {"free-power-2abs", "S-2-absorbing preserved/reflected by powers",
       chk_free_2abs},
      {"colon-dichotomy", "colon containment dichotomy over S", chk_colon_dichotomy},
      {"radical-ideal", "radical of an S-2-absorbing ideal", chk_radical_ideal},
      {"mult-radical", "radical transfer in multiplication modules", chk_mult_rad},
      {"ideal-form", "ideal-shaped conclusions for S-2-absorbing-second",
       chk_ideal_form},
      {"four-equivalences", "four characterizations agree", chk_four_equiv},
      {"strong-vs-s", "strong implies S-flavored; converse over units",
       chk_strong_vs_s},
      {"s-monotone", "monotone in the multiplicative set", chk_monotone},
      {"saturation", "verdict invariant under saturation", chk_saturation},
      {"localized-strong", "localizations are strongly 2-absorbing second",
       chk_localized_strong},
      {"cube-scaling", "equivalence with strong property of s^3 N",
       chk_cube_scaling},
      {"quotient", "quotients of S-2-absorbing-second submodules", chk_quotient},
      {"ann-colon-ideals", "annihilator and colon ideals; stabilized powers",
       chk_ann_colon},
      {"scaled-dichotomy", "scaled containment dichotomy over S",
       chk_scaled_dichotomy},
      {"comult-ann-lift", "annihilator lift in comultiplication modules",
       chk_comult_ann},
      {"mult-transfer", "transfer in multiplication modules", chk_mult_transfer},
      {"comult-dac-equiv", "three-way equivalence under comultiplication + DAC",
       chk_comult_dac},
      {"s-second-two-element", "derived two-element property of S-second",
       chk_s_second_two},
      {"sum-of-seconds", "sums of two S-second submodules", chk_sum_seconds},
      {"idealization", "idealization transfer for ideals inside Ann(M)",
       chk_idealization},
      {"product-dichotomy", "product modules against factor verdicts", chk_product},
      {"sec-closure", "sec() of S-2-absorbing-second submodules", chk_sec},
      {"mono-image", "images and preimages under inclusions", chk_mono},
  };
}

// ---- execution ----

inline VerificationOutcome& outcome_for(std::vector<VerificationOutcome>& out,
                                        std::size_t i, const TheoremCheck& c) {
  out[i].id = c.id;
  out[i].title = c.title;
  return out[i];
}

inline std::vector<VerificationOutcome> run_registry(
    const std::vector<TheoremCheck>& checks, const std::vector<Instance>& instances,
    const CheckOptions& opt = {}) {
  std::vector<VerificationOutcome> out(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) outcome_for(out, i, checks[i]);
  for (const Instance& inst : instances) {
    Env env(inst, opt);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      InstanceResult r;
      try {
        r = checks[i].run(env);
      } catch (const CapExceeded& ex) {
        r = {CheckStatus::Skipped, ex.what()};
      }
      VerificationOutcome& o = out[i];
      ++o.tested;
      switch (r.status) {
        case CheckStatus::Asserted: ++o.asserted; break;
        case CheckStatus::Vacuous: ++o.vacuous; break;
        case CheckStatus::Skipped: ++o.skipped; break;
        case CheckStatus::Refuted: o.failures.emplace_back(inst.name, r.detail); break;
        case CheckStatus::Discrepancy:
          ++o.asserted;
          o.discrepancies.emplace_back(inst.name, r.detail);
          break;
      }
    }
  }
  return out;
}

inline VerificationOutcome verify(const TheoremCheck& check,
                                  const std::vector<Instance>& instances,
                                  const CheckOptions& opt = {}) {
  return run_registry({check}, instances, opt)[0];
}

// ---- instance families ----

namespace detail {

inline std::string set_label(const FiniteRing& R, const Bitset& b) {
  std::ostringstream os;
  os << "S{";
  auto idx = b.indices();
  for (std::size_t i = 0; i < idx.size() && i < 8; ++i) {
    if (i) os << ",";
    os << R.name(idx[i]);
  }
  if (idx.size() > 8) os << ",...";
  os << "}";
  if (idx.size() > 8) os << "#" << idx.size();
  return os.str();
}

inline std::vector<std::pair<std::string, MulClosedSet>> seeded_mcs_list(Ring ring) {
  std::set<Bitset> seen;
  std::vector<std::pair<std::string, MulClosedSet>> out;
  auto add = [&](const std::vector<int>& seeds) {
    try {
      MulClosedSet s = mcs_closure(ring, seeds);
      if (seen.insert(s.members).second)
        out.emplace_back(set_label(*ring, s.members), s);
    } catch (const InvalidMCS&) {
    }
  };
  add({});
  for (int x = 1; x < ring->order; ++x) add({x});
  for (int x = 1; x < ring->order; ++x)
    for (int y = x + 1; y < ring->order; ++y) add({x, y});
  return out;
}

inline std::vector<std::pair<std::string, ModulePtr>> module_list(Ring ring, int n) {
  std::vector<std::pair<std::string, ModulePtr>> mods;
  mods.emplace_back("Z" + std::to_string(n), make_natural_module(ring, {n}));
  for (int d = 2; d < n; ++d)
    if (n % d == 0)
      mods.emplace_back("Z" + std::to_string(d), make_natural_module(ring, {d}));
  for (int d1 = 2; d1 <= n; ++d1) {
    if (n % d1) continue;
    for (int d2 = d1; d2 <= n; ++d2) {
      if (n % d2 || d1 * d2 > 72) continue;
      mods.emplace_back("Z" + std::to_string(d1) + "+Z" + std::to_string(d2),
                        make_natural_module(ring, {d1, d2}));
    }
  }
  return mods;
}

}  // namespace detail

// The default family: cyclic base rings with all small seeded m.c.s.,
// residue-set instances for integer-style bases, and a few product rings.
inline std::vector<Instance> build_default_family() {
  std::vector<Instance> fam;
  auto push = [&](const std::string& rname, const std::string& mname,
                  const std::string& sname, ModulePtr M, MulClosedSet S) {
    fam.push_back(Instance{rname + "/" + mname + "/" + sname, M, S, {}, {}, false});
  };

  std::map<int, Ring> rings;
  auto zn = [&](int n) {
    auto it = rings.find(n);
    if (it != rings.end()) return it->second;
    Ring r = make_zn(n);
    rings[n] = r;
    return r;
  };

  for (int n : {2, 3, 4, 6, 8, 9, 12, 16}) {
    Ring R = zn(n);
    auto mcss = detail::seeded_mcs_list(R);
    auto mods = detail::module_list(R, n);
    for (auto& [mname, M] : mods)
      for (auto& [sname, S] : mcss)
        push("Z" + std::to_string(n), mname, sname, M, S);
  }

  // residue-set instances for integer-style bases (e, excluded primes)
  for (int e : {4, 8, 9, 12, 36}) {
    Ring R = zn(e);
    std::set<Bitset> covered;
    // skip sets already produced by the seeded enumeration above
    if (e != 36)
      for (auto& [sname, S] : detail::seeded_mcs_list(R)) covered.insert(S.members);
    std::vector<std::vector<int>> prime_sets = {{}, {2}, {3}, {2, 3}};
    for (const auto& ps : prime_sets) {
      IntegerBaseReduction red;
      try {
        red = integer_base_reduce(IntegerBaseDescriptor{e, ps});
      } catch (const InvalidMCS&) {
        continue;
      }
      MulClosedSet S{R, red.mcs.members};
      if (!covered.insert(S.members).second) continue;
      auto mods = detail::module_list(R, e);
      for (auto& [mname, M] : mods) {
        fam.push_back(Instance{"Z" + std::to_string(e) + "/" + mname + "/" +
                                   detail::set_label(*R, S.members),
                               M, S, {}, {}, false});
      }
    }
  }

  // flag the documented full-module claim: Z_4 with the odd residues
  {
    Ring R4 = zn(4);
    Bitset odd(4);
    odd.set(1);
    odd.set(3);
    for (Instance& inst : fam)
      if (inst.M->ring == R4 && inst.M->size == 4 && inst.S.members == odd &&
          inst.M->cyclic_orders == std::vector<int>{4})
        inst.doc_claims_not_strong = true;
  }

  // product instances
  auto product_instance = [&](const std::string& label, std::vector<int> ns,
                              std::vector<std::vector<int>> seed_sets) {
    std::vector<Ring> frs;
    for (int n : ns) frs.push_back(zn(n));
    Ring prod = make_product(frs);
    std::vector<ModulePtr> fmods;
    for (std::size_t i = 0; i < frs.size(); ++i)
      fmods.push_back(make_natural_module(frs[i], {ns[i]}));
    ModulePtr M = product_module(fmods, prod);
    std::vector<MulClosedSet> fmcs;
    for (std::size_t i = 0; i < frs.size(); ++i)
      fmcs.push_back(mcs_closure(frs[i], seed_sets[i]));
    MulClosedSet S = product_mcs(prod, fmcs);
    fam.push_back(Instance{label, M, S, fmods, fmcs, false});
  };
  product_instance("Z9xZ4/reg/S{1}x{1}", {9, 4}, {{}, {}});
  product_instance("Z9xZ4/reg/S{1,4,7}x{1,3}", {9, 4}, {{4}, {3}});
  product_instance("Z4xZ4/reg/S{1,3}x{1}", {4, 4}, {{3}, {}});
  product_instance("Z2xZ3xZ4/reg/S{1}x{1,2}x{1,3}", {2, 3, 4}, {{}, {2}, {3}});

  return fam;
}

// A small family for unit tests: fast, but still exercises every check.
inline std::vector<Instance> build_smoke_family() {
  std::vector<Instance> fam;
  std::map<int, Ring> rings;
  auto zn = [&](int n) {
    auto it = rings.find(n);
    if (it != rings.end()) return it->second;
    Ring r = make_zn(n);
    rings[n] = r;
    return r;
  };
  auto add = [&](const std::string& name, ModulePtr M, MulClosedSet S) {
    fam.push_back(Instance{name, M, S, {}, {}, false});
  };

  Ring r4 = zn(4);
  Bitset odd(4);
  odd.set(1);
  odd.set(3);
  MulClosedSet s13{r4, odd};
  ModulePtr z4 = make_natural_module(r4, {4});
  add("Z4/Z4/S{1,3}", z4, s13);
  fam.back().doc_claims_not_strong = true;
  add("Z4/Z4/S{1}", z4, mcs_closure(r4, {}));
  add("Z4/Z2/S{1,3}", make_natural_module(r4, {2}), s13);
  add("Z4/Z2+Z4/S{1,3}", make_natural_module(r4, {2, 4}), s13);

  Ring r6 = zn(6);
  add("Z6/Z6/S{1,3}", make_natural_module(r6, {6}), mcs_closure(r6, {3}));
  add("Z6/Z2+Z6/S{1,4}", make_natural_module(r6, {2, 6}), mcs_closure(r6, {4}));

  Ring r12 = zn(12);
  add("Z12/Z2+Z6/S{1,3,9}", make_natural_module(r12, {2, 6}), mcs_closure(r12, {3}));

  {
    std::vector<Ring> frs = {zn(9), r4};
    Ring prod = make_product(frs);
    std::vector<ModulePtr> fmods = {make_natural_module(frs[0], {9}),
                                    make_natural_module(frs[1], {4})};
    std::vector<MulClosedSet> fmcs = {mcs_closure(frs[0], {4}),
                                      mcs_closure(frs[1], {3})};
    fam.push_back(Instance{"Z9xZ4/reg/S{1,4,7}x{1,3}",
                           product_module(fmods, prod),
                           product_mcs(prod, fmcs), fmods, fmcs, false});
  }

  // a residue set containing zero (no excluded prime divides the base)
  IntegerBaseReduction red = integer_base_reduce(IntegerBaseDescriptor{4, {}});
  add("Z4/Z4/S-all", make_natural_module(red.ring, {4}),
      MulClosedSet{red.ring, red.mcs.members});

  return fam;
}

}  // namespace finmod
