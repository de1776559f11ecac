#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "granulum/core.hpp"
#include "granulum/spaces.hpp"
#include "granulum/tables.hpp"

namespace granulum {

// --- the inclusion-function zoo -----------------------------------------

enum class RifKind { k0, k1, k2, kst, custom };

// A rough-inclusion-style map on pairs of subsets. Evaluation only needs
// the ambient top element (for complements); all other structure is set
// theoretic.
class InclusionFn {
 public:
  static InclusionFn k0() { return InclusionFn(RifKind::k0); }
  static InclusionFn k1() { return InclusionFn(RifKind::k1); }
  static InclusionFn k2() { return InclusionFn(RifKind::k2); }

  static InclusionFn kst(InclusionFn base, Rational s, Rational t) {
    if (!(Rational(0) <= s && s < t && t <= Rational(1)))
      throw input_error("kst needs 0 <= s < t <= 1");
    InclusionFn f(RifKind::kst);
    f.base_ = std::make_shared<InclusionFn>(std::move(base));
    f.s_ = s;
    f.t_ = t;
    return f;
  }

  static InclusionFn custom(std::map<std::pair<Mask, Mask>, Rational> table) {
    InclusionFn f(RifKind::custom);
    for (const auto& [k, v] : table) unit(v);
    f.table_ = std::move(table);
    return f;
  }

  RifKind kind() const { return kind_; }
  const Rational& s() const { return s_; }
  const Rational& t() const { return t_; }

  Rational eval(Mask a, Mask b, Mask top) const {
    if (!subset_of(a, top) || !subset_of(b, top))
      throw input_error("arguments must lie under the top element");
    switch (kind_) {
      case RifKind::k0:
        return a == 0 ? Rational(1) : Rational(card(a & b), card(a));
      case RifKind::k1:
        return (a | b) == 0 ? Rational(1) : Rational(card(b), card(a | b));
      case RifKind::k2: {
        if (top == 0) throw unsupported_error("k2 needs a nonempty top");
        Mask ac = top & ~a;
        return Rational(card(ac | b), card(top));
      }
      case RifKind::kst: {
        Rational v = base_->eval(a, b, top);
        if (v <= s_) return Rational(0);
        if (v >= t_) return Rational(1);
        return (v - s_) / (t_ - s_);
      }
      case RifKind::custom: {
        auto it = table_.find({a, b});
        if (it == table_.end())
          throw input_error("custom inclusion table has no entry");
        return it->second;
      }
    }
    throw std::logic_error("unreachable");
  }

 private:
  explicit InclusionFn(RifKind k) : kind_(k) {}
  RifKind kind_;
  std::shared_ptr<InclusionFn> base_;
  Rational s_{0}, t_{1};
  std::map<std::pair<Mask, Mask>, Rational> table_;
};

inline InclusionFn parse_rif(const std::string& name, const Rational& s = 0,
                             const Rational& t = 1) {
  if (name == "k0") return InclusionFn::k0();
  if (name == "k1") return InclusionFn::k1();
  if (name == "k2") return InclusionFn::k2();
  if (name == "kst") return InclusionFn::kst(InclusionFn::k0(), s, t);
  throw input_error("unknown inclusion function: " + name);
}

inline Rational eval_rif(const InclusionFn& f, const SetHgos& s, Mask a,
                         Mask b) {
  if (!s.in_family(a) || !s.in_family(b))
    throw input_error("arguments must lie in the space family");
  return f.eval(a, b, s.universe().full());
}

// --- axiom scanner -------------------------------------------------------
//
// Shared by the space profiler and the abstract implication oracle. A
// context provides a finite carrier, the parthood predicate, partial meet
// and join, optional bounds, and the kappa map under test. Atomic formulas
// containing an undefined term are read as false.

struct RifAxiomFlags {
  bool u1, r0, r1, r2, r3, r4, r5, r6, ir0, ir4, rb;
};

template <class Ctx>
RifAxiomFlags scan_rif_axioms(const Ctx& c) {
  RifAxiomFlags f{true, true, true, true, true, true, true, true, true, true,
                  true};
  const int n = c.size();
  const Rational one(1), zero(0);
  const bool hb = c.has_bottom();
  const int bot = hb ? c.bottom() : -1;
  // proper parthood from bottom: a is not bottom-like
  auto pp_bot = [&](int a) { return hb && c.p(bot, a) && !c.p(a, bot); };

  for (int a = 0; a < n; ++a) {
    if (c.kappa(a, a) != one) f.u1 = false;
    if (hb && pp_bot(a) && c.kappa(a, bot) != zero) f.rb = false;
    for (int b = 0; b < n; ++b) {
      Rational k = c.kappa(a, b);
      bool isone = k == one;
      if (c.p(a, b) && !isone) f.r0 = false;
      if (isone && !c.p(a, b)) f.ir0 = false;
      bool meet_is_bot = hb && c.has_meet(a, b) && c.meet(a, b) == bot;
      if (k == zero && !meet_is_bot) f.r4 = false;
      if (meet_is_bot && pp_bot(a) && k != zero) f.ir4 = false;
      // R5 read with the properness condition guarding the biconditional
      if (pp_bot(a) && ((k == zero) != meet_is_bot)) f.r5 = false;
    }
  }
  f.r1 = f.r0 && f.ir0;

  for (int a = 0; a < n && (f.r2 || f.r3); ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        if (f.r2 && c.kappa(b, e) == one && c.kappa(a, b) > c.kappa(a, e))
          f.r2 = false;
        if (f.r3 && c.p(b, e) && c.kappa(a, b) > c.kappa(a, e)) f.r3 = false;
      }

  f.r6 = true;
  if (c.has_top()) {
    const int top = c.top();
    for (int a = 0; a < n && f.r6; ++a) {
      if (!pp_bot(a)) continue;
      for (int b = 0; b < n && f.r6; ++b)
        for (int e = 0; e < n; ++e)
          if (c.has_join(b, e) && c.join(b, e) == top &&
              c.kappa(a, b) + c.kappa(a, e) != one) {
            f.r6 = false;
            break;
          }
    }
  }
  return f;
}

// --- profiling on a set HGOS ---------------------------------------------

struct RifProfile {
  CheckReport axioms;
  std::string classification;  // RIF / qRIF / wqRIF / none
};

namespace detail {

struct SpaceKappaCtx {
  const SetHgos* space;
  const InclusionFn* fn;
  const std::vector<Mask>* fam;
  bool closed_complement;

  int size() const { return static_cast<int>(fam->size()); }
  bool p(int a, int b) const { return subset_of((*fam)[a], (*fam)[b]); }
  bool in_family(Mask m) const {
    return std::find(fam->begin(), fam->end(), m) != fam->end();
  }
  bool has_meet(int a, int b) const { return in_family((*fam)[a] & (*fam)[b]); }
  int meet(int a, int b) const { return index_of((*fam)[a] & (*fam)[b]); }
  bool has_join(int a, int b) const { return in_family((*fam)[a] | (*fam)[b]); }
  int join(int a, int b) const { return index_of((*fam)[a] | (*fam)[b]); }
  bool has_bottom() const { return in_family(0); }
  int bottom() const { return index_of(0); }
  bool has_top() const { return in_family(space->universe().full()); }
  int top() const { return index_of(space->universe().full()); }
  Rational kappa(int a, int b) const {
    return fn->eval((*fam)[a], (*fam)[b], space->universe().full());
  }
  int index_of(Mask m) const {
    for (int i = 0; i < size(); ++i)
      if ((*fam)[i] == m) return i;
    throw std::logic_error("family not closed");
  }
};

}  // namespace detail

// Exhaustive axiom profile of an inclusion function over the space family.
inline RifProfile check_rif_axioms(const InclusionFn& f, const SetHgos& s) {
  if (f.kind() == RifKind::k2 && !s.powerset_family()) {
    bool closed = true;
    for (Mask x : s.family())
      if (!s.in_family(s.universe().full() & ~x)) closed = false;
    if (!closed)
      throw unsupported_error("k2 needs a complement-closed family");
  }
  detail::SpaceKappaCtx ctx{&s, &f, &s.family(), s.powerset_family()};
  RifAxiomFlags fl = scan_rif_axioms(ctx);

  RifProfile out;
  auto put = [&](const char* name, bool v) { out.axioms.add(name).holds = v; };
  put("U1", fl.u1);
  put("R0", fl.r0);
  put("R1", fl.r1);
  put("R2", fl.r2);
  put("R3", fl.r3);
  put("R4", fl.r4);
  put("R5", fl.r5);
  put("R6", fl.r6);
  put("IR0", fl.ir0);
  put("IR4", fl.ir4);
  put("RB", fl.rb);
  if (!ctx.has_top()) {
    for (auto& it : out.axioms.items)
      if (it.name == "R6") {
        it.advisory = true;
        it.note = "skipped: no top element in the family";
      }
  }
  out.classification = fl.r1 && fl.r2   ? "RIF"
                       : fl.r0 && fl.r2 ? "qRIF"
                       : fl.r0 && fl.r3 ? "wqRIF"
                                        : "none";
  return out;
}

// --- abstract implication oracle ------------------------------------------
//
// Enumerates every reflexive-antisymmetric relation on carriers of size
// 1..3, every kappa with values in {0, 1/2, 1}, and confirms or refutes the
// implication battery. Implications that mention the top/complement
// structure run only on complemented domains; implications over the bottom
// element run only on domains that have one.

namespace detail {

struct SmallDomain {
  int n = 0;
  bool p[3][3] = {};
  int meet[3][3], join[3][3];  // -1 undefined (unique glb / lub)
  int bottom = -1, top = -1;
  bool complemented = false;

  bool part(int a, int b) const { return p[a][b]; }
};

struct DomainKappaCtx {
  const SmallDomain* d;
  const Rational* k;  // n*n values

  int size() const { return d->n; }
  bool p(int a, int b) const { return d->p[a][b]; }
  bool has_meet(int a, int b) const { return d->meet[a][b] >= 0; }
  int meet(int a, int b) const { return d->meet[a][b]; }
  bool has_join(int a, int b) const { return d->join[a][b] >= 0; }
  int join(int a, int b) const { return d->join[a][b]; }
  bool has_bottom() const { return d->bottom >= 0; }
  int bottom() const { return d->bottom; }
  bool has_top() const { return d->top >= 0; }
  int top() const { return d->top; }
  Rational kappa(int a, int b) const { return k[a * d->n + b]; }
};

inline void finish_domain(SmallDomain& d) {
  int n = d.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d.meet[a][b] = -1;
      d.join[a][b] = -1;
      for (int z = 0; z < n; ++z) {
        if (d.p[z][a] && d.p[z][b]) {
          bool greatest = true;
          for (int w = 0; w < n && greatest; ++w)
            if (d.p[w][a] && d.p[w][b] && !d.p[w][z]) greatest = false;
          if (greatest) d.meet[a][b] = z;
        }
        if (d.p[a][z] && d.p[b][z]) {
          bool least = true;
          for (int w = 0; w < n && least; ++w)
            if (d.p[a][w] && d.p[b][w] && !d.p[z][w]) least = false;
          if (least) d.join[a][b] = z;
        }
      }
    }
  d.bottom = -1;
  d.top = -1;
  for (int z = 0; z < n; ++z) {
    bool bot = true, top = true;
    for (int x = 0; x < n; ++x) {
      if (!d.p[z][x]) bot = false;
      if (!d.p[x][z]) top = false;
    }
    if (bot) d.bottom = z;
    if (top) d.top = z;
  }
  d.complemented = d.bottom >= 0 && d.top >= 0;
  if (d.complemented)
    for (int a = 0; a < n && d.complemented; ++a) {
      bool found = false;
      for (int b = 0; b < n && !found; ++b)
        if (d.meet[a][b] == d.bottom && d.join[a][b] == d.top) found = true;
      d.complemented = found;
    }
}

// all reflexive-antisymmetric relations on 1..max_n elements
inline std::vector<SmallDomain> enumerate_domains(int max_n) {
  std::vector<SmallDomain> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off.emplace_back(i, j);
    long long total = 1;
    for (std::size_t i = 0; i < off.size(); ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
      SmallDomain d;
      d.n = n;
      for (int i = 0; i < n; ++i) d.p[i][i] = true;
      long long c = code;
      for (auto [i, j] : off) {
        int choice = static_cast<int>(c % 3);
        c /= 3;
        if (choice == 1) d.p[i][j] = true;
        if (choice == 2) d.p[j][i] = true;
      }
      finish_domain(d);
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace detail

enum class RifAxiom { U1, R0, R1, R2, R3, R4, R5, R6, IR0, IR4, RB };

inline const char* axiom_name(RifAxiom a) {
  switch (a) {
    case RifAxiom::U1: return "U1";
    case RifAxiom::R0: return "R0";
    case RifAxiom::R1: return "R1";
    case RifAxiom::R2: return "R2";
    case RifAxiom::R3: return "R3";
    case RifAxiom::R4: return "R4";
    case RifAxiom::R5: return "R5";
    case RifAxiom::R6: return "R6";
    case RifAxiom::IR0: return "IR0";
    case RifAxiom::IR4: return "IR4";
    case RifAxiom::RB: return "RB";
  }
  return "?";
}

struct PrifImplication {
  std::string name;                 // e.g. "prif3"
  std::vector<RifAxiom> premises;
  RifAxiom conclusion;
  bool needs_complement = false;
};

inline bool axiom_mentions_bottom(RifAxiom a) {
  return a == RifAxiom::R4 || a == RifAxiom::R5 || a == RifAxiom::IR4 ||
         a == RifAxiom::RB;
}

inline std::vector<PrifImplication> prif_battery() {
  using A = RifAxiom;
  return {
      {"prif1a", {A::R1, A::R2}, A::R3, false},
      {"prif1b", {A::R1, A::R3}, A::R2, false},
      {"prif2a", {A::R0, A::IR0}, A::R1, false},
      {"prif2b", {A::R1}, A::R0, false},
      {"prif2c", {A::R1}, A::IR0, false},
      {"prif3", {A::R0, A::R2}, A::R3, false},
      {"prif4", {A::IR0, A::R3}, A::R2, false},
      {"prif5", {A::IR4}, A::RB, false},
      {"prif6a", {A::IR4, A::R4}, A::R5, false},
      {"prif6b", {A::R5}, A::IR4, false},
      {"prif6c", {A::R5}, A::R4, false},
      {"prif7", {A::R0, A::R6}, A::IR4, true},
      {"prif8", {A::IR0, A::R6}, A::R4, true},
      {"prif9", {A::R1, A::R6}, A::R5, true},
      {"prif-u1a", {A::R1}, A::U1, false},
      {"prif-u1b", {A::R0}, A::U1, false},
  };
}

// Domain applicability of an implication: axioms built over the bottom
// element only make sense where one exists, mirroring the complemented-
// domain gate for the complement-sum axiom.
inline bool implication_needs_bottom(const PrifImplication& imp,
                                     int dropped_index = -1) {
  if (axiom_mentions_bottom(imp.conclusion)) return true;
  for (std::size_t i = 0; i < imp.premises.size(); ++i)
    if (static_cast<int>(i) != dropped_index &&
        axiom_mentions_bottom(imp.premises[i]))
      return true;
  return false;
}

struct PrifDropResult {
  std::string implication;
  RifAxiom dropped;
  bool counterexample_found = false;
  std::string witness;
};

struct PrifReport {
  std::vector<CheckItem> implications;  // confirmed / refuted with witness
  std::vector<PrifDropResult> drops;    // premise-necessity search results
  long long kappa_count = 0;            // enumerated (domain, kappa) pairs
};

namespace detail {

inline bool axiom_value(const RifAxiomFlags& f, RifAxiom a) {
  switch (a) {
    case RifAxiom::U1: return f.u1;
    case RifAxiom::R0: return f.r0;
    case RifAxiom::R1: return f.r1;
    case RifAxiom::R2: return f.r2;
    case RifAxiom::R3: return f.r3;
    case RifAxiom::R4: return f.r4;
    case RifAxiom::R5: return f.r5;
    case RifAxiom::R6: return f.r6;
    case RifAxiom::IR0: return f.ir0;
    case RifAxiom::IR4: return f.ir4;
    case RifAxiom::RB: return f.rb;
  }
  return false;
}

template <class Visit>
void for_each_kappa(const SmallDomain& d, Visit&& visit) {
  static const Rational grid[3] = {Rational(0), Rational(1, 2), Rational(1)};
  const int cells = d.n * d.n;
  std::vector<int> digits(cells, 0);
  std::vector<Rational> k(cells, Rational(0));
  for (;;) {
    for (int i = 0; i < cells; ++i) k[i] = grid[digits[i]];
    if (!visit(k)) return;
    int pos = 0;
    while (pos < cells && digits[pos] == 2) digits[pos++] = 0;
    if (pos == cells) return;
    ++digits[pos];
  }
}

inline std::string domain_witness(const SmallDomain& d,
                                  const std::vector<Rational>& k) {
  std::string out = "n=" + std::to_string(d.n) + " P={";
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (i != j && d.p[i][j])
        out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  out += "} kappa=[";
  for (int i = 0; i < d.n * d.n; ++i) {
    if (i) out += ",";
    out += to_frac(k[i]);
  }
  return out + "]";
}

}  // namespace detail

// Full confirmation sweep plus premise-necessity search. For each stated
// implication, zero counterexamples are expected; for each premise drop,
// the search reports whether a counterexample exists in the enumeration
// domain at all.
inline PrifReport prif_oracle(int max_carrier = 3) {
  if (max_carrier > 3) throw precondition_error("oracle domain caps at 3");
  PrifReport rep;
  auto domains = detail::enumerate_domains(max_carrier);
  auto battery = prif_battery();

  std::vector<CheckItem> items;
  for (const auto& imp : battery)
    items.push_back(CheckItem{imp.name, true, false, "", ""});

  long long count = 0;
  for (const auto& d : domains) {
    detail::for_each_kappa(d, [&](const std::vector<Rational>& k) {
      ++count;
      detail::DomainKappaCtx ctx{&d, k.data()};
      RifAxiomFlags fl = scan_rif_axioms(ctx);
      for (std::size_t i = 0; i < battery.size(); ++i) {
        const auto& imp = battery[i];
        if (!items[i].holds) continue;
        if (imp.needs_complement && !d.complemented) continue;
        if (implication_needs_bottom(imp) && d.bottom < 0) continue;
        bool prem = true;
        for (RifAxiom a : imp.premises)
          if (!detail::axiom_value(fl, a)) {
            prem = false;
            break;
          }
        if (prem && !detail::axiom_value(fl, imp.conclusion)) {
          items[i].holds = false;
          items[i].witness = detail::domain_witness(d, k);
        }
      }
      return true;
    });
  }
  rep.kappa_count = count;
  rep.implications = std::move(items);

  // premise necessity: drop one premise and hunt for a counterexample to
  // the weakened implication. Dropping R6 also lifts the complemented-
  // domain gate, since nothing in the remainder mentions that structure.
  for (const auto& imp : battery) {
    for (std::size_t di = 0; di < imp.premises.size(); ++di) {
      PrifDropResult dr;
      dr.implication = imp.name;
      dr.dropped = imp.premises[di];
      bool gate_c = imp.needs_complement && imp.premises[di] != RifAxiom::R6;
      bool gate_b =
          implication_needs_bottom(imp, static_cast<int>(di)) && !gate_c;
      for (const auto& d : domains) {
        if (dr.counterexample_found) break;
        if (gate_c && !d.complemented) continue;
        if (gate_b && d.bottom < 0) continue;
        detail::for_each_kappa(d, [&](const std::vector<Rational>& k) {
          detail::DomainKappaCtx ctx{&d, k.data()};
          RifAxiomFlags fl = scan_rif_axioms(ctx);
          bool prem = true;
          for (std::size_t pi = 0; pi < imp.premises.size(); ++pi)
            if (pi != di && !detail::axiom_value(fl, imp.premises[pi])) {
              prem = false;
              break;
            }
          if (prem && !detail::axiom_value(fl, imp.conclusion)) {
            dr.counterexample_found = true;
            dr.witness = detail::domain_witness(d, k);
            return false;
          }
          return true;
        });
      }
      rep.drops.push_back(std::move(dr));
    }
  }
  return rep;
}

// --- measures over set HGOS ------------------------------------------------

// accuracy of approximation: nu(x^u, x^l) under the cardinality function
inline Rational accuracy(const SetHgos& s, Mask x) {
  return InclusionFn::k0().eval(s.upper(x), s.lower(x), s.universe().full());
}

inline Rational misclassification(const InclusionFn& f, const SetHgos& s,
                                  Mask a, Mask b) {
  return Rational(1) - eval_rif(f, s, a, b);
}

// Variable-precision approximations from granule-wise inclusion degrees.
// fixed = true measures granules against x^l instead of x.
inline std::pair<Mask, Mask> vprs_approx(const SetHgos& s, Mask x,
                                         const Rational& alpha,
                                         const Rational& beta, bool fixed) {
  if (!(Rational(0) < alpha && alpha <= beta && beta < Rational(1)))
    throw input_error("vprs needs 0 < alpha <= beta < 1");
  InclusionFn k0 = InclusionFn::k0();
  Mask ref = fixed ? s.lower(x) : x;
  Mask lo = 0, up = 0;
  for (Mask g : s.granules()) {
    Rational v = k0.eval(g, ref, s.universe().full());
    if (v > beta) lo |= g;
    if (v > alpha) up |= g;
  }
  return {lo, up};
}

// --- parameterized approximation spaces -------------------------------------

enum class ParametricKind { low, up, glow, gup, low_r, up_r, low_rg, up_rg };

inline ParametricKind parse_parametric_kind(const std::string& s) {
  if (s == "low") return ParametricKind::low;
  if (s == "up") return ParametricKind::up;
  if (s == "glow") return ParametricKind::glow;
  if (s == "gup") return ParametricKind::gup;
  if (s == "lowR") return ParametricKind::low_r;
  if (s == "upR") return ParametricKind::up_r;
  if (s == "lowRg") return ParametricKind::low_rg;
  if (s == "upRg") return ParametricKind::up_rg;
  throw input_error("unknown parametric approximation kind: " + s);
}

struct ParametricResult {
  ParametricKind kind;
  Mask points = 0;            // low / up / *_rg unions
  std::vector<Mask> family;   // glow / gup
};

// Pointwise and granular approximations from an uncertainty map. The
// tolerance-guarded variants test the condition at every R-neighbor.
inline ParametricResult parametric_approx(
    const Universe& u, const std::vector<Mask>& xi, const InclusionFn& h,
    Mask x, ParametricKind kind,
    const std::optional<BinaryRelationSpace>& r = std::nullopt) {
  if (static_cast<int>(xi.size()) != u.size())
    throw input_error("uncertainty map must cover the universe");
  bool needs_r = kind == ParametricKind::low_r || kind == ParametricKind::up_r ||
                 kind == ParametricKind::low_rg ||
                 kind == ParametricKind::up_rg;
  if (needs_r) {
    if (!r.has_value()) throw input_error("tolerance variant needs a relation");
    if (!(r->reflexive() && r->symmetric()))
      throw precondition_error("tolerance must be reflexive and symmetric");
  }
  Mask top = u.full();
  auto lo_at = [&](int e) { return h.eval(xi[e], x, top) == Rational(1); };
  auto up_at = [&](int e) { return h.eval(xi[e], x, top) > Rational(0); };
  auto guarded = [&](int e, auto&& cond) {
    for (int a = 0; a < u.size(); ++a)
      if (r->related(e, a) && !cond(a)) return false;
    return true;
  };

  ParametricResult out;
  out.kind = kind;
  for (int e = 0; e < u.size(); ++e) {
    switch (kind) {
      case ParametricKind::low:
        if (lo_at(e)) out.points |= Mask{1} << e;
        break;
      case ParametricKind::up:
        if (up_at(e)) out.points |= Mask{1} << e;
        break;
      case ParametricKind::glow:
        if (lo_at(e)) out.family.push_back(xi[e]);
        break;
      case ParametricKind::gup:
        if (up_at(e)) out.family.push_back(xi[e]);
        break;
      case ParametricKind::low_r:
        if (guarded(e, lo_at)) out.points |= Mask{1} << e;
        break;
      case ParametricKind::up_r:
        if (guarded(e, up_at)) out.points |= Mask{1} << e;
        break;
      case ParametricKind::low_rg:
        if (guarded(e, lo_at)) out.points |= xi[e];
        break;
      case ParametricKind::up_rg:
        if (guarded(e, up_at)) out.points |= xi[e];
        break;
    }
  }
  return out;
}

}  // namespace granulum
