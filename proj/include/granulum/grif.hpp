#pragma once

#include <optional>
#include <string>
#include <vector>

#include "granulum/core.hpp"
#include "granulum/norms.hpp"
#include "granulum/rif.hpp"
#include "granulum/spaces.hpp"

namespace granulum {

// 2x2 matrix of unit rationals; rows index the first argument's l/u, columns
// the second argument's l/u. Layout: [[ll, lu], [ul, uu]].
struct GrifMatrix {
  Rational ll{0}, lu{0}, ul{0}, uu{0};

  bool operator==(const GrifMatrix&) const = default;

  static GrifMatrix zero() { return {}; }
  static GrifMatrix ones() {
    return {Rational(1), Rational(1), Rational(1), Rational(1)};
  }
  // conjunction unit: [[1,0],[0,1]]
  static GrifMatrix unit() {
    return {Rational(1), Rational(0), Rational(0), Rational(1)};
  }

  std::string str() const {
    return "[[" + to_frac(ll) + "," + to_frac(lu) + "],[" + to_frac(ul) + "," +
           to_frac(uu) + "]]";
  }
};

// natural (entrywise) partial order
inline bool matrix_leq(const GrifMatrix& x, const GrifMatrix& y) {
  return x.ll <= y.ll && x.lu <= y.lu && x.ul <= y.ul && x.uu <= y.uu;
}

inline bool matrix_lt(const GrifMatrix& x, const GrifMatrix& y) {
  return matrix_leq(x, y) && !(x == y);
}

// lexicographic tie-breaking order on (ll, lu, ul, uu)
inline bool matrix_lex_less(const GrifMatrix& x, const GrifMatrix& y) {
  if (x.ll != y.ll) return x.ll < y.ll;
  if (x.lu != y.lu) return x.lu < y.lu;
  if (x.ul != y.ul) return x.ul < y.ul;
  return x.uu < y.uu;
}

// --- construction ----------------------------------------------------------

// zeta: the matrix of tau evaluated on all approximation combinations.
inline GrifMatrix zeta(const SetHgos& s, const InclusionFn& tau, Mask a,
                       Mask b) {
  if (!s.in_family(a) || !s.in_family(b))
    throw input_error("arguments must lie in the space family");
  Mask top = s.universe().full();
  Mask al = s.lower(a), au = s.upper(a), bl = s.lower(b), bu = s.upper(b);
  return {tau.eval(al, bl, top), tau.eval(al, bu, top), tau.eval(au, bl, top),
          tau.eval(au, bu, top)};
}

// basic: entries #(A^s  n B^p) / #(A^s) with the 1-on-empty guard; this is
// zeta under the cardinality function.
inline GrifMatrix basic_grif(const SetHgos& s, Mask a, Mask b) {
  return zeta(s, InclusionFn::k0(), a, b);
}

// cobasic: the denominator comes from the first argument's column index,
// so entries may exceed 1; values are returned unclamped with a flag.
struct CobasicResult {
  GrifMatrix m;
  bool out_of_range = false;
};

inline CobasicResult cobasic_grif(const SetHgos& s, Mask a, Mask b) {
  if (!s.in_family(a) || !s.in_family(b))
    throw input_error("arguments must lie in the space family");
  Mask al = s.lower(a), au = s.upper(a), bl = s.lower(b), bu = s.upper(b);
  auto entry = [&](Mask num_a, Mask num_b, Mask den) {
    return den == 0 ? Rational(1) : Rational(card(num_a & num_b), card(den));
  };
  CobasicResult r;
  r.m.ll = entry(al, bl, al);
  r.m.lu = entry(al, bu, au);
  r.m.ul = entry(au, bl, al);
  r.m.uu = entry(au, bu, au);
  r.out_of_range = r.m.ll > Rational(1) || r.m.lu > Rational(1) ||
                   r.m.ul > Rational(1) || r.m.uu > Rational(1);
  return r;
}

// 1-certain: first argument definite -> the pair (tau(A,B^l), tau(A,B^u)).
inline std::pair<Rational, Rational> one_certain_grif(const SetHgos& s,
                                                      const InclusionFn& tau,
                                                      Mask a, Mask b) {
  if (!is_definite(s, a))
    throw precondition_error("1-certain needs a definite first argument");
  Mask top = s.universe().full();
  return {tau.eval(a, s.lower(b), top), tau.eval(a, s.upper(b), top)};
}

// 2-certain: second argument definite -> the pair (tau(A^l,B), tau(A^u,B)).
inline std::pair<Rational, Rational> two_certain_grif(const SetHgos& s,
                                                      const InclusionFn& tau,
                                                      Mask a, Mask b) {
  if (!is_definite(s, b))
    throw precondition_error("2-certain needs a definite second argument");
  Mask top = s.universe().full();
  return {tau.eval(s.lower(a), b, top), tau.eval(s.upper(a), b, top)};
}

// Transported matrices through a morphism into a set HGOS. The hasty form
// measures intersections of images; the image form measures images of
// meets and needs the meet defined in the source.
inline GrifMatrix hasty_grif(const GgsMorphism& mor, const InclusionFn& tau,
                             int a, int b) {
  if (!mor.target_masks.has_value() || !mor.target_universe.has_value())
    throw precondition_error("transported matrices need a set HGOS target");
  if (!check_morphism(mor, false).all_hold())
    throw precondition_error("map fails the morphism conditions");
  const auto& masks = *mor.target_masks;
  Mask top = mor.target_universe->full();
  auto img = [&](int x) { return masks.at(mor.map.at(x)); };
  int al = mor.source.lo(a), au = mor.source.up(a);
  int bl = mor.source.lo(b), bu = mor.source.up(b);
  if (al < 0 || au < 0 || bl < 0 || bu < 0)
    throw precondition_error("approximations must be defined");
  return {tau.eval(img(al), img(bl), top), tau.eval(img(al), img(bu), top),
          tau.eval(img(au), img(bl), top), tau.eval(img(au), img(bu), top)};
}

inline GrifMatrix phi_grif(const GgsMorphism& mor, int a, int b) {
  if (!mor.target_masks.has_value())
    throw precondition_error("transported matrices need a set HGOS target");
  if (!check_morphism(mor, false).all_hold())
    throw precondition_error("map fails the morphism conditions");
  const auto& masks = *mor.target_masks;
  auto img = [&](int x) { return masks.at(mor.map.at(x)); };
  auto entry = [&](int xs, int yp) {
    int m = mor.source.mt(xs, yp);
    if (m < 0)
      throw precondition_error("meet undefined in the source: " +
                               mor.source.carrier.at(xs) + "," +
                               mor.source.carrier.at(yp));
    Mask num = img(m), den = img(xs);
    return den == 0 ? Rational(1) : Rational(card(num), card(den));
  };
  int al = mor.source.lo(a), au = mor.source.up(a);
  int bl = mor.source.lo(b), bu = mor.source.up(b);
  if (al < 0 || au < 0 || bl < 0 || bu < 0)
    throw precondition_error("approximations must be defined");
  return {entry(al, bl), entry(al, bu), entry(au, bl), entry(au, bu)};
}

// --- matrix algebra ----------------------------------------------------------

enum class CombineKind { disj, conj, hprod };

// disj: entrywise s-norm; conj: matrix product with (x) inside and (+)
// across; hprod: entrywise rational product.
inline GrifMatrix matrix_combine(const GrifMatrix& x, const GrifMatrix& y,
                                 CombineKind kind, const NormTriple& nt) {
  GrifMatrix r;
  switch (kind) {
    case CombineKind::disj:
      r.ll = nt.s.apply(x.ll, y.ll);
      r.lu = nt.s.apply(x.lu, y.lu);
      r.ul = nt.s.apply(x.ul, y.ul);
      r.uu = nt.s.apply(x.uu, y.uu);
      break;
    case CombineKind::conj:
      r.ll = nt.s.apply(nt.t.apply(x.ll, y.ll), nt.t.apply(x.lu, y.ul));
      r.lu = nt.s.apply(nt.t.apply(x.ll, y.lu), nt.t.apply(x.lu, y.uu));
      r.ul = nt.s.apply(nt.t.apply(x.ul, y.ll), nt.t.apply(x.uu, y.ul));
      r.uu = nt.s.apply(nt.t.apply(x.ul, y.lu), nt.t.apply(x.uu, y.uu));
      break;
    case CombineKind::hprod:
      r.ll = x.ll * y.ll;
      r.lu = x.lu * y.lu;
      r.ul = x.ul * y.ul;
      r.uu = x.uu * y.uu;
      break;
  }
  return r;
}

// --- semiring laws -----------------------------------------------------------

struct SemiringReport {
  CheckReport laws;
  bool exhaustive = true;
  long long triples = 0;
};

// Scans matrix triples over the grid for the semiring laws of (disj, conj).
// Exhaustive for grids of at most 3 points, deterministically sampled above.
inline SemiringReport check_semiring(const NormTriple& nt,
                                     const std::vector<Rational>& grid) {
  if (grid.empty()) throw input_error("semiring check needs a grid");
  for (const auto& g : grid) unit(g);
  SemiringReport rep;
  std::vector<GrifMatrix> ms;
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid)
        for (const auto& d : grid) ms.push_back({a, b, c, d});
  const long long m = static_cast<long long>(ms.size());

  auto& neutral = rep.laws.add("disj-neutral-zero");
  auto& comm = rep.laws.add("disj-commutative");
  for (const auto& x : ms) {
    if (neutral.holds &&
        matrix_combine(x, GrifMatrix::zero(), CombineKind::disj, nt) != x) {
      neutral.holds = false;
      neutral.witness = x.str();
    }
    for (const auto& y : ms)
      if (comm.holds && matrix_combine(x, y, CombineKind::disj, nt) !=
                            matrix_combine(y, x, CombineKind::disj, nt)) {
        comm.holds = false;
        comm.witness = x.str() + " " + y.str();
      }
  }

  auto& conj_unit = rep.laws.add("conj-unit");
  for (const auto& x : ms) {
    if (!conj_unit.holds) break;
    if (matrix_combine(x, GrifMatrix::unit(), CombineKind::conj, nt) != x ||
        matrix_combine(GrifMatrix::unit(), x, CombineKind::conj, nt) != x) {
      conj_unit.holds = false;
      conj_unit.witness = x.str();
    }
  }

  auto& disj_assoc = rep.laws.add("disj-associative");
  auto& conj_assoc = rep.laws.add("conj-associative");
  auto& ldist = rep.laws.add("l-distributivity");
  auto& rdist = rep.laws.add("r-distributivity");

  const long long total = m * m * m;
  const long long cap = 600000;
  rep.exhaustive = total <= cap;
  auto run_triple = [&](const GrifMatrix& x, const GrifMatrix& y,
                        const GrifMatrix& z) {
    ++rep.triples;
    std::string w = x.str() + " " + y.str() + " " + z.str();
    if (disj_assoc.holds) {
      auto l = matrix_combine(matrix_combine(x, y, CombineKind::disj, nt), z,
                              CombineKind::disj, nt);
      auto r = matrix_combine(x, matrix_combine(y, z, CombineKind::disj, nt),
                              CombineKind::disj, nt);
      if (l != r) {
        disj_assoc.holds = false;
        disj_assoc.witness = w;
      }
    }
    if (conj_assoc.holds) {
      auto l = matrix_combine(matrix_combine(x, y, CombineKind::conj, nt), z,
                              CombineKind::conj, nt);
      auto r = matrix_combine(x, matrix_combine(y, z, CombineKind::conj, nt),
                              CombineKind::conj, nt);
      if (l != r) {
        conj_assoc.holds = false;
        conj_assoc.witness = w;
      }
    }
    if (ldist.holds) {
      auto l = matrix_combine(x, matrix_combine(y, z, CombineKind::disj, nt),
                              CombineKind::conj, nt);
      auto r = matrix_combine(matrix_combine(x, y, CombineKind::conj, nt),
                              matrix_combine(x, z, CombineKind::conj, nt),
                              CombineKind::disj, nt);
      if (l != r) {
        ldist.holds = false;
        ldist.witness = w;
      }
    }
    if (rdist.holds) {
      auto l = matrix_combine(matrix_combine(y, z, CombineKind::disj, nt), x,
                              CombineKind::conj, nt);
      auto r = matrix_combine(matrix_combine(y, x, CombineKind::conj, nt),
                              matrix_combine(z, x, CombineKind::conj, nt),
                              CombineKind::disj, nt);
      if (l != r) {
        rdist.holds = false;
        rdist.witness = w;
      }
    }
  };

  if (rep.exhaustive) {
    for (const auto& x : ms)
      for (const auto& y : ms)
        for (const auto& z : ms) run_triple(x, y, z);
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed-seed sampling
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (long long i = 0; i < cap; ++i)
      run_triple(ms[next() % m], ms[next() % m], ms[next() % m]);
  }
  return rep;
}

// --- r-inclusion mereology ---------------------------------------------------

inline bool r_included(const SetHgos& s, Mask a, Mask b, const GrifMatrix& r,
                       const InclusionFn& tau) {
  return matrix_leq(r, zeta(s, tau, a, b));
}

struct InclusionTheoremReport {
  CheckReport properties;
};

// The three r-inclusion properties, scanned over all pairs/triples of the
// family. The second property is read with a strictly positive premise
// matrix (every entry nonzero) and nonempty arguments; the existential
// conclusions use the largest admissible witnesses.
inline InclusionTheoremReport check_inclusion_theorem(const SetHgos& s,
                                                      const InclusionFn& tau) {
  InclusionTheoremReport rep;
  const auto& fam = s.family();
  std::vector<GrifMatrix> zs(fam.size() * fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      zs[i * fam.size() + j] = zeta(s, tau, fam[i], fam[j]);
  auto z = [&](std::size_t i, std::size_t j) -> const GrifMatrix& {
    return zs[i * fam.size() + j];
  };
  auto lbl = [&](std::size_t i) { return s.universe().label(fam[i]); };

  // (1) chaining: r- and q-inclusion compose through some h below both
  auto& p1 = rep.properties.add("chain");
  p1.note = "witness h = entrywise minimum of (r, q, zeta(A,C))";
  for (std::size_t a = 0; a < fam.size() && p1.holds; ++a)
    for (std::size_t b = 0; b < fam.size() && p1.holds; ++b)
      for (std::size_t c = 0; c < fam.size(); ++c) {
        const GrifMatrix &r = z(a, b), &q = z(b, c), &ac = z(a, c);
        GrifMatrix h{std::min({r.ll, q.ll, ac.ll}), std::min({r.lu, q.lu, ac.lu}),
                     std::min({r.ul, q.ul, ac.ul}), std::min({r.uu, q.uu, ac.uu})};
        if (!(matrix_leq(h, r) && matrix_leq(h, q) && matrix_leq(h, ac))) {
          p1.holds = false;
          p1.witness = "(" + lbl(a) + "," + lbl(b) + "," + lbl(c) + ")";
          break;
        }
      }

  // (2) symmetry of nonvanishing closeness for strictly positive matrices
  auto& p2 = rep.properties.add("nonzero-symmetry");
  p2.note = "premise: every entry of zeta(A,B) positive, A and B nonempty";
  for (std::size_t a = 0; a < fam.size() && p2.holds; ++a)
    for (std::size_t b = 0; b < fam.size(); ++b) {
      if (fam[a] == 0 || fam[b] == 0) continue;
      const GrifMatrix& m = z(a, b);
      const Rational zero(0);
      if (!(m.ll > zero && m.lu > zero && m.ul > zero && m.uu > zero))
        continue;
      if (z(b, a) == GrifMatrix::zero()) {
        p2.holds = false;
        p2.witness = "(" + lbl(a) + "," + lbl(b) + ")";
        break;
      }
    }

  // (3) parthood widens r-inclusion on the right
  auto& p3 = rep.properties.add("p-monotone-widening");
  {
    // applicability: tau must satisfy R0 on this space
    RifProfile prof = check_rif_axioms(tau, s);
    const CheckItem* r0 = prof.axioms.find("R0");
    if (!r0 || !r0->holds) {
      p3.advisory = true;
      p3.note = "not applicable: tau fails R0 on this space";
    } else {
      for (std::size_t a = 0; a < fam.size() && p3.holds; ++a)
        for (std::size_t b = 0; b < fam.size() && p3.holds; ++b) {
          if (!subset_of(fam[a], fam[b])) continue;
          for (std::size_t cc = 0; cc < fam.size(); ++cc)
            if (!matrix_leq(z(cc, a), z(cc, b))) {
              p3.holds = false;
              p3.witness = "(" + lbl(a) + "," + lbl(b) + "," + lbl(cc) + ")";
              break;
            }
        }
    }
  }
  return rep;
}

// --- form-of-matrix results ---------------------------------------------------

struct FormTheoremsReport {
  CheckReport items;
  // first family pair of the [[1,1],[r,1]] shape (r < 1) satisfying none of
  // the three disjuncts, when one exists
  std::optional<std::pair<Mask, Mask>> converse_witness;
};

enum class FormTau { k0, k1 };

// For the cardinality function: entrywise characterization of unit entries,
// unreachability of [[0,1],[1,1]], the disjunction analysis for the
// [[1,1],[r,1]] shape, and for K1 the all-ones biconditional.
inline FormTheoremsReport form_theorems(const SetHgos& s, FormTau which) {
  FormTheoremsReport rep;
  const auto& fam = s.family();
  InclusionFn tau = which == FormTau::k0 ? InclusionFn::k0() : InclusionFn::k1();
  auto lblpair = [&](Mask a, Mask b) {
    return "(" + s.universe().label(a) + "," + s.universe().label(b) + ")";
  };
  const Rational one(1), zero(0);

  if (which == FormTau::k0) {
    auto& unit_char = rep.items.add("unit-entry-characterization");
    unit_char.note = "entry = 1 iff first side empty or included in second";
    auto& never = rep.items.add("no-[[0,1],[1,1]]");
    auto& fwd = rep.items.add("shape-forward");
    fwd.note = "each disjunct forces the [[1,1],[r,1]] shape (first lower "
               "approximation nonempty)";
    auto& conv = rep.items.add("shape-converse");
    conv.advisory = true;
    conv.note = "the [[1,1],[r,1]] shape does not force the disjunction; "
                "refutation witnesses recorded";

    for (Mask a : fam)
      for (Mask b : fam) {
        Mask al = s.lower(a), au = s.upper(a), bl = s.lower(b), bu = s.upper(b);
        GrifMatrix m = zeta(s, tau, a, b);
        const Rational* es[4] = {&m.ll, &m.lu, &m.ul, &m.uu};
        Mask fs[4][2] = {{al, bl}, {al, bu}, {au, bl}, {au, bu}};
        for (int i = 0; i < 4 && unit_char.holds; ++i) {
          bool is_one = *es[i] == one;
          bool expect = fs[i][0] == 0 || subset_of(fs[i][0], fs[i][1]);
          if (is_one != expect) {
            unit_char.holds = false;
            unit_char.witness = lblpair(a, b);
          }
        }
        if (never.holds && m.ll == zero && m.lu == one && m.ul == one &&
            m.uu == one) {
          never.holds = false;
          never.witness = lblpair(a, b);
        }
        if (al != 0) {
          bool disj1 = subset_of(al, bl) && al != bl && subset_of(bl, au) &&
                       bl != au && subset_of(au, bu) && au != bu;
          bool disj2 = subset_of(a, b) && a != b;
          bool disj3 = a == b;
          bool shape = m.ll == one && m.lu == one && m.uu == one;
          if ((disj1 || disj2 || disj3) && !shape && fwd.holds) {
            fwd.holds = false;
            fwd.witness = lblpair(a, b);
          }
          if (shape && m.ul < one && !(disj1 || disj2 || disj3)) {
            conv.holds = false;
            if (!rep.converse_witness) {
              conv.witness = lblpair(a, b);
              rep.converse_witness = {a, b};
            }
          }
        }
      }
  } else {
    auto& bi = rep.items.add("all-ones-biconditional");
    bi.note = "all-ones iff empty uppers, or empty left upper with nonempty "
              "right upper, or the chain of inclusions";
    for (Mask a : fam)
      for (Mask b : fam) {
        Mask al = s.lower(a), au = s.upper(a), bl = s.lower(b), bu = s.upper(b);
        GrifMatrix m = zeta(s, tau, a, b);
        bool all_ones = m == GrifMatrix::ones();
        bool c1 = (au | bu) == 0;
        bool c2 = (au | bl) == 0 && bu != 0;
        bool c3 = subset_of(al, au) && subset_of(au, bl) && subset_of(bl, bu);
        if (all_ones != (c1 || c2 || c3)) {
          bi.holds = false;
          bi.witness = lblpair(a, b);
        }
      }
  }
  return rep;
}

// Necessary feasibility conditions on observed matrices: row monotonicity
// and the impossible pattern.
inline bool feasibility_filter(const std::vector<GrifMatrix>& ms) {
  const Rational one(1), zero(0);
  for (const auto& m : ms) {
    if (!(m.ll <= m.lu && m.ul <= m.uu)) return false;
    if (m.ll == zero && m.lu == one && m.ul == one && m.uu == one)
      return false;
  }
  return true;
}

// --- basic-matrix property suite -----------------------------------------------

struct MonotonicityReport {
  CheckReport items;
};

// ulu2, llu2, mo, refl, bot, top for the cardinality-based matrix, scanned
// exhaustively over the family.
inline MonotonicityReport monotonicity_check(const SetHgos& s) {
  MonotonicityReport rep;
  const auto& fam = s.family();
  InclusionFn k0 = InclusionFn::k0();
  const Rational one(1);
  auto lblpair = [&](Mask a, Mask b) {
    return "(" + s.universe().label(a) + "," + s.universe().label(b) + ")";
  };

  auto& ulu2 = rep.items.add("ulu2");
  auto& llu2 = rep.items.add("llu2");
  auto& refl = rep.items.add("refl");
  auto& bot = rep.items.add("bot");
  for (Mask a : fam) {
    GrifMatrix maa = zeta(s, k0, a, a);
    if (refl.holds && !(maa.ll == one && maa.uu == one && maa.lu <= one)) {
      refl.holds = false;
      refl.witness = s.universe().label(a);
    }
    GrifMatrix mba = zeta(s, k0, 0, a);
    if (bot.holds && mba != GrifMatrix::ones()) {
      bot.holds = false;
      bot.witness = s.universe().label(a);
    }
    for (Mask b : fam) {
      GrifMatrix m = zeta(s, k0, a, b);
      if (ulu2.holds && !(m.ul <= m.uu)) {
        ulu2.holds = false;
        ulu2.witness = lblpair(a, b);
      }
      if (llu2.holds && !(m.ll <= m.lu)) {
        llu2.holds = false;
        llu2.witness = lblpair(a, b);
      }
    }
  }

  auto& mo = rep.items.add("mo");
  for (Mask a : fam)
    for (Mask b : fam) {
      if (!mo.holds) break;
      for (Mask e : fam) {
        if (!(subset_of(b, e) && b != e)) continue;
        if (!matrix_leq(zeta(s, k0, a, b), zeta(s, k0, a, e))) {
          mo.holds = false;
          mo.witness = lblpair(a, b) + "->" + s.universe().label(e);
          break;
        }
      }
    }

  auto& topi = rep.items.add("top");
  Mask top = s.universe().full();
  if (!is_definite(s, top)) {
    topi.advisory = true;
    topi.note = "not applicable: top is not definite";
  } else {
    for (Mask a : fam)
      if (zeta(s, k0, a, top) != GrifMatrix::ones()) {
        topi.holds = false;
        topi.witness = s.universe().label(a);
        break;
      }
  }
  return rep;
}

// --- matrix-thresholded parametric approximations --------------------------------

struct GranularParamResult {
  std::vector<Mask> l_plus, u_plus;
  // members of u_plus whose positivity rests only on empty-denominator
  // guard entries
  std::vector<Mask> u_plus_guard_only;
};

inline GranularParamResult granular_param_approx(
    const SetHgos& s, const std::vector<Mask>& hslash, const InclusionFn& tau,
    Mask x, const GrifMatrix& one_o, const GrifMatrix& zero_o) {
  GranularParamResult out;
  auto seen = [](const std::vector<Mask>& v, Mask m) {
    return std::find(v.begin(), v.end(), m) != v.end();
  };
  for (Mask h : hslash) {
    GrifMatrix m = zeta(s, tau, h, x);
    if (m == one_o && !seen(out.l_plus, h)) out.l_plus.push_back(h);
    if (matrix_lt(zero_o, m) && !seen(out.u_plus, h)) {
      out.u_plus.push_back(h);
      // strict variant: guard entries forced to zero
      Mask hl = s.lower(h), hu = s.upper(h);
      GrifMatrix strict = m;
      if (hl == 0) strict.ll = strict.lu = Rational(0);
      if (hu == 0) strict.ul = strict.uu = Rational(0);
      if (!matrix_lt(zero_o, strict)) out.u_plus_guard_only.push_back(h);
    }
  }
  return out;
}

}  // namespace granulum
