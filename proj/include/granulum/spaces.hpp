#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "granulum/core.hpp"

namespace granulum {

// Set-based higher granular operator space: a family of subsets with
// approximations assembled from a designated granulation.
//
//   lower(X) = union of granules contained in X
//   upper(X) = union of granules meeting X
//
// The family defaults to the full powerset (universe <= 12 then); an
// explicit family can be supplied for larger universes.
class SetHgos {
 public:
  SetHgos() = default;

  SetHgos(Universe u, std::vector<Mask> granulation,
          std::optional<std::vector<Mask>> family = std::nullopt)
      : u_(std::move(u)), granules_(std::move(granulation)) {
    for (Mask g : granules_)
      if (!subset_of(g, u_.full()))
        throw input_error("granule not over the universe");
    if (family.has_value()) {
      family_ = std::move(*family);
      powerset_ = false;
      for (Mask x : family_)
        if (!subset_of(x, u_.full()))
          throw input_error("family member not over the universe");
    } else {
      if (u_.size() > 12)
        throw input_error(
            "powerset family needs universe <= 12; pass an explicit family");
      powerset_ = true;
      family_.resize(std::size_t{1} << u_.size());
      for (Mask x = 0; x < family_.size(); ++x) family_[x] = x;
    }
  }

  const Universe& universe() const { return u_; }
  const std::vector<Mask>& granules() const { return granules_; }
  const std::vector<Mask>& family() const { return family_; }
  bool powerset_family() const { return powerset_; }

  bool in_family(Mask x) const {
    if (powerset_) return subset_of(x, u_.full());
    return std::find(family_.begin(), family_.end(), x) != family_.end();
  }

  Mask lower(Mask x) const {
    Mask out = 0;
    for (Mask g : granules_)
      if (subset_of(g, x)) out |= g;
    return out;
  }

  Mask upper(Mask x) const {
    Mask out = 0;
    for (Mask g : granules_)
      if ((g & x) != 0) out |= g;
    return out;
  }

 private:
  Universe u_;
  std::vector<Mask> granules_;
  std::vector<Mask> family_;
  bool powerset_ = true;
};

inline SetHgos build_set_hgos(const Universe& u,
                              const std::vector<Mask>& granulation) {
  return SetHgos(u, granulation);
}

// Abstract granular operator space given by explicit predicate and partial
// operation tables. -1 marks an undefined entry.
struct AbstractGgs {
  std::vector<std::string> carrier;
  std::vector<std::vector<char>> part;  // parthood predicate P
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<int>> join, meet;
  std::vector<int> lower, upper;  // unary approximation maps
  std::vector<char> gamma;        // granule marks
  int bottom = -1, top = -1;

  int size() const { return static_cast<int>(carrier.size()); }

  bool p(int a, int b) const { return part.at(a).at(b) != 0; }
  bool le(int a, int b) const { return leq.at(a).at(b) != 0; }
  // proper parthood
  bool pp(int a, int b) const { return p(a, b) && !p(b, a); }

  int jn(int a, int b) const { return a < 0 || b < 0 ? -1 : join[a][b]; }
  int mt(int a, int b) const { return a < 0 || b < 0 ? -1 : meet[a][b]; }
  int lo(int a) const { return a < 0 ? -1 : lower[a]; }
  int up(int a) const { return a < 0 ? -1 : upper[a]; }

  std::vector<int> granule_list() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (gamma[i]) out.push_back(i);
    return out;
  }

  void validate() const {
    Universe{carrier};
    int n = size();
    auto square = [&](auto& t, const char* what) {
      if (static_cast<int>(t.size()) != n)
        throw input_error(std::string("malformed table: ") + what);
      for (const auto& row : t)
        if (static_cast<int>(row.size()) != n)
          throw input_error(std::string("malformed table: ") + what);
    };
    square(part, "parthood");
    square(leq, "leq");
    square(join, "join");
    square(meet, "meet");
    for (const auto& row : join)
      for (int v : row)
        if (v < -1 || v >= n) throw input_error("join result outside carrier");
    for (const auto& row : meet)
      for (int v : row)
        if (v < -1 || v >= n) throw input_error("meet result outside carrier");
    if (static_cast<int>(lower.size()) != n ||
        static_cast<int>(upper.size()) != n ||
        static_cast<int>(gamma.size()) != n)
      throw input_error("malformed unary table");
    for (int v : lower)
      if (v < -1 || v >= n) throw input_error("lower result outside carrier");
    for (int v : upper)
      if (v < -1 || v >= n) throw input_error("upper result outside carrier");
    if (bottom < 0 || bottom >= n || top < 0 || top >= n)
      throw input_error("bottom/top must lie in the carrier");
  }
};

// Views a set HGOS as an abstract space: carrier = family, parthood = set
// inclusion, total lattice operations = union/intersection.
inline AbstractGgs lift(const SetHgos& s) {
  AbstractGgs g;
  const auto& fam = s.family();
  int n = static_cast<int>(fam.size());
  auto index_of_mask = [&](Mask m) {
    for (int i = 0; i < n; ++i)
      if (fam[i] == m) return i;
    throw input_error("family is not closed under the lifted operation: " +
                      s.universe().label(m));
  };
  g.carrier.reserve(n);
  for (Mask m : fam) g.carrier.push_back(s.universe().label(m));
  g.part.assign(n, std::vector<char>(n, 0));
  g.leq = g.part;
  g.join.assign(n, std::vector<int>(n, -1));
  g.meet = g.join;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.part[i][j] = subset_of(fam[i], fam[j]);
      g.leq[i][j] = g.part[i][j];
      g.join[i][j] = index_of_mask(fam[i] | fam[j]);
      g.meet[i][j] = index_of_mask(fam[i] & fam[j]);
    }
  g.lower.resize(n);
  g.upper.resize(n);
  for (int i = 0; i < n; ++i) {
    g.lower[i] = index_of_mask(s.lower(fam[i]));
    g.upper[i] = index_of_mask(s.upper(fam[i]));
  }
  g.gamma.assign(n, 0);
  for (Mask gr : s.granules())
    g.gamma[index_of_mask(gr)] = 1;
  g.bottom = index_of_mask(0);
  g.top = index_of_mask(s.universe().full());
  return g;
}

enum class GgsMode { ggs, pre_ggs };

// Axiom scan over the full carrier. Partial-operation axioms are read as
// omega-equalities; atomic formulas over undefined terms are false.
inline CheckReport check_ggs_axioms(const AbstractGgs& g, GgsMode mode) {
  g.validate();
  CheckReport rep;
  int n = g.size();
  auto nm = [&](int i) { return i < 0 ? std::string("<undef>") : g.carrier[i]; };
  auto pair_w = [&](int a, int b) { return "(" + nm(a) + "," + nm(b) + ")"; };
  auto triple_w = [&](int a, int b, int c) {
    return "(" + nm(a) + "," + nm(b) + "," + nm(c) + ")";
  };
  auto weq = [](int a, int b) { return a < 0 || b < 0 || a == b; };

  auto& pt1 = rep.add("PT1");
  for (int a = 0; a < n && pt1.holds; ++a)
    if (!g.p(a, a)) {
      pt1.holds = false;
      pt1.witness = nm(a);
    }

  auto& pt2 = rep.add("PT2");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n && pt2.holds; ++b)
      if (a != b && g.p(a, b) && g.p(b, a)) {
        pt2.holds = false;
        pt2.witness = pair_w(a, b);
      }

  auto& idem = rep.add("IDEM");
  for (int a = 0; a < n && idem.holds; ++a)
    if (!weq(g.jn(a, a), a) || !weq(g.mt(a, a), a)) {
      idem.holds = false;
      idem.witness = nm(a);
    }

  auto& g1 = rep.add("G1");
  auto& g2 = rep.add("G2");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g1.holds && (!weq(g.jn(a, b), g.jn(b, a)) ||
                       !weq(g.mt(a, b), g.mt(b, a)))) {
        g1.holds = false;
        g1.witness = pair_w(a, b);
      }
      if (g2.holds && (!weq(g.mt(g.jn(a, b), a), a) ||
                       !weq(g.jn(g.mt(a, b), a), a))) {
        g2.holds = false;
        g2.witness = pair_w(a, b);
      }
    }

  auto& g3 = rep.add("G3");
  auto& g4 = rep.add("G4");
  for (int a = 0; a < n && (g3.holds || g4.holds); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (g3.holds &&
            !weq(g.jn(g.mt(a, b), c), g.mt(g.jn(a, c), g.jn(b, c)))) {
          g3.holds = false;
          g3.witness = triple_w(a, b, c);
        }
        if (g4.holds &&
            !weq(g.mt(g.jn(a, b), c), g.jn(g.mt(a, c), g.mt(b, c)))) {
          g4.holds = false;
          g4.witness = triple_w(a, b, c);
        }
      }

  auto& g5 = rep.add("G5");
  for (int a = 0; a < n && g5.holds; ++a)
    for (int b = 0; b < n && g5.holds; ++b) {
      int j = g.jn(a, b), m = g.mt(a, b);
      if (j >= 0 && ((j == b) != g.le(a, b))) {
        g5.holds = false;
        g5.witness = pair_w(a, b);
      }
      if (m >= 0 && ((m == a) != g.le(a, b))) {
        g5.holds = false;
        g5.witness = pair_w(a, b);
      }
    }

  if (mode == GgsMode::ggs) {
    auto& ul1 = rep.add("UL1");
    for (int a = 0; a < n && ul1.holds; ++a) {
      int l = g.lo(a), u = g.up(a);
      if (l < 0 || u < 0 || !g.p(l, a) || g.lo(l) != l ||
          !(g.up(u) >= 0 && g.p(u, g.up(u)))) {
        ul1.holds = false;
        ul1.witness = nm(a);
      }
    }
    auto& ul2 = rep.add("UL2");
    for (int a = 0; a < n && ul2.holds; ++a)
      for (int b = 0; b < n && ul2.holds; ++b)
        if (g.p(a, b)) {
          int la = g.lo(a), lb = g.lo(b), ua = g.up(a), ub = g.up(b);
          if (la < 0 || lb < 0 || ua < 0 || ub < 0 || !g.p(la, lb) ||
              !g.p(ua, ub)) {
            ul2.holds = false;
            ul2.witness = pair_w(a, b);
          }
        }
  } else {
    auto& pl0 = rep.add("PL0");
    auto& pu0 = rep.add("PU0");
    auto& pl1 = rep.add("PL1");
    for (int a = 0; a < n; ++a) {
      int l = g.lo(a), u = g.up(a);
      if (pl0.holds && l >= 0 && !g.p(l, a)) {
        pl0.holds = false;
        pl0.witness = nm(a);
      }
      if (pu0.holds && u >= 0 && !(g.up(u) >= 0 && g.p(u, g.up(u)))) {
        pu0.holds = false;
        pu0.witness = nm(a);
      }
      if (pl1.holds && !weq(g.lo(l), l)) {
        pl1.holds = false;
        pl1.witness = nm(a);
      }
    }
    auto& pul2 = rep.add("PUL2");
    for (int a = 0; a < n && pul2.holds; ++a)
      for (int b = 0; b < n && pul2.holds; ++b)
        if (g.p(a, b)) {
          int la = g.lo(a), lb = g.lo(b), ua = g.up(a), ub = g.up(b);
          if (la >= 0 && lb >= 0 && ua >= 0 && ub >= 0 &&
              (!g.p(la, lb) || !g.p(ua, ub))) {
            pul2.holds = false;
            pul2.witness = pair_w(a, b);
          }
        }
  }

  auto& ul3 = rep.add("UL3");
  {
    int bl = g.lo(g.bottom), bu = g.up(g.bottom);
    int tl = g.lo(g.top), tu = g.up(g.top);
    if (!(bl == g.bottom && bu == g.bottom && tl >= 0 && g.p(tl, g.top) &&
          tu >= 0 && g.p(tu, g.top))) {
      ul3.holds = false;
      ul3.witness = "(bottom,top)";
    }
  }

  auto& tb = rep.add("TB");
  for (int a = 0; a < n && tb.holds; ++a)
    if (!g.p(g.bottom, a) || !g.p(a, g.top)) {
      tb.holds = false;
      tb.witness = nm(a);
    }

  return rep;
}

// --- definiteness -----------------------------------------------------

struct DefinitenessFlags {
  bool lower_definite = false;
  bool upper_definite = false;
  bool definite = false;
  bool weakly_upper_definite = false;
  bool weakly_definite = false;
};

inline DefinitenessFlags classify_definiteness(const SetHgos& s, Mask x) {
  DefinitenessFlags f;
  Mask l = s.lower(x), u = s.upper(x);
  f.lower_definite = l == x;
  f.upper_definite = u == x;
  f.definite = f.lower_definite && f.upper_definite;
  f.weakly_upper_definite = s.upper(u) == u;
  f.weakly_definite = f.weakly_upper_definite && f.lower_definite;
  return f;
}

inline DefinitenessFlags classify_definiteness(const AbstractGgs& g, int x) {
  DefinitenessFlags f;
  int l = g.lo(x), u = g.up(x);
  f.lower_definite = l == x;
  f.upper_definite = u == x;
  f.definite = f.lower_definite && f.upper_definite;
  f.weakly_upper_definite = u >= 0 && g.up(u) == u;
  f.weakly_definite = f.weakly_upper_definite && f.lower_definite;
  return f;
}

inline bool is_definite(const SetHgos& s, Mask x) {
  return s.lower(x) == x && s.upper(x) == x;
}

// Any of the five definiteness flavors may serve as the crispness notion
// behind the pair/interval representations.
enum class DefinitenessNotion {
  definite,
  lower_definite,
  upper_definite,
  weakly_upper_definite,
  weakly_definite
};

inline bool is_crisp(const SetHgos& s, Mask x, DefinitenessNotion n) {
  DefinitenessFlags f = classify_definiteness(s, x);
  switch (n) {
    case DefinitenessNotion::definite: return f.definite;
    case DefinitenessNotion::lower_definite: return f.lower_definite;
    case DefinitenessNotion::upper_definite: return f.upper_definite;
    case DefinitenessNotion::weakly_upper_definite:
      return f.weakly_upper_definite;
    case DefinitenessNotion::weakly_definite: return f.weakly_definite;
  }
  return false;
}

// A careful measure may only be evaluated on crisp (definite) objects.
inline bool check_careful_measure(const std::vector<Mask>& domain,
                                  const SetHgos& s) {
  for (Mask x : domain)
    if (!is_definite(s, x)) return false;
  return true;
}

// --- admissibility ----------------------------------------------------

struct AdmissibilityReport {
  CheckItem wra, ls, fu;
  bool fu_vacuous = false;
};

// WRA is checked with the term language restricted to joins of granules
// (the empty join counting as bottom); LS and FU are checked verbatim.
// FU quantifies over distinct granule pairs unless include_equal is set.
inline AdmissibilityReport check_admissibility(const SetHgos& s,
                                               bool include_equal = false) {
  AdmissibilityReport rep;
  rep.wra = {"WRA", true, false, "", "term language: joins of granules"};
  rep.ls = {"LS", true, false, "", ""};
  rep.fu = {"FU", true, false, "", ""};

  auto union_of_contained_granules = [&](Mask x) {
    Mask out = 0;
    for (Mask g : s.granules())
      if (subset_of(g, x)) out |= g;
    return out;
  };

  for (Mask x : s.family()) {
    Mask l = s.lower(x), u = s.upper(x);
    if (rep.wra.holds && (union_of_contained_granules(l) != l ||
                          union_of_contained_granules(u) != u)) {
      rep.wra.holds = false;
      rep.wra.witness = s.universe().label(x);
    }
    if (rep.ls.holds)
      for (Mask g : s.granules())
        if (subset_of(g, x) && !subset_of(g, l)) {
          rep.ls.holds = false;
          rep.ls.witness =
              "(" + s.universe().label(g) + "," + s.universe().label(x) + ")";
          break;
        }
  }

  const auto& gs = s.granules();
  bool any_pair = false;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) {
      if (i == j && !include_equal) continue;
      if (i > j && gs[i] == gs[j]) continue;  // duplicates count once
      any_pair = true;
      bool found = false;
      for (Mask z : s.family()) {
        if (!is_definite(s, z)) continue;
        bool px = subset_of(gs[i], z) && gs[i] != z;
        bool pa = subset_of(gs[j], z) && gs[j] != z;
        if (i == j) pa = px;
        if (px && pa) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.fu.holds = false;
        rep.fu.witness =
            "(" + s.universe().label(gs[i]) + "," + s.universe().label(gs[j]) + ")";
      }
    }
  if (!any_pair) {
    rep.fu_vacuous = true;
    rep.fu.note = "fewer than two distinct granules; vacuously true";
  }
  return rep;
}

// --- rough object representations --------------------------------------

enum class RoughObjectKind { RL, RU, RW, RB, RD, RP, RIA, RI, ET, RND };

inline RoughObjectKind parse_rough_kind(const std::string& s) {
  if (s == "rl") return RoughObjectKind::RL;
  if (s == "ru") return RoughObjectKind::RU;
  if (s == "rw") return RoughObjectKind::RW;
  if (s == "rb") return RoughObjectKind::RB;
  if (s == "rd") return RoughObjectKind::RD;
  if (s == "rp") return RoughObjectKind::RP;
  if (s == "ria") return RoughObjectKind::RIA;
  if (s == "ri") return RoughObjectKind::RI;
  if (s == "et") return RoughObjectKind::ET;
  if (s == "rnd") return RoughObjectKind::RND;
  throw input_error("unknown rough object kind: " + s);
}

struct IntervalRecord {
  Mask lo = 0, hi = 0;
  std::vector<Mask> members;
};

struct RoughObjects {
  RoughObjectKind kind;
  std::vector<Mask> elements;                 // RL RU RW RB RND
  std::vector<std::pair<Mask, Mask>> pairs;   // RD RP
  std::vector<IntervalRecord> intervals;      // RIA RI
  std::vector<std::array<Mask, 3>> triples;   // ET
};

inline RoughObjects rough_objects(
    const SetHgos& s, RoughObjectKind kind,
    DefinitenessNotion crisp = DefinitenessNotion::definite) {
  RoughObjects out;
  out.kind = kind;
  auto interval_members = [&](Mask lo, Mask hi) {
    std::vector<Mask> ms;
    for (Mask y : s.family())
      if (subset_of(lo, y) && subset_of(y, hi)) ms.push_back(y);
    return ms;
  };
  switch (kind) {
    case RoughObjectKind::RL:
      for (Mask x : s.family())
        if (s.lower(x) != x) out.elements.push_back(x);
      break;
    case RoughObjectKind::RU:
      for (Mask x : s.family())
        if (s.upper(x) != x) out.elements.push_back(x);
      break;
    case RoughObjectKind::RW:
      for (Mask x : s.family()) {
        Mask u = s.upper(x);
        if (s.upper(u) != u) out.elements.push_back(x);
      }
      break;
    case RoughObjectKind::RB:
      for (Mask x : s.family())
        if (s.lower(x) != s.upper(x)) out.elements.push_back(x);
      break;
    case RoughObjectKind::RND:
      // on a set HGOS parthood is inclusion, so this reads: not u(x) <= l(x)
      for (Mask x : s.family())
        if (!subset_of(s.upper(x), s.lower(x))) out.elements.push_back(x);
      break;
    case RoughObjectKind::RD:
      for (Mask a : s.family())
        for (Mask b : s.family())
          if (a != b && subset_of(a, b) && is_crisp(s, a, crisp) &&
              is_crisp(s, b, crisp))
            out.pairs.emplace_back(a, b);
      break;
    case RoughObjectKind::RP: {
      std::set<std::pair<Mask, Mask>> seen;
      for (Mask x : s.family()) {
        Mask l = s.lower(x), u = s.upper(x);
        if (l != u && seen.insert({l, u}).second) out.pairs.emplace_back(l, u);
      }
      break;
    }
    case RoughObjectKind::RIA: {
      std::set<std::pair<Mask, Mask>> seen;
      for (Mask x : s.family()) {
        Mask l = s.lower(x), u = s.upper(x);
        if (l != u && seen.insert({l, u}).second)
          out.intervals.push_back({l, u, interval_members(l, u)});
      }
      break;
    }
    case RoughObjectKind::RI:
      for (Mask a : s.family())
        for (Mask b : s.family())
          if (subset_of(a, b) && is_crisp(s, a, crisp) && is_crisp(s, b, crisp))
            out.intervals.push_back({a, b, interval_members(a, b)});
      break;
    case RoughObjectKind::ET: {
      std::set<std::array<Mask, 3>> seen;
      for (Mask x : s.family()) {
        Mask l = s.lower(x);
        std::array<Mask, 3> t{l, s.upper(l), s.upper(x)};
        if (seen.insert(t).second) out.triples.push_back(t);
      }
      break;
    }
  }
  return out;
}

// --- one-point completion and quotient ----------------------------------

// Completes the partial approximation maps of a finite Pre-GS by routing
// undefined values to a fresh point and collapsing the forced class, per
// the minimal-element construction. Requires parthood = leq.
inline AbstractGgs complete_and_quotient(const AbstractGgs& pre) {
  pre.validate();
  int n = pre.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (pre.p(a, b) != pre.le(a, b))
        throw precondition_error("completion requires parthood = leq");

  // U: elements with an undefined approximation; H: P-minimal among them.
  std::vector<char> in_u(n, 0);
  for (int a = 0; a < n; ++a)
    if (pre.lower[a] < 0 || pre.upper[a] < 0) in_u[a] = 1;
  std::vector<char> in_h(n, 0);
  for (int a = 0; a < n; ++a) {
    if (!in_u[a]) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b)
      if (b != a && in_u[b] && pre.pp(b, a)) minimal = false;
    in_h[a] = minimal;
  }
  // collapse class: everything above H, plus all of U.
  std::vector<char> in_d(n, 0);
  for (int a = 0; a < n; ++a) {
    if (in_u[a]) in_d[a] = 1;
    for (int h = 0; h < n && !in_d[a]; ++h)
      if (in_h[h] && pre.p(h, a)) in_d[a] = 1;
  }

  std::vector<int> map(n, -1);
  AbstractGgs out;
  for (int a = 0; a < n; ++a)
    if (!in_d[a]) {
      map[a] = static_cast<int>(out.carrier.size());
      out.carrier.push_back(pre.carrier[a]);
    }
  int o = static_cast<int>(out.carrier.size());
  out.carrier.push_back("[o]");
  int m = o + 1;

  out.part.assign(m, std::vector<char>(m, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[a] >= 0 && map[b] >= 0 && pre.p(a, b))
        out.part[map[a]][map[b]] = 1;
  for (int x = 0; x < m; ++x) out.part[x][o] = 1;  // [o] tops the order
  out.leq = out.part;

  out.lower.assign(m, -1);
  out.upper.assign(m, -1);
  for (int a = 0; a < n; ++a) {
    if (map[a] < 0) continue;
    int l = pre.lower[a], u = pre.upper[a];
    out.lower[map[a]] = in_d[l] ? o : map[l];
    out.upper[map[a]] = in_d[u] ? o : map[u];
  }
  out.lower[o] = o;
  out.upper[o] = o;

  // lattice fragments recomputed as unique least upper / greatest lower
  // bounds of the quotient order
  out.join.assign(m, std::vector<int>(m, -1));
  out.meet.assign(m, std::vector<int>(m, -1));
  auto p_out = [&](int a, int b) { return out.part[a][b] != 0; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int lub = -1, glb = -1;
      for (int z = 0; z < m; ++z) {
        if (p_out(a, z) && p_out(b, z)) {
          bool least = true;
          for (int w = 0; w < m && least; ++w)
            if (p_out(a, w) && p_out(b, w) && !p_out(z, w)) least = false;
          if (least) lub = z;
        }
        if (p_out(z, a) && p_out(z, b)) {
          bool greatest = true;
          for (int w = 0; w < m && greatest; ++w)
            if (p_out(w, a) && p_out(w, b) && !p_out(w, z)) greatest = false;
          if (greatest) glb = z;
        }
      }
      out.join[a][b] = lub;
      out.meet[a][b] = glb;
    }

  out.gamma.assign(m, 0);
  for (int a = 0; a < n; ++a)
    if (pre.gamma[a]) {
      if (map[a] >= 0)
        out.gamma[map[a]] = 1;
      else
        out.gamma[o] = 1;
    }
  out.bottom = in_d[pre.bottom] ? o : map[pre.bottom];
  out.top = o;
  return out;
}

// --- morphisms ----------------------------------------------------------

struct GgsMorphism {
  AbstractGgs source;
  AbstractGgs target;
  std::vector<int> map;  // total on the source carrier
  // present when the target is a lifted set HGOS; masks per carrier index
  std::optional<std::vector<Mask>> target_masks;
  std::optional<Universe> target_universe;

  void validate() const {
    if (static_cast<int>(map.size()) != source.size())
      throw input_error("morphism map must cover the source carrier");
    for (int v : map)
      if (v < 0 || v >= target.size())
        throw input_error("morphism image outside the target carrier");
  }
};

inline GgsMorphism identity_morphism(const AbstractGgs& g) {
  GgsMorphism m;
  m.source = g;
  m.target = g;
  m.map.resize(g.size());
  for (int i = 0; i < g.size(); ++i) m.map[i] = i;
  return m;
}

inline GgsMorphism morphism_into_set_hgos(AbstractGgs source, const SetHgos& w,
                                          std::vector<int> map) {
  GgsMorphism m;
  m.source = std::move(source);
  m.target = lift(w);
  m.map = std::move(map);
  m.target_masks = w.family();
  m.target_universe = w.universe();
  m.validate();
  return m;
}

// Verifies the structure-preservation conditions by enumeration. In closed
// mode, definedness of a target operation on images must force definedness
// of the source operation.
inline CheckReport check_morphism(const GgsMorphism& mor, bool closed) {
  mor.validate();
  CheckReport rep;
  const AbstractGgs& s = mor.source;
  const AbstractGgs& t = mor.target;
  auto f = [&](int x) { return mor.map[x]; };
  auto nm = [&](int i) { return s.carrier[i]; };
  int n = s.size();

  auto& lu = rep.add("lu-morphism");
  for (int a = 0; a < n && lu.holds; ++a) {
    int sl = s.lo(a), su = s.up(a);
    if (sl >= 0 && t.lo(f(a)) != f(sl)) {
      lu.holds = false;
      lu.witness = nm(a);
    }
    if (su >= 0 && t.up(f(a)) != f(su)) {
      lu.holds = false;
      lu.witness = nm(a);
    }
  }

  auto& pm = rep.add("P-morphism");
  auto& lm = rep.add("leq-morphism");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (pm.holds && s.p(a, b) && !t.p(f(a), f(b))) {
        pm.holds = false;
        pm.witness = "(" + nm(a) + "," + nm(b) + ")";
      }
      if (lm.holds && s.le(a, b) && !t.le(f(a), f(b))) {
        lm.holds = false;
        lm.witness = "(" + nm(a) + "," + nm(b) + ")";
      }
    }

  auto& vm = rep.add("weak-join-morphism");
  auto& wm = rep.add("weak-meet-morphism");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int sj = s.jn(a, b), sm_ = s.mt(a, b);
      if (vm.holds && sj >= 0) {
        int tj = t.jn(f(a), f(b));
        if (tj >= 0 && tj != f(sj)) {
          vm.holds = false;
          vm.witness = "(" + nm(a) + "," + nm(b) + ")";
        }
      }
      if (wm.holds && sm_ >= 0) {
        int tm = t.mt(f(a), f(b));
        if (tm >= 0 && tm != f(sm_)) {
          wm.holds = false;
          wm.witness = "(" + nm(a) + "," + nm(b) + ")";
        }
      }
    }

  auto& zero = rep.add("condition-0");
  if (f(s.bottom) != t.bottom || f(s.top) != t.top) {
    zero.holds = false;
    zero.witness = "(bottom,top)";
  }

  if (closed) {
    auto& cl = rep.add("closed");
    for (int a = 0; a < n && cl.holds; ++a) {
      if (t.lo(f(a)) >= 0 && s.lo(a) < 0) {
        cl.holds = false;
        cl.witness = nm(a) + " (lower)";
      }
      if (cl.holds && t.up(f(a)) >= 0 && s.up(a) < 0) {
        cl.holds = false;
        cl.witness = nm(a) + " (upper)";
      }
      for (int b = 0; b < n && cl.holds; ++b) {
        if (t.jn(f(a), f(b)) >= 0 && s.jn(a, b) < 0) {
          cl.holds = false;
          cl.witness = "(" + nm(a) + "," + nm(b) + ") (join)";
        }
        if (cl.holds && t.mt(f(a), f(b)) >= 0 && s.mt(a, b) < 0) {
          cl.holds = false;
          cl.witness = "(" + nm(a) + "," + nm(b) + ") (meet)";
        }
      }
    }
  }
  return rep;
}

struct PhiCardinality {
  int value = 0;
  bool closed = false;
};

// Generalized cardinality of a source element through a morphism into a
// set HGOS.
inline PhiCardinality phi_cardinality(const GgsMorphism& mor, int a) {
  if (!mor.target_masks.has_value())
    throw precondition_error("phi-cardinality needs a set HGOS target");
  if (!check_morphism(mor, false).all_hold())
    throw precondition_error("map fails the morphism conditions");
  PhiCardinality out;
  out.value = card(mor.target_masks->at(mor.map.at(a)));
  out.closed = check_morphism(mor, true).all_hold();
  return out;
}

}  // namespace granulum
