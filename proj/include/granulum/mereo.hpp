#pragma once

#include <functional>
#include <string>
#include <vector>

#include "granulum/core.hpp"
#include "granulum/spaces.hpp"
#include "granulum/tables.hpp"

namespace granulum {

// Finite parthood relation. Reflexivity and transitivity are checkable
// properties, not requirements.
struct ParthoodRelation {
  Universe universe;
  std::vector<Mask> rows;  // rows[i] = {j : P i j}

  ParthoodRelation() = default;
  explicit ParthoodRelation(Universe u)
      : universe(std::move(u)), rows(universe.size(), 0) {}

  static ParthoodRelation from_relation(const BinaryRelationSpace& r) {
    ParthoodRelation p;
    p.universe = r.universe;
    p.rows = r.rows;
    return p;
  }

  int size() const { return universe.size(); }
  bool p(int a, int b) const { return has_bit(rows.at(a), b); }
  void relate(int a, int b) { rows.at(a) |= Mask{1} << b; }
  bool pp(int a, int b) const { return p(a, b) && !p(b, a); }

  // parts of a: {z : P z a}
  Mask parts(int a) const {
    Mask m = 0;
    for (int z = 0; z < size(); ++z)
      if (p(z, a)) m |= Mask{1} << z;
    return m;
  }

  // overlap set O(x) = {y : some z is part of both x and y}
  Mask overlap(int x) const {
    Mask px = parts(x), m = 0;
    for (int y = 0; y < size(); ++y)
      if ((px & parts(y)) != 0) m |= Mask{1} << y;
    return m;
  }

  bool reflexive() const {
    for (int i = 0; i < size(); ++i)
      if (!p(i, i)) return false;
    return true;
  }
  bool transitive() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (p(i, j))
          for (int k = 0; k < size(); ++k)
            if (p(j, k) && !p(i, k)) return false;
    return true;
  }
};

enum class BoundKind { upper, lower };

inline Mask bounds(const ParthoodRelation& p, Mask x, BoundKind kind) {
  Mask out = 0;
  for (int a = 0; a < p.size(); ++a) {
    bool ok = true;
    for (int e = 0; e < p.size() && ok; ++e)
      if (has_bit(x, e))
        ok = kind == BoundKind::upper ? p.p(e, a) : p.p(a, e);
    if (ok) out |= Mask{1} << a;
  }
  return out;
}

enum class MereoKind { sum, fusion };

// sum:    B <= P(a) <= union of O(x) over x in B
// fusion: O(a) = union of O(x) over x in B
// with O the standard mereological overlap (shared part).
inline bool mereo_predicate(const ParthoodRelation& p, int a, Mask b,
                            MereoKind kind) {
  if (a < 0 || a >= p.size() || !subset_of(b, p.universe.full()))
    throw input_error("element not in the carrier");
  Mask o_union = 0;
  for (int x = 0; x < p.size(); ++x)
    if (has_bit(b, x)) o_union |= p.overlap(x);
  if (kind == MereoKind::fusion) return p.overlap(a) == o_union;
  Mask pa = p.parts(a);
  return subset_of(b, pa) && subset_of(pa, o_union);
}

// Strong supplementation. The printed form asks for a part of a merely
// incomparable with b; the classical form asks for a part of a disjoint
// from b. Both are reported; the separativity theorems key on the
// classical form, the only reading under which the worked diagnosis
// example fails SSP.
struct SeparativityReport {
  CheckItem ssp;            // classical: exists z with P z a and not O(z,b)
  CheckItem ssp_as_printed; // exists z with P z a, not P z b, not P b z
  CheckItem fusion_bound_is_sum;  // reflexive P: fusion + upper bound => sum
  CheckItem sum_iff_fusion;       // transitive separative P
  bool reflexive = false;
  bool transitive = false;
};

inline SeparativityReport check_separative_theorems(
    const ParthoodRelation& p) {
  SeparativityReport rep;
  rep.reflexive = p.reflexive();
  rep.transitive = p.transitive();
  int n = p.size();
  if (n > 20) throw unsupported_error("carrier too large for subset scans");

  rep.ssp = {"SSP", true, false, "", "z is a part of a disjoint from b"};
  rep.ssp_as_printed = {"SSP-as-printed", true, true, "",
                        "z is a part of a incomparable with b"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (p.p(a, b)) continue;
      bool cls = false, lit = false;
      for (int z = 0; z < n; ++z) {
        if (!p.p(z, a)) continue;
        if ((p.parts(z) & p.parts(b)) == 0) cls = true;
        if (!p.p(z, b) && !p.p(b, z)) lit = true;
      }
      std::string w = "(" + p.universe.id(a) + "," + p.universe.id(b) + ")";
      if (rep.ssp.holds && !cls) {
        rep.ssp.holds = false;
        rep.ssp.witness = w;
      }
      if (rep.ssp_as_printed.holds && !lit) {
        rep.ssp_as_printed.holds = false;
        rep.ssp_as_printed.witness = w;
      }
    }

  rep.fusion_bound_is_sum = {"fusion-bound-is-sum", true, false, "", ""};
  if (!rep.reflexive) {
    rep.fusion_bound_is_sum.note = "not applicable: parthood not reflexive";
    rep.fusion_bound_is_sum.advisory = true;
  } else {
    for (int a = 0; a < n; ++a)
      for (Mask b = 0; b <= p.universe.full(); ++b)
        if (subset_of(b, p.parts(a)) &&
            mereo_predicate(p, a, b, MereoKind::fusion) &&
            !mereo_predicate(p, a, b, MereoKind::sum)) {
          rep.fusion_bound_is_sum.holds = false;
          rep.fusion_bound_is_sum.witness =
              "(" + p.universe.id(a) + "," + p.universe.label(b) + ")";
        }
  }

  rep.sum_iff_fusion = {"sum-iff-fusion", true, false, "", ""};
  if (!rep.transitive || !rep.ssp.holds) {
    rep.sum_iff_fusion.note =
        "not applicable: needs transitive separative parthood";
    rep.sum_iff_fusion.advisory = true;
  } else {
    for (int a = 0; a < n && rep.sum_iff_fusion.holds; ++a)
      for (Mask b = 0; b <= p.universe.full(); ++b)
        if (mereo_predicate(p, a, b, MereoKind::sum) !=
            mereo_predicate(p, a, b, MereoKind::fusion)) {
          rep.sum_iff_fusion.holds = false;
          rep.sum_iff_fusion.witness =
              "(" + p.universe.id(a) + "," + p.universe.label(b) + ")";
          break;
        }
  }
  return rep;
}

enum class IdealKind { ideal, principal };

// U(a,b) = {x : P a x and P b x}
inline Mask principal_upset(const ParthoodRelation& p, int a, int b) {
  Mask m = 0;
  for (int x = 0; x < p.size(); ++x)
    if (p.p(a, x) && p.p(b, x)) m |= Mask{1} << x;
  return m;
}

namespace detail {

inline bool is_p_ideal(const ParthoodRelation& p, Mask k) {
  for (int a = 0; a < p.size(); ++a) {
    if (!has_bit(k, a)) continue;
    for (int x = 0; x < p.size(); ++x)
      if (p.p(x, a) && !has_bit(k, x)) return false;  // down closure
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (has_bit(k, a) && has_bit(k, b) &&
          (principal_upset(p, a, b) & k) == 0)
        return false;
  return true;
}

}  // namespace detail

inline bool p_ideal_check(const ParthoodRelation& p, Mask k, IdealKind kind) {
  if (!subset_of(k, p.universe.full()))
    throw input_error("subset not over the carrier");
  if (kind == IdealKind::ideal) return detail::is_p_ideal(p, k);
  // principal: K is the intersection of all ideals containing some element
  if (p.size() > 20) throw unsupported_error("carrier too large");
  for (int a = 0; a < p.size(); ++a) {
    Mask inter = p.universe.full();
    bool any = false;
    for (Mask i = 0; i <= p.universe.full(); ++i)
      if (has_bit(i, a) && detail::is_p_ideal(p, i)) {
        inter &= i;
        any = true;
      }
    if (any && inter == k) return true;
  }
  return false;
}

// Square grid of discernibility witnesses drawn from a space of attribute
// subsets; diagonal entries stay empty.
struct DiscernibilityMatrix {
  int order = 0;
  std::vector<std::vector<std::vector<Mask>>> entries;
};

using DiscernibilityPredicate =
    std::function<bool(int obj_a, int obj_b, Mask element)>;

// Bundle of a data table with a granular space over its attribute subsets.
struct CggsBundle {
  InformationTable table;
  SetHgos space;  // universe = attribute ids
  std::vector<std::pair<int, Mask>> xi;  // (object index, space element)
  ValuationAlgebra valg;

  void validate() const {
    table.validate();
    valg.validate();
    for (const auto& [obj, elem] : xi) {
      if (obj < 0 || obj >= static_cast<int>(table.objects.size()))
        throw input_error("incidence references a missing object");
      if (!space.in_family(elem))
        throw input_error("incidence references a missing space element");
    }
  }
};

// Phi(a_i, a_j, x): some attribute in x separates the valuations of the
// two objects.
inline DiscernibilityPredicate standard_discernibility(const CggsBundle& b) {
  return [&b](int i, int j, Mask x) {
    for (int a = 0; a < static_cast<int>(b.table.attributes.size()); ++a)
      if (has_bit(x, a) && b.table.cells[a][i] != b.table.cells[a][j])
        return true;
    return false;
  };
}

inline DiscernibilityMatrix discernibility_matrix(
    const CggsBundle& bundle, const DiscernibilityPredicate& phi,
    bool minimize) {
  int n = static_cast<int>(bundle.table.objects.size());
  DiscernibilityMatrix m;
  m.order = n;
  m.entries.assign(n, std::vector<std::vector<Mask>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Mask> entry;
      for (Mask x : bundle.space.family())
        if (phi(i, j, x)) entry.push_back(x);
      if (minimize) {
        std::vector<Mask> mins;
        for (Mask x : entry) {
          bool minimal = true;
          for (Mask y : entry)
            if (y != x && subset_of(y, x)) {
              minimal = false;
              break;
            }
          if (minimal) mins.push_back(x);
        }
        entry = std::move(mins);
      }
      m.entries[i][j] = std::move(entry);
    }
  return m;
}

}  // namespace granulum
