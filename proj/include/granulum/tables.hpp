#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "granulum/core.hpp"

namespace granulum {

// Information table with set-valued cells. Multi-valued (indeterministic)
// cells are first class; equality of valuations is set equality.
struct InformationTable {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  // cells[attribute][object] = sorted, deduplicated value tokens.
  std::vector<std::vector<std::vector<std::string>>> cells;

  int object_index(const std::string& id) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == id) return static_cast<int>(i);
    throw input_error("unknown object id: " + id);
  }

  int attribute_index(const std::string& id) const {
    for (std::size_t i = 0; i < attributes.size(); ++i)
      if (attributes[i] == id) return static_cast<int>(i);
    throw input_error("unknown attribute id: " + id);
  }

  const std::vector<std::string>& value(int attr, int obj) const {
    return cells.at(attr).at(obj);
  }

  void validate() const {
    Universe{objects};     // id uniqueness
    Universe{attributes};  // id uniqueness
    if (cells.size() != attributes.size())
      throw input_error("valuation must cover every attribute");
    for (const auto& row : cells) {
      if (row.size() != objects.size())
        throw input_error("valuation must cover every object");
      for (const auto& cell : row)
        if (!std::is_sorted(cell.begin(), cell.end()) ||
            std::adjacent_find(cell.begin(), cell.end()) != cell.end())
          throw input_error("valuation cells must be sorted token sets");
    }
  }
};

inline bool is_deterministic(const InformationTable& t) {
  for (const auto& row : t.cells)
    for (const auto& cell : row)
      if (cell.size() != 1) return false;
  return true;
}

// Binary relation over a named universe; rows[i] holds {j : (i,j) in pairs}.
struct BinaryRelationSpace {
  Universe universe;
  std::vector<Mask> rows;

  BinaryRelationSpace() = default;
  explicit BinaryRelationSpace(Universe u)
      : universe(std::move(u)), rows(universe.size(), 0) {}

  bool related(int i, int j) const { return has_bit(rows.at(i), j); }
  void relate(int i, int j) { rows.at(i) |= Mask{1} << j; }

  bool reflexive() const {
    for (int i = 0; i < universe.size(); ++i)
      if (!related(i, i)) return false;
    return true;
  }
  bool symmetric() const {
    for (int i = 0; i < universe.size(); ++i)
      for (int j = 0; j < universe.size(); ++j)
        if (related(i, j) != related(j, i)) return false;
    return true;
  }
  bool transitive() const {
    int n = universe.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (related(i, j))
          for (int k = 0; k < n; ++k)
            if (related(j, k) && !related(i, k)) return false;
    return true;
  }
  bool antisymmetric() const {
    for (int i = 0; i < universe.size(); ++i)
      for (int j = 0; j < universe.size(); ++j)
        if (i != j && related(i, j) && related(j, i)) return false;
    return true;
  }
};

// sigma(x,w) iff the value sets of x and w agree on every chosen attribute.
inline BinaryRelationSpace equivalence_from_table(
    const InformationTable& table, const std::vector<std::string>& attrs) {
  if (attrs.empty()) throw input_error("attribute selection must be nonempty");
  std::vector<int> sel;
  for (const auto& a : attrs) sel.push_back(table.attribute_index(a));

  BinaryRelationSpace rel{Universe(table.objects)};
  int n = rel.universe.size();
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < n; ++w) {
      bool same = true;
      for (int a : sel)
        if (table.value(a, x) != table.value(a, w)) {
          same = false;
          break;
        }
      if (same) rel.relate(x, w);
    }
  return rel;
}

// Neighborhood granules drawn from a binary relation: n(x) collects the
// elements whose successor set contains x. This is the orientation under
// which the tabulated five-element example reproduces.
struct NeighborhoodSystem {
  Universe universe;
  std::vector<Mask> nbd;
  bool is_cover = false;  // union of neighborhoods = universe
};

inline NeighborhoodSystem successor_neighborhoods(
    const BinaryRelationSpace& rel) {
  NeighborhoodSystem out;
  out.universe = rel.universe;
  int n = rel.universe.size();
  out.nbd.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rel.related(y, x)) out.nbd[x] |= Mask{1} << y;
  Mask covered = 0;
  for (Mask m : out.nbd) covered |= m;
  out.is_cover = covered == rel.universe.full();
  return out;
}

// Finite cover of a universe.
struct CoverSpace {
  Universe universe;
  std::vector<Mask> blocks;

  bool proper() const {
    Mask u = 0;
    for (Mask b : blocks) u |= b;
    return u == universe.full();
  }

  void validate() const {
    for (Mask b : blocks)
      if (!subset_of(b, universe.full()))
        throw input_error("cover block not over the universe");
  }
};

struct CoverNbd {
  Mask set = 0;
  // x lay in no block: intersection over the empty family is the universe.
  bool empty_family = false;
};

inline CoverNbd cover_nbd(const CoverSpace& cov, int x) {
  CoverNbd out;
  out.set = cov.universe.full();
  out.empty_family = true;
  for (Mask b : cov.blocks)
    if (has_bit(b, x)) {
      out.set &= b;
      out.empty_family = false;
    }
  return out;
}

inline std::vector<Mask> cover_md(const CoverSpace& cov, int x) {
  std::vector<Mask> out;
  for (Mask b : cov.blocks) {
    if (!has_bit(b, x)) continue;
    bool maximal = true;
    for (Mask c : cov.blocks)
      if (has_bit(c, x) && b != c && subset_of(b, c)) {
        maximal = false;
        break;
      }
    if (maximal && std::find(out.begin(), out.end(), b) == out.end())
      out.push_back(b);
  }
  return out;
}

inline Mask cover_fr(const CoverSpace& cov, int x) {
  Mask out = 0;
  for (Mask b : cov.blocks)
    if (has_bit(b, x)) out |= b;
  return out;
}

enum class CoverQueryKind { nbd, md, fr };

struct CoverQueryResult {
  CoverQueryKind kind;
  Mask set = 0;               // nbd / fr
  std::vector<Mask> family;   // md
  bool empty_family = false;  // nbd convention flag
};

inline CoverQueryResult cover_query(const CoverSpace& cov, int x,
                                    CoverQueryKind kind) {
  if (x < 0 || x >= cov.universe.size())
    throw input_error("cover query element outside the universe");
  CoverQueryResult r;
  r.kind = kind;
  switch (kind) {
    case CoverQueryKind::nbd: {
      auto nb = cover_nbd(cov, x);
      r.set = nb.set;
      r.empty_family = nb.empty_family;
      break;
    }
    case CoverQueryKind::md:
      r.family = cover_md(cov, x);
      break;
    case CoverQueryKind::fr:
      r.set = cover_fr(cov, x);
      break;
  }
  return r;
}

// Drops every block that is a maximal description of none of its points.
// Idempotent, and preserves MD(x) for every x.
inline CoverSpace cover_reduct(const CoverSpace& cov) {
  CoverSpace out;
  out.universe = cov.universe;
  for (Mask b : cov.blocks) {
    bool keep = false;
    for (int x = 0; x < cov.universe.size() && !keep; ++x) {
      if (!has_bit(b, x)) continue;
      auto md = cover_md(cov, x);
      keep = std::find(md.begin(), md.end(), b) != md.end();
    }
    if (keep) out.blocks.push_back(b);
  }
  return out;
}

// Partial algebra of valuation tokens. Operation tables use -1 as the
// definedness mask.
struct ValuationAlgebra {
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> meet, join;  // [i][j] -> carrier index or -1
  std::vector<int> neg;                      // [i] -> carrier index or -1
  int zero = -1, one = -1;

  int size() const { return static_cast<int>(carrier.size()); }

  void validate() const {
    Universe{carrier};
    auto check_table = [&](const std::vector<std::vector<int>>& t,
                           const char* what) {
      if (static_cast<int>(t.size()) != size())
        throw input_error(std::string("malformed operation table: ") + what);
      for (const auto& row : t) {
        if (static_cast<int>(row.size()) != size())
          throw input_error(std::string("malformed operation table: ") + what);
        for (int v : row)
          if (v < -1 || v >= size())
            throw input_error(std::string("operation result outside carrier: ") +
                              what);
      }
    };
    check_table(meet, "meet");
    check_table(join, "join");
    if (static_cast<int>(neg.size()) != size())
      throw input_error("malformed operation table: neg");
    for (int v : neg)
      if (v < -1 || v >= size())
        throw input_error("operation result outside carrier: neg");
    if (zero < 0 || zero >= size() || one < 0 || one >= size())
      throw input_error("distinguished tokens must lie in the carrier");
    if (zero == one && size() > 1)
      throw input_error("zero and one must differ on a multi-token carrier");
  }
};

namespace detail {

// omega-equality: if both sides are defined then they are equal.
inline bool omega_eq(int a, int b) { return a < 0 || b < 0 || a == b; }

}  // namespace detail

// Axiom report for a valuation algebra. Every omega-equality is read as
// "if both sides are defined then they are equal". The bounded-element
// axiom is reported twice: once in the printed orientation (a.0 = a and
// a+0 = 0), which inverts the usual bounded-lattice law, and once in the
// standard orientation; the aggregate keys on the standard line and the
// printed line stays advisory.
inline CheckReport check_valuation_algebra(const ValuationAlgebra& v) {
  v.validate();
  CheckReport rep;
  int n = v.size();
  auto name = [&](int i) { return v.carrier.at(i); };
  auto m = [&](int a, int b) { return a < 0 || b < 0 ? -1 : v.meet[a][b]; };
  auto j = [&](int a, int b) { return a < 0 || b < 0 ? -1 : v.join[a][b]; };
  auto ng = [&](int a) { return a < 0 ? -1 : v.neg[a]; };

  auto& wa = rep.add("WA");
  auto& wd = rep.add("WD");
  for (int a = 0; a < n && (wa.holds || wd.holds); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::string w = "(" + name(a) + "," + name(b) + "," + name(c) + ")";
        if (wa.holds && (!detail::omega_eq(m(a, m(b, c)), m(m(a, b), c)) ||
                         !detail::omega_eq(j(a, j(b, c)), j(j(a, b), c)))) {
          wa.holds = false;
          wa.witness = w;
        }
        if (wd.holds && (!detail::omega_eq(j(a, m(b, c)), m(j(a, b), j(a, c))) ||
                         !detail::omega_eq(m(a, j(b, c)), j(m(a, b), m(a, c))))) {
          wd.holds = false;
          wd.witness = w;
        }
      }

  auto& wc = rep.add("WC");
  auto& wab = rep.add("WAb");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::string w = "(" + name(a) + "," + name(b) + ")";
      if (wc.holds && (!detail::omega_eq(m(a, b), m(b, a)) ||
                       !detail::omega_eq(j(a, b), j(b, a)))) {
        wc.holds = false;
        wc.witness = w;
      }
      if (wab.holds && (!detail::omega_eq(j(m(a, b), a), a) ||
                        !detail::omega_eq(m(j(a, b), a), a))) {
        wab.holds = false;
        wab.witness = w;
      }
    }

  // Bo is a total requirement: undefined counts as failure.
  auto& bo = rep.add("Bo");
  bo.note = "standard orientation: a.0=0, a+0=a, a.1=a, a+1=1";
  auto& bov = rep.add("Bo-as-printed");
  bov.advisory = true;
  bov.note =
      "printed orientation a.0=a and a+0=0 inverts the usual bounded-lattice "
      "law; reported verbatim, aggregate keys on the standard line";
  for (int a = 0; a < n; ++a) {
    if (bo.holds && !(m(a, v.zero) == v.zero && j(a, v.zero) == a &&
                      m(a, v.one) == a && j(a, v.one) == v.one)) {
      bo.holds = false;
      bo.witness = name(a);
    }
    if (bov.holds && !(m(a, v.zero) == a && j(a, v.zero) == v.zero &&
                       m(a, v.one) == a && j(a, v.one) == v.one)) {
      bov.holds = false;
      bov.witness = name(a);
    }
  }

  auto& wcp = rep.add("WCp");
  auto& wneg = rep.add("WNeg");
  for (int a = 0; a < n; ++a) {
    if (wcp.holds && (!detail::omega_eq(m(a, ng(a)), v.zero) ||
                      !detail::omega_eq(j(a, ng(a)), v.one))) {
      wcp.holds = false;
      wcp.witness = name(a);
    }
    if (wneg.holds && !detail::omega_eq(ng(ng(ng(a))), ng(a))) {
      wneg.holds = false;
      wneg.witness = name(a);
    }
  }

  return rep;
}

}  // namespace granulum
