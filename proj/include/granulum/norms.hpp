#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "granulum/core.hpp"

namespace granulum {

// Binary operation table over a declared finite grid in [0,1]; the grid
// must be closed under the operation.
struct NormTable {
  std::vector<Rational> grid;                       // sorted, contains 0 and 1
  std::map<std::pair<Rational, Rational>, Rational> values;

  void validate() const {
    if (grid.empty() || !std::is_sorted(grid.begin(), grid.end()))
      throw input_error("norm grid must be sorted");
    if (grid.front() != Rational(0) || grid.back() != Rational(1))
      throw input_error("norm grid must contain 0 and 1");
    for (const auto& [key, v] : values) {
      unit(v);
      if (std::find(grid.begin(), grid.end(), v) == grid.end())
        throw input_error("norm table not closed over its grid: " + to_frac(v));
    }
  }

  Rational at(const Rational& a, const Rational& b) const {
    auto it = values.find({a, b});
    if (it == values.end())
      throw input_error("norm table has no entry for (" + to_frac(a) + "," +
                        to_frac(b) + ")");
    return it->second;
  }
};

namespace detail {

// T0/S0 with the given unit, commutativity, monotonicity, associativity,
// evaluated exhaustively over the grid.
inline CheckReport check_monoid_axioms(const NormTable& t,
                                       const Rational& unit_elem,
                                       const char* unit_name) {
  CheckReport rep;
  const auto& g = t.grid;
  auto w1 = [&](const Rational& a) { return to_frac(a); };
  auto w2 = [&](const Rational& a, const Rational& b) {
    return "(" + to_frac(a) + "," + to_frac(b) + ")";
  };

  auto& u = rep.add(unit_name);
  for (const auto& a : g)
    if (t.at(a, unit_elem) != a) {
      u.holds = false;
      u.witness = w1(a);
      break;
    }

  auto& comm = rep.add("commutativity");
  for (const auto& a : g)
    for (const auto& b : g)
      if (comm.holds && t.at(a, b) != t.at(b, a)) {
        comm.holds = false;
        comm.witness = w2(a, b);
      }

  auto& mono = rep.add("monotonicity");
  for (const auto& a : g)
    for (const auto& b : g)
      for (const auto& c : g)
        if (mono.holds && b <= c && t.at(a, b) > t.at(a, c)) {
          mono.holds = false;
          mono.witness = "(" + to_frac(a) + "," + to_frac(b) + "," + to_frac(c) + ")";
        }

  auto& assoc = rep.add("associativity");
  for (const auto& a : g)
    for (const auto& b : g)
      for (const auto& c : g)
        if (assoc.holds && t.at(a, t.at(b, c)) != t.at(t.at(a, b), c)) {
          assoc.holds = false;
          assoc.witness = "(" + to_frac(a) + "," + to_frac(b) + "," + to_frac(c) + ")";
        }
  return rep;
}

}  // namespace detail

enum class TnormKind { min, product, lukasiewicz, custom };
enum class SnormKind { max, probabilistic, lukasiewicz, custom, derived };
enum class NegationKind { standard, custom };

class Negation {
 public:
  Negation() = default;  // standard 1 - x

  static Negation table(std::map<Rational, Rational> values) {
    Negation n;
    n.kind_ = NegationKind::custom;
    n.values_ = std::move(values);
    return n;
  }

  NegationKind kind() const { return kind_; }

  Rational apply(const Rational& x) const {
    if (kind_ == NegationKind::standard) return Rational(1) - unit(x);
    auto it = values_.find(x);
    if (it == values_.end())
      throw input_error("negation table has no entry for " + to_frac(x));
    return it->second;
  }

  const std::map<Rational, Rational>& values() const { return values_; }

 private:
  NegationKind kind_ = NegationKind::standard;
  std::map<Rational, Rational> values_;
};

struct NegationFlags {
  bool negation = false;  // I and Anti-mo and Weak
  bool weak = false;
  bool strong = false;
  std::string witness;
};

// Evaluates the negation conditions on the map's own grid. The grid must
// contain 0 and 1.
inline NegationFlags negation_check(const std::map<Rational, Rational>& n) {
  if (!n.count(Rational(0)) || !n.count(Rational(1)))
    throw precondition_error("negation grid must contain 0 and 1");
  NegationFlags f;
  bool cond_i = n.at(Rational(0)) == Rational(1) && n.at(Rational(1)) == Rational(0);
  bool anti = true, weak = true, strong = true;
  std::string w;
  for (const auto& [a, na] : n) {
    unit(a);
    unit(na);
    for (const auto& [b, nb] : n)
      if (a <= b && nb > na) {
        anti = false;
        w = "(" + to_frac(a) + "," + to_frac(b) + ")";
      }
    auto it = n.find(na);
    if (it == n.end()) {
      // n(n(x)) leaves the grid: the double-negation conditions fail closed
      weak = strong = false;
      w = to_frac(a);
      continue;
    }
    if (a > it->second) {
      weak = false;
      w = to_frac(a);
    }
    if (a != it->second) strong = false;
  }
  f.negation = cond_i && anti && weak;
  f.weak = weak;
  f.strong = f.negation && strong;
  f.witness = w;
  return f;
}

class Tnorm {
 public:
  Tnorm() = default;
  explicit Tnorm(TnormKind k) : kind_(k) {
    if (k == TnormKind::custom)
      throw input_error("custom t-norm needs a table");
  }

  static Tnorm custom(NormTable t) {
    t.validate();
    Tnorm out;
    out.kind_ = TnormKind::custom;
    out.table_ = std::move(t);
    out.axioms_ = detail::check_monoid_axioms(*out.table_, Rational(1), "T0");
    return out;
  }

  TnormKind kind() const { return kind_; }
  const std::optional<CheckReport>& axiom_report() const { return axioms_; }

  bool associativity_certified() const {
    if (kind_ != TnormKind::custom) return true;
    const CheckItem* a = axioms_->find("associativity");
    return a && a->holds;
  }

  Rational apply(const Rational& a, const Rational& b) const {
    unit(a);
    unit(b);
    switch (kind_) {
      case TnormKind::min:
        return std::min(a, b);
      case TnormKind::product:
        return a * b;
      case TnormKind::lukasiewicz:
        return std::max(a + b - Rational(1), Rational(0));
      case TnormKind::custom:
        return table_->at(a, b);
    }
    throw std::logic_error("unreachable");
  }

 private:
  TnormKind kind_ = TnormKind::min;
  std::optional<NormTable> table_;
  std::optional<CheckReport> axioms_;
};

class Snorm {
 public:
  Snorm() = default;
  explicit Snorm(SnormKind k) : kind_(k) {
    if (k == SnormKind::custom || k == SnormKind::derived)
      throw input_error("custom/derived s-norm needs construction data");
  }

  static Snorm custom(NormTable t) {
    t.validate();
    Snorm out;
    out.kind_ = SnormKind::custom;
    out.table_ = std::move(t);
    out.axioms_ = detail::check_monoid_axioms(*out.table_, Rational(0), "S0");
    return out;
  }

  // a + b = n(n(a) x n(b)) for a strong negation n
  static Snorm derived(Tnorm t, Negation n);

  SnormKind kind() const { return kind_; }
  const std::optional<CheckReport>& axiom_report() const { return axioms_; }

  bool associativity_certified() const {
    if (kind_ != SnormKind::custom) return true;
    const CheckItem* a = axioms_->find("associativity");
    return a && a->holds;
  }

  Rational apply(const Rational& a, const Rational& b) const {
    unit(a);
    unit(b);
    switch (kind_) {
      case SnormKind::max:
        return std::max(a, b);
      case SnormKind::probabilistic:
        return a + b - a * b;
      case SnormKind::lukasiewicz:
        return std::min(a + b, Rational(1));
      case SnormKind::custom:
        return table_->at(a, b);
      case SnormKind::derived:
        return neg_.apply(base_.apply(neg_.apply(a), neg_.apply(b)));
    }
    throw std::logic_error("unreachable");
  }

 private:
  SnormKind kind_ = SnormKind::max;
  std::optional<NormTable> table_;
  std::optional<CheckReport> axioms_;
  Tnorm base_;
  Negation neg_;
};

inline Snorm Snorm::derived(Tnorm t, Negation n) {
  if (n.kind() == NegationKind::custom) {
    auto flags = negation_check(n.values());
    if (!flags.strong)
      throw precondition_error("derived s-norm needs a strong negation");
  }
  Snorm out;
  out.kind_ = SnormKind::derived;
  out.base_ = std::move(t);
  out.neg_ = std::move(n);
  return out;
}

inline Snorm derive_snorm(Tnorm t, Negation n) {
  return Snorm::derived(std::move(t), std::move(n));
}

// A t-norm, an s-norm, and a negation over exact rationals.
struct NormTriple {
  Tnorm t;
  Snorm s;
  Negation n;
};

enum class FoldKind { t, s };

// Left fold of the binary norm over a nonempty argument list; custom
// tables must have certified associativity first.
template <class Norm>
inline Rational norm_fold(const Norm& op, std::span<const Rational> args) {
  if (args.empty()) throw precondition_error("norm fold needs arguments");
  if (!op.associativity_certified())
    throw precondition_error("custom norm table failed associativity");
  Rational acc = unit(args[0]);
  for (std::size_t i = 1; i < args.size(); ++i) acc = op.apply(acc, args[i]);
  return acc;
}

inline Rational norm_eval(const NormTriple& nt, FoldKind kind,
                          std::span<const Rational> args) {
  return kind == FoldKind::t ? norm_fold(nt.t, args) : norm_fold(nt.s, args);
}

// Residuum of a left-continuous t-norm: sup{c : c (x) a <= b}, closed forms
// for the built-ins. Custom tables carry no left-continuity certificate.
inline Rational residual_implication(const Tnorm& t, const Rational& a,
                                     const Rational& b) {
  unit(a);
  unit(b);
  switch (t.kind()) {
    case TnormKind::min:
      return a <= b ? Rational(1) : b;
    case TnormKind::product:
      return a <= b ? Rational(1) : b / a;
    case TnormKind::lukasiewicz:
      return std::min(Rational(1), Rational(1) - a + b);
    case TnormKind::custom:
      throw unsupported_error(
          "no left-continuity certificate for custom t-norm tables");
  }
  throw std::logic_error("unreachable");
}

inline TnormKind parse_tnorm(const std::string& s) {
  if (s == "min") return TnormKind::min;
  if (s == "product" || s == "prod") return TnormKind::product;
  if (s == "luk" || s == "lukasiewicz") return TnormKind::lukasiewicz;
  throw input_error("unknown t-norm: " + s);
}

inline SnormKind parse_snorm(const std::string& s) {
  if (s == "max") return SnormKind::max;
  if (s == "prob" || s == "probabilistic") return SnormKind::probabilistic;
  if (s == "luk" || s == "lukasiewicz") return SnormKind::lukasiewicz;
  if (s == "derived") return SnormKind::derived;
  throw input_error("unknown s-norm: " + s);
}

}  // namespace granulum
