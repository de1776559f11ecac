// Acceptance suite: one line per criterion, exact golden values and
// exhaustive scans at desk scale. Exit code 0 iff every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "granulum/grif.hpp"
#include "granulum/inverse.hpp"
#include "granulum/io.hpp"
#include "granulum/mereo.hpp"
#include "granulum/pilot.hpp"
#include "granulum/rif.hpp"

using namespace granulum;

namespace {

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& title, double limit_seconds,
                 const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = body();
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (ok && limit_seconds > 0 && secs > limit_seconds) {
      ok = false;
      detail += " [time limit exceeded]";
    }
    if (detail.rfind("FAIL:", 0) == 0) ok = false;
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
         << title << " (" << static_cast<long long>(secs * 1000) << " ms)";
    if (!detail.empty() && (!ok || detail.rfind("note:", 0) == 0))
      line << "\n        " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
};

std::string expect(bool cond, const std::string& what) {
  return cond ? std::string() : "FAIL: " + what;
}

SetHgos random_space(std::mt19937_64& rng, int max_universe = 5) {
  int n = 1 + static_cast<int>(rng() % max_universe);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::string(1, char('a' + i)));
  Universe u{ids};
  int blocks = static_cast<int>(rng() % 6);
  std::vector<Mask> gs;
  for (int b = 0; b < blocks; ++b)
    gs.push_back(static_cast<Mask>(rng() % (1u << n)));
  return SetHgos(u, gs);
}

bool k1_all_ones_biconditional(const SetHgos& s) {
  InclusionFn k1 = InclusionFn::k1();
  for (Mask a : s.family())
    for (Mask b : s.family()) {
      Mask al = s.lower(a), au = s.upper(a), bl = s.lower(b), bu = s.upper(b);
      bool all_ones = zeta(s, k1, a, b) == GrifMatrix::ones();
      bool c1 = (au | bu) == 0;
      bool c2 = (au | bl) == 0 && bu != 0;
      bool c3 = subset_of(al, au) && subset_of(au, bl) && subset_of(bl, bu);
      if (all_ones != (c1 || c2 || c3)) return false;
    }
  return true;
}

bool no_impossible_pattern(const SetHgos& s) {
  InclusionFn k0 = InclusionFn::k0();
  const Rational one(1), zero(0);
  for (Mask a : s.family())
    for (Mask b : s.family()) {
      GrifMatrix m = zeta(s, k0, a, b);
      if (m.ll == zero && m.lu == one && m.ul == one && m.uu == one)
        return false;
    }
  return true;
}

}  // namespace

int main() {
  Harness h;

  h.criterion(1, "golden neighborhoods and the 18-row approximation table", 1.0,
              [] {
                auto ns = successor_neighborhoods(fixtures::demo5_relation());
                const Universe& u = ns.universe;
                if (ns.nbd[u.index_of("a")] != u.parse_subset("a") ||
                    ns.nbd[u.index_of("b")] != u.parse_subset("a,b,e") ||
                    ns.nbd[u.index_of("c")] != u.parse_subset("c,e") ||
                    ns.nbd[u.index_of("e")] != u.parse_subset("c,f") ||
                    ns.nbd[u.index_of("f")] != u.parse_subset("e"))
                  return std::string("FAIL: neighborhood table mismatch");

                SetHgos s = fixtures::demo5_space();
                int corrected = 0;
                for (const auto& row : fixtures::golden_rows()) {
                  Mask x = u.parse_subset(row.member);
                  if (s.lower(x) != u.parse_subset(row.lower) ||
                      s.upper(x) != u.parse_subset(row.upper))
                    return "FAIL: row " + row.member;
                  if (row.lower != row.lower_printed) ++corrected;
                }
                if (corrected != 5)
                  return std::string("FAIL: corrected-cell count drifted");
                return std::string(
                    "note: 18 rows / 29 member sets exact; 5 printed lower "
                    "cells corrected to the definitional values (see "
                    "tests/fixtures.hpp)");
              });

  h.criterion(2, "worked matrix value for ({a,b},{a,c,f})", 1.0, [] {
    SetHgos s = fixtures::demo5_space();
    const Universe& u = s.universe();
    GrifMatrix m =
        zeta(s, InclusionFn::k0(), u.parse_subset("a,b"), u.parse_subset("a,c,f"));
    GrifMatrix want{Rational(1), Rational(1), Rational(1, 3), Rational(1)};
    return expect(m == want, "got " + m.str());
  });

  h.criterion(3, "mereology golden values on the diagnosis example", 1.0, [] {
    ParthoodRelation p = fixtures::doctors_parthood();
    const Universe& u = p.universe;
    Mask k = u.parse_subset("a,b,c,e");
    std::string r;
    r += expect(mereo_predicate(p, u.index_of("c"), k, MereoKind::fusion),
                "fusion(c,K)");
    r += expect(mereo_predicate(p, u.index_of("e"), k, MereoKind::fusion),
                "fusion(e,K)");
    r += expect(bounds(p, k, BoundKind::upper) == 0, "UB(K) nonempty");
    return r;
  });

  h.criterion(4, "impossible pattern never arises (exhaustive + random)", 60.0,
              [] {
                SetHgos s = fixtures::demo5_space();
                if (!no_impossible_pattern(s))
                  return std::string("FAIL: pattern on the worked space");
                std::mt19937_64 rng(41);
                for (int i = 0; i < 1000; ++i)
                  if (!no_impossible_pattern(random_space(rng)))
                    return "FAIL: pattern on random space " + std::to_string(i);
                return std::string();
              });

  h.criterion(5, "all-ones biconditional for the union-quotient function",
              60.0, [] {
                SetHgos s = fixtures::demo5_space();
                if (!k1_all_ones_biconditional(s))
                  return std::string("FAIL: biconditional on the worked space");
                std::mt19937_64 rng(41);
                for (int i = 0; i < 1000; ++i)
                  if (!k1_all_ones_biconditional(random_space(rng)))
                    return "FAIL: biconditional on random space " +
                           std::to_string(i);
                return std::string();
              });

  h.criterion(6, "shape theorem: necessary conditions hold, converse refuted",
              60.0, [] {
    SetHgos s = fixtures::demo5_space();
    const Universe& u = s.universe();
    auto rep = form_theorems(s, FormTau::k0);
    auto holds = [&](const char* n) {
      const CheckItem* it = rep.items.find(n);
      return it && it->holds;
    };
    std::string r;
    r += expect(holds("unit-entry-characterization"), "entry characterization");
    r += expect(holds("no-[[0,1],[1,1]]"), "impossible pattern");
    r += expect(holds("shape-forward"), "forward direction");
    const CheckItem* conv = rep.items.find("shape-converse");
    r += expect(conv && !conv->holds, "converse unexpectedly held");

    // the recorded refutation reproduces on the worked pair
    Mask a = u.parse_subset("a,b"), b = u.parse_subset("a,c,f");
    GrifMatrix m = zeta(s, InclusionFn::k0(), a, b);
    bool shape = m.ll == Rational(1) && m.lu == Rational(1) &&
                 m.uu == Rational(1) && m.ul < Rational(1);
    Mask al = s.lower(a), au = s.upper(a), bl = s.lower(b), bu = s.upper(b);
    bool disj1 = subset_of(al, bl) && al != bl && subset_of(bl, au) &&
                 bl != au && subset_of(au, bu) && au != bu;
    bool disj2 = subset_of(a, b) && a != b;
    bool disj3 = a == b;
    r += expect(shape && !(disj1 || disj2 || disj3),
                "witness pair no longer refutes the converse");

    // the necessary conditions also scan clean on random spaces
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100 && r.empty(); ++i) {
      auto rr = form_theorems(random_space(rng), FormTau::k0);
      const CheckItem* uc = rr.items.find("unit-entry-characterization");
      const CheckItem* np = rr.items.find("no-[[0,1],[1,1]]");
      const CheckItem* fw = rr.items.find("shape-forward");
      if (!(uc->holds && np->holds && fw->holds))
        r += "FAIL: necessary conditions on random space " + std::to_string(i);
    }
    if (r.empty())
      return std::string(
          "note: converse refuted as recorded; necessary conditions "
          "exhaustive");
    return r;
  });

  h.criterion(7, "implication battery with premise-necessity search", 30.0, [] {
    PrifReport rep = prif_oracle();
    std::string r;
    for (const auto& it : rep.implications)
      r += expect(it.holds, it.name + " refuted: " + it.witness);
    int missing = 0;
    std::string exception_note;
    for (const auto& d : rep.drops) {
      bool known_exception =
          d.implication == "prif8" && d.dropped == RifAxiom::IR0;
      if (known_exception) {
        r += expect(!d.counterexample_found,
                    "the known premise-drop exception found a counterexample");
        exception_note =
            "note: every dropped premise admits a counterexample except "
            "prif8 minus IR0 (the complement-sum axiom alone already forces "
            "R4 on the enumerable complemented domains)";
      } else if (!d.counterexample_found) {
        ++missing;
        r += "FAIL: no counterexample for " + d.implication + " minus " +
             axiom_name(d.dropped);
      }
    }
    (void)missing;
    if (r.empty()) return exception_note;
    return r;
  });

  h.criterion(8, "semiring laws exhaustively, distributivity counterexample",
              120.0, [] {
    std::vector<Rational> grid{Rational(0), Rational(1, 2), Rational(1)};
    NormTriple minmax{Tnorm{TnormKind::min}, Snorm{SnormKind::max}, Negation{}};
    auto rep = check_semiring(minmax, grid);
    std::string r;
    r += expect(rep.exhaustive && rep.triples == 81ll * 81 * 81,
                "scan was not exhaustive");
    for (const auto& it : rep.laws.items)
      r += expect(it.holds, "min/max law " + it.name + " at " + it.witness);

    NormTriple pl{Tnorm{TnormKind::product}, Snorm{SnormKind::lukasiewicz},
                  Negation{}};
    auto rep2 = check_semiring(pl, grid);
    const CheckItem* l = rep2.laws.find("l-distributivity");
    const CheckItem* rr = rep2.laws.find("r-distributivity");
    r += expect(!(l->holds && rr->holds),
                "distributivity held off the min/max pairing");
    return r;
  });

  h.criterion(9, "basic-matrix property suite (worked + 100 random spaces)",
              30.0, [] {
    auto gate = [](const MonotonicityReport& rep) {
      for (const auto& it : rep.items.items)
        if (!it.holds && !it.advisory) return false;
      return true;
    };
    auto rep = monotonicity_check(fixtures::demo5_space());
    std::string r;
    for (const auto& it : rep.items.items)
      r += expect(it.holds, "worked-space property " + it.name);
    std::mt19937_64 rng(47);
    for (int i = 0; i < 100 && r.empty(); ++i)
      if (!gate(monotonicity_check(random_space(rng))))
        r += "FAIL: property suite on random space " + std::to_string(i);
    return r;
  });

  h.criterion(10, "rescaled-function classification floors", 30.0, [] {
    SetHgos s = fixtures::demo5_space();
    InclusionFn k0 = InclusionFn::k0();
    auto at_least_wq = [](const std::string& c) {
      return c == "wqRIF" || c == "qRIF" || c == "RIF";
    };
    auto at_least_q = [](const std::string& c) {
      return c == "qRIF" || c == "RIF";
    };
    std::string r;
    for (int si = 1; si <= 7 && r.empty(); ++si) {
      for (int ti = si + 1; ti <= 7; ++ti) {
        auto p = check_rif_axioms(
            InclusionFn::kst(k0, Rational(si, 8), Rational(ti, 8)), s);
        if (!at_least_wq(p.classification))
          r += "FAIL: kst(" + std::to_string(si) + "/8," + std::to_string(ti) +
               "/8) classified " + p.classification;
      }
      auto p1 =
          check_rif_axioms(InclusionFn::kst(k0, Rational(si, 8), Rational(1)), s);
      if (!at_least_q(p1.classification))
        r += "FAIL: kst(" + std::to_string(si) + "/8,1) classified " +
             p1.classification;
    }
    return r;
  });

  h.criterion(11, "inverse round trip over all four-point relations", 120.0,
              [] {
    Universe u({"a", "b", "c", "d"});
    InclusionFn k0 = InclusionFn::k0();
    long long checked = 0;
    for (long long code = 0; code < (1ll << 16); ++code) {
      BinaryRelationSpace rel(u);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if ((code >> (i * 4 + j)) & 1) rel.relate(i, j);
      CandidateModel m{u, successor_neighborhoods(rel).nbd};
      auto obs = observations_from_model(m);
      auto fr = consistency_filter({m}, obs, k0);
      if (fr.survivors.size() != 1)
        return "FAIL: generating model eliminated at relation " +
               std::to_string(code);
      ++checked;
    }
    if (checked != 65536) return std::string("FAIL: scan incomplete");

    ObservationSet bad;
    GrifObservation g;
    g.a.set = Mask{1};
    g.b.set = Mask{2};
    g.m = {Rational(0), Rational(1), Rational(1), Rational(1)};
    bad.grifs.push_back(g);
    auto fr = consistency_filter(
        {CandidateModel{u, {Mask{1}, Mask{2}}}}, bad, k0);
    return expect(fr.prefilter_rejected && fr.survivors.empty(),
                  "infeasible observation set not rejected");
  });

  h.criterion(12, "pilot determinism and the discrimination gap", 30.0, [] {
    std::string r;
    r += expect(dataset_to_json(generate_dataset(3, 2, 1, 2, 7)).dump() ==
                    dataset_to_json(generate_dataset(3, 2, 1, 2, 7)).dump(),
                "dataset generation not bit-identical");
    Scenario sc = make_demo_scenario(7);
    DecisionLog l1 = run_scenario(sc, MeasureMode::grif, InclusionFn::k0());
    DecisionLog l2 = run_scenario(sc, MeasureMode::grif, InclusionFn::k0());
    bool same = l1.steps.size() == l2.steps.size();
    for (std::size_t i = 0; same && i < l1.steps.size(); ++i)
      same = l1.steps[i].line == l2.steps[i].line;
    r += expect(same, "scenario replay not bit-identical");
    r += expect(l1.improvement_pass, "demo scenario fails its own check");

    // scalar tie, matrix separation
    Universe u({"1", "2", "3", "4"});
    SetHgos s(u, {u.parse_subset("1"), u.parse_subset("1,2"),
                  u.parse_subset("3"), u.full()});
    Mask target = u.parse_subset("1,2");
    ActionSpec a1{"A1", EffectOp::assign, u.parse_subset("1,3")};
    ActionSpec a2{"A2", EffectOp::assign, u.parse_subset("2,3")};
    InclusionFn k0 = InclusionFn::k0();
    r += expect(k0.eval(a1.arg, target, u.full()) ==
                    k0.eval(a2.arg, target, u.full()),
                "scalar closeness did not tie");
    GrifMatrix m1 = zeta(s, k0, a1.arg, target);
    GrifMatrix m2 = zeta(s, k0, a2.arg, target);
    r += expect(matrix_lt(m2, m1), "matrix closeness did not separate");
    auto grif_rank =
        suggest_action(s, 0, {a2, a1}, target, MeasureMode::grif, k0);
    r += expect(grif_rank[0].name == "A1" && grif_rank[0].maximal &&
                    !grif_rank[1].maximal,
                "matrix ranking did not order the pair");
    auto rif_rank = suggest_action(s, 0, {a2, a1}, target, MeasureMode::rif, k0);
    r += expect(rif_rank[0].name == "A2",
                "scalar ranking should fall back to catalog order");
    if (r.empty())
      return std::string("note: discrimination gap detected as constructed");
    return r;
  });

  std::cout << (h.failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << " (" << (12 - h.failures) << "/12)" << std::endl;
  return h.failures == 0 ? 0 : 1;
}
