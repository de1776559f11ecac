#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "granulum/io.hpp"
#include "granulum/mereo.hpp"
#include "granulum/norms.hpp"

namespace granulum::cli {

// exit codes: 0 success, 1 check or verification failed (report emitted),
// 2 input/schema/usage error

inline json report_to_json(const CheckReport& rep) {
  json items = json::array();
  for (const auto& it : rep.items) {
    json o = {{"name", it.name}, {"holds", it.holds}};
    if (it.advisory) o["advisory"] = true;
    if (!it.witness.empty()) o["witness"] = it.witness;
    if (!it.note.empty()) o["note"] = it.note;
    items.push_back(o);
  }
  return {{"schema", kSchemaTag}, {"items", items}, {"all_hold", rep.all_hold()}};
}

inline InclusionFn tau_from_flags(const std::string& name, const std::string& s,
                                  const std::string& t) {
  if (name == "kst")
    return InclusionFn::kst(InclusionFn::k0(), parse_frac(s), parse_frac(t));
  return parse_rif(name);
}

inline NormTriple norms_from_flags(const std::string& tnorm,
                                   const std::string& snorm) {
  NormTriple nt;
  nt.t = Tnorm(parse_tnorm(tnorm));
  if (snorm == "derived")
    nt.s = derive_snorm(nt.t, Negation{});
  else
    nt.s = Snorm(parse_snorm(snorm));
  return nt;
}

inline int cmd_granules(const std::string& relation_file,
                        const std::string& cover_file,
                        const std::string& csv_file, const std::string& attrs,
                        const std::string& query, const std::string& kind,
                        bool reduct, bool table_out, bool discern,
                        bool minimize, std::ostream& out) {
  if (!relation_file.empty()) {
    auto rel = relation_from_json(load_json_file(relation_file));
    auto ns = successor_neighborhoods(rel);
    json nbd = json::object();
    for (int i = 0; i < ns.universe.size(); ++i)
      nbd[ns.universe.id(i)] = mask_to_json(ns.universe, ns.nbd[i]);
    if (table_out) {
      std::vector<std::vector<std::string>> rows{{"element", "neighborhood"}};
      for (int i = 0; i < ns.universe.size(); ++i)
        rows.push_back({ns.universe.id(i), ns.universe.label(ns.nbd[i])});
      out << render_table(rows);
    } else {
      out << json({{"schema", kSchemaTag},
                   {"neighborhoods", nbd},
                   {"cover", ns.is_cover}})
                 .dump()
          << "\n";
    }
    return 0;
  }
  if (!cover_file.empty()) {
    CoverSpace cov = cover_from_json(load_json_file(cover_file));
    if (reduct) {
      CoverSpace red = cover_reduct(cov);
      json blocks = json::array();
      for (Mask b : red.blocks) blocks.push_back(mask_to_json(red.universe, b));
      out << json({{"schema", kSchemaTag},
                   {"universe", red.universe.ids()},
                   {"blocks", blocks}})
                 .dump()
          << "\n";
      return 0;
    }
    if (query.empty()) throw input_error("cover mode needs --query or --reduct");
    int x = cov.universe.index_of(query);
    CoverQueryKind k = kind == "nbd"  ? CoverQueryKind::nbd
                       : kind == "md" ? CoverQueryKind::md
                       : kind == "fr" ? CoverQueryKind::fr
                                      : throw input_error("unknown kind: " + kind);
    auto r = cover_query(cov, x, k);
    json o = {{"schema", kSchemaTag}, {"kind", kind}};
    if (k == CoverQueryKind::md) {
      json fam = json::array();
      for (Mask b : r.family) fam.push_back(mask_to_json(cov.universe, b));
      o["family"] = fam;
    } else {
      o["set"] = mask_to_json(cov.universe, r.set);
      if (k == CoverQueryKind::nbd) o["empty_family"] = r.empty_family;
    }
    out << o.dump() << "\n";
    return 0;
  }
  if (!csv_file.empty()) {
    InformationTable t = table_from_csv_file(csv_file);
    if (discern) {
      CggsBundle b;
      b.table = t;
      Universe attr_universe{t.attributes};
      b.space = SetHgos(attr_universe, {});
      for (int i = 0; i < static_cast<int>(t.objects.size()); ++i)
        b.xi.emplace_back(i, Mask{0});
      b.valg.carrier = {"0", "1"};
      b.valg.meet = {{0, 0}, {0, 1}};
      b.valg.join = {{0, 1}, {1, 1}};
      b.valg.neg = {1, 0};
      b.valg.zero = 0;
      b.valg.one = 1;
      auto m = discernibility_matrix(b, standard_discernibility(b), minimize);
      json grid = json::array();
      for (int i = 0; i < m.order; ++i) {
        json row = json::array();
        for (int j = 0; j < m.order; ++j) {
          json entry = json::array();
          for (Mask x : m.entries[i][j])
            entry.push_back(mask_to_json(attr_universe, x));
          row.push_back(entry);
        }
        grid.push_back(row);
      }
      out << json({{"schema", kSchemaTag},
                   {"objects", t.objects},
                   {"matrix", grid}})
                 .dump()
          << "\n";
      return 0;
    }
    if (attrs.empty()) throw input_error("table mode needs --attrs");
    std::vector<std::string> sel;
    for (auto& a : split(attrs, ',')) sel.push_back(trim(a));
    auto rel = equivalence_from_table(t, sel);
    out << relation_to_json(rel).dump() << "\n";
    return 0;
  }
  throw input_error("granules needs --relation, --cover, or --csv");
}

inline int cmd_approx(const std::string& space_file, const std::string& x_csv,
                      bool all, bool with_accuracy, bool table_out,
                      const std::string& vprs_alpha, const std::string& vprs_beta,
                      bool vprs_fixed, const std::string& parametric,
                      const std::string& relation_file, const std::string& tau,
                      std::ostream& out) {
  SetHgos s = space_from_json(load_json_file(space_file));
  const Universe& u = s.universe();

  if (!parametric.empty()) {
    if (relation_file.empty())
      throw input_error("parametric mode needs --relation for the weak map");
    auto rel = relation_from_json(load_json_file(relation_file));
    auto ns = successor_neighborhoods(rel);
    ParametricKind kind = parse_parametric_kind(parametric);
    bool needs_r = kind == ParametricKind::low_r || kind == ParametricKind::up_r ||
                   kind == ParametricKind::low_rg || kind == ParametricKind::up_rg;
    auto res = parametric_approx(u, ns.nbd, parse_rif(tau), u.parse_subset(x_csv),
                                 kind,
                                 needs_r ? std::optional<BinaryRelationSpace>(rel)
                                         : std::nullopt);
    json o = {{"schema", kSchemaTag}, {"kind", parametric}};
    if (kind == ParametricKind::glow || kind == ParametricKind::gup) {
      json fam = json::array();
      for (Mask m : res.family) fam.push_back(mask_to_json(u, m));
      o["family"] = fam;
    } else {
      o["set"] = mask_to_json(u, res.points);
    }
    out << o.dump() << "\n";
    return 0;
  }

  if (!vprs_alpha.empty() || !vprs_beta.empty()) {
    auto [lo, up] = vprs_approx(s, u.parse_subset(x_csv), parse_frac(vprs_alpha),
                                parse_frac(vprs_beta), vprs_fixed);
    out << json({{"schema", kSchemaTag},
                 {"lower", mask_to_json(u, lo)},
                 {"upper", mask_to_json(u, up)}})
               .dump()
        << "\n";
    return 0;
  }

  if (all) {
    // rows grouped by identical (lower, upper)
    std::map<std::pair<Mask, Mask>, std::vector<Mask>> rows;
    for (Mask x : s.family()) rows[{s.lower(x), s.upper(x)}].push_back(x);
    if (table_out) {
      std::vector<std::vector<std::string>> t{{"objects", "lower", "upper"}};
      for (const auto& [lu, xs] : rows) {
        std::string objs;
        for (Mask x : xs) objs += (objs.empty() ? "" : " ") + u.label(x);
        t.push_back({objs, u.label(lu.first), u.label(lu.second)});
      }
      out << render_table(t);
    } else {
      json jrows = json::array();
      for (const auto& [lu, xs] : rows) {
        json objs = json::array();
        for (Mask x : xs) objs.push_back(mask_to_json(u, x));
        jrows.push_back({{"objects", objs},
                         {"lower", mask_to_json(u, lu.first)},
                         {"upper", mask_to_json(u, lu.second)}});
      }
      out << json({{"schema", kSchemaTag}, {"rows", jrows}}).dump() << "\n";
    }
    return 0;
  }

  Mask x = u.parse_subset(x_csv);
  if (!s.in_family(x)) throw input_error("x lies outside the space family");
  json o = {{"schema", kSchemaTag},
            {"lower", mask_to_json(u, s.lower(x))},
            {"upper", mask_to_json(u, s.upper(x))}};
  if (with_accuracy) o["accuracy"] = to_frac(accuracy(s, x));
  out << o.dump() << "\n";
  return 0;
}

inline int cmd_riff(const std::string& fn, const std::string& space_file,
                    bool profile, const std::string& a_csv,
                    const std::string& b_csv, const std::string& s_frac,
                    const std::string& t_frac, std::ostream& out) {
  SetHgos s = space_from_json(load_json_file(space_file));
  InclusionFn f = tau_from_flags(fn, s_frac, t_frac);
  if (profile) {
    RifProfile p = check_rif_axioms(f, s);
    json o = report_to_json(p.axioms);
    o["classification"] = p.classification;
    o["fn"] = fn;
    out << o.dump() << "\n";
    return 0;
  }
  Mask a = s.universe().parse_subset(a_csv), b = s.universe().parse_subset(b_csv);
  out << json({{"schema", kSchemaTag},
               {"fn", fn},
               {"value", to_frac(eval_rif(f, s, a, b))}})
             .dump()
      << "\n";
  return 0;
}

inline int cmd_grif(const std::string& space_file, const std::string& tau,
                    const std::string& kind, const std::string& a_csv,
                    const std::string& b_csv, const std::string& s_frac,
                    const std::string& t_frac, std::ostream& out) {
  SetHgos s = space_from_json(load_json_file(space_file));
  const Universe& u = s.universe();
  Mask a = u.parse_subset(a_csv), b = u.parse_subset(b_csv);
  InclusionFn f = tau_from_flags(tau, s_frac, t_frac);
  json o = {{"schema", kSchemaTag}, {"kind", kind}};
  if (kind == "zeta") {
    o["matrix"] = matrix_to_json(zeta(s, f, a, b));
  } else if (kind == "basic") {
    o["matrix"] = matrix_to_json(basic_grif(s, a, b));
  } else if (kind == "cobasic") {
    auto r = cobasic_grif(s, a, b);
    o["matrix"] = matrix_to_json(r.m);
    o["out_of_range"] = r.out_of_range;
  } else if (kind == "one-certain") {
    auto [pl, pu] = one_certain_grif(s, f, a, b);
    o["pair"] = {to_frac(pl), to_frac(pu)};
  } else if (kind == "two-certain") {
    auto [pl, pu] = two_certain_grif(s, f, a, b);
    o["pair"] = {to_frac(pl), to_frac(pu)};
  } else {
    throw input_error("unknown matrix kind: " + kind);
  }
  out << o.dump() << "\n";
  return 0;
}

inline int cmd_check(const std::string& ggs_file, bool pre,
                     const std::string& valg_file,
                     const std::string& morphism_file, bool closed,
                     const std::string& admissibility_file,
                     const std::string& separative_file,
                     const std::string& theorems_file, const std::string& tau,
                     bool semiring, const std::string& tnorm,
                     const std::string& snorm, const std::string& grid_csv,
                     bool prif, std::ostream& out) {
  bool ok = true;
  json result = {{"schema", kSchemaTag}};

  if (!ggs_file.empty()) {
    auto rep = check_ggs_axioms(ggs_from_json(load_json_file(ggs_file)),
                                pre ? GgsMode::pre_ggs : GgsMode::ggs);
    result["ggs"] = report_to_json(rep);
    ok = ok && rep.all_hold();
  }
  if (!valg_file.empty()) {
    auto rep = check_valuation_algebra(valg_from_json(load_json_file(valg_file)));
    result["valuation_algebra"] = report_to_json(rep);
    ok = ok && rep.all_hold();
  }
  if (!morphism_file.empty()) {
    auto rep = check_morphism(morphism_from_json(load_json_file(morphism_file)),
                              closed);
    result["morphism"] = report_to_json(rep);
    ok = ok && rep.all_hold();
  }
  if (!admissibility_file.empty()) {
    auto rep =
        check_admissibility(space_from_json(load_json_file(admissibility_file)));
    CheckReport flat;
    flat.items = {rep.wra, rep.ls, rep.fu};
    result["admissibility"] = report_to_json(flat);
    result["admissibility"]["fu_vacuous"] = rep.fu_vacuous;
    ok = ok && flat.all_hold();
  }
  if (!separative_file.empty()) {
    auto p = ParthoodRelation::from_relation(
        relation_from_json(load_json_file(separative_file)));
    auto rep = check_separative_theorems(p);
    CheckReport flat;
    flat.items = {rep.ssp, rep.ssp_as_printed, rep.fusion_bound_is_sum,
                  rep.sum_iff_fusion};
    result["separativity"] = report_to_json(flat);
    // SSP failing is a classification, not an error; theorems gate
    ok = ok && (rep.fusion_bound_is_sum.holds || rep.fusion_bound_is_sum.advisory) &&
         (rep.sum_iff_fusion.holds || rep.sum_iff_fusion.advisory);
  }
  if (!theorems_file.empty()) {
    SetHgos s = space_from_json(load_json_file(theorems_file));
    auto form = form_theorems(s, tau == "k1" ? FormTau::k1 : FormTau::k0);
    result["form"] = report_to_json(form.items);
    ok = ok && form.items.all_hold();
    auto mono = monotonicity_check(s);
    result["basic_matrix_properties"] = report_to_json(mono.items);
    ok = ok && mono.items.all_hold();
    auto incl = check_inclusion_theorem(s, tau_from_flags(tau, "0", "1"));
    result["r_inclusion"] = report_to_json(incl.properties);
    ok = ok && incl.properties.all_hold();
  }
  if (semiring) {
    std::vector<Rational> grid;
    for (auto& g : split(grid_csv.empty() ? "0,1/2,1" : grid_csv, ','))
      grid.push_back(parse_frac(trim(g)));
    auto rep = check_semiring(norms_from_flags(tnorm, snorm), grid);
    result["semiring"] = report_to_json(rep.laws);
    result["semiring"]["exhaustive"] = rep.exhaustive;
    result["semiring"]["triples"] = rep.triples;
    ok = ok && rep.laws.all_hold();
  }
  if (prif) {
    auto rep = prif_oracle();
    CheckReport flat;
    flat.items = rep.implications;
    json o = report_to_json(flat);
    json drops = json::array();
    for (const auto& d : rep.drops)
      drops.push_back({{"implication", d.implication},
                       {"dropped", axiom_name(d.dropped)},
                       {"counterexample_found", d.counterexample_found},
                       {"witness", d.witness}});
    o["premise_drops"] = drops;
    o["kappa_count"] = rep.kappa_count;
    result["prif"] = o;
    ok = ok && flat.all_hold();
  }
  out << result.dump() << "\n";
  return ok ? 0 : 1;
}

inline int cmd_inverse(const std::string& obs_file, const std::string& universe_csv,
                       const std::string& gen, const std::string& pool_file,
                       int max_blocks, const std::string& tau, int workers,
                       std::ostream& out) {
  std::vector<std::string> ids;
  for (auto& p : split(universe_csv, ',')) ids.push_back(trim(p));
  Universe u{ids};
  ObservationSet obs = observations_from_json(u, load_json_file(obs_file));
  InclusionFn f = parse_rif(tau);

  std::vector<CandidateModel> models;
  if (gen == "relations") {
    enumerate_models(u, GeneratorKind::relations, std::nullopt,
                     [&](const CandidateModel& m) {
                       models.push_back(m);
                       return true;
                     });
  } else if (gen == "pool") {
    if (pool_file.empty()) throw input_error("pool generator needs --pool");
    json pj = load_json_file(pool_file);
    require_schema(pj);
    PoolSpec spec;
    const char* key = pj.contains("blocks") ? "blocks" : "granules";
    if (!pj.contains(key))
      throw input_error("pool file needs a blocks or granules list");
    for (const auto& b : pj.at(key))
      spec.pool.push_back(mask_from_json(u, b, "pool block"));
    spec.max_blocks = max_blocks > 0 ? max_blocks
                                     : static_cast<int>(spec.pool.size());
    enumerate_models(u, GeneratorKind::granule_pools, spec,
                     [&](const CandidateModel& m) {
                       models.push_back(m);
                       return true;
                     });
  } else {
    throw input_error("unknown generator: " + gen);
  }

  FilterResult fr = consistency_filter(models, obs, f, workers);
  for (const auto& m : fr.survivors) out << model_to_json(m).dump() << "\n";
  return 0;
}

inline int cmd_pilot_gen(int n, int r, int q, int l, std::uint64_t seed,
                         const std::string& scenario_out, std::ostream& out) {
  DatasetBundle db = generate_dataset(n, r, q, l, seed);
  out << dataset_to_json(db).dump() << "\n";
  if (!scenario_out.empty()) {
    std::ofstream f(scenario_out);
    if (!f) throw input_error("cannot write " + scenario_out);
    f << scenario_to_json(make_demo_scenario(seed)).dump(2) << "\n";
  }
  return 0;
}

inline int cmd_pilot_run(const std::string& scenario_file,
                         const std::string& measure, const std::string& tau,
                         bool interactive, std::istream& in, std::ostream& out) {
  Scenario sc = scenario_from_json(load_json_file(scenario_file));
  MeasureMode mode = measure == "rif" ? MeasureMode::rif : MeasureMode::grif;
  InclusionFn f = parse_rif(tau);
  if (!interactive) {
    DecisionLog log = run_scenario(sc, mode, f);
    for (const auto& st : log.steps) out << st.line << "\n";
    out << json({{"schema", kSchemaTag},
                 {"improvement_pass", log.improvement_pass},
                 {"improvement_strict", log.improvement_strict},
                 {"detail", log.improvement_detail},
                 {"chosen", {log.chosen_primary, log.chosen_secondary}}})
               .dump()
        << "\n";
    return log.improvement_pass ? 0 : 1;
  }
  // interactive stepping reuses the ranking verbatim; the human picks by index
  auto choose = [&](Mask state, const std::vector<ActionSpec>& catalog,
                    Mask target, const char* stage) {
    auto ranked = suggest_action(sc.space, state, catalog, target, mode, f);
    out << stage << " actions:\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      out << "  [" << i << "] " << ranked[i].name;
      if (mode == MeasureMode::grif)
        out << " closeness " << ranked[i].closeness.str();
      else
        out << " closeness " << to_frac(ranked[i].scalar);
      if (!ranked[i].tiebreak.empty()) out << " (" << ranked[i].tiebreak << ")";
      out << "\n";
    }
    out << "choose index (empty = top): " << std::flush;
    std::string line;
    std::getline(in, line);
    std::size_t pick = 0;
    if (!trim(line).empty()) pick = std::stoul(trim(line));
    if (pick >= ranked.size()) pick = 0;
    out << "performing " << ranked[pick].name << "\n";
  };
  choose(sc.sok_est, sc.primary, sc.sok_true, "primary");
  choose(sc.sok1_est, sc.secondary, sc.sok1_true, "secondary");
  return 0;
}

inline int cmd_norms(const std::string& tnorm, const std::string& snorm,
                     const std::string& eval_csv, const std::string& residuum_csv,
                     bool derive, std::ostream& out) {
  if (!residuum_csv.empty()) {
    auto parts = split(residuum_csv, ',');
    if (parts.size() != 2) throw input_error("--residuum needs \"a,b\"");
    Tnorm t{parse_tnorm(tnorm)};
    out << json({{"schema", kSchemaTag},
                 {"value", to_frac(residual_implication(
                               t, parse_frac(trim(parts[0])),
                               parse_frac(trim(parts[1]))))}})
               .dump()
        << "\n";
    return 0;
  }
  if (derive) {
    Snorm s = derive_snorm(Tnorm{parse_tnorm(tnorm)}, Negation{});
    json grid = json::array();
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j)
        grid.push_back({to_frac(Rational(i, 4)), to_frac(Rational(j, 4)),
                        to_frac(s.apply(Rational(i, 4), Rational(j, 4)))});
    out << json({{"schema", kSchemaTag}, {"derived", grid}}).dump() << "\n";
    return 0;
  }
  if (eval_csv.empty()) throw input_error("norms needs --eval or --residuum");
  std::vector<Rational> args;
  for (auto& p : split(eval_csv, ',')) args.push_back(parse_frac(trim(p)));
  NormTriple nt = norms_from_flags(tnorm, snorm.empty() ? "max" : snorm);
  json o = {{"schema", kSchemaTag}};
  o["t_fold"] = to_frac(norm_eval(nt, FoldKind::t, args));
  o["s_fold"] = to_frac(norm_eval(nt, FoldKind::s, args));
  out << o.dump() << "\n";
  return 0;
}

inline int dispatch(std::vector<std::string> args, std::ostream& out,
                    std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"finite granular rough-set computation"};
  app.require_subcommand(1);

  // granules
  auto* granules = app.add_subcommand("granules", "derive granulations");
  std::string g_rel, g_cov, g_csv, g_attrs, g_query, g_kind = "nbd";
  bool g_reduct = false, g_table = false, g_discern = false, g_minimize = false;
  granules->add_option("--relation", g_rel);
  granules->add_option("--cover", g_cov);
  granules->add_option("--csv", g_csv);
  granules->add_option("--attrs", g_attrs);
  granules->add_option("--query", g_query);
  granules->add_option("--kind", g_kind)->check(CLI::IsMember({"nbd", "md", "fr"}));
  granules->add_flag("--reduct", g_reduct);
  granules->add_flag("--table", g_table);
  granules->add_flag("--discern", g_discern);
  granules->add_flag("--minimize", g_minimize);

  // approx
  auto* approx = app.add_subcommand("approx", "compute approximations");
  std::string a_space, a_x, a_alpha, a_beta, a_parametric, a_rel, a_tau = "k0";
  bool a_all = false, a_acc = false, a_table = false, a_fixed = false;
  approx->add_option("--space", a_space)->required();
  approx->add_option("--x", a_x);
  approx->add_flag("--all", a_all);
  approx->add_flag("--accuracy", a_acc);
  approx->add_flag("--table", a_table);
  approx->add_option("--alpha", a_alpha);
  approx->add_option("--beta", a_beta);
  approx->add_flag("--fixed", a_fixed);
  approx->add_option("--parametric", a_parametric);
  approx->add_option("--relation", a_rel);
  approx->add_option("--tau", a_tau);

  // riff
  auto* riff = app.add_subcommand("riff", "inclusion-function values and profiles");
  std::string r_fn = "k0", r_space, r_a, r_b, r_s = "0", r_t = "1";
  bool r_profile = false;
  riff->add_option("--fn", r_fn)->check(CLI::IsMember({"k0", "k1", "k2", "kst"}));
  riff->add_option("--space", r_space)->required();
  riff->add_flag("--profile", r_profile);
  riff->add_option("--a", r_a);
  riff->add_option("--b", r_b);
  riff->add_option("--s", r_s);
  riff->add_option("--t", r_t);

  // grif
  auto* grif = app.add_subcommand("grif", "matrix-valued inclusion");
  std::string m_space, m_tau = "k0", m_kind = "zeta", m_a, m_b, m_s = "0",
              m_t = "1";
  grif->add_option("--space", m_space)->required();
  grif->add_option("--tau", m_tau);
  grif->add_option("--kind", m_kind)
      ->check(CLI::IsMember({"zeta", "basic", "cobasic", "one-certain",
                             "two-certain"}));
  grif->add_option("--a", m_a)->required();
  grif->add_option("--b", m_b)->required();
  grif->add_option("--s", m_s);
  grif->add_option("--t", m_t);

  // check
  auto* check = app.add_subcommand("check", "axiom and theorem verification");
  std::string c_ggs, c_valg, c_mor, c_adm, c_sep, c_thm, c_tau = "k0",
              c_tnorm = "min", c_snorm = "max", c_grid;
  bool c_pre = false, c_closed = false, c_semiring = false, c_prif = false;
  check->add_option("--ggs", c_ggs);
  check->add_flag("--pre", c_pre);
  check->add_option("--valg", c_valg);
  check->add_option("--morphism", c_mor);
  check->add_flag("--closed", c_closed);
  check->add_option("--admissibility", c_adm);
  check->add_option("--separative", c_sep);
  check->add_option("--theorems", c_thm);
  check->add_option("--tau", c_tau);
  check->add_flag("--semiring", c_semiring);
  check->add_option("--tnorm", c_tnorm);
  check->add_option("--snorm", c_snorm);
  check->add_option("--grid", c_grid);
  check->add_flag("--prif", c_prif);

  // inverse
  auto* inverse = app.add_subcommand("inverse", "model filtering");
  std::string i_obs, i_universe, i_gen = "relations", i_pool, i_tau = "k0";
  int i_max_blocks = 0, i_workers = 1;
  inverse->add_option("--obs", i_obs)->required();
  inverse->add_option("--universe", i_universe)->required();
  inverse->add_option("--gen", i_gen)->check(CLI::IsMember({"relations", "pool"}));
  inverse->add_option("--pool", i_pool);
  inverse->add_option("--max-blocks", i_max_blocks);
  inverse->add_option("--tau", i_tau);
  inverse->add_option("--workers", i_workers);

  // pilot
  auto* pilot = app.add_subcommand("pilot", "decision-schema simulation");
  auto* pilot_gen = pilot->add_subcommand("gen", "generate a benchmark dataset");
  int p_n = 3, p_r = 2, p_q = 1, p_l = 2;
  std::uint64_t p_seed = 0;
  std::string p_scenario_out;
  pilot_gen->add_option("--n", p_n);
  pilot_gen->add_option("--r", p_r);
  pilot_gen->add_option("--q", p_q);
  pilot_gen->add_option("--l", p_l);
  pilot_gen->add_option("--seed", p_seed);
  pilot_gen->add_option("--scenario-out", p_scenario_out);
  auto* pilot_run = pilot->add_subcommand("run", "replay a scenario");
  std::string p_scenario, p_measure = "grif", p_tau = "k0";
  bool p_interactive = false;
  pilot_run->add_option("--scenario", p_scenario)->required();
  pilot_run->add_option("--measure", p_measure)
      ->check(CLI::IsMember({"grif", "rif"}));
  pilot_run->add_option("--tau", p_tau);
  pilot_run->add_flag("--interactive", p_interactive);
  pilot->require_subcommand(1);

  // norms
  auto* norms = app.add_subcommand("norms", "norm evaluation");
  std::string n_tnorm = "min", n_snorm, n_eval, n_residuum;
  bool n_derive = false;
  norms->add_option("--tnorm", n_tnorm);
  norms->add_option("--snorm", n_snorm);
  norms->add_option("--eval", n_eval);
  norms->add_option("--residuum", n_residuum);
  norms->add_flag("--derive", n_derive);

  try {
    std::vector<const char*> argv;
    argv.push_back("granulum");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (granules->parsed())
      return cmd_granules(g_rel, g_cov, g_csv, g_attrs, g_query, g_kind,
                          g_reduct, g_table, g_discern, g_minimize, out);
    if (approx->parsed())
      return cmd_approx(a_space, a_x, a_all, a_acc, a_table, a_alpha, a_beta,
                        a_fixed, a_parametric, a_rel, a_tau, out);
    if (riff->parsed())
      return cmd_riff(r_fn, r_space, r_profile, r_a, r_b, r_s, r_t, out);
    if (grif->parsed())
      return cmd_grif(m_space, m_tau, m_kind, m_a, m_b, m_s, m_t, out);
    if (check->parsed())
      return cmd_check(c_ggs, c_pre, c_valg, c_mor, c_closed, c_adm, c_sep,
                       c_thm, c_tau, c_semiring, c_tnorm, c_snorm, c_grid,
                       c_prif, out);
    if (inverse->parsed())
      return cmd_inverse(i_obs, i_universe, i_gen, i_pool, i_max_blocks, i_tau,
                         i_workers, out);
    if (pilot->parsed()) {
      if (pilot_gen->parsed())
        return cmd_pilot_gen(p_n, p_r, p_q, p_l, p_seed, p_scenario_out, out);
      return cmd_pilot_run(p_scenario, p_measure, p_tau, p_interactive, in, out);
    }
    if (norms->parsed())
      return cmd_norms(n_tnorm, n_snorm, n_eval, n_residuum, n_derive, out);
    err << app.help();
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace granulum::cli
