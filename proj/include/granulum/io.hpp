#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "granulum/core.hpp"
#include "granulum/grif.hpp"
#include "granulum/inverse.hpp"
#include "granulum/pilot.hpp"
#include "granulum/spaces.hpp"
#include "granulum/tables.hpp"

namespace granulum {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "granulum/1";

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

inline void require_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchemaTag)
    throw input_error(std::string("document must carry \"schema\":\"") +
                      kSchemaTag + "\"");
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw input_error(std::string(what) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline json mask_to_json(const Universe& u, Mask m) {
  json a = json::array();
  for (const auto& n : u.names(m)) a.push_back(n);
  return a;
}

inline Mask mask_from_json(const Universe& u, const json& j, const char* what) {
  return u.subset(string_list(j, what));
}

// --- relations, covers, spaces ---------------------------------------------

inline BinaryRelationSpace relation_from_json(const json& j) {
  require_schema(j);
  BinaryRelationSpace rel{Universe(string_list(j.at("universe"), "universe"))};
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw input_error("relation pairs must be two-element arrays");
    rel.relate(rel.universe.index_of(p[0].get<std::string>()),
               rel.universe.index_of(p[1].get<std::string>()));
  }
  return rel;
}

inline json relation_to_json(const BinaryRelationSpace& rel) {
  json pairs = json::array();
  for (int i = 0; i < rel.universe.size(); ++i)
    for (int k = 0; k < rel.universe.size(); ++k)
      if (rel.related(i, k))
        pairs.push_back({rel.universe.id(i), rel.universe.id(k)});
  return {{"schema", kSchemaTag},
          {"universe", rel.universe.ids()},
          {"pairs", pairs}};
}

inline CoverSpace cover_from_json(const json& j) {
  require_schema(j);
  CoverSpace cov;
  cov.universe = Universe(string_list(j.at("universe"), "universe"));
  for (const auto& b : j.at("blocks"))
    cov.blocks.push_back(mask_from_json(cov.universe, b, "block"));
  cov.validate();
  return cov;
}

inline SetHgos space_from_json(const json& j) {
  require_schema(j);
  Universe u(string_list(j.at("universe"), "universe"));
  std::vector<Mask> granules;
  for (const auto& g : j.at("granules"))
    granules.push_back(mask_from_json(u, g, "granule"));
  if (j.contains("family")) {
    std::vector<Mask> fam;
    for (const auto& f : j["family"])
      fam.push_back(mask_from_json(u, f, "family member"));
    return SetHgos(u, granules, fam);
  }
  return SetHgos(u, granules);
}

inline json space_to_json(const SetHgos& s) {
  json gs = json::array();
  for (Mask g : s.granules()) gs.push_back(mask_to_json(s.universe(), g));
  json out = {{"schema", kSchemaTag},
              {"universe", s.universe().ids()},
              {"granules", gs}};
  if (!s.powerset_family()) {
    json fam = json::array();
    for (Mask f : s.family()) fam.push_back(mask_to_json(s.universe(), f));
    out["family"] = fam;
  }
  return out;
}

// --- abstract spaces ---------------------------------------------------------

inline AbstractGgs ggs_from_json(const json& j) {
  require_schema(j);
  AbstractGgs g;
  g.carrier = string_list(j.at("carrier"), "carrier");
  int n = g.size();
  auto idx = [&](const json& e) {
    std::string s = e.get<std::string>();
    for (int i = 0; i < n; ++i)
      if (g.carrier[i] == s) return i;
    throw input_error("unknown carrier element: " + s);
  };
  g.part.assign(n, std::vector<char>(n, 0));
  for (const auto& p : j.at("parthood")) g.part[idx(p[0])][idx(p[1])] = 1;
  if (j.contains("leq")) {
    g.leq.assign(n, std::vector<char>(n, 0));
    for (const auto& p : j["leq"]) g.leq[idx(p[0])][idx(p[1])] = 1;
  } else {
    g.leq = g.part;
  }
  g.join.assign(n, std::vector<int>(n, -1));
  g.meet.assign(n, std::vector<int>(n, -1));
  if (j.contains("join"))
    for (const auto& t : j["join"]) g.join[idx(t[0])][idx(t[1])] = idx(t[2]);
  if (j.contains("meet"))
    for (const auto& t : j["meet"]) g.meet[idx(t[0])][idx(t[1])] = idx(t[2]);
  g.lower.assign(n, -1);
  g.upper.assign(n, -1);
  if (j.contains("lower"))
    for (auto it = j["lower"].begin(); it != j["lower"].end(); ++it)
      g.lower[idx(json(it.key()))] = idx(it.value());
  if (j.contains("upper"))
    for (auto it = j["upper"].begin(); it != j["upper"].end(); ++it)
      g.upper[idx(json(it.key()))] = idx(it.value());
  g.gamma.assign(n, 0);
  if (j.contains("granules"))
    for (const auto& e : j["granules"]) g.gamma[idx(e)] = 1;
  g.bottom = idx(j.at("bottom"));
  g.top = idx(j.at("top"));
  g.validate();
  return g;
}

inline json ggs_to_json(const AbstractGgs& g) {
  int n = g.size();
  json parthood = json::array(), leq = json::array();
  json join = json::array(), meet = json::array();
  json lower = json::object(), upper = json::object();
  json granules = json::array();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.p(a, b)) parthood.push_back({g.carrier[a], g.carrier[b]});
      if (g.le(a, b)) leq.push_back({g.carrier[a], g.carrier[b]});
      if (g.join[a][b] >= 0)
        join.push_back({g.carrier[a], g.carrier[b], g.carrier[g.join[a][b]]});
      if (g.meet[a][b] >= 0)
        meet.push_back({g.carrier[a], g.carrier[b], g.carrier[g.meet[a][b]]});
    }
    if (g.lower[a] >= 0) lower[g.carrier[a]] = g.carrier[g.lower[a]];
    if (g.upper[a] >= 0) upper[g.carrier[a]] = g.carrier[g.upper[a]];
    if (g.gamma[a]) granules.push_back(g.carrier[a]);
  }
  return {{"schema", kSchemaTag}, {"carrier", g.carrier},
          {"parthood", parthood}, {"leq", leq},
          {"join", join},         {"meet", meet},
          {"lower", lower},       {"upper", upper},
          {"granules", granules}, {"bottom", g.carrier[g.bottom]},
          {"top", g.carrier[g.top]}};
}

// --- matrices and observations ----------------------------------------------

inline json matrix_to_json(const GrifMatrix& m) {
  return {{"ll", to_frac(m.ll)},
          {"lu", to_frac(m.lu)},
          {"ul", to_frac(m.ul)},
          {"uu", to_frac(m.uu)}};
}

inline GrifMatrix matrix_from_json(const json& j) {
  auto f = [&](const char* k) {
    return parse_frac(j.at(k).get<std::string>());
  };
  return {f("ll"), f("lu"), f("ul"), f("uu")};
}

inline SubjectRef subject_from_json(const Universe& u, const json& j) {
  SubjectRef s;
  if (j.is_object() && j.contains("label")) {
    s.label = j["label"].get<std::string>();
    return s;
  }
  if (j.is_object() && j.contains("set")) {
    s.set = mask_from_json(u, j["set"], "subject set");
    return s;
  }
  s.set = mask_from_json(u, j, "subject");
  return s;
}

inline json subject_to_json(const Universe& u, const SubjectRef& s) {
  if (s.labeled()) return {{"label", s.label}};
  return {{"set", mask_to_json(u, *s.set)}};
}

inline ObservationSet observations_from_json(const Universe& u, const json& j) {
  require_schema(j);
  ObservationSet out;
  if (j.contains("observations"))
    for (const auto& o : j["observations"]) {
      Observation ob;
      ob.subject = subject_from_json(u, o.at("subject"));
      if (o.contains("lower"))
        ob.lower_obs = mask_from_json(u, o["lower"], "lower");
      if (o.contains("upper"))
        ob.upper_obs = mask_from_json(u, o["upper"], "upper");
      out.obs.push_back(std::move(ob));
    }
  if (j.contains("grifs"))
    for (const auto& g : j["grifs"]) {
      GrifObservation go;
      go.a = subject_from_json(u, g.at("a"));
      go.b = subject_from_json(u, g.at("b"));
      go.m = matrix_from_json(g.at("matrix"));
      out.grifs.push_back(std::move(go));
    }
  out.validate();
  return out;
}

inline json model_to_json(const CandidateModel& m) {
  json gs = json::array();
  for (Mask g : m.granules) gs.push_back(mask_to_json(m.universe, g));
  return {{"schema", kSchemaTag},
          {"universe", m.universe.ids()},
          {"granules", gs}};
}

// --- information tables --------------------------------------------------------

// CSV layout: header row = attribute ids (first column names the object id
// column), one row per object, cell tokens separated by '|', empty cell =
// empty set. No quoting.
inline InformationTable table_from_csv(const std::string& text) {
  InformationTable t;
  std::vector<std::string> lines;
  for (auto& raw : split(text, '\n')) {
    std::string l = trim(raw);
    if (!l.empty()) lines.push_back(l);
  }
  if (lines.size() < 2) throw input_error("csv needs a header and a row");
  auto header = split(lines[0], ',');
  if (header.size() < 2) throw input_error("csv needs at least one attribute");
  for (std::size_t i = 1; i < header.size(); ++i)
    t.attributes.push_back(trim(header[i]));
  t.cells.assign(t.attributes.size(), {});
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto row = split(lines[r], ',');
    if (row.size() != header.size())
      throw input_error("csv row " + std::to_string(r + 1) +
                        " has the wrong arity");
    t.objects.push_back(trim(row[0]));
    for (std::size_t a = 0; a < t.attributes.size(); ++a) {
      std::vector<std::string> tokens;
      std::string cell = trim(row[a + 1]);
      if (!cell.empty())
        for (auto& tok : split(cell, '|')) tokens.push_back(trim(tok));
      std::sort(tokens.begin(), tokens.end());
      tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
      t.cells[a].push_back(std::move(tokens));
    }
  }
  t.validate();
  return t;
}

inline InformationTable table_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return table_from_csv(ss.str());
}

inline json table_to_json(const InformationTable& t) {
  json cells = json::object();
  for (std::size_t a = 0; a < t.attributes.size(); ++a) {
    json col = json::object();
    for (std::size_t o = 0; o < t.objects.size(); ++o)
      col[t.objects[o]] = t.cells[a][o];
    cells[t.attributes[a]] = col;
  }
  return {{"schema", kSchemaTag},
          {"objects", t.objects},
          {"attributes", t.attributes},
          {"cells", cells}};
}

// --- scenarios and datasets ------------------------------------------------------

inline EffectOp effect_from_string(const std::string& s) {
  if (s == "assign") return EffectOp::assign;
  if (s == "union") return EffectOp::unite;
  if (s == "intersect") return EffectOp::intersect;
  if (s == "minus") return EffectOp::minus;
  throw input_error("unknown action effect: " + s);
}

inline const char* effect_to_string(EffectOp op) {
  switch (op) {
    case EffectOp::assign: return "assign";
    case EffectOp::unite: return "union";
    case EffectOp::intersect: return "intersect";
    case EffectOp::minus: return "minus";
  }
  return "?";
}

inline Scenario scenario_from_json(const json& j) {
  require_schema(j);
  Scenario sc;
  sc.space = space_from_json(j.at("space"));
  const Universe& u = sc.space.universe();
  const json& st = j.at("states");
  sc.er_true = mask_from_json(u, st.at("er_true"), "er_true");
  sc.er_est = mask_from_json(u, st.at("er_est"), "er_est");
  sc.sok_true = mask_from_json(u, st.at("sok_true"), "sok_true");
  sc.sok_est = mask_from_json(u, st.at("sok_est"), "sok_est");
  sc.sok1_true = mask_from_json(u, st.at("sok1_true"), "sok1_true");
  sc.sok1_est = mask_from_json(u, st.at("sok1_est"), "sok1_est");
  auto actions = [&](const json& arr) {
    std::vector<ActionSpec> out;
    for (const auto& a : arr)
      out.push_back({a.at("name").get<std::string>(),
                     effect_from_string(a.at("op").get<std::string>()),
                     mask_from_json(u, a.at("arg"), "action arg")});
    return out;
  };
  sc.primary = actions(j.at("actions").at("primary"));
  sc.secondary = actions(j.at("actions").at("secondary"));
  sc.seed = j.value("seed", 0ull);
  sc.validate();
  return sc;
}

inline json scenario_to_json(const Scenario& sc) {
  const Universe& u = sc.space.universe();
  auto actions = [&](const std::vector<ActionSpec>& v) {
    json out = json::array();
    for (const auto& a : v)
      out.push_back({{"name", a.name},
                     {"op", effect_to_string(a.op)},
                     {"arg", mask_to_json(u, a.arg)}});
    return out;
  };
  return {{"schema", kSchemaTag},
          {"space", space_to_json(sc.space)},
          {"states",
           {{"er_true", mask_to_json(u, sc.er_true)},
            {"er_est", mask_to_json(u, sc.er_est)},
            {"sok_true", mask_to_json(u, sc.sok_true)},
            {"sok_est", mask_to_json(u, sc.sok_est)},
            {"sok1_true", mask_to_json(u, sc.sok1_true)},
            {"sok1_est", mask_to_json(u, sc.sok1_est)}}},
          {"actions",
           {{"primary", actions(sc.primary)}, {"secondary", actions(sc.secondary)}}},
          {"seed", sc.seed}};
}

inline json dataset_to_json(const DatasetBundle& db) {
  const Universe& u = db.ds.attr_universe;
  auto masks = [&](const std::vector<Mask>& v) {
    json out = json::array();
    for (Mask m : v) out.push_back(mask_to_json(u, m));
    return out;
  };
  json xi = json::array();
  for (const auto& [obj, elem] : db.bundle.xi)
    xi.push_back({db.bundle.table.objects[obj], mask_to_json(u, elem)});
  return {{"schema", kSchemaTag},
          {"counts",
           {{"n", db.ds.n}, {"r", db.ds.r}, {"q", db.ds.q}, {"l", db.ds.l}}},
          {"seed", db.ds.seed},
          {"universe", u.ids()},
          {"granules", masks(db.ds.granules)},
          {"a", masks(db.ds.a_elems)},
          {"b", masks(db.ds.b_elems)},
          {"c", masks(db.ds.c_elems)},
          {"table", table_to_json(db.bundle.table)},
          {"xi", xi}};
}

inline ValuationAlgebra valg_from_json(const json& j) {
  require_schema(j);
  ValuationAlgebra v;
  v.carrier = string_list(j.at("carrier"), "carrier");
  int n = v.size();
  auto idx = [&](const json& e) {
    std::string s = e.get<std::string>();
    for (int i = 0; i < n; ++i)
      if (v.carrier[i] == s) return i;
    throw input_error("unknown carrier token: " + s);
  };
  v.meet.assign(n, std::vector<int>(n, -1));
  v.join.assign(n, std::vector<int>(n, -1));
  v.neg.assign(n, -1);
  for (const auto& t : j.at("meet")) v.meet[idx(t[0])][idx(t[1])] = idx(t[2]);
  for (const auto& t : j.at("join")) v.join[idx(t[0])][idx(t[1])] = idx(t[2]);
  if (j.contains("neg"))
    for (const auto& p : j["neg"]) v.neg[idx(p[0])] = idx(p[1]);
  v.zero = idx(j.at("zero"));
  v.one = idx(j.at("one"));
  v.validate();
  return v;
}

// {"schema", "source": <abstract space>, "target_space": <space>,
//  "map": {"a": "x", ...}}; a target_ggs key may replace target_space.
inline GgsMorphism morphism_from_json(const json& j) {
  require_schema(j);
  AbstractGgs source = ggs_from_json(j.at("source"));
  GgsMorphism m;
  if (j.contains("target_space")) {
    SetHgos w = space_from_json(j.at("target_space"));
    AbstractGgs target = lift(w);
    std::vector<int> map(source.size(), -1);
    for (auto it = j.at("map").begin(); it != j.at("map").end(); ++it) {
      int src = -1;
      for (int i = 0; i < source.size(); ++i)
        if (source.carrier[i] == it.key()) src = i;
      if (src < 0) throw input_error("map key outside the source: " + it.key());
      Mask img = mask_from_json(w.universe(), it.value(), "map image");
      int tgt = -1;
      for (int i = 0; i < target.size(); ++i)
        if (w.family()[i] == img) tgt = i;
      if (tgt < 0) throw input_error("map image outside the target family");
      map[src] = tgt;
    }
    for (int v : map)
      if (v < 0) throw input_error("map must cover the source carrier");
    m = morphism_into_set_hgos(std::move(source), w, std::move(map));
  } else {
    m.source = std::move(source);
    m.target = ggs_from_json(j.at("target_ggs"));
    m.map.assign(m.source.size(), -1);
    for (auto it = j.at("map").begin(); it != j.at("map").end(); ++it) {
      int src = -1, tgt = -1;
      for (int i = 0; i < m.source.size(); ++i)
        if (m.source.carrier[i] == it.key()) src = i;
      for (int i = 0; i < m.target.size(); ++i)
        if (m.target.carrier[i] == it.value().get<std::string>()) tgt = i;
      if (src < 0 || tgt < 0) throw input_error("map outside the carriers");
      m.map[src] = tgt;
    }
    m.validate();
  }
  return m;
}

// aligned-text table rendering used by the --table flag
inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (widths.size() <= c) widths.resize(c + 1, 0);
      widths[c] = std::max(widths[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out += r[c];
      if (c + 1 < r.size())
        out += std::string(widths[c] - r[c].size() + 2, ' ');
    }
    out += "\n";
  }
  return out;
}

}  // namespace granulum
