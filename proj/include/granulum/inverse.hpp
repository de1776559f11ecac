#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "granulum/core.hpp"
#include "granulum/grif.hpp"
#include "granulum/rif.hpp"
#include "granulum/spaces.hpp"
#include "granulum/tables.hpp"

namespace granulum {

// Candidate granular model: a universe with a granulation over it.
struct CandidateModel {
  Universe universe;
  std::vector<Mask> granules;

  std::vector<Mask> canonical_key() const {
    std::vector<Mask> k = granules;
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
  }
};

// Observed subject: either a concrete subset or a named placeholder to be
// matched by search.
struct SubjectRef {
  std::optional<Mask> set;
  std::string label;  // used when set is absent

  bool labeled() const { return !set.has_value(); }
};

struct Observation {
  SubjectRef subject;
  std::optional<Mask> lower_obs, upper_obs;
};

struct GrifObservation {
  SubjectRef a, b;
  GrifMatrix m;
};

struct ObservationSet {
  std::vector<Observation> obs;
  std::vector<GrifObservation> grifs;

  void validate() const {
    for (const auto& o : obs)
      if (!o.lower_obs && !o.upper_obs)
        throw input_error("observation carries no data");
  }
};

enum class GeneratorKind { relations, granule_pools };

struct PoolSpec {
  std::vector<Mask> pool;
  int max_blocks = 0;
};

inline long long pool_combination_count(int pool_size, int max_blocks) {
  long long total = 0, c = 1;
  for (int k = 0; k <= max_blocks && k <= pool_size; ++k) {
    total += c;
    if (total > 20000000) return total;  // early out, caller validates
    c = c * (pool_size - k) / (k + 1);
  }
  return total;
}

// Deterministic stream of candidate models in canonical order; duplicates
// (as granulation sets) are suppressed. The visitor returns false to stop.
inline void enumerate_models(
    const Universe& u, GeneratorKind gen, const std::optional<PoolSpec>& pool,
    const std::function<bool(const CandidateModel&)>& visit) {
  std::set<std::vector<Mask>> seen;
  if (gen == GeneratorKind::relations) {
    if (u.size() > 4)
      throw unsupported_error(
          "relation generator needs universe <= 4 (2^16 relations); shrink "
          "the universe or use a granule pool");
    int n = u.size();
    long long total = 1ll << (n * n);
    for (long long code = 0; code < total; ++code) {
      BinaryRelationSpace rel(u);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((code >> (i * n + j)) & 1) rel.relate(i, j);
      CandidateModel m;
      m.universe = u;
      m.granules = successor_neighborhoods(rel).nbd;
      if (!seen.insert(m.canonical_key()).second) continue;
      if (!visit(m)) return;
    }
    return;
  }
  if (!pool.has_value())
    throw input_error("granule pool generator needs a pool");
  for (Mask b : pool->pool)
    if (!subset_of(b, u.full()))
      throw input_error("pool block not over the universe");
  if (pool_combination_count(static_cast<int>(pool->pool.size()),
                             pool->max_blocks) > 10000000)
    throw unsupported_error(
        "pool combination count exceeds 10^7; lower max_blocks or shrink the "
        "pool");
  int p = static_cast<int>(pool->pool.size());
  // subsets of the pool in canonical (lexicographic index) order, sizes
  // 0..max_blocks
  std::vector<int> idx;
  std::function<bool(int)> rec = [&](int start) {
    CandidateModel m;
    m.universe = u;
    for (int i : idx) m.granules.push_back(pool->pool[i]);
    if (seen.insert(m.canonical_key()).second)
      if (!visit(m)) return false;
    if (static_cast<int>(idx.size()) == pool->max_blocks) return true;
    for (int i = start; i < p; ++i) {
      idx.push_back(i);
      bool go = rec(i + 1);
      idx.pop_back();
      if (!go) return false;
    }
    return true;
  };
  rec(0);
}

namespace detail {

struct LabelConstraint {
  std::optional<Mask> lower, upper;
};

// Exact-match test of one model against the observations; labeled subjects
// are matched by backtracking over the family.
inline bool model_satisfies(const CandidateModel& cand,
                            const ObservationSet& obs,
                            const InclusionFn& tau) {
  if (cand.universe.size() > 12) return false;  // powerset family only here
  SetHgos space(cand.universe, cand.granules);

  // concrete observations first
  for (const auto& o : obs.obs) {
    if (o.subject.labeled()) continue;
    Mask x = *o.subject.set;
    if (!space.in_family(x)) return false;
    if (o.lower_obs && space.lower(x) != *o.lower_obs) return false;
    if (o.upper_obs && space.upper(x) != *o.upper_obs) return false;
  }
  for (const auto& g : obs.grifs) {
    if (g.a.labeled() || g.b.labeled()) continue;
    if (!space.in_family(*g.a.set) || !space.in_family(*g.b.set)) return false;
    if (!(zeta(space, tau, *g.a.set, *g.b.set) == g.m)) return false;
  }

  // collect placeholders and their per-label constraints
  std::vector<std::string> labels;
  std::map<std::string, LabelConstraint> cons;
  auto note_label = [&](const SubjectRef& s) {
    if (!s.labeled()) return;
    if (!cons.count(s.label)) {
      labels.push_back(s.label);
      cons[s.label] = {};
    }
  };
  for (const auto& o : obs.obs) note_label(o.subject);
  for (const auto& g : obs.grifs) {
    note_label(g.a);
    note_label(g.b);
  }
  if (labels.empty()) return true;
  for (const auto& o : obs.obs) {
    if (!o.subject.labeled()) continue;
    auto& c = cons[o.subject.label];
    if (o.lower_obs) c.lower = *o.lower_obs;
    if (o.upper_obs) c.upper = *o.upper_obs;
  }

  std::vector<std::vector<Mask>> candidates(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& c = cons[labels[i]];
    for (Mask x : space.family()) {
      if (c.lower && space.lower(x) != *c.lower) continue;
      if (c.upper && space.upper(x) != *c.upper) continue;
      candidates[i].push_back(x);
    }
    if (candidates[i].empty()) return false;
  }

  std::map<std::string, Mask> assign;
  std::function<bool(std::size_t)> dfs = [&](std::size_t at) {
    if (at == labels.size()) {
      for (const auto& g : obs.grifs) {
        Mask a = g.a.labeled() ? assign[g.a.label] : *g.a.set;
        Mask b = g.b.labeled() ? assign[g.b.label] : *g.b.set;
        if (!(zeta(space, tau, a, b) == g.m)) return false;
      }
      return true;
    }
    for (Mask x : candidates[at]) {
      assign[labels[at]] = x;
      if (dfs(at + 1)) return true;
    }
    return false;
  };
  return dfs(0);
}

}  // namespace detail

struct FilterResult {
  std::vector<CandidateModel> survivors;
  bool prefilter_rejected = false;
};

// Keeps the models whose computed approximations and matrices reproduce
// every observation exactly. Infeasible matrix observations short-circuit
// to an empty survivor set.
inline FilterResult consistency_filter(const std::vector<CandidateModel>& models,
                                       const ObservationSet& obs,
                                       const InclusionFn& tau,
                                       int workers = 1) {
  obs.validate();
  FilterResult out;
  std::vector<GrifMatrix> observed;
  for (const auto& g : obs.grifs) observed.push_back(g.m);
  if (!feasibility_filter(observed)) {
    out.prefilter_rejected = true;
    return out;
  }

  if (workers <= 1 || models.size() < 64) {
    for (const auto& m : models)
      if (detail::model_satisfies(m, obs, tau)) out.survivors.push_back(m);
    return out;
  }

  // partition by index; merge preserves canonical order regardless of the
  // worker count
  std::vector<char> keep(models.size(), 0);
  std::vector<std::thread> ts;
  int w = std::min<int>(workers, static_cast<int>(std::thread::hardware_concurrency()));
  w = std::max(w, 1);
  for (int t = 0; t < w; ++t)
    ts.emplace_back([&, t]() {
      for (std::size_t i = t; i < models.size(); i += w)
        keep[i] = detail::model_satisfies(models[i], obs, tau);
    });
  for (auto& th : ts) th.join();
  for (std::size_t i = 0; i < models.size(); ++i)
    if (keep[i]) out.survivors.push_back(models[i]);
  return out;
}

// Full approximation table of a model, usable directly as an observation
// set (round-trip checks).
inline ObservationSet observations_from_model(const CandidateModel& m) {
  SetHgos space(m.universe, m.granules);
  ObservationSet obs;
  for (Mask x : space.family()) {
    Observation o;
    o.subject.set = x;
    o.lower_obs = space.lower(x);
    o.upper_obs = space.upper(x);
    obs.obs.push_back(o);
  }
  return obs;
}

// Ordered distinct pairs over k subjects, the matrix count a dataset of k
// sets generates.
inline long long grif_pair_count(long long k) { return k * (k - 1); }

}  // namespace granulum
