#include "tsg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "tsg/digraph.hpp"
#include "tsg/theory.hpp"

namespace tsg {
namespace {

using json = nlohmann::json;

// Identity, inverses and closure under componentwise products, checked on
// the full Cayley table of U rather than through generators.
bool pair_set_is_subgroup(const FiniteGroup& g, const std::vector<ElementPair>& u) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<bool> member(n * n, false);
  for (const auto& [a, b] : u) member[a * n + b] = true;
  if (!member[g.identity() * n + g.identity()]) return false;
  for (const auto& [a, b] : u) {
    if (!member[g.inv(a) * n + g.inv(b)]) return false;
    for (const auto& [c, d] : u)
      if (!member[g.mul(a, c) * n + g.mul(b, d)]) return false;
  }
  return true;
}

struct PoolEntry {
  std::string name;
  FiniteGroup (*make)(int);
  int parameter;
};

const std::vector<PoolEntry>& pool() {
  static const std::vector<PoolEntry> entries = [] {
    std::vector<PoolEntry> out;
    for (int n = 1; n <= 12; ++n) out.push_back({"C" + std::to_string(n), make_cyclic, n});
    for (int n = 1; n <= 10; ++n) out.push_back({"D" + std::to_string(n), make_dihedral, n});
    out.push_back({"S3", make_symmetric, 3});
    out.push_back({"S4", make_symmetric, 4});
    out.push_back({"A4", make_alternating, 4});
    return out;
  }();
  return entries;
}

int pool_order(const PoolEntry& e) {
  const std::string& n = e.name;
  if (n[0] == 'C') return e.parameter;
  if (n[0] == 'D') return 2 * e.parameter;
  return n == "S3" ? 6 : n == "S4" ? 24 : 12;
}

// Raw 64-bit draws reduced by modulo: unlike the standard distributions the
// sequence is the same on every standard library.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
  }
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

std::vector<element_t> random_subset(Draw& draw, int order) {
  const int size = 1 + draw.below(std::min(4, order));
  std::vector<element_t> all(order);
  for (int i = 0; i < order; ++i) all[i] = i;
  for (int i = 0; i < size; ++i) std::swap(all[i], all[i + draw.below(order - i)]);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

// Exact SCC cross-check from a few sampled vertices: w shares v's component
// iff w is reachable from v and v is reachable from w.
void reachability_check(const Instance& inst, Draw& draw, VerificationReport& report) {
  const Digraph& d = inst.digraph().graph();
  const Digraph reverse{d.in, d.out};
  const auto& of = inst.components().strong_of;
  int mismatches = 0;
  std::string witness;
  const int samples = std::min(4, d.vertex_count());
  for (int s = 0; s < samples; ++s) {
    const element_t v = draw.below(d.vertex_count());
    const auto fwd = reachable_from(d, v);
    const auto back = reachable_from(reverse, v);
    for (element_t w = 0; w < d.vertex_count(); ++w) {
      if ((of[v] == of[w]) != (fwd[w] && back[w])) {
        ++mismatches;
        if (witness.empty()) witness = inst.group().label(v) + " vs " + inst.group().label(w);
      }
    }
  }
  report.add("scc.reachability_mismatches", 0, mismatches, witness);
}

bool meets_normalizer(const ElementSubset& s) {
  const ElementSubset n = normalizer(s);
  return std::any_of(s.begin(), s.end(), [&](element_t x) { return n.contains(x); });
}

// Runs `body` and turns a thrown tsg::error into a failing record.
template <typename F>
void guarded(VerificationReport& report, const std::string& name, F&& body) {
  try {
    body();
  } catch (const error& e) {
    report.add(name, "no error", std::string(errc_name(e.code())), e.what());
  }
}

InstanceOutcome run_instance(std::uint64_t seed, int index, const std::vector<const PoolEntry*>& candidates) {
  Draw draw(seed, static_cast<std::uint64_t>(index));
  const PoolEntry& entry = *candidates[draw.below(static_cast<int>(candidates.size()))];
  const FiniteGroup g = entry.make(entry.parameter);
  const ElementSubset left(g, random_subset(draw, g.order()));
  const ElementSubset right(g, random_subset(draw, g.order()));
  const Instance inst(left, right);

  InstanceOutcome out;
  out.index = index;
  out.group = entry.name;
  out.left = subset_text(left);
  out.right = subset_text(right);
  VerificationReport& r = out.report;
  const auto& comps = inst.components();
  const int count = static_cast<int>(comps.strong.size());

  r.add("weak_equals_strong", comps.strong, comps.weak);
  reachability_check(inst, draw, r);
  guarded(r, "strong_connectivity", [&] { r.append(theorem_strong_connectivity(inst)); });

  guarded(r, "cosets", [&] {
    const CosetAnalysis ca = coset_connection_lengths(inst);
    r.append(ca.report);
    if (meets_normalizer(left) || meets_normalizer(right)) {
      // Normalizer sufficiency inside each double coset.
      std::vector<std::vector<int>> per_coset(ca.cosets.size());
      for (std::size_t id = 0; id < comps.strong.size(); ++id)
        per_coset[ca.cosets.coset_of[comps.strong[id].front()]].push_back(static_cast<int>(id));
      int non_iso = 0;
      for (const auto& ids : per_coset) {
        const Digraph first = inst.digraph().graph().induced(comps.strong[ids.front()]);
        for (std::size_t i = 1; i < ids.size(); ++i)
          if (!digraphs_isomorphic(first, inst.digraph().graph().induced(comps.strong[ids[i]]))) ++non_iso;
      }
      r.add("normalizer.non_isomorphic_pairs_within_cosets", 0, non_iso);
    }
  });

  guarded(r, "burnside", [&] {
    const BurnsideCount b = burnside_component_count(left, right);
    r.add("burnside.count", b.components, count, "|U| = " + std::to_string(b.u_order));
    r.add("burnside.u_subgroup_axioms", true, pair_set_is_subgroup(g, b.u));
  });

  if (factorization_check(left, right)) {
    guarded(r, "component_count", [&] {
      r.append(component_count_theorem(inst));
      // Same k after replacing L and R by their inverses.
      const Instance inv(left.inverse(), right.inverse());
      r.add("k.inverse_independence", min_connection_length(inst).k, min_connection_length(inv).k);
    });
  }

  guarded(r, "quotient", [&] {
    const element_t x = draw.below(g.order());
    const ElementSubset n = normal_closure(ElementSubset(g, {x}));
    r.append(quotient_reduction_check(inst, n).report);
  });

  if (g.order() <= 12) {
    guarded(r, "delta", [&] { r.append(delta_correspondence_check(g, cartesian_pairs(left, right))); });
  }
  return out;
}

template <typename F>
void parallel_for(int count, int threads, F&& body) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  for (auto& w : workers) w.join();
}

}  // namespace

int VerifySummary::passed() const noexcept {
  return static_cast<int>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const InstanceOutcome& o) { return o.report.all_pass(); }));
}

VerifySummary run_verify(const VerifyOptions& options) {
  if (options.instances < 1) throw error(errc::invalid_parameter, "instances must be at least 1");
  if (options.max_order < 1 || options.max_order > 60)
    throw error(errc::invalid_parameter, "max-order must be between 1 and 60");
  std::vector<const PoolEntry*> candidates;
  for (const auto& e : pool())
    if (pool_order(e) <= options.max_order) candidates.push_back(&e);

  VerifySummary summary;
  summary.options = options;
  summary.outcomes.resize(options.instances);
  parallel_for(options.instances, options.threads,
               [&](int i) { summary.outcomes[i] = run_instance(options.seed, i, candidates); });
  return summary;
}

std::vector<InstanceOutcome> run_delta_suite(std::uint64_t seed, int count) {
  std::vector<const PoolEntry*> candidates;
  for (const auto& e : pool())
    if (pool_order(e) <= 12) candidates.push_back(&e);
  std::vector<InstanceOutcome> out(count);
  for (int i = 0; i < count; ++i) {
    Draw draw(seed, static_cast<std::uint64_t>(i));
    const PoolEntry& entry = *candidates[draw.below(static_cast<int>(candidates.size()))];
    const FiniteGroup g = entry.make(entry.parameter);
    std::vector<ElementPair> pairs;
    const int size = 1 + draw.below(4);
    for (int k = 0; k < size; ++k) pairs.emplace_back(draw.below(g.order()), draw.below(g.order()));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    out[i].index = i;
    out[i].group = entry.name;
    std::string u;
    for (const auto& [a, b] : pairs) u += (u.empty() ? "" : ",") + ("(" + g.label(a) + "," + g.label(b) + ")");
    out[i].left = "{" + u + "}";
    out[i].report = delta_correspondence_check(g, pairs);
  }
  return out;
}

json verify_to_json(const VerifySummary& summary) {
  std::map<std::string, std::pair<int, int>> tallies;
  json failures = json::array();
  for (const auto& o : summary.outcomes) {
    for (const auto& rec : o.report.records) {
      auto& t = tallies[rec.check];
      (rec.pass ? t.first : t.second) += 1;
    }
    if (!o.report.all_pass()) {
      json bad = json::array();
      for (const auto& rec : o.report.records)
        if (!rec.pass)
          bad.push_back({{"check", rec.check}, {"predicted", rec.predicted}, {"oracle", rec.oracle}, {"witness", rec.witness}});
      failures.push_back({{"index", o.index}, {"group", o.group}, {"left", o.left}, {"right", o.right}, {"records", bad}});
    }
  }
  json checks = json::object();
  for (const auto& [name, t] : tallies) checks[name] = {{"pass", t.first}, {"fail", t.second}};
  const int passed = summary.passed();
  return {{"seed", summary.options.seed},
          {"instances", summary.options.instances},
          {"max_order", summary.options.max_order},
          {"passed", passed},
          {"failed", summary.options.instances - passed},
          {"checks", std::move(checks)},
          {"failures", std::move(failures)}};
}

}  // namespace tsg
