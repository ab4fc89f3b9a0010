#include "tsg/theory.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tsg {

Instance::Instance(ElementSubset left, ElementSubset right)
    : left_(std::move(left)),
      right_(std::move(right)),
      digraph_(build_two_sided(left_, right_)),
      components_(analyze_components(digraph_.graph(), false)) {}

const char* connectivity_name(Connectivity c) noexcept { return c == Connectivity::weak ? "weak" : "strong"; }

namespace {

constexpr Connectivity kBoth[] = {Connectivity::weak, Connectivity::strong};

const Partition& partition(const ComponentAnalysis& a, Connectivity c) {
  return c == Connectivity::weak ? a.weak : a.strong;
}
const std::vector<int>& membership(const ComponentAnalysis& a, Connectivity c) {
  return c == Connectivity::weak ? a.weak_of : a.strong_of;
}

std::string suffixed(const std::string& name, Connectivity c) { return name + "." + connectivity_name(c); }

bool all_true(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

std::vector<bool> mask_product(const FiniteGroup& g, const std::vector<bool>& x, const std::vector<bool>& y) {
  std::vector<bool> out(g.order(), false);
  for (element_t a = 0; a < g.order(); ++a) {
    if (!x[a]) continue;
    for (element_t b = 0; b < g.order(); ++b)
      if (y[b]) out[g.mul(a, b)] = true;
  }
  return out;
}

// Uniform value of a list, or the list itself when values differ.
nlohmann::json uniform_or_list(const std::vector<int>& values) {
  if (!values.empty() && std::all_of(values.begin(), values.end(), [&](int v) { return v == values.front(); }))
    return values.front();
  return values;
}

// Smallest n >= 1 with start * gen^n (or gen^n * start) in the component of start.
int connection_length(const FiniteGroup& g, const std::vector<int>& comp_of, element_t start, element_t gen,
                      bool on_left) {
  const int ord = g.element_order(gen);
  element_t power = g.identity();
  for (int n = 1; n <= ord; ++n) {
    power = g.mul(power, gen);
    const element_t x = on_left ? g.mul(power, start) : g.mul(start, power);
    if (comp_of[x] == comp_of[start]) return n;
  }
  throw error(errc::internal_inconsistency, "connection length exceeded the generator order");
}

struct Level {
  std::vector<bool> in;
  std::vector<std::pair<element_t, element_t>> parent;  // element -> (first letter, rest)
};

Level first_level(const ElementSubset& s) {
  const int n = s.group().order();
  Level level{std::vector<bool>(n, false), std::vector<std::pair<element_t, element_t>>(n, {-1, -1})};
  for (element_t a : s) {
    level.in[a] = true;
    level.parent[a] = {a, -1};
  }
  return level;
}

Level next_level(const Level& prev, const ElementSubset& s) {
  const FiniteGroup& g = s.group();
  Level level{std::vector<bool>(g.order(), false), std::vector<std::pair<element_t, element_t>>(g.order(), {-1, -1})};
  for (element_t w = 0; w < g.order(); ++w) {
    if (!prev.in[w]) continue;
    for (element_t a : s) {
      const element_t x = g.mul(a, w);
      if (!level.in[x]) {
        level.in[x] = true;
        level.parent[x] = {a, w};
      }
    }
  }
  return level;
}

// Word of length `length` (levels[length-1]) that evaluates to x.
Word trace(const std::vector<Level>& levels, int length, element_t x) {
  Word w;
  for (int n = length; n >= 1; --n) {
    const auto [letter, rest] = levels[n - 1].parent[x];
    w.letters.push_back(letter);
    x = rest;
  }
  return w;
}

}  // namespace

std::vector<bool> word_set(const ElementSubset& s) {
  const FiniteGroup& g = s.group();
  std::vector<bool> current = s.mask();
  std::vector<bool> all = current;
  std::set<std::vector<bool>> seen;
  while (seen.insert(current).second) {
    std::vector<bool> next(g.order(), false);
    for (element_t w = 0; w < g.order(); ++w) {
      if (!current[w]) continue;
      for (element_t a : s) next[g.mul(a, w)] = true;
    }
    for (element_t x = 0; x < g.order(); ++x)
      if (next[x]) all[x] = true;
    current = std::move(next);
  }
  return all;
}

ElementSubset generated_subgroup(const ElementSubset& s) {
  std::vector<element_t> seeds = s.members();
  for (element_t x : s) seeds.push_back(s.group().inv(x));
  seeds.push_back(s.group().identity());
  return closure(ElementSubset(s.group(), std::move(seeds)));
}

bool factorization_check(const ElementSubset& left, const ElementSubset& right) {
  const FiniteGroup& g = left.group();
  const bool word_form = all_true(mask_product(g, word_set(left.inverse()), word_set(right))) &&
                         all_true(mask_product(g, word_set(left), word_set(right.inverse())));
  const bool subgroup_form = all_true(product_set(generated_subgroup(left), generated_subgroup(right)));
  if (word_form != subgroup_form)
    throw error(errc::internal_inconsistency, "word-set and subgroup forms of the factorization disagree");
  return word_form;
}

std::optional<OffsetWitness> identity_offset_witness(const ElementSubset& left, const ElementSubset& right) {
  const FiniteGroup& g = left.group();
  const ElementSubset left_inv = left.inverse();
  std::vector<Level> lefts{first_level(left_inv)};
  std::vector<Level> rights{first_level(right)};
  std::set<std::pair<std::vector<bool>, std::vector<bool>>> seen;
  std::optional<std::pair<int, std::pair<Word, Word>>> i_hit, j_hit;

  for (int n = 1;; ++n) {
    // The trajectory of (left_n, right_n) is deterministic; a repeated state
    // means no new witnesses can appear.
    if (!seen.emplace(lefts[n - 1].in, rights[n - 1].in).second) break;
    lefts.push_back(next_level(lefts[n - 1], left_inv));
    rights.push_back(next_level(rights[n - 1], right));
    if (!i_hit) {
      for (element_t a = 0; a < g.order() && !i_hit; ++a)
        if (lefts[n].in[a] && rights[n - 1].in[g.inv(a)])
          i_hit = {n, {trace(lefts, n + 1, a), trace(rights, n, g.inv(a))}};
    }
    if (!j_hit) {
      for (element_t a = 0; a < g.order() && !j_hit; ++a)
        if (lefts[n - 1].in[a] && rights[n].in[g.inv(a)])
          j_hit = {n, {trace(lefts, n, a), trace(rights, n + 1, g.inv(a))}};
    }
    if (i_hit && j_hit) break;
  }
  if (!i_hit || !j_hit) return std::nullopt;
  OffsetWitness w;
  w.i = i_hit->first;
  w.i_left = std::move(i_hit->second.first);
  w.i_right = std::move(i_hit->second.second);
  w.j = j_hit->first;
  w.j_left = std::move(j_hit->second.first);
  w.j_right = std::move(j_hit->second.second);
  return w;
}

element_t evaluate(const FiniteGroup& g, const Word& w) {
  element_t x = g.identity();
  for (element_t a : w.letters) x = g.mul(x, a);
  return x;
}

std::string render_words(const FiniteGroup& g, const Word& left, const Word& right) {
  auto join = [&](const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (i) out += ".";
      out += g.label(w.letters[i]);
    }
    return out;
  };
  return join(left) + " | " + join(right);
}

bool strong_connectivity_predicate(const ElementSubset& left, const ElementSubset& right) {
  return factorization_check(left, right) && identity_offset_witness(left, right).has_value();
}

VerificationReport theorem_strong_connectivity(const Instance& inst) {
  const FiniteGroup& g = inst.group();
  const bool factorizes = factorization_check(inst.left(), inst.right());
  const auto witness = identity_offset_witness(inst.left(), inst.right());
  const bool predicted = factorizes && witness.has_value();
  std::string text = std::string("factorization=") + (factorizes ? "true" : "false");
  if (witness) {
    text += "; i=" + std::to_string(witness->i) + ": " + render_words(g, witness->i_left, witness->i_right);
    text += "; j=" + std::to_string(witness->j) + ": " + render_words(g, witness->j_left, witness->j_right);
  } else {
    text += "; no identity offset";
  }
  VerificationReport report;
  for (Connectivity c : kBoth)
    report.add(suffixed("strong_connectivity.predicate", c), predicted, partition(inst.components(), c).size() == 1,
               text);
  return report;
}

ConnectionLengthReport min_connection_length(const Instance& inst) {
  const FiniteGroup& g = inst.group();
  if (!all_true(product_set(generated_subgroup(inst.left()), generated_subgroup(inst.right()))))
    throw error(errc::hypothesis_not_met,
                "global connection length needs G = <L><R>; use the per-coset connection lengths instead");

  std::vector<element_t> generators;
  for (const ElementSubset* s : {&inst.left(), &inst.right()})
    for (element_t x : *s) {
      generators.push_back(x);
      generators.push_back(g.inv(x));
    }
  const element_t witness = inst.left().members().front();
  const int k = connection_length(g, inst.components().weak_of, g.identity(), witness, true);
  for (Connectivity c : kBoth) {
    for (element_t x : generators) {
      const int kx = connection_length(g, membership(inst.components(), c), g.identity(), x, true);
      if (kx != k)
        throw error(errc::internal_inconsistency, "connection length from " + g.label(x) + " (" + std::to_string(kx) +
                                                      ", " + connectivity_name(c) + ") differs from " +
                                                      std::to_string(k));
    }
  }
  ConnectionLengthReport out;
  out.k = k;
  out.witness_generator = witness;
  out.per_coset = {{g.identity(), k}};
  out.predicted_components = k;
  return out;
}

VerificationReport component_count_theorem(const Instance& inst) {
  const FiniteGroup& g = inst.group();
  const ConnectionLengthReport len = min_connection_length(inst);
  const int k = len.k;
  const element_t l = len.witness_generator;
  VerificationReport report;
  for (Connectivity c : kBoth) {
    const Partition& p = partition(inst.components(), c);
    const auto& of = membership(inst.components(), c);
    report.add(suffixed("component_count.k", c), k, static_cast<int>(p.size()));

    std::vector<int> sizes;
    for (const auto& comp : p) sizes.push_back(static_cast<int>(comp.size()));
    const nlohmann::json expected_size =
        g.order() % k == 0 ? nlohmann::json(g.order() / k) : nlohmann::json("non-integral");
    report.add(suffixed("component_count.equal_size", c), expected_size, uniform_or_list(sizes));

    std::set<int> distinct;
    for (int i = 0; i < k; ++i) distinct.insert(of[g.pow(l, i)]);
    report.add(suffixed("component_count.power_components", c), k, static_cast<int>(distinct.size()),
               "components of " + g.label(l) + "^i for 0 <= i < " + std::to_string(k));
  }

  const auto meets = [](const ElementSubset& s) {
    const ElementSubset n = normalizer(s);
    return std::any_of(s.begin(), s.end(), [&](element_t x) { return n.contains(x); });
  };
  if (meets(inst.left()) || meets(inst.right())) {
    const Partition& p = inst.components().strong;
    const bool small = std::all_of(p.begin(), p.end(),
                                   [](const auto& c) { return static_cast<int>(c.size()) <= kMaxIsomorphismVertices; });
    if (small) {
      const Digraph first = inst.digraph().graph().induced(p.front());
      bool all_iso = true;
      for (std::size_t i = 1; i < p.size() && all_iso; ++i)
        all_iso = digraphs_isomorphic(first, inst.digraph().graph().induced(p[i]));
      report.add("component_count.isomorphic_components", true, all_iso, "L or R meets its normalizer");
    }
  }
  return report;
}

CosetAnalysis coset_connection_lengths(const Instance& inst) {
  const FiniteGroup& g = inst.group();
  CosetAnalysis out{double_cosets(generated_subgroup(inst.left()), generated_subgroup(inst.right())), {}, {}, {}, {}};
  const auto& dc = out.cosets;
  const element_t l = inst.left().members().front();

  for (Connectivity c : kBoth) {
    const auto& of = membership(inst.components(), c);
    const Partition& p = partition(inst.components(), c);
    std::vector<int> ks, counts, sizes_expected, sizes_observed, independent;
    bool contained = true;
    std::string containment_witness;

    for (const auto& comp : p) {
      for (element_t v : comp) {
        if (dc.coset_of[v] != dc.coset_of[comp.front()]) {
          contained = false;
          containment_witness = "component of " + g.label(comp.front()) + " leaves its double coset at " + g.label(v);
          break;
        }
      }
    }

    for (std::size_t ci = 0; ci < dc.size(); ++ci) {
      const element_t s = dc.representatives[ci];
      const auto& members = dc.cosets[ci];
      const int ks_value = connection_length(g, of, s, l, true);
      ks.push_back(ks_value);

      std::map<int, int> comp_sizes;  // component id -> members inside coset
      for (element_t v : members) ++comp_sizes[of[v]];
      counts.push_back(static_cast<int>(comp_sizes.size()));
      std::vector<int> sz;
      for (const auto& [id, count] : comp_sizes) sz.push_back(static_cast<int>(p[id].size()));
      const int coset_size = static_cast<int>(members.size());
      sizes_expected.push_back(coset_size % ks_value == 0 ? coset_size / ks_value : -1);
      const auto uni = uniform_or_list(sz);
      sizes_observed.push_back(uni.is_number() ? uni.get<int>() : -1);

      // Every member and every generator of either side must give the same k_s.
      std::set<int> observed;
      for (element_t v : members) observed.insert(connection_length(g, of, v, l, true));
      for (element_t x : inst.left()) {
        observed.insert(connection_length(g, of, s, x, true));
        observed.insert(connection_length(g, of, s, g.inv(x), true));
      }
      for (element_t x : inst.right()) {
        observed.insert(connection_length(g, of, s, x, false));
        observed.insert(connection_length(g, of, s, g.inv(x), false));
      }
      independent.push_back(observed.size() == 1 ? *observed.begin() : -1);
    }

    out.report.add(suffixed("cosets.component_count", c), ks, counts);
    out.report.add(suffixed("cosets.equal_size", c), sizes_expected, sizes_observed);
    out.report.add(suffixed("cosets.component_in_double_coset", c), true, contained, containment_witness);
    out.report.add(suffixed("cosets.representative_independence", c), ks, independent);
    if (c == Connectivity::weak) {
      out.k = ks;
      out.component_size = sizes_expected;
    }
  }

  out.lengths.witness_generator = l;
  int total = 0;
  for (std::size_t ci = 0; ci < dc.size(); ++ci) {
    out.lengths.per_coset.emplace_back(dc.representatives[ci], out.k[ci]);
    total += out.k[ci];
    if (dc.coset_of[g.identity()] == static_cast<int>(ci)) out.lengths.k = out.k[ci];
  }
  out.lengths.predicted_components = total;
  out.report.add("cosets.total_components", total, static_cast<int>(inst.components().strong.size()));
  return out;
}

int total_component_prediction(const Instance& inst) {
  return coset_connection_lengths(inst).lengths.predicted_components;
}

BurnsideCount burnside_component_count(const ElementSubset& left, const ElementSubset& right) {
  const FiniteGroup& g = left.group();
  const long long n = g.order();
  auto encode = [n](element_t a, element_t b) { return static_cast<std::size_t>(a * n + b); };

  std::vector<ElementPair> seeds = cartesian_pairs(left, right);
  std::vector<bool> in_u(static_cast<std::size_t>(n * n), false);
  std::vector<ElementPair> u;
  std::deque<ElementPair> queue;
  for (const auto& p : seeds) {
    if (!in_u[encode(p.first, p.second)]) {
      in_u[encode(p.first, p.second)] = true;
      u.push_back(p);
      queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& [l, r] : seeds) {
      const ElementPair next{g.mul(a, l), g.mul(b, r)};
      if (!in_u[encode(next.first, next.second)]) {
        in_u[encode(next.first, next.second)] = true;
        u.push_back(next);
        queue.push_back(next);
      }
    }
  }
  if (!in_u[encode(g.identity(), g.identity())])
    throw error(errc::internal_inconsistency, "equal-length word pairs do not contain (e,e)");
  for (const auto& [a, b] : u)
    if (!in_u[encode(g.inv(a), g.inv(b))])
      throw error(errc::internal_inconsistency, "equal-length word pairs are not closed under inverses");

  long long fixed = 0;
  for (const auto& [a, b] : u) {
    const element_t ai = g.inv(a);
    for (element_t x = 0; x < g.order(); ++x)
      if (g.mul(g.mul(ai, x), b) == x) ++fixed;
  }
  const auto order = static_cast<long long>(u.size());
  if (fixed % order != 0)
    throw error(errc::internal_inconsistency, "fixed-point sum " + std::to_string(fixed) + " is not divisible by |U| = " +
                                                  std::to_string(order));
  return BurnsideCount{static_cast<int>(fixed / order), u.size(), fixed, std::move(u)};
}

VerificationReport delta_correspondence_check(const FiniteGroup& g, const std::vector<ElementPair>& pairs) {
  if (g.order() > 12) throw error(errc::capability, "diagonal correspondence check supports |G| <= 12");
  const FiniteGroup gg = direct_product(g, g);
  const int n = g.order();
  std::vector<element_t> diag, upairs;
  for (element_t a = 0; a < n; ++a) diag.push_back(a * n + a);
  for (const auto& [a, b] : pairs) upairs.push_back(a * n + b);

  const TwoSidedDigraph big = build_two_sided(ElementSubset(gg, diag), ElementSubset(gg, upairs));
  const TwoSidedDigraph small = build_generalized(g, pairs);
  auto phi = [&](element_t x) { return g.mul(g.inv(x / n), x % n); };

  VerificationReport report;
  std::size_t preserved = 0;
  std::string bad_arc;
  for (element_t x = 0; x < gg.order(); ++x)
    for (element_t y : big.out_adj()[x]) {
      if (small.graph().has_arc(phi(x), phi(y)))
        ++preserved;
      else if (bad_arc.empty())
        bad_arc = gg.label(x) + " -> " + gg.label(y);
    }
  report.add("delta.arc_preservation", static_cast<long long>(big.arc_count()), static_cast<long long>(preserved),
             bad_arc);

  const ComponentAnalysis big_c = analyze_components(big.graph(), false);
  const ComponentAnalysis small_c = analyze_components(small.graph(), false);
  for (Connectivity c : kBoth) {
    const Partition& bp = partition(big_c, c);
    const Partition& sp = partition(small_c, c);
    const auto& s_of = membership(small_c, c);
    bool well_defined = true;
    std::vector<int> image(bp.size(), -1);
    for (std::size_t i = 0; i < bp.size(); ++i) {
      image[i] = s_of[phi(bp[i].front())];
      for (element_t v : bp[i]) well_defined = well_defined && s_of[phi(v)] == image[i];
    }
    std::set<int> hit(image.begin(), image.end());
    const bool bijective = well_defined && hit.size() == bp.size() && hit.size() == sp.size();
    report.add(suffixed("delta.component_count", c), static_cast<int>(sp.size()), static_cast<int>(bp.size()));
    report.add(suffixed("delta.component_bijection", c), true, bijective,
               well_defined ? "" : "a product component maps into several components");
  }
  return report;
}

namespace {

ReductionResult reduction_check(const Instance& inst, const std::string& name, const FiniteGroup& target,
                                const std::vector<element_t>& map, const ElementSubset& kernel) {
  auto image_of = [&](const ElementSubset& s) {
    std::vector<element_t> out;
    for (element_t x : s) out.push_back(map[x]);
    return ElementSubset(target, std::move(out));
  };
  const Instance image(image_of(inst.left()), image_of(inst.right()));
  ReductionResult result;
  for (Connectivity c : kBoth) {
    const bool whole = partition(inst.components(), c).size() == 1;
    const bool image_conn = partition(image.components(), c).size() == 1;
    const auto& of = membership(inst.components(), c);
    const bool kernel_conn = std::all_of(kernel.begin(), kernel.end(),
                                         [&](element_t x) { return of[x] == of[kernel.members().front()]; });
    result.report.add(suffixed(name, c), image_conn && kernel_conn, whole,
                      std::string("image_connected=") + (image_conn ? "true" : "false") +
                          ", kernel_connected=" + (kernel_conn ? "true" : "false"));
    if (c == Connectivity::weak) {
      result.connected = whole;
      result.image_connected = image_conn;
      result.kernel_connected = kernel_conn;
    }
  }
  return result;
}

}  // namespace

ReductionResult retract_reduction_check(const Instance& inst) {
  const FiniteGroup& g = inst.group();
  const std::vector<element_t> phi = retraction(g);
  return reduction_check(inst, "retract_reduction", *g.structure().second, phi, retraction_kernel(g));
}

ReductionResult quotient_reduction_check(const Instance& inst, const ElementSubset& n) {
  std::optional<Quotient> q;
  try {
    q = quotient(inst.group(), n);
  } catch (const error& e) {
    if (e.code() == errc::not_subgroup || e.code() == errc::not_normal) throw error(errc::invalid_parameter, e.what());
    throw;
  }
  return reduction_check(inst, "quotient_reduction", q->group, q->projection, n);
}

}  // namespace tsg
