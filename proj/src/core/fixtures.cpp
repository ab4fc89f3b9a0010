#include "tsg/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <utility>

#include "tsg/parse.hpp"
#include "tsg/theory.hpp"

namespace tsg {
namespace {

using json = nlohmann::json;

json label_list(const FiniteGroup& g, const std::vector<element_t>& xs) {
  json out = json::array();
  for (element_t x : xs) out.push_back(g.label(x));
  return out;
}

json label_list(const ElementSubset& s) { return label_list(s.group(), s.members()); }

Instance make_instance(const std::string& group_spec, const std::string& left, const std::string& right) {
  const FiniteGroup g = parse_group_spec(group_spec);
  return Instance(parse_subset(g, left), parse_subset(g, right));
}

std::vector<int> sizes_of(const Partition& p) {
  std::vector<int> out;
  for (const auto& c : p) out.push_back(static_cast<int>(c.size()));
  return out;
}

// For each double coset: are all strong components inside it pairwise isomorphic?
std::vector<bool> coset_components_isomorphic(const Instance& inst, const DoubleCosetDecomposition& dc) {
  const auto& comps = inst.components();
  std::vector<std::vector<int>> per_coset(dc.size());
  for (std::size_t id = 0; id < comps.strong.size(); ++id)
    per_coset[dc.coset_of[comps.strong[id].front()]].push_back(static_cast<int>(id));
  std::vector<bool> out;
  for (const auto& ids : per_coset) {
    bool iso = true;
    const Digraph first = inst.digraph().graph().induced(comps.strong[ids.front()]);
    for (std::size_t i = 1; i < ids.size() && iso; ++i)
      iso = digraphs_isomorphic(first, inst.digraph().graph().induced(comps.strong[ids[i]]));
    out.push_back(iso);
  }
  return out;
}

int count_vertices(const FiniteGroup& g, const std::function<bool(element_t)>& pred) {
  int n = 0;
  for (element_t v = 0; v < g.order(); ++v) n += pred(v) ? 1 : 0;
  return n;
}

FixtureResult a4_valency() {
  const Instance inst = make_instance("A4", "e,(243)", "(234),(12)(34),(132),(14)(23)");
  const FiniteGroup& g = inst.group();
  FixtureResult out{"a4-valency", inst.digraph().description(), {}};
  auto& r = out.report;
  const ValencyProfile vp = valency_profile(inst.digraph());

  r.add("out_valency_constant", 7, vp.out_constant ? json(*vp.out_constant) : json(nullptr));
  std::vector<element_t> six, eight;
  for (element_t v = 0; v < g.order(); ++v) {
    if (vp.in_valencies[v] == 6) six.push_back(v);
    if (vp.in_valencies[v] == 8) eight.push_back(v);
  }
  const ElementSubset listed = parse_subset(g, "(123),(132),(142),(143),(12)(34),(13)(24)");
  std::vector<element_t> others;
  for (element_t v = 0; v < g.order(); ++v)
    if (!listed.contains(v)) others.push_back(v);
  r.add("in_valency_6_vertices", label_list(listed), label_list(g, six));
  r.add("in_valency_8_vertices", label_list(g, others), label_list(g, eight));
  r.add("strongly_connected", true, inst.components().is_strongly_connected());
  r.add("factorization", true, factorization_check(inst.left(), inst.right()));

  // e = e^3 * [(12)(34)]^2 with lengths (3, 2).
  const element_t e = g.identity();
  const element_t x = parse_element(g, "(12)(34)");
  const Word left{{e, e, e}};
  const Word right{{x, x}};
  const bool letters_ok = std::all_of(left.letters.begin(), left.letters.end(),
                                      [&](element_t a) { return inst.left().inverse().contains(a); }) &&
                          std::all_of(right.letters.begin(), right.letters.end(),
                                      [&](element_t a) { return inst.right().contains(a); });
  r.add("quoted_offset_witness", g.label(e), letters_ok ? json(g.label(g.mul(evaluate(g, left), evaluate(g, right))))
                                                          : json("letters outside L^-1 or R"),
        render_words(g, left, right));
  r.append(theorem_strong_connectivity(inst));
  return out;
}

FixtureResult c7_cayley() {
  const Instance inst = make_instance("C7", "g^2,g^3", "e,g");
  const FiniteGroup& g = inst.group();
  FixtureResult out{"c7-cayley", inst.digraph().description(), {}};
  auto& r = out.report;
  const ValencyProfile vp = valency_profile(inst.digraph());
  r.add("regular", true, vp.regular);
  r.add("valency", 3, vp.out_constant ? json(*vp.out_constant) : json(nullptr));
  r.add("arc_count", 21, inst.digraph().arc_count());
  const TwoSidedDigraph cay = build_cayley(parse_subset(g, "g^4,g^5,g^6"));
  r.add("isomorphic_to_cayley", true, digraphs_isomorphic(inst.digraph().graph(), cay.graph()), cay.description());
  const auto ms = arc_multiset(inst.left(), inst.right(), g.identity());
  const element_t g5 = parse_element(g, "g^5");
  r.add("multiplicity_of_g^5_at_e", 2, ms.count(g5) ? ms.at(g5) : 0);
  r.add("undirected", false, is_undirected(inst.left(), inst.right()));
  r.append(theorem_strong_connectivity(inst));
  return out;
}

FixtureResult d6_obstruction() {
  const Instance inst = make_instance("D6", "t,ts^5", "ts,ts^2");
  const FiniteGroup& g = inst.group();
  FixtureResult out{"d6-obstruction", inst.digraph().description(), {}};
  auto& r = out.report;
  const ValencyProfile vp = valency_profile(inst.digraph());
  r.add("undirected", true, is_undirected(inst.left(), inst.right()));
  r.add("regular", true, vp.regular);
  r.add("valency", 3, vp.out_constant ? json(*vp.out_constant) : json(nullptr));
  const ElementSubset expected = parse_subset(g, "e,s,s^-1");
  r.add("obstruction_equals_{e,s,s^5}_vertices", g.order(), count_vertices(g, [&](element_t v) {
          return valency_obstruction(inst.left(), inst.right(), v) == expected;
        }));
  return out;
}

FixtureResult a4_complete() {
  const Instance inst = make_instance("A4", "e,(123),(132),(124),(142),(134),(143),(234),(243),(12)(34),(13)(24),(14)(23)",
                                      "(243),(12)(34)");
  const FiniteGroup& g = inst.group();
  FixtureResult out{"a4-complete", inst.digraph().description(), {}};
  auto& r = out.report;
  const ValencyProfile vp = valency_profile(inst.digraph());
  r.add("left_is_whole_group", g.order(), static_cast<int>(inst.left().size()));
  r.add("regular", true, vp.regular);
  r.add("valency", 12, vp.out_constant ? json(*vp.out_constant) : json(nullptr));
  r.add("undirected", true, is_undirected(inst.left(), inst.right()));
  r.add("multiset_12_values_of_multiplicity_2_vertices", g.order(), count_vertices(g, [&](element_t v) {
          const auto ms = arc_multiset(inst.left(), inst.right(), v);
          return ms.size() == 12 && std::all_of(ms.begin(), ms.end(), [](const auto& kv) { return kv.second == 2; });
        }));
  const ElementSubset expected = parse_subset(g, "e,(124),(142)");
  r.add("obstruction_equals_{e,(124),(142)}_vertices", g.order(), count_vertices(g, [&](element_t v) {
          return valency_obstruction(inst.left(), inst.right(), v) == expected;
        }));
  return out;
}

// Two components of equal size; isomorphism decided by search.
void two_component_checks(const Instance& inst, int size, VerificationReport& r) {
  const ConnectionLengthReport len = min_connection_length(inst);
  r.add("k", 2, len.k);
  r.add("strong_component_sizes", json::array({size, size}), sizes_of(inst.components().strong));
  r.add("weak_component_sizes", json::array({size, size}), sizes_of(inst.components().weak));
  const FiniteGroup& g = inst.group();
  const element_t t = parse_element(g, "t");
  r.add("e_connected_to_t", false, inst.components().strong_of[g.identity()] == inst.components().strong_of[t]);
}

bool intersects(const ElementSubset& a, const ElementSubset& b) {
  return std::any_of(a.begin(), a.end(), [&](element_t x) { return b.contains(x); });
}

FixtureResult d6_nonisomorphic() {
  const Instance inst = make_instance("D6", "t,ts^5", "ts,ts^2");
  const FiniteGroup& g = inst.group();
  FixtureResult out{"d6-nonisomorphic", inst.digraph().description(), {}};
  auto& r = out.report;
  r.add("generated_by_L", g.order(), static_cast<int>(closure(inst.left()).size()));
  two_component_checks(inst, 6, r);
  const auto& p = inst.components().strong;
  r.add("components_isomorphic", false,
        digraphs_isomorphic(inst.digraph().graph().induced(p[0]), inst.digraph().graph().induced(p[1])));
  const ElementSubset nl = normalizer(inst.left());
  const ElementSubset nr = normalizer(inst.right());
  r.add("normalizer_of_L", json::array({"e", "s^3"}), label_list(nl));
  r.add("normalizer_of_R", json::array({"e", "s^3"}), label_list(nr));
  r.add("L_meets_normalizer", false, intersects(inst.left(), nl));
  r.add("R_meets_normalizer", false, intersects(inst.right(), nr));
  r.append(component_count_theorem(inst));
  return out;
}

FixtureResult d10_isomorphic() {
  const Instance inst = make_instance("D10", "s", "t,s^3");
  const FiniteGroup& g = inst.group();
  FixtureResult out{"d10-isomorphic", inst.digraph().description(), {}};
  auto& r = out.report;
  r.add("generated_by_R", g.order(), static_cast<int>(closure(inst.right()).size()));
  two_component_checks(inst, 10, r);
  const auto& p = inst.components().strong;
  r.add("components_isomorphic", true,
        digraphs_isomorphic(inst.digraph().graph().induced(p[0]), inst.digraph().graph().induced(p[1])));
  const ElementSubset nl = normalizer(inst.left());
  r.add("normalizer_of_L", label_list(closure(parse_subset(g, "s"))), label_list(nl));
  r.add("s_in_L_and_normalizer", true, nl.contains(parse_element(g, "s")) && inst.left().contains(parse_element(g, "s")));
  r.append(component_count_theorem(inst));
  return out;
}

// Double-coset fixture: quoted representatives, their k_s and component
// sizes, the total, the Burnside count, and isomorphism inside each coset.
struct CosetExpectation {
  std::vector<std::string> reps;
  std::vector<int> k;
  std::vector<int> sizes;  // empty when the sizes are not quoted
  int total;
};

void coset_checks(const Instance& inst, const CosetExpectation& want, VerificationReport& r) {
  const FiniteGroup& g = inst.group();
  const CosetAnalysis ca = coset_connection_lengths(inst);
  const auto& dc = ca.cosets;
  r.add("double_coset_count", static_cast<int>(want.reps.size()), static_cast<int>(dc.size()));

  std::vector<int> positions;
  for (const auto& rep : want.reps) positions.push_back(dc.coset_of[parse_element(g, rep)]);
  r.add("quoted_representatives_in_distinct_cosets", true,
        std::set<int>(positions.begin(), positions.end()).size() == positions.size(),
        "coset positions " + json(positions).dump());

  json ks = json::array(), sizes = json::array();
  for (int pos : positions) {
    ks.push_back(ca.k[pos]);
    sizes.push_back(ca.component_size[pos]);
  }
  r.add("k_s_by_quoted_representative", want.k, ks);
  if (!want.sizes.empty()) r.add("component_size_by_quoted_representative", want.sizes, sizes);
  r.add("total_components", want.total, total_component_prediction(inst));
  r.add("strong_component_count", want.total, static_cast<int>(inst.components().strong.size()));
  r.add("burnside_count", want.total, burnside_component_count(inst.left(), inst.right()).components);

  const auto iso = coset_components_isomorphic(inst, dc);
  r.add("components_isomorphic_within_each_coset", std::vector<bool>(dc.size(), true), iso);
  r.append(ca.report);
}

FixtureResult d3xc3_cosets() {
  const Instance inst = make_instance("D3xC3", "(ts^2,g^2)", "(e,g^2),(t,g^2)");
  FixtureResult out{"d3xc3-cosets", inst.digraph().description(), {}};
  coset_checks(inst, {{"(e,e)", "(s^2,e)"}, {3, 3}, {}, 6}, out.report);
  return out;
}

FixtureResult a5_cosets() {
  const Instance inst = make_instance("A5", "(235)", "(243),(254)");
  FixtureResult out{"a5-cosets", inst.digraph().description(), {}};
  out.report.add("factorization", false, factorization_check(inst.left(), inst.right()));
  coset_checks(inst, {{"e", "(123)", "(145)"}, {3, 3, 1}, {4, 12, 12}, 7}, out.report);
  return out;
}

// D6 as C6 x| C2 with C2 acting by inversion; s = (g,e), t = (e,g).
struct RetractGroup {
  FiniteGroup group;
  element_t s, t;
};

RetractGroup retract_d6() {
  const FiniteGroup h = make_cyclic(6);
  const FiniteGroup k = make_cyclic(2);
  Action action(2);
  for (element_t x = 0; x < h.order(); ++x) {
    action[0].push_back(x);
    action[1].push_back(h.inv(x));
  }
  FiniteGroup g = semidirect_product(h, k, action);
  const element_t s = parse_element(g, "(g,e)");
  const element_t t = parse_element(g, "(e,g)");
  return {std::move(g), s, t};
}

// t s^i as an element of the semidirect product.
element_t ts(const RetractGroup& d, int i) { return d.group.mul(d.t, d.group.pow(d.s, i)); }

void retract_checks(const RetractGroup& d, const Instance& inst, bool connected, bool image, bool kernel,
                    VerificationReport& r) {
  const ReductionResult res = retract_reduction_check(inst);
  r.add("connected", connected, res.connected);
  r.add("image_connected", image, res.image_connected);
  r.add("kernel_in_one_component", kernel, res.kernel_connected);
  r.append(res.report);
  r.add("isomorphic_to_D6", true, groups_isomorphic(d.group, make_dihedral(6)));
}

FixtureResult d6_retract_connected() {
  const RetractGroup d = retract_d6();
  const FiniteGroup& g = d.group;
  const Instance inst(ElementSubset(g, {d.s}), ElementSubset(g, {g.pow(d.s, 2), d.t}));
  FixtureResult out{"d6-retract-connected", inst.digraph().description(), {}};
  auto& r = out.report;
  // s^n -> s^-1 s^n s^2 = s^(n+1)
  r.add("rotation_arcs_present", 6, count_vertices(make_cyclic(6), [&](element_t n) {
          return inst.digraph().graph().has_arc(g.pow(d.s, n), g.pow(d.s, n + 1));
        }));
  retract_checks(d, inst, true, true, true, r);
  return out;
}

FixtureResult d6_retract_disconnected() {
  const RetractGroup d = retract_d6();
  const FiniteGroup& g = d.group;
  const Instance inst(ElementSubset(g, {d.t, ts(d, 5)}), ElementSubset(g, {ts(d, 1), ts(d, 2)}));
  FixtureResult out{"d6-retract-disconnected", inst.digraph().description(), {}};
  auto& r = out.report;
  retract_checks(d, inst, false, false, true, r);

  // The image digraph on K = C2: a loop at e and a loop at t, nothing else.
  const std::vector<element_t> phi = retraction(g);
  const FiniteGroup k = make_cyclic(2);
  std::vector<element_t> lp, rp;
  for (element_t x : inst.left()) lp.push_back(phi[x]);
  for (element_t x : inst.right()) rp.push_back(phi[x]);
  const TwoSidedDigraph image = build_two_sided(ElementSubset(k, lp), ElementSubset(k, rp));
  json arcs = json::array();
  for (element_t v = 0; v < k.order(); ++v)
    for (element_t w : image.out_adj()[v]) arcs.push_back(json::array({k.label(v), k.label(w)}));
  r.add("image_arcs", json::array({json::array({"e", "e"}), json::array({"g", "g"})}), arcs,
        "K = C2 with t written g");
  return out;
}

using Runner = FixtureResult (*)();

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"a4-valency", a4_valency},
      {"c7-cayley", c7_cayley},
      {"d6-obstruction", d6_obstruction},
      {"a4-complete", a4_complete},
      {"d6-nonisomorphic", d6_nonisomorphic},
      {"d10-isomorphic", d10_isomorphic},
      {"d3xc3-cosets", d3xc3_cosets},
      {"a5-cosets", a5_cosets},
      {"d6-retract-connected", d6_retract_connected},
      {"d6-retract-disconnected", d6_retract_disconnected},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

FixtureResult run_fixture(const std::string& id) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    const auto start = std::chrono::steady_clock::now();
    FixtureResult result = fn();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw error(errc::invalid_parameter, "unknown fixture '" + id + "'");
}

std::vector<FixtureResult> run_all_fixtures() {
  std::vector<FixtureResult> out;
  for (const auto& id : fixture_ids()) out.push_back(run_fixture(id));
  return out;
}

}  // namespace tsg
