#include "tsg/analyze.hpp"

#include <algorithm>
#include <map>

#include "tsg/parse.hpp"
#include "tsg/serialize.hpp"
#include "tsg/theory.hpp"

namespace tsg {
namespace {

using json = nlohmann::json;

json labels_of(const FiniteGroup& g, const std::vector<element_t>& xs) {
  json out = json::array();
  for (element_t x : xs) out.push_back(g.label(x));
  return out;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

// valency -> vertex labels having it
json valency_classes(const FiniteGroup& g, const std::vector<int>& valencies) {
  std::map<int, std::vector<element_t>> by;
  for (element_t v = 0; v < g.order(); ++v) by[valencies[v]].push_back(v);
  json out = json::object();
  for (const auto& [val, vs] : by) out[std::to_string(val)] = labels_of(g, vs);
  return out;
}

json valency_section(const Instance& inst, VerificationReport& report) {
  const FiniteGroup& g = inst.group();
  const ValencyProfile vp = valency_profile(inst.digraph());
  long long out_sum = 0, in_sum = 0;
  for (int v : vp.out_valencies) out_sum += v;
  for (int v : vp.in_valencies) in_sum += v;
  const auto arcs = static_cast<long long>(inst.digraph().arc_count());
  report.add("valency.out_sum_equals_arcs", arcs, out_sum);
  report.add("valency.in_sum_equals_arcs", arcs, in_sum);

  // |L^-1 g R| as a set, counted from the multiset, against the built out-valency.
  int formula_mismatches = 0, obstruction_violations = 0;
  std::string witness;
  const int full = static_cast<int>(inst.left().size() * inst.right().size());
  for (element_t v = 0; v < g.order(); ++v) {
    const auto ms = arc_multiset(inst.left(), inst.right(), v);
    if (static_cast<int>(ms.size()) != vp.out_valencies[v]) {
      ++formula_mismatches;
      if (witness.empty()) witness = "out-valency differs from |L^-1 g R| at " + g.label(v);
    }
    const ElementSubset obs = valency_obstruction(inst.left(), inst.right(), v);
    if (obs.size() == 1 && vp.out_valencies[v] != full) ++obstruction_violations;
  }
  report.add("valency.set_formula_mismatches", 0, formula_mismatches, witness);
  report.add("valency.trivial_obstruction_gives_full_valency", 0, obstruction_violations);

  return {{"arc_count", arcs},
          {"out_constant", optional_int(vp.out_constant)},
          {"in_constant", optional_int(vp.in_constant)},
          {"regular", vp.regular},
          {"undirected", is_undirected(inst.left(), inst.right())},
          {"out_valencies", valency_classes(g, vp.out_valencies)},
          {"in_valencies", valency_classes(g, vp.in_valencies)}};
}

json components_section(const Instance& inst, VerificationReport& report) {
  const FiniteGroup& g = inst.group();
  const ComponentAnalysis a = analyze_components(inst.digraph().graph(), true);
  report.add("components.weak_equals_strong", a.strong, a.weak);
  json labelled = json::array();
  for (const auto& c : a.strong) labelled.push_back(labels_of(g, c));
  return {{"strong_count", a.strong.size()},
          {"weak_count", a.weak.size()},
          {"strong_sizes", a.strong_sizes},
          {"weak_sizes", a.weak_sizes},
          {"strongly_connected", a.is_strongly_connected()},
          {"weakly_connected", a.is_weakly_connected()},
          {"strong_labels", std::move(labelled)},
          {"partition", components_to_json(a)}};
}

json cosets_section(const Instance& inst, VerificationReport& report) {
  const FiniteGroup& g = inst.group();
  const CosetAnalysis ca = coset_connection_lengths(inst);
  json cosets = json::array();
  for (std::size_t i = 0; i < ca.cosets.size(); ++i) {
    cosets.push_back({{"representative", g.label(ca.cosets.representatives[i])},
                      {"size", ca.cosets.cosets[i].size()},
                      {"k_s", ca.k[i]},
                      {"component_size", ca.component_size[i]}});
  }
  report.append(ca.report);
  return {{"count", ca.cosets.size()},
          {"total_components", ca.lengths.predicted_components},
          {"cosets", std::move(cosets)}};
}

json burnside_section(const Instance& inst, VerificationReport& report) {
  const BurnsideCount b = burnside_component_count(inst.left(), inst.right());
  report.add("burnside.count", b.components, static_cast<int>(inst.components().strong.size()),
             "|U| = " + std::to_string(b.u_order) + ", fixed points = " + std::to_string(b.fixed_point_sum));
  return {{"components", b.components}, {"u_order", b.u_order}, {"fixed_point_sum", b.fixed_point_sum}};
}

json theorem24_section(const Instance& inst, VerificationReport& report) {
  const FiniteGroup& g = inst.group();
  const bool factorizes = factorization_check(inst.left(), inst.right());
  const auto w = identity_offset_witness(inst.left(), inst.right());
  report.append(theorem_strong_connectivity(inst));
  json out = {{"factorization", factorizes},
              {"predicate", factorizes && w.has_value()},
              {"strongly_connected", inst.components().is_strongly_connected()}};
  if (w) {
    out["offset_witness"] = {{"i", w->i},
                             {"i_words", render_words(g, w->i_left, w->i_right)},
                             {"j", w->j},
                             {"j_words", render_words(g, w->j_left, w->j_right)}};
  } else {
    out["offset_witness"] = nullptr;
  }
  if (factorizes) {
    const ConnectionLengthReport len = min_connection_length(inst);
    out["k"] = len.k;
    out["k_generator"] = g.label(len.witness_generator);
    report.append(component_count_theorem(inst));
  } else {
    out["k"] = nullptr;
  }
  return out;
}

json retract_section(const Instance& inst, VerificationReport& report) {
  const ReductionResult r = retract_reduction_check(inst);
  report.append(r.report);
  return {{"connected", r.connected}, {"image_connected", r.image_connected}, {"kernel_connected", r.kernel_connected}};
}

}  // namespace

json analyze(const AnalysisRequest& request) {
  std::vector<std::string> checks = request.checks;
  if (checks.empty()) checks = {"valency", "components"};
  for (const auto& c : checks)
    if (std::find(kAnalysisChecks.begin(), kAnalysisChecks.end(), c) == kAnalysisChecks.end())
      throw error(errc::invalid_parameter, "unknown check '" + c + "'");
  // Canonical order keeps output independent of how checks were listed.
  std::vector<std::string> ordered;
  for (const auto& c : kAnalysisChecks)
    if (std::find(checks.begin(), checks.end(), c) != checks.end()) ordered.push_back(c);

  const FiniteGroup g = parse_group_spec(request.group_spec);
  const Instance inst(parse_subset(g, request.left_spec), parse_subset(g, request.right_spec));

  VerificationReport report;
  json results = json::object();
  for (const auto& c : ordered) {
    if (c == "valency") results[c] = valency_section(inst, report);
    if (c == "components") results[c] = components_section(inst, report);
    if (c == "cosets") results[c] = cosets_section(inst, report);
    if (c == "burnside") results[c] = burnside_section(inst, report);
    if (c == "theorem24") results[c] = theorem24_section(inst, report);
    if (c == "retract") results[c] = retract_section(inst, report);
  }

  json out = {{"instance", inst.digraph().description()},
              {"group", request.group_spec},
              {"order", g.order()},
              {"left", labels_of(g, inst.left().members())},
              {"right", labels_of(g, inst.right().members())},
              {"checks", ordered},
              {"results", std::move(results)},
              {"report", to_json(report)},
              {"pass", report.all_pass()}};
  if (request.emit_dot) out["dot"] = to_dot(inst.digraph());
  return out;
}

}  // namespace tsg
