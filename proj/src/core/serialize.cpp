#include "tsg/serialize.hpp"

namespace tsg {

using json = nlohmann::json;

json digraph_to_json(const TwoSidedDigraph& d, const std::string& group_spec) {
  json arcs = json::array();
  for (element_t v = 0; v < d.graph().vertex_count(); ++v)
    for (element_t w : d.out_adj()[v]) arcs.push_back(json::array({v, w}));
  return {{"group_spec", group_spec.empty() ? d.group().name() : group_spec},
          {"source", arc_source_name(d.source())},
          {"arcs", std::move(arcs)}};
}

json components_to_json(const ComponentAnalysis& a) {
  return {{"strong", a.strong},
          {"weak", a.weak},
          {"iso_classes", a.iso_classes_computed ? json(a.iso_classes) : json(nullptr)}};
}

json fixture_to_json(const FixtureResult& f) {
  return {{"id", f.id},
          {"instance", f.instance},
          {"pass", f.report.all_pass()},
          {"failures", f.report.failures()},
          {"report", to_json(f.report)}};
}

}  // namespace tsg
