#pragma once

#include <string>

#include "json.hpp"
#include "tsg/connectivity.hpp"
#include "tsg/digraph.hpp"
#include "tsg/fixtures.hpp"

namespace tsg {

// {group_spec, source, arcs: [[from, to], ...]} with arcs in (from, to) order.
// group_spec defaults to the group's own name.
nlohmann::json digraph_to_json(const TwoSidedDigraph& d, const std::string& group_spec = {});

// {strong: [[...]], weak: [[...]], iso_classes: [[component ids]] or null}
nlohmann::json components_to_json(const ComponentAnalysis& a);

// {id, instance, pass, failures, report}
nlohmann::json fixture_to_json(const FixtureResult& f);

}  // namespace tsg
