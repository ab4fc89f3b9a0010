#include "tsg/tsg.h"

#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "tsg/analyze.hpp"
#include "tsg/connectivity.hpp"
#include "tsg/fixtures.hpp"
#include "tsg/parse.hpp"
#include "tsg/serialize.hpp"
#include "tsg/verify.hpp"

struct tsg_group {
  tsg::FiniteGroup group;
};

struct tsg_subset {
  tsg::ElementSubset subset;
};

struct tsg_digraph {
  tsg::TwoSidedDigraph digraph;
  std::optional<tsg::ComponentAnalysis> components;  // filled on first request
};

namespace {

thread_local std::string last_error;

tsg_status status_of(tsg::errc code) {
  switch (code) {
    case tsg::errc::invalid_parameter: return TSG_ERR_INVALID_PARAMETER;
    case tsg::errc::parse_error: return TSG_ERR_PARSE;
    case tsg::errc::unknown_element: return TSG_ERR_UNKNOWN_ELEMENT;
    case tsg::errc::not_subgroup: return TSG_ERR_NOT_SUBGROUP;
    case tsg::errc::not_normal: return TSG_ERR_NOT_NORMAL;
    case tsg::errc::invalid_action: return TSG_ERR_INVALID_ACTION;
    case tsg::errc::capability: return TSG_ERR_CAPABILITY;
    case tsg::errc::hypothesis_not_met: return TSG_ERR_HYPOTHESIS_NOT_MET;
    case tsg::errc::missing_retraction: return TSG_ERR_MISSING_RETRACTION;
    case tsg::errc::internal_inconsistency: return TSG_ERR_INTERNAL;
    case tsg::errc::io_error: return TSG_ERR_IO;
  }
  return TSG_ERR_INTERNAL;
}

// Every entry point funnels through here so no exception crosses the C boundary.
template <typename F>
tsg_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return TSG_OK;
  } catch (const tsg::error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TSG_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TSG_ERR_INTERNAL;
  }
}

tsg_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return TSG_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const tsg::ComponentAnalysis& components_of(const tsg_digraph* d) {
  auto* mut = const_cast<tsg_digraph*>(d);
  if (!mut->components) mut->components = tsg::analyze_components(d->digraph.graph(), true);
  return *mut->components;
}

std::vector<std::string> split_checks(const char* checks) {
  std::vector<std::string> out;
  if (!checks) return out;
  std::stringstream ss(checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

extern "C" {

const char* tsg_last_error(void) { return last_error.c_str(); }

const char* tsg_status_name(tsg_status status) {
  switch (status) {
    case TSG_OK: return "ok";
    case TSG_ERR_INVALID_PARAMETER: return "invalid-parameter";
    case TSG_ERR_PARSE: return "parse-error";
    case TSG_ERR_UNKNOWN_ELEMENT: return "unknown-element";
    case TSG_ERR_NOT_SUBGROUP: return "not-subgroup";
    case TSG_ERR_NOT_NORMAL: return "not-normal";
    case TSG_ERR_INVALID_ACTION: return "invalid-action";
    case TSG_ERR_CAPABILITY: return "capability";
    case TSG_ERR_HYPOTHESIS_NOT_MET: return "hypothesis-not-met";
    case TSG_ERR_MISSING_RETRACTION: return "missing-retraction";
    case TSG_ERR_INTERNAL: return "internal-inconsistency";
    case TSG_ERR_IO: return "io-error";
    case TSG_ERR_NULL_ARGUMENT: return "null-argument";
    case TSG_ERR_OUT_OF_MEMORY: return "out-of-memory";
  }
  return "unknown";
}

void tsg_string_free(char* s) { delete[] s; }

tsg_status tsg_group_parse(const char* spec, tsg_group** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guard([&] { *out = new tsg_group{tsg::parse_group_spec(spec)}; });
}

void tsg_group_free(tsg_group* g) { delete g; }

tsg_status tsg_group_order(const tsg_group* g, int* out) {
  if (!g || !out) return null_argument(g ? "out" : "group");
  return guard([&] { *out = g->group.order(); });
}

tsg_status tsg_group_label(const tsg_group* g, int element, char** out) {
  if (!g || !out) return null_argument(g ? "out" : "group");
  return guard([&] {
    if (!g->group.contains(element))
      throw tsg::error(tsg::errc::invalid_parameter, "element index " + std::to_string(element) + " out of range");
    *out = copy_string(g->group.label(element));
  });
}

tsg_status tsg_group_find(const tsg_group* g, const char* name, int* out) {
  if (!g || !name || !out) return null_argument(!g ? "group" : !name ? "name" : "out");
  return guard([&] { *out = tsg::parse_element(g->group, name); });
}

tsg_status tsg_subset_parse(const tsg_group* g, const char* text, tsg_subset** out) {
  if (!g || !text || !out) return null_argument(!g ? "group" : !text ? "text" : "out");
  return guard([&] { *out = new tsg_subset{tsg::parse_subset(g->group, text)}; });
}

void tsg_subset_free(tsg_subset* s) { delete s; }

tsg_status tsg_subset_size(const tsg_subset* s, int* out) {
  if (!s || !out) return null_argument(s ? "out" : "subset");
  return guard([&] { *out = static_cast<int>(s->subset.size()); });
}

tsg_status tsg_digraph_two_sided(const tsg_subset* left, const tsg_subset* right, tsg_digraph** out) {
  if (!left || !right || !out) return null_argument(!left ? "left" : !right ? "right" : "out");
  return guard([&] {
    if (!(left->subset.group() == right->subset.group()))
      throw tsg::error(tsg::errc::invalid_parameter, "left and right subsets belong to different groups");
    *out = new tsg_digraph{tsg::build_two_sided(left->subset, right->subset), std::nullopt};
  });
}

tsg_status tsg_digraph_cayley(const tsg_subset* connection_set, tsg_digraph** out) {
  if (!connection_set || !out) return null_argument(connection_set ? "out" : "connection_set");
  return guard([&] { *out = new tsg_digraph{tsg::build_cayley(connection_set->subset), std::nullopt}; });
}

void tsg_digraph_free(tsg_digraph* d) { delete d; }

tsg_status tsg_digraph_vertex_count(const tsg_digraph* d, int* out) {
  if (!d || !out) return null_argument(d ? "out" : "digraph");
  return guard([&] { *out = d->digraph.graph().vertex_count(); });
}

tsg_status tsg_digraph_arc_count(const tsg_digraph* d, size_t* out) {
  if (!d || !out) return null_argument(d ? "out" : "digraph");
  return guard([&] { *out = d->digraph.arc_count(); });
}

tsg_status tsg_digraph_has_arc(const tsg_digraph* d, int from, int to, int* out) {
  if (!d || !out) return null_argument(d ? "out" : "digraph");
  return guard([&] {
    const int n = d->digraph.graph().vertex_count();
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw tsg::error(tsg::errc::invalid_parameter, "vertex index out of range");
    *out = d->digraph.graph().has_arc(from, to) ? 1 : 0;
  });
}

tsg_status tsg_digraph_component_count(const tsg_digraph* d, int* strong, int* weak) {
  if (!d) return null_argument("digraph");
  return guard([&] {
    const auto& c = components_of(d);
    if (strong) *strong = static_cast<int>(c.strong.size());
    if (weak) *weak = static_cast<int>(c.weak.size());
  });
}

tsg_status tsg_digraphs_isomorphic(const tsg_digraph* a, const tsg_digraph* b, int* out) {
  if (!a || !b || !out) return null_argument(!a ? "a" : !b ? "b" : "out");
  return guard([&] { *out = tsg::digraphs_isomorphic(a->digraph.graph(), b->digraph.graph()) ? 1 : 0; });
}

tsg_status tsg_digraph_dot(const tsg_digraph* d, char** out) {
  if (!d || !out) return null_argument(d ? "out" : "digraph");
  return guard([&] { *out = copy_string(tsg::to_dot(d->digraph)); });
}

tsg_status tsg_digraph_json(const tsg_digraph* d, char** out) {
  if (!d || !out) return null_argument(d ? "out" : "digraph");
  return guard([&] { *out = copy_string(tsg::digraph_to_json(d->digraph).dump()); });
}

tsg_status tsg_digraph_components_json(const tsg_digraph* d, char** out) {
  if (!d || !out) return null_argument(d ? "out" : "digraph");
  return guard([&] { *out = copy_string(tsg::components_to_json(components_of(d)).dump()); });
}

tsg_status tsg_analyze(const char* group_spec, const char* left, const char* right, const char* checks,
                       int emit_dot, char** json_out) {
  if (!group_spec || !left || !right || !json_out)
    return null_argument(!group_spec ? "group_spec" : !left ? "left" : !right ? "right" : "json_out");
  return guard([&] {
    tsg::AnalysisRequest req{group_spec, left, right, split_checks(checks), emit_dot != 0};
    *json_out = copy_string(tsg::analyze(req).dump());
  });
}

tsg_status tsg_paper_examples(const char* only, char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guard([&] {
    std::vector<tsg::FixtureResult> results;
    if (only)
      results.push_back(tsg::run_fixture(only));
    else
      results = tsg::run_all_fixtures();
    nlohmann::json fixtures = nlohmann::json::array();
    int passed = 0;
    for (const auto& f : results) {
      fixtures.push_back(tsg::fixture_to_json(f));
      passed += f.report.all_pass() ? 1 : 0;
    }
    nlohmann::json out = {{"fixtures", std::move(fixtures)},
                          {"passed", passed},
                          {"failed", static_cast<int>(results.size()) - passed}};
    *json_out = copy_string(out.dump());
  });
}

tsg_status tsg_verify(uint64_t seed, int instances, int max_order, int threads, char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guard([&] {
    const tsg::VerifySummary s = tsg::run_verify({seed, instances, max_order, threads});
    *json_out = copy_string(tsg::verify_to_json(s).dump());
  });
}

}  // extern "C"
