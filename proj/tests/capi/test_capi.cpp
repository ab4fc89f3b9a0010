#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tsg/tsg.h"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tsg_string_free(s);
  return out;
}

tsg_group* group(const char* spec) {
  tsg_group* g = nullptr;
  REQUIRE(tsg_group_parse(spec, &g) == TSG_OK);
  return g;
}

tsg_subset* subset(const tsg_group* g, const char* text) {
  tsg_subset* s = nullptr;
  REQUIRE(tsg_subset_parse(g, text, &s) == TSG_OK);
  return s;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(tsg_status_name(TSG_OK)) == "ok");
  for (int s = TSG_OK; s <= TSG_ERR_OUT_OF_MEMORY; ++s)
    CHECK(std::strlen(tsg_status_name(static_cast<tsg_status>(s))) > 0);
  CHECK(std::string(tsg_status_name(static_cast<tsg_status>(99))) == "unknown");
}

TEST_CASE("null arguments are rejected without crashing") {
  tsg_group* g = nullptr;
  CHECK(tsg_group_parse(nullptr, &g) == TSG_ERR_NULL_ARGUMENT);
  CHECK(std::string(tsg_last_error()).find("spec") != std::string::npos);
  CHECK(tsg_group_parse("C3", nullptr) == TSG_ERR_NULL_ARGUMENT);
  int n = 0;
  CHECK(tsg_group_order(nullptr, &n) == TSG_ERR_NULL_ARGUMENT);
  CHECK(tsg_subset_parse(nullptr, "e", nullptr) == TSG_ERR_NULL_ARGUMENT);
  CHECK(tsg_digraph_two_sided(nullptr, nullptr, nullptr) == TSG_ERR_NULL_ARGUMENT);
  CHECK(tsg_digraph_vertex_count(nullptr, &n) == TSG_ERR_NULL_ARGUMENT);
  char* out = nullptr;
  CHECK(tsg_analyze(nullptr, "e", "e", "", 0, &out) == TSG_ERR_NULL_ARGUMENT);
  CHECK(tsg_verify(7, 1, 1, 1, nullptr) == TSG_ERR_NULL_ARGUMENT);
  CHECK(out == nullptr);
  // free functions accept null
  tsg_group_free(nullptr);
  tsg_subset_free(nullptr);
  tsg_digraph_free(nullptr);
  tsg_string_free(nullptr);
}

TEST_CASE("errors carry library codes and messages") {
  tsg_group* g = nullptr;
  CHECK(tsg_group_parse("Q8", &g) == TSG_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(tsg_last_error()).size() > 0);
  CHECK(tsg_group_parse("S8", &g) == TSG_ERR_CAPABILITY);
  CHECK(tsg_group_parse("C0", &g) == TSG_ERR_INVALID_PARAMETER);

  tsg_group* d6 = group("D6");
  tsg_subset* s = nullptr;
  CHECK(tsg_subset_parse(d6, "s,u", &s) == TSG_ERR_UNKNOWN_ELEMENT);
  int idx = -1;
  CHECK(tsg_group_find(d6, "zz", &idx) == TSG_ERR_UNKNOWN_ELEMENT);
  char* label = nullptr;
  CHECK(tsg_group_label(d6, 12, &label) == TSG_ERR_INVALID_PARAMETER);
  CHECK(tsg_group_label(d6, -1, &label) == TSG_ERR_INVALID_PARAMETER);

  tsg_group* c3 = group("C3");
  tsg_subset* a = subset(d6, "s");
  tsg_subset* b = subset(c3, "g");
  tsg_digraph* d = nullptr;
  CHECK(tsg_digraph_two_sided(a, b, &d) == TSG_ERR_INVALID_PARAMETER);
  CHECK(d == nullptr);

  char* out = nullptr;
  CHECK(tsg_analyze("D6", "s", "t", "retract", 0, &out) == TSG_ERR_MISSING_RETRACTION);
  CHECK(tsg_analyze("D6", "s", "t", "bogus", 0, &out) == TSG_ERR_INVALID_PARAMETER);
  CHECK(tsg_paper_examples("nope", &out) == TSG_ERR_INVALID_PARAMETER);
  CHECK(tsg_verify(7, 0, 24, 1, &out) == TSG_ERR_INVALID_PARAMETER);
  CHECK(tsg_verify(7, 5, 61, 1, &out) == TSG_ERR_INVALID_PARAMETER);
  CHECK(out == nullptr);

  // success clears the previous message
  int n = 0;
  CHECK(tsg_group_order(d6, &n) == TSG_OK);
  CHECK(std::string(tsg_last_error()).empty());

  tsg_subset_free(a);
  tsg_subset_free(b);
  tsg_group_free(c3);
  tsg_group_free(d6);
}

TEST_CASE("group and digraph handles") {
  tsg_group* a4 = group("A4");
  int n = 0;
  REQUIRE(tsg_group_order(a4, &n) == TSG_OK);
  CHECK(n == 12);
  int e = -1;
  REQUIRE(tsg_group_find(a4, "e", &e) == TSG_OK);
  char* label = nullptr;
  REQUIRE(tsg_group_label(a4, e, &label) == TSG_OK);
  CHECK(take(label) == "e");

  tsg_subset* l = subset(a4, "e,(243)");
  tsg_subset* r = subset(a4, "(234),(12)(34),(132),(14)(23)");
  // handles own their data; the group can go first
  tsg_group_free(a4);
  int size = 0;
  REQUIRE(tsg_subset_size(r, &size) == TSG_OK);
  CHECK(size == 4);

  tsg_digraph* d = nullptr;
  REQUIRE(tsg_digraph_two_sided(l, r, &d) == TSG_OK);
  tsg_subset_free(l);
  tsg_subset_free(r);
  REQUIRE(tsg_digraph_vertex_count(d, &n) == TSG_OK);
  CHECK(n == 12);
  size_t arcs = 0;
  REQUIRE(tsg_digraph_arc_count(d, &arcs) == TSG_OK);
  CHECK(arcs == 84);
  int strong = 0, weak = 0;
  REQUIRE(tsg_digraph_component_count(d, &strong, &weak) == TSG_OK);
  CHECK(strong == 1);
  CHECK(weak == 1);

  const json j = json::parse(take([&] {
    char* s = nullptr;
    REQUIRE(tsg_digraph_json(d, &s) == TSG_OK);
    return s;
  }()));
  CHECK(j["arcs"].size() == 84);
  for (const auto& arc : j["arcs"]) {
    int has = 0;
    REQUIRE(tsg_digraph_has_arc(d, arc[0].get<int>(), arc[1].get<int>(), &has) == TSG_OK);
    CHECK(has == 1);
  }
  int has = 0;
  CHECK(tsg_digraph_has_arc(d, 0, 12, &has) == TSG_ERR_INVALID_PARAMETER);

  char* comps = nullptr;
  REQUIRE(tsg_digraph_components_json(d, &comps) == TSG_OK);
  CHECK(json::parse(take(comps))["strong"].size() == 1);

  char* dot = nullptr;
  REQUIRE(tsg_digraph_dot(d, &dot) == TSG_OK);
  CHECK(take(dot).rfind("digraph", 0) == 0);
  tsg_digraph_free(d);
}

TEST_CASE("isomorphism through handles") {
  tsg_group* c7 = group("C7");
  tsg_subset* l = subset(c7, "g^2,g^3");
  tsg_subset* r = subset(c7, "e,g");
  tsg_subset* s = subset(c7, "g^4,g^5,g^6");
  tsg_subset* t = subset(c7, "g,g^2,g^3");
  tsg_digraph *two = nullptr, *cay = nullptr, *other = nullptr;
  REQUIRE(tsg_digraph_two_sided(l, r, &two) == TSG_OK);
  REQUIRE(tsg_digraph_cayley(s, &cay) == TSG_OK);
  REQUIRE(tsg_digraph_cayley(t, &other) == TSG_OK);
  int iso = -1;
  REQUIRE(tsg_digraphs_isomorphic(two, cay, &iso) == TSG_OK);
  CHECK(iso == 1);
  // Cay(C7,{g,g^2,g^3}) is the reverse of Cay(C7,{g^4,g^5,g^6}) and isomorphic to it
  REQUIRE(tsg_digraphs_isomorphic(cay, other, &iso) == TSG_OK);
  CHECK(iso == 1);
  for (auto* h : {two, cay, other}) tsg_digraph_free(h);
  for (auto* h : {l, r, s, t}) tsg_subset_free(h);
  tsg_group_free(c7);
}

TEST_CASE("report entry points return JSON") {
  char* out = nullptr;
  REQUIRE(tsg_analyze("D6", "t,ts^5", "ts,ts^2", "components,theorem24", 1, &out) == TSG_OK);
  const json a = json::parse(take(out));
  CHECK(a["pass"] == true);
  CHECK(a["results"]["components"]["strong_count"] == 2);
  CHECK(a.contains("dot"));

  REQUIRE(tsg_analyze("D6", "t,ts^5", "ts,ts^2", "", 0, &out) == TSG_OK);
  CHECK(json::parse(take(out))["checks"] == json::array({"valency", "components"}));

  REQUIRE(tsg_paper_examples(nullptr, &out) == TSG_OK);
  const json ex = json::parse(take(out));
  CHECK(ex["fixtures"].size() == 10);
  CHECK(ex["passed"] == 10);
  CHECK(ex["failed"] == 0);

  REQUIRE(tsg_paper_examples("a5-cosets", &out) == TSG_OK);
  const json one = json::parse(take(out));
  REQUIRE(one["fixtures"].size() == 1);
  CHECK(one["fixtures"][0]["id"] == "a5-cosets");

  REQUIRE(tsg_verify(7, 30, 12, 2, &out) == TSG_OK);
  const std::string v1 = take(out);
  REQUIRE(tsg_verify(7, 30, 12, 1, &out) == TSG_OK);
  CHECK(take(out) == v1);
  CHECK(json::parse(v1)["passed"] == 30);
}
