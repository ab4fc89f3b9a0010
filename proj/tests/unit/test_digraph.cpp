#include "doctest.h"
#include "oracles.hpp"
#include "tsg/connectivity.hpp"
#include "tsg/digraph.hpp"
#include "tsg/parse.hpp"

using namespace tsg;

namespace {

struct Case {
  const char* group;
  const char* left;
  const char* right;
};

const Case kCases[] = {
    {"A4", "e,(243)", "(234),(12)(34),(132),(14)(23)"},
    {"C7", "g^2,g^3", "e,g"},
    {"D6", "t,ts^5", "ts,ts^2"},
    {"A4", "(123),(12)(34)", "(243),(12)(34)"},
    {"D10", "s", "t,s^3"},
    {"D3xC3", "(ts^2,g^2)", "(e,g^2),(t,g^2)"},
    {"S4", "(1234),(12)", "(13),(234)"},
    {"C2", "e", "e"},
};

}  // namespace

TEST_CASE("A4 valencies agree with explicit permutations") {
  const FiniteGroup a4 = parse_group_spec("A4");
  const ElementSubset l = parse_subset(a4, "e,(243)");
  const ElementSubset r = parse_subset(a4, "(234),(12)(34),(132),(14)(23)");
  const TwoSidedDigraph d = build_two_sided(l, r);
  const ValencyProfile vp = valency_profile(d);
  REQUIRE(vp.out_constant.has_value());
  CHECK(*vp.out_constant == 7);
  CHECK_FALSE(vp.in_constant.has_value());
  CHECK_FALSE(vp.regular);

  const ElementSubset six = parse_subset(a4, "(123),(132),(142),(143),(12)(34),(13)(24)");
  for (element_t v = 0; v < a4.order(); ++v) CHECK(vp.in_valencies[v] == (six.contains(v) ? 6 : 8));

  // The same digraph from image vectors, without the library's tables.
  std::vector<oracle::Perm> g = oracle::alternating(4), lp, rp;
  for (element_t x : l) lp.push_back(oracle::parse_cycles(a4.label(x), 4));
  for (element_t x : r) rp.push_back(oracle::parse_cycles(a4.label(x), 4));
  const auto od = oracle::two_sided(g, lp, rp);
  for (std::size_t i = 0; i < g.size(); ++i) {
    element_t v = -1;
    for (element_t x = 0; x < a4.order(); ++x)
      if (oracle::parse_cycles(a4.label(x), 4) == g[i]) v = x;
    REQUIRE(v >= 0);
    CHECK(od.out[i].size() == 7);
    CHECK(static_cast<int>(od.in[i].size()) == vp.in_valencies[v]);
  }
  int six_count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) six_count += od.in[i].size() == 6;
  CHECK(six_count == 6);
}

TEST_CASE("build_two_sided") {
  const FiniteGroup c7 = parse_group_spec("C7");
  const TwoSidedDigraph d = build_two_sided(parse_subset(c7, "g^2,g^3"), parse_subset(c7, "e,g"));
  CHECK(d.arc_count() == 21);
  CHECK(d.source() == ArcSource::two_sided);
  CHECK(d.description() == "2S(C7;{g^2,g^3},{e,g})");

  const FiniteGroup a4 = parse_group_spec("A4");
  const ElementSubset e(a4, {a4.identity()});
  const TwoSidedDigraph loops = build_two_sided(e, e);
  CHECK(loops.arc_count() == 12);
  for (element_t v = 0; v < 12; ++v) CHECK(loops.out_adj()[v] == std::vector<element_t>{v});
  const ValencyProfile vp = valency_profile(loops);
  CHECK(vp.regular);
  CHECK(*vp.out_constant == 1);

  CHECK_THROWS_AS(ElementSubset(a4, {}), error);
}

TEST_CASE("generalized and Cayley digraphs") {
  const FiniteGroup c7 = parse_group_spec("C7");
  const ElementSubset l = parse_subset(c7, "g^2,g^3"), r = parse_subset(c7, "e,g");
  const TwoSidedDigraph gen = build_generalized(c7, cartesian_pairs(l, r));
  CHECK(gen.out_adj() == build_two_sided(l, r).out_adj());
  CHECK(gen.source() == ArcSource::pair_set);

  CHECK(build_generalized(c7, {{0, 0}}).arc_count() == 7);

  const FiniteGroup c6 = parse_group_spec("C6");
  const TwoSidedDigraph cyc = build_generalized(c6, {{1, 2}});
  for (element_t v = 0; v < 6; ++v) CHECK(cyc.out_adj()[v] == std::vector<element_t>{(v + 1) % 6});
  CHECK(strong_components(cyc.graph()).size() == 1);
  CHECK_THROWS_AS(build_generalized(c6, {}), error);

  const TwoSidedDigraph cay = build_cayley(parse_subset(c7, "g^4,g^5,g^6"));
  CHECK(cay.source() == ArcSource::cayley);
  CHECK(digraphs_isomorphic(cay.graph(), build_two_sided(l, r).graph()));

  const FiniteGroup c4 = parse_group_spec("C4");
  const TwoSidedDigraph four = build_cayley(parse_subset(c4, "g"));
  for (element_t v = 0; v < 4; ++v) CHECK(four.out_adj()[v] == std::vector<element_t>{(v + 1) % 4});
  CHECK(build_cayley(ElementSubset(c4, {0})).arc_count() == 4);

  // g -> g s, checked in a non-abelian group
  const FiniteGroup s3 = parse_group_spec("S3");
  const element_t s = parse_element(s3, "(12)");
  const TwoSidedDigraph cs = build_cayley(ElementSubset(s3, {s}));
  for (element_t v = 0; v < 6; ++v) CHECK(cs.out_adj()[v] == std::vector<element_t>{s3.mul(v, s)});
}

TEST_CASE("undirectedness") {
  const FiniteGroup d6 = parse_group_spec("D6");
  CHECK(is_undirected(parse_subset(d6, "t,ts^5"), parse_subset(d6, "ts,ts^2")));
  const FiniteGroup c7 = parse_group_spec("C7");
  CHECK_FALSE(is_undirected(parse_subset(c7, "g^2,g^3"), parse_subset(c7, "e,g")));
  CHECK(is_undirected(ElementSubset(c7, {0}), ElementSubset(c7, {0})));
}

TEST_CASE("arc multisets and obstruction sets") {
  const FiniteGroup a4 = parse_group_spec("A4");
  const ElementSubset whole = ElementSubset::whole(a4);
  const ElementSubset r = parse_subset(a4, "(243),(12)(34)");
  const TwoSidedDigraph d = build_two_sided(whole, r);
  const ValencyProfile vp = valency_profile(d);
  CHECK(vp.regular);
  CHECK(*vp.out_constant == 12);
  for (element_t g = 0; g < 12; ++g) {
    const auto ms = arc_multiset(whole, r, g);
    CHECK(ms.size() == 12);
    for (const auto& [x, m] : ms) CHECK(m == 2);
    CHECK(valency_obstruction(whole, r, g) == parse_subset(a4, "e,(124),(142)"));
  }

  const FiniteGroup c7 = parse_group_spec("C7");
  const auto ms = arc_multiset(parse_subset(c7, "g^2,g^3"), parse_subset(c7, "e,g"), c7.identity());
  CHECK(ms.size() == 3);
  CHECK(ms.at(parse_element(c7, "g^5")) == 2);
  CHECK(ms.at(parse_element(c7, "g^4")) == 1);
  CHECK(ms.at(parse_element(c7, "g^6")) == 1);

  const FiniteGroup d6 = parse_group_spec("D6");
  for (element_t g = 0; g < 12; ++g)
    CHECK(valency_obstruction(parse_subset(d6, "t,ts^5"), parse_subset(d6, "ts,ts^2"), g) ==
          parse_subset(d6, "e,s,s^5"));

  const ElementSubset e(d6, {d6.identity()});
  const auto trivial = arc_multiset(e, e, 5);
  CHECK(trivial.size() == 1);
  CHECK(trivial.at(5) == 1);
  CHECK(valency_obstruction(e, e, 5) == e);
}

TEST_CASE("digraph invariants on every fixture instance") {
  for (const Case& c : kCases) {
    CAPTURE(c.group);
    CAPTURE(c.left);
    const FiniteGroup g = parse_group_spec(c.group);
    const ElementSubset l = parse_subset(g, c.left), r = parse_subset(g, c.right);
    const TwoSidedDigraph d = build_two_sided(l, r);
    const ValencyProfile vp = valency_profile(d);

    // transpose consistency
    std::size_t arcs = 0;
    for (element_t v = 0; v < g.order(); ++v) {
      for (element_t w : d.out_adj()[v]) {
        CHECK(std::binary_search(d.in_adj()[w].begin(), d.in_adj()[w].end(), v));
        ++arcs;
      }
      CHECK(std::is_sorted(d.out_adj()[v].begin(), d.out_adj()[v].end()));
    }
    std::size_t in_arcs = 0;
    for (const auto& row : d.in_adj()) in_arcs += row.size();
    CHECK(arcs == in_arcs);
    CHECK(arcs == d.arc_count());

    // valencies as set sizes by direct enumeration
    for (element_t v = 0; v < g.order(); ++v) {
      std::set<element_t> out, in;
      for (element_t a : l)
        for (element_t b : r) {
          out.insert(g.mul(g.mul(g.inv(a), v), b));
          in.insert(g.mul(g.mul(a, v), g.inv(b)));
        }
      CHECK(static_cast<int>(out.size()) == vp.out_valencies[v]);
      CHECK(static_cast<int>(in.size()) == vp.in_valencies[v]);

      const auto ms = arc_multiset(l, r, v);
      int total = 0;
      for (const auto& [x, m] : ms) total += m;
      CHECK(total == static_cast<int>(l.size() * r.size()));
      CHECK(static_cast<int>(ms.size()) == vp.out_valencies[v]);

      if (valency_obstruction(l, r, v).size() == 1)
        CHECK(vp.out_valencies[v] == static_cast<int>(l.size() * r.size()));
    }

    CHECK(build_generalized(g, cartesian_pairs(l, r)).out_adj() == d.out_adj());

    // undirectedness by set equality agrees with arc symmetry
    bool symmetric = true;
    for (element_t v = 0; v < g.order(); ++v)
      for (element_t w : d.out_adj()[v]) symmetric = symmetric && d.graph().has_arc(w, v);
    CHECK(is_undirected(l, r) == symmetric);
  }
}

TEST_CASE("DOT output") {
  const FiniteGroup c2 = parse_group_spec("C2");
  const ElementSubset e(c2, {0});
  const std::string c2_dot = to_dot(build_two_sided(e, e));
  CHECK(c2_dot == "digraph \"2S(C2;{e},{e})\" {\n  0 [label=\"e\"];\n  1 [label=\"g\"];\n  0 -> 0;\n  1 -> 1;\n}\n");

  const FiniteGroup c7 = parse_group_spec("C7");
  const TwoSidedDigraph d = build_two_sided(parse_subset(c7, "g^2,g^3"), parse_subset(c7, "e,g"));
  const std::string dot = to_dot(d);
  CHECK(dot == to_dot(d));
  auto count = [](const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(count(dot, "[label=") == 7);
  CHECK(count(dot, " -> ") == 21);
  CHECK(count(dot, "dir=none") == 0);

  const FiniteGroup d6 = parse_group_spec("D6");
  const std::string und = to_dot(build_two_sided(parse_subset(d6, "t,ts^5"), parse_subset(d6, "ts,ts^2")));
  // 36 arcs: loops once each, every other arc paired with its reverse
  const TwoSidedDigraph dd = build_two_sided(parse_subset(d6, "t,ts^5"), parse_subset(d6, "ts,ts^2"));
  int loops = 0;
  for (element_t v = 0; v < 12; ++v) loops += dd.graph().has_arc(v, v);
  CHECK(count(und, " -> ") == loops + (36 - loops) / 2);
  CHECK(count(und, "dir=none") == (36 - loops) / 2);
}
