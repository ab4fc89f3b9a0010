#include "doctest.h"
#include "tsg/parse.hpp"
#include "tsg/theory.hpp"

using namespace tsg;

namespace {

Instance inst(const char* group, const char* left, const char* right) {
  const FiniteGroup g = parse_group_spec(group);
  return Instance(parse_subset(g, left), parse_subset(g, right));
}

Instance trivial(const char* group) {
  const FiniteGroup g = parse_group_spec(group);
  const ElementSubset e(g, {g.identity()});
  return Instance(e, e);
}

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return errc::internal_inconsistency;
}

bool contains_record(const VerificationReport& r, const std::string& name) {
  return std::any_of(r.records.begin(), r.records.end(), [&](const CheckRecord& c) { return c.check == name; });
}

}  // namespace

TEST_CASE("word sets and factorization") {
  const Instance a4 = inst("A4", "e,(243)", "(234),(12)(34),(132),(14)(23)");
  CHECK(factorization_check(a4.left(), a4.right()));
  const Instance c2 = trivial("C2");
  CHECK_FALSE(factorization_check(c2.left(), c2.right()));
  const Instance a5 = inst("A5", "(235)", "(243),(254)");
  CHECK_FALSE(factorization_check(a5.left(), a5.right()));

  // W(S) is the generated subgroup in a finite group.
  const FiniteGroup d6 = parse_group_spec("D6");
  const ElementSubset s = parse_subset(d6, "t,ts^5");
  const auto w = word_set(s);
  CHECK(std::count(w.begin(), w.end(), true) == 12);
  CHECK(generated_subgroup(s).size() == 12);
  const ElementSubset rot = parse_subset(d6, "s^2");
  const auto wr = word_set(rot);
  CHECK(std::count(wr.begin(), wr.end(), true) == 3);
  CHECK(generated_subgroup(rot) == closure(rot));
}

TEST_CASE("identity offset witnesses") {
  const Instance a4 = inst("A4", "e,(243)", "(234),(12)(34),(132),(14)(23)");
  const FiniteGroup& g = a4.group();
  const auto w = identity_offset_witness(a4.left(), a4.right());
  REQUIRE(w.has_value());
  CHECK(w->i_left.letters.size() == static_cast<std::size_t>(w->i + 1));
  CHECK(w->i_right.letters.size() == static_cast<std::size_t>(w->i));
  CHECK(w->j_left.letters.size() == static_cast<std::size_t>(w->j));
  CHECK(w->j_right.letters.size() == static_cast<std::size_t>(w->j + 1));
  CHECK(g.mul(evaluate(g, w->i_left), evaluate(g, w->i_right)) == g.identity());
  CHECK(g.mul(evaluate(g, w->j_left), evaluate(g, w->j_right)) == g.identity());
  const ElementSubset linv = a4.left().inverse();
  for (element_t x : w->i_left.letters) CHECK(linv.contains(x));
  for (element_t x : w->i_right.letters) CHECK(a4.right().contains(x));

  // The quoted witness e = e^3 [(12)(34)]^2 is valid at lengths (3, 2).
  const element_t x = parse_element(g, "(12)(34)");
  const Word left{{0, 0, 0}}, right{{x, x}};
  CHECK(g.mul(evaluate(g, left), evaluate(g, right)) == g.identity());
  CHECK(render_words(g, left, right) == "e.e.e | (12)(34).(12)(34)");

  const Instance c2 = trivial("C2");
  const auto t = identity_offset_witness(c2.left(), c2.right());
  REQUIRE(t.has_value());
  CHECK(t->i == 1);
  CHECK(t->i_left.letters.size() == 2);
  CHECK(t->i_right.letters.size() == 1);

  const Instance d6 = inst("D6", "t,ts^5", "ts,ts^2");
  CHECK_FALSE(identity_offset_witness(d6.left(), d6.right()).has_value());
}

TEST_CASE("strong connectivity theorem") {
  const Instance c7 = inst("C7", "g^2,g^3", "e,g");
  CHECK(strong_connectivity_predicate(c7.left(), c7.right()));
  CHECK(c7.components().is_strongly_connected());
  const VerificationReport r = theorem_strong_connectivity(c7);
  CHECK(r.all_pass());
  CHECK(r.records.size() == 2);

  const Instance c2 = trivial("C2");
  CHECK_FALSE(strong_connectivity_predicate(c2.left(), c2.right()));
  CHECK(theorem_strong_connectivity(c2).all_pass());
}

TEST_CASE("global connection length") {
  const Instance d6 = inst("D6", "t,ts^5", "ts,ts^2");
  CHECK(min_connection_length(d6).k == 2);
  CHECK(min_connection_length(inst("A4", "e,(243)", "(234),(12)(34),(132),(14)(23)")).k == 1);
  CHECK(min_connection_length(inst("C7", "g^2,g^3", "e,g")).k == 1);
  const auto d10 = min_connection_length(inst("D10", "s", "t,s^3"));
  CHECK(d10.k == 2);
  CHECK(d10.predicted_components == 2);
  CHECK(d10.per_coset.size() == 1);
  CHECK(code_of([] { min_connection_length(trivial("C2")); }) == errc::hypothesis_not_met);
}

TEST_CASE("component count theorem") {
  const VerificationReport d10 = component_count_theorem(inst("D10", "s", "t,s^3"));
  CHECK(d10.all_pass());
  CHECK(contains_record(d10, "component_count.isomorphic_components"));

  const VerificationReport d6 = component_count_theorem(inst("D6", "t,ts^5", "ts,ts^2"));
  CHECK(d6.all_pass());
  CHECK_FALSE(contains_record(d6, "component_count.isomorphic_components"));
  CHECK(contains_record(d6, "component_count.k.weak"));
  CHECK(contains_record(d6, "component_count.k.strong"));

  const VerificationReport a4 = component_count_theorem(inst("A4", "e,(243)", "(234),(12)(34),(132),(14)(23)"));
  CHECK(a4.all_pass());
  CHECK(code_of([] { component_count_theorem(trivial("C3")); }) == errc::hypothesis_not_met);
}

TEST_CASE("per-coset connection lengths") {
  const Instance d3c3 = inst("D3xC3", "(ts^2,g^2)", "(e,g^2),(t,g^2)");
  const CosetAnalysis a = coset_connection_lengths(d3c3);
  CHECK(a.cosets.size() == 2);
  CHECK(a.k == std::vector<int>{3, 3});
  CHECK(a.report.all_pass());
  CHECK(total_component_prediction(d3c3) == 6);

  const Instance a5 = inst("A5", "(235)", "(243),(254)");
  const CosetAnalysis b = coset_connection_lengths(a5);
  REQUIRE(b.cosets.size() == 3);
  const FiniteGroup& g = a5.group();
  auto at = [&](const char* rep) { return b.cosets.coset_of[parse_element(g, rep)]; };
  CHECK(b.k[at("e")] == 3);
  CHECK(b.k[at("(123)")] == 3);
  CHECK(b.k[at("(145)")] == 1);
  CHECK(b.component_size[at("e")] == 4);
  CHECK(b.component_size[at("(123)")] == 12);
  CHECK(b.component_size[at("(145)")] == 12);
  CHECK(b.lengths.predicted_components == 7);
  CHECK(b.report.all_pass());

  const CosetAnalysis c = coset_connection_lengths(trivial("C3"));
  CHECK(c.cosets.size() == 3);
  CHECK(c.k == std::vector<int>{1, 1, 1});
  CHECK(total_component_prediction(inst("C7", "g^2,g^3", "e,g")) == 1);
}

TEST_CASE("Burnside counts") {
  const BurnsideCount d6 = burnside_component_count(inst("D6", "t,ts^5", "ts,ts^2").left(),
                                                    inst("D6", "t,ts^5", "ts,ts^2").right());
  CHECK(d6.components == 2);
  CHECK(d6.fixed_point_sum == 2 * static_cast<long long>(d6.u_order));

  const Instance c5 = trivial("C5");
  const BurnsideCount t = burnside_component_count(c5.left(), c5.right());
  CHECK(t.u_order == 1);
  CHECK(t.components == 5);

  const Instance a5 = inst("A5", "(235)", "(243),(254)");
  CHECK(burnside_component_count(a5.left(), a5.right()).components == 7);
}

TEST_CASE("diagonal correspondence") {
  const FiniteGroup c6 = parse_group_spec("C6");
  CHECK(delta_correspondence_check(c6, {{1, 2}}).all_pass());

  std::vector<ElementPair> diag;
  const FiniteGroup s3 = parse_group_spec("S3");
  for (element_t a = 0; a < 6; ++a) diag.emplace_back(a, a);
  CHECK(delta_correspondence_check(s3, diag).all_pass());
  // 2S(G; diag G): loops everywhere, g -> u^-1 g u
  const TwoSidedDigraph conj = build_generalized(s3, diag);
  for (element_t g = 0; g < 6; ++g) CHECK(conj.graph().has_arc(g, g));

  const auto pairs = cartesian_pairs(parse_subset(s3, "(12)"), parse_subset(s3, "(123)"));
  const VerificationReport r = delta_correspondence_check(s3, pairs);
  CHECK(r.all_pass());
  CHECK(contains_record(r, "delta.component_bijection.weak"));

  CHECK(code_of([] { delta_correspondence_check(parse_group_spec("C13"), {{0, 1}}); }) == errc::capability);
}

TEST_CASE("retract reduction") {
  const FiniteGroup g = load_semidirect(TSG_TEST_DATA "/d6_semidirect.txt");
  const element_t s = parse_element(g, "(g,e)"), t = parse_element(g, "(e,g)");
  const Instance connected(ElementSubset(g, {s}), ElementSubset(g, {g.pow(s, 2), t}));
  const ReductionResult a = retract_reduction_check(connected);
  CHECK(a.connected);
  CHECK(a.image_connected);
  CHECK(a.kernel_connected);
  CHECK(a.report.all_pass());

  auto ts = [&](int i) { return g.mul(t, g.pow(s, i)); };
  const Instance split(ElementSubset(g, {t, ts(5)}), ElementSubset(g, {ts(1), ts(2)}));
  const ReductionResult b = retract_reduction_check(split);
  CHECK_FALSE(b.connected);
  CHECK_FALSE(b.image_connected);
  CHECK(b.kernel_connected);
  CHECK(b.report.all_pass());

  // Trivial acting group: only the kernel condition remains.
  const FiniteGroup c6 = make_cyclic(6);
  Action id(1);
  for (element_t x = 0; x < 6; ++x) id[0].push_back(x);
  const FiniteGroup h = semidirect_product(c6, make_cyclic(1), id);
  const Instance only_kernel(ElementSubset(h, {1}), ElementSubset(h, {0}));
  const ReductionResult c = retract_reduction_check(only_kernel);
  CHECK(c.image_connected);
  CHECK(c.connected == c.kernel_connected);
  CHECK(c.report.all_pass());

  CHECK(code_of([] { retract_reduction_check(inst("D6", "s", "s^2,t")); }) == errc::missing_retraction);
}

TEST_CASE("quotient reduction") {
  const Instance d6 = inst("D6", "s", "s^2,t");
  const ElementSubset rot = closure(parse_subset(d6.group(), "s"));
  const ReductionResult a = quotient_reduction_check(d6, rot);
  CHECK(a.connected);
  CHECK(a.report.all_pass());

  const ReductionResult whole = quotient_reduction_check(d6, ElementSubset::whole(d6.group()));
  CHECK(whole.image_connected);
  CHECK(whole.connected == whole.kernel_connected);

  const Instance c6 = inst("C6", "g", "g");
  const ReductionResult c = quotient_reduction_check(c6, closure(parse_subset(c6.group(), "g^3")));
  CHECK_FALSE(c.connected);
  CHECK_FALSE(c.image_connected);
  CHECK(c.report.all_pass());

  CHECK(code_of([&] { quotient_reduction_check(d6, parse_subset(d6.group(), "e,t")); }) ==
        errc::invalid_parameter);
  CHECK(code_of([&] { quotient_reduction_check(d6, parse_subset(d6.group(), "t")); }) == errc::invalid_parameter);
}
