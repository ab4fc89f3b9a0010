#include "doctest.h"
#include "tsg/parse.hpp"

using namespace tsg;

namespace {

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return errc::internal_inconsistency;
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group_spec("D6").order() == 12);
  CHECK(parse_group_spec("C7").order() == 7);
  CHECK(parse_group_spec("S3").order() == 6);
  CHECK(parse_group_spec("A5").order() == 60);
  const FiniteGroup g = parse_group_spec("D3xC3");
  CHECK(g.order() == 18);
  CHECK(g.name() == "D3xC3");
  CHECK(parse_group_spec("C2xC2xC3").order() == 12);
  CHECK(parse_group_spec(" A4 ").order() == 12);
}

TEST_CASE("group spec errors carry positions") {
  try {
    parse_group_spec("D3xQ3");
    FAIL("accepted Q3");
  } catch (const parse_error& e) {
    CHECK(e.position() == 3);
    CHECK(e.code() == errc::parse_error);
  }
  CHECK(code_of([] { parse_group_spec(""); }) == errc::parse_error);
  CHECK(code_of([] { parse_group_spec("D"); }) == errc::parse_error);
  CHECK(code_of([] { parse_group_spec("C3x"); }) == errc::parse_error);
  CHECK(code_of([] { parse_group_spec("C0"); }) == errc::invalid_parameter);
  CHECK(code_of([] { parse_group_spec("S9"); }) == errc::invalid_parameter);
  CHECK(code_of([] { parse_group_spec("semidirect:/nonexistent/file"); }) == errc::io_error);
}

TEST_CASE("subsets in permutation groups") {
  const FiniteGroup a4 = parse_group_spec("A4");
  const ElementSubset s = parse_subset(a4, "(2 4 3), (1 2)(3 4)");
  REQUIRE(s.size() == 2);
  CHECK(s.contains(*a4.find("(243)")));
  CHECK(s.contains(*a4.find("(12)(34)")));
  CHECK(parse_subset(a4, "(243),(12)(34)") == s);
  // Equivalent spellings of one cycle.
  CHECK(parse_element(a4, "(432)") == parse_element(a4, "(243)"));
  CHECK(parse_element(a4, "(324)") == parse_element(a4, "(243)"));
  CHECK(parse_element(a4, "e") == a4.identity());
  CHECK(parse_element(a4, "()") == a4.identity());
  // Duplicates collapse.
  CHECK(parse_subset(a4, "e,e,(123)").size() == 2);
}

TEST_CASE("subsets in cyclic, dihedral and product groups") {
  const FiniteGroup c7 = parse_group_spec("C7");
  CHECK(parse_element(c7, "g^9") == parse_element(c7, "g^2"));
  CHECK(parse_element(c7, "g^-1") == parse_element(c7, "g^6"));
  CHECK(parse_element(c7, "g") == 1);

  const FiniteGroup d6 = parse_group_spec("D6");
  CHECK(parse_element(d6, "ts^5") == parse_element(d6, "τσ^5"));
  CHECK(parse_element(d6, "s^-1") == parse_element(d6, "s^5"));
  CHECK(parse_element(d6, "st") == parse_element(d6, "ts^5"));

  const FiniteGroup p = parse_group_spec("D3xC3");
  CHECK(p.label(parse_element(p, "(ts^2, g^2)")) == "(ts^2,g^2)");
  CHECK(parse_subset(p, "(e,g^2),(t,g^2)").size() == 2);
  CHECK(parse_element(p, "e") == p.identity());
}

TEST_CASE("subset errors") {
  const FiniteGroup a4 = parse_group_spec("A4");
  CHECK(code_of([&] { parse_subset(a4, ""); }) == errc::invalid_parameter);
  CHECK(code_of([&] { parse_subset(a4, "  "); }) == errc::invalid_parameter);
  CHECK(code_of([&] { parse_element(a4, "(12)"); }) == errc::unknown_element);
  CHECK(code_of([&] { parse_subset(a4, "e,(12)"); }) == errc::unknown_element);
  CHECK(code_of([&] { parse_element(a4, "(15)"); }) != errc::internal_inconsistency);
  CHECK(code_of([&] { parse_element(a4, "(1 2"); }) != errc::internal_inconsistency);
  try {
    parse_subset(a4, "e,(123),bogus");
    FAIL("accepted bogus");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("position 8") != std::string::npos);
  }
  const FiniteGroup c5 = parse_group_spec("C5");
  CHECK(code_of([&] { parse_element(c5, "s"); }) == errc::unknown_element);
}
