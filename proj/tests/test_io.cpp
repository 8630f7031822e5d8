#include <doctest.h>

#include "helpers.hpp"
#include "vml/io.hpp"

using namespace vml;
using namespace helpers;

namespace {

template <class T, class F>
void round_trip(const T& value, F from) {
  const Json doc = to_json(value);
  CHECK(doc.at("format_version") == kFormatVersion);
  const Json reparsed = parse_json(dump_document(doc));
  CHECK(from(reparsed) == value);
}

}  // namespace

TEST_CASE("values") {
  CHECK(ext_val_to_json(fin(-3)) == Json(-3));
  CHECK(ext_val_to_json(inf()) == Json("inf"));
  CHECK(ext_val_from_json(Json("inf")).is_inf());
  CHECK(ext_val_from_json(Json(7)) == fin(7));
  CHECK(ext_val_from_json(Json(0.5)).to_double() == 0.5);
  CHECK(ext_val_from_json(ext_val_to_json(ExtVal::real(0.1))).to_double() == 0.1);
  CHECK(ext_val_from_json(Json("2.5")).to_double() == 2.5);
  CHECK_THROWS_AS(ext_val_from_json(Json("infinity")), InputError);
  CHECK_THROWS_AS(ext_val_from_json(Json::array()), InputError);
}

TEST_CASE("subsets") {
  const GroundSet g({"a", "b", "c"});
  CHECK(subset_to_json(g, Subset::of({0, 2})) == Json({"a", "c"}));
  CHECK(subset_from_json(g, Json({"c", "a"})) == Subset::of({0, 2}));
  CHECK_THROWS_AS(subset_from_json(g, Json({"d"})), InputError);
  CHECK_THROWS_AS(subset_from_json(g, Json({"a", "a"})), InputError);
}

TEST_CASE("round trips") {
  round_trip(classical_matroid("fano"), pluecker_from_json);
  round_trip(matroid({"a", "b"}, 1, {{{"a"}, fin(-2)}, {{"b"}, ExtVal::real(0.25)}}), pluecker_from_json);
  for (std::uint64_t i = 0; i < 20; ++i) round_trip(random_matroid(71, i, 7, 4), pluecker_from_json);

  round_trip(mconvex({"a", "b"}, 2, {{{2, 0}, fin(3)}, {{1, 1}, fin(1)}, {{0, 2}, inf()}}), mconvex_from_json);

  Rng rng({72, 0});
  for (int i = 0; i < 10; ++i) round_trip(stiefel_bimatroid(random_tropical_matrix(2, 3, 0, 9, 0.3, rng)), bimatroid_from_json);
  round_trip(MinorMap(GroundSet({"e"}), GroundSet({"f"}), {{Subset(), Subset(), fin(4)}}), bimatroid_from_json);

  std::map<MultiIndex, Rational> c{{MultiIndex({2, 0}), Rational(1, 2)}, {MultiIndex({1, 1}), Rational(3)}};
  round_trip(MultiHomPoly(GroundSet({"x", "y"}), 2, c), polynomial_from_json);

  SequenceContext ctx{SequenceKind::ik_matroid, "1/2", 7};
  round_trip(PositiveSequence::exact({1, Rational(7, 2), 21}, ctx), sequence_from_json);
  round_trip(PositiveSequence::relaxed({1.0, 0.1, 1e-30}, ctx), sequence_from_json);
}

TEST_CASE("document layout") {
  const Json doc = to_json(matroid({"a", "b"}, 1, {{{"a"}, fin(1)}}));
  CHECK(doc.at("type") == "valuated_matroid");
  CHECK(doc.at("values").size() == 1);
  CHECK(doc.at("values")[0].at("set") == Json({"a"}));
  CHECK(document_type(doc) == "valuated_matroid");

  const Json mu = to_json(MinorMap(GroundSet({"e"}), GroundSet({"f"}), {{Subset::of({0}), Subset::of({0}), fin(2)}}));
  CHECK(mu.at("values").size() == 1);

  std::map<MultiIndex, Rational> c{{MultiIndex({0, 1}), Rational(1)}, {MultiIndex({1, 0}), Rational(2, 3)}};
  const Json p = to_json(MultiHomPoly(GroundSet({"x", "y"}), 1, c));
  CHECK(p.at("terms")[0].at("alpha") == Json({1, 0}));
  CHECK(p.at("terms")[0].at("coeff") == "2/3");
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_json("{\"format_version\":1,"), InputError);
  CHECK_THROWS_AS(document_type(parse_json("[]")), InputError);
  CHECK_THROWS_AS(document_type(parse_json(R"({"format_version":2,"type":"valuated_matroid"})")), InputError);
  CHECK_THROWS_AS(document_type(parse_json(R"({"type":"valuated_matroid"})")), InputError);
  CHECK_THROWS_AS(pluecker_from_json(parse_json(R"({"format_version":1,"type":"m_convex"})")), InputError);
  CHECK_THROWS_AS(pluecker_from_json(parse_json(
                      R"({"format_version":1,"type":"valuated_matroid","ground":["a","b"],"rank":1,"values":[{"set":["a","b"],"val":0}]})")),
                  InputError);
  CHECK_THROWS_AS(pluecker_from_json(parse_json(
                      R"({"format_version":1,"type":"valuated_matroid","ground":["a","a"],"rank":1,"values":[{"set":["a"],"val":0}]})")),
                  InputError);
  CHECK_THROWS_AS(pluecker_from_json(parse_json(
                      R"({"format_version":1,"type":"valuated_matroid","ground":["a"],"rank":1,"values":[{"set":["a"],"val":"inf"}]})")),
                  InputError);
  CHECK_THROWS_AS(pluecker_from_json(parse_json(
                      R"({"format_version":1,"type":"valuated_matroid","ground":["a"],"rank":"1","values":[]})")),
                  InputError);
  CHECK_THROWS_AS(mconvex_from_json(parse_json(
                      R"({"format_version":1,"type":"m_convex","ground":["a"],"rank":2,"values":[{"alpha":[1,1],"val":0}]})")),
                  InputError);
  CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"format_version":1,"type":"sequence","terms":["x"]})")), InputError);
  CHECK_THROWS_AS(polynomial_from_json(parse_json(
                      R"({"format_version":1,"type":"polynomial","vars":["x"],"degree":1,"terms":[{"alpha":[1],"coeff":1},{"alpha":[1],"coeff":2}]})")),
                  InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("check report documents") {
  const PlueckerVector two = matroid({"1", "2", "3", "4"}, 2, {{{"1", "2"}, fin(0)}, {{"3", "4"}, fin(0)}});
  const CheckReport r = check_valuated_exchange(two);
  const Json j = check_report_to_json(r, WitnessLabels{{&two.ground()}, &two.ground()});
  CHECK(j.at("pass") == false);
  CHECK(j.at("axiom") == "exchange");
  CHECK(j.at("witness").at("sets") == Json::parse(R"([["1","2"],["3","4"]])"));
  CHECK(j.at("witness").at("elements") == Json({"1"}));
  CHECK(check_report_to_json(check_valuated_exchange(uniform(3, 1)), {}) == Json::parse(R"({"pass":true})"));
}
