#include <doctest.h>

#include <fstream>

#include "mdcalc/errors.hpp"
#include "mdcalc/io.hpp"
#include "mdcalc/random.hpp"
#include "support/build.hpp"

using namespace mdcalc;
using build::m1;
using io::Json;

namespace {

ErrorKind kind_of(const Json& j) {
  try {
    io::crossed_module_from_json(j);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::UnknownSuite;
}

std::string message_of(const Json& j) {
  try {
    io::crossed_module_from_json(j);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("operator JSON round trip is bit-exact") {
  Generator gen(5);
  for (int n = 1; n <= 2; ++n) {
    const TruncationContext ctx{n};
    for (int t = 0; t < 60; ++t) {
      Operator p = t % 3 == 0 ? gen.polynomial(ctx, 2) : gen.truncated(ctx, 2, -6);
      Json j = io::to_json(p);
      Operator back = io::operator_from_json(j);
      CHECK(back == p);
      CHECK(io::to_json(back).dump() == j.dump());
      CHECK(io::operator_from_json(Json::parse(j.dump())) == p);
    }
  }
}

TEST_CASE("operator JSON layout") {
  const TruncationContext ctx{1};
  Operator p = Operator::from_components(
      ctx, 1, -2, {{1, m1(1, 1, 1)},
                   {-2, m1(Scalar::rational(-1, 2), 0, -2)}});
  CHECK(io::to_json(p).dump() ==
        R"({"vars":1,"top":1,"floor":-2,"components":{"1":"x1*xi1","-2":"-1/2*xi1^-2"}})");
  CHECK(io::to_json(Operator::one(ctx)).dump() ==
        R"({"vars":1,"top":0,"floor":"exact","components":{"0":"1"}})");
  CHECK_THROWS_AS(io::operator_from_json(Json::parse(
                      R"({"vars":1,"top":1,"floor":-2,"components":{"1":"xi1^2"}})")),
                  Error);
  CHECK_THROWS_AS(io::operator_from_json(Json::parse(R"({"vars":1,"top":1})")), Error);
  CHECK_THROWS_AS(io::operator_from_json(Json::parse(
                      R"({"vars":1,"top":0,"floor":"none","components":{}})")),
                  Error);
}

TEST_CASE("star-unitarity certificate JSON") {
  StarUnitarity ok{true, std::nullopt, std::nullopt, ""};
  CHECK(io::to_json(ok).dump() == R"({"ok":true})");
  StarUnitarity bad{false, -2, m1(-1, 0, -2), "defect"};
  CHECK(io::to_json(bad).dump() ==
        R"({"ok":false,"first_defect_degree":-2,"defect_symbol":"-xi1^-2","reason":"defect"})");
}

TEST_CASE("crossed module loading") {
  Json z = Json::parse(R"({"g1": "Z/2", "g0": "Z/4", "d": {"0": "0", "1": "2"}})");
  xm::CrossedModule cm = io::crossed_module_from_json(z);
  CHECK(cm.d == std::vector<int>{0, 2});
  CHECK(xm::shape(cm).kind == xm::Shape::Kind::Discrete);

  Json list = Json::parse(R"({"g1": {"name": "Z/2"}, "g0": "Z/4", "d": [0, 2], "action": "trivial"})");
  CHECK(io::crossed_module_from_json(list).d == std::vector<int>{0, 2});

  Json s3 = Json::parse(R"J({"g1": "S3", "g0": "S3",
      "d": ["e", "(12)", "(13)", "(23)", "(123)", "(132)"], "action": "conjugation"})J");
  CHECK(xm::shape(io::crossed_module_from_json(s3)).kind == xm::Shape::Kind::Trivial);

  Json explicit_action = Json::parse(R"({"g1": "Z/3", "g0": "Z/2", "d": [0, 0, 0],
      "action": {"0": {"0": "0", "1": "1", "2": "2"}, "1": {"0": "0", "1": "2", "2": "1"}}})");
  xm::CrossedModule twisted = io::crossed_module_from_json(explicit_action);
  CHECK(twisted.act(1, 1) == 2);

  Json bad_d = Json::parse(R"({"g1": "Z/2", "g0": "Z/4", "d": [0, 1]})");
  CHECK(kind_of(bad_d) == ErrorKind::AxiomViolation);
  CHECK(message_of(bad_d).find("d is not a homomorphism at (1, 1)") != std::string::npos);
}

TEST_CASE("crossed module schema errors are aggregated") {
  Json j = Json::parse(R"({"g1": "Z/2", "g0": "Q8", "d": [0, 0]})");
  CHECK(kind_of(j) == ErrorKind::SchemaError);
  Json missing = Json::parse(R"({"g1": "Z/2"})");
  const std::string msg = message_of(missing);
  CHECK(kind_of(missing) == ErrorKind::SchemaError);
  CHECK(msg.find("\"g0\"") != std::string::npos);
  CHECK(msg.find("\"d\"") != std::string::npos);
  Json labels = Json::parse(R"({"g1": "Z/2", "g0": "Z/4", "d": {"0": "0", "1": "7", "5": "0"}})");
  const std::string many = message_of(labels);
  CHECK(many.find("unknown element \"7\"") != std::string::npos);
  CHECK(many.find("unknown element \"5\"") != std::string::npos);
  Json action = Json::parse(R"({"g1": "Z/2", "g0": "Z/2", "d": [0, 0], "action": 3})");
  CHECK(kind_of(action) == ErrorKind::SchemaError);
}

TEST_CASE("non-associative table is an axiom violation") {
  Json j;
  j["g1"] = Json::parse(R"({"elements": ["a", "b", "c", "d", "e"], "table": [
      ["a", "b", "c", "d", "e"], ["b", "a", "d", "e", "c"], ["c", "e", "a", "b", "d"],
      ["d", "c", "e", "a", "b"], ["e", "d", "b", "c", "a"]]})");
  j["g0"] = "1";
  j["d"] = Json::parse(R"({"a": "0", "b": "0", "c": "0", "d": "0", "e": "0"})");
  CHECK(kind_of(j) == ErrorKind::AxiomViolation);
  CHECK(message_of(j).find("associativity fails at (") != std::string::npos);
}

TEST_CASE("explicit group tables") {
  Json j = Json::parse(R"({"elements": [0, 1, 2], "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})");
  xm::FiniteGroup g = io::group_from_json(j);
  CHECK(xm::are_isomorphic(g, xm::FiniteGroup::cyclic(3)));
  CHECK(io::to_json(g)["table"][1][2] == "0");
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"elements": ["a"], "table": [["b"]]})")), Error);
}

TEST_CASE("cover loading") {
  xm::Cover c = io::cover_from_json(
      Json::parse(R"({"opens": [1, 2, 3], "doubles": [[1, 2], [2, 3], [1, 3]], "triples": [[1, 2, 3]]})"));
  CHECK(c.triples().size() == 1);
  CHECK(io::cover_from_json(Json::parse(R"({"opens": [1, 2, 3], "doubles": [[1, 2], [2, 3], [1, 3]]})"))
            .triples()
            .empty());
  try {
    io::cover_from_json(
        Json::parse(R"({"opens": [1, 2, 3], "doubles": [[1, 2], [2, 3]], "triples": [[1, 2, 3]]})"));
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
    CHECK(std::string(e.what()).find("nerve closure") != std::string::npos);
  }
  CHECK_THROWS_AS(io::cover_from_json(Json::parse(R"({"opens": [1, 2], "doubles": [[1]]})")), Error);
}

TEST_CASE("classification report") {
  xm::Cover circle = xm::Cover::circle();
  xm::CrossedModule cm = xm::CrossedModule::to_trivial(xm::FiniteGroup::cyclic(2));
  Json r = io::to_json(xm::classify_h1(circle, cm), circle, cm, true);
  CHECK(r["class_count"] == 2);
  CHECK(r["pointed_class_index"] == 0);
  CHECK(r["classes"][0]["representative"]["h"].dump() == R"({"1,2":"0","1,3":"0","2,3":"0"})");
  CHECK(r["classes"][1]["representative"]["h"].dump() == R"({"1,2":"0","1,3":"0","2,3":"1"})");
  Json brief = io::to_json(xm::classify_h1(circle, cm), circle, cm, false);
  CHECK_FALSE(brief["classes"][0].contains("representative"));
}

TEST_CASE("loading from files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "mdcalc_test_cm.json";
  {
    std::ofstream out(path);
    out << R"({"g1": "Z/2", "g0": "Z/4", "d": {"0": "0", "1": "2"}})";
  }
  CHECK(io::load_crossed_module(path).g_zero.order() == 4);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::load_cover(dir / "mdcalc_missing_cover.json"), Error);
}
