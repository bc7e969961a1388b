#include <doctest.h>

#include "patterns.hpp"

#include "twklv/datum.hpp"
#include "twklv/errors.hpp"
#include "twklv/hecke.hpp"

#include <algorithm>

using namespace twklv;
using namespace twklv::testing;

namespace {

bool has_category(const ValidationReport& r, const std::string& cat) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.category == cat; });
}

}  // namespace

TEST_CASE("built-in data validate") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto rep = validate_datum(builtin_datum(name));
    CHECK_MESSAGE(rep.ok(), rep.str());
  }
}

TEST_CASE("built-in shapes") {
  const auto a2c = builtin_datum("a2-c");
  REQUIRE(a2c.parameters.size() == 2);
  CHECK(a2c.status(0, 0).kind == Kind::I3Plus);
  CHECK(a2c.status(0, 1).kind == Kind::SR3Minus);
  CHECK(a2c.lengths() == std::vector<int>{0, 2});

  const auto sc = builtin_datum("a1a1-sc");
  CHECK(sc.param_ids() == std::vector<std::string>{"L1", "L2", "L'", "L''"});
  CHECK(sc.lengths() == std::vector<int>{0, 0, 2, 2});
  CHECK(sc.status(0, 2).kind == Kind::R2_11Minus);
  CHECK(sc.status(0, 3).kind == Kind::RNP2Plus);

  CHECK(builtin_datum("a2-s").parameters.size() == 3);
  CHECK(builtin_datum("a1a1-int").parameters.size() == 4);
  CHECK(builtin_datum("a1a1-ad").parameters.size() == 3);
  CHECK_THROWS_AS(builtin_datum("a3-x"), UnknownName);
}

TEST_CASE("kind names") {
  CHECK(all_kinds().size() == 30);
  for (const auto& k : all_kinds()) CHECK(parse_kind(k.name) == k.kind);
  CHECK(parse_kind("2R11\xE2\x88\x92") == Kind::R2_11Minus);
  CHECK_FALSE(parse_kind("2R12-").has_value());
}

TEST_CASE("regular module data") {
  SUBCASE("folded A2") {
    const auto d = hecke_case_datum(*make_folded("A2", "(1 2)"));
    CHECK(d.lengths() == std::vector<int>{0, 3});
    CHECK(d.generators.at(0).m == 3);
    CHECK(d.status(0, 0).kind == Kind::C3Plus);
    CHECK(d.status(0, 1).kind == Kind::C3Minus);
  }
  SUBCASE("folded A1xA1") {
    const auto d = hecke_case_datum(*make_folded("A1xA1", "(1 2)"));
    CHECK(d.lengths() == std::vector<int>{0, 2});
    CHECK(d.status(0, 0).kind == Kind::C2Plus);
    CHECK(d.status(0, 1).kind == Kind::C2Minus);
  }
  SUBCASE("A1") {
    const auto d = hecke_case_datum(*make_folded("A1", "()"));
    CHECK(d.lengths() == std::vector<int>{0, 1});
    CHECK(d.status(0, 0).kind == Kind::C1Plus);
  }
  for (auto [type, sigma] : {std::pair{"A3", "(1 3)"}, {"A4", "(1 4)(2 3)"}, {"D4", "(3 4)"}, {"G2", "()"}}) {
    auto fs = make_folded(type, sigma);
    const auto d = hecke_case_datum(*fs);
    CHECK(d.parameters.size() == fs->size());
    CHECK(validate_datum(d).ok());
  }
  CHECK(builtin_datum("hecke:A3:(1 3)").parameters.size() == 8);
}

TEST_CASE("case patterns validate") {
  for (const auto& d : {complex_pair(1), complex_pair(2), complex_pair(3), i1_r1(), i2_r2(), semi2(), i11(), i22(), i12(),
                        three(Kind::SI3Plus, Kind::R3Minus), three(Kind::I3Plus, Kind::SR3Minus),
                        single(Kind::RNP2Plus, 2), single(Kind::IC3Minus, 3), sl2_torus()}) {
    CAPTURE(d.name);
    const auto rep = validate_datum(d);
    CHECK_MESSAGE(rep.ok(), rep.str());
  }
}

TEST_CASE("negative validation cases") {
  SUBCASE("missing reciprocal descent") {
    auto d = complex_pair(1);
    d.set_status("g", "L'", GeneratorStatus{Kind::IC1Minus, {}, {}, Role::None});
    CHECK(has_category(validate_datum(d), "reciprocity"));
  }
  SUBCASE("length delta") {
    auto d = complex_pair(2);
    d.parameters[1].length = 1;
    CHECK(has_category(validate_datum(d), "length"));
  }
  SUBCASE("missing status") {
    auto d = complex_pair(1);
    d.statuses[0][1].reset();
    const auto rep = validate_datum(d);
    CHECK(has_category(rep, "missing-status"));
  }
  SUBCASE("dangling reference") {
    auto d = complex_pair(1);
    d.statuses[0][0]->cross = "nowhere";
    CHECK(has_category(validate_datum(d), "dangling-reference"));
  }
  SUBCASE("generator type") {
    auto d = complex_pair(1);
    d.generators[0].m = 2;
    CHECK(has_category(validate_datum(d), "generator-type"));
  }
  SUBCASE("payload shape") {
    auto d = i1_r1();
    d.statuses[0][2]->cayley = {"L1"};
    CHECK(has_category(validate_datum(d), "payload"));
  }
  SUBCASE("wrong sign partner") {
    auto d = i22();
    // both Cayley targets claim the other one as the sign partner: fine;
    // point one of them at itself instead
    d.statuses[0][1]->cross = "L1'";
    CHECK_FALSE(validate_datum(d).ok());
  }
  SUBCASE("role pairing") {
    auto d = i12();
    d.statuses[0][1]->role = Role::Plus;
    CHECK_FALSE(validate_datum(d).ok());
  }
  SUBCASE("levi closure") {
    auto d = i1_r1();
    d.levi_subsets.push_back({{"g"}, {"L1", "L2"}});
    CHECK(has_category(validate_datum(d), "levi"));
  }
}

TEST_CASE("JSON round trip") {
  std::vector<ParamDatum> all;
  for (const auto& name : builtin_names()) all.push_back(builtin_datum(name));
  all.push_back(i12());
  all.push_back(hecke_case_datum(*make_folded("A3", "(1 3)")));
  for (const auto& d : all) {
    CAPTURE(d.name);
    const std::string text = datum_to_json(d);
    const ParamDatum back = datum_from_json(text);
    CHECK(back == d);
    CHECK(datum_to_json(back) == text);
  }
}

TEST_CASE("JSON format") {
  const std::string base = R"({"name": "x", "generators": [{"id": "g", "m": 1}],
    "parameters": [{"id": "L", "length": 0}, {"id": "L'", "length": 1, "orbit": "open"}],
    "statuses": [{"gen": "g", "param": "L", "kind": "1C+", "cross": "L'"},
                 {"gen": "g", "param": "L'", "kind": "1C−", "cross": "L"}]})";
  const ParamDatum d = datum_from_json(base);
  CHECK(d.parameters[1].orbit == std::optional<std::string>("open"));
  CHECK(d.status(0, 1).kind == Kind::C1Minus);
  CHECK(validate_datum(d).ok());
  CHECK(datum_to_json(d).find("\"1C-\"") != std::string::npos);

  CHECK_THROWS_AS(datum_from_json(R"({"name": "x"})"), DatumFormatError);
  CHECK_THROWS_AS(datum_from_json("{nonsense"), DatumFormatError);
  CHECK_THROWS_AS(datum_from_json(R"({"name": "x", "generators": [], "parameters": [], "statuses": [], "extra": 1})"),
                  DatumFormatError);
  CHECK_THROWS_AS(datum_from_json(R"({"name": "x", "generators": [{"id": "g", "m": 1}],
    "parameters": [{"id": "L", "length": 0}, {"id": "L", "length": 1}], "statuses": []})"),
                  DatumFormatError);
  CHECK_THROWS_AS(datum_from_json(R"({"name": "x", "generators": [{"id": "g", "m": 1}],
    "parameters": [{"id": "L", "length": 0}], "statuses": [{"gen": "g", "param": "L", "kind": "9Z+"}]})"),
                  DatumFormatError);
  CHECK_THROWS_AS(datum_from_json(R"({"name": "x", "generators": [{"id": "g", "m": 1}],
    "parameters": [{"id": "L", "length": 0, "colour": "red"}], "statuses": []})"),
                  DatumFormatError);
}

TEST_CASE("lookups") {
  const auto d = builtin_datum("a1a1-int");
  CHECK(d.require_param("L2'") == 3);
  CHECK_THROWS_AS(d.require_param("L3"), DanglingReference);
  CHECK_THROWS_AS(d.require_gen("x"), UnknownName);
  auto empty = d;
  empty.reset_statuses();
  CHECK_THROWS_AS(empty.status(0, 0), MissingStatus);
}
