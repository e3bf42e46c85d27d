#include <doctest.h>

#include "ncg/constructions.h"
#include "ncg/errors.h"
#include "ncg/io.h"

using namespace ncg;

TEST_CASE("instances round-trip") {
  for (const Fixture& f : {c5(Rational(3), "h5"), sum_lower_bound(2), cheap_network(),
                           max_nonlocal(NonLocalKind::Clique, 3)}) {
    const InstanceFile file = instance_of(f);
    const std::string text = serialize_instance(file);
    const InstanceFile back = parse_instance(text);
    CHECK(back == file);
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("minimal documents") {
  const InstanceFile f =
      parse_instance(R"({"n": 3, "arcs": [[0, 1], [2, 1]], "alpha": "3/2", "objective": "max"})");
  CHECK(f.graph == OwnershipGraph(3, {{0, 1}, {2, 1}}));
  CHECK(f.config == GameConfig(Rational(3, 2), Objective::Max));
  CHECK_FALSE(f.name);
  CHECK(f.expectations.empty());
  // Integer alphas may be given as numbers.
  CHECK(parse_instance(R"({"n": 2, "arcs": [], "alpha": 2, "objective": "sum"})").config.alpha() ==
        Rational(2));
}

TEST_CASE("broken documents") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"arcs": [], "alpha": "1", "objective": "sum"})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"n": 2, "arcs": [[0]], "alpha": "1", "objective": "sum"})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"n": 2, "arcs": [], "alpha": "1", "objective": "avg"})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"n": 2, "arcs": [[0, 1], [1, 0]], "alpha": "1", "objective": "sum"})"),
      InvalidGraph);
  CHECK_THROWS_AS(parse_instance(R"({"n": 2, "arcs": [], "alpha": "-1", "objective": "sum"})"),
                  DomainError);
}

TEST_CASE("expectation sidecars") {
  const Json doc = expectations_json(cheap_star(6, Rational(1, 100)));
  CHECK(doc["expected"]["ge"] == true);
  CHECK(doc["expected"]["ne"] == false);
  CHECK(doc["expected_ratio"] == "25/13");
  CHECK(doc["focus"] == 1);
  CHECK_FALSE(doc.contains("unverified_figure"));
  CHECK(expectations_json(h4_candidate())["unverified_figure"] == true);
}

TEST_CASE("reports carry exact fractions") {
  const Fixture f = c5(Rational(9, 2));
  const Json doc = to_json(check(f.graph, f.config(), Concept::GE));
  CHECK(doc["concept"] == "ge");
  CHECK(doc["holds"] == false);
  CHECK(doc["violations"][0]["move"]["kind"] == "delete");
  CHECK(doc["violations"][0]["improvement"] == "1/2");
}

TEST_CASE("facility location documents round-trip") {
  const Fixture f = sum_lower_bound(2);
  const Reduction r = reduce(f.graph, f.config(), 0);
  const FLInstance back = parse_fl_instance(to_json(r.instance).dump());
  CHECK(back == r.instance);
  CHECK_THROWS_AS(parse_fl_instance(R"({"facilities": 1})"), ParseError);
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(OwnershipGraph(2, {{1, 0}}), {"a", "b"});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1 -> 0") != std::string::npos);
  CHECK(dot.find("\"b\"") != std::string::npos);
}
