#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ncg/constructions.h"
#include "ncg/dynamics.h"
#include "ncg/equilibria.h"
#include "ncg/facility_location.h"
#include "ncg/graph.h"
#include "ncg/response.h"

namespace ncg {

using Json = nlohmann::ordered_json;

// An instance document: the game plus optional metadata.
struct InstanceFile {
  OwnershipGraph graph;
  GameConfig config{Rational(1), Objective::Sum};
  std::optional<std::string> name;
  std::vector<std::string> labels;
  std::vector<Expectation> expectations;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile instance_of(const Fixture& f);

// { "n", "arcs", "alpha", "objective" } plus "name", "labels" and "expected"
// when present. Arcs are written sorted by (owner, target).
Json to_json(const InstanceFile& file);

// Throws ParseError for malformed documents and InvalidGraph / DomainError
// for documents describing an invalid game.
InstanceFile instance_from_json(const Json& doc);

InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& file);

// Sidecar listing what a generated construction is expected to satisfy.
Json expectations_json(const Fixture& f);

Json to_json(const Move& m);
Json to_json(const Strategy& s);
Json to_json(const Cost& c);
Json to_json(const Violation& v);
Json to_json(const EquilibriumReport& report);
Json to_json(const MultiSwap& swap);
Json to_json(const MaxTreeVerdict& verdict);
Json to_json(const RatioReport& report);
Json to_json(const FLInstance& inst);
Json to_json(const FLSolution& sol);
Json to_json(const Trajectory& t);

FLInstance fl_instance_from_json(const Json& doc);
FLInstance parse_fl_instance(std::string_view text);

// Graphviz digraph with arcs drawn from owner to target.
std::string to_dot(const OwnershipGraph& g, const std::vector<std::string>& labels = {});

} // namespace ncg
