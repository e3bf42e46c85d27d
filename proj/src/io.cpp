#include "ncg/io.h"

#include <sstream>

#include "ncg/errors.h"

namespace ncg {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

int require_int(const Json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

Rational rational_field(const Json& value, const char* what) {
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (!value.is_string()) {
    throw ParseError(std::string(what) + " must be a fraction string");
  }
  return parse_rational(value.get<std::string>());
}

ExtRational ext_field(const Json& value, const char* what) {
  if (value.is_string() && value.get<std::string>() == "inf") {
    return ExtRational::infinity();
  }
  return rational_field(value, what);
}

template <typename F>
auto guarded(F&& parse) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

} // namespace

InstanceFile instance_of(const Fixture& f) {
  return InstanceFile{f.graph, f.config(), f.name, f.labels, f.expectations};
}

Json to_json(const InstanceFile& file) {
  Json doc;
  doc["n"] = file.graph.size();
  Json arcs = Json::array();
  for (const Arc& a : file.graph.arcs()) {
    arcs.push_back({a.owner, a.target});
  }
  doc["arcs"] = std::move(arcs);
  doc["alpha"] = to_string(file.config.alpha());
  doc["objective"] = to_string(file.config.objective());
  if (file.name) {
    doc["name"] = *file.name;
  }
  if (!file.labels.empty()) {
    doc["labels"] = file.labels;
  }
  if (!file.expectations.empty()) {
    Json expected = Json::object();
    for (const Expectation& e : file.expectations) {
      expected[to_string(e.solution_concept)] = e.holds;
    }
    doc["expected"] = std::move(expected);
  }
  return doc;
}

InstanceFile instance_from_json(const Json& doc) {
  return guarded([&] {
    const int n = require_int(require(doc, "n"), "n");
    if (n < 0) {
      throw ParseError("n must be non-negative");
    }
    const Json& arcs_doc = require(doc, "arcs");
    if (!arcs_doc.is_array()) {
      throw ParseError("arcs must be an array");
    }
    std::vector<Arc> arcs;
    for (const Json& a : arcs_doc) {
      if (!a.is_array() || a.size() != 2) {
        throw ParseError("every arc must be an [owner, target] pair");
      }
      arcs.push_back({require_int(a[0], "arc owner"), require_int(a[1], "arc target")});
    }
    const Json& objective = require(doc, "objective");
    if (!objective.is_string()) {
      throw ParseError("objective must be a string");
    }
    InstanceFile file{OwnershipGraph(n, std::move(arcs)),
                      GameConfig(rational_field(require(doc, "alpha"), "alpha"),
                                 parse_objective(objective.get<std::string>())),
                      std::nullopt,
                      {},
                      {}};
    if (doc.contains("name")) {
      file.name = doc.at("name").get<std::string>();
    }
    if (doc.contains("labels")) {
      file.labels = doc.at("labels").get<std::vector<std::string>>();
      if (static_cast<int>(file.labels.size()) != n) {
        throw ParseError("labels must name every vertex");
      }
    }
    if (doc.contains("expected")) {
      for (const auto& [key, value] : doc.at("expected").items()) {
        file.expectations.push_back({parse_concept(key), value.get<bool>()});
      }
    }
    return file;
  });
}

InstanceFile parse_instance(std::string_view text) {
  return guarded([&] { return instance_from_json(Json::parse(text)); });
}

std::string serialize_instance(const InstanceFile& file) { return to_json(file).dump(2) + "\n"; }

Json expectations_json(const Fixture& f) {
  Json doc;
  doc["name"] = f.name;
  Json expected = Json::object();
  for (const Expectation& e : f.expectations) {
    expected[to_string(e.solution_concept)] = e.holds;
  }
  doc["expected"] = std::move(expected);
  if (f.focus) {
    doc["focus"] = *f.focus;
  }
  if (f.expected_ratio) {
    doc["expected_ratio"] = to_string(*f.expected_ratio);
  }
  if (f.unverified_figure) {
    doc["unverified_figure"] = true;
  }
  return doc;
}

Json to_json(const Move& m) {
  Json doc;
  doc["kind"] = to_string(m.kind);
  doc["target"] = m.target;
  if (m.kind == MoveKind::Swap) {
    doc["replacement"] = m.replacement;
  }
  return doc;
}

Json to_json(const Strategy& s) { return Json{{"agent", s.agent}, {"targets", s.targets}}; }

Json to_json(const Cost& c) {
  return Json{{"edge", to_string(c.edge_part)},
              {"distance", to_string(c.dist_part)},
              {"total", to_string(c.total())}};
}

Json to_json(const Violation& v) {
  Json doc;
  doc["agent"] = v.agent;
  if (const auto* move = std::get_if<Move>(&v.change)) {
    doc["move"] = to_json(*move);
  } else {
    doc["strategy"] = std::get<Strategy>(v.change).targets;
  }
  doc["before"] = to_json(v.before);
  doc["after"] = to_json(v.after);
  doc["improvement"] = to_string(v.improvement());
  return doc;
}

Json to_json(const EquilibriumReport& report) {
  Json doc;
  doc["concept"] = to_string(report.solution_concept);
  doc["holds"] = report.holds;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(to_json(v));
  }
  doc["violations"] = std::move(violations);
  return doc;
}

Json to_json(const MultiSwap& swap) {
  Json rewires = Json::array();
  for (const auto& [from, to] : swap.rewires) {
    rewires.push_back({from, to});
  }
  return Json{{"agent", swap.agent},
              {"rewires", std::move(rewires)},
              {"strategy", swap.strategy.targets},
              {"before", to_json(swap.before)},
              {"after", to_json(swap.after)}};
}

Json to_json(const MaxTreeVerdict& verdict) {
  Json doc;
  doc["verdict"] = to_string(verdict.kind);
  if (verdict.violation) {
    doc["violation"] = to_json(*verdict.violation);
  }
  if (verdict.multi_buy) {
    doc["multi_buy"] = to_json(*verdict.multi_buy);
  }
  if (verdict.multi_swap) {
    doc["multi_swap"] = to_json(*verdict.multi_swap);
  }
  return doc;
}

Json to_json(const RatioReport& report) {
  Json agents = Json::array();
  for (const AgentRatio& a : report.agents) {
    agents.push_back(Json{{"agent", a.agent},
                          {"current", to_json(a.current)},
                          {"best_strategy", a.best.strategy.targets},
                          {"best", to_json(a.best.cost)},
                          {"ratio", to_string(a.ratio)}});
  }
  return Json{{"beta", to_string(report.beta)},
              {"witness", report.witness},
              {"agents", std::move(agents)}};
}

Json to_json(const FLInstance& inst) {
  Json opening = Json::array();
  for (const Rational& r : inst.opening) {
    opening.push_back(to_string(r));
  }
  Json dist = Json::array();
  for (const auto& row : inst.dist) {
    Json cells = Json::array();
    for (const ExtRational& d : row) {
      cells.push_back(to_string(d));
    }
    dist.push_back(std::move(cells));
  }
  return Json{{"facilities", inst.facilities},
              {"clients", inst.clients},
              {"opening", std::move(opening)},
              {"dist", std::move(dist)},
              {"objective", to_string(inst.objective)}};
}

Json to_json(const FLSolution& sol) {
  return Json{{"open", sol.open}, {"assignment", sol.assignment}, {"cost", to_string(sol.cost)}};
}

Json to_json(const Trajectory& t) {
  Json steps = Json::array();
  for (const Step& s : t.steps) {
    steps.push_back(Json{{"round", s.round},
                         {"agent", s.agent},
                         {"move", to_json(s.move)},
                         {"before", to_json(s.before)},
                         {"after", to_json(s.after)},
                         {"social_cost", to_string(s.social_cost)}});
  }
  Json terminal = Json::array();
  for (const Arc& a : t.terminal.arcs()) {
    terminal.push_back({a.owner, a.target});
  }
  return Json{{"converged", t.converged},
              {"rounds", t.rounds},
              {"steps", std::move(steps)},
              {"terminal_arcs", std::move(terminal)}};
}

FLInstance fl_instance_from_json(const Json& doc) {
  return guarded([&] {
    FLInstance inst;
    inst.facilities = require_int(require(doc, "facilities"), "facilities");
    inst.clients = require_int(require(doc, "clients"), "clients");
    for (const Json& c : require(doc, "opening")) {
      inst.opening.push_back(rational_field(c, "opening cost"));
    }
    for (const Json& row : require(doc, "dist")) {
      if (!row.is_array()) {
        throw ParseError("dist must be a matrix");
      }
      std::vector<ExtRational> cells;
      for (const Json& cell : row) {
        cells.push_back(ext_field(cell, "distance"));
      }
      inst.dist.push_back(std::move(cells));
    }
    inst.objective = parse_fl_objective(require(doc, "objective").get<std::string>());
    inst.validate();
    return inst;
  });
}

FLInstance parse_fl_instance(std::string_view text) {
  return guarded([&] { return fl_instance_from_json(Json::parse(text)); });
}

std::string to_dot(const OwnershipGraph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph ncg {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << "  " << v;
    if (static_cast<int>(labels.size()) == g.size()) {
      out << " [label=\"" << labels[v] << "\"]";
    }
    out << ";\n";
  }
  for (const Arc& a : g.arcs()) {
    out << "  " << a.owner << " -> " << a.target << ";\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace ncg
