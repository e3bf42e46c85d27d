#include "ncg/graph.h"

#include <algorithm>
#include <queue>

#include "ncg/errors.h"

namespace ncg {

std::string to_string(Objective objective) {
  return objective == Objective::Sum ? "sum" : "max";
}

Objective parse_objective(std::string_view text) {
  if (text == "sum" || text == "SUM") {
    return Objective::Sum;
  }
  if (text == "max" || text == "MAX") {
    return Objective::Max;
  }
  throw ParseError("unknown objective '" + std::string(text) + "'");
}

GameConfig::GameConfig(Rational alpha, Objective objective)
  : _alpha(alpha), _objective(objective) {
  if (alpha <= 0) {
    throw DomainError("edge price must be positive, got " + to_string(alpha));
  }
}

OwnershipGraph::OwnershipGraph(int n) : OwnershipGraph(n, {}) {}

namespace {

int checked_size(int n) {
  if (n < 0) {
    throw InvalidGraph("negative vertex count");
  }
  return n;
}

} // namespace

OwnershipGraph::OwnershipGraph(int n, std::vector<Arc> arcs)
  : _n(checked_size(n)), _owned(_n), _incoming(_n), _neighbors(_n) {
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto [owner, target] = arcs[i];
    if (owner < 0 || owner >= n || target < 0 || target >= n) {
      throw InvalidGraph("arc (" + std::to_string(owner) + "," +
                         std::to_string(target) + ") references a vertex outside 0.." +
                         std::to_string(n - 1));
    }
    if (owner == target) {
      throw InvalidGraph("self-arc at vertex " + std::to_string(owner));
    }
    if (i > 0 && arcs[i - 1] == arcs[i]) {
      throw InvalidGraph("duplicate arc (" + std::to_string(owner) + "," +
                         std::to_string(target) + ")");
    }
    if (std::binary_search(arcs.begin(), arcs.end(), Arc{target, owner})) {
      throw InvalidGraph("antiparallel arcs between " + std::to_string(owner) +
                         " and " + std::to_string(target));
    }
    _owned[owner].push_back(target);
    _incoming[target].push_back(owner);
    _neighbors[owner].push_back(target);
    _neighbors[target].push_back(owner);
  }
  _arc_count = arcs.size();
  for (auto& list : _incoming) {
    std::sort(list.begin(), list.end());
  }
  for (auto& list : _neighbors) {
    std::sort(list.begin(), list.end());
  }
}

bool OwnershipGraph::owns(Vertex v, Vertex w) const {
  return std::binary_search(_owned[v].begin(), _owned[v].end(), w);
}

bool OwnershipGraph::adjacent(Vertex v, Vertex w) const {
  return std::binary_search(_neighbors[v].begin(), _neighbors[v].end(), w);
}

std::vector<Arc> OwnershipGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(_arc_count);
  for (Vertex v = 0; v < _n; ++v) {
    for (Vertex w : _owned[v]) {
      result.push_back({v, w});
    }
  }
  return result;
}

Strategy::Strategy(Vertex agent, std::vector<Vertex> targets)
  : agent(agent), targets(std::move(targets)) {
  std::sort(this->targets.begin(), this->targets.end());
  this->targets.erase(std::unique(this->targets.begin(), this->targets.end()),
                      this->targets.end());
}

Strategy strategy_of(const OwnershipGraph& g, Vertex v) {
  const auto owned = g.owned(v);
  return Strategy(v, {owned.begin(), owned.end()});
}

void validate_strategy(const OwnershipGraph& g, const Strategy& s) {
  if (s.agent < 0 || s.agent >= g.size()) {
    throw InvalidStrategy("agent " + std::to_string(s.agent) + " out of range");
  }
  for (Vertex w : s.targets) {
    if (w < 0 || w >= g.size()) {
      throw InvalidStrategy("target " + std::to_string(w) + " out of range");
    }
    if (w == s.agent) {
      throw InvalidStrategy("agent " + std::to_string(w) + " targets itself");
    }
    if (g.owns(w, s.agent)) {
      throw InvalidStrategy("vertex " + std::to_string(w) +
                            " already owns an edge toward agent " +
                            std::to_string(s.agent) + " (multi-edge)");
    }
  }
}

std::string to_string(MoveKind kind) {
  switch (kind) {
  case MoveKind::Buy:
    return "buy";
  case MoveKind::Delete:
    return "delete";
  case MoveKind::Swap:
    return "swap";
  }
  return "?";
}

std::string to_string(const Move& m) {
  if (m.kind == MoveKind::Swap) {
    return "swap(" + std::to_string(m.target) + "->" + std::to_string(m.replacement) +
           ")";
  }
  return to_string(m.kind) + "(" + std::to_string(m.target) + ")";
}

std::vector<int> distances_from(const OwnershipGraph& g, Vertex v) {
  std::vector<int> dist(g.size(), kUnreachable);
  std::queue<Vertex> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

ExtRational distance_cost(const OwnershipGraph& g, Vertex v, Objective objective) {
  const auto dist = distances_from(g, v);
  std::int64_t total = 0;
  for (int d : dist) {
    if (d == kUnreachable) {
      return ExtRational::infinity();
    }
    total = objective == Objective::Sum ? total + d : std::max<std::int64_t>(total, d);
  }
  return ExtRational(total);
}

Cost agent_cost(const OwnershipGraph& g, const GameConfig& cfg, Vertex v) {
  return Cost{cfg.alpha() * static_cast<std::int64_t>(g.owned(v).size()),
              distance_cost(g, v, cfg.objective())};
}

ExtRational social_cost(const OwnershipGraph& g, const GameConfig& cfg) {
  ExtRational total;
  for (Vertex v = 0; v < g.size(); ++v) {
    total += agent_cost(g, cfg, v).total();
  }
  return total;
}

namespace {

void check_vertex(const OwnershipGraph& g, Vertex v, const char* role) {
  if (v < 0 || v >= g.size()) {
    throw InvalidMove(std::string(role) + " " + std::to_string(v) + " out of range");
  }
}

// Arcs of g with v's owned arcs replaced by `targets`.
std::vector<Arc> arcs_with_strategy(const OwnershipGraph& g, Vertex v,
                                    std::span<const Vertex> targets) {
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (a.owner != v) {
      arcs.push_back(a);
    }
  }
  for (Vertex w : targets) {
    arcs.push_back({v, w});
  }
  return arcs;
}

} // namespace

OwnershipGraph apply_move(const OwnershipGraph& g, Vertex v, const Move& m) {
  check_vertex(g, v, "agent");
  check_vertex(g, m.target, "target");
  auto valid_new_target = [&](Vertex w) {
    check_vertex(g, w, "target");
    if (w == v) {
      throw InvalidMove("agent " + std::to_string(v) + " cannot buy a self-loop");
    }
    if (g.adjacent(v, w)) {
      throw InvalidMove("edge {" + std::to_string(v) + "," + std::to_string(w) +
                        "} already exists (multi-edge)");
    }
  };
  std::vector<Vertex> targets(g.owned(v).begin(), g.owned(v).end());
  switch (m.kind) {
  case MoveKind::Buy:
    valid_new_target(m.target);
    targets.push_back(m.target);
    break;
  case MoveKind::Delete:
  case MoveKind::Swap:
    if (!g.owns(v, m.target)) {
      throw InvalidMove("agent " + std::to_string(v) + " does not own an arc to " +
                        std::to_string(m.target));
    }
    std::erase(targets, m.target);
    if (m.kind == MoveKind::Swap) {
      valid_new_target(m.replacement);
      targets.push_back(m.replacement);
    }
    break;
  }
  return OwnershipGraph(g.size(), arcs_with_strategy(g, v, targets));
}

OwnershipGraph apply_strategy(const OwnershipGraph& g, const Strategy& s) {
  validate_strategy(g, s);
  return OwnershipGraph(g.size(), arcs_with_strategy(g, s.agent, s.targets));
}

OwnershipGraph apply_incident_swap(const OwnershipGraph& g, Vertex v, Vertex from,
                                   Vertex to) {
  check_vertex(g, v, "agent");
  check_vertex(g, from, "target");
  check_vertex(g, to, "target");
  if (!g.adjacent(v, from)) {
    throw InvalidMove("no edge {" + std::to_string(v) + "," + std::to_string(from) +
                      "} to swap");
  }
  if (to == v || g.adjacent(v, to)) {
    throw InvalidMove("swap target " + std::to_string(to) + " is not a non-neighbor");
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if ((a.owner == v && a.target == from) || (a.owner == from && a.target == v)) {
      continue;
    }
    arcs.push_back(a);
  }
  arcs.push_back({v, to});
  return OwnershipGraph(g.size(), std::move(arcs));
}

OwnershipGraph relabel(const OwnershipGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.size()) {
    throw InvalidGraph("permutation size does not match vertex count");
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    arcs.push_back({perm[a.owner], perm[a.target]});
  }
  return OwnershipGraph(g.size(), std::move(arcs));
}

bool is_connected(const OwnershipGraph& g) {
  if (g.size() == 0) {
    return true;
  }
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

bool is_tree(const OwnershipGraph& g) {
  return g.size() > 0 && g.arc_count() + 1 == static_cast<std::size_t>(g.size()) &&
         is_connected(g);
}

int eccentricity(const OwnershipGraph& g, Vertex v) {
  const auto dist = distances_from(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

int diameter(const OwnershipGraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    best = std::max(best, eccentricity(g, v));
  }
  return best;
}

} // namespace ncg
