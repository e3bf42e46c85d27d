#include "ncg/equilibria.h"

#include <algorithm>

#include "agent_view.h"
#include "ncg/errors.h"
#include "ncg/tree.h"

namespace ncg {

std::string to_string(Concept c) {
  switch (c) {
  case Concept::GE:
    return "ge";
  case Concept::NE:
    return "ne";
  case Concept::SE:
    return "se";
  case Concept::ASE:
    return "ase";
  }
  return "?";
}

Concept parse_concept(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "ge") {
    return Concept::GE;
  }
  if (lower == "ne") {
    return Concept::NE;
  }
  if (lower == "se") {
    return Concept::SE;
  }
  if (lower == "ase") {
    return Concept::ASE;
  }
  throw ParseError("unknown solution concept '" + std::string(text) + "'");
}

std::string to_string(MaxTreeVerdictKind kind) {
  switch (kind) {
  case MaxTreeVerdictKind::NE:
    return "ne";
  case MaxTreeVerdictKind::CheapStar:
    return "cheap_star";
  case MaxTreeVerdictKind::BadlyConnectedTree:
    return "badly_connected_tree";
  case MaxTreeVerdictKind::NotGE:
    return "not_ge";
  }
  return "?";
}

namespace {

Cost distance_only(const ExtRational& dist) { return Cost{Rational(0), dist}; }

// Best strictly improving swap of one incident edge under the distance-only
// cost. `own_only` restricts swaps to arcs the agent bought.
std::optional<Violation> best_incident_swap(const OwnershipGraph& g, Objective objective,
                                            Vertex v, bool own_only) {
  const detail::AgentView view(g, v, objective);
  const auto neighbors = g.neighbors(v);
  const ExtRational current = view.distance_cost(neighbors);
  std::optional<Violation> best;
  for (Vertex a : neighbors) {
    if (own_only && !g.owns(v, a)) {
      continue;
    }
    std::vector<int> base(g.size(), kUnreachable);
    for (Vertex x : neighbors) {
      if (x != a) {
        view.merge(base, x);
      }
    }
    for (Vertex b = 0; b < g.size(); ++b) {
      if (b == v || g.adjacent(v, b)) {
        continue;
      }
      auto nearest = base;
      view.merge(nearest, b);
      const ExtRational after = view.cost_from_nearest(nearest);
      if (after < current && (!best || after < best->after.total())) {
        best = Violation{v, Move::swap(a, b), distance_only(current), distance_only(after)};
      }
    }
  }
  return best;
}

std::optional<Violation> agent_violation(const OwnershipGraph& g, const GameConfig& cfg,
                                         Concept c, Vertex v,
                                         const SearchOptions& options) {
  switch (c) {
  case Concept::GE:
    if (auto move = best_greedy_move(g, cfg, v)) {
      return Violation{v, move->move, agent_cost(g, cfg, v), move->new_cost};
    }
    return std::nullopt;
  case Concept::NE: {
    const Cost current = agent_cost(g, cfg, v);
    BestResponse best = best_response(g, cfg, v, options);
    if (best.cost.total() < current.total()) {
      return Violation{v, std::move(best.strategy), current, best.cost};
    }
    return std::nullopt;
  }
  case Concept::SE:
    return best_incident_swap(g, cfg.objective(), v, false);
  case Concept::ASE:
    return best_incident_swap(g, cfg.objective(), v, true);
  }
  return std::nullopt;
}

void require_tree(const OwnershipGraph& t) {
  if (!is_tree(t)) {
    throw NotATree();
  }
}

std::optional<Violation> first_greedy_violation(const OwnershipGraph& g,
                                                const GameConfig& cfg) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (auto violation = agent_violation(g, cfg, Concept::GE, v, {})) {
      return violation;
    }
  }
  return std::nullopt;
}

std::optional<MultiSwap> find_multi_swap(const OwnershipGraph& t, const GameConfig& cfg) {
  for (Vertex u = 0; u < t.size(); ++u) {
    const TreeAnalysis analysis = analyze_tree(t, u);
    if (analysis.max_dist < 2) {
      continue;
    }
    bool rewirable = true;
    int new_dist = 0;
    std::vector<std::pair<Vertex, Vertex>> rewires;
    for (const Subtree& sub : analysis.subtrees) {
      const bool far = sub.holds_far_vertex;
      if (far && !sub.owned_by_agent) {
        rewirable = false;
        break;
      }
      if (far) {
        new_dist = std::max(new_dist, 1 + sub.radius);
        if (sub.depth_from_attachment > sub.radius) {
          rewires.emplace_back(sub.attachment, sub.centers.front());
        }
      } else {
        new_dist = std::max(new_dist, 1 + sub.depth_from_attachment);
      }
    }
    if (!rewirable || new_dist >= analysis.max_dist) {
      continue;
    }
    std::vector<Vertex> targets(t.owned(u).begin(), t.owned(u).end());
    for (const auto& [from, to] : rewires) {
      std::replace(targets.begin(), targets.end(), from, to);
    }
    MultiSwap swap{u, std::move(rewires), Strategy(u, std::move(targets)),
                   agent_cost(t, cfg, u), {}};
    swap.after = agent_cost(apply_strategy(t, swap.strategy), cfg, u);
    return swap;
  }
  return std::nullopt;
}

} // namespace

EquilibriumReport check(const OwnershipGraph& g, const GameConfig& cfg, Concept c,
                        const SearchOptions& options) {
  EquilibriumReport report;
  report.solution_concept = c;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (auto violation = agent_violation(g, cfg, c, v, options)) {
      report.violations.push_back(std::move(*violation));
    }
  }
  report.holds = report.violations.empty();
  return report;
}

OwnershipGraph apply_violation(const OwnershipGraph& g, Concept c,
                               const Violation& violation) {
  if (const auto* strategy = std::get_if<Strategy>(&violation.change)) {
    return apply_strategy(g, *strategy);
  }
  const Move& move = std::get<Move>(violation.change);
  if (c == Concept::SE || c == Concept::ASE) {
    if (move.kind != MoveKind::Swap) {
      throw InvalidMove("swap equilibria only admit swaps");
    }
    if (c == Concept::ASE && !g.owns(violation.agent, move.target)) {
      throw InvalidMove("asymmetric swaps must use an own edge");
    }
    return apply_incident_swap(g, violation.agent, move.target, move.replacement);
  }
  return apply_move(g, violation.agent, move);
}

bool revalidate(const OwnershipGraph& g, const GameConfig& cfg, Concept c,
                const Violation& violation) {
  const OwnershipGraph after = apply_violation(g, c, violation);
  const Vertex v = violation.agent;
  Cost before;
  Cost now;
  if (c == Concept::SE || c == Concept::ASE) {
    before = distance_only(distance_cost(g, v, cfg.objective()));
    now = distance_only(distance_cost(after, v, cfg.objective()));
  } else {
    before = agent_cost(g, cfg, v);
    now = agent_cost(after, cfg, v);
  }
  return now.total() < before.total() && before == violation.before &&
         now == violation.after;
}

SumTreeCertificate sum_tree_certify(const OwnershipGraph& t, const GameConfig& cfg) {
  if (cfg.objective() != Objective::Sum) {
    throw DomainError("sum_tree_certify needs the Sum objective");
  }
  require_tree(t);
  SumTreeCertificate certificate;
  certificate.violation = first_greedy_violation(t, cfg);
  certificate.ge_and_ne = !certificate.violation.has_value();
  return certificate;
}

bool detect_cheap_star(const OwnershipGraph& t, const GameConfig& cfg) {
  require_tree(t);
  const int n = t.size();
  return n >= 4 && diameter(t) <= 2 && cfg.alpha() * (n - 2) < 1;
}

std::optional<MultiSwap> detect_badly_connected(const OwnershipGraph& t,
                                                const GameConfig& cfg) {
  if (cfg.objective() != Objective::Max) {
    throw DomainError("detect_badly_connected needs the Max objective");
  }
  require_tree(t);
  if (first_greedy_violation(t, cfg)) {
    throw NotGreedyEquilibrium();
  }
  return find_multi_swap(t, cfg);
}

MaxTreeVerdict max_tree_is_ne(const OwnershipGraph& t, const GameConfig& cfg) {
  if (cfg.objective() != Objective::Max) {
    throw DomainError("max_tree_is_ne needs the Max objective");
  }
  require_tree(t);
  MaxTreeVerdict verdict;
  if (auto violation = first_greedy_violation(t, cfg)) {
    verdict.kind = MaxTreeVerdictKind::NotGE;
    verdict.violation = std::move(violation);
    return verdict;
  }
  if (t.size() <= 3) {
    return verdict;
  }
  if (detect_cheap_star(t, cfg)) {
    verdict.kind = MaxTreeVerdictKind::CheapStar;
    for (Vertex leaf = 0; leaf < t.size(); ++leaf) {
      if (t.degree(leaf) != 1) {
        continue;
      }
      std::vector<Vertex> targets(t.owned(leaf).begin(), t.owned(leaf).end());
      for (Vertex w = 0; w < t.size(); ++w) {
        if (w != leaf && !t.adjacent(leaf, w)) {
          targets.push_back(w);
        }
      }
      Strategy buy_all(leaf, std::move(targets));
      verdict.multi_buy = Violation{leaf, buy_all, agent_cost(t, cfg, leaf),
                                    agent_cost(apply_strategy(t, buy_all), cfg, leaf)};
      break;
    }
    return verdict;
  }
  if (diameter(t) >= 3) {
    if (auto swap = find_multi_swap(t, cfg)) {
      verdict.kind = MaxTreeVerdictKind::BadlyConnectedTree;
      verdict.multi_swap = std::move(swap);
    }
  }
  return verdict;
}

} // namespace ncg
