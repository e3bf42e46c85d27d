#include "ncg/facility_location.h"

#include <algorithm>
#include <numeric>

#include "ncg/errors.h"

namespace ncg {

std::string to_string(FLObjective objective) {
  return objective == FLObjective::Sum ? "sum" : "minmax";
}

FLObjective parse_fl_objective(std::string_view text) {
  if (text == "sum") {
    return FLObjective::Sum;
  }
  if (text == "minmax") {
    return FLObjective::MinMax;
  }
  throw ParseError("unknown facility location objective '" + std::string(text) + "'");
}

void FLInstance::validate() const {
  if (facilities < 0 || clients < 0) {
    throw DomainError("negative facility or client count");
  }
  if (static_cast<int>(opening.size()) != facilities ||
      static_cast<int>(dist.size()) != facilities) {
    throw DomainError("opening costs and distance rows must match the facility count");
  }
  for (int f = 0; f < facilities; ++f) {
    if (opening[f] < 0) {
      throw DomainError("negative opening cost");
    }
    if (static_cast<int>(dist[f].size()) != clients) {
      throw DomainError("distance rows must match the client count");
    }
    for (const ExtRational& d : dist[f]) {
      if (d < ExtRational(0)) {
        throw DomainError("negative distance");
      }
    }
  }
}

bool is_metric(const FLInstance& inst) {
  const auto& d = inst.dist;
  for (int f = 0; f < inst.facilities; ++f) {
    for (int c = 0; c < inst.clients; ++c) {
      if (d[f][c].is_infinite()) {
        continue;
      }
      for (int g = 0; g < inst.facilities; ++g) {
        for (int e = 0; e < inst.clients; ++e) {
          if (d[f][e] + d[g][e] + d[g][c] < d[f][c]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

void check_open(const FLInstance& inst, std::span<const int> open) {
  if (open.empty()) {
    throw DomainError("a solution needs at least one open facility");
  }
  for (int f : open) {
    if (f < 0 || f >= inst.facilities) {
      throw DomainError("facility " + std::to_string(f) + " out of range");
    }
  }
}

ExtRational service_cost(const FLInstance& inst, std::span<const ExtRational> nearest) {
  ExtRational total(0);
  for (const ExtRational& d : nearest) {
    if (inst.objective == FLObjective::Sum) {
      total += d;
    } else {
      total = std::max(total, d);
    }
  }
  return total;
}

// Cost of an open set given per-client nearest distances.
ExtRational cost_of(const FLInstance& inst, std::span<const int> open,
                    std::span<const ExtRational> nearest) {
  Rational opening(0);
  for (int f : open) {
    opening += inst.opening[f];
  }
  return ExtRational(opening) + service_cost(inst, nearest);
}

std::vector<ExtRational> nearest_of(const FLInstance& inst, std::span<const int> open) {
  std::vector<ExtRational> nearest(inst.clients, ExtRational::infinity());
  for (int f : open) {
    for (int c = 0; c < inst.clients; ++c) {
      nearest[c] = std::min(nearest[c], inst.dist[f][c]);
    }
  }
  return nearest;
}

std::vector<int> sorted_unique(std::vector<int> open) {
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());
  return open;
}

} // namespace

ExtRational umfl_cost(const FLInstance& inst, std::span<const int> open) {
  check_open(inst, open);
  const auto unique = sorted_unique({open.begin(), open.end()});
  return cost_of(inst, unique, nearest_of(inst, unique));
}

FLSolution make_solution(const FLInstance& inst, std::vector<int> open) {
  check_open(inst, open);
  FLSolution sol;
  sol.open = sorted_unique(std::move(open));
  sol.assignment.assign(inst.clients, -1);
  for (int c = 0; c < inst.clients; ++c) {
    for (int f : sol.open) {
      if (sol.assignment[c] < 0 || inst.dist[f][c] < inst.dist[sol.assignment[c]][c]) {
        sol.assignment[c] = f;
      }
    }
  }
  sol.cost = umfl_cost(inst, sol.open);
  return sol;
}

FLSolution initial_solution(const FLInstance& inst) {
  std::vector<int> open;
  for (int f = 0; f < inst.facilities; ++f) {
    if (inst.is_zero_cost(f)) {
      open.push_back(f);
    }
  }
  std::optional<int> best;
  ExtRational best_cost = ExtRational::infinity();
  for (int f = 0; f < inst.facilities; ++f) {
    if (inst.is_zero_cost(f)) {
      continue;
    }
    auto trial = open;
    trial.push_back(f);
    const ExtRational cost = umfl_cost(inst, trial);
    if (!best || cost < best_cost) {
      best = f;
      best_cost = cost;
    }
  }
  if (best) {
    open.push_back(*best);
  }
  if (best_cost.is_infinite()) {
    // No single paid facility reaches every client; local search could not
    // leave an infinite start, so begin from everything open instead.
    open.resize(inst.facilities);
    std::iota(open.begin(), open.end(), 0);
  }
  return make_solution(inst, std::move(open));
}

std::string to_string(const FacilityMove& move) {
  switch (move.kind) {
  case FacilityMoveKind::Open:
    return "open " + std::to_string(move.facility);
  case FacilityMoveKind::Close:
    return "close " + std::to_string(move.facility);
  case FacilityMoveKind::Swap:
    return "swap " + std::to_string(move.facility) + " -> " + std::to_string(move.replacement);
  }
  return "?";
}

std::vector<int> apply_facility_move(std::span<const int> open, const FacilityMove& move) {
  std::vector<int> next(open.begin(), open.end());
  switch (move.kind) {
  case FacilityMoveKind::Open:
    next.push_back(move.facility);
    break;
  case FacilityMoveKind::Close:
    std::erase(next, move.facility);
    break;
  case FacilityMoveKind::Swap:
    std::erase(next, move.facility);
    next.push_back(move.replacement);
    break;
  }
  return sorted_unique(std::move(next));
}

std::optional<FacilityMove> first_improving_move(const FLInstance& inst,
                                                 std::span<const int> open) {
  const auto current_open = sorted_unique({open.begin(), open.end()});
  const ExtRational current = umfl_cost(inst, current_open);
  std::vector<bool> is_open(inst.facilities, false);
  for (int f : current_open) {
    is_open[f] = true;
  }
  auto improves = [&](const FacilityMove& move) {
    const auto next = apply_facility_move(current_open, move);
    return !next.empty() && umfl_cost(inst, next) < current;
  };
  for (int f = 0; f < inst.facilities; ++f) {
    if (!is_open[f] && improves({FacilityMoveKind::Open, f, -1})) {
      return FacilityMove{FacilityMoveKind::Open, f, -1};
    }
  }
  for (int f : current_open) {
    if (!inst.is_zero_cost(f) && improves({FacilityMoveKind::Close, f, -1})) {
      return FacilityMove{FacilityMoveKind::Close, f, -1};
    }
  }
  for (int f : current_open) {
    if (inst.is_zero_cost(f)) {
      continue;
    }
    for (int g = 0; g < inst.facilities; ++g) {
      if (!is_open[g] && improves({FacilityMoveKind::Swap, f, g})) {
        return FacilityMove{FacilityMoveKind::Swap, f, g};
      }
    }
  }
  return std::nullopt;
}

FLSolution local_search(const FLInstance& inst, const FLSolution& init) {
  std::vector<int> open = init.open;
  while (auto move = first_improving_move(inst, open)) {
    open = apply_facility_move(open, *move);
  }
  return make_solution(inst, std::move(open));
}

FLSolution brute_force_optimum(const FLInstance& inst) {
  if (inst.facilities > 20) {
    throw InstanceTooLarge(std::to_string(inst.facilities) +
                           " facilities, brute force handles at most 20");
  }
  std::vector<int> fixed;
  std::vector<int> paid;
  for (int f = 0; f < inst.facilities; ++f) {
    (inst.is_zero_cost(f) ? fixed : paid).push_back(f);
  }
  const auto base = nearest_of(inst, fixed);

  std::optional<std::vector<int>> best;
  ExtRational best_cost = ExtRational::infinity();
  std::vector<int> chosen = fixed;
  auto consider = [&](std::span<const ExtRational> nearest) {
    if (chosen.empty()) {
      return;
    }
    const ExtRational cost = cost_of(inst, chosen, nearest);
    auto sorted = sorted_unique(chosen);
    const bool better =
        !best || cost < best_cost ||
        (cost == best_cost && (sorted.size() < best->size() ||
                               (sorted.size() == best->size() && sorted < *best)));
    if (better) {
      best = std::move(sorted);
      best_cost = cost;
    }
  };
  // Include/exclude each paid facility in turn, carrying nearest distances.
  auto recurse = [&](auto&& self, std::size_t i, const std::vector<ExtRational>& nearest) -> void {
    if (i == paid.size()) {
      consider(nearest);
      return;
    }
    self(self, i + 1, nearest);
    auto with = nearest;
    for (int c = 0; c < inst.clients; ++c) {
      with[c] = std::min(with[c], inst.dist[paid[i]][c]);
    }
    chosen.push_back(paid[i]);
    self(self, i + 1, with);
    chosen.pop_back();
  };
  recurse(recurse, 0, base);
  if (!best) {
    throw DomainError("instance has no facilities");
  }
  return make_solution(inst, std::move(*best));
}

int ReductionMap::index_of(Vertex v) const {
  const auto it = std::find(vertex_of.begin(), vertex_of.end(), v);
  if (it == vertex_of.end()) {
    throw InvalidStrategy("vertex " + std::to_string(v) + " has no facility");
  }
  return static_cast<int>(it - vertex_of.begin());
}

std::vector<int> ReductionMap::open_set(const Strategy& s) const {
  std::vector<int> open = zero_set;
  for (Vertex t : s.targets) {
    open.push_back(index_of(t));
  }
  return sorted_unique(std::move(open));
}

Strategy ReductionMap::strategy(std::span<const int> open) const {
  std::vector<Vertex> targets;
  for (int f : open) {
    if (!std::binary_search(zero_set.begin(), zero_set.end(), f)) {
      targets.push_back(vertex_of.at(f));
    }
  }
  return Strategy(agent, std::move(targets));
}

Reduction reduce(const OwnershipGraph& g, const GameConfig& cfg, Vertex agent) {
  if (agent < 0 || agent >= g.size()) {
    throw InvalidGraph("agent " + std::to_string(agent) + " out of range");
  }
  const OwnershipGraph reduced = apply_strategy(g, Strategy(agent, {}));
  Reduction r;
  r.map.agent = agent;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v != agent) {
      r.map.vertex_of.push_back(v);
    }
  }
  const int m = static_cast<int>(r.map.vertex_of.size());
  FLInstance& inst = r.instance;
  inst.facilities = m;
  inst.clients = m;
  inst.objective = cfg.objective() == Objective::Sum ? FLObjective::Sum : FLObjective::MinMax;
  inst.opening.assign(m, cfg.alpha());
  inst.dist.assign(m, std::vector<ExtRational>(m, ExtRational::infinity()));
  for (int i = 0; i < m; ++i) {
    const Vertex v = r.map.vertex_of[i];
    if (g.owns(v, agent)) {
      inst.opening[i] = 0;
      r.map.zero_set.push_back(i);
    }
    const auto hops = distances_from(reduced, v);
    for (int j = 0; j < m; ++j) {
      const int h = hops[r.map.vertex_of[j]];
      if (h != kUnreachable) {
        inst.dist[i][j] = ExtRational(h + 1);
      }
    }
  }
  return r;
}

} // namespace ncg
