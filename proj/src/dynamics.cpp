#include "ncg/dynamics.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "ncg/errors.h"
#include "ncg/response.h"

namespace ncg {

std::string to_string(Policy policy) {
  switch (policy) {
  case Policy::RoundRobin:
    return "round-robin";
  case Policy::Random:
    return "random";
  case Policy::MaxGain:
    return "max-gain";
  }
  return "?";
}

Policy parse_policy(std::string_view text) {
  if (text == "round-robin") {
    return Policy::RoundRobin;
  }
  if (text == "random") {
    return Policy::Random;
  }
  if (text == "max-gain") {
    return Policy::MaxGain;
  }
  throw ParseError("unknown policy '" + std::string(text) + "'");
}

namespace {

Step play(OwnershipGraph& g, const GameConfig& cfg, int round, Vertex v,
          const MoveEvaluation& eval) {
  Step step{round, v, eval.move, agent_cost(g, cfg, v), eval.new_cost, {}};
  g = apply_move(g, v, eval.move);
  step.social_cost = social_cost(g, cfg);
  return step;
}

} // namespace

Trajectory run_dynamics(const OwnershipGraph& g0, const GameConfig& cfg,
                        const Schedule& schedule) {
  if (schedule.max_rounds < 1) {
    throw DomainError("max_rounds must be at least 1");
  }
  if (!is_connected(g0)) {
    throw InvalidGraph("dynamics start from a connected network");
  }
  Trajectory t;
  t.initial = g0;
  OwnershipGraph g = g0;
  std::mt19937_64 rng(schedule.seed);
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), 0);

  for (int round = 1; round <= schedule.max_rounds; ++round) {
    t.rounds = round;
    bool moved = false;
    if (schedule.policy == Policy::MaxGain) {
      std::optional<std::pair<Vertex, MoveEvaluation>> best;
      for (Vertex v = 0; v < g.size(); ++v) {
        auto eval = best_greedy_move(g, cfg, v);
        if (eval && (!best || best->second.improvement < eval->improvement)) {
          best.emplace(v, std::move(*eval));
        }
      }
      if (best) {
        t.steps.push_back(play(g, cfg, round, best->first, best->second));
        moved = true;
      }
    } else {
      if (schedule.policy == Policy::Random) {
        std::shuffle(order.begin(), order.end(), rng);
      }
      for (Vertex v : order) {
        if (auto eval = best_greedy_move(g, cfg, v)) {
          t.steps.push_back(play(g, cfg, round, v, *eval));
          moved = true;
        }
      }
    }
    if (!moved) {
      t.converged = true;
      break;
    }
  }
  t.terminal = g;
  return t;
}

} // namespace ncg
