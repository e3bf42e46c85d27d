#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncg/graph.h"

namespace ncg {

enum class Policy { RoundRobin, Random, MaxGain };

std::string to_string(Policy policy);
Policy parse_policy(std::string_view text);

struct Schedule {
  Policy policy = Policy::RoundRobin;
  std::uint64_t seed = 0; // Random only
  int max_rounds = 1000;  // must be at least 1
};

struct Step {
  int round = 0;
  Vertex agent = 0;
  Move move;
  Cost before;
  Cost after;
  // Social cost of the network after the step, recomputed from scratch.
  ExtRational social_cost;
};

struct Trajectory {
  OwnershipGraph initial;
  std::vector<Step> steps;
  OwnershipGraph terminal;
  bool converged = false;
  int rounds = 0;
};

// Greedy play: scheduled agents perform their best greedy move. Round robin
// and random visit every agent once per round (random in a fresh seeded order
// each round); max gain lets only the agent with the largest improvement move.
// Stops after a round without moves or after max_rounds rounds. Throws
// InvalidGraph when g0 is disconnected and DomainError for max_rounds < 1.
Trajectory run_dynamics(const OwnershipGraph& g0, const GameConfig& cfg,
                        const Schedule& schedule);

} // namespace ncg
