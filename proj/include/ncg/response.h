#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncg/graph.h"

namespace ncg {

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 20;

struct SearchOptions {
  // Only strategies with at most this many targets are searched.
  std::optional<int> budget_cap;
  // Maximum number of candidate strategies evaluated before the search gives
  // up with InstanceTooLarge.
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
};

struct MoveEvaluation {
  Move move;
  Cost new_cost;
  // Old total minus new total; infinite when the move reconnects the network.
  ExtRational improvement;
};

// A strictly improving multi-edge deviation found by one of the exhaustive
// neighbourhood searches below.
struct StrategyEvaluation {
  Strategy strategy;
  Cost new_cost;
  ExtRational improvement;
};

struct BestResponse {
  Strategy strategy;
  Cost cost;
};

// Best strictly improving single buy, delete or swap of an own edge. Ties on
// the improvement go to Buy < Delete < Swap, then to the smallest target and
// replacement ids.
std::optional<MoveEvaluation> best_greedy_move(const OwnershipGraph& g,
                                               const GameConfig& cfg, Vertex v);

// Same search restricted to one kind of move.
std::optional<MoveEvaluation> best_greedy_move(const OwnershipGraph& g,
                                               const GameConfig& cfg, Vertex v,
                                               MoveKind only);

// Exact best response over all strategies that avoid multi-edges. Strategies
// are enumerated by increasing size and, within a size, lexicographically, so
// ties resolve to the fewest edges and then the lexicographically smallest
// target set. Sizes whose cost lower bound cannot beat the incumbent are
// skipped. Throws InstanceTooLarge when more than
// `options.enumeration_limit` strategies would have to be evaluated.
BestResponse best_response(const OwnershipGraph& g, const GameConfig& cfg, Vertex v,
                           const SearchOptions& options = {});

// Best strictly improving addition of exactly k new arcs.
std::optional<StrategyEvaluation>
best_k_buy(const OwnershipGraph& g, const GameConfig& cfg, Vertex v, int k,
           std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

// Best strictly improving removal of exactly k owned arcs.
std::optional<StrategyEvaluation>
best_k_delete(const OwnershipGraph& g, const GameConfig& cfg, Vertex v, int k,
              std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

// Best strictly improving strategy with as many targets as v currently owns.
std::optional<StrategyEvaluation>
best_multi_swap(const OwnershipGraph& g, const GameConfig& cfg, Vertex v,
                std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

struct AgentRatio {
  Vertex agent;
  Cost current;
  BestResponse best;
  Rational ratio;
};

struct RatioReport {
  Rational beta{1};
  Vertex witness = 0;
  std::vector<AgentRatio> agents;
};

// Largest ratio between an agent's current cost and its best-response cost.
// Ties on the ratio go to the smallest agent id. Requires a connected graph.
RatioReport approx_ratio(const OwnershipGraph& g, const GameConfig& cfg,
                         const SearchOptions& options = {});

} // namespace ncg
