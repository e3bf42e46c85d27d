#pragma once

#include <span>
#include <vector>

#include "ncg/graph.h"

namespace ncg::detail {

// One agent's view of the network with the agent removed. A shortest path
// from the agent to w leaves through some neighbour x and never revisits the
// agent, so its length is 1 + min over neighbours x of dist(x, w) in the
// agent-free graph. Every unilateral deviation only changes the agent's
// neighbourhood, so one all-pairs table serves all candidate strategies.
class AgentView {
public:
  AgentView(const OwnershipGraph& g, Vertex agent, Objective objective);

  Vertex agent() const { return _agent; }
  int size() const { return _n; }
  Objective objective() const { return _objective; }

  // Vertices that own an arc toward the agent; always neighbours.
  std::span<const Vertex> fixed_neighbors() const { return _fixed; }

  std::span<const int> row(Vertex x) const {
    return {_dist.data() + static_cast<std::size_t>(x) * _n,
            static_cast<std::size_t>(_n)};
  }

  // Nearest-neighbour hop table for the fixed neighbours only.
  std::vector<int> base_nearest() const;

  // nearest[w] = min(nearest[w], dist(x, w)).
  void merge(std::span<int> nearest, Vertex x) const;

  // Distance cost of the agent given the nearest-neighbour table.
  ExtRational cost_from_nearest(std::span<const int> nearest) const;

  // Distance cost when the agent's neighbourhood is exactly `neighbors`.
  ExtRational distance_cost(std::span<const Vertex> neighbors) const;

  // Distance cost when the agent owns exactly `targets`.
  ExtRational strategy_distance_cost(std::span<const Vertex> targets) const;

private:
  int _n;
  Vertex _agent;
  Objective _objective;
  std::vector<Vertex> _fixed;
  std::vector<int> _dist;
};

} // namespace ncg::detail
