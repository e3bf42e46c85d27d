#include "agent_view.h"

#include <algorithm>
#include <queue>

namespace ncg::detail {

AgentView::AgentView(const OwnershipGraph& g, Vertex agent, Objective objective)
  : _n(g.size()),
    _agent(agent),
    _objective(objective),
    _fixed(g.owners_toward(agent).begin(), g.owners_toward(agent).end()),
    _dist(static_cast<std::size_t>(_n) * _n, kUnreachable) {
  std::queue<Vertex> queue;
  for (Vertex source = 0; source < _n; ++source) {
    if (source == agent) {
      continue;
    }
    int* dist = _dist.data() + static_cast<std::size_t>(source) * _n;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g.neighbors(x)) {
        if (y != agent && dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        }
      }
    }
  }
}

std::vector<int> AgentView::base_nearest() const {
  std::vector<int> nearest(_n, kUnreachable);
  for (Vertex z : _fixed) {
    merge(nearest, z);
  }
  return nearest;
}

void AgentView::merge(std::span<int> nearest, Vertex x) const {
  const auto r = row(x);
  for (int w = 0; w < _n; ++w) {
    nearest[w] = std::min(nearest[w], r[w]);
  }
}

ExtRational AgentView::cost_from_nearest(std::span<const int> nearest) const {
  std::int64_t total = 0;
  for (int w = 0; w < _n; ++w) {
    if (w == _agent) {
      continue;
    }
    if (nearest[w] == kUnreachable) {
      return ExtRational::infinity();
    }
    const std::int64_t d = nearest[w] + 1;
    total = _objective == Objective::Sum ? total + d : std::max(total, d);
  }
  return ExtRational(total);
}

ExtRational AgentView::distance_cost(std::span<const Vertex> neighbors) const {
  std::vector<int> nearest(_n, kUnreachable);
  for (Vertex x : neighbors) {
    merge(nearest, x);
  }
  return cost_from_nearest(nearest);
}

ExtRational AgentView::strategy_distance_cost(std::span<const Vertex> targets) const {
  auto nearest = base_nearest();
  for (Vertex x : targets) {
    merge(nearest, x);
  }
  return cost_from_nearest(nearest);
}

} // namespace ncg::detail
