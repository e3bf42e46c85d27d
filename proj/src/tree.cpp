#include "ncg/tree.h"

#include <algorithm>
#include <queue>

#include "ncg/errors.h"

namespace ncg {

namespace {

// BFS tree of the component of `root` in t - excluded.
struct Sweep {
  std::vector<Vertex> order;  // BFS order, root first
  std::vector<Vertex> parent; // -1 for root and unvisited
  std::vector<int> dist;      // kUnreachable for unvisited

  Sweep(const OwnershipGraph& t, Vertex root, Vertex excluded)
    : parent(t.size(), -1), dist(t.size(), kUnreachable) {
    std::queue<Vertex> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      order.push_back(x);
      for (Vertex y : t.neighbors(x)) {
        if (y != excluded && dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        }
      }
    }
  }

  Vertex farthest() const {
    Vertex best = order.front();
    for (Vertex x : order) {
      if (dist[x] > dist[best]) {
        best = x;
      }
    }
    return best;
  }
};

void require_tree(const OwnershipGraph& t) {
  if (!is_tree(t)) {
    throw NotATree();
  }
}

void check_vertex(const OwnershipGraph& t, Vertex v) {
  if (v < 0 || v >= t.size()) {
    throw InvalidGraph("vertex " + std::to_string(v) + " out of range");
  }
}

std::vector<Vertex> median_of_component(const OwnershipGraph& t, Vertex excluded,
                                        Vertex anchor) {
  const Sweep sweep(t, anchor, excluded);
  const auto n = static_cast<std::int64_t>(sweep.order.size());
  std::vector<std::int64_t> size(t.size(), 1);
  std::vector<std::int64_t> largest_part(t.size(), 0);
  for (auto it = sweep.order.rbegin(); it != sweep.order.rend(); ++it) {
    const Vertex x = *it;
    if (const Vertex p = sweep.parent[x]; p >= 0) {
      size[p] += size[x];
      largest_part[p] = std::max(largest_part[p], size[x]);
    }
  }
  std::vector<Vertex> medians;
  for (Vertex x : sweep.order) {
    const auto part = std::max(largest_part[x], n - size[x]);
    if (2 * part <= n) {
      medians.push_back(x);
    }
  }
  std::sort(medians.begin(), medians.end());
  return medians;
}

std::vector<Vertex> center_of_component(const OwnershipGraph& t, Vertex excluded,
                                        Vertex anchor) {
  const Vertex a = Sweep(t, anchor, excluded).farthest();
  const Sweep from_a(t, a, excluded);
  const Vertex b = from_a.farthest();
  std::vector<Vertex> path;
  for (Vertex x = b; x != -1; x = from_a.parent[x]) {
    path.push_back(x);
  }
  const std::size_t length = path.size() - 1;
  std::vector<Vertex> centers{path[length / 2]};
  if (length % 2 == 1) {
    centers.push_back(path[length / 2 + 1]);
  }
  std::sort(centers.begin(), centers.end());
  return centers;
}

} // namespace

std::vector<Vertex> one_median(const OwnershipGraph& t) {
  require_tree(t);
  return median_of_component(t, -1, 0);
}

std::vector<Vertex> one_median(const OwnershipGraph& t, Vertex excluded, Vertex anchor) {
  require_tree(t);
  check_vertex(t, excluded);
  check_vertex(t, anchor);
  if (excluded == anchor) {
    throw InvalidGraph("anchor must differ from the excluded vertex");
  }
  return median_of_component(t, excluded, anchor);
}

std::vector<Vertex> one_center(const OwnershipGraph& t) {
  require_tree(t);
  return center_of_component(t, -1, 0);
}

std::vector<Vertex> one_center(const OwnershipGraph& t, Vertex excluded, Vertex anchor) {
  require_tree(t);
  check_vertex(t, excluded);
  check_vertex(t, anchor);
  if (excluded == anchor) {
    throw InvalidGraph("anchor must differ from the excluded vertex");
  }
  return center_of_component(t, excluded, anchor);
}

TreeAnalysis analyze_tree(const OwnershipGraph& t, Vertex agent) {
  require_tree(t);
  check_vertex(t, agent);
  const auto dist = distances_from(t, agent);
  TreeAnalysis result{agent, *std::max_element(dist.begin(), dist.end()), {}, {}};
  for (Vertex w = 0; w < t.size(); ++w) {
    if (dist[w] == result.max_dist && w != agent) {
      result.far_set.push_back(w);
    }
  }
  for (Vertex y : t.neighbors(agent)) {
    const Sweep sweep(t, y, agent);
    Subtree sub;
    sub.attachment = y;
    sub.owned_by_agent = t.owns(agent, y);
    sub.vertices = sweep.order;
    std::sort(sub.vertices.begin(), sub.vertices.end());
    sub.depth_from_attachment = sweep.dist[sweep.farthest()];
    sub.centers = center_of_component(t, agent, y);
    const Sweep from_center(t, sub.centers.front(), agent);
    sub.radius = from_center.dist[from_center.farthest()];
    sub.holds_far_vertex = result.max_dist > 0 &&
                           std::any_of(sub.vertices.begin(), sub.vertices.end(),
                                       [&](Vertex w) { return dist[w] == result.max_dist; });
    result.subtrees.push_back(std::move(sub));
  }
  return result;
}

} // namespace ncg
