#pragma once

#include <optional>
#include <vector>

#include "ncg/graph.h"

namespace ncg {

// Vertices minimising the total distance to all vertices of the tree t.
std::vector<Vertex> one_median(const OwnershipGraph& t);

// 1-medians of the component containing `anchor` in the forest t - excluded.
std::vector<Vertex> one_median(const OwnershipGraph& t, Vertex excluded, Vertex anchor);

// Vertices of minimum eccentricity (the middle of a longest path).
std::vector<Vertex> one_center(const OwnershipGraph& t);
std::vector<Vertex> one_center(const OwnershipGraph& t, Vertex excluded, Vertex anchor);

// One component of t - agent, seen from the agent.
struct Subtree {
  Vertex attachment;               // the agent's unique neighbour inside
  bool owned_by_agent;             // whether the agent bought that edge
  std::vector<Vertex> vertices;    // sorted
  int depth_from_attachment;       // eccentricity of the attachment within
  std::vector<Vertex> centers;     // 1-centers of the subtree
  int radius;                      // eccentricity of a center within
  bool holds_far_vertex;           // contains a vertex at max_dist
};

struct TreeAnalysis {
  Vertex agent;
  int max_dist;                    // eccentricity of the agent
  std::vector<Vertex> far_set;     // vertices at distance max_dist, sorted
  std::vector<Subtree> subtrees;   // ordered by attachment id
};

// Throws NotATree.
TreeAnalysis analyze_tree(const OwnershipGraph& t, Vertex agent);

} // namespace ncg
