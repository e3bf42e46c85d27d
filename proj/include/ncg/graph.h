#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ncg/rational.h"

namespace ncg {

using Vertex = int;

// Hop count used for unreachable vertices.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Ownership record: `owner` paid for the undirected edge {owner, target}.
struct Arc {
  Vertex owner;
  Vertex target;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class Objective { Sum, Max };

std::string to_string(Objective objective);
Objective parse_objective(std::string_view text);

class GameConfig {
public:
  // Throws DomainError unless alpha > 0.
  GameConfig(Rational alpha, Objective objective);

  const Rational& alpha() const { return _alpha; }
  Objective objective() const { return _objective; }

  GameConfig with_alpha(Rational alpha) const { return {alpha, _objective}; }

  friend bool operator==(const GameConfig&, const GameConfig&) = default;

private:
  Rational _alpha;
  Objective _objective;
};

// Immutable graph on vertices 0..n-1 where every undirected edge carries the
// endpoint that bought it. Self-arcs, duplicate arcs and antiparallel pairs
// are rejected on construction.
class OwnershipGraph {
public:
  OwnershipGraph() = default;
  explicit OwnershipGraph(int n);
  OwnershipGraph(int n, std::vector<Arc> arcs);

  int size() const { return _n; }

  // Targets bought by v (its strategy), sorted ascending.
  std::span<const Vertex> owned(Vertex v) const { return _owned[v]; }
  // Vertices that bought an edge toward v, sorted ascending.
  std::span<const Vertex> owners_toward(Vertex v) const { return _incoming[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return _neighbors[v]; }

  bool owns(Vertex v, Vertex w) const;
  bool adjacent(Vertex v, Vertex w) const;
  std::size_t degree(Vertex v) const { return _neighbors[v].size(); }

  // All arcs sorted by (owner, target).
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const { return _arc_count; }

  friend bool operator==(const OwnershipGraph& a, const OwnershipGraph& b) {
    return a._n == b._n && a._owned == b._owned;
  }

private:
  int _n = 0;
  std::size_t _arc_count = 0;
  std::vector<std::vector<Vertex>> _owned;
  std::vector<std::vector<Vertex>> _incoming;
  std::vector<std::vector<Vertex>> _neighbors;
};

// Full target set of one agent. Targets are kept sorted and unique.
struct Strategy {
  Vertex agent = 0;
  std::vector<Vertex> targets;

  Strategy() = default;
  Strategy(Vertex agent, std::vector<Vertex> targets);

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

Strategy strategy_of(const OwnershipGraph& g, Vertex v);

// Throws InvalidStrategy when s.targets contains the agent itself, an out of
// range id, or a vertex owning an arc toward the agent.
void validate_strategy(const OwnershipGraph& g, const Strategy& s);

enum class MoveKind { Buy, Delete, Swap };

struct Move {
  MoveKind kind = MoveKind::Buy;
  Vertex target = 0;       // bought, deleted, or swapped-out vertex
  Vertex replacement = -1; // swapped-in vertex, Swap only

  static Move buy(Vertex w) { return {MoveKind::Buy, w, -1}; }
  static Move remove(Vertex w) { return {MoveKind::Delete, w, -1}; }
  static Move swap(Vertex from, Vertex to) { return {MoveKind::Swap, from, to}; }

  friend auto operator<=>(const Move&, const Move&) = default;
};

std::string to_string(MoveKind kind);
std::string to_string(const Move& m);

struct Cost {
  Rational edge_part{0};
  ExtRational dist_part;

  ExtRational total() const { return ExtRational(edge_part) + dist_part; }

  friend bool operator==(const Cost&, const Cost&) = default;
};

// Breadth-first hop counts in the induced undirected graph, kUnreachable for
// vertices in other components.
std::vector<int> distances_from(const OwnershipGraph& g, Vertex v);

// Sum or maximum of the hop counts from v; infinite if g is disconnected.
ExtRational distance_cost(const OwnershipGraph& g, Vertex v, Objective objective);

Cost agent_cost(const OwnershipGraph& g, const GameConfig& cfg, Vertex v);

// Sum of all agents' totals.
ExtRational social_cost(const OwnershipGraph& g, const GameConfig& cfg);

OwnershipGraph apply_move(const OwnershipGraph& g, Vertex v, const Move& m);
OwnershipGraph apply_strategy(const OwnershipGraph& g, const Strategy& s);

// Replaces the undirected edge {v, from} (owned by either endpoint) with an
// arc (v, to). Models the ownership-agnostic swaps of the basic game.
OwnershipGraph apply_incident_swap(const OwnershipGraph& g, Vertex v, Vertex from,
                                   Vertex to);

// Vertex i of g becomes perm[i].
OwnershipGraph relabel(const OwnershipGraph& g, std::span<const Vertex> perm);

bool is_connected(const OwnershipGraph& g);
bool is_tree(const OwnershipGraph& g);

// Maximum eccentricity; kUnreachable when disconnected.
int diameter(const OwnershipGraph& g);
int eccentricity(const OwnershipGraph& g, Vertex v);

} // namespace ncg
