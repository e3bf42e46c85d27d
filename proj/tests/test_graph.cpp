#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ncg/errors.h"
#include "ncg/graph.h"
#include "support/oracles.h"

using namespace ncg;

namespace {

OwnershipGraph path(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) {
    arcs.push_back({i, i + 1});
  }
  return OwnershipGraph(n, arcs);
}

OwnershipGraph cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back({i, (i + 1) % n});
  }
  return OwnershipGraph(n, arcs);
}

} // namespace

TEST_CASE("construction rejects malformed arc sets") {
  CHECK_THROWS_AS(OwnershipGraph(3, {{0, 0}}), InvalidGraph);
  CHECK_THROWS_AS(OwnershipGraph(3, {{0, 3}}), InvalidGraph);
  CHECK_THROWS_AS(OwnershipGraph(3, {{0, 1}, {0, 1}}), InvalidGraph);
  CHECK_THROWS_AS(OwnershipGraph(3, {{0, 1}, {1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(OwnershipGraph(-1), InvalidGraph);
}

TEST_CASE("ownership and adjacency views are sorted") {
  const OwnershipGraph g(4, {{2, 0}, {0, 3}, {0, 1}, {3, 2}});
  CHECK(std::vector<Vertex>(g.owned(0).begin(), g.owned(0).end()) == std::vector<Vertex>{1, 3});
  CHECK(std::vector<Vertex>(g.owners_toward(0).begin(), g.owners_toward(0).end()) ==
        std::vector<Vertex>{2});
  CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) ==
        std::vector<Vertex>{1, 2, 3});
  CHECK(g.owns(2, 0));
  CHECK_FALSE(g.owns(0, 2));
  CHECK(g.adjacent(0, 2));
  CHECK(g.arc_count() == 4);
  CHECK(g.arcs().front() == Arc{0, 1});
}

TEST_CASE("distances") {
  CHECK(distances_from(path(3), 0) == std::vector<int>{0, 1, 2});
  CHECK(distances_from(OwnershipGraph(2), 1) == std::vector<int>{kUnreachable, 0});
  const auto d = distances_from(cycle(5), 3);
  std::vector<int> sorted(d);
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 1, 2, 2});
  CHECK(eccentricity(cycle(5), 3) == 2);
  CHECK(diameter(path(6)) == 5);
  CHECK(diameter(OwnershipGraph(2)) == kUnreachable);
}

TEST_CASE("agent costs") {
  CHECK(agent_cost(OwnershipGraph(2, {{0, 1}}), GameConfig(Rational(3), Objective::Sum), 0)
            .total() == ExtRational(4));
  const OwnershipGraph mid(3, {{1, 0}, {1, 2}});
  const Cost c = agent_cost(mid, GameConfig(Rational(1), Objective::Max), 1);
  CHECK(c.edge_part == Rational(2));
  CHECK(c.dist_part == ExtRational(1));
  CHECK(c.total() == ExtRational(3));
  CHECK(agent_cost(OwnershipGraph(3, {{0, 1}}), GameConfig(Rational(1), Objective::Sum), 0)
            .total()
            .is_infinite());
  CHECK_THROWS_AS(GameConfig(Rational(0), Objective::Sum), DomainError);
}

TEST_CASE("moves") {
  const OwnershipGraph pair(2);
  CHECK(apply_move(pair, 0, Move::buy(1)) == OwnershipGraph(2, {{0, 1}}));

  const OwnershipGraph p = path(3);
  CHECK(apply_move(p, 0, Move::swap(1, 2)) == OwnershipGraph(3, {{0, 2}, {1, 2}}));
  CHECK(apply_move(p, 0, Move::remove(1)) == OwnershipGraph(3, {{1, 2}}));
  CHECK_THROWS_AS(apply_move(p, 1, Move::remove(0)), InvalidMove);
  CHECK_THROWS_AS(apply_move(p, 0, Move::buy(1)), InvalidMove);
  CHECK_THROWS_AS(apply_move(p, 2, Move::buy(1)), InvalidMove);
  CHECK_THROWS_AS(apply_move(p, 0, Move::swap(1, 0)), InvalidMove);
}

TEST_CASE("strategies") {
  const OwnershipGraph p = path(3);
  CHECK(apply_strategy(p, Strategy(0, {2})) == OwnershipGraph(3, {{0, 2}, {1, 2}}));
  const OwnershipGraph cut = apply_strategy(p, Strategy(0, {}));
  CHECK_FALSE(is_connected(cut));
  CHECK(agent_cost(cut, GameConfig(Rational(1), Objective::Sum), 0).total().is_infinite());
  CHECK_THROWS_AS(apply_strategy(p, Strategy(1, {0})), InvalidStrategy);
  CHECK_THROWS_AS(apply_strategy(p, Strategy(0, {0})), InvalidStrategy);
  CHECK_THROWS_AS(apply_strategy(p, Strategy(0, {7})), InvalidStrategy);
  CHECK(Strategy(0, {3, 1, 3}).targets == std::vector<Vertex>{1, 3});
}

TEST_CASE("incident swaps ignore ownership") {
  const OwnershipGraph q = path(4);
  CHECK(apply_incident_swap(q, 1, 0, 3) == OwnershipGraph(4, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(apply_incident_swap(q, 2, 1, 0) == OwnershipGraph(4, {{0, 1}, {2, 0}, {2, 3}}));
  CHECK_THROWS_AS(apply_incident_swap(q, 1, 0, 2), InvalidMove);
}

TEST_CASE("property: buy then delete restores the cost") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const auto g = testing::random_connected(n, 0.3, rng);
    for (auto objective : {Objective::Sum, Objective::Max}) {
      const GameConfig cfg(Rational(1 + trial % 3, 2), objective);
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = 0; w < n; ++w) {
          if (w == v || g.adjacent(v, w)) {
            continue;
          }
          const auto back = apply_move(apply_move(g, v, Move::buy(w)), v, Move::remove(w));
          CHECK(back == g);
          CHECK(agent_cost(back, cfg, v) == agent_cost(g, cfg, v));
        }
      }
    }
  }
}

TEST_CASE("property: distance cost lower bounds on connected graphs") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 8;
    const auto g = testing::random_connected(n, 0.25, rng);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(ExtRational(n - 1) <= distance_cost(g, v, Objective::Sum));
      CHECK(ExtRational(1) <= distance_cost(g, v, Objective::Max));
    }
  }
}

TEST_CASE("property: relabelling permutes costs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const auto g = testing::random_connected(n, 0.3, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    for (auto objective : {Objective::Sum, Objective::Max}) {
      const GameConfig cfg(Rational(3, 2), objective);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(agent_cost(g, cfg, v) == agent_cost(h, cfg, perm[v]));
      }
      CHECK(social_cost(g, cfg) == social_cost(h, cfg));
    }
  }
}

TEST_CASE("trees and connectivity") {
  CHECK(is_tree(path(5)));
  CHECK_FALSE(is_tree(cycle(5)));
  CHECK_FALSE(is_tree(OwnershipGraph(3, {{0, 1}})));
  CHECK(is_tree(OwnershipGraph(1)));
  CHECK(is_connected(cycle(4)));
}
