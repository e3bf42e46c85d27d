#include <doctest.h>

#include <random>

#include "ncg/constructions.h"
#include "ncg/equilibria.h"
#include "ncg/errors.h"
#include "ncg/facility_location.h"
#include "ncg/response.h"
#include "support/oracles.h"

using namespace ncg;

namespace {

FLInstance square(std::vector<Rational> opening, std::vector<std::vector<ExtRational>> dist,
                  FLObjective objective = FLObjective::Sum) {
  FLInstance inst;
  inst.facilities = static_cast<int>(opening.size());
  inst.clients = static_cast<int>(dist.front().size());
  inst.opening = std::move(opening);
  inst.dist = std::move(dist);
  inst.objective = objective;
  inst.validate();
  return inst;
}

} // namespace

TEST_CASE("reducing a star center leaves every pair unreachable") {
  const OwnershipGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const Reduction r = reduce(star, GameConfig(Rational(2), Objective::Sum), 0);
  CHECK(r.instance.facilities == 3);
  CHECK(r.instance.clients == 3);
  CHECK(r.map.zero_set.empty());
  for (int f = 0; f < 3; ++f) {
    CHECK(r.instance.opening[f] == Rational(2));
    for (int c = 0; c < 3; ++c) {
      if (f == c) {
        CHECK(r.instance.dist[f][c] == ExtRational(1));
      } else {
        CHECK(r.instance.dist[f][c].is_infinite());
      }
    }
  }
  CHECK(r.map.vertex_of == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("owners of incoming arcs become free facilities") {
  const OwnershipGraph path(3, {{0, 1}, {1, 2}});
  const Reduction r = reduce(path, GameConfig(Rational(5), Objective::Max), 1);
  CHECK(r.instance.objective == FLObjective::MinMax);
  CHECK(r.map.zero_set == std::vector<int>{r.map.index_of(0)});
  CHECK(r.instance.is_zero_cost(r.map.index_of(0)));
  CHECK_FALSE(r.instance.is_zero_cost(r.map.index_of(2)));
  CHECK(r.map.open_set(strategy_of(path, 1)) == std::vector<int>{0, 1});
  CHECK(r.map.strategy(std::vector<int>{0, 1}) == strategy_of(path, 1));
}

TEST_CASE("reduced lower-bound network reproduces the best response cost") {
  const Fixture f = sum_lower_bound(3);
  const Vertex u = f.vertex("u");
  const Reduction r = reduce(f.graph, f.config(), u);
  CHECK(is_metric(r.instance));
  CHECK(umfl_cost(r.instance, r.map.open_set(Strategy(u, {f.vertex("x")}))) == ExtRational(33));
  CHECK(umfl_cost(r.instance, r.map.open_set(strategy_of(f.graph, u))) == ExtRational(36));
  CHECK(brute_force_optimum(r.instance).cost == ExtRational(33));
}

TEST_CASE("umfl cost basics") {
  const FLInstance inst = square({Rational(0), Rational(0)},
                                 {{ExtRational(1), ExtRational(3), ExtRational(2)},
                                  {ExtRational(4), ExtRational(1), ExtRational(5)}});
  CHECK(umfl_cost(inst, std::vector<int>{0, 1}) == ExtRational(1 + 1 + 2));
  CHECK(umfl_cost(inst, std::vector<int>{1}) == ExtRational(10));
  CHECK_THROWS_AS(umfl_cost(inst, std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(umfl_cost(inst, std::vector<int>{2}), DomainError);

  const FLSolution s = make_solution(inst, {1, 0});
  CHECK(s.open == std::vector<int>{0, 1});
  CHECK(s.assignment == std::vector<int>{0, 1, 0});

  FLInstance minmax = inst;
  minmax.objective = FLObjective::MinMax;
  CHECK(umfl_cost(minmax, std::vector<int>{0, 1}) == ExtRational(2));
}

TEST_CASE("malformed instances are rejected") {
  FLInstance inst;
  inst.facilities = 2;
  inst.clients = 1;
  inst.opening = {Rational(1)};
  inst.dist = {{ExtRational(1)}, {ExtRational(1)}};
  CHECK_THROWS_AS(inst.validate(), DomainError);
  inst.opening = {Rational(1), Rational(-1)};
  CHECK_THROWS_AS(inst.validate(), DomainError);
}

TEST_CASE("brute force small cases") {
  const FLInstance single = square({Rational(0)}, {{ExtRational(1)}});
  const FLSolution s = brute_force_optimum(single);
  CHECK(s.open == std::vector<int>{0});
  CHECK(s.cost == ExtRational(1));

  const FLInstance free = square({Rational(0), Rational(0), Rational(0)},
                                 {{ExtRational(1), ExtRational(2), ExtRational(2)},
                                  {ExtRational(2), ExtRational(1), ExtRational(2)},
                                  {ExtRational(2), ExtRational(2), ExtRational(1)}});
  CHECK(brute_force_optimum(free).open == std::vector<int>{0, 1, 2});

  FLInstance big;
  big.facilities = 21;
  big.clients = 1;
  big.opening.assign(21, Rational(1));
  big.dist.assign(21, std::vector<ExtRational>{ExtRational(1)});
  CHECK_THROWS_AS(brute_force_optimum(big), InstanceTooLarge);
}

TEST_CASE("local search keeps an optimum and never closes free facilities") {
  const FLInstance inst = square({Rational(0), Rational(3)},
                                 {{ExtRational(1), ExtRational(2), ExtRational(9)},
                                  {ExtRational(9), ExtRational(2), ExtRational(1)}});
  const FLSolution opt = brute_force_optimum(inst);
  CHECK(local_search(inst, opt).open == opt.open);
  const FLSolution init = initial_solution(inst);
  CHECK(std::find(init.open.begin(), init.open.end(), 0) != init.open.end());
  const FLSolution done = local_search(inst, make_solution(inst, {0}));
  CHECK(std::find(done.open.begin(), done.open.end(), 0) != done.open.end());
  CHECK(done.cost == opt.cost);
}

TEST_CASE("facility moves") {
  CHECK(apply_facility_move(std::vector<int>{0, 2}, {FacilityMoveKind::Open, 1, -1}) ==
        std::vector<int>{0, 1, 2});
  CHECK(apply_facility_move(std::vector<int>{0, 2}, {FacilityMoveKind::Close, 0, -1}) ==
        std::vector<int>{2});
  CHECK(apply_facility_move(std::vector<int>{0, 2}, {FacilityMoveKind::Swap, 2, 1}) ==
        std::vector<int>{0, 1});
  CHECK(parse_fl_objective("minmax") == FLObjective::MinMax);
  CHECK_THROWS_AS(parse_fl_objective("median"), ParseError);
}

TEST_CASE("property: strategies and open sets cost the same") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 8;
    const auto g = testing::random_connected(n, 0.3, rng);
    const GameConfig cfg(Rational(1 + trial % 4, 2), trial % 2 ? Objective::Max : Objective::Sum);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    const Vertex u = pick(rng);
    const Reduction r = reduce(g, cfg, u);
    CHECK(is_metric(r.instance));
    for (int s = 0; s < 20; ++s) {
      const Strategy strat = testing::random_strategy(g, u, rng);
      const auto open = r.map.open_set(strat);
      if (open.empty()) {
        continue;
      }
      CHECK(r.map.strategy(open) == strat);
      CHECK(agent_cost(apply_strategy(g, strat), cfg, u).total() == umfl_cost(r.instance, open));
    }
  }
}

TEST_CASE("property: greedy moves exist iff facility moves exist") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 8;
    const auto g = testing::random_connected(n, 0.3, rng);
    const GameConfig cfg(Rational(1 + trial % 6, 2), trial % 2 ? Objective::Max : Objective::Sum);
    for (Vertex u = 0; u < n; ++u) {
      const Reduction r = reduce(g, cfg, u);
      const auto open = r.map.open_set(strategy_of(g, u));
      CHECK(best_greedy_move(g, cfg, u).has_value() ==
            first_improving_move(r.instance, open).has_value());
    }
  }
}

TEST_CASE("property: sum local search stays within three times the optimum") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 8;
    const auto g = testing::random_connected(n, 0.25, rng);
    const GameConfig cfg(Rational(1 + trial % 7, 2), Objective::Sum);
    const Reduction r = reduce(g, cfg, static_cast<Vertex>(trial % n));
    const FLSolution opt = brute_force_optimum(r.instance);
    const FLSolution local = local_search(r.instance, initial_solution(r.instance));
    CHECK(opt.cost <= local.cost);
    CHECK(local.cost <= ExtRational(3 * opt.cost.value()));
    CHECK_FALSE(first_improving_move(r.instance, local.open));
  }
}

TEST_CASE("min-max locality gap of the Max lower bound family") {
  for (int k = 1; k <= 3; ++k) {
    const Fixture f = max_lower_bound(k);
    const Vertex u = f.vertex("u");
    const Reduction r = reduce(f.graph, f.config(), u);
    const auto current = r.map.open_set(strategy_of(f.graph, u));
    CHECK_FALSE(first_improving_move(r.instance, current));
    const FLSolution opt = brute_force_optimum(r.instance);
    CHECK(umfl_cost(r.instance, current).value() / opt.cost.value() == Rational(2 * k + 7, 5));
  }
}
