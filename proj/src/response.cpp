#include "ncg/response.h"

#include <algorithm>
#include <numeric>

#include "agent_view.h"
#include "enumeration.h"
#include "ncg/errors.h"

namespace ncg {

namespace detail {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i; cancel first to stay in range.
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(result / g, factor, &result) || result > cap) {
      return cap + 1;
    }
  }
  return result;
}

} // namespace detail

namespace {

using detail::AgentView;

void check_agent(const OwnershipGraph& g, Vertex v) {
  if (v < 0 || v >= g.size()) {
    throw InvalidStrategy("agent " + std::to_string(v) + " out of range");
  }
}

Rational edge_cost(const GameConfig& cfg, std::size_t edges) {
  return cfg.alpha() * static_cast<std::int64_t>(edges);
}

// Vertices v may add to its strategy without creating a self-loop or a
// multi-edge, given that v's own arcs may be rewired.
std::vector<Vertex> strategy_candidates(const OwnershipGraph& g, Vertex v) {
  std::vector<Vertex> result;
  for (Vertex w = 0; w < g.size(); ++w) {
    if (w != v && !g.owns(w, v)) {
      result.push_back(w);
    }
  }
  return result;
}

std::vector<Vertex> non_neighbors(const OwnershipGraph& g, Vertex v) {
  std::vector<Vertex> result;
  for (Vertex w = 0; w < g.size(); ++w) {
    if (w != v && !g.adjacent(v, w)) {
      result.push_back(w);
    }
  }
  return result;
}

// Lower bound on the distance cost when the agent has `reach` neighbours.
ExtRational distance_lower_bound(int n, std::size_t reach, Objective objective) {
  const std::int64_t others = n - 1;
  if (others <= 0) {
    return ExtRational(0);
  }
  if (reach == 0) {
    return ExtRational::infinity();
  }
  const std::int64_t near = std::min<std::int64_t>(static_cast<std::int64_t>(reach), others);
  if (objective == Objective::Max) {
    return ExtRational(near == others ? 1 : 2);
  }
  return ExtRational(near + 2 * (others - near));
}

void check_budget(std::uint64_t& used, std::uint64_t count, std::uint64_t limit,
                  const char* what) {
  if (count > limit || used + count > limit) {
    throw InstanceTooLarge(std::string(what) + " would evaluate more than " +
                           std::to_string(limit) +
                           " candidate strategies; reduce the instance or set a "
                           "budget cap / larger enumeration limit");
  }
  used += count;
}

struct Incumbent {
  std::vector<Vertex> targets;
  Cost cost;
  bool found = false;

  bool offer(std::span<const Vertex> t, const Cost& c) {
    if (found && !(c.total() < cost.total())) {
      return false;
    }
    targets.assign(t.begin(), t.end());
    cost = c;
    found = true;
    return true;
  }
};

std::optional<StrategyEvaluation> as_improvement(const Incumbent& best, Vertex v,
                                                 const Cost& current) {
  if (!best.found || !(best.cost.total() < current.total())) {
    return std::nullopt;
  }
  return StrategyEvaluation{Strategy(v, best.targets), best.cost,
                            difference(current.total(), best.cost.total())};
}

Cost current_cost(const AgentView& view, const OwnershipGraph& g,
                  const GameConfig& cfg, Vertex v) {
  return Cost{edge_cost(cfg, g.owned(v).size()),
              view.strategy_distance_cost(g.owned(v))};
}

} // namespace

std::optional<MoveEvaluation> best_greedy_move(const OwnershipGraph& g,
                                               const GameConfig& cfg, Vertex v) {
  check_agent(g, v);
  std::optional<MoveEvaluation> best;
  for (MoveKind kind : {MoveKind::Buy, MoveKind::Delete, MoveKind::Swap}) {
    auto candidate = best_greedy_move(g, cfg, v, kind);
    if (candidate && (!best || candidate->new_cost.total() < best->new_cost.total())) {
      best = std::move(candidate);
    }
  }
  return best;
}

std::optional<MoveEvaluation> best_greedy_move(const OwnershipGraph& g,
                                               const GameConfig& cfg, Vertex v,
                                               MoveKind only) {
  check_agent(g, v);
  const AgentView view(g, v, cfg.objective());
  const auto owned = g.owned(v);
  const Cost current = current_cost(view, g, cfg, v);
  const auto targets = non_neighbors(g, v);

  std::optional<MoveEvaluation> best;
  auto offer = [&](const Move& move, std::size_t edges, const ExtRational& dist) {
    Cost cost{edge_cost(cfg, edges), dist};
    if (!(cost.total() < current.total())) {
      return;
    }
    if (best && !(cost.total() < best->new_cost.total())) {
      return;
    }
    best = MoveEvaluation{move, cost, difference(current.total(), cost.total())};
  };

  auto nearest_with = [&](Vertex skip) {
    auto nearest = view.base_nearest();
    for (Vertex x : owned) {
      if (x != skip) {
        view.merge(nearest, x);
      }
    }
    return nearest;
  };

  switch (only) {
  case MoveKind::Buy: {
    const auto base = nearest_with(-1);
    for (Vertex w : targets) {
      auto nearest = base;
      view.merge(nearest, w);
      offer(Move::buy(w), owned.size() + 1, view.cost_from_nearest(nearest));
    }
    break;
  }
  case MoveKind::Delete:
    for (Vertex a : owned) {
      offer(Move::remove(a), owned.size() - 1,
            view.cost_from_nearest(nearest_with(a)));
    }
    break;
  case MoveKind::Swap:
    for (Vertex a : owned) {
      const auto base = nearest_with(a);
      for (Vertex b : targets) {
        auto nearest = base;
        view.merge(nearest, b);
        offer(Move::swap(a, b), owned.size(), view.cost_from_nearest(nearest));
      }
    }
    break;
  }
  return best;
}

BestResponse best_response(const OwnershipGraph& g, const GameConfig& cfg, Vertex v,
                           const SearchOptions& options) {
  check_agent(g, v);
  const AgentView view(g, v, cfg.objective());
  const auto candidates = strategy_candidates(g, v);
  const std::size_t fixed = view.fixed_neighbors().size();
  std::size_t max_size = candidates.size();
  if (options.budget_cap) {
    max_size = std::min<std::size_t>(max_size, std::max(0, *options.budget_cap));
  }

  auto lower_bound = [&](std::size_t size) {
    return ExtRational(edge_cost(cfg, size)) +
           distance_lower_bound(g.size(), size + fixed, cfg.objective());
  };

  const auto base = view.base_nearest();
  Incumbent best;
  std::uint64_t used = 0;
  for (std::size_t size = 0; size <= max_size; ++size) {
    if (best.found) {
      bool hopeless = true;
      for (std::size_t s = size; s <= max_size && hopeless; ++s) {
        hopeless = !(lower_bound(s) < best.cost.total());
      }
      if (hopeless) {
        break;
      }
    }
    check_budget(used,
                 detail::binomial(candidates.size(), size, options.enumeration_limit),
                 options.enumeration_limit, "best response search");
    const Rational edges = edge_cost(cfg, size);
    detail::for_each_combination(view, candidates, size, base,
                                 [&](std::span<const Vertex> chosen,
                                     std::span<const int> nearest) {
                                   best.offer(chosen,
                                              Cost{edges, view.cost_from_nearest(nearest)});
                                 });
  }
  return BestResponse{Strategy(v, best.targets), best.cost};
}

std::optional<StrategyEvaluation> best_k_buy(const OwnershipGraph& g,
                                             const GameConfig& cfg, Vertex v, int k,
                                             std::uint64_t enumeration_limit) {
  check_agent(g, v);
  if (k < 1) {
    throw DomainError("k must be at least 1");
  }
  const AgentView view(g, v, cfg.objective());
  const auto owned = g.owned(v);
  const auto pool = non_neighbors(g, v);
  const Cost current = current_cost(view, g, cfg, v);
  std::uint64_t used = 0;
  check_budget(used, detail::binomial(pool.size(), k, enumeration_limit),
               enumeration_limit, "k-buy search");

  auto base = view.base_nearest();
  for (Vertex x : owned) {
    view.merge(base, x);
  }
  const Rational edges = edge_cost(cfg, owned.size() + k);
  Incumbent best;
  detail::for_each_combination(
      view, pool, k, base,
      [&](std::span<const Vertex> chosen, std::span<const int> nearest) {
        best.offer(chosen, Cost{edges, view.cost_from_nearest(nearest)});
      });
  if (best.found) {
    best.targets.insert(best.targets.end(), owned.begin(), owned.end());
  }
  return as_improvement(best, v, current);
}

std::optional<StrategyEvaluation> best_k_delete(const OwnershipGraph& g,
                                                const GameConfig& cfg, Vertex v, int k,
                                                std::uint64_t enumeration_limit) {
  check_agent(g, v);
  if (k < 1) {
    throw DomainError("k must be at least 1");
  }
  const auto owned = g.owned(v);
  if (static_cast<std::size_t>(k) > owned.size()) {
    return std::nullopt;
  }
  const AgentView view(g, v, cfg.objective());
  const Cost current = current_cost(view, g, cfg, v);
  const std::size_t keep = owned.size() - k;
  std::uint64_t used = 0;
  check_budget(used, detail::binomial(owned.size(), keep, enumeration_limit),
               enumeration_limit, "k-delete search");
  const Rational edges = edge_cost(cfg, keep);
  Incumbent best;
  detail::for_each_combination(
      view, owned, keep, view.base_nearest(),
      [&](std::span<const Vertex> kept, std::span<const int> nearest) {
        best.offer(kept, Cost{edges, view.cost_from_nearest(nearest)});
      });
  return as_improvement(best, v, current);
}

std::optional<StrategyEvaluation> best_multi_swap(const OwnershipGraph& g,
                                                  const GameConfig& cfg, Vertex v,
                                                  std::uint64_t enumeration_limit) {
  check_agent(g, v);
  const AgentView view(g, v, cfg.objective());
  const auto owned = g.owned(v);
  const Cost current = current_cost(view, g, cfg, v);
  const auto pool = strategy_candidates(g, v);
  std::uint64_t used = 0;
  check_budget(used, detail::binomial(pool.size(), owned.size(), enumeration_limit),
               enumeration_limit, "multi-swap search");
  const Rational edges = edge_cost(cfg, owned.size());
  Incumbent best;
  detail::for_each_combination(
      view, pool, owned.size(), view.base_nearest(),
      [&](std::span<const Vertex> chosen, std::span<const int> nearest) {
        best.offer(chosen, Cost{edges, view.cost_from_nearest(nearest)});
      });
  return as_improvement(best, v, current);
}

RatioReport approx_ratio(const OwnershipGraph& g, const GameConfig& cfg,
                         const SearchOptions& options) {
  RatioReport report;
  for (Vertex v = 0; v < g.size(); ++v) {
    const Cost current = agent_cost(g, cfg, v);
    if (current.total().is_infinite()) {
      throw InvalidGraph("approximation ratio requires a connected network");
    }
    BestResponse best = best_response(g, cfg, v, options);
    if (best.cost.total().is_infinite()) {
      throw InstanceTooLarge("budget cap leaves agent " + std::to_string(v) +
                             " without a connecting strategy");
    }
    const Rational denominator = best.cost.total().value();
    const Rational ratio =
        denominator == Rational(0) ? Rational(1) : current.total().value() / denominator;
    if (v == 0 || report.beta < ratio) {
      report.beta = ratio;
      report.witness = v;
    }
    report.agents.push_back({v, current, std::move(best), ratio});
  }
  return report;
}

} // namespace ncg
