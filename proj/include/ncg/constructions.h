#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/equilibria.h"
#include "ncg/graph.h"

namespace ncg {

struct Expectation {
  Concept solution_concept;
  bool holds;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

// A generated witness network together with the classifications it is known
// to have. Expectations are only recorded where they are established; a
// missing concept means "not claimed".
struct Fixture {
  std::string name;
  OwnershipGraph graph;
  Rational alpha{1};
  Objective objective = Objective::Sum;
  std::vector<std::string> labels;
  std::vector<Expectation> expectations;
  // The agent the construction is built around, if any.
  std::optional<Vertex> focus;
  // Expected c(focus) / c*(focus).
  std::optional<Rational> expected_ratio;
  // Shape reconstructed from prose only; excluded from acceptance.
  bool unverified_figure = false;

  GameConfig config() const { return {alpha, objective}; }
  // Throws std::out_of_range for unknown labels.
  Vertex vertex(std::string_view label) const;
  std::optional<bool> expected(Concept c) const;
};

// 5-cycle; edge i joins i and i+1 (mod 5). `pattern` is either a preset
// ("h2": every vertex owns its clockwise edge, "h3": vertex 0 owns both of its
// edges, "h5": alternating) or five characters F/B, where F gives edge i to
// vertex i and B gives it to vertex i+1.
Fixture c5(const Rational& alpha, std::string_view pattern = "h2");

// 5-cycle with one pendant leaf per cycle vertex; cycle vertex i owns its leaf
// arc and the arc to cycle vertex i+1. Sum-GE exactly for 6 <= alpha <= 8.
Fixture cycle_with_leaves(const Rational& alpha = Rational(7));

// Sum lower-bound family: k^2 + k + 3 vertices at alpha = k + 1, in Sum-GE,
// where agent u improves by the factor (3k^2+2k+3)/(2k^2+4k+3).
Fixture sum_lower_bound(int k);

enum class NonLocalKind { Star, Clique, Spider };
NonLocalKind parse_nonlocal_kind(std::string_view text);

// Max networks where exactly-k buys / deletions / swaps improve an agent while
// no smaller change does.
Fixture max_nonlocal(NonLocalKind kind, int k);

// Max-GE tree around agent u (k odd, k >= 3, alpha = k + 1) where a
// simultaneous two-arc swap lowers u's eccentricity from k to ceil(k/2).
Fixture badly_connected_tree(int k);
Fixture badly_connected_tree(int k, const Rational& alpha);

// 24-vertex diameter-4 network that stays in Max-GE for every alpha <= 1.
Fixture cheap_network(const Rational& alpha = Rational(1));

// Max-GE family with 2k + 8 vertices where agent u improves by the factor
// (alpha(2+k)+3)/(alpha+3) by buying the single edge {u, v}.
Fixture max_lower_bound(int k, const Rational& alpha = Rational(2));

// Star with n >= 4 vertices and alpha < 1/(n-2). Throws DomainError otherwise.
Fixture cheap_star(int n, const Rational& alpha, bool center_owned = true);

// Best-effort stand-in for a figure whose exact shape is not recoverable: a
// 5-cycle with one pendant leaf whose ownership was searched to be in Sum-GE
// exactly for 3 <= alpha <= 4, outside SE, and outside NE at alpha = 7/2.
Fixture h4_candidate(const Rational& alpha = Rational(7, 2));

} // namespace ncg
