#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncg/graph.h"
#include "ncg/response.h"

namespace ncg {

// GE: no improving single buy/delete/swap of an own edge.
// NE: no improving strategy at all.
// SE: no improving swap of any incident edge, edge costs ignored.
// ASE: as SE, restricted to own edges.
enum class Concept { GE, NE, SE, ASE };

std::string to_string(Concept c);
Concept parse_concept(std::string_view text);

struct Violation {
  Vertex agent = 0;
  // A single move for GE, SE and ASE (SE swaps may involve an edge the
  // agent does not own); a full strategy for NE.
  std::variant<Move, Strategy> change;
  // Costs under the concept's cost function: SE and ASE carry a zero edge
  // part since those games ignore edge prices.
  Cost before;
  Cost after;

  ExtRational improvement() const { return difference(before.total(), after.total()); }
};

struct EquilibriumReport {
  Concept solution_concept = Concept::GE;
  bool holds = true;
  // At most one entry per agent, in agent order.
  std::vector<Violation> violations;
};

EquilibriumReport check(const OwnershipGraph& g, const GameConfig& cfg, Concept c,
                        const SearchOptions& options = {});

// Re-applies a reported violation and confirms it strictly lowers the agent's
// cost to exactly the reported value.
bool revalidate(const OwnershipGraph& g, const GameConfig& cfg, Concept c,
                const Violation& violation);

// Graph after the violating agent performs its change.
OwnershipGraph apply_violation(const OwnershipGraph& g, Concept c,
                               const Violation& violation);

struct SumTreeCertificate {
  bool ge_and_ne = false;
  std::optional<Violation> violation; // set when not in GE
};

// Tree instances of the Sum game that are in GE are also in NE, so passing
// the greedy check certifies Nash stability without a best-response search.
SumTreeCertificate sum_tree_certify(const OwnershipGraph& t, const GameConfig& cfg);

struct MultiSwap {
  Vertex agent = 0;
  std::vector<std::pair<Vertex, Vertex>> rewires; // (old target, new target)
  Strategy strategy;
  Cost before;
  Cost after;
};

enum class MaxTreeVerdictKind { NE, CheapStar, BadlyConnectedTree, NotGE };

std::string to_string(MaxTreeVerdictKind kind);

struct MaxTreeVerdict {
  MaxTreeVerdictKind kind = MaxTreeVerdictKind::NE;
  std::optional<Violation> violation;   // NotGE
  std::optional<Violation> multi_buy;   // CheapStar: a leaf buying all non-neighbours
  std::optional<MultiSwap> multi_swap;  // BadlyConnectedTree
};

// Decides Nash stability of a Max tree in polynomial time: a tree in GE is
// in NE unless it is a cheap star or admits an improving multi-swap.
MaxTreeVerdict max_tree_is_ne(const OwnershipGraph& t, const GameConfig& cfg);

// Star with n >= 4 and alpha < 1/(n-2).
bool detect_cheap_star(const OwnershipGraph& t, const GameConfig& cfg);

// For the lowest-id agent that can shorten its eccentricity by rewiring each
// owned arc into a far subtree to that subtree's 1-center, the rewiring.
// Throws NotATree, or NotGreedyEquilibrium when t is not in Max-GE.
std::optional<MultiSwap> detect_badly_connected(const OwnershipGraph& t,
                                                const GameConfig& cfg);

} // namespace ncg
