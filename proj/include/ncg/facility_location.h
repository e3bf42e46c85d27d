#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncg/graph.h"

namespace ncg {

enum class FLObjective { Sum, MinMax };

std::string to_string(FLObjective objective);
FLObjective parse_fl_objective(std::string_view text);

// Uncapacitated facility location. Facility f serves client c at dist[f][c].
// In reduced instances facility i and client i are copies of the same vertex
// and their service distance is 1, not 0.
struct FLInstance {
  int facilities = 0;
  int clients = 0;
  std::vector<Rational> opening;
  std::vector<std::vector<ExtRational>> dist;
  FLObjective objective = FLObjective::Sum;

  // Throws DomainError on shape mismatches or negative values.
  void validate() const;
  bool is_zero_cost(int f) const { return opening[f] == Rational(0); }
  friend bool operator==(const FLInstance&, const FLInstance&) = default;
};

// d(f,c) <= d(f,c') + d(f',c') + d(f',c) over all finite quadruples, the
// triangle inequality as far as a facility-client matrix can express it.
bool is_metric(const FLInstance& inst);

struct FLSolution {
  std::vector<int> open;        // sorted facility ids
  std::vector<int> assignment;  // per client, the lowest-id nearest open facility
  ExtRational cost;
};

// Opening costs plus the sum (or maximum) of client service distances.
// Throws DomainError for an empty or out-of-range open set.
ExtRational umfl_cost(const FLInstance& inst, std::span<const int> open);

FLSolution make_solution(const FLInstance& inst, std::vector<int> open);

// Zero-cost facilities plus the single paid facility that is cheapest to add,
// or every facility when no such choice serves all clients finitely.
FLSolution initial_solution(const FLInstance& inst);

enum class FacilityMoveKind { Open, Close, Swap };

struct FacilityMove {
  FacilityMoveKind kind = FacilityMoveKind::Open;
  int facility = 0;     // opened, closed or swapped out
  int replacement = -1; // swapped in
};

std::string to_string(const FacilityMove& move);

// First strictly improving open / close / swap in the scan order opens, then
// closes, then swaps, each by ascending ids. Zero-cost facilities are never
// closed or swapped out.
std::optional<FacilityMove> first_improving_move(const FLInstance& inst,
                                                 std::span<const int> open);

std::vector<int> apply_facility_move(std::span<const int> open, const FacilityMove& move);

// First-improvement local search until no single move helps.
FLSolution local_search(const FLInstance& inst, const FLSolution& init);

// Exact optimum over open sets containing every zero-cost facility; ties go to
// fewer open facilities, then the lexicographically smallest set. Throws
// InstanceTooLarge above 20 facilities.
FLSolution brute_force_optimum(const FLInstance& inst);

// Links an agent's strategies to open sets of its reduced instance. Facility
// and client index i both stand for graph vertex vertex_of[i].
struct ReductionMap {
  Vertex agent = 0;
  std::vector<Vertex> vertex_of;
  std::vector<int> zero_set; // facility ids of the vertices owning an arc toward the agent

  int index_of(Vertex v) const;
  // The open set S + Z for a strategy S.
  std::vector<int> open_set(const Strategy& s) const;
  // The strategy of an open set: its vertices outside Z.
  Strategy strategy(std::span<const int> open) const;
};

struct Reduction {
  FLInstance instance;
  ReductionMap map;
};

// Removes the agent's own arcs to obtain G', then builds F = C = V - {agent},
// opening cost 0 on Z and alpha elsewhere, and d(i,j) = d_G'(i,j) + 1 (infinite
// when G' separates i and j). Sum maps to SUM, Max to MINMAX.
Reduction reduce(const OwnershipGraph& g, const GameConfig& cfg, Vertex agent);

} // namespace ncg
