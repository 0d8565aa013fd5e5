#pragma once

#include <cstdint>
#include <vector>

#include "pct/gt_graph.hpp"
#include "pct/triad.hpp"

namespace pct {

/// Tournament with the maximal number of inconsistent triads: vertex i
/// defeats j iff 0 < (j - i) mod n <= floor((n-1)/2); for even n the
/// antipodal pairs (i, i + n/2) go to the lower index. n = 6 and n = 7
/// reproduce the classic X and Y matrices.
GtGraph gen_max_tournament(std::size_t n);

/// True when the win counts are balanced: all equal r for n = 2r+1, and r
/// vertices with r and r with r-1 for n = 2r.
bool has_balanced_in_degrees(const GtGraph& tournament);

struct RebalanceResult {
  GtGraph graph;
  std::size_t steps = 0;
  std::size_t path_reversals = 0;  // steps that needed a path instead of one edge
  /// Inconsistent-triad count before the first step and after every step.
  std::vector<Count> trace;
};

/// Moves one win at a time from a vertex with too many to one with too few
/// until the in-degrees are balanced. Throws kNotATournament.
RebalanceResult rebalance_to_max(const GtGraph& tournament);

/// Double tournament: V1 = {0..floor(n/2)-1}, V2 = the rest, each carrying a
/// maximal tournament, all cross pairs tied.
struct DtGraph {
  GtGraph graph;
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;
};

DtGraph gen_max_dt_graph(std::size_t n);

/// Triads-cover instance: universe = all C(n,3) triads (lexicographic),
/// one candidate set per vertex pair (lexicographic) holding the n-2 triads
/// that contain it.
struct CoverInstance {
  std::size_t n = 0;
  std::vector<Triad> triads;
  std::vector<UndirectedEdge> pairs;
  std::vector<std::vector<std::size_t>> sets;  // triad indices per pair
};

CoverInstance build_cover_instance(std::size_t n);

enum class CoverMode { kGreedy, kExact };

struct CoverResult {
  std::vector<UndirectedEdge> edges;  // sorted
  std::size_t size = 0;
  bool proven_minimal = false;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kExactCoverMaxN = 8;

/// Greedy: repeatedly takes the pair covering the most uncovered triads
/// (lexicographic tie-break). Exact: depth-first branch and bound over the
/// three pairs of the first uncovered triad; throws kBudgetExceeded for
/// n > kExactCoverMaxN. Both throw kTooSmall for n < 3.
CoverResult min_triad_cover(std::size_t n, CoverMode mode, unsigned workers = 0);

bool covers_all_triads(std::size_t n, const std::vector<UndirectedEdge>& edges);

}  // namespace pct
