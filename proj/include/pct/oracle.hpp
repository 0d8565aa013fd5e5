#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pct/gt_graph.hpp"

namespace pct {

enum class Family { kTournament, kGtGraph };

std::string_view to_string(Family f);

/// Observed extremes over all visited graphs with exactly m directed edges.
struct PerMStats {
  Count m = 0;
  std::uint64_t graphs = 0;
  Count min_enforced = 0;    // CT2a + CT3
  Count min_tie_weight = 0;  // 3|T0| + |T1|
  Count min_t23 = 0;         // |T2,3|
  Count min_t0 = 0;          // |T0|
  Count max_inconsistent = 0;
};

struct EnumerationReport {
  std::size_t n = 0;
  Family family = Family::kGtGraph;
  std::uint64_t visited = 0;
  Count max_inconsistent = 0;
  GtGraph witness;
  std::vector<PerMStats> per_m;  // only m values that were visited, ascending
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples_per_m = 0;
};

struct EnumerateOptions {
  /// Unlocks tournaments at n = 7 and gt-graphs at n = 6.
  bool allow_large = false;
  unsigned workers = 0;  // 0: worker_count()
};

inline constexpr std::size_t kTournamentCertifyMaxN = 6;
inline constexpr std::size_t kTournamentLargeMaxN = 7;
inline constexpr std::size_t kGtCertifyMaxN = 5;
inline constexpr std::size_t kGtLargeMaxN = 6;

/// Visits every member of the family exactly once (2^C(n,2) tournaments or
/// 3^C(n,2) gt-graphs), without pruning. The witness is the first maximal
/// graph in lexicographic order of the pair relations. Throws
/// kBudgetExceeded beyond the limits above.
EnumerationReport enumerate_max(std::size_t n, Family family, EnumerateOptions options = {});

/// Number of relation assignments enumerate_max visits for (n, family).
std::uint64_t family_size(std::size_t n, Family family);

struct SampleOptions {
  std::uint64_t samples_per_m = 100000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  unsigned workers = 0;
};

inline constexpr std::size_t kSampleMaxN = 12;

/// Per-m observed minima. n <= 5: exhaustive over all gt-graphs (certified).
/// 6 <= n <= 12: seeded sampling, samples_per_m graphs per m (the minima are
/// then upper bounds on the true minima). Throws kBudgetExceeded above 12.
EnumerationReport per_m_minima(std::size_t n, SampleOptions options = {});

/// Directs m uniformly chosen pairs (each way with probability 1/2) and ties
/// the rest. Deterministic for a fixed seed (mt19937_64). Throws kMOutOfRange.
GtGraph random_gt_graph(std::size_t n, Count m, std::uint64_t seed);

/// A uniformly random tournament (deterministic for a fixed seed).
GtGraph random_tournament(std::size_t n, std::uint64_t seed);

/// Checks every per-m row against the lower bounds C, D, E, ceil(F) and the
/// upper bound H. Returns one message per violation.
std::vector<std::string> bound_violations(const EnumerationReport& report);

nlohmann::json to_json(const EnumerationReport& report);

}  // namespace pct
