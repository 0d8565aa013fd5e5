#pragma once

#include "pct/gt_graph.hpp"
#include "pct/pc_matrix.hpp"
#include "pct/rational.hpp"
#include "pct/triad.hpp"

namespace pct {

Count choose2(Count n);
Count choose3(Count n);

/// I(n): most inconsistent triads a tie-free comparison set of size n can
/// have; (n^3 - n)/24 for odd n, (n^3 - 4n)/24 for even n.
Count max_inconsistent_no_ties(Count n);

/// Y(n): the same maximum when ties are allowed, from the four-case closed
/// form in n mod 4.
Count max_inconsistent_with_ties(Count n);

/// Y(n) from its binomial definition: C(n,3) minus the consistent triads of
/// the two maximal sub-tournaments of sizes floor(n/2) and ceil(n/2).
Count max_inconsistent_with_ties_binomial(Count n);

/// X(n) = C(floor(n/2),2) + C(ceil(n/2),2), the directed-edge count of the
/// maximal double tournament.
Count dt_edge_count(Count n);

/// Number of inconsistent triads. Tournaments take the O(n^2) degree path,
/// everything else a full O(n^3) census.
Count count_inconsistent(const GtGraph& g);

/// C(n,3) - sum_v C(deg_in(v), 2); throws kNotATournament on any tie.
Count count_inconsistent_tournament_fast(const GtGraph& g);

struct AnalyzeOptions {
  /// Use Y(n) even when the input has no ties.
  bool with_ties_denominator = false;
};

/// Index values are exact. `zeta` is the consistency coefficient
/// 1 - inconsistent/max_possible: it is 1 for a fully consistent input and 0
/// at the maximum. `inconsistency_ratio` is the complement.
struct IndexReport {
  std::size_t n = 0;
  Count inconsistent_count = 0;
  Count max_possible = 0;  // I(n) or Y(n)
  Count total_triads = 0;
  Rational zeta;
  Rational inconsistency_ratio;
  Rational eta;
  bool used_ties = false;  // true: zeta_g with Y(n); false: zeta with I(n)
  bool is_tournament = false;
  TriadCensus census;
};

/// Throws kTooSmall for n < 3, where no triads exist and the indices are
/// undefined.
IndexReport analyze(const GtGraph& g, AnalyzeOptions options = {});
IndexReport analyze(const OrdinalPcMatrix& m, AnalyzeOptions options = {});

struct EtaLimits {
  Rational no_ties;    // I(n) / C(n,3)
  Rational with_ties;  // Y(n) / C(n,3)
};

EtaLimits eta_limits(Count n);

}  // namespace pct
