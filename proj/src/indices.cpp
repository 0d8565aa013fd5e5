#include "pct/indices.hpp"

#include <string>

#include "pct/error.hpp"

namespace pct {

Count choose2(Count n) { return n < 2 ? 0 : static_cast<Count>(Wide(n) * (n - 1) / 2); }

Count choose3(Count n) {
  return n < 3 ? 0 : static_cast<Count>(Wide(n) * (n - 1) * (n - 2) / 6);
}

Count max_inconsistent_no_ties(Count n) {
  if (n < 3) return 0;
  const Wide w = n;
  return static_cast<Count>((n % 2 ? w * w * w - w : w * w * w - 4 * w) / 24);
}

Count max_inconsistent_with_ties(Count n) {
  if (n < 3) return 0;
  const Wide w = n;
  const Wide base = 13 * w * w * w - 24 * w * w;
  Wide num = 0;
  switch (n % 4) {
    case 0: num = base - 16 * w; break;
    case 1: num = base - 19 * w + 30; break;
    case 2: num = base - 4 * w; break;
    default: num = base - 19 * w + 18; break;
  }
  return static_cast<Count>(num / 96);
}

Count max_inconsistent_with_ties_binomial(Count n) {
  if (n < 3) return 0;
  const Count lo = n / 2, hi = n - n / 2;
  return choose3(n) - (choose3(lo) - max_inconsistent_no_ties(lo)) -
         (choose3(hi) - max_inconsistent_no_ties(hi));
}

Count dt_edge_count(Count n) { return choose2(n / 2) + choose2(n - n / 2); }

Count count_inconsistent_tournament_fast(const GtGraph& g) {
  if (!g.is_tournament()) {
    throw Error(ErrorCode::kNotATournament,
                "graph has " + std::to_string(g.undirected_count()) + " ties");
  }
  const std::size_t n = g.size();
  const auto out = g.outcomes();
  Count consistent = 0;
  for (std::size_t v = 0; v < n; ++v) {
    Count wins = 0;
    const std::int8_t* row = out.data() + v * n;
    for (std::size_t u = 0; u < n; ++u) wins += row[u] > 0;
    consistent += choose2(wins);
  }
  return choose3(static_cast<Count>(n)) - consistent;
}

Count count_inconsistent(const GtGraph& g) {
  if (g.is_tournament()) return count_inconsistent_tournament_fast(g);
  return triad_census(g).inconsistent_total();
}

IndexReport analyze(const GtGraph& g, AnalyzeOptions options) {
  const std::size_t n = g.size();
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall, "indices need at least 3 alternatives, got " +
                                          std::to_string(n));
  }
  IndexReport r;
  r.n = n;
  r.census = triad_census(g);
  r.is_tournament = g.is_tournament();
  r.inconsistent_count = r.census.inconsistent_total();
  r.total_triads = r.census.total();
  r.used_ties = !r.is_tournament || options.with_ties_denominator;
  const Count cn = static_cast<Count>(n);
  r.max_possible = r.used_ties ? max_inconsistent_with_ties(cn) : max_inconsistent_no_ties(cn);
  r.inconsistency_ratio = Rational(r.inconsistent_count, r.max_possible);
  r.zeta = Rational(1) - r.inconsistency_ratio;
  r.eta = Rational(r.inconsistent_count, r.total_triads);
  return r;
}

IndexReport analyze(const OrdinalPcMatrix& m, AnalyzeOptions options) {
  return analyze(matrix_to_graph(m), options);
}

EtaLimits eta_limits(Count n) {
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall, "eta limits need n >= 3, got " + std::to_string(n));
  }
  const Count total = choose3(n);
  return {Rational(max_inconsistent_no_ties(n), total),
          Rational(max_inconsistent_with_ties(n), total)};
}

}  // namespace pct
