#include "pct/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "pct/bounds.hpp"
#include "pct/error.hpp"
#include "pct/indices.hpp"
#include "pct/io.hpp"
#include "pct/parallel.hpp"
#include "pct/triad.hpp"

namespace pct {
namespace {

constexpr Count kUnset = std::numeric_limits<Count>::max();

// Pair relations are stored in lexicographic pair order as the outcome from
// the lower vertex: +1 lower wins, -1 higher wins, 0 tie.
struct PairLayout {
  std::size_t n = 0;
  std::vector<std::array<std::uint16_t, 3>> triads;  // (ab, ac, bc) pair slots
  std::vector<std::array<Vertex, 2>> pairs;

  explicit PairLayout(std::size_t n_) : n(n_) {
    std::vector<std::uint16_t> slot(n * n, 0);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        slot[a * n + b] = static_cast<std::uint16_t>(pairs.size());
        pairs.push_back({a, b});
      }
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          triads.push_back({slot[a * n + b], slot[a * n + c], slot[b * n + c]});
  }

  GtGraph to_graph(const std::vector<std::int8_t>& rel) const {
    std::vector<std::int8_t> out(n * n, 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [a, b] = pairs[p];
      out[a * n + b] = rel[p];
      out[b * n + a] = static_cast<std::int8_t>(-rel[p]);
    }
    return GtGraph::from_outcomes(n, std::move(out));
  }
};

struct Tally {
  Count enforced = 0, tie_weight = 0, t23 = 0, t0 = 0, inconsistent = 0;
};

const std::array<TriadClass, 27>& class_table() {
  static const std::array<TriadClass, 27> table = [] {
    std::array<TriadClass, 27> t{};
    for (int code = 0; code < 27; ++code)
      t[code] = classify_outcomes(code / 9 - 1, (code / 3) % 3 - 1, code % 3 - 1);
    return t;
  }();
  return table;
}

Tally tally(const PairLayout& layout, const std::int8_t* rel) {
  std::array<Count, 27> hist{};
  for (const auto& t : layout.triads) ++hist[9 * (rel[t[0]] + 1) + 3 * (rel[t[1]] + 1) + (rel[t[2]] + 1)];
  TriadCensus c;
  const auto& table = class_table();
  for (int code = 0; code < 27; ++code)
    if (hist[code]) c.add(table[code], hist[code]);
  return {c.enforced_consistent(), 3 * c.t0() + c.t1(), c.t23(), c.t0(), c.inconsistent_total()};
}

struct Accumulator {
  std::uint64_t visited = 0;
  Count best = -1;
  std::vector<std::int8_t> witness;
  std::vector<PerMStats> per_m;  // indexed by m

  explicit Accumulator(std::size_t pairs) : per_m(pairs + 1) {
    for (std::size_t m = 0; m <= pairs; ++m) {
      per_m[m].m = static_cast<Count>(m);
      per_m[m].min_enforced = per_m[m].min_tie_weight = per_m[m].min_t23 = per_m[m].min_t0 =
          kUnset;
      per_m[m].max_inconsistent = -1;
    }
  }

  void add(const std::vector<std::int8_t>& rel, std::size_t m, const Tally& t) {
    ++visited;
    PerMStats& s = per_m[m];
    ++s.graphs;
    s.min_enforced = std::min(s.min_enforced, t.enforced);
    s.min_tie_weight = std::min(s.min_tie_weight, t.tie_weight);
    s.min_t23 = std::min(s.min_t23, t.t23);
    s.min_t0 = std::min(s.min_t0, t.t0);
    s.max_inconsistent = std::max(s.max_inconsistent, t.inconsistent);
    if (t.inconsistent > best) {
      best = t.inconsistent;
      witness = rel;
    }
  }

  // `later` covers graphs after this accumulator's in enumeration order.
  void merge(const Accumulator& later) {
    visited += later.visited;
    if (later.best > best) {
      best = later.best;
      witness = later.witness;
    }
    for (std::size_t m = 0; m < per_m.size(); ++m) {
      PerMStats& s = per_m[m];
      const PerMStats& o = later.per_m[m];
      s.graphs += o.graphs;
      s.min_enforced = std::min(s.min_enforced, o.min_enforced);
      s.min_tie_weight = std::min(s.min_tie_weight, o.min_tie_weight);
      s.min_t23 = std::min(s.min_t23, o.min_t23);
      s.min_t0 = std::min(s.min_t0, o.min_t0);
      s.max_inconsistent = std::max(s.max_inconsistent, o.max_inconsistent);
    }
  }
};

EnumerationReport finish(const PairLayout& layout, Family family, Accumulator acc) {
  EnumerationReport r;
  r.n = layout.n;
  r.family = family;
  r.visited = acc.visited;
  r.max_inconsistent = acc.best;
  r.witness = layout.to_graph(acc.witness);
  for (const PerMStats& s : acc.per_m)
    if (s.graphs > 0) r.per_m.push_back(s);
  return r;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Digit d of a relation: gt-graphs use {0 tie, 1 lower wins, 2 higher wins},
// tournaments only {1, 2}.
constexpr std::array<std::int8_t, 3> kDigitOutcome = {0, 1, -1};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased integer in [0, bound) by rejection on raw mt19937_64 output, so
// streams are identical across standard library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Fills rel (one slot per pair) with m directed pairs chosen uniformly.
void sample_relations(std::mt19937_64& rng, std::size_t m, std::vector<std::uint16_t>& order,
                      std::vector<std::int8_t>& rel) {
  std::iota(order.begin(), order.end(), std::uint16_t{0});
  std::fill(rel.begin(), rel.end(), std::int8_t{0});
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(bounded(rng, order.size() - k));
    std::swap(order[k], order[pick]);
    rel[order[k]] = (rng() >> 63) ? std::int8_t{1} : std::int8_t{-1};
  }
}

}  // namespace

std::string_view to_string(Family f) {
  return f == Family::kTournament ? "tournament" : "gt-graph";
}

std::uint64_t family_size(std::size_t n, Family family) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  return ipow(family == Family::kTournament ? 2 : 3, pairs);
}

EnumerationReport enumerate_max(std::size_t n, Family family, EnumerateOptions options) {
  const std::size_t limit =
      family == Family::kTournament
          ? (options.allow_large ? kTournamentLargeMaxN : kTournamentCertifyMaxN)
          : (options.allow_large ? kGtLargeMaxN : kGtCertifyMaxN);
  if (n > limit) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive " + std::string(to_string(family)) + " enumeration is limited to n <= " +
                    std::to_string(limit) + (options.allow_large ? "" : " without the large flag") +
                    ", got " + std::to_string(n));
  }
  const PairLayout layout(n);
  const std::size_t pairs = layout.pairs.size();
  const int first_digit = family == Family::kTournament ? 1 : 0;
  const std::uint64_t base = family == Family::kTournament ? 2 : 3;

  const unsigned workers = options.workers == 0 ? worker_count() : options.workers;
  // Fix a prefix of the relation digits; each prefix value is one partition.
  std::size_t prefix = 0;
  while (prefix < pairs && ipow(base, prefix) < 8ULL * workers) ++prefix;
  const std::uint64_t partitions = ipow(base, prefix);

  std::vector<Accumulator> parts(partitions, Accumulator(pairs));
  parallel_for(partitions, workers, [&](std::size_t part) {
    Accumulator& acc = parts[part];
    std::vector<int> digit(pairs, first_digit);
    std::uint64_t code = part;
    for (std::size_t k = prefix; k-- > 0;) {
      digit[k] = first_digit + static_cast<int>(code % base);
      code /= base;
    }
    std::vector<std::int8_t> rel(pairs);
    std::size_t m = 0;
    for (std::size_t p = 0; p < pairs; ++p) {
      rel[p] = kDigitOutcome[digit[p]];
      m += rel[p] != 0;
    }
    const int last_digit = first_digit + static_cast<int>(base) - 1;
    while (true) {
      acc.add(rel, m, tally(layout, rel.data()));
      // Odometer over the free (non-prefix) digits, last pair fastest.
      std::size_t p = pairs;
      while (p > prefix && digit[p - 1] == last_digit) {
        --p;
        m -= rel[p] != 0;
        digit[p] = first_digit;
        rel[p] = kDigitOutcome[first_digit];
        m += rel[p] != 0;
      }
      if (p == prefix) break;
      --p;
      m -= rel[p] != 0;
      ++digit[p];
      rel[p] = kDigitOutcome[digit[p]];
      m += rel[p] != 0;
    }
  });
  Accumulator total = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) total.merge(parts[i]);
  return finish(layout, family, std::move(total));
}

EnumerationReport per_m_minima(std::size_t n, SampleOptions options) {
  if (n <= kGtCertifyMaxN) {
    return enumerate_max(n, Family::kGtGraph, {.allow_large = false, .workers = options.workers});
  }
  if (n > kSampleMaxN) {
    throw Error(ErrorCode::kBudgetExceeded, "per-m sampling is limited to n <= " +
                                                std::to_string(kSampleMaxN) + ", got " +
                                                std::to_string(n));
  }
  const PairLayout layout(n);
  const std::size_t pairs = layout.pairs.size();
  const unsigned workers = options.workers == 0 ? worker_count() : options.workers;

  // One independent stream per m keeps results independent of scheduling.
  std::vector<Accumulator> parts(pairs + 1, Accumulator(pairs));
  parallel_for(pairs + 1, workers, [&](std::size_t m) {
    std::mt19937_64 rng(splitmix64(options.seed ^ (std::uint64_t{n} << 32) ^ m));
    std::vector<std::uint16_t> order(pairs);
    std::vector<std::int8_t> rel(pairs);
    for (std::uint64_t s = 0; s < options.samples_per_m; ++s) {
      sample_relations(rng, m, order, rel);
      parts[m].add(rel, m, tally(layout, rel.data()));
    }
  });
  Accumulator total = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) total.merge(parts[i]);
  EnumerationReport r = finish(layout, Family::kGtGraph, std::move(total));
  r.exhaustive = false;
  r.seed = options.seed;
  r.samples_per_m = options.samples_per_m;
  return r;
}

GtGraph random_gt_graph(std::size_t n, Count m, std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m < 0 || static_cast<std::size_t>(m) > pairs) {
    throw Error(ErrorCode::kMOutOfRange, "m = " + std::to_string(m) + " outside [0, " +
                                             std::to_string(pairs) + "]");
  }
  std::vector<std::array<Vertex, 2>> endpoints;
  endpoints.reserve(pairs);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) endpoints.push_back({a, b});
  // Partial Fisher-Yates: the first m slots become the directed pairs.
  std::mt19937_64 rng(seed);
  std::vector<std::int8_t> out(n * n, 0);
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(bounded(rng, pairs - k));
    std::swap(endpoints[k], endpoints[pick]);
    const auto [a, b] = endpoints[k];
    const std::int8_t v = (rng() >> 63) ? std::int8_t{1} : std::int8_t{-1};
    out[a * n + b] = v;
    out[b * n + a] = static_cast<std::int8_t>(-v);
  }
  return GtGraph::from_outcomes(n, std::move(out));
}

GtGraph random_tournament(std::size_t n, std::uint64_t seed) {
  return random_gt_graph(n, static_cast<Count>(n < 2 ? 0 : n * (n - 1) / 2), seed);
}

std::vector<std::string> bound_violations(const EnumerationReport& report) {
  std::vector<std::string> out;
  const Count n = static_cast<Count>(report.n);
  if (n < 3) return out;
  auto fail = [&](const PerMStats& s, const std::string& what) {
    out.push_back("n=" + std::to_string(n) + " m=" + std::to_string(s.m) + ": " + what);
  };
  for (const PerMStats& s : report.per_m) {
    const Count c = c_bound(n, s.m);
    const Count d = d_bound(n, s.m);
    const Rational e = e_bound(n, s.m);
    const Count f = f_bound_clamped(n, s.m);
    const Count h = h_bound(n, s.m);
    if (s.min_enforced < c)
      fail(s, "CT2a+CT3 = " + std::to_string(s.min_enforced) + " < C = " + std::to_string(c));
    if (s.min_tie_weight < d)
      fail(s, "3|T0|+|T1| = " + std::to_string(s.min_tie_weight) + " < D = " + std::to_string(d));
    if (Rational(s.min_t23) < e)
      fail(s, "|T2,3| = " + std::to_string(s.min_t23) + " < E = " + e.to_string());
    if (s.min_t0 < f)
      fail(s, "|T0| = " + std::to_string(s.min_t0) + " < max(0,ceil F) = " + std::to_string(f));
    if (s.max_inconsistent > h)
      fail(s, "inconsistent = " + std::to_string(s.max_inconsistent) + " > H = " +
                  std::to_string(h));
  }
  return out;
}

nlohmann::json to_json(const EnumerationReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["family"] = std::string(to_string(r.family));
  j["visited"] = r.visited;
  j["max"] = r.max_inconsistent;
  j["exhaustive"] = r.exhaustive;
  nlohmann::json edges = nlohmann::json::array();
  for (const std::string& line : edge_list_lines(r.witness)) edges.push_back(line);
  j["witness_edges"] = edges;
  nlohmann::json per_m = nlohmann::json::array();
  for (const PerMStats& s : r.per_m) {
    per_m.push_back({{"m", s.m},
                     {"graphs", s.graphs},
                     {"min_ct2a_ct3", s.min_enforced},
                     {"min_3t0_plus_t1", s.min_tie_weight},
                     {"min_t23", s.min_t23},
                     {"min_t0", s.min_t0},
                     {"max_inconsistent", s.max_inconsistent}});
  }
  j["per_m"] = per_m;
  if (r.seed) {
    j["seed"] = *r.seed;
    j["samples_per_m"] = r.samples_per_m;
  }
  return j;
}

}  // namespace pct
