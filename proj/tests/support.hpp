#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "pct/gt_graph.hpp"
#include "pct/pc_matrix.hpp"
#include "pct/triad.hpp"

namespace pct::testing {

using Raw = std::vector<std::vector<long long>>;

// Five alternatives, two of each relation kind mixed in.
inline const Raw kFiveAlternatives = {
    {0, 1, 0, 1, 0},
    {-1, 0, 1, 1, 1},
    {0, -1, 0, 1, -1},
    {-1, -1, -1, 0, 1},
    {0, -1, 1, -1, 0},
};

inline const Raw kMaxTournament6 = {
    {0, 1, 1, 1, -1, -1},
    {-1, 0, 1, 1, 1, -1},
    {-1, -1, 0, 1, 1, 1},
    {-1, -1, -1, 0, 1, 1},
    {1, -1, -1, -1, 0, 1},
    {1, 1, -1, -1, -1, 0},
};

inline const Raw kMaxTournament7 = {
    {0, 1, 1, 1, -1, -1, -1},
    {-1, 0, 1, 1, 1, -1, -1},
    {-1, -1, 0, 1, 1, 1, -1},
    {-1, -1, -1, 0, 1, 1, 1},
    {1, -1, -1, -1, 0, 1, 1},
    {1, 1, -1, -1, -1, 0, 1},
    {1, 1, 1, -1, -1, -1, 0},
};

inline GtGraph graph_of(const Raw& raw) { return matrix_to_graph(OrdinalPcMatrix::validate(raw)); }

// Two directed edges 1->2 and 3->4 (2 and 4 win), everything else tied.
inline GtGraph four_it1_graph() {
  const std::array<DirectedEdge, 2> d{{{0, 1}, {2, 3}}};
  const std::array<UndirectedEdge, 4> u{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
  return GtGraph::from_edges(4, d, u);
}

// Independent classification: reads wins/losses per vertex instead of the
// tie-position rule used by the library.
inline TriadClass reference_class(int ab, int ac, int bc) {
  const int directed = (ab != 0) + (ac != 0) + (bc != 0);
  const std::array<int, 3> wins = {(ab > 0) + (ac > 0), (ab < 0) + (bc > 0), (ac < 0) + (bc < 0)};
  const std::array<int, 3> losses = {(ab < 0) + (ac < 0), (ab > 0) + (bc < 0), (ac > 0) + (bc > 0)};
  if (directed == 0) return TriadClass::kCT0;
  if (directed == 1) return TriadClass::kIT1;
  if (directed == 3) {
    return wins[0] == 1 && wins[1] == 1 && wins[2] == 1 ? TriadClass::kIT3 : TriadClass::kCT3;
  }
  for (int v = 0; v < 3; ++v) {
    if (wins[v] == 2) return TriadClass::kCT2a;
    if (losses[v] == 2) return TriadClass::kCT2b;
  }
  return TriadClass::kIT2;
}

inline TriadCensus reference_census(const GtGraph& g) {
  TriadCensus c;
  const std::size_t n = g.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex d = b + 1; d < n; ++d)
        c.add(reference_class(g.outcome(a, b), g.outcome(a, d), g.outcome(b, d)));
  return c;
}

// Each pair independently: tie with probability tie_p, else a fair coin.
inline GtGraph random_graph(std::size_t n, double tie_p, std::mt19937_64& rng) {
  std::vector<std::int8_t> o(n * n, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int8_t v = 0;
      if (u(rng) >= tie_p) v = u(rng) < 0.5 ? 1 : -1;
      o[i * n + j] = v;
      o[j * n + i] = static_cast<std::int8_t>(-v);
    }
  return GtGraph::from_outcomes(n, std::move(o));
}

inline long long binom2(long long k) { return k * (k - 1) / 2; }

struct Minima {
  Count enforced = -1, tie_weight = -1, t23 = -1, t0 = -1, max_inconsistent = -1;
};

inline void take_min(Count& slot, Count v) { slot = slot < 0 ? v : std::min(slot, v); }

// Every gt-graph on n vertices with exactly m directed pairs, by choosing the
// directed pairs and then each orientation.
inline Minima brute_force_minima(std::size_t n, std::size_t m) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<bool> chosen(pairs.size(), false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<long>(m), true);
  Minima out;
  do {
    std::vector<std::size_t> idx;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (chosen[p]) idx.push_back(p);
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
      std::vector<std::int8_t> o(n * n, 0);
      for (std::size_t k = 0; k < m; ++k) {
        const auto [i, j] = pairs[idx[k]];
        const std::int8_t v = (bits >> k) & 1 ? 1 : -1;
        o[i * n + j] = v;
        o[j * n + i] = static_cast<std::int8_t>(-v);
      }
      const TriadCensus c = testing::reference_census(GtGraph::from_outcomes(n, o));
      take_min(out.enforced, c.enforced_consistent());
      take_min(out.tie_weight, 3 * c.t0() + c.t1());
      take_min(out.t23, c.t23());
      take_min(out.t0, c.t0());
      out.max_inconsistent = std::max(out.max_inconsistent, c.inconsistent_total());
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

}  // namespace pct::testing
