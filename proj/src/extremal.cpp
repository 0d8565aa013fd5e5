#include "pct/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <string>

#include "pct/error.hpp"
#include "pct/indices.hpp"
#include "pct/parallel.hpp"

namespace pct {
namespace {

std::vector<std::int8_t> max_tournament_outcomes(std::size_t n) {
  std::vector<std::int8_t> out(n * n, 0);
  const std::size_t reach = n == 0 ? 0 : (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t ahead = (j + n - i) % n;
      int o;
      if (ahead <= reach) {
        o = 1;
      } else if (n - ahead <= reach) {
        o = -1;
      } else {
        o = i < j ? 1 : -1;  // antipode, even n only
      }
      out[i * n + j] = static_cast<std::int8_t>(o);
    }
  }
  return out;
}

std::vector<Count> win_counts(std::size_t n, const std::vector<std::int8_t>& out) {
  std::vector<Count> wins(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) wins[v] += out[v * n + u] > 0;
  return wins;
}

Count fast_count(std::size_t n, const std::vector<Count>& wins) {
  Count consistent = 0;
  for (Count w : wins) consistent += choose2(w);
  return choose3(static_cast<Count>(n)) - consistent;
}

void set_winner(std::vector<std::int8_t>& out, std::size_t n, Vertex winner, Vertex loser) {
  out[winner * n + loser] = 1;
  out[loser * n + winner] = -1;
}

// Shortest path low -> ... -> high along "is defeated by" arcs, i.e. each
// next vertex defeats the previous one. Exists whenever wins(high) >=
// wins(low) + 2.
std::vector<Vertex> defeat_path(std::size_t n, const std::vector<std::int8_t>& out, Vertex low,
                                Vertex high) {
  std::vector<Vertex> parent(n, n);
  std::deque<Vertex> queue{low};
  parent[low] = low;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == high) break;
    for (Vertex y = 0; y < n; ++y) {
      if (parent[y] == n && out[y * n + x] > 0) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> path;
  if (parent[high] == n) return path;
  for (Vertex v = high; v != low; v = parent[v]) path.push_back(v);
  path.push_back(low);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

GtGraph gen_max_tournament(std::size_t n) {
  return GtGraph::from_outcomes(n, max_tournament_outcomes(n));
}

bool has_balanced_in_degrees(const GtGraph& t) {
  if (!t.is_tournament()) return false;
  const std::size_t n = t.size();
  if (n == 0) return true;
  std::vector<Count> wins(n, 0);
  for (Vertex v = 0; v < n; ++v) wins[v] = static_cast<Count>(degrees(t, v).deg_in);
  const auto [lo, hi] = std::minmax_element(wins.begin(), wins.end());
  return *hi - *lo <= 1;
}

RebalanceResult rebalance_to_max(const GtGraph& tournament) {
  if (!tournament.is_tournament()) {
    throw Error(ErrorCode::kNotATournament,
                "rebalancing needs a tournament; graph has " +
                    std::to_string(tournament.undirected_count()) + " ties");
  }
  const std::size_t n = tournament.size();
  std::vector<std::int8_t> out(tournament.outcomes().begin(), tournament.outcomes().end());
  std::vector<Count> wins = win_counts(n, out);

  RebalanceResult result;
  result.trace.push_back(fast_count(n, wins));
  while (n > 0) {
    // Highest win count, lowest index on ties.
    Vertex high = 0;
    for (Vertex v = 1; v < n; ++v)
      if (wins[v] > wins[high]) high = v;
    Vertex low = 0;
    for (Vertex v = 1; v < n; ++v)
      if (wins[v] < wins[low]) low = v;
    if (wins[high] - wins[low] <= 1) break;

    // Prefer a single edge low' -> high whose flip moves one win from high to
    // the weakest such low' (at least two wins below high).
    Vertex partner = n;
    for (Vertex u = 0; u < n; ++u) {
      if (out[high * n + u] > 0 && wins[u] + 2 <= wins[high] &&
          (partner == n || wins[u] < wins[partner])) {
        partner = u;
      }
    }
    if (partner != n) {
      set_winner(out, n, partner, high);
      --wins[high];
      ++wins[partner];
    } else {
      // Reverse a path of defeats; only the endpoints change win counts.
      std::vector<Vertex> path = defeat_path(n, out, low, high);
      if (path.size() < 2) throw std::logic_error("rebalance: no defeat path");
      for (std::size_t k = 0; k + 1 < path.size(); ++k) set_winner(out, n, path[k], path[k + 1]);
      --wins[high];
      ++wins[low];
      ++result.path_reversals;
    }
    ++result.steps;
    result.trace.push_back(fast_count(n, wins));
  }
  result.graph = GtGraph::from_outcomes(n, std::move(out));
  return result;
}

DtGraph gen_max_dt_graph(std::size_t n) {
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  const auto a = max_tournament_outcomes(lo);
  const auto b = max_tournament_outcomes(hi);
  std::vector<std::int8_t> out(n * n, 0);
  for (std::size_t i = 0; i < lo; ++i)
    for (std::size_t j = 0; j < lo; ++j) out[i * n + j] = a[i * lo + j];
  for (std::size_t i = 0; i < hi; ++i)
    for (std::size_t j = 0; j < hi; ++j) out[(lo + i) * n + (lo + j)] = b[i * hi + j];
  DtGraph dt;
  dt.graph = GtGraph::from_outcomes(n, std::move(out));
  for (Vertex v = 0; v < n; ++v) (v < lo ? dt.part1 : dt.part2).push_back(v);
  return dt;
}

CoverInstance build_cover_instance(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall, "triads cover needs n >= 3, got " + std::to_string(n));
  }
  CoverInstance inst;
  inst.n = n;
  std::vector<std::size_t> pair_index(n * n, 0);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      pair_index[a * n + b] = inst.pairs.size();
      inst.pairs.push_back({a, b});
    }
  inst.sets.resize(inst.pairs.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const std::size_t t = inst.triads.size();
        inst.triads.push_back({a, b, c});
        inst.sets[pair_index[a * n + b]].push_back(t);
        inst.sets[pair_index[a * n + c]].push_back(t);
        inst.sets[pair_index[b * n + c]].push_back(t);
      }
  return inst;
}

bool covers_all_triads(std::size_t n, const std::vector<UndirectedEdge>& edges) {
  std::vector<bool> chosen(n * n, false);
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n) return false;
    chosen[e.a * n + e.b] = chosen[e.b * n + e.a] = true;
  }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (!chosen[a * n + b] && !chosen[a * n + c] && !chosen[b * n + c]) return false;
  return true;
}

namespace {

CoverResult greedy_cover(const CoverInstance& inst) {
  std::vector<bool> covered(inst.triads.size(), false);
  std::vector<bool> taken(inst.pairs.size(), false);
  std::size_t remaining = inst.triads.size();
  CoverResult r;
  while (remaining > 0) {
    std::size_t best = inst.pairs.size();
    std::size_t best_gain = 0;
    for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
      if (taken[p]) continue;
      std::size_t gain = 0;
      for (std::size_t t : inst.sets[p]) gain += !covered[t];
      if (gain > best_gain) {
        best_gain = gain;
        best = p;
      }
    }
    taken[best] = true;
    for (std::size_t t : inst.sets[best]) covered[t] = true;
    remaining -= best_gain;
    r.edges.push_back(inst.pairs[best]);
  }
  std::sort(r.edges.begin(), r.edges.end());
  r.size = r.edges.size();
  return r;
}

// Bitmask branch and bound; n <= 8 keeps the universe within 64 bits.
class ExactCoverSearch {
 public:
  explicit ExactCoverSearch(const CoverInstance& inst) : inst_(inst) {
    pair_mask_.assign(inst.pairs.size(), 0);
    triad_pairs_.assign(inst.triads.size(), {});
    std::vector<int> filled(inst.triads.size(), 0);
    for (std::size_t p = 0; p < inst.pairs.size(); ++p)
      for (std::size_t t : inst.sets[p]) {
        pair_mask_[p] |= std::uint64_t{1} << t;
        triad_pairs_[t][filled[t]++] = static_cast<std::uint8_t>(p);
      }
    full_ = inst.triads.size() == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << inst.triads.size()) - 1;
    per_pair_ = inst.n - 2;
  }

  // Smallest cover size strictly below `upper`, or `upper` if none exists.
  std::size_t minimum_below(std::size_t upper, unsigned workers) {
    best_.store(upper);
    // Symmetry: the first triad {0,1,2} is covered by one of its pairs and
    // all three are equivalent under relabeling, so only {0,1} is tried.
    struct Node {
      std::uint64_t uncovered;
      std::size_t depth;
    };
    std::vector<Node> frontier{{full_ & ~pair_mask_[triad_pairs_[0][0]], 1}};
    for (int level = 0; level < 3; ++level) {
      std::vector<Node> next;
      for (const Node& node : frontier) {
        if (node.uncovered == 0) {
          next.push_back(node);
          continue;
        }
        const auto t = static_cast<std::size_t>(std::countr_zero(node.uncovered));
        for (std::uint8_t p : triad_pairs_[t])
          next.push_back({node.uncovered & ~pair_mask_[p], node.depth + 1});
      }
      frontier = std::move(next);
    }
    parallel_for(frontier.size(), workers == 0 ? worker_count() : workers,
                 [&](std::size_t i) { search(frontier[i].uncovered, frontier[i].depth); });
    return best_.load();
  }

  // First cover of exactly `size` pairs in depth-first order.
  std::vector<UndirectedEdge> witness(std::size_t size) {
    std::vector<std::size_t> chosen;
    if (!find(full_, size, chosen)) return {};
    std::vector<UndirectedEdge> edges;
    for (std::size_t p : chosen) edges.push_back(inst_.pairs[p]);
    std::sort(edges.begin(), edges.end());
    return edges;
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::size_t lower_bound(std::uint64_t uncovered) const {
    const auto left = static_cast<std::size_t>(std::popcount(uncovered));
    return (left + per_pair_ - 1) / per_pair_;
  }

  void search(std::uint64_t uncovered, std::size_t depth) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    if (uncovered == 0) {
      // Incumbent only shrinks.
      std::size_t current = best_.load();
      while (depth < current && !best_.compare_exchange_weak(current, depth)) {
      }
      return;
    }
    if (depth + lower_bound(uncovered) >= best_.load(std::memory_order_relaxed)) return;
    const auto t = static_cast<std::size_t>(std::countr_zero(uncovered));
    for (std::uint8_t p : triad_pairs_[t]) search(uncovered & ~pair_mask_[p], depth + 1);
  }

  bool find(std::uint64_t uncovered, std::size_t budget, std::vector<std::size_t>& chosen) {
    if (uncovered == 0) return true;
    if (budget == 0 || lower_bound(uncovered) > budget) return false;
    const auto t = static_cast<std::size_t>(std::countr_zero(uncovered));
    for (std::uint8_t p : triad_pairs_[t]) {
      chosen.push_back(p);
      if (find(uncovered & ~pair_mask_[p], budget - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const CoverInstance& inst_;
  std::vector<std::uint64_t> pair_mask_;
  std::vector<std::array<std::uint8_t, 3>> triad_pairs_;
  std::uint64_t full_ = 0;
  std::size_t per_pair_ = 1;
  std::atomic<std::size_t> best_{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes_{0};
};

}  // namespace

CoverResult min_triad_cover(std::size_t n, CoverMode mode, unsigned workers) {
  if (mode == CoverMode::kExact && n > kExactCoverMaxN) {
    throw Error(ErrorCode::kBudgetExceeded, "exact triads cover is limited to n <= " +
                                                std::to_string(kExactCoverMaxN) + ", got " +
                                                std::to_string(n));
  }
  const CoverInstance inst = build_cover_instance(n);
  CoverResult greedy = greedy_cover(inst);
  if (mode == CoverMode::kGreedy) return greedy;

  ExactCoverSearch search(inst);
  const std::size_t best = search.minimum_below(greedy.size, workers);
  CoverResult r;
  r.size = best;
  r.edges = best < greedy.size ? search.witness(best) : search.witness(greedy.size);
  r.proven_minimal = true;
  r.nodes_explored = search.nodes();
  return r;
}

}  // namespace pct
