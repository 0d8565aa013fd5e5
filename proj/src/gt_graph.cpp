#include "pct/gt_graph.hpp"

#include <string>

#include "pct/error.hpp"

namespace pct {
namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Shared validation of dense row-major data; returns the first violation in
// row-major order.
void check_dense(std::size_t n, const std::vector<std::int8_t>& e) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int v = e[i * n + j];
      if (v < -1 || v > 1) {
        throw Error(ErrorCode::kEntryOutOfRange,
                    "entry " + std::to_string(v) + " at " + cell(i, j) +
                        " is not in {-1,0,1}",
                    Location{i, j});
      }
      if (i == j && v != 0) {
        throw Error(ErrorCode::kDiagonalNonZero,
                    "diagonal entry at " + cell(i, j) + " is not 0", Location{i, j});
      }
      if (i < j && v + e[j * n + i] != 0) {
        throw Error(ErrorCode::kNotSkewSymmetric,
                    "entries at " + cell(i, j) + " and " + cell(j, i) +
                        " are not skew-symmetric",
                    Location{i, j});
      }
    }
  }
}

}  // namespace

OrdinalPcMatrix OrdinalPcMatrix::validate(const std::vector<std::vector<long long>>& raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::kNonSquare,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(n),
                  Location{i, 0});
    }
  }
  // Range is checked on the wide values first so that e.g. 257 is not
  // narrowed into range.
  std::vector<std::int8_t> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long v = raw[i][j];
      if (v < -1 || v > 1) {
        throw Error(ErrorCode::kEntryOutOfRange,
                    "entry " + std::to_string(v) + " at " + cell(i, j) +
                        " is not in {-1,0,1}",
                    Location{i, j});
      }
      entries[i * n + j] = static_cast<std::int8_t>(v);
    }
  }
  check_dense(n, entries);
  return OrdinalPcMatrix(n, std::move(entries));
}

OrdinalPcMatrix OrdinalPcMatrix::zeros(std::size_t n) {
  return OrdinalPcMatrix(n, std::vector<std::int8_t>(n * n, 0));
}

std::vector<std::vector<long long>> OrdinalPcMatrix::rows() const {
  std::vector<std::vector<long long>> out(n_, std::vector<long long>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = at(i, j);
  return out;
}

GtGraph::GtGraph(std::size_t n, std::vector<std::int8_t> outcomes)
    : n_(n), outcomes_(std::move(outcomes)) {
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (outcomes_[u * n_ + v] != 0) ++directed_count_;
}

GtGraph GtGraph::from_outcomes(std::size_t n, std::vector<std::int8_t> outcomes) {
  if (outcomes.size() != n * n) {
    throw Error(ErrorCode::kNonSquare, "outcome buffer has " +
                                           std::to_string(outcomes.size()) +
                                           " cells, expected " + std::to_string(n * n));
  }
  check_dense(n, outcomes);
  return GtGraph(n, std::move(outcomes));
}

GtGraph GtGraph::all_ties(std::size_t n) {
  return GtGraph(n, std::vector<std::int8_t>(n * n, 0));
}

GtGraph GtGraph::from_edges(std::size_t n, std::span<const DirectedEdge> directed,
                            std::span<const UndirectedEdge> undirected) {
  std::vector<std::int8_t> out(n * n, 0);
  std::vector<bool> seen(n * n, false);
  auto claim = [&](Vertex a, Vertex b) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + cell(a, b) + " references a vertex outside 1.." +
                      std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorCode::kInvalidGraph, "self-loop at vertex " + std::to_string(a + 1));
    }
    Vertex lo = std::min(a, b), hi = std::max(a, b);
    if (seen[lo * n + hi]) {
      throw Error(ErrorCode::kInvalidGraph,
                  "pair " + cell(lo, hi) + " has more than one relation", Location{lo, hi});
    }
    seen[lo * n + hi] = true;
  };
  for (const auto& e : directed) {
    claim(e.from, e.to);
    out[e.to * n + e.from] = 1;
    out[e.from * n + e.to] = -1;
  }
  for (const auto& e : undirected) claim(e.a, e.b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!seen[a * n + b]) {
        throw Error(ErrorCode::kInvalidGraph, "pair " + cell(a, b) + " has no relation",
                    Location{a, b});
      }
  return GtGraph(n, std::move(out));
}

std::size_t GtGraph::undirected_count() const {
  return n_ < 2 ? 0 : n_ * (n_ - 1) / 2 - directed_count_;
}

std::vector<DirectedEdge> GtGraph::directed_edges() const {
  std::vector<DirectedEdge> edges;
  edges.reserve(directed_count_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) {
      int o = outcome(a, b);
      if (o > 0) edges.push_back({b, a});
      if (o < 0) edges.push_back({a, b});
    }
  return edges;
}

std::vector<UndirectedEdge> GtGraph::undirected_edges() const {
  std::vector<UndirectedEdge> edges;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (outcome(a, b) == 0) edges.push_back({a, b});
  return edges;
}

GtGraph matrix_to_graph(const OrdinalPcMatrix& m) {
  return GtGraph(m.n_, m.entries_);
}

OrdinalPcMatrix graph_to_matrix(const GtGraph& g) {
  return OrdinalPcMatrix(g.n_, g.outcomes_);
}

DegreeTriple degrees(const GtGraph& g, Vertex v) {
  if (v >= g.size()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range for n = " +
                    std::to_string(g.size()));
  }
  DegreeTriple d;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    int o = g.outcome(v, u);
    if (o > 0) ++d.deg_in;
    else if (o < 0) ++d.deg_out;
    else ++d.deg_un;
  }
  return d;
}

std::vector<DegreeTriple> all_degrees(const GtGraph& g) {
  std::vector<DegreeTriple> out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) out[v] = degrees(g, v);
  return out;
}

}  // namespace pct
