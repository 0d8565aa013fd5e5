#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pct/pc_matrix.hpp"

namespace pct {

/// Directed edge `from -> to`. The arrowhead marks the winner: `to` defeats
/// `from`, i.e. m[to][from] = 1. Most tournament literature uses the opposite
/// convention; this one follows the matrix correspondence used throughout.
struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Tie between `a` and `b` (stored with a < b when produced by the graph).
struct UndirectedEdge {
  Vertex a = 0;
  Vertex b = 0;
  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
  friend auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
};

struct DegreeTriple {
  std::size_t deg_in = 0;   // victories
  std::size_t deg_out = 0;  // defeats
  std::size_t deg_un = 0;   // ties
  friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Generalized tournament graph: a complete graph on n vertices in which every
/// pair is either a directed edge (strict preference) or an undirected edge
/// (tie). Vertices are 0-based. A tournament is the tie-free special case.
class GtGraph {
 public:
  GtGraph() = default;

  /// Builds from edge lists; every unordered pair must appear exactly once.
  static GtGraph from_edges(std::size_t n, std::span<const DirectedEdge> directed,
                            std::span<const UndirectedEdge> undirected);
  /// Builds from a dense row-major outcome buffer with matrix semantics
  /// (+1: row wins). The buffer is validated like an OrdinalPcMatrix.
  static GtGraph from_outcomes(std::size_t n, std::vector<std::int8_t> outcomes);
  static GtGraph all_ties(std::size_t n);

  std::size_t size() const { return n_; }

  /// +1 if u defeats v, -1 if v defeats u, 0 for a tie (or u == v).
  int outcome(Vertex u, Vertex v) const { return outcomes_[u * n_ + v]; }
  /// True when (u, v) is in E_d, i.e. v defeats u.
  bool has_directed_edge(Vertex u, Vertex v) const { return outcome(u, v) < 0; }
  bool is_tied(Vertex u, Vertex v) const { return u != v && outcome(u, v) == 0; }

  bool is_tournament() const { return directed_count_ == n_ * (n_ - (n_ > 0)) / 2; }
  std::size_t directed_count() const { return directed_count_; }
  std::size_t undirected_count() const;

  /// Edges in lexicographic order of their sorted endpoint pair.
  std::vector<DirectedEdge> directed_edges() const;
  std::vector<UndirectedEdge> undirected_edges() const;

  std::span<const std::int8_t> outcomes() const { return outcomes_; }

  friend bool operator==(const GtGraph& a, const GtGraph& b) {
    return a.n_ == b.n_ && a.outcomes_ == b.outcomes_;
  }

 private:
  GtGraph(std::size_t n, std::vector<std::int8_t> outcomes);
  friend GtGraph matrix_to_graph(const OrdinalPcMatrix& m);
  friend OrdinalPcMatrix graph_to_matrix(const GtGraph& g);

  std::size_t n_ = 0;
  std::vector<std::int8_t> outcomes_;
  std::size_t directed_count_ = 0;
};

GtGraph matrix_to_graph(const OrdinalPcMatrix& m);
OrdinalPcMatrix graph_to_matrix(const GtGraph& g);

/// Throws ErrorCode::kVertexOutOfRange when v >= g.size().
DegreeTriple degrees(const GtGraph& g, Vertex v);
std::vector<DegreeTriple> all_degrees(const GtGraph& g);

}  // namespace pct
