#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pct {

class GtGraph;

using Vertex = std::size_t;
using Count = std::int64_t;

/// Ordinal pairwise-comparison matrix: entry (i,j) is +1 when alternative i
/// wins against j, -1 when j wins and 0 for a tie. Diagonal is zero and the
/// matrix is skew-symmetric.
class OrdinalPcMatrix {
 public:
  /// Checks a raw square array and builds the matrix. Throws pct::Error with
  /// the first offending cell (row-major order) as location.
  static OrdinalPcMatrix validate(const std::vector<std::vector<long long>>& raw);
  static OrdinalPcMatrix zeros(std::size_t n);

  std::size_t size() const { return n_; }
  int at(Vertex i, Vertex j) const { return entries_[i * n_ + j]; }
  std::vector<std::vector<long long>> rows() const;

  friend bool operator==(const OrdinalPcMatrix&, const OrdinalPcMatrix&) = default;

 private:
  friend GtGraph matrix_to_graph(const OrdinalPcMatrix& m);
  friend OrdinalPcMatrix graph_to_matrix(const GtGraph& g);
  OrdinalPcMatrix(std::size_t n, std::vector<std::int8_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<std::int8_t> entries_;
};

inline OrdinalPcMatrix validate_matrix(const std::vector<std::vector<long long>>& raw) {
  return OrdinalPcMatrix::validate(raw);
}

}  // namespace pct
