#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pct/gt_graph.hpp"
#include "pct/pc_matrix.hpp"

namespace pct {

/// A comparison matrix as read from disk, with optional display labels.
struct MatrixFile {
  OrdinalPcMatrix matrix;
  std::vector<std::string> labels;  // empty or exactly n unique names
};

// JSON: {"n": 3, "matrix": [[0,1,-1],...], "labels": ["a","b","c"]}
MatrixFile parse_matrix_json(std::string_view text);
// CSV: n rows of n comma-separated entries, optionally preceded by a header
// row of labels.
MatrixFile parse_matrix_csv(std::string_view text);

/// Picks the parser from the extension (.json / .csv), falling back to
/// sniffing the first non-blank character. Throws kIo when unreadable.
MatrixFile load_matrix_file(const std::filesystem::path& path);

std::string to_json_text(const MatrixFile& file);
std::string to_csv_text(const MatrixFile& file);

/// Edge-list lines in lexicographic pair order: "i > j" when i defeats j,
/// "i = j" for a tie. Vertices print as labels when given, else 1-based.
std::vector<std::string> edge_list_lines(const GtGraph& g,
                                         const std::vector<std::string>& labels = {});
std::string to_edge_list(const GtGraph& g, const std::vector<std::string>& labels = {});

struct ParsedEdgeList {
  GtGraph graph;
  std::vector<std::string> labels;  // empty when all tokens were indices
};

/// Accepts "a > b", "a < b" and "a = b" lines; blank lines and lines starting
/// with '#' are skipped. Purely numeric tokens are 1-based indices (n = the
/// largest index); otherwise tokens are labels numbered by first appearance.
ParsedEdgeList parse_edge_list(std::string_view text);

}  // namespace pct
