#include "pct/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pct/error.hpp"

namespace pct {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what, std::size_t line = 0, std::size_t col = 0) {
  std::string where;
  if (line > 0) where = "line " + std::to_string(line) + (col > 0 ? ", column " + std::to_string(col) : "") + ": ";
  throw Error(ErrorCode::kParse, where + what,
              line > 0 ? std::optional<Location>(Location{line, col}) : std::nullopt);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && !s.empty();
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.empty()) return;
  if (labels.size() != n) {
    parse_error("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) parse_error("duplicate label \"" + l + "\"");
}

std::string vertex_name(Vertex v, const std::vector<std::string>& labels) {
  return labels.empty() ? std::to_string(v + 1) : labels[v];
}

}  // namespace

MatrixFile parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("top-level JSON value must be an object");
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    parse_error("missing \"matrix\" array");
  }
  std::vector<std::vector<long long>> raw;
  const json& rows = doc["matrix"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) parse_error("matrix row " + std::to_string(i + 1) + " is not an array");
    std::vector<long long> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const json& v = rows[i][j];
      if (!v.is_number_integer()) {
        throw Error(ErrorCode::kParse,
                    "matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is not an integer",
                    Location{i, j});
      }
      row.push_back(v.get<long long>());
    }
    raw.push_back(std::move(row));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(raw.size())) {
      parse_error("\"n\" does not match the number of matrix rows (" + std::to_string(raw.size()) + ")");
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) parse_error("\"labels\" must be an array of strings");
    for (const json& l : doc["labels"]) {
      if (!l.is_string()) parse_error("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  check_labels(labels, raw.size());
  return MatrixFile{OrdinalPcMatrix::validate(raw), std::move(labels)};
}

MatrixFile parse_matrix_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++number;
    if (!trim(line).empty()) lines.emplace_back(number, line);
  }
  std::vector<std::string> labels;
  std::vector<std::vector<long long>> raw;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto [line_no, line] = lines[k];
    const auto cells = split(line, ',');
    std::vector<long long> row;
    bool numeric = true;
    for (std::string_view cell : cells) {
      long long v = 0;
      if (!parse_int(trim(cell), v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (k != 0) {
        // Report the first non-integer cell.
        std::size_t col = 1;
        for (std::string_view cell : cells) {
          long long v = 0;
          if (!parse_int(trim(cell), v)) {
            parse_error("\"" + std::string(trim(cell)) + "\" is not an integer entry", line_no, col);
          }
          ++col;
        }
      }
      for (std::string_view cell : cells) labels.emplace_back(trim(cell));
      continue;
    }
    raw.push_back(std::move(row));
  }
  check_labels(labels, raw.size());
  return MatrixFile{OrdinalPcMatrix::validate(raw), std::move(labels)};
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  const std::string text = buffer.str();
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".json") return parse_matrix_json(text);
  if (ext == ".csv") return parse_matrix_csv(text);
  const auto first = trim(text);
  if (!first.empty() && first.front() == '{') return parse_matrix_json(text);
  return parse_matrix_csv(text);
}

std::string to_json_text(const MatrixFile& file) {
  json doc;
  doc["n"] = file.matrix.size();
  doc["matrix"] = file.matrix.rows();
  if (!file.labels.empty()) doc["labels"] = file.labels;
  return doc.dump() + "\n";
}

std::string to_csv_text(const MatrixFile& file) {
  std::string out;
  auto join = [&](const auto& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) out += ',';
      if constexpr (std::is_same_v<std::decay_t<decltype(cells[j])>, std::string>) {
        out += cells[j];
      } else {
        out += std::to_string(cells[j]);
      }
    }
    out += '\n';
  };
  if (!file.labels.empty()) join(file.labels);
  for (const auto& row : file.matrix.rows()) join(row);
  return out;
}

std::vector<std::string> edge_list_lines(const GtGraph& g, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b = a + 1; b < g.size(); ++b) {
      const int o = g.outcome(a, b);
      if (o > 0) out.push_back(vertex_name(a, labels) + " > " + vertex_name(b, labels));
      else if (o < 0) out.push_back(vertex_name(b, labels) + " > " + vertex_name(a, labels));
      else out.push_back(vertex_name(a, labels) + " = " + vertex_name(b, labels));
    }
  return out;
}

std::string to_edge_list(const GtGraph& g, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& line : edge_list_lines(g, labels)) out += line + "\n";
  return out;
}

ParsedEdgeList parse_edge_list(std::string_view text) {
  struct Entry {
    std::string left, right;
    char op;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::size_t number = 0;
  bool all_numeric = true;
  for (std::string_view raw : split(text, '\n')) {
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto pos = line.find_first_of("<>=");
    if (pos == std::string_view::npos) parse_error("expected \"a > b\" or \"a = b\"", number);
    Entry e{std::string(trim(line.substr(0, pos))), std::string(trim(line.substr(pos + 1))),
            line[pos], number};
    if (e.left.empty() || e.right.empty()) parse_error("missing vertex", number, pos + 1);
    long long v = 0;
    all_numeric = all_numeric && parse_int(e.left, v) && parse_int(e.right, v);
    entries.push_back(std::move(e));
  }

  std::vector<std::string> labels;
  std::map<std::string, Vertex> ids;
  std::size_t n = 0;
  auto resolve = [&](const std::string& token, std::size_t line) -> Vertex {
    if (all_numeric) {
      long long v = 0;
      parse_int(token, v);
      if (v < 1) parse_error("vertex index must be >= 1, got " + token, line);
      n = std::max<std::size_t>(n, static_cast<std::size_t>(v));
      return static_cast<Vertex>(v - 1);
    }
    auto [it, inserted] = ids.emplace(token, labels.size());
    if (inserted) labels.push_back(token);
    n = labels.size();
    return it->second;
  };
  std::vector<DirectedEdge> directed;
  std::vector<UndirectedEdge> ties;
  for (const Entry& e : entries) {
    const Vertex l = resolve(e.left, e.line);
    const Vertex r = resolve(e.right, e.line);
    if (e.op == '>') directed.push_back({r, l});
    else if (e.op == '<') directed.push_back({l, r});
    else ties.push_back({l, r});
  }
  return ParsedEdgeList{GtGraph::from_edges(n, directed, ties), std::move(labels)};
}

}  // namespace pct
