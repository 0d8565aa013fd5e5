#include "pct/triad.hpp"

#include <string>

#include "pct/error.hpp"

namespace pct {
namespace {

TriadClass classify_slow(int ab, int ac, int bc) {
  const int directed = (ab != 0) + (ac != 0) + (bc != 0);
  // Within-triad in-degree equals the number of wins.
  const int wins_a = (ab > 0) + (ac > 0);
  const int wins_b = (ab < 0) + (bc > 0);
  const int wins_c = (ac < 0) + (bc < 0);
  switch (directed) {
    case 0: return TriadClass::kCT0;
    case 1: return TriadClass::kIT1;
    case 3:
      return (wins_a == 1 && wins_b == 1 && wins_c == 1) ? TriadClass::kIT3
                                                         : TriadClass::kCT3;
    default: break;
  }
  // Exactly one tie; z is the vertex outside the tied pair.
  const int wins_z = ab == 0 ? wins_c : (ac == 0 ? wins_b : wins_a);
  if (wins_z == 2) return TriadClass::kCT2a;
  if (wins_z == 0) return TriadClass::kCT2b;
  return TriadClass::kIT2;
}

constexpr int code_of(int ab, int ac, int bc) { return 9 * (ab + 1) + 3 * (ac + 1) + (bc + 1); }

const std::array<TriadClass, 27>& lookup() {
  static const std::array<TriadClass, 27> table = [] {
    std::array<TriadClass, 27> t{};
    for (int ab = -1; ab <= 1; ++ab)
      for (int ac = -1; ac <= 1; ++ac)
        for (int bc = -1; bc <= 1; ++bc) t[code_of(ab, ac, bc)] = classify_slow(ab, ac, bc);
    return t;
  }();
  return table;
}

}  // namespace

std::string_view name(TriadClass c) {
  switch (c) {
    case TriadClass::kCT0: return "CT0";
    case TriadClass::kIT1: return "IT1";
    case TriadClass::kIT2: return "IT2";
    case TriadClass::kCT2a: return "CT2a";
    case TriadClass::kCT2b: return "CT2b";
    case TriadClass::kCT3: return "CT3";
    case TriadClass::kIT3: return "IT3";
  }
  return "?";
}

TriadClass classify_outcomes(int ab, int ac, int bc) { return lookup()[code_of(ab, ac, bc)]; }

TriadClass classify_triad(const GtGraph& g, Vertex a, Vertex b, Vertex c) {
  for (Vertex v : {a, b, c}) {
    if (v >= g.size()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range for n = " +
                      std::to_string(g.size()));
    }
  }
  if (a == b || a == c || b == c) {
    throw Error(ErrorCode::kDuplicateVertex, "triad vertices must be distinct");
  }
  return classify_outcomes(g.outcome(a, b), g.outcome(a, c), g.outcome(b, c));
}

TriadCensus triad_census(const GtGraph& g) {
  const auto& table = lookup();
  const std::size_t n = g.size();
  const auto out = g.outcomes();
  std::array<Count, 27> by_code{};
  for (std::size_t a = 0; a < n; ++a) {
    const std::int8_t* row_a = out.data() + a * n;
    for (std::size_t b = a + 1; b < n; ++b) {
      const int hi = 9 * (row_a[b] + 1);
      const std::int8_t* row_b = out.data() + b * n;
      for (std::size_t c = b + 1; c < n; ++c) {
        ++by_code[hi + 3 * (row_a[c] + 1) + (row_b[c] + 1)];
      }
    }
  }
  TriadCensus census;
  for (std::size_t code = 0; code < by_code.size(); ++code) census.add(table[code], by_code[code]);
  return census;
}

std::vector<std::pair<Triad, TriadClass>> list_inconsistent_triads(const GtGraph& g) {
  std::vector<std::pair<Triad, TriadClass>> out;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        TriadClass k = classify_outcomes(g.outcome(a, b), g.outcome(a, c), g.outcome(b, c));
        if (is_inconsistent(k)) out.push_back({Triad{a, b, c}, k});
      }
  return out;
}

}  // namespace pct
