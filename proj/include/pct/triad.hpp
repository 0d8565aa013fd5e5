#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "pct/gt_graph.hpp"

namespace pct {

enum class TriadClass : std::uint8_t {
  kCT0,   // three ties
  kIT1,   // one directed edge, two ties
  kIT2,   // two directed edges through the untied vertex, mixed direction
  kCT2a,  // two directed edges, both into the untied vertex (it wins both)
  kCT2b,  // two directed edges, both out of the untied vertex (it loses both)
  kCT3,   // transitive
  kIT3,   // cyclic
};

inline constexpr std::size_t kTriadClassCount = 7;
inline constexpr std::array<TriadClass, kTriadClassCount> kAllTriadClasses = {
    TriadClass::kCT0, TriadClass::kIT1,  TriadClass::kIT2, TriadClass::kCT2a,
    TriadClass::kCT2b, TriadClass::kCT3, TriadClass::kIT3};

constexpr bool is_inconsistent(TriadClass c) {
  return c == TriadClass::kIT1 || c == TriadClass::kIT2 || c == TriadClass::kIT3;
}

std::string_view name(TriadClass c);

/// Classifies a triad {a,b,c} from the three outcomes seen from the first
/// vertex of each pair: ab = m[a][b], ac = m[a][c], bc = m[b][c].
TriadClass classify_outcomes(int ab, int ac, int bc);

/// Throws kDuplicateVertex for repeated vertices, kVertexOutOfRange for
/// vertices outside the graph.
TriadClass classify_triad(const GtGraph& g, Vertex a, Vertex b, Vertex c);

struct Triad {
  Vertex a = 0, b = 0, c = 0;  // a < b < c
  friend bool operator==(const Triad&, const Triad&) = default;
  friend auto operator<=>(const Triad&, const Triad&) = default;
};

class TriadCensus {
 public:
  Count count(TriadClass c) const { return counts_[static_cast<std::size_t>(c)]; }
  void add(TriadClass c, Count k = 1) { counts_[static_cast<std::size_t>(c)] += k; }

  Count t0() const { return count(TriadClass::kCT0); }
  Count t1() const { return count(TriadClass::kIT1); }
  Count t2() const {
    return count(TriadClass::kIT2) + count(TriadClass::kCT2a) + count(TriadClass::kCT2b);
  }
  Count t3() const { return count(TriadClass::kCT3) + count(TriadClass::kIT3); }
  Count t23() const { return t2() + t3(); }
  Count total() const { return t0() + t1() + t23(); }
  Count inconsistent_total() const {
    return count(TriadClass::kIT1) + count(TriadClass::kIT2) + count(TriadClass::kIT3);
  }
  /// CT2a + CT3: the consistent triads forced by in-degrees.
  Count enforced_consistent() const {
    return count(TriadClass::kCT2a) + count(TriadClass::kCT3);
  }

  TriadCensus& operator+=(const TriadCensus& o) {
    for (std::size_t i = 0; i < kTriadClassCount; ++i) counts_[i] += o.counts_[i];
    return *this;
  }
  friend bool operator==(const TriadCensus&, const TriadCensus&) = default;

 private:
  std::array<Count, kTriadClassCount> counts_{};
};

/// Classifies all C(n,3) triads in lexicographic order; O(n^3).
TriadCensus triad_census(const GtGraph& g);

std::vector<std::pair<Triad, TriadClass>> list_inconsistent_triads(const GtGraph& g);

}  // namespace pct
