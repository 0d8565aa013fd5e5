#pragma once

#include <functional>
#include <vector>

#include "pct/pc_matrix.hpp"
#include "pct/rational.hpp"

namespace pct {

// Bounding functions over (n, m), where m is the number of directed edges of
// a gt-graph on n vertices. All take 0 <= m <= C(n,2) and throw kMOutOfRange
// otherwise. Floors of negative quantities round toward -inf.

/// Minimum number of CT2a + CT3 triads forced by m directed edges.
Count c_bound(Count n, Count m);
/// Lower bound on 3|T0| + |T1| (sum over vertices of C(deg_un, 2)).
Count d_bound(Count n, Count m);
/// Lower bound on |T2,3|. Not integral in general (e.g. E(5,3) = 1/3).
Rational e_bound(Count n, Count m);
/// Lower bound on |T0|; may be fractional and negative.
Rational f_bound(Count n, Count m);
/// Same value computed as (D + E - C(n,3)) / 2.
Rational f_bound_via_de(Count n, Count m);
/// max(0, ceil(F)).
Count f_bound_clamped(Count n, Count m);
/// Lower bound on the number of consistent triads: C + max(0, ceil(F)).
Count g_bound(Count n, Count m);
/// Upper bound on the number of inconsistent triads: C(n,3) - G.
Count h_bound(Count n, Count m);

struct BoundsRow {
  Count n = 0;
  Count m = 0;
  Count c_val = 0;
  Count d_val = 0;
  Rational e_val;
  Rational f_val;
  Count f_clamped = 0;
  Count g_val = 0;
  Count h_val = 0;
};

BoundsRow bounds_row(Count n, Count m);

/// Calls `sink` for m = 0..C(n,2) in order without materializing the table.
/// Throws kTooSmall for n < 3.
void stream_bounds_table(Count n, const std::function<void(const BoundsRow&)>& sink);
std::vector<BoundsRow> bounds_table(Count n);

inline constexpr const char* kBoundsCsvHeader = "n,m,C,D,E,F,F_clamped,G,H,F_decimal";
std::string to_csv_line(const BoundsRow& row);

}  // namespace pct
