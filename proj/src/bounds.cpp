#include "pct/bounds.hpp"

#include <stdexcept>
#include <string>

#include "pct/error.hpp"
#include "pct/indices.hpp"

namespace pct {
namespace {

void check_range(Count n, Count m) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (m < 0 || m > choose2(n)) {
    throw Error(ErrorCode::kMOutOfRange, "m = " + std::to_string(m) + " outside [0, " +
                                             std::to_string(choose2(n)) + "] for n = " +
                                             std::to_string(n));
  }
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Count exact_half(Wide twice, const char* what) {
  if (twice % 2 != 0) throw std::logic_error(std::string(what) + ": odd numerator");
  return static_cast<Count>(twice / 2);
}

}  // namespace

Count c_bound(Count n, Count m) {
  check_range(n, m);
  const Wide k = floor_div(m, n);
  return exact_half(k * (2 * Wide(m) - n * k - n), "c_bound");
}

Count d_bound(Count n, Count m) {
  check_range(n, m);
  const Wide k = floor_div(2 * Wide(m), n);
  const Wide w = n;
  return exact_half((w - k - 2) * (w * w + w * (k - 1) - 4 * Wide(m)), "d_bound");
}

Rational e_bound(Count n, Count m) {
  check_range(n, m);
  const Wide k = floor_div(2 * Wide(m), n);
  return Rational(k * (4 * Wide(m) - Wide(n) * (k + 1)), 6);
}

Rational f_bound(Count n, Count m) {
  check_range(n, m);
  const Wide k = floor_div(2 * Wide(m), n);
  const Wide w = n, mm = m;
  return Rational(-2 * w * k * k + (8 * mm - 2 * w) * k + (w - 2) * ((w - 1) * w - 6 * mm), 6);
}

Rational f_bound_via_de(Count n, Count m) {
  return (Rational(d_bound(n, m)) + e_bound(n, m) - Rational(choose3(n))) / Rational(2);
}

Count f_bound_clamped(Count n, Count m) {
  const Wide c = f_bound(n, m).ceil();
  return c > 0 ? static_cast<Count>(c) : 0;
}

Count g_bound(Count n, Count m) { return c_bound(n, m) + f_bound_clamped(n, m); }

Count h_bound(Count n, Count m) { return choose3(n) - g_bound(n, m); }

BoundsRow bounds_row(Count n, Count m) {
  BoundsRow r;
  r.n = n;
  r.m = m;
  r.c_val = c_bound(n, m);
  r.d_val = d_bound(n, m);
  r.e_val = e_bound(n, m);
  r.f_val = f_bound(n, m);
  const Wide fc = r.f_val.ceil();
  r.f_clamped = fc > 0 ? static_cast<Count>(fc) : 0;
  r.g_val = r.c_val + r.f_clamped;
  r.h_val = choose3(n) - r.g_val;
  return r;
}

void stream_bounds_table(Count n, const std::function<void(const BoundsRow&)>& sink) {
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall, "bounds table needs n >= 3, got " + std::to_string(n));
  }
  const Count last = choose2(n);
  for (Count m = 0; m <= last; ++m) sink(bounds_row(n, m));
}

std::vector<BoundsRow> bounds_table(Count n) {
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(choose2(n) + 1));
  stream_bounds_table(n, [&](const BoundsRow& r) { rows.push_back(r); });
  return rows;
}

std::string to_csv_line(const BoundsRow& r) {
  return std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.c_val) + "," +
         std::to_string(r.d_val) + "," + r.e_val.to_string() + "," + r.f_val.to_string() + "," +
         std::to_string(r.f_clamped) + "," + std::to_string(r.g_val) + "," +
         std::to_string(r.h_val) + "," + to_decimal(r.f_val, 10);
}

}  // namespace pct
