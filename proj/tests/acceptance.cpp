// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "pct/bounds.hpp"
#include "pct/extremal.hpp"
#include "pct/indices.hpp"
#include "pct/io.hpp"
#include "pct/oracle.hpp"
#include "pct/service.hpp"
#include "support.hpp"

namespace {

using namespace pct;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

Outcome worked_example() {
  Outcome o;
  const OrdinalPcMatrix m = OrdinalPcMatrix::validate(testing::kFiveAlternatives);
  analyze(m);  // warm-up
  const auto start = Clock::now();
  const GtGraph g = matrix_to_graph(m);
  const IndexReport r = analyze(g);
  const auto triads = list_inconsistent_triads(g);
  const double elapsed = seconds_since(start);
  std::vector<Triad> got;
  for (const auto& [t, k] : triads) got.push_back(t);
  const std::vector<Triad> expected{{0, 1, 2}, {0, 1, 4}, {0, 2, 4}, {0, 3, 4}, {2, 3, 4}};
  o.require(got == expected, "inconsistent triad list differs");
  o.require(r.inconsistent_count == 5, "count != 5");
  o.require(r.used_ties && r.zeta == Rational(1, 2), "zeta_g = " + r.zeta.to_string());
  o.require(r.eta == Rational(1, 2), "eta = " + r.eta.to_string());
  o.require(elapsed < 1e-3, "runtime " + fmt_seconds(elapsed) + " >= 1 ms");
  if (o.pass) o.detail = "zeta_g = 1/2, eta = 1/2, 5 triads in " + fmt_seconds(elapsed);
  return o;
}

Outcome closed_forms() {
  Outcome o;
  o.require(max_inconsistent_no_ties(4) == 2, "I(4)");
  o.require(max_inconsistent_no_ties(3) == 1, "I(3)");
  o.require(max_inconsistent_with_ties(4) == 4, "Y(4)");
  o.require(max_inconsistent_with_ties(5) == 10, "Y(5)");
  for (Count n = 3; n <= 10000; ++n) {
    o.require(max_inconsistent_with_ties(n) == max_inconsistent_with_ties_binomial(n),
              "Y forms differ at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "I(3..4), Y(4..5) exact; Y forms agree on [3,10000]";
  return o;
}

Outcome max_tournaments() {
  Outcome o;
  for (std::size_t n = 3; n <= 25; ++n) {
    o.require(count_inconsistent_tournament_fast(gen_max_tournament(n)) ==
                  max_inconsistent_no_ties(static_cast<Count>(n)),
              "fast count != I(n) at n = " + std::to_string(n));
  }
  const std::string x = to_csv_text({OrdinalPcMatrix::validate(testing::kMaxTournament6), {}});
  const std::string y = to_csv_text({OrdinalPcMatrix::validate(testing::kMaxTournament7), {}});
  o.require(to_csv_text({graph_to_matrix(gen_max_tournament(6)), {}}) == x, "n = 6 bytes differ");
  o.require(to_csv_text({graph_to_matrix(gen_max_tournament(7)), {}}) == y, "n = 7 bytes differ");
  if (o.pass) o.detail = "count = I(n) on [3,25]; n = 6, 7 byte-identical";
  return o;
}

Outcome max_dt_graphs() {
  Outcome o;
  for (std::size_t n = 3; n <= 60; ++n) {
    const TriadCensus c = triad_census(gen_max_dt_graph(n).graph);
    o.require(c.t0() == 0, "CT0 != 0 at n = " + std::to_string(n));
    o.require(c.inconsistent_total() == max_inconsistent_with_ties(static_cast<Count>(n)),
              "count != Y(n) at n = " + std::to_string(n));
  }
  std::size_t ties_in_argmax = 0;
  for (Count n = 4; n <= 40; ++n) {
    const Count x = dt_edge_count(n);
    Count best = -1, first = -1;
    std::size_t maximizers = 0;
    for (Count m = 0; m <= choose2(n); ++m) {
      const Count h = h_bound(n, m);
      if (h > best) {
        best = h;
        first = m;
        maximizers = 1;
      } else if (h == best) {
        ++maximizers;
      }
    }
    if (maximizers > 1) ++ties_in_argmax;
    o.require(first == x, "argmax H != X(n) at n = " + std::to_string(n));
    o.require(h_bound(n, x) == max_inconsistent_with_ties(n), "H(n,X(n)) != Y(n) at n = " + std::to_string(n));
  }
  if (o.pass) {
    o.detail = "CT0 = 0, count = Y(n) on [3,60]; argmax H = X(n) on [4,40] (" +
               std::to_string(ties_in_argmax) + " sizes with tied maxima, X(n) the smallest)";
  }
  return o;
}

Outcome oracle_certification() {
  Outcome o;
  auto start = Clock::now();
  for (std::size_t n = 3; n <= 6; ++n) {
    const EnumerationReport r = enumerate_max(n, Family::kTournament);
    o.require(r.max_inconsistent == max_inconsistent_no_ties(static_cast<Count>(n)), "tournament max at n = " + std::to_string(n));
    o.require(r.visited == family_size(n, Family::kTournament), "tournament visit count");
  }
  const double t_tour = seconds_since(start);
  o.require(t_tour < 5.0, "tournaments took " + fmt_seconds(t_tour));

  start = Clock::now();
  for (std::size_t n = 3; n <= 5; ++n) {
    const EnumerationReport r = enumerate_max(n, Family::kGtGraph);
    o.require(r.max_inconsistent == max_inconsistent_with_ties(static_cast<Count>(n)), "gt max at n = " + std::to_string(n));
    o.require(r.visited == family_size(n, Family::kGtGraph), "gt visit count");
  }
  const double t_gt = seconds_since(start);
  o.require(t_gt < 10.0, "gt-graphs took " + fmt_seconds(t_gt));

  start = Clock::now();
  const EnumerationReport six = enumerate_max(6, Family::kGtGraph, {.allow_large = true, .workers = 4});
  const double t_six = seconds_since(start);
  o.require(six.max_inconsistent == max_inconsistent_with_ties(6), "gt max at n = 6");
  o.require(six.visited == 14348907ULL, "gt visit count at n = 6");
  o.require(t_six < 600.0, "n = 6 gt-graphs took " + fmt_seconds(t_six));
  if (o.pass) {
    o.detail = "tournaments [3,6] " + fmt_seconds(t_tour) + ", gt [3,5] " + fmt_seconds(t_gt) +
               ", gt n = 6 (14348907 graphs) " + fmt_seconds(t_six);
  }
  return o;
}

Outcome bounding_function_shape() {
  Outcome o;
  std::size_t checks = 0;
  for (Count n = 3; n <= 40; ++n) {
    const Count x = dt_edge_count(n);
    const std::string at = " at n = " + std::to_string(n);
    o.require(f_bound(n, x) == Rational(0), "F(n,X(n)) != 0" + at);
    for (Count m = 0; m <= choose2(n); ++m) {
      ++checks;
      const std::string atm = at + ", m = " + std::to_string(m);
      if (m < x) o.require(f_bound(n, m) >= Rational(1), "F < 1 below X" + atm);
      if (m > x) o.require(f_bound(n, m) <= Rational(0), "F > 0 above X" + atm);
      if (m < n) o.require(c_bound(n, m) == 0, "C != 0 below n" + atm);
      if (m >= n && m < choose2(n)) o.require(c_bound(n, m + 1) > c_bound(n, m), "C not increasing" + atm);
      if (m >= 1 && m < x) o.require(g_bound(n, m) > g_bound(n, m + 1), "G not decreasing" + atm);
      o.require(f_bound(n, m) == f_bound_via_de(n, m), "F forms differ" + atm);
    }
    o.require(choose3(n) - c_bound(n, x) == max_inconsistent_with_ties(n), "Y != C(n,3) - C(n,X)" + at);
  }
  if (o.pass) o.detail = std::to_string(checks) + " (n,m) points, 0 violations";
  return o;
}

Outcome bound_soundness() {
  Outcome o;
  std::uint64_t graphs = 0;
  const auto start = Clock::now();
  for (std::size_t n = 3; n <= 5; ++n) {
    const EnumerationReport r = per_m_minima(n);
    graphs += r.visited;
    const auto v = bound_violations(r);
    o.require(r.exhaustive && v.empty(), v.empty() ? "not exhaustive" : v.front());
  }
  SampleOptions opts;
  opts.samples_per_m = 100000;
  opts.seed = 20240601;
  for (std::size_t n = 6; n <= 12; ++n) {
    const EnumerationReport r = per_m_minima(n, opts);
    graphs += r.visited;
    for (const PerMStats& s : r.per_m) o.require(s.graphs == opts.samples_per_m, "short sample");
    const auto v = bound_violations(r);
    o.require(v.empty(), v.empty() ? "" : v.front());
  }
  if (o.pass) {
    o.detail = std::to_string(graphs) + " graphs (n <= 5 exhaustive, 1e5 per (n,m) for n in [6,12], seed " +
               std::to_string(opts.seed) + "), 0 violations in " + fmt_seconds(seconds_since(start));
  }
  return o;
}

Outcome uncovered_identity() {
  Outcome o;
  std::mt19937_64 rng(777);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 3 + rng() % 38;
    const auto m = static_cast<Count>(rng() % (n * (n - 1) / 2 + 1));
    const GtGraph g = random_gt_graph(n, m, rng());
    const TriadCensus c = triad_census(g);
    long long lhs = 0;
    for (const auto& d : all_degrees(g)) lhs += testing::binom2(static_cast<long long>(d.deg_un));
    o.require(lhs == 3 * c.t0() + c.t1(), "identity fails on graph " + std::to_string(i));
  }
  if (o.pass) o.detail = "10000 random graphs, n in [3,40], exact";
  return o;
}

Outcome triads_cover() {
  Outcome o;
  double t8 = 0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto start = Clock::now();
    const CoverResult r = min_triad_cover(n, CoverMode::kExact);
    if (n == 8) t8 = seconds_since(start);
    o.require(static_cast<Count>(r.size) == dt_edge_count(static_cast<Count>(n)), "exact size != X(n) at n = " + std::to_string(n));
    o.require(r.proven_minimal && covers_all_triads(n, r.edges), "exact cover infeasible at n = " + std::to_string(n));
  }
  o.require(t8 < 60.0, "n = 8 took " + fmt_seconds(t8));

  // n = 5 witness: one triangle plus one disjoint edge.
  const CoverResult five = min_triad_cover(5, CoverMode::kExact);
  std::vector<std::size_t> deg(5, 0);
  for (const auto& e : five.edges) ++deg[e.a], ++deg[e.b];
  std::vector<std::size_t> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  bool triangle = false;
  if (five.edges.size() == 4) {
    for (const auto& e : five.edges)
      for (const auto& f : five.edges)
        for (const auto& g : five.edges) {
          std::vector<Vertex> vs{e.a, e.b, f.a, f.b, g.a, g.b};
          std::sort(vs.begin(), vs.end());
          vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
          if (!(e == f) && !(f == g) && !(e == g) && vs.size() == 3) triangle = true;
        }
  }
  o.require(triangle && sorted == std::vector<std::size_t>{1, 1, 2, 2, 2}, "n = 5 witness is not triangle + edge");

  for (std::size_t n = 3; n <= 40; ++n) {
    o.require(covers_all_triads(n, min_triad_cover(n, CoverMode::kGreedy).edges), "greedy infeasible at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "exact = X(n) on [3,8] (n = 8 in " + fmt_seconds(t8) + "), n = 5 triangle + edge, greedy feasible on [3,40]";
  return o;
}

Outcome limits() {
  Outcome o;
  std::ostringstream d;
  for (Count n : {1000, 10000}) {
    const EtaLimits l = eta_limits(n);
    const double a = std::abs(l.no_ties.to_double() - 0.25);
    const double b = std::abs(l.with_ties.to_double() - 0.8125);
    o.require(a <= 2.0 / static_cast<double>(n), "no-ties ratio off at n = " + std::to_string(n));
    o.require(b <= 2.0 / static_cast<double>(n), "ties ratio off at n = " + std::to_string(n));
    d << "n=" << n << ": " << a << ", " << b << "; ";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome performance() {
  Outcome o;
  const GtGraph big = random_tournament(2000, 99);
  auto start = Clock::now();
  const Count fast = count_inconsistent_tournament_fast(big);
  const double t_fast = seconds_since(start);
  o.require(t_fast < 0.5, "n = 2000 fast count took " + fmt_seconds(t_fast));
  o.require(fast > 0, "n = 2000 count");

  double t_enum = 0;
  for (std::size_t n : {3u, 17u, 50u, 101u, 150u, 200u}) {
    const GtGraph t = random_tournament(n, 1000 + n);
    start = Clock::now();
    const Count slow = triad_census(t).inconsistent_total();
    const double took = seconds_since(start);
    if (n == 200) t_enum = took;
    o.require(slow == count_inconsistent_tournament_fast(t), "fast != enumeration at n = " + std::to_string(n));
  }
  o.require(t_enum < 2.0, "n = 200 enumeration took " + fmt_seconds(t_enum));
  if (o.pass) o.detail = "n = 2000 fast " + fmt_seconds(t_fast) + ", n = 200 enumeration " + fmt_seconds(t_enum);
  return o;
}

Outcome service_equivalence() {
  Outcome o;
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);

  std::vector<nlohmann::json> verdicts;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      const long long v = testing::kFiveAlternatives[i][j];
      verdicts.push_back({{"pair", {i + 1, j + 1}}, {"verdict", v > 0 ? "first" : (v < 0 ? "second" : "tie")}});
    }
  std::mt19937_64 rng(2024);
  nlohmann::json reference;
  for (int round = 0; round < 20 && o.pass; ++round) {
    std::shuffle(verdicts.begin(), verdicts.end(), rng);
    auto created = client.Post("/sessions", R"({"labels":["A1","A2","A3","A4","A5"]})", "application/json");
    o.require(created && created->status == 201, "session create failed");
    if (!o.pass) break;
    const std::string id = nlohmann::json::parse(created->body)["id"];
    for (const auto& v : verdicts) {
      auto res = client.Post("/sessions/" + id + "/comparisons", v.dump(), "application/json");
      o.require(res && res->status == 200, "comparison rejected");
    }
    auto res = client.Get("/sessions/" + id + "/analysis");
    o.require(res && res->status == 200, "analysis failed");
    if (!o.pass) break;
    nlohmann::json final = nlohmann::json::parse(res->body);
    final.erase("revision");
    o.require(final["final"]["zeta_g"]["exact"] == "1/2", "zeta_g != 1/2 in round " + std::to_string(round));
    if (round == 0) reference = final;
    o.require(final == reference, "analysis differs in round " + std::to_string(round));
  }
  server.stop();
  thread.join();
  if (o.pass) o.detail = "20 random orders over HTTP, identical analysis, zeta_g = 1/2";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked-example", worked_example},
      {"closed-forms", closed_forms},
      {"max-tournament-reproduction", max_tournaments},
      {"max-dt-graph-reproduction", max_dt_graphs},
      {"oracle-certification", oracle_certification},
      {"bounding-function-shape", bounding_function_shape},
      {"bound-soundness", bound_soundness},
      {"uncovered-triad-identity", uncovered_identity},
      {"triads-cover", triads_cover},
      {"ratio-limits", limits},
      {"performance", performance},
      {"service-equivalence", service_equivalence},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
