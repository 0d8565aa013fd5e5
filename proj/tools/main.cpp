#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "pct/bounds.hpp"
#include "pct/error.hpp"
#include "pct/extremal.hpp"
#include "pct/indices.hpp"
#include "pct/io.hpp"
#include "pct/oracle.hpp"
#include "pct/service.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSelfCheck = 3;

std::string exact_and_decimal(const pct::Rational& r) {
  if (r.is_integer()) return r.to_string();
  return r.to_string() + " (" + pct::to_decimal(r) + ")";
}

std::string vertex_name(pct::Vertex v, const std::vector<std::string>& labels) {
  return labels.empty() ? std::to_string(v + 1) : labels[v];
}

json rational_json(const pct::Rational& r) { return {{"exact", r.to_string()}, {"value", r.to_double()}}; }

struct AnalyzeArgs {
  std::string path;
  bool with_ties = false;
  bool list_triads = false;
  bool json_out = false;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const pct::MatrixFile file = pct::load_matrix_file(args.path);
  const pct::GtGraph g = pct::matrix_to_graph(file.matrix);
  const pct::IndexReport r = pct::analyze(g, {.with_ties_denominator = args.with_ties});
  const auto triads = args.list_triads ? pct::list_inconsistent_triads(g)
                                       : std::vector<std::pair<pct::Triad, pct::TriadClass>>{};

  if (args.json_out) {
    json census = json::object();
    for (pct::TriadClass k : pct::kAllTriadClasses) census[std::string(pct::name(k))] = r.census.count(k);
    json out = {{"n", r.n},
                {"tournament", r.is_tournament},
                {"denominator", r.used_ties ? "Y" : "I"},
                {"inconsistent", r.inconsistent_count},
                {"max_possible", r.max_possible},
                {"total_triads", r.total_triads},
                {r.used_ties ? "zeta_g" : "zeta", rational_json(r.zeta)},
                {"eta", rational_json(r.eta)},
                {"census", census}};
    if (args.list_triads) {
      json list = json::array();
      for (const auto& [t, k] : triads) {
        list.push_back({{"triad",
                         {vertex_name(t.a, file.labels), vertex_name(t.b, file.labels),
                          vertex_name(t.c, file.labels)}},
                        {"class", std::string(pct::name(k))}});
      }
      out["inconsistent_triads"] = list;
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "n = " << r.n << ", triads = " << r.total_triads << '\n' << "census:";
  for (pct::TriadClass k : pct::kAllTriadClasses) std::cout << ' ' << pct::name(k) << '=' << r.census.count(k);
  std::cout << '\n';
  const std::string eta = pct::to_decimal(r.eta);
  if (r.used_ties) {
    std::cout << "inconsistent " << r.inconsistent_count << '/' << r.max_possible
              << ", zeta_g = " << exact_and_decimal(r.zeta) << ", eta = " << eta << '\n';
  } else {
    std::cout << "tournament: zeta = " << exact_and_decimal(r.zeta) << " (" << r.inconsistent_count
              << '/' << r.max_possible << " of I(" << r.n << ")), eta = " << eta << '\n';
  }
  for (const auto& [t, k] : triads) {
    std::cout << "  " << vertex_name(t.a, file.labels) << ' ' << vertex_name(t.b, file.labels) << ' '
              << vertex_name(t.c, file.labels) << ' ' << pct::name(k) << '\n';
  }
  return kExitOk;
}

std::string matrix_rows(const pct::GtGraph& g) {
  const pct::OrdinalPcMatrix m = pct::graph_to_matrix(g);
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

int cmd_generate(const std::string& kind, std::size_t n, const std::string& format) {
  if (n < 1) throw pct::Error(pct::ErrorCode::kInvalidArgument, "n must be at least 1");
  pct::GtGraph g;
  pct::Count expected = 0;
  if (kind == "max-tournament") {
    g = pct::gen_max_tournament(n);
    expected = n >= 3 ? pct::max_inconsistent_no_ties(static_cast<pct::Count>(n)) : 0;
  } else {
    g = pct::gen_max_dt_graph(n).graph;
    expected = n >= 3 ? pct::max_inconsistent_with_ties(static_cast<pct::Count>(n)) : 0;
  }
  const pct::Count got = pct::triad_census(g).inconsistent_total();
  if (got != expected) {
    std::cerr << "self-check failed: " << kind << ' ' << n << " has " << got
              << " inconsistent triads, expected " << expected << '\n';
    return kExitSelfCheck;
  }
  std::cout << (format == "matrix" ? matrix_rows(g) : pct::to_edge_list(g));
  return kExitOk;
}

int cmd_bounds(pct::Count n, const std::string& csv_path) {
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) throw pct::Error(pct::ErrorCode::kIo, "cannot write " + csv_path);
  }
  std::ostream& out = csv_path.empty() ? std::cout : file;
  out << pct::kBoundsCsvHeader << '\n';
  pct::stream_bounds_table(n, [&out](const pct::BoundsRow& row) { out << pct::to_csv_line(row) << '\n'; });
  out.flush();
  if (!out) throw pct::Error(pct::ErrorCode::kIo, "write failed");
  return kExitOk;
}

// The cover is printed as a gt-graph whose directed edges are the cover
// pairs (lower index wins) and whose other pairs are ties.
int cmd_cover(std::size_t n, const std::string& mode) {
  const pct::CoverResult c =
      pct::min_triad_cover(n, mode == "exact" ? pct::CoverMode::kExact : pct::CoverMode::kGreedy);
  if (!pct::covers_all_triads(n, c.edges)) {
    std::cerr << "self-check failed: cover leaves a triad uncovered\n";
    return kExitSelfCheck;
  }
  std::vector<pct::DirectedEdge> directed;
  for (const auto& e : c.edges) directed.push_back({e.b, e.a});
  std::vector<pct::UndirectedEdge> ties;
  for (pct::Vertex a = 0; a < n; ++a)
    for (pct::Vertex b = a + 1; b < n; ++b)
      if (std::find(c.edges.begin(), c.edges.end(), pct::UndirectedEdge{a, b}) == c.edges.end())
        ties.push_back({a, b});
  std::cout << "size " << c.size << '\n'
            << "# " << (c.proven_minimal ? "proven minimal" : "greedy, not proven minimal")
            << "; X(" << n << ") = " << pct::dt_edge_count(static_cast<pct::Count>(n)) << '\n'
            << pct::to_edge_list(pct::GtGraph::from_edges(n, directed, ties));
  return kExitOk;
}

int cmd_certify(std::size_t n, const std::string& family_name, bool allow_large, bool json_out) {
  const pct::Family family = family_name == "t" ? pct::Family::kTournament : pct::Family::kGtGraph;
  const pct::EnumerationReport report = pct::enumerate_max(n, family, {.allow_large = allow_large});
  const auto cn = static_cast<pct::Count>(n);
  const pct::Count expected = family == pct::Family::kTournament
                                  ? pct::max_inconsistent_no_ties(cn)
                                  : pct::max_inconsistent_with_ties(cn);
  const std::vector<std::string> violations = pct::bound_violations(report);
  const bool visited_ok = report.visited == pct::family_size(n, family);
  const bool pass = report.max_inconsistent == expected && violations.empty() && visited_ok &&
                    pct::triad_census(report.witness).inconsistent_total() == report.max_inconsistent;
  if (json_out) {
    json out = pct::to_json(report);
    out["expected"] = expected;
    out["pass"] = pass;
    out["bound_violations"] = violations;
    std::cout << out.dump(2) << '\n';
  } else {
    const char* fn = family == pct::Family::kTournament ? "I" : "Y";
    std::cout << "max " << report.max_inconsistent << (report.max_inconsistent == expected ? " == " : " != ")
              << fn << '(' << n << ") " << (pass ? "PASS" : "FAIL") << '\n'
              << "visited " << report.visited << " of " << pct::family_size(n, family) << '\n'
              << "bound violations " << violations.size() << '\n';
    for (const auto& v : violations) std::cout << "  " << v << '\n';
    std::cout << "witness:\n" << pct::to_edge_list(report.witness);
  }
  return pass ? kExitOk : kExitSelfCheck;
}

int cmd_minima(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
  pct::SampleOptions options;
  options.samples_per_m = samples;
  options.seed = seed;
  const pct::EnumerationReport report = pct::per_m_minima(n, options);
  json out = pct::to_json(report);
  out["bound_violations"] = pct::bound_violations(report);
  std::cout << out.dump(2) << '\n';
  return out["bound_violations"].empty() ? kExitOk : kExitSelfCheck;
}

httplib::Server* g_server = nullptr;

extern "C" void stop_server(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(std::string host, int port, const std::string& store_path) {
  if (port == 0) {
    const char* env = std::getenv("PCT_PORT");
    port = env ? std::atoi(env) : 8080;
  }
  if (port <= 0 || port > 65535) throw pct::Error(pct::ErrorCode::kInvalidArgument, "invalid port");
  pct::SessionStore store(store_path.empty() ? std::nullopt
                                             : std::optional<std::filesystem::path>(store_path));
  httplib::Server server;
  pct::install_routes(server, store);
  g_server = &server;
  std::signal(SIGINT, stop_server);
  std::signal(SIGTERM, stop_server);
  if (!server.bind_to_port(host, port)) {
    throw pct::Error(pct::ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  }
  std::cerr << "listening on " << host << ':' << port << '\n';
  server.listen_after_bind();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal pairwise comparison inconsistency toolkit"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Triad census and inconsistency indices of a matrix file");
  a->add_option("path", analyze.path, "Matrix file (.json or .csv)")->required();
  a->add_flag("--with-ties-denominator", analyze.with_ties, "Normalize by Y(n) even for tournaments");
  a->add_flag("--list-triads", analyze.list_triads, "List the inconsistent triads");
  a->add_flag("--json", analyze.json_out, "Emit JSON");

  std::string gen_kind;
  std::size_t gen_n = 0;
  std::string gen_format = "edges";
  auto* g = app.add_subcommand("generate", "Emit an extremal graph");
  g->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"max-tournament", "max-dt"}));
  g->add_option("n", gen_n)->required();
  g->add_option("--format", gen_format)->check(CLI::IsMember({"matrix", "edges"}));

  pct::Count bounds_n = 0;
  std::string bounds_csv;
  auto* b = app.add_subcommand("bounds", "Bounding-function table for m = 0..C(n,2) as CSV");
  b->add_option("n", bounds_n)->required();
  b->add_option("--csv", bounds_csv, "Write to this path instead of stdout");

  std::size_t cover_n = 0;
  std::string cover_mode = "exact";
  auto* c = app.add_subcommand("cover", "Smallest set of pairs touching every triad");
  c->add_option("n", cover_n)->required();
  c->add_option("--mode", cover_mode)->check(CLI::IsMember({"greedy", "exact"}));

  std::size_t cert_n = 0;
  std::string cert_family = "gt";
  bool cert_large = false;
  bool cert_json = false;
  auto* t = app.add_subcommand("certify", "Exhaustive maximum check against I(n) or Y(n)");
  t->add_option("n", cert_n)->required();
  t->add_option("--family", cert_family)->check(CLI::IsMember({"t", "gt"}));
  t->add_flag("--allow-large", cert_large, "Allow tournaments at n = 7 and gt-graphs at n = 6");
  t->add_flag("--json", cert_json);

  std::size_t min_n = 0;
  std::uint64_t min_samples = 100000;
  std::uint64_t min_seed = pct::SampleOptions{}.seed;
  auto* mm = app.add_subcommand("minima", "Per-m observed minima of the bounded quantities as JSON");
  mm->add_option("n", min_n)->required();
  mm->add_option("--samples", min_samples, "Samples per m when n > 5");
  mm->add_option("--seed", min_seed);

  std::string host = "127.0.0.1";
  int port = 0;
  std::string store_path;
  auto* s = app.add_subcommand("serve", "Host the elicitation session HTTP API");
  s->add_option("--host", host);
  s->add_option("--port", port, "Port (default: $PCT_PORT or 8080)");
  s->add_option("--store", store_path, "Append-only JSON-lines session journal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze);
    if (g->parsed()) return cmd_generate(gen_kind, gen_n, gen_format);
    if (b->parsed()) return cmd_bounds(bounds_n, bounds_csv);
    if (c->parsed()) return cmd_cover(cover_n, cover_mode);
    if (t->parsed()) return cmd_certify(cert_n, cert_family, cert_large, cert_json);
    if (mm->parsed()) return cmd_minima(min_n, min_samples, min_seed);
    if (s->parsed()) return cmd_serve(host, port, store_path);
  } catch (const pct::Error& e) {
    std::cerr << "error [" << pct::to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == pct::ErrorCode::kIo ? kExitIo : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
