#include "pct/service.hpp"

#include <algorithm>
#include <ctime>
#include <random>
#include <set>

#include "httplib.h"
#include "pct/error.hpp"

namespace pct {
namespace {

using nlohmann::json;

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string iso8601(std::int64_t ms) {
  const std::time_t secs = static_cast<std::time_t>(ms / 1000);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms % 1000));
  return out;
}

json fraction(const Rational& r) { return {{"value", r.to_double()}, {"exact", r.to_string()}}; }

json triad_list(const std::vector<std::pair<Triad, TriadClass>>& triads,
                const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& [t, k] : triads) {
    out.push_back({{"triad", {t.a + 1, t.b + 1, t.c + 1}},
                   {"labels", {labels[t.a], labels[t.b], labels[t.c]}},
                   {"class", std::string(name(k))}});
  }
  return out;
}

// Dense outcome matrix plus judged flags for a session.
struct PartialView {
  std::size_t n;
  std::vector<std::int8_t> outcome;
  std::vector<bool> judged;

  explicit PartialView(const Session& s) : n(s.size()), outcome(n * n, 0), judged(n * n, false) {
    for (const auto& [pair, o] : s.comparisons) {
      const auto [a, b] = pair;
      outcome[a * n + b] = static_cast<std::int8_t>(o);
      outcome[b * n + a] = static_cast<std::int8_t>(-o);
      judged[a * n + b] = judged[b * n + a] = true;
    }
  }
  bool is_judged(Vertex a, Vertex b) const { return judged[a * n + b]; }
  int at(Vertex a, Vertex b) const { return outcome[a * n + b]; }
};

}  // namespace

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "first") return Verdict::kFirst;
  if (text == "second") return Verdict::kSecond;
  if (text == "tie") return Verdict::kTie;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kFirst: return "first";
    case Verdict::kSecond: return "second";
    case Verdict::kTie: return "tie";
  }
  return "tie";
}

std::optional<SuggestedPair> suggest_next(const Session& s) {
  const PartialView view(s);
  std::optional<SuggestedPair> best;
  for (Vertex a = 0; a < view.n; ++a)
    for (Vertex b = a + 1; b < view.n; ++b) {
      if (view.is_judged(a, b)) continue;
      std::size_t completes = 0;
      for (Vertex c = 0; c < view.n; ++c)
        if (c != a && c != b && view.is_judged(a, c) && view.is_judged(b, c)) ++completes;
      if (!best || completes > best->completes_triads) best = SuggestedPair{{a, b}, completes};
    }
  return best;
}

PartialAnalysis analyze_partial(const Session& s) {
  const PartialView view(s);
  PartialAnalysis a;
  a.revision = s.revision;
  a.n = view.n;
  a.judged_pairs = s.comparisons.size();
  a.total_pairs = s.total_pairs();
  for (Vertex x = 0; x < view.n; ++x)
    for (Vertex y = x + 1; y < view.n; ++y) {
      if (!view.is_judged(x, y)) continue;
      for (Vertex z = y + 1; z < view.n; ++z) {
        if (!view.is_judged(x, z) || !view.is_judged(y, z)) continue;
        const TriadClass k = classify_outcomes(view.at(x, y), view.at(x, z), view.at(y, z));
        a.census.add(k);
        if (is_inconsistent(k)) a.inconsistent.push_back({Triad{x, y, z}, k});
      }
    }
  a.completed_triads = a.census.total();
  a.partial_ratio = Rational(static_cast<Count>(a.inconsistent.size()),
                             std::max<Count>(1, a.completed_triads));
  if (s.complete() && view.n >= 3) {
    const GtGraph g = GtGraph::from_outcomes(view.n, view.outcome);
    a.final_report = analyze(g, AnalyzeOptions{.with_ties_denominator = true});
  }
  a.suggestion = suggest_next(s);
  return a;
}

SessionStore::SessionStore(std::optional<std::filesystem::path> journal)
    : journal_path_(std::move(journal)), id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ static_cast<std::uint64_t>(now_ms());
  if (journal_path_) {
    if (std::filesystem::exists(*journal_path_)) replay(*journal_path_);
    journal_out_.open(*journal_path_, std::ios::app);
    if (!journal_out_) throw Error(ErrorCode::kIo, "cannot open journal " + journal_path_->string());
  }
}

std::string SessionStore::new_id() {
  std::lock_guard lock(id_mutex_);
  std::mt19937_64 rng(id_state_++);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
  return buf;
}

void SessionStore::journal(const json& event) {
  if (!journal_path_) return;
  std::lock_guard lock(journal_mutex_);
  journal_out_ << event.dump() << '\n';
  journal_out_.flush();
}

void SessionStore::replay(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      const json ev = json::parse(line);
      const std::string kind = ev.at("event").get<std::string>();
      const std::string id = ev.at("id").get<std::string>();
      if (kind == "create") {
        auto entry = std::make_shared<Entry>();
        entry->session.id = id;
        entry->session.labels = ev.at("labels").get<std::vector<std::string>>();
        entry->session.created_ms = entry->session.updated_ms = ev.at("ts").get<std::int64_t>();
        sessions_[id] = entry;
      } else if (kind == "compare") {
        auto it = sessions_.find(id);
        if (it == sessions_.end()) continue;
        const auto pair = ev.at("pair").get<std::vector<Vertex>>();
        const auto verdict = parse_verdict(ev.at("verdict").get<std::string>());
        if (pair.size() != 2 || !verdict) continue;
        apply(it->second->session, pair[0], pair[1], *verdict, ev.at("ts").get<std::int64_t>());
      }
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParse, "journal " + path.string() + " line " +
                                         std::to_string(number) + ": " + e.what());
    }
  }
}

Session SessionStore::create_session(std::vector<std::string> labels) {
  if (labels.size() < kMinSessionLabels || labels.size() > kMaxSessionLabels) {
    throw ServiceError(422, "invalid_labels",
                       "a session needs between " + std::to_string(kMinSessionLabels) + " and " +
                           std::to_string(kMaxSessionLabels) + " labels, got " +
                           std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw ServiceError(422, "invalid_labels", "duplicate label \"" + l + "\"");

  auto entry = std::make_shared<Entry>();
  entry->session.labels = std::move(labels);
  entry->session.created_ms = entry->session.updated_ms = now_ms();
  {
    std::unique_lock lock(map_mutex_);
    do {
      entry->session.id = new_id();
    } while (sessions_.count(entry->session.id));
    sessions_[entry->session.id] = entry;
  }
  journal({{"event", "create"},
           {"id", entry->session.id},
           {"labels", entry->session.labels},
           {"ts", entry->session.created_ms}});
  return entry->session;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "not_found", "unknown session " + id);
  return it->second;
}

void SessionStore::apply(Session& s, Vertex first, Vertex second, Verdict verdict,
                         std::int64_t when) {
  int outcome = verdict == Verdict::kTie ? 0 : (verdict == Verdict::kFirst ? 1 : -1);
  if (first > second) {
    std::swap(first, second);
    outcome = -outcome;
  }
  s.comparisons[{first, second}] = outcome;
  s.updated_ms = when;
  ++s.revision;
}

PartialAnalysis SessionStore::record_comparison(const std::string& id, Vertex first,
                                                Vertex second, Verdict verdict,
                                                std::optional<std::uint64_t> expected_revision) {
  auto entry = find(id);
  std::unique_lock lock(entry->mutex);
  Session& s = entry->session;
  if (first >= s.size() || second >= s.size() || first == second) {
    throw ServiceError(422, "invalid_pair",
                       "pair must name two distinct alternatives in 1.." + std::to_string(s.size()));
  }
  if (expected_revision && *expected_revision != s.revision) {
    throw ServiceError(409, "revision_conflict",
                       "expected revision " + std::to_string(*expected_revision) +
                           " but session is at " + std::to_string(s.revision));
  }
  const PartialAnalysis before = analyze_partial(s);
  const std::int64_t when = now_ms();
  apply(s, first, second, verdict, when);
  journal({{"event", "compare"},
           {"id", id},
           {"pair", {first, second}},
           {"verdict", std::string(to_string(verdict))},
           {"ts", when}});
  PartialAnalysis after = analyze_partial(s);
  for (const auto& item : after.inconsistent) {
    if (std::find(before.inconsistent.begin(), before.inconsistent.end(), item) ==
        before.inconsistent.end()) {
      after.newly_inconsistent.push_back(item);
    }
  }
  return after;
}

Session SessionStore::get_session(const std::string& id) const {
  auto entry = find(id);
  std::shared_lock lock(entry->mutex);
  return entry->session;
}

PartialAnalysis SessionStore::get_analysis(const std::string& id) const {
  return analyze_partial(get_session(id));
}

std::optional<SuggestedPair> SessionStore::suggestion(const std::string& id) const {
  return suggest_next(get_session(id));
}

std::size_t SessionStore::session_count() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

json to_json(const Session& s) {
  json comparisons = json::array();
  for (const auto& [pair, o] : s.comparisons) {
    comparisons.push_back({{"pair", {pair.first + 1, pair.second + 1}},
                           {"verdict", o > 0 ? "first" : (o < 0 ? "second" : "tie")}});
  }
  return {{"id", s.id},
          {"labels", s.labels},
          {"n", s.size()},
          {"revision", s.revision},
          {"created_at", iso8601(s.created_ms)},
          {"updated_at", iso8601(s.updated_ms)},
          {"judged_pairs", s.comparisons.size()},
          {"total_pairs", s.total_pairs()},
          {"complete", s.complete()},
          {"comparisons", comparisons}};
}

json to_json(const PartialAnalysis& a, const std::vector<std::string>& labels) {
  json census = json::object();
  for (TriadClass k : kAllTriadClasses) census[std::string(name(k))] = a.census.count(k);
  json j = {{"revision", a.revision},
            {"n", a.n},
            {"judged_pairs", a.judged_pairs},
            {"total_pairs", a.total_pairs},
            {"complete", a.judged_pairs == a.total_pairs},
            {"completed_triads", a.completed_triads},
            {"census", census},
            {"inconsistent", triad_list(a.inconsistent, labels)},
            {"newly_inconsistent", triad_list(a.newly_inconsistent, labels)},
            {"partial_ratio", fraction(a.partial_ratio)}};
  if (a.final_report) {
    const IndexReport& r = *a.final_report;
    j["final"] = {{"zeta_g", fraction(r.zeta)},
                  {"eta", fraction(r.eta)},
                  {"inconsistent", r.inconsistent_count},
                  {"max_possible", r.max_possible},
                  {"total_triads", r.total_triads}};
  } else {
    j["final"] = nullptr;
  }
  if (a.suggestion) {
    j["suggestion"] = {a.suggestion->pair.a + 1, a.suggestion->pair.b + 1};
  } else {
    j["suggestion"] = nullptr;
  }
  return j;
}

json partial_matrix_json(const Session& s) {
  const std::size_t n = s.size();
  json rows = json::array();
  for (Vertex i = 0; i < n; ++i) {
    json row = json::array();
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) {
        row.push_back(0);
        continue;
      }
      auto it = s.comparisons.find({std::min(i, j), std::max(i, j)});
      if (it == s.comparisons.end()) row.push_back(nullptr);
      else row.push_back(i < j ? it->second : -it->second);
    }
    rows.push_back(row);
  }
  return {{"n", n}, {"labels", s.labels}, {"revision", s.revision}, {"matrix", rows}};
}

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code,
                const std::string& detail) {
  send_json(res, status, {{"error", code}, {"detail", detail}});
}

template <typename Handler>
auto guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const ServiceError& e) {
      send_error(res, e.status(), e.code(), e.what());
    } catch (const json::exception& e) {
      send_error(res, 400, "bad_request", e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, "internal", e.what());
    }
  };
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw ServiceError(400, "bad_request", std::string("invalid JSON body: ") + e.what());
  }
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  // Unrouted paths and methods get the same error body as handled failures.
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    const std::string code = res.status == 404 ? "not_found" : "http_" + std::to_string(res.status);
    res.set_content(json{{"error", code}, {"detail", req.method + " " + req.path}}.dump(),
                    "application/json");
    return httplib::Server::HandlerResponse::Handled;
  });

  server.Get("/health", guarded([&store](const httplib::Request&, httplib::Response& res) {
               send_json(res, 200, {{"status", "ok"}, {"sessions", store.session_count()}});
             }));

  server.Post("/sessions", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json body = parse_body(req);
                if (!body.is_object() || !body.contains("labels") || !body["labels"].is_array()) {
                  throw ServiceError(422, "invalid_labels", "body must contain a \"labels\" array");
                }
                std::vector<std::string> labels;
                for (const json& l : body["labels"]) {
                  if (!l.is_string()) throw ServiceError(422, "invalid_labels", "labels must be strings");
                  labels.push_back(l.get<std::string>());
                }
                send_json(res, 201, to_json(store.create_session(std::move(labels))));
              }));

  server.Get(R"(/sessions/([0-9a-f]+))",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send_json(res, 200, to_json(store.get_session(req.matches[1])));
             }));

  server.Post(
      R"(/sessions/([0-9a-f]+)/comparisons)",
      guarded([&store](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        const Session session = store.get_session(id);  // 404 before body checks
        const json body = parse_body(req);
        if (!body.is_object() || !body.contains("pair") || !body["pair"].is_array() ||
            body["pair"].size() != 2 || !body["pair"][0].is_number_integer() ||
            !body["pair"][1].is_number_integer()) {
          throw ServiceError(422, "invalid_pair", "\"pair\" must be two 1-based indices");
        }
        const long long i = body["pair"][0].get<long long>();
        const long long j = body["pair"][1].get<long long>();
        const long long n = static_cast<long long>(session.size());
        if (i < 1 || j < 1 || i > n || j > n || i == j) {
          throw ServiceError(422, "invalid_pair",
                             "pair must name two distinct alternatives in 1.." + std::to_string(n));
        }
        std::optional<Verdict> verdict;
        if (body.contains("verdict") && body["verdict"].is_string()) {
          verdict = parse_verdict(body["verdict"].get<std::string>());
        }
        if (!verdict) throw ServiceError(422, "invalid_verdict", "verdict must be first, second or tie");
        std::optional<std::uint64_t> expected;
        if (body.contains("expected_revision")) {
          if (!body["expected_revision"].is_number_unsigned()) {
            throw ServiceError(422, "invalid_revision", "expected_revision must be a non-negative integer");
          }
          expected = body["expected_revision"].get<std::uint64_t>();
        }
        const PartialAnalysis a = store.record_comparison(
            id, static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1), *verdict, expected);
        send_json(res, 200, to_json(a, session.labels));
      }));

  server.Get(R"(/sessions/([0-9a-f]+)/analysis)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const Session s = store.get_session(req.matches[1]);
               send_json(res, 200, to_json(analyze_partial(s), s.labels));
             }));

  server.Get(R"(/sessions/([0-9a-f]+)/suggestion)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const Session s = store.get_session(req.matches[1]);
               const auto next = suggest_next(s);
               json body = {{"revision", s.revision}, {"heuristic", true}};
               if (next) {
                 body["suggestion"] = {next->pair.a + 1, next->pair.b + 1};
                 body["completes_triads"] = next->completes_triads;
               } else {
                 body["suggestion"] = nullptr;
                 body["completes_triads"] = 0;
               }
               send_json(res, 200, body);
             }));

  server.Get(R"(/sessions/([0-9a-f]+)/matrix)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send_json(res, 200, partial_matrix_json(store.get_session(req.matches[1])));
             }));
}

}  // namespace pct
