#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pct/indices.hpp"
#include "pct/triad.hpp"

namespace httplib {
class Server;
}

namespace pct {

inline constexpr std::size_t kMinSessionLabels = 2;
inline constexpr std::size_t kMaxSessionLabels = 50;

enum class Verdict { kFirst, kSecond, kTie };

std::optional<Verdict> parse_verdict(std::string_view text);
std::string_view to_string(Verdict v);

/// Error surfaced to HTTP clients as {"error": code, "detail": message}.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& detail)
      : std::runtime_error(detail), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }

 private:
  int status_;
  std::string code_;
};

/// In-progress elicitation. Comparisons are keyed by (lower, higher) vertex
/// and store the outcome from the lower vertex's perspective.
struct Session {
  std::string id;
  std::vector<std::string> labels;
  std::map<std::pair<Vertex, Vertex>, int> comparisons;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;
  std::uint64_t revision = 0;

  std::size_t size() const { return labels.size(); }
  std::size_t total_pairs() const { return size() * (size() - 1) / 2; }
  bool complete() const { return comparisons.size() == total_pairs(); }
};

struct SuggestedPair {
  UndirectedEdge pair;
  std::size_t completes_triads = 0;
};

/// Analysis over the triads whose three pairs are all judged. Final indices
/// are only present once every pair is judged (and n >= 3).
struct PartialAnalysis {
  std::uint64_t revision = 0;
  std::size_t n = 0;
  std::size_t judged_pairs = 0;
  std::size_t total_pairs = 0;
  Count completed_triads = 0;
  TriadCensus census;
  std::vector<std::pair<Triad, TriadClass>> inconsistent;
  Rational partial_ratio;  // inconsistent / max(1, completed)
  std::optional<IndexReport> final_report;
  std::optional<SuggestedPair> suggestion;
  std::vector<std::pair<Triad, TriadClass>> newly_inconsistent;  // record responses only
};

PartialAnalysis analyze_partial(const Session& s);

/// Heuristic: the unjudged pair that completes the most triads whose other
/// two pairs are already judged; lexicographic tie-break.
std::optional<SuggestedPair> suggest_next(const Session& s);

/// Thread-safe in-memory session store with an optional append-only JSON
/// lines journal that is replayed on construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> journal = std::nullopt);

  Session create_session(std::vector<std::string> labels);
  /// Pair vertices are 0-based. `expected_revision`, when set, must match the
  /// current revision (409 otherwise).
  PartialAnalysis record_comparison(const std::string& id, Vertex first, Vertex second,
                                    Verdict verdict,
                                    std::optional<std::uint64_t> expected_revision = std::nullopt);
  Session get_session(const std::string& id) const;
  PartialAnalysis get_analysis(const std::string& id) const;
  std::optional<SuggestedPair> suggestion(const std::string& id) const;
  std::size_t session_count() const;

 private:
  struct Entry {
    mutable std::shared_mutex mutex;
    Session session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  void apply(Session& s, Vertex first, Vertex second, Verdict verdict, std::int64_t now_ms);
  void journal(const nlohmann::json& event);
  void replay(const std::filesystem::path& path);
  std::string new_id();

  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mutex journal_mutex_;
  std::optional<std::filesystem::path> journal_path_;
  std::ofstream journal_out_;
  std::mutex id_mutex_;
  std::uint64_t id_state_;
};

nlohmann::json to_json(const Session& s);
nlohmann::json to_json(const PartialAnalysis& a, const std::vector<std::string>& labels);
nlohmann::json partial_matrix_json(const Session& s);

/// Registers the REST routes (1-based pair indices on the wire).
void install_routes(httplib::Server& server, SessionStore& store);

}  // namespace pct
