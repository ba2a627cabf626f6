#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "siturec/casebase.hpp"
#include "siturec/diagnostics.hpp"
#include "siturec/situation.hpp"
#include "siturec/taxonomy.hpp"

namespace siturec {

struct EngineConfig {
  double threshold_b = 2.4;      // minimum total similarity before reuse
  double click_weight = 1.0;
  double save_weight = 2.0;
  int max_recommendations = 10;

  void validate() const;  // 0 < threshold_b <= 3, positive weights and cap

  static EngineConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

enum class Decision { Recommended, BelowThreshold, ColdStart };

std::string_view to_string(Decision d);

struct RecommendationResult {
  Decision decision = Decision::ColdStart;
  Situation situation;                          // the identified current situation
  std::optional<std::string> matched_case_id;   // argmax case; none on cold start
  std::optional<double> total_similarity;
  SimilarityVector similarity_vector;
  std::vector<std::string> docs;  // score desc, doc_id asc, capped; empty unless recommended
};

enum class EventKind { Snapshot, Recommendation, Feedback, Revision };

std::string_view to_string(EventKind kind);

/// One line of the append-only interaction journal.
struct HistoryEvent {
  Timestamp timestamp;
  EventKind kind = EventKind::Snapshot;
  std::optional<Situation> situation;
  nlohmann::json payload;

  std::string to_journal_line() const;
};

enum class FeedbackAction { Click, Save };

FeedbackAction parse_feedback_action(std::string_view token);
std::string_view to_string(FeedbackAction a);

struct FeedbackEvent {
  std::string doc_id;
  FeedbackAction action = FeedbackAction::Click;
};

struct ReplaySummary {
  int recommendations = 0;
  int cold_starts = 0;
  int below_threshold = 0;
  int cases_added = 0;
  int cases_merged = 0;
  int errors = 0;  // only populated under keep-going

  bool operator==(const ReplaySummary&) const = default;
};

struct ReplayReport {
  nlohmann::json events = nlohmann::json::array();  // one record per scenario line
  ReplaySummary summary;

  nlohmann::json to_json() const;
  std::string to_string() const;  // canonical serialization, byte-stable
};

/// Orchestrates the identify / retrieve / threshold-gated reuse /
/// revise cycle over one case base. One logical mutator: recommend,
/// record_feedback and replay are called one at a time by the owner;
/// const inspection may run concurrently with other reads.
class Engine {
 public:
  Engine(TaxonomySet taxonomies, MappingTables tables, EngineConfig config, CaseBase cases,
         DiagnosticSink sink = {});

  const TaxonomySet& taxonomies() const { return taxonomies_; }
  const MappingTables& tables() const { return tables_; }
  const EngineConfig& config() const { return config_; }
  const CaseBase& casebase() const { return cases_; }

  /// Events appended by this engine instance, in order.
  const std::vector<HistoryEvent>& history() const { return history_; }

  /// Identify the situation, retrieve the best case, and reuse its
  /// preference when the total passes the threshold. Appends snapshot
  /// and recommendation events; a reuse stamps the case's
  /// last_matched_at. Recommending never revises the case base.
  RecommendationResult recommend(const SensorSnapshot& snapshot);

  /// Scores the observed documents with the configured action weights
  /// and applies the revision rule. Appends feedback and revision
  /// events.
  RevisionOutcome record_feedback(const SensorSnapshot& snapshot,
                                  const std::vector<FeedbackEvent>& events);
  RevisionOutcome record_feedback(const Situation& situation, const Timestamp& at,
                                  const std::vector<FeedbackEvent>& events);

  /// Replays a scenario stream: one JSON record per line, types
  /// "snapshot", "recommend_request", "feedback". Malformed lines abort
  /// with the line number unless keep_going, which records them in the
  /// report and continues. Deterministic: same stream + same initial
  /// state => byte-identical report.
  ReplayReport replay(std::istream& scenario, bool keep_going = false);

 private:
  void append_event(HistoryEvent event);
  UserPreference build_preference(const std::vector<FeedbackEvent>& events,
                                  const Timestamp& at) const;

  TaxonomySet taxonomies_;
  MappingTables tables_;
  EngineConfig config_;
  CaseBase cases_;
  std::vector<HistoryEvent> history_;
  DiagnosticSink sink_;
};

}  // namespace siturec
