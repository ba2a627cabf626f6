#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "siturec/fraction.hpp"
#include "siturec/situation.hpp"
#include "siturec/taxonomy.hpp"
#include "siturec/timestamp.hpp"

namespace siturec {

/// A document the user engaged with, weighted by accumulated
/// interaction score. Scores are strictly positive; zero-score docs
/// are dropped at the edges.
struct PreferenceDoc {
  std::string doc_id;
  double score = 0.0;
  Timestamp last_seen;

  bool operator==(const PreferenceDoc&) const = default;
};

struct UserPreference {
  std::vector<PreferenceDoc> docs;  // unique by doc_id

  const PreferenceDoc* find(const std::string& doc_id) const;
  bool empty() const { return docs.empty(); }

  /// Adds scores per doc_id; last_seen takes the newer instant.
  void merge_from(const UserPreference& other);

  bool operator==(const UserPreference&) const = default;
};

struct Case {
  std::string case_id;
  Situation situation;
  UserPreference preference;
  Timestamp created_at;
  std::optional<Timestamp> last_matched_at;

  bool operator==(const Case&) const = default;
};

struct DimensionSims {
  Fraction location;
  Fraction time;
  Fraction social;

  Fraction total() const { return location + time + social; }
};

/// Unweighted per-dimension concept similarities; total in (0, 3].
DimensionSims situation_similarity(const TaxonomySet& taxonomies, const Situation& a,
                                   const Situation& b);

struct SimilarityEntry {
  std::string case_id;
  DimensionSims sims;
  Fraction total;
};

using SimilarityVector = std::vector<SimilarityEntry>;

struct RetrievalOutcome {
  std::optional<std::size_t> best_index;  // none on an empty case base
  SimilarityVector vector;                // one entry per case, case order
};

enum class RevisionKind { Added, Merged, Skipped };

std::string_view to_string(RevisionKind kind);

struct RevisionOutcome {
  RevisionKind kind = RevisionKind::Skipped;
  std::optional<std::string> case_id;  // case added to or merged into
};

/// A total of 3 within this tolerance is equivalent to triple id
/// equality (tree identity lifted dimension-wise).
inline constexpr double kExactMatchTolerance = 1e-9;

/// Ordered collection of past cases, unique by situation. Single
/// writer, any number of concurrent readers; no internal mutation
/// outside revise/mark_matched.
class CaseBase {
 public:
  CaseBase() = default;

  std::size_t size() const { return cases_.size(); }
  bool empty() const { return cases_.empty(); }
  const std::vector<Case>& cases() const { return cases_; }
  const Case* find(const std::string& case_id) const;
  const Case* find_by_situation(const Situation& s) const;

  /// Inserts a fully formed case (fixtures, loaders). Throws on a
  /// duplicate case id or duplicate situation.
  void add_case(Case c);

  /// Maximizes the total situation similarity; ties break to the most
  /// recent created_at, then the larger case_id. The vector is always
  /// fully populated for diagnostics.
  RetrievalOutcome retrieve_best(const TaxonomySet& taxonomies, const Situation& s) const;

  /// Update rule: empty feedback is skipped; a situation identical to a
  /// stored case merges into it (scores add, count unchanged); anything
  /// else appends a new case stamped with `now`.
  ///
  /// Triple id equality decides; when the caller passes the retrieval
  /// total, a disagreement with the total==3 signal is rejected as a
  /// taxonomy/case-base mismatch.
  RevisionOutcome revise(const TaxonomySet& taxonomies, const Situation& s,
                         const UserPreference& feedback, std::optional<double> best_total,
                         const Timestamp& now);

  void mark_matched(const std::string& case_id, const Timestamp& at);

  /// Case-base document, {"version": 1, "cases": [...]}.
  std::string save() const;

  /// Round-trips save() exactly: case order, ids, scores, timestamps.
  /// Stale concept ids are reported with the case and dimension.
  static CaseBase load(const std::string& json_text, const TaxonomySet& taxonomies);

  bool operator==(const CaseBase&) const = default;

 private:
  std::string next_case_id() const;

  std::vector<Case> cases_;  // insertion order
};

}  // namespace siturec
