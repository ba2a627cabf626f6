#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "siturec/diagnostics.hpp"
#include "siturec/taxonomy.hpp"
#include "siturec/timestamp.hpp"

namespace siturec {

/// Raw context signals as captured from the device.
struct SensorSnapshot {
  double latitude = 0.0;
  double longitude = 0.0;
  Timestamp timestamp;
  std::optional<std::string> agenda_contact;
};

/// Semantic context triple; each field is a concept id in the
/// corresponding dimension's taxonomy.
struct Situation {
  std::string location;
  std::string time;
  std::string social;

  bool operator==(const Situation&) const = default;
};

/// Throws UnknownConceptError naming the dimension and id.
void validate_situation(const TaxonomySet& taxonomies, const Situation& s);

// --- location -------------------------------------------------------------

struct PlaceRecord {
  std::string place_id;
  std::string concept_id;  // location concept
  double latitude = 0.0;
  double longitude = 0.0;
  double radius_m = 0.0;
};

/// Parses "place_id,concept_id,lat,lon,radius_m" lines. Blank lines and
/// lines starting with '#' are skipped.
std::vector<PlaceRecord> parse_places_csv(const std::string& text, const Taxonomy& location);

/// Nearest place whose radius covers the point wins; ties go to the
/// smaller distance, then the lexicographically smaller place_id. With
/// no covering place the location root (most general concept) is used.
std::string resolve_location(const std::vector<PlaceRecord>& places, const Taxonomy& location,
                             double lat, double lon);

// --- time -------------------------------------------------------------------

enum class TimePredicate { HolidayCalendar, Weekend, Weekday, HourRange, Default };

struct TimeRule {
  TimePredicate predicate = TimePredicate::Default;
  int hour_begin = 0;  // hour_range matches local hour in [hour_begin, hour_end)
  int hour_end = 0;
  std::string concept_id;  // time concept
};

/// Ordered first-match rule list; the final rule is always `default`.
struct TimeRuleSet {
  std::vector<TimeRule> rules;
  std::set<CivilDate> holiday_dates;

  /// Parses {"holiday_dates": [...], "rules": [{"predicate", "concept_id", ...}]}.
  static TimeRuleSet parse(const std::string& json_text, const Taxonomy& time);
};

std::string resolve_time(const TimeRuleSet& rules, const Timestamp& ts);

// --- social -----------------------------------------------------------------

struct ContactDirectory {
  std::map<std::string, std::string> contacts;  // agenda name -> social concept
  std::string default_concept_id;               // used when alone or unknown

  /// Parses "contact_name,concept_id" lines plus one "default,<concept_id>" line.
  static ContactDirectory parse_csv(const std::string& text, const Taxonomy& social);
};

/// Unmapped contacts fall back to the default concept and emit a warning
/// on the diagnostics sink.
std::string resolve_social(const ContactDirectory& dir,
                           const std::optional<std::string>& agenda_contact,
                           const DiagnosticSink& sink = {});

// --- composition ------------------------------------------------------------

struct MappingTables {
  std::vector<PlaceRecord> places;
  TimeRuleSet time_rules;
  ContactDirectory contacts;
};

/// Abstracts a raw snapshot into a Situation over the three taxonomies.
/// Total for any in-range snapshot: every dimension has a fallback.
Situation identify_situation(const TaxonomySet& taxonomies, const MappingTables& tables,
                             const SensorSnapshot& snapshot, const DiagnosticSink& sink = {});

}  // namespace siturec
