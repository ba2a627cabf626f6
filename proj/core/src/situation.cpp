#include "siturec/situation.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "siturec/errors.hpp"
#include "siturec/geo.hpp"

namespace siturec {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_double(std::string_view field, const std::string& where) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(where + ": bad number \"" + std::string(field) + "\"");
  }
  return v;
}

bool skippable(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

TimePredicate predicate_from_string(std::string_view s) {
  if (s == "holiday_calendar") return TimePredicate::HolidayCalendar;
  if (s == "weekend") return TimePredicate::Weekend;
  if (s == "weekday") return TimePredicate::Weekday;
  if (s == "hour_range") return TimePredicate::HourRange;
  if (s == "default") return TimePredicate::Default;
  throw ParseError("time rules: unknown predicate \"" + std::string(s) + "\"");
}

}  // namespace

void validate_situation(const TaxonomySet& taxonomies, const Situation& s) {
  if (!taxonomies.location.contains(s.location)) {
    throw UnknownConceptError("unknown location concept \"" + s.location + "\"");
  }
  if (!taxonomies.time.contains(s.time)) {
    throw UnknownConceptError("unknown time concept \"" + s.time + "\"");
  }
  if (!taxonomies.social.contains(s.social)) {
    throw UnknownConceptError("unknown social concept \"" + s.social + "\"");
  }
}

std::vector<PlaceRecord> parse_places_csv(const std::string& text, const Taxonomy& location) {
  std::vector<PlaceRecord> places;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const std::string where = "places line " + std::to_string(line_no);
    const auto fields = split_fields(line);
    if (fields.size() != 5) {
      throw ParseError(where + ": expected place_id,concept_id,lat,lon,radius_m");
    }
    PlaceRecord rec;
    rec.place_id = std::string(fields[0]);
    rec.concept_id = std::string(fields[1]);
    rec.latitude = parse_double(fields[2], where);
    rec.longitude = parse_double(fields[3], where);
    rec.radius_m = parse_double(fields[4], where);
    if (rec.place_id.empty()) throw ParseError(where + ": empty place_id");
    if (!location.contains(rec.concept_id)) {
      throw UnknownConceptError(where + ": unknown location concept \"" + rec.concept_id + "\"");
    }
    validate_coordinates(rec.latitude, rec.longitude);
    if (!(rec.radius_m > 0.0)) {
      throw ValidationError(where + ": radius_m must be positive for \"" + rec.place_id + "\"");
    }
    for (const PlaceRecord& other : places) {
      if (other.place_id == rec.place_id) {
        throw ValidationError(where + ": duplicate place_id \"" + rec.place_id + "\"");
      }
    }
    places.push_back(std::move(rec));
  }
  return places;
}

std::string resolve_location(const std::vector<PlaceRecord>& places, const Taxonomy& location,
                             double lat, double lon) {
  validate_coordinates(lat, lon);
  const PlaceRecord* best = nullptr;
  double best_dist = 0.0;
  for (const PlaceRecord& place : places) {
    const double dist = haversine_m(lat, lon, place.latitude, place.longitude);
    if (dist > place.radius_m) continue;
    if (best == nullptr || dist < best_dist ||
        (dist == best_dist && place.place_id < best->place_id)) {
      best = &place;
      best_dist = dist;
    }
  }
  return best ? best->concept_id : location.root_id();
}

TimeRuleSet TimeRuleSet::parse(const std::string& json_text, const Taxonomy& time) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("time rules: ") + e.what());
  }

  TimeRuleSet set;
  try {
    for (const auto& jd : doc.value("holiday_dates", nlohmann::json::array())) {
      set.holiday_dates.insert(parse_civil_date(jd.get<std::string>()));
    }
    for (const auto& jr : doc.at("rules")) {
      TimeRule rule;
      rule.predicate = predicate_from_string(jr.at("predicate").get<std::string>());
      rule.concept_id = jr.at("concept_id").get<std::string>();
      if (rule.predicate == TimePredicate::HourRange) {
        rule.hour_begin = jr.at("h1").get<int>();
        rule.hour_end = jr.at("h2").get<int>();
      }
      set.rules.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("time rules: ") + e.what());
  }

  if (set.rules.empty() || set.rules.back().predicate != TimePredicate::Default) {
    throw ValidationError("time rules: last rule must have predicate \"default\"");
  }
  for (std::size_t i = 0; i < set.rules.size(); ++i) {
    const TimeRule& rule = set.rules[i];
    if (rule.predicate == TimePredicate::Default && i + 1 != set.rules.size()) {
      throw ValidationError("time rules: \"default\" must be the last rule");
    }
    if (rule.predicate == TimePredicate::HourRange &&
        !(rule.hour_begin >= 0 && rule.hour_begin < rule.hour_end && rule.hour_end <= 24)) {
      throw ValidationError("time rules: hour_range wants 0 <= h1 < h2 <= 24");
    }
    if (!time.contains(rule.concept_id)) {
      throw UnknownConceptError("time rules: unknown time concept \"" + rule.concept_id + "\"");
    }
  }
  return set;
}

std::string resolve_time(const TimeRuleSet& rules, const Timestamp& ts) {
  const std::chrono::weekday wd = ts.weekday();
  for (const TimeRule& rule : rules.rules) {
    switch (rule.predicate) {
      case TimePredicate::HolidayCalendar:
        if (rules.holiday_dates.count(ts.date()) != 0) return rule.concept_id;
        break;
      case TimePredicate::Weekend:
        if (wd == std::chrono::Saturday || wd == std::chrono::Sunday) return rule.concept_id;
        break;
      case TimePredicate::Weekday:
        if (wd != std::chrono::Saturday && wd != std::chrono::Sunday) return rule.concept_id;
        break;
      case TimePredicate::HourRange:
        if (static_cast<int>(ts.hour) >= rule.hour_begin &&
            static_cast<int>(ts.hour) < rule.hour_end) {
          return rule.concept_id;
        }
        break;
      case TimePredicate::Default:
        return rule.concept_id;
    }
  }
  // unreachable: validation guarantees a trailing default
  throw ValidationError("time rules: no rule matched");
}

ContactDirectory ContactDirectory::parse_csv(const std::string& text, const Taxonomy& social) {
  ContactDirectory dir;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_default = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const std::string where = "contacts line " + std::to_string(line_no);
    const auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(where + ": expected contact_name,concept_id");
    const std::string name(fields[0]);
    const std::string concept(fields[1]);
    if (!social.contains(concept)) {
      throw UnknownConceptError(where + ": unknown social concept \"" + concept + "\"");
    }
    if (name == "default") {
      if (have_default) throw ValidationError(where + ": duplicate default line");
      have_default = true;
      dir.default_concept_id = concept;
      continue;
    }
    if (name.empty()) throw ParseError(where + ": empty contact name");
    if (!dir.contacts.emplace(name, concept).second) {
      throw ValidationError(where + ": duplicate contact \"" + name + "\"");
    }
  }
  if (!have_default) {
    throw ValidationError("contacts: missing \"default,<concept_id>\" line");
  }
  return dir;
}

std::string resolve_social(const ContactDirectory& dir,
                           const std::optional<std::string>& agenda_contact,
                           const DiagnosticSink& sink) {
  if (!agenda_contact || agenda_contact->empty()) return dir.default_concept_id;
  const auto it = dir.contacts.find(*agenda_contact);
  if (it == dir.contacts.end()) {
    diag(sink, "unmapped agenda contact \"" + *agenda_contact + "\"; using default social concept");
    return dir.default_concept_id;
  }
  return it->second;
}

Situation identify_situation(const TaxonomySet& taxonomies, const MappingTables& tables,
                             const SensorSnapshot& snapshot, const DiagnosticSink& sink) {
  validate_coordinates(snapshot.latitude, snapshot.longitude);
  return Situation{
      resolve_location(tables.places, taxonomies.location, snapshot.latitude, snapshot.longitude),
      resolve_time(tables.time_rules, snapshot.timestamp),
      resolve_social(tables.contacts, snapshot.agenda_contact, sink),
  };
}

}  // namespace siturec
