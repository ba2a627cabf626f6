#include "siturec/casebase.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "siturec/errors.hpp"

namespace siturec {
namespace {

nlohmann::json situation_to_json(const Situation& s) {
  return {{"location", s.location}, {"time", s.time}, {"social", s.social}};
}

UserPreference normalize_feedback(const UserPreference& feedback) {
  UserPreference pref;
  for (const PreferenceDoc& doc : feedback.docs) {
    if (doc.doc_id.empty()) throw ValidationError("feedback: empty doc_id");
    if (pref.find(doc.doc_id) != nullptr) {
      throw ValidationError("feedback: duplicate doc_id \"" + doc.doc_id + "\"");
    }
    if (doc.score <= 0.0) continue;  // zero-score docs are dropped
    pref.docs.push_back(doc);
  }
  return pref;
}

}  // namespace

std::string_view to_string(RevisionKind kind) {
  switch (kind) {
    case RevisionKind::Added: return "added";
    case RevisionKind::Merged: return "merged";
    case RevisionKind::Skipped: return "skipped";
  }
  return "?";
}

const PreferenceDoc* UserPreference::find(const std::string& doc_id) const {
  for (const PreferenceDoc& doc : docs) {
    if (doc.doc_id == doc_id) return &doc;
  }
  return nullptr;
}

void UserPreference::merge_from(const UserPreference& other) {
  for (const PreferenceDoc& incoming : other.docs) {
    PreferenceDoc* mine = nullptr;
    for (PreferenceDoc& doc : docs) {
      if (doc.doc_id == incoming.doc_id) {
        mine = &doc;
        break;
      }
    }
    if (mine == nullptr) {
      docs.push_back(incoming);
    } else {
      mine->score += incoming.score;
      if (earlier_instant(mine->last_seen, incoming.last_seen)) {
        mine->last_seen = incoming.last_seen;
      }
    }
  }
}

DimensionSims situation_similarity(const TaxonomySet& taxonomies, const Situation& a,
                                   const Situation& b) {
  return DimensionSims{
      taxonomies.location.concept_similarity(a.location, b.location),
      taxonomies.time.concept_similarity(a.time, b.time),
      taxonomies.social.concept_similarity(a.social, b.social),
  };
}

const Case* CaseBase::find(const std::string& case_id) const {
  for (const Case& c : cases_) {
    if (c.case_id == case_id) return &c;
  }
  return nullptr;
}

const Case* CaseBase::find_by_situation(const Situation& s) const {
  for (const Case& c : cases_) {
    if (c.situation == s) return &c;
  }
  return nullptr;
}

void CaseBase::add_case(Case c) {
  if (c.case_id.empty()) throw ValidationError("case base: empty case_id");
  if (find(c.case_id) != nullptr) {
    throw ValidationError("case base: duplicate case_id \"" + c.case_id + "\"");
  }
  if (const Case* dup = find_by_situation(c.situation)) {
    throw ValidationError("case base: case \"" + c.case_id +
                          "\" duplicates the situation of \"" + dup->case_id + "\"");
  }
  cases_.push_back(std::move(c));
}

RetrievalOutcome CaseBase::retrieve_best(const TaxonomySet& taxonomies,
                                         const Situation& s) const {
  validate_situation(taxonomies, s);
  RetrievalOutcome out;
  out.vector.reserve(cases_.size());
  for (std::size_t i = 0; i < cases_.size(); ++i) {
    const Case& c = cases_[i];
    DimensionSims sims;
    try {
      sims = situation_similarity(taxonomies, s, c.situation);
    } catch (const UnknownConceptError& e) {
      throw UnknownConceptError("case \"" + c.case_id + "\": " + e.what());
    }
    const Fraction total = sims.total();
    out.vector.push_back(SimilarityEntry{c.case_id, sims, total});

    bool better = false;
    if (!out.best_index) {
      better = true;
    } else {
      const SimilarityEntry& incumbent = out.vector[*out.best_index];
      const Case& inc_case = cases_[*out.best_index];
      if (total != incumbent.total) {
        better = total > incumbent.total;
      } else if (c.created_at.epoch_seconds() != inc_case.created_at.epoch_seconds()) {
        better = c.created_at.epoch_seconds() > inc_case.created_at.epoch_seconds();
      } else {
        better = c.case_id > inc_case.case_id;
      }
    }
    if (better) out.best_index = i;
  }
  return out;
}

RevisionOutcome CaseBase::revise(const TaxonomySet& taxonomies, const Situation& s,
                                 const UserPreference& feedback, std::optional<double> best_total,
                                 const Timestamp& now) {
  validate_situation(taxonomies, s);
  const UserPreference pref = normalize_feedback(feedback);
  if (pref.empty()) return RevisionOutcome{RevisionKind::Skipped, std::nullopt};

  Case* exact = nullptr;
  for (Case& c : cases_) {
    if (c.situation == s) {
      exact = &c;
      break;
    }
  }
  if (best_total) {
    // Corroborating signal: total == 3 within tolerance iff an exact twin
    // is stored. Id equality stays authoritative; a disagreement means the
    // caller's retrieval ran against different state.
    const bool total_exact = std::abs(*best_total - 3.0) <= kExactMatchTolerance;
    if (total_exact != (exact != nullptr)) {
      throw ValidationError(
          "revise: retrieval total disagrees with situation identity (stale case base?)");
    }
  }

  if (exact != nullptr) {
    exact->preference.merge_from(pref);
    return RevisionOutcome{RevisionKind::Merged, exact->case_id};
  }

  Case fresh;
  fresh.case_id = next_case_id();
  fresh.situation = s;
  fresh.preference = pref;
  fresh.created_at = now;
  cases_.push_back(std::move(fresh));
  return RevisionOutcome{RevisionKind::Added, cases_.back().case_id};
}

void CaseBase::mark_matched(const std::string& case_id, const Timestamp& at) {
  for (Case& c : cases_) {
    if (c.case_id == case_id) {
      c.last_matched_at = at;
      return;
    }
  }
  throw ValidationError("case base: unknown case_id \"" + case_id + "\"");
}

std::string CaseBase::next_case_id() const {
  std::int64_t max_n = static_cast<std::int64_t>(cases_.size());
  for (const Case& c : cases_) {
    if (c.case_id.rfind("case", 0) != 0) continue;
    const std::string suffix = c.case_id.substr(4);
    if (suffix.empty() || suffix.find_first_not_of("0123456789") != std::string::npos) continue;
    if (suffix.size() > 18) continue;
    max_n = std::max(max_n, static_cast<std::int64_t>(std::stoll(suffix)));
  }
  std::int64_t n = max_n;
  std::string id;
  do {
    id = "case" + std::to_string(++n);
  } while (find(id) != nullptr);
  return id;
}

std::string CaseBase::save() const {
  nlohmann::json cases = nlohmann::json::array();
  for (const Case& c : cases_) {
    nlohmann::json docs = nlohmann::json::array();
    for (const PreferenceDoc& doc : c.preference.docs) {
      docs.push_back({{"doc_id", doc.doc_id},
                      {"score", doc.score},
                      {"last_seen", doc.last_seen.to_string()}});
    }
    nlohmann::json jc = {{"case_id", c.case_id},
                         {"situation", situation_to_json(c.situation)},
                         {"preference", std::move(docs)},
                         {"created_at", c.created_at.to_string()},
                         {"last_matched_at", nullptr}};
    if (c.last_matched_at) jc["last_matched_at"] = c.last_matched_at->to_string();
    cases.push_back(std::move(jc));
  }
  const nlohmann::json doc = {{"version", 1}, {"cases", std::move(cases)}};
  return doc.dump(2) + "\n";
}

CaseBase CaseBase::load(const std::string& json_text, const TaxonomySet& taxonomies) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("case-base file: ") + e.what());
  }
  if (!doc.is_object() || doc.value("version", 0) != 1) {
    throw ParseError("case-base file: expected {\"version\": 1, \"cases\": [...]}");
  }

  CaseBase cb;
  try {
    for (const auto& jc : doc.at("cases")) {
      Case c;
      c.case_id = jc.at("case_id").get<std::string>();
      const auto& js = jc.at("situation");
      c.situation.location = js.at("location").get<std::string>();
      c.situation.time = js.at("time").get<std::string>();
      c.situation.social = js.at("social").get<std::string>();

      const char* stale = nullptr;
      if (!taxonomies.location.contains(c.situation.location)) stale = "location";
      if (stale == nullptr && !taxonomies.time.contains(c.situation.time)) stale = "time";
      if (stale == nullptr && !taxonomies.social.contains(c.situation.social)) stale = "social";
      if (stale != nullptr) {
        const Situation& s = c.situation;
        const std::string concept = stale == std::string("location") ? s.location
                                    : stale == std::string("time")   ? s.time
                                                                     : s.social;
        throw ValidationError("case \"" + c.case_id + "\": stale " + stale + " concept \"" +
                              concept + "\"");
      }

      for (const auto& jd : jc.at("preference")) {
        PreferenceDoc pd;
        pd.doc_id = jd.at("doc_id").get<std::string>();
        pd.score = jd.at("score").get<double>();
        pd.last_seen = Timestamp::parse(jd.at("last_seen").get<std::string>());
        if (pd.doc_id.empty()) {
          throw ValidationError("case \"" + c.case_id + "\": empty doc_id");
        }
        if (pd.score <= 0.0) {
          throw ValidationError("case \"" + c.case_id + "\": non-positive score for \"" +
                                pd.doc_id + "\"");
        }
        if (c.preference.find(pd.doc_id) != nullptr) {
          throw ValidationError("case \"" + c.case_id + "\": duplicate doc_id \"" + pd.doc_id +
                                "\"");
        }
        c.preference.docs.push_back(std::move(pd));
      }

      c.created_at = Timestamp::parse(jc.at("created_at").get<std::string>());
      if (jc.contains("last_matched_at") && !jc.at("last_matched_at").is_null()) {
        c.last_matched_at = Timestamp::parse(jc.at("last_matched_at").get<std::string>());
      }
      cb.add_case(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("case-base file: ") + e.what());
  }
  return cb;
}

}  // namespace siturec
