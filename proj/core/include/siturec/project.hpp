#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "siturec/casebase.hpp"
#include "siturec/recommender.hpp"
#include "siturec/situation.hpp"
#include "siturec/taxonomy.hpp"

namespace siturec {

/// On-disk layout of a project directory.
struct ProjectPaths {
  std::filesystem::path root;

  std::filesystem::path config() const { return root / "config.json"; }
  std::filesystem::path ontology(Dimension d) const {
    return root / "ontologies" / (std::string(to_string(d)) + ".json");
  }
  std::filesystem::path places() const { return root / "mappings" / "places.csv"; }
  std::filesystem::path time_rules() const { return root / "mappings" / "time_rules.json"; }
  std::filesystem::path contacts() const { return root / "mappings" / "contacts.csv"; }
  std::filesystem::path casebase() const { return root / "casebase.json"; }
  std::filesystem::path history() const { return root / "history.jsonl"; }
  std::filesystem::path scenarios() const { return root / "scenarios"; }
  std::filesystem::path lockfile() const { return root / ".lock"; }
};

std::string read_file(const std::filesystem::path& path);

/// Write-temp-then-rename; readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

/// Advisory exclusive lock serializing mutating invocations on one
/// project. Throws when another process holds it.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path);
  ~FileLock();

  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

/// A fully loaded and validated project. Every referenced file must
/// exist and validate; loading stops at the first failure.
class Project {
 public:
  static Project open(const std::filesystem::path& root);

  const ProjectPaths& paths() const { return paths_; }
  const TaxonomySet& taxonomies() const { return taxonomies_; }
  const MappingTables& tables() const { return tables_; }
  const EngineConfig& config() const { return config_; }
  const CaseBase& casebase() const { return casebase_; }

  Engine make_engine(const EngineConfig& config, DiagnosticSink sink = {}) const;

  void save_casebase(const CaseBase& cb) const;  // atomic
  void append_history(const std::vector<HistoryEvent>& events) const;

  /// Resolves a scenario argument: as given (absolute or
  /// root-relative), else with ".jsonl" appended.
  std::filesystem::path resolve_scenario(const std::string& name) const;

 private:
  Project() = default;

  ProjectPaths paths_;
  TaxonomySet taxonomies_;
  MappingTables tables_;
  EngineConfig config_;
  CaseBase casebase_;
};

/// Writes the bundled demo project: three concept taxonomies, mapping
/// tables, a three-case case base, and a replayable scenario. The
/// target directory must be empty or absent.
void init_fixture_project(const std::filesystem::path& root);

}  // namespace siturec
