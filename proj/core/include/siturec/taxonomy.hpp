#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "siturec/fraction.hpp"

namespace siturec {

enum class Dimension { Location, Time, Social };

std::string_view to_string(Dimension d);
Dimension dimension_from_string(std::string_view s);

struct ConceptNode {
  std::string id;     // token matching [a-z0-9_]+, unique within a taxonomy
  std::string label;  // display string
  std::optional<std::string> parent;  // absent on the root only
};

/// One rooted concept tree per context dimension. Immutable after
/// construction; safe to read from any number of threads.
///
/// Depth counts the nodes on the root-to-node path including both
/// ends, so depth(root) = 1 and depth(child) = depth(parent) + 1.
class Taxonomy {
 public:
  /// Parses and validates a taxonomy document:
  /// {"dimension": ..., "nodes": [{"id", "label", "parent"}, ...]}
  /// where the root has a null or absent parent.
  static Taxonomy load(const std::string& json_text);

  /// Validates a programmatically assembled node set.
  static Taxonomy from_nodes(Dimension dimension, std::vector<ConceptNode> nodes);

  Dimension dimension() const { return dimension_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<ConceptNode>& nodes() const { return nodes_; }
  const std::string& root_id() const;

  bool contains(std::string_view id) const;
  const ConceptNode& node(std::string_view id) const;

  int depth(std::string_view id) const;

  /// Least common subsumer: the deepest node that is an
  /// ancestor-or-self of both arguments. Unique in a tree.
  const std::string& lcs(std::string_view a, std::string_view b) const;

  /// 2 * depth(lcs(a,b)) / (depth(a) + depth(b)), exact. Always in
  /// (0, 1]; equals 1 iff a == b.
  Fraction concept_similarity(std::string_view a, std::string_view b) const;

 private:
  Taxonomy() = default;

  int require(std::string_view id) const;

  Dimension dimension_ = Dimension::Location;
  std::vector<ConceptNode> nodes_;         // file order
  std::unordered_map<std::string, int> index_;
  std::vector<int> parent_;                // index into nodes_, -1 for the root
  std::vector<int> depth_;
  int root_ = -1;
};

/// The three per-dimension taxonomies a deployment reasons over.
struct TaxonomySet {
  Taxonomy location;
  Taxonomy time;
  Taxonomy social;

  const Taxonomy& by(Dimension d) const;
};

}  // namespace siturec
