#include "siturec/taxonomy.hpp"

#include <nlohmann/json.hpp>

#include "siturec/errors.hpp"

namespace siturec {
namespace {

bool valid_id_token(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return true;
}

std::string context(Dimension d) { return "taxonomy " + std::string(to_string(d)) + ": "; }

}  // namespace

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::Location: return "location";
    case Dimension::Time: return "time";
    case Dimension::Social: return "social";
  }
  return "?";
}

Dimension dimension_from_string(std::string_view s) {
  if (s == "location") return Dimension::Location;
  if (s == "time") return Dimension::Time;
  if (s == "social") return Dimension::Social;
  throw ParseError("unknown dimension \"" + std::string(s) +
                   "\" (want location, time or social)");
}

Taxonomy Taxonomy::load(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("taxonomy file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("nodes")) {
    throw ParseError("taxonomy file: expected {\"dimension\", \"nodes\"}");
  }
  Dimension dim;
  std::vector<ConceptNode> nodes;
  try {
    dim = dimension_from_string(doc.at("dimension").get<std::string>());
    for (const auto& jn : doc.at("nodes")) {
      ConceptNode node;
      node.id = jn.at("id").get<std::string>();
      node.label = jn.value("label", node.id);
      if (jn.contains("parent") && !jn.at("parent").is_null()) {
        node.parent = jn.at("parent").get<std::string>();
      }
      nodes.push_back(std::move(node));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("taxonomy file: ") + e.what());
  }
  return from_nodes(dim, std::move(nodes));
}

Taxonomy Taxonomy::from_nodes(Dimension dimension, std::vector<ConceptNode> nodes) {
  Taxonomy t;
  t.dimension_ = dimension;
  t.nodes_ = std::move(nodes);

  const int n = static_cast<int>(t.nodes_.size());
  if (n == 0) throw ValidationError(context(dimension) + "no nodes");

  for (int i = 0; i < n; ++i) {
    const ConceptNode& node = t.nodes_[i];
    if (!valid_id_token(node.id)) {
      throw ValidationError(context(dimension) + "invalid concept id \"" + node.id +
                            "\" (want [a-z0-9_]+)");
    }
    if (!t.index_.emplace(node.id, i).second) {
      throw ValidationError(context(dimension) + "duplicate concept id \"" + node.id + "\"");
    }
  }

  t.parent_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const ConceptNode& node = t.nodes_[i];
    if (!node.parent) {
      if (t.root_ != -1) {
        throw ValidationError(context(dimension) + "multiple roots (\"" +
                              t.nodes_[t.root_].id + "\", \"" + node.id + "\")");
      }
      t.root_ = i;
      continue;
    }
    const auto it = t.index_.find(*node.parent);
    if (it == t.index_.end()) {
      throw ValidationError(context(dimension) + "node \"" + node.id +
                            "\" references missing parent \"" + *node.parent + "\"");
    }
    t.parent_[i] = it->second;
  }
  if (t.root_ == -1) throw ValidationError(context(dimension) + "no root node");

  // Depths by memoized parent-chain walks; a chain that never reaches a
  // resolved node within n steps is a cycle.
  t.depth_.assign(n, 0);
  std::vector<int> chain;
  for (int i = 0; i < n; ++i) {
    chain.clear();
    int cur = i;
    while (cur != -1 && t.depth_[cur] == 0) {
      chain.push_back(cur);
      if (static_cast<int>(chain.size()) > n) {
        throw ValidationError(context(dimension) + "cycle detected at node \"" + t.nodes_[i].id +
                              "\"");
      }
      cur = t.parent_[cur];
    }
    int base = (cur == -1) ? 0 : t.depth_[cur];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) t.depth_[*it] = ++base;
  }

  for (int i = 0; i < n; ++i) {
    const int expected = (t.parent_[i] == -1) ? 1 : t.depth_[t.parent_[i]] + 1;
    if (t.depth_[i] != expected) {
      throw ValidationError(context(dimension) + "inconsistent depth at node \"" + t.nodes_[i].id +
                            "\"");
    }
  }
  return t;
}

const std::string& Taxonomy::root_id() const { return nodes_[root_].id; }

bool Taxonomy::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

int Taxonomy::require(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw UnknownConceptError(context(dimension_) + "unknown concept \"" + std::string(id) + "\"");
  }
  return it->second;
}

const ConceptNode& Taxonomy::node(std::string_view id) const { return nodes_[require(id)]; }

int Taxonomy::depth(std::string_view id) const { return depth_[require(id)]; }

const std::string& Taxonomy::lcs(std::string_view a, std::string_view b) const {
  int x = require(a);
  int y = require(b);
  while (depth_[x] > depth_[y]) x = parent_[x];
  while (depth_[y] > depth_[x]) y = parent_[y];
  while (x != y) {
    x = parent_[x];
    y = parent_[y];
  }
  return nodes_[x].id;
}

Fraction Taxonomy::concept_similarity(std::string_view a, std::string_view b) const {
  const int da = depth_[require(a)];
  const int db = depth_[require(b)];
  const int dl = depth_[require(lcs(a, b))];
  return Fraction{2 * static_cast<std::int64_t>(dl), static_cast<std::int64_t>(da) + db};
}

const Taxonomy& TaxonomySet::by(Dimension d) const {
  switch (d) {
    case Dimension::Location: return location;
    case Dimension::Time: return time;
    case Dimension::Social: return social;
  }
  return location;
}

}  // namespace siturec
