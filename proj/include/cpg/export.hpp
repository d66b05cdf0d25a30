#pragma once

// Graph serialization: lossless JSON, Graphviz DOT and Cypher statements.
//
// JSON document:
//   { "cpgVersion": "1",
//     "nodes": [{ "id", "kind", "name"?, "flags": [..], "location"?, "properties": {..} }],
//     "edges": [{ "from", "to", "label", "role"?, "index"?, "branch"? }] }
// Nodes are sorted by id, edges by (from, to, label, role, index, branch).
// Source text slices (Node::code) are not exported.

#include <set>
#include <string>
#include <string_view>

#include "cpg/graph.hpp"

namespace cpg {

class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline constexpr std::string_view kCpgVersion = "1";

std::string to_json(const Graph& graph);

/// Node ids must be exactly 1..n. Kinds are looked up in `registry`; an
/// unknown kind raises TaxonomyError.
Graph from_json(std::string_view text, const KindRegistry& registry = KindRegistry::builtin());

// Edges whose label is not in `labels` are left out; nodes are always kept.
std::string to_dot(const Graph& graph, const std::set<EdgeLabel>& labels = {std::begin(kAllEdgeLabels),
                                                                             std::end(kAllEdgeLabels)});

// One statement per line; nodes before edges. Empty graph, empty text.
std::string to_cypher(const Graph& graph);

// Same ids, kinds, names, flags, locations, properties and edge multiset.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace cpg
