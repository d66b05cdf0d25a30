#pragma once

#include <string>
#include <string_view>

#include "cpg/graph.hpp"

namespace cpg::detail {

// "struct S**" -> {"struct S", 2}
inline std::pair<std::string, int> split_pointer(std::string_view type) {
  int depth = 0;
  while (!type.empty() && (type.back() == '*' || type.back() == ' ')) {
    if (type.back() == '*') ++depth;
    type.remove_suffix(1);
  }
  return {std::string(type), depth};
}

inline std::string_view record_name(std::string_view base) {
  constexpr std::string_view prefix = "struct ";
  if (base.substr(0, prefix.size()) == prefix) base.remove_prefix(prefix.size());
  return base;
}

inline std::string operator_of(const Graph& graph, NodeId id) {
  return graph.node(id).string_property("operator").value_or("");
}

inline std::optional<NodeId> refers_to(const Graph& graph, NodeId id) {
  auto targets = graph.neighbors(id, EdgeLabel::RefersTo, Direction::Out);
  if (targets.empty()) return std::nullopt;
  return targets.front();
}

// Innermost FunctionDeclaration enclosing `id` (exclusive).
inline std::optional<NodeId> enclosing_function(const Graph& graph, NodeId id) {
  for (auto p = graph.ast_parent(id); p; p = graph.ast_parent(*p)) {
    if (graph.is_a(*p, kinds::FunctionDeclaration)) return p;
  }
  return std::nullopt;
}

}  // namespace cpg::detail
