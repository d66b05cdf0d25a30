#include <algorithm>

#include "cpg/passes.hpp"
#include "detail.hpp"

namespace cpg {

void symbol_pass(PassContext& context) {
  Graph& graph = context.graph;

  for (NodeId ref : graph.nodes_by_kind(kinds::DeclaredReferenceExpression, true)) {
    const Node& node = graph.node(ref);
    if (!node.name || detail::refers_to(graph, ref)) continue;
    if (auto decl = context.scopes.resolve(*node.name, ref)) {
      graph.add_edge(ref, *decl, EdgeLabel::RefersTo);
    }
  }

  // Parents are created before their children, so descending ids resolve
  // `a.b` before `a.b.c` needs its base type.
  auto members = graph.nodes_by_kind(kinds::MemberExpression, true);
  std::sort(members.begin(), members.end(), [](NodeId a, NodeId b) { return raw(a) > raw(b); });
  for (NodeId member : members) {
    const Node& node = graph.node(member);
    if (!node.name || detail::refers_to(graph, member)) continue;
    auto base = graph.ast_child(member, "BASE");
    if (!base) continue;
    auto type = derive_type(graph, *base);
    if (!type) continue;
    auto [record, depth] = detail::split_pointer(*type);
    const bool arrow = detail::operator_of(graph, member) == "->";
    if (depth != (arrow ? 1 : 0)) continue;
    const std::string qualified = std::string(detail::record_name(record)) + "." + *node.name;
    if (auto field = context.scopes.resolve(qualified, member)) {
      graph.add_edge(member, *field, EdgeLabel::RefersTo);
    }
  }
}

bool is_write_reference(const Graph& graph, NodeId reference) {
  if (!graph.is_a(reference, kinds::DeclaredReferenceExpression)) return false;
  const Edge* up = graph.ast_edge_to(reference);
  return up && up->role == "LHS" && graph.is_a(up->from, kinds::BinaryOperator) &&
         detail::operator_of(graph, up->from) == "=";
}

}  // namespace cpg
