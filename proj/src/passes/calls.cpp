#include <algorithm>

#include "cpg/passes.hpp"
#include "detail.hpp"

namespace cpg {
namespace {

bool has_body(const Graph& graph, NodeId fn) { return graph.ast_child(fn, "BODY").has_value(); }

bool types_match(const Graph& graph, NodeId fn, const std::vector<std::optional<std::string>>& arg_types) {
  const auto params = graph.ast_children(fn, "PARAMETER");
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto param_type = graph.node(params[i]).string_property("type");
    if (arg_types[i] && param_type && *arg_types[i] != *param_type) return false;
  }
  return true;
}

}  // namespace

void call_pass(PassContext& context) {
  Graph& graph = context.graph;
  // Arguments are created after their call; resolving them first lets nested
  // calls contribute argument types.
  auto calls = graph.nodes_by_kind(kinds::CallExpression, true);
  std::sort(calls.begin(), calls.end(), [](NodeId a, NodeId b) { return raw(a) > raw(b); });

  for (NodeId call : calls) {
    const Node& node = graph.node(call);
    if (!node.name || !graph.neighbors(call, EdgeLabel::Invokes, Direction::Out).empty()) continue;
    const bool member = graph.is_a(call, kinds::MemberCallExpression);
    const auto args = graph.ast_children(call, "ARGUMENT");

    std::vector<NodeId> by_arity;
    for (NodeId candidate : graph.nodes_by_name(*node.name)) {
      if (!graph.is_a(candidate, member ? kinds::MethodDeclaration : kinds::FunctionDeclaration)) continue;
      if (graph.ast_children(candidate, "PARAMETER").size() != args.size()) continue;
      by_arity.push_back(candidate);
    }
    if (by_arity.empty()) continue;

    std::vector<std::optional<std::string>> arg_types;
    for (NodeId arg : args) arg_types.push_back(derive_type(graph, arg));
    std::vector<NodeId> chosen;
    for (NodeId candidate : by_arity) {
      if (types_match(graph, candidate, arg_types)) chosen.push_back(candidate);
    }
    if (chosen.empty()) chosen = by_arity;

    // A definition makes its prototypes redundant.
    if (std::any_of(chosen.begin(), chosen.end(), [&](NodeId fn) { return has_body(graph, fn); })) {
      std::erase_if(chosen, [&](NodeId fn) { return !has_body(graph, fn); });
    }
    for (NodeId target : chosen) graph.add_edge(call, target, EdgeLabel::Invokes);
  }
}

}  // namespace cpg
