#include <algorithm>
#include <map>
#include <set>

#include "cpg/passes.hpp"
#include "detail.hpp"

namespace cpg {
namespace {

std::optional<std::string> declared_type(const Graph& graph, NodeId id) {
  auto target = detail::refers_to(graph, id);
  if (!target) return std::nullopt;
  return graph.node(*target).string_property("type");
}

std::optional<std::string> literal_type(const Node& node) {
  if (auto kind = node.string_property("literalKind")) {
    if (*kind == "int" || *kind == "char") return *kind;
    if (*kind == "string") return "char*";
    if (*kind == "null") return "void*";
    return std::nullopt;
  }
  const Scalar* value = node.property("value");
  if (!value) return std::nullopt;
  if (std::holds_alternative<std::int64_t>(*value)) return "int";
  if (std::holds_alternative<bool>(*value)) return "bool";
  if (std::holds_alternative<std::string>(*value)) return "string";
  return std::nullopt;
}

bool is_pointer(const std::string& type) { return !type.empty() && type.back() == '*'; }

std::optional<std::string> binary_type(const Graph& graph, NodeId id) {
  static const std::set<std::string, std::less<>> boolean_ops = {"==", "!=", "<", ">", "<=", ">=", "&&", "||"};
  const std::string op = detail::operator_of(graph, id);
  auto lhs = graph.ast_child(id, "LHS");
  auto rhs = graph.ast_child(id, "RHS");
  if (boolean_ops.contains(op)) return "int";
  auto lt = lhs ? derive_type(graph, *lhs) : std::nullopt;
  if (op == "=") return lt ? lt : (rhs ? derive_type(graph, *rhs) : std::nullopt);
  auto rt = rhs ? derive_type(graph, *rhs) : std::nullopt;
  if (!lt || !rt) return std::nullopt;
  if (*lt == *rt) return lt;
  // Pointer arithmetic keeps the pointer type.
  if ((op == "+" || op == "-") && is_pointer(*lt) && !is_pointer(*rt)) return lt;
  if (op == "+" && is_pointer(*rt) && !is_pointer(*lt)) return rt;
  return std::nullopt;
}

std::optional<std::string> unary_type(const Graph& graph, NodeId id) {
  const std::string op = detail::operator_of(graph, id);
  if (op == "!") return "int";
  auto input = graph.ast_child(id, "INPUT");
  auto t = input ? derive_type(graph, *input) : std::nullopt;
  if (!t) return std::nullopt;
  if (op == "*") {
    if (!is_pointer(*t)) return std::nullopt;
    t->pop_back();
    return t;
  }
  if (op == "&") return *t + "*";
  return t;
}

std::optional<std::string> call_type(const Graph& graph, NodeId id) {
  std::optional<std::string> result;
  for (NodeId target : graph.neighbors(id, EdgeLabel::Invokes, Direction::Out)) {
    auto t = graph.node(target).string_property("type");
    if (!t || (result && *result != *t)) return std::nullopt;
    result = t;
  }
  return result;
}

NodeId type_node(Graph& graph, std::map<std::string, NodeId>& existing, const std::string& type) {
  if (auto it = existing.find(type); it != existing.end()) return it->second;
  const NodeId id = graph.add_node(kinds::TypeNode, type);
  auto [element, depth] = detail::split_pointer(type);
  graph.node(id).properties["pointerDepth"] = std::int64_t{depth};
  if (depth > 0) {
    std::string inner = type;
    inner.pop_back();
    graph.node(id).properties["elementType"] = inner;
  }
  existing.emplace(type, id);
  return id;
}

}  // namespace

std::optional<std::string> derive_type(const Graph& graph, NodeId id) {
  const Node& node = graph.node(id);
  if (auto cached = node.string_property("type"); cached && graph.is_a(id, kinds::Expression)) return cached;
  const KindRegistry& kinds = graph.kinds();
  if (kinds.is_subkind(node.kind, kinds::Literal)) return literal_type(node);
  if (kinds.is_subkind(node.kind, kinds::DeclaredReferenceExpression) ||
      kinds.is_subkind(node.kind, kinds::MemberExpression)) {
    return declared_type(graph, id);
  }
  if (kinds.is_subkind(node.kind, kinds::BinaryOperator)) return binary_type(graph, id);
  if (kinds.is_subkind(node.kind, kinds::UnaryOperator)) return unary_type(graph, id);
  if (kinds.is_subkind(node.kind, kinds::CallExpression)) return call_type(graph, id);
  if (kinds.is_subkind(node.kind, kinds::ConditionalExpression)) {
    auto then_branch = graph.ast_child(id, "THEN");
    auto else_branch = graph.ast_child(id, "ELSE");
    if (!then_branch || !else_branch) return std::nullopt;
    auto a = derive_type(graph, *then_branch);
    auto b = derive_type(graph, *else_branch);
    if (a && b && *a == *b) return a;
    return std::nullopt;
  }
  return node.string_property("type");
}

void type_pass(PassContext& context) {
  Graph& graph = context.graph;

  std::map<std::string, NodeId> existing;
  for (NodeId t : graph.nodes_by_kind(kinds::TypeNode, true)) {
    if (auto name = graph.node(t).name) existing.emplace(*name, t);
  }

  // Children before parents so cached types are available bottom-up.
  auto expressions = graph.nodes_by_kind(kinds::Expression, true);
  std::sort(expressions.begin(), expressions.end(), [](NodeId a, NodeId b) { return raw(a) > raw(b); });
  for (NodeId e : expressions) {
    if (graph.node(e).string_property("type")) continue;
    if (auto t = derive_type(graph, e)) graph.node(e).properties["type"] = *t;
  }

  std::set<std::string> names;
  for (const Node& node : graph.nodes()) {
    if (graph.kinds().is_subkind(node.kind, kinds::TypeNode)) continue;
    if (auto t = node.string_property("type"); t && !t->empty()) names.insert(*t);
  }
  // Element types of pointers are types too.
  std::vector<std::string> pending(names.begin(), names.end());
  for (const std::string& name : pending) {
    for (std::string inner = name; is_pointer(inner);) {
      inner.pop_back();
      names.insert(inner);
    }
  }
  pending.assign(names.begin(), names.end());
  for (const std::string& name : pending) {
    const NodeId id = type_node(graph, existing, name);
    auto [base, depth] = detail::split_pointer(name);
    if (depth > 0 && name != "void*" && graph.neighbors(id, EdgeLabel::Supertype, Direction::Out).empty()) {
      graph.add_edge(id, type_node(graph, existing, "void*"), EdgeLabel::Supertype);
    }
    if (depth == 0 && base != detail::record_name(base) && !detail::refers_to(graph, id)) {
      for (NodeId candidate : graph.nodes_by_name(detail::record_name(base))) {
        if (graph.is_a(candidate, kinds::RecordDeclaration)) {
          graph.add_edge(id, candidate, EdgeLabel::RefersTo);
          break;
        }
      }
    }
  }
}

}  // namespace cpg
