#include <map>
#include <tuple>

#include "cpg/passes.hpp"
#include "detail.hpp"

namespace cpg {
namespace {

constexpr std::string_view kInferredUnit = "<inferred>";

class Inferrer {
 public:
  explicit Inferrer(PassContext& context) : context_(context), graph_(context.graph) {}

  void run() {
    for (NodeId call : graph_.nodes_by_kind(kinds::CallExpression, true)) {
      const Node& node = graph_.node(call);
      if (!node.name || !graph_.neighbors(call, EdgeLabel::Invokes, Direction::Out).empty()) continue;
      graph_.add_edge(call, function_for(call), EdgeLabel::Invokes);
    }
    for (NodeId ref : graph_.nodes_by_kind(kinds::DeclaredReferenceExpression, true)) {
      const Node& node = graph_.node(ref);
      if (!node.name || detail::refers_to(graph_, ref)) continue;
      graph_.add_edge(ref, variable_for(*node.name), EdgeLabel::RefersTo);
    }
  }

 private:
  using FunctionKey = std::tuple<std::string, std::size_t, bool>;

  NodeId unit() {
    if (unit_) return *unit_;
    for (NodeId tu : graph_.nodes_by_name(kInferredUnit)) {
      if (graph_.node(tu).flags.inferred && graph_.is_a(tu, kinds::TranslationUnitDeclaration)) unit_ = tu;
    }
    if (!unit_) {
      unit_ = graph_.add_node(kinds::TranslationUnitDeclaration, std::string(kInferredUnit), std::nullopt,
                              NodeFlags::make_inferred());
    }
    for (NodeId decl : graph_.ast_children(*unit_, "DECLARATION")) {
      ++next_index_;
      const Node& d = graph_.node(decl);
      if (!d.name) continue;
      if (graph_.is_a(decl, kinds::FunctionDeclaration)) {
        functions_.emplace(FunctionKey{*d.name, graph_.ast_children(decl, "PARAMETER").size(),
                                       graph_.is_a(decl, kinds::MethodDeclaration)},
                           decl);
      } else {
        variables_.emplace(*d.name, decl);
      }
    }
    if (!context_.inferred_scope) {
      context_.inferred_scope = context_.scopes.add(ScopeTree(*unit_));
      for (NodeId decl : graph_.ast_children(*unit_, "DECLARATION")) {
        if (auto name = graph_.node(decl).name) context_.scopes.declare_global(*context_.inferred_scope, *name, decl);
      }
    }
    return *unit_;
  }

  NodeId declare(KindId kind, const std::string& name) {
    const NodeId tu = unit();
    const NodeId decl = graph_.add_node(kind, name, std::nullopt, NodeFlags::make_inferred());
    graph_.add_edge(tu, decl, EdgeLabel::Ast, {.role = "DECLARATION", .index = next_index_++});
    context_.scopes.declare_global(*context_.inferred_scope, name, decl);
    return decl;
  }

  NodeId function_for(NodeId call) {
    unit();
    const std::string& name = *graph_.node(call).name;
    const auto args = graph_.ast_children(call, "ARGUMENT");
    const bool member = graph_.is_a(call, kinds::MemberCallExpression);
    FunctionKey key{name, args.size(), member};
    if (auto it = functions_.find(key); it != functions_.end()) return it->second;

    const NodeId fn = declare(member ? kinds::MethodDeclaration : kinds::FunctionDeclaration, name);
    for (std::uint32_t i = 0; i < args.size(); ++i) {
      const NodeId param =
          graph_.add_node(kinds::ParameterDeclaration, "arg" + std::to_string(i), std::nullopt, NodeFlags::make_inferred());
      if (auto type = derive_type(graph_, args[i])) graph_.node(param).properties["type"] = *type;
      graph_.add_edge(fn, param, EdgeLabel::Ast, {.role = "PARAMETER", .index = i});
    }
    functions_.emplace(std::move(key), fn);
    return fn;
  }

  NodeId variable_for(const std::string& name) {
    unit();
    if (auto it = variables_.find(name); it != variables_.end()) return it->second;
    const NodeId var = declare(kinds::VariableDeclaration, name);
    variables_.emplace(name, var);
    return var;
  }

  PassContext& context_;
  Graph& graph_;
  std::optional<NodeId> unit_;
  std::uint32_t next_index_ = 0;
  std::map<FunctionKey, NodeId> functions_;
  std::map<std::string, NodeId> variables_;
};

}  // namespace

void inference_pass(PassContext& context) { Inferrer(context).run(); }

}  // namespace cpg
