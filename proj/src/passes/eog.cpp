#include <algorithm>
#include <map>
#include <set>

#include "cpg/passes.hpp"
#include "detail.hpp"

namespace cpg {
namespace {

struct Pending {
  NodeId node;
  std::optional<BranchValue> branch;
};

class EogBuilder {
 public:
  EogBuilder(Graph& graph, const ScopeForest& scopes) : graph_(graph), scopes_(scopes) {}

  void function(NodeId fn) {
    auto body = graph_.ast_child(fn, "BODY");
    if (!body) return;
    preds_ = {{fn, std::nullopt}};
    visit(*body);
    // Whatever is left flows to the virtual exit.
  }

 private:
  void push(NodeId node) {
    for (const Pending& p : preds_) connect(p, node);
    preds_ = {{node, std::nullopt}};
    pushed_.push_back(node);
  }

  void connect(const Pending& p, NodeId to) {
    graph_.add_edge(p.node, to, EdgeLabel::Eog, {.branch = p.branch});
  }

  void visit_role(NodeId node, std::string_view role) {
    for (NodeId child : graph_.ast_children(node, role)) visit(child);
  }

  // First node pushed since `mark`, or `fallback` when nothing was pushed.
  NodeId entry_since(std::size_t mark, NodeId fallback) const {
    return pushed_.size() > mark ? pushed_[mark] : fallback;
  }

  static Pending on(NodeId node, bool value) { return {node, BranchValue::when(value)}; }

  void visit(NodeId node) {
    const KindRegistry& k = graph_.kinds();
    const KindId kind = graph_.node(node).kind;
    if (k.is_subkind(kind, kinds::ProblemNode)) {
      push(node);
    } else if (k.is_subkind(kind, kinds::CompoundStatement)) {
      visit_role(node, "STATEMENT");
    } else if (k.is_subkind(kind, kinds::DeclarationStatement)) {
      visit_role(node, "DECLARATION");
    } else if (k.is_subkind(kind, kinds::VariableDeclaration)) {
      visit_role(node, "INITIALIZER");
      push(node);
    } else if (k.is_subkind(kind, kinds::Declaration)) {
      // Local records and the like do not execute.
    } else if (k.is_subkind(kind, kinds::IfStatement)) {
      if_statement(node);
    } else if (k.is_subkind(kind, kinds::WhileStatement)) {
      loop(node, false);
    } else if (k.is_subkind(kind, kinds::ForStatement)) {
      loop(node, true);
    } else if (k.is_subkind(kind, kinds::BreakStatement) || k.is_subkind(kind, kinds::ContinueStatement)) {
      jump(node, k.is_subkind(kind, kinds::BreakStatement) ? JumpKind::Break : JumpKind::Continue);
    } else if (k.is_subkind(kind, kinds::ReturnStatement)) {
      visit_role(node, "RETURN_VALUE");
      push(node);
      preds_.clear();
    } else if (k.is_subkind(kind, kinds::BinaryOperator)) {
      binary(node);
    } else if (k.is_subkind(kind, kinds::ConditionalExpression)) {
      visit_role(node, "CONDITION");
      push(node);
      branches(node, "THEN", "ELSE");
    } else if (k.is_subkind(kind, kinds::CallExpression)) {
      visit_role(node, "BASE");
      visit_role(node, "ARGUMENT");
      push(node);
    } else {
      for (NodeId child : graph_.ast_children(node)) visit(child);
      push(node);
    }
  }

  // `node` is the current predecessor; routes TRUE into `yes`, FALSE into `no`
  // and joins both.
  void branches(NodeId node, std::string_view yes, std::string_view no) {
    preds_ = {on(node, true)};
    visit_role(node, yes);
    auto joined = std::move(preds_);
    preds_ = {on(node, false)};
    visit_role(node, no);
    preds_.insert(preds_.begin(), joined.begin(), joined.end());
  }

  void if_statement(NodeId node) {
    visit_role(node, "CONDITION");
    push(node);
    branches(node, "THEN", "ELSE");
  }

  void binary(NodeId node) {
    const std::string op = detail::operator_of(graph_, node);
    visit_role(node, "LHS");
    if (op == "&&" || op == "||") {
      push(node);
      // The RHS only runs when the LHS does not decide the result.
      const bool run_rhs = op == "&&";
      preds_ = {on(node, run_rhs)};
      visit_role(node, "RHS");
      preds_.push_back(on(node, !run_rhs));
      return;
    }
    visit_role(node, "RHS");
    push(node);
  }

  void loop(NodeId node, bool is_for) {
    if (is_for) visit_role(node, "INITIALIZER");
    const std::size_t mark = pushed_.size();
    const bool has_condition = graph_.ast_child(node, "CONDITION").has_value();
    visit_role(node, "CONDITION");
    push(node);
    const NodeId head = entry_since(mark, node);

    if (has_condition || !is_for) {
      preds_ = {on(node, true)};
    }
    visit_role(node, "BODY");
    for (NodeId c : continues_[node]) preds_.push_back({c, std::nullopt});
    if (is_for) visit_role(node, "ITERATION");
    for (const Pending& p : preds_) connect(p, head);

    preds_.clear();
    if (has_condition || !is_for) preds_.push_back(on(node, false));
    for (NodeId b : breaks_[node]) preds_.push_back({b, std::nullopt});
  }

  void jump(NodeId node, JumpKind kind) {
    push(node);
    preds_.clear();
    if (auto target = scopes_.jump_target(kind, node)) {
      (kind == JumpKind::Break ? breaks_ : continues_)[*target].push_back(node);
    }
  }

  Graph& graph_;
  const ScopeForest& scopes_;
  std::vector<Pending> preds_;
  std::vector<NodeId> pushed_;
  std::map<NodeId, std::vector<NodeId>> breaks_;
  std::map<NodeId, std::vector<NodeId>> continues_;
};

}  // namespace

void eog_pass(PassContext& context) {
  for (NodeId fn : context.graph.nodes_by_kind(kinds::FunctionDeclaration, true)) {
    if (!context.graph.neighbors(fn, EdgeLabel::Eog, Direction::Out).empty()) continue;
    EogBuilder(context.graph, context.scopes).function(fn);
  }
}

std::vector<NodeId> eog_exits(const Graph& graph, NodeId function) {
  std::vector<NodeId> exits;
  std::set<NodeId> seen{function};
  std::vector<NodeId> stack{function};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    auto next = graph.neighbors(n, EdgeLabel::Eog, Direction::Out);
    if (next.empty()) exits.push_back(n);
    for (NodeId s : next) {
      if (seen.insert(s).second) stack.push_back(s);
    }
  }
  std::sort(exits.begin(), exits.end());
  return exits;
}

}  // namespace cpg
