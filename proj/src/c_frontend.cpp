#include "cpg/c_frontend.hpp"

#include <algorithm>

namespace cpg::c {
namespace {

class LineTable {
 public:
  explicit LineTable(std::string_view source) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (source[i] == '\n') starts_.push_back(i + 1);
    }
  }

  std::pair<int, int> position(std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    const auto line = static_cast<std::size_t>(it - starts_.begin());
    return {static_cast<int>(line), static_cast<int>(offset - starts_[line - 1] + 1)};
  }

 private:
  std::vector<std::size_t> starts_;
};

class Translator {
 public:
  Translator(Graph& graph, std::string_view source, std::string file)
      : graph_(graph), source_(source), file_(std::move(file)), lines_(source) {}

  NodeId unit(const SyntaxNode& root) {
    const NodeId tu = create(kinds::TranslationUnitDeclaration, root, file_);
    graph_.node(tu).properties["language"] = std::string("C");
    std::uint32_t index = 0;
    for (const auto& decl : root.children) attach(tu, translate(*decl), "DECLARATION", index++);
    return tu;
  }

 private:
  SourceLocation location(Span span) const {
    // The unit's span may end one past a trailing newline; keep it on the
    // last character's line.
    const std::size_t last = span.end > span.begin ? span.end - 1 : span.begin;
    auto [start_line, start_col] = lines_.position(span.begin);
    auto [end_line, end_col] = lines_.position(last);
    if (span.end > span.begin) ++end_col;
    return {file_, start_line, start_col, end_line, end_col};
  }

  NodeId create(KindId kind, const SyntaxNode& syntax, std::optional<std::string> name = std::nullopt) {
    const NodeId id = graph_.add_node(kind, std::move(name), location(syntax.span));
    graph_.node(id).code = std::string(source_.substr(syntax.span.begin, syntax.span.end - syntax.span.begin));
    return id;
  }

  void attach(NodeId parent, NodeId child, std::string role, std::optional<std::uint32_t> index = std::nullopt) {
    graph_.add_edge(parent, child, EdgeLabel::Ast, {.role = std::move(role), .index = index});
  }

  void attach_optional(NodeId parent, const SyntaxNode* child, std::string role) {
    if (child) attach(parent, translate(*child), std::move(role));
  }

  void set(NodeId id, std::string key, Scalar value) { graph_.node(id).properties[std::move(key)] = std::move(value); }

  NodeId translate(const SyntaxNode& s) {
    switch (s.kind) {
      case SyntaxKind::TranslationUnit:
        return unit(s);
      case SyntaxKind::Struct: {
        const NodeId id = create(kinds::RecordDeclaration, s, s.text);
        set(id, "kind", std::string("struct"));
        std::uint32_t index = 0;
        for (const auto& field : s.children) attach(id, translate(*field), "FIELD", index++);
        return id;
      }
      case SyntaxKind::Field: {
        const NodeId id = create(kinds::FieldDeclaration, s, s.text);
        set(id, "type", s.type);
        return id;
      }
      case SyntaxKind::Function: {
        const NodeId id = create(kinds::FunctionDeclaration, s, s.text);
        set(id, "type", s.type);
        for (std::size_t i = 1; i < s.children.size(); ++i) {
          attach(id, translate(*s.children[i]), "PARAMETER", static_cast<std::uint32_t>(i - 1));
        }
        attach_optional(id, s.child(0), "BODY");
        return id;
      }
      case SyntaxKind::Param: {
        const NodeId id = create(kinds::ParameterDeclaration, s,
                                 s.text.empty() ? std::nullopt : std::optional<std::string>(s.text));
        set(id, "type", s.type);
        return id;
      }
      case SyntaxKind::VarDecl: {
        const NodeId id = create(kinds::VariableDeclaration, s, s.text);
        set(id, "type", s.type);
        attach_optional(id, s.child(0), "INITIALIZER");
        return id;
      }
      case SyntaxKind::Compound: {
        const NodeId id = create(kinds::CompoundStatement, s);
        std::uint32_t index = 0;
        for (const auto& stmt : s.children) attach(id, translate(*stmt), "STATEMENT", index++);
        return id;
      }
      case SyntaxKind::If: {
        const NodeId id = create(kinds::IfStatement, s);
        attach_optional(id, s.child(0), "CONDITION");
        attach_optional(id, s.child(1), "THEN");
        attach_optional(id, s.child(2), "ELSE");
        return id;
      }
      case SyntaxKind::While: {
        const NodeId id = create(kinds::WhileStatement, s);
        attach_optional(id, s.child(0), "CONDITION");
        attach_optional(id, s.child(1), "BODY");
        return id;
      }
      case SyntaxKind::For: {
        const NodeId id = create(kinds::ForStatement, s);
        attach_optional(id, s.child(0), "INITIALIZER");
        attach_optional(id, s.child(1), "CONDITION");
        attach_optional(id, s.child(2), "ITERATION");
        attach_optional(id, s.child(3), "BODY");
        return id;
      }
      case SyntaxKind::Return: {
        const NodeId id = create(kinds::ReturnStatement, s);
        attach_optional(id, s.child(0), "RETURN_VALUE");
        return id;
      }
      case SyntaxKind::Break:
        return create(kinds::BreakStatement, s);
      case SyntaxKind::Continue:
        return create(kinds::ContinueStatement, s);
      case SyntaxKind::DeclStmt: {
        const NodeId id = create(kinds::DeclarationStatement, s);
        std::uint32_t index = 0;
        for (const auto& var : s.children) attach(id, translate(*var), "DECLARATION", index++);
        return id;
      }
      case SyntaxKind::IntLit:
      case SyntaxKind::CharLit: {
        const NodeId id = create(kinds::Literal, s);
        set(id, "value", s.int_value);
        set(id, "literalKind", std::string(s.kind == SyntaxKind::IntLit ? "int" : "char"));
        return id;
      }
      case SyntaxKind::StringLit: {
        const NodeId id = create(kinds::Literal, s);
        set(id, "value", s.string_value);
        set(id, "literalKind", std::string("string"));
        return id;
      }
      case SyntaxKind::NullLit: {
        const NodeId id = create(kinds::Literal, s);
        set(id, "value", nullptr);
        set(id, "literalKind", std::string("null"));
        return id;
      }
      case SyntaxKind::Ident:
        return create(kinds::DeclaredReferenceExpression, s, s.text);
      case SyntaxKind::Binary: {
        const NodeId id = create(kinds::BinaryOperator, s);
        set(id, "operator", s.text);
        attach_optional(id, s.child(0), "LHS");
        attach_optional(id, s.child(1), "RHS");
        return id;
      }
      case SyntaxKind::Unary: {
        const NodeId id = create(kinds::UnaryOperator, s);
        set(id, "operator", s.text);
        attach_optional(id, s.child(0), "INPUT");
        return id;
      }
      case SyntaxKind::Ternary: {
        const NodeId id = create(kinds::ConditionalExpression, s);
        attach_optional(id, s.child(0), "CONDITION");
        attach_optional(id, s.child(1), "THEN");
        attach_optional(id, s.child(2), "ELSE");
        return id;
      }
      case SyntaxKind::Call: {
        const NodeId id = create(kinds::CallExpression, s, s.text);
        std::uint32_t index = 0;
        for (const auto& arg : s.children) attach(id, translate(*arg), "ARGUMENT", index++);
        return id;
      }
      case SyntaxKind::MemberCall: {
        const NodeId id = create(kinds::MemberCallExpression, s, s.text);
        set(id, "operator", s.access);
        attach_optional(id, s.child(0), "BASE");
        for (std::size_t i = 1; i < s.children.size(); ++i) {
          attach(id, translate(*s.children[i]), "ARGUMENT", static_cast<std::uint32_t>(i - 1));
        }
        return id;
      }
      case SyntaxKind::Member: {
        const NodeId id = create(kinds::MemberExpression, s, s.text);
        set(id, "operator", s.access);
        attach_optional(id, s.child(0), "BASE");
        return id;
      }
      case SyntaxKind::Problem: {
        const NodeId id = create(kinds::ProblemNode, s);
        set(id, "message", s.message);
        return id;
      }
    }
    throw Error("unhandled syntax kind");
  }

  Graph& graph_;
  std::string_view source_;
  std::string file_;
  LineTable lines_;
};

bool always_returns(const Graph& graph, NodeId id) {
  const auto& kinds = graph.kinds();
  const KindId kind = graph.node(id).kind;
  if (kinds.is_subkind(kind, kinds::ReturnStatement)) return true;
  if (kinds.is_subkind(kind, kinds::CompoundStatement)) {
    for (NodeId stmt : graph.ast_children(id, "STATEMENT")) {
      if (always_returns(graph, stmt)) return true;
    }
    return false;
  }
  if (kinds.is_subkind(kind, kinds::IfStatement)) {
    auto then_branch = graph.ast_child(id, "THEN");
    auto else_branch = graph.ast_child(id, "ELSE");
    return then_branch && else_branch && always_returns(graph, *then_branch) &&
           always_returns(graph, *else_branch);
  }
  return false;
}

}  // namespace

TranslationResult translate(Graph& graph, const SyntaxTree& tree, std::string_view source, std::string file) {
  Translator translator(graph, source, file);
  const NodeId root = translator.unit(*tree.root);
  std::vector<std::string> scope_diagnostics;
  TranslationResult result{root, file, build_scopes(graph, root, &scope_diagnostics), {}, {}};
  for (const auto& error : tree.errors) {
    result.diagnostics.push_back(file + ":" + std::to_string(error.line) + ":" + std::to_string(error.col) +
                                 ": syntax error: " + error.message);
  }
  for (auto& d : scope_diagnostics) result.diagnostics.push_back(file + ": " + d);
  result.coverage = collect_coverage(graph, root);
  return result;
}

std::size_t insert_implicit(Graph& graph, const TranslationResult& unit) {
  std::size_t added = 0;
  for (NodeId decl : graph.ast_children(unit.root, "DECLARATION")) {
    if (!graph.is_a(decl, kinds::FunctionDeclaration)) continue;
    if (graph.node(decl).string_property("type") != "void") continue;
    auto body = graph.ast_child(decl, "BODY");
    if (!body || always_returns(graph, *body)) continue;
    std::uint32_t next = 0;
    for (const Edge* e : graph.edges_of(*body, EdgeLabel::Ast, Direction::Out)) {
      if (e->role == "STATEMENT" && e->index) next = std::max(next, *e->index + 1);
    }
    const NodeId ret = graph.add_node(kinds::ReturnStatement, std::nullopt, std::nullopt, NodeFlags::make_implicit());
    graph.add_edge(*body, ret, EdgeLabel::Ast, {.role = "STATEMENT", .index = next});
    ++added;
  }
  return added;
}

TranslationResult translate_source(Graph& graph, std::string_view source, std::string file) {
  const SyntaxTree tree = parse(source);
  TranslationResult result = translate(graph, tree, source, std::move(file));
  insert_implicit(graph, result);
  return result;
}

}  // namespace cpg::c
