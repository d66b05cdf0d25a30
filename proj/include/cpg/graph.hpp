#pragma once

// Labeled directed property multi-graph, node-kind taxonomy, and the
// primitive construction / traversal operations.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace cpg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TaxonomyError : public Error {
 public:
  using Error::Error;
};

// Dangling endpoints, unknown ids, broken AST forest.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Edge attributes that are not legal for the edge's label.
class AttributeError : public Error {
 public:
  using Error::Error;
};

enum class NodeId : std::uint32_t {};
enum class KindId : std::uint16_t {};

constexpr std::uint32_t raw(NodeId id) { return static_cast<std::uint32_t>(id); }
constexpr std::uint16_t raw(KindId id) { return static_cast<std::uint16_t>(id); }

// X(name, parent). A kind whose parent is itself is a root.
#define CPG_BUILTIN_KINDS(X)                                   \
  X(Declaration, Declaration)                                  \
  X(Statement, Statement)                                      \
  X(Expression, Expression)                                    \
  X(TypeNode, TypeNode)                                        \
  X(ProblemNode, ProblemNode)                                  \
  X(TranslationUnitDeclaration, Declaration)                   \
  X(NamespaceDeclaration, Declaration)                         \
  X(RecordDeclaration, Declaration)                            \
  X(ValueDeclaration, Declaration)                             \
  X(FieldDeclaration, ValueDeclaration)                        \
  X(FunctionDeclaration, ValueDeclaration)                     \
  X(MethodDeclaration, FunctionDeclaration)                    \
  X(ConstructorDeclaration, MethodDeclaration)                 \
  X(ParameterDeclaration, ValueDeclaration)                    \
  X(VariableDeclaration, ValueDeclaration)                     \
  X(CompoundStatement, Statement)                              \
  X(IfStatement, Statement)                                    \
  X(WhileStatement, Statement)                                 \
  X(ForStatement, Statement)                                   \
  X(ReturnStatement, Statement)                                \
  X(BreakStatement, Statement)                                 \
  X(ContinueStatement, Statement)                              \
  X(DeclarationStatement, Statement)                           \
  X(Literal, Expression)                                       \
  X(DeclaredReferenceExpression, Expression)                   \
  X(BinaryOperator, Expression)                                \
  X(UnaryOperator, Expression)                                 \
  X(CallExpression, Expression)                                \
  X(MemberCallExpression, CallExpression)                      \
  X(MemberExpression, Expression)                              \
  X(ConditionalExpression, Expression)

namespace kinds {
namespace detail {
enum Index : std::uint16_t {
#define CPG_KIND_INDEX(name, parent) name,
  CPG_BUILTIN_KINDS(CPG_KIND_INDEX)
#undef CPG_KIND_INDEX
      Count
};
}  // namespace detail

#define CPG_KIND_CONSTANT(name, parent) inline constexpr KindId name{detail::name};
CPG_BUILTIN_KINDS(CPG_KIND_CONSTANT)
#undef CPG_KIND_CONSTANT
}  // namespace kinds

/// Registry of node kinds forming a single-inheritance forest.
///
/// Every graph owns a copy of the builtin registry, so applications can add
/// kinds to one graph without affecting others.
class KindRegistry {
 public:
  static const KindRegistry& builtin();

  KindId add(std::string name, std::optional<KindId> parent = std::nullopt);
  KindId add(std::string name, std::string_view parent);

  std::optional<KindId> find(std::string_view name) const;
  KindId at(std::string_view name) const;  // throws TaxonomyError

  bool contains(KindId kind) const { return raw(kind) < entries_.size(); }
  const std::string& name(KindId kind) const;
  std::optional<KindId> parent(KindId kind) const;
  std::size_t size() const { return entries_.size(); }

  // True iff `ancestor` is on the parent chain of `kind` (inclusive).
  bool is_subkind(KindId kind, KindId ancestor) const;

  // Root first, `kind` last.
  std::vector<KindId> ancestry(KindId kind) const;

 private:
  struct Entry {
    std::string name;
    std::optional<KindId> parent;
  };
  const Entry& entry(KindId kind) const;

  std::vector<Entry> entries_;
  std::unordered_map<std::string, KindId> by_name_;
};

struct SourceLocation {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  // One past the last column.
  int end_col = 1;

  bool well_formed() const {
    return start_line >= 1 && start_col >= 1 && start_line <= end_line &&
           (start_line != end_line || start_col <= end_col);
  }
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct NodeFlags {
  bool implicit = false;
  bool inferred = false;

  static NodeFlags make_implicit() { return {.implicit = true}; }
  static NodeFlags make_inferred() { return {.inferred = true}; }
  friend bool operator==(const NodeFlags&, const NodeFlags&) = default;
};

using Scalar = std::variant<std::nullptr_t, bool, std::int64_t, std::string>;
using Properties = std::map<std::string, Scalar, std::less<>>;

struct Node {
  NodeId id{};
  KindId kind{};
  std::optional<std::string> name;
  std::optional<std::string> code;
  std::optional<SourceLocation> location;
  NodeFlags flags;
  Properties properties;

  const Scalar* property(std::string_view key) const;
  std::optional<std::string> string_property(std::string_view key) const;
  std::optional<std::int64_t> int_property(std::string_view key) const;
  std::string display_name() const { return name.value_or(""); }
};

enum class EdgeLabel : std::uint8_t { Ast, Eog, Dfg, RefersTo, Invokes, Supertype };

inline constexpr EdgeLabel kAllEdgeLabels[] = {EdgeLabel::Ast,      EdgeLabel::Eog,
                                               EdgeLabel::Dfg,      EdgeLabel::RefersTo,
                                               EdgeLabel::Invokes,  EdgeLabel::Supertype};

std::string_view to_string(EdgeLabel label);
std::optional<EdgeLabel> parse_edge_label(std::string_view text);

/// Outcome of a branching expression attached to the EOG edge it selects.
struct BranchValue {
  enum class Kind : std::uint8_t { True, False, Case, Default };
  Kind kind = Kind::True;
  std::string case_value;

  static BranchValue when(bool value) { return {value ? Kind::True : Kind::False, {}}; }
  static BranchValue on_case(std::string value) { return {Kind::Case, std::move(value)}; }
  static BranchValue fallback() { return {Kind::Default, {}}; }

  std::string to_string() const;
  static std::optional<BranchValue> parse(std::string_view text);

  friend bool operator==(const BranchValue&, const BranchValue&) = default;
  friend auto operator<=>(const BranchValue&, const BranchValue&) = default;
};

struct EdgeAttrs {
  std::optional<std::string> role;
  std::optional<std::uint32_t> index;
  std::optional<BranchValue> branch;
};

struct Edge {
  NodeId from{};
  NodeId to{};
  EdgeLabel label = EdgeLabel::Ast;
  std::optional<std::string> role;
  std::optional<std::uint32_t> index;
  std::optional<BranchValue> branch;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Direction : std::uint8_t { Out, In };

class Graph {
 public:
  Graph();
  explicit Graph(KindRegistry registry);

  KindRegistry& kinds() { return registry_; }
  const KindRegistry& kinds() const { return registry_; }

  // Ids are dense and start at 1.
  NodeId add_node(KindId kind, std::optional<std::string> name = std::nullopt,
                  std::optional<SourceLocation> location = std::nullopt, NodeFlags flags = {});
  NodeId add_node(std::string_view kind, std::optional<std::string> name = std::nullopt,
                  std::optional<SourceLocation> location = std::nullopt, NodeFlags flags = {});

  Edge add_edge(NodeId from, NodeId to, EdgeLabel label, EdgeAttrs attrs = {});

  bool contains(NodeId id) const { return raw(id) >= 1 && raw(id) <= nodes_.size(); }
  const Node& node(NodeId id) const;
  Node& node(NodeId id);
  void set_name(NodeId id, std::optional<std::string> name);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }

  bool is_a(NodeId id, KindId kind) const { return registry_.is_subkind(node(id).kind, kind); }
  const std::string& kind_name(NodeId id) const { return registry_.name(node(id).kind); }

  std::vector<const Edge*> edges_of(NodeId id, EdgeLabel label, Direction direction) const;

  /// Targets (Out) or sources (In) of edges with `label`, in insertion order;
  /// AST results are sorted by (role, index).
  std::vector<NodeId> neighbors(NodeId id, EdgeLabel label, Direction direction) const;

  std::vector<NodeId> nodes_by_kind(KindId kind, bool include_subkinds) const;
  std::vector<NodeId> nodes_by_name(std::string_view name) const;

  std::optional<NodeId> ast_parent(NodeId id) const;
  std::vector<NodeId> ast_children(NodeId id) const { return neighbors(id, EdgeLabel::Ast, Direction::Out); }
  std::optional<NodeId> ast_child(NodeId id, std::string_view role) const;
  // Children with `role`, ordered by index.
  std::vector<NodeId> ast_children(NodeId id, std::string_view role) const;
  // AST edge entering `id`, if any.
  const Edge* ast_edge_to(NodeId id) const;

  bool has_edge(NodeId from, NodeId to, EdgeLabel label) const;

 private:
  std::size_t slot(NodeId id) const;

  KindRegistry registry_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::vector<NodeId>> by_kind_;
  std::unordered_map<std::string, std::vector<NodeId>> by_name_;
};

}  // namespace cpg
