#pragma once

// Scope trees built while a frontend walks a translation unit, and the
// lookups passes run against them afterwards.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

class ScopeError : public Error {
 public:
  using Error::Error;
};

enum class ScopeKind : std::uint8_t { Global, Record, Function, Block, Loop, Try };
enum class ScopeId : std::uint32_t {};
enum class JumpKind : std::uint8_t { Break, Continue };

constexpr std::uint32_t raw(ScopeId id) { return static_cast<std::uint32_t>(id); }
std::string_view to_string(ScopeKind kind);

struct Scope {
  ScopeId id{};
  ScopeKind kind = ScopeKind::Global;
  NodeId ast_node{};
  std::string name;
  std::optional<ScopeId> parent;
  std::vector<ScopeId> children;
  std::map<std::string, NodeId, std::less<>> declarations;
  // Anchors for break/continue; only set on loop scopes.
  std::optional<NodeId> break_target;
  std::optional<NodeId> continue_target;
};

struct ScopeDiagnostic {
  ScopeId scope{};
  std::string name;
  NodeId previous{};
  NodeId current{};
  std::string message;
};

/// Immutable-after-construction view of one translation unit's scopes.
class ScopeTree {
 public:
  explicit ScopeTree(NodeId translation_unit);

  ScopeId root() const { return ScopeId{0}; }
  const Scope& scope(ScopeId id) const;
  std::span<const Scope> scopes() const { return scopes_; }

  /// Innermost-first lookup along the parent chain. A qualified name such as
  /// "Rec.f" resolves each leading segment to a record scope visible from
  /// `from` and looks the last segment up in that record only.
  std::optional<NodeId> resolve(std::string_view name, ScopeId from) const;

  /// Nearest enclosing loop's anchor for `kind`, if any.
  std::optional<NodeId> jump_target(JumpKind kind, ScopeId from) const;

  // Scope that was active when the frontend visited `node`.
  std::optional<ScopeId> scope_of(NodeId node) const;

  const std::unordered_map<NodeId, ScopeId>& node_scopes() const { return node_scope_; }

 private:
  friend class ScopeManager;
  friend class ScopeForest;

  std::optional<ScopeId> find_record(std::string_view name, ScopeId from) const;

  std::vector<Scope> scopes_;
  std::unordered_map<NodeId, ScopeId> node_scope_;
};

/// Tracks the active scope stack during a frontend traversal.
class ScopeManager {
 public:
  explicit ScopeManager(NodeId translation_unit);

  ScopeId enter_scope(ScopeKind kind, NodeId ast_node, std::string name = {});
  // Pops the current scope and returns its id; throws ScopeError at GLOBAL.
  ScopeId leave_scope();

  // Redeclaration in the same scope is reported and the newer binding wins.
  void declare(std::string name, NodeId declaration);

  // Associates `node` with the current scope.
  void record(NodeId node);

  ScopeId current() const { return stack_.back(); }
  std::size_t depth() const { return stack_.size(); }

  const ScopeTree& tree() const { return tree_; }
  std::span<const ScopeDiagnostic> diagnostics() const { return diagnostics_; }

  // Requires the stack to be back at GLOBAL.
  ScopeTree finish() &&;

 private:
  ScopeTree tree_;
  std::vector<ScopeId> stack_;
  std::vector<ScopeDiagnostic> diagnostics_;
};

/// All scope trees of an analysis. Lookups that miss in a unit's own chain
/// fall back to the global scopes of the other units, in insertion order.
class ScopeForest {
 public:
  std::size_t add(ScopeTree tree);
  std::span<const ScopeTree> trees() const { return trees_; }
  ScopeTree& tree(std::size_t index) { return trees_.at(index); }

  std::optional<std::pair<std::size_t, ScopeId>> locate(NodeId node) const;
  std::optional<NodeId> resolve(std::string_view name, NodeId at) const;
  std::optional<NodeId> resolve_global(std::string_view name) const;
  std::optional<NodeId> jump_target(JumpKind kind, NodeId at) const;

  // Adds a binding to the global scope of tree `index`.
  void declare_global(std::size_t index, std::string name, NodeId declaration);

 private:
  std::vector<ScopeTree> trees_;
  std::unordered_map<NodeId, std::size_t> tree_of_;
};

}  // namespace cpg
