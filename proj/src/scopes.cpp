#include "cpg/scopes.hpp"

namespace cpg {

std::string_view to_string(ScopeKind kind) {
  switch (kind) {
    case ScopeKind::Global: return "GLOBAL";
    case ScopeKind::Record: return "RECORD";
    case ScopeKind::Function: return "FUNCTION";
    case ScopeKind::Block: return "BLOCK";
    case ScopeKind::Loop: return "LOOP";
    case ScopeKind::Try: return "TRY";
  }
  return "?";
}

ScopeTree::ScopeTree(NodeId translation_unit) {
  Scope global;
  global.id = ScopeId{0};
  global.kind = ScopeKind::Global;
  global.ast_node = translation_unit;
  scopes_.push_back(std::move(global));
}

const Scope& ScopeTree::scope(ScopeId id) const {
  if (raw(id) >= scopes_.size()) throw ScopeError("unknown scope id " + std::to_string(raw(id)));
  return scopes_[raw(id)];
}

std::optional<ScopeId> ScopeTree::find_record(std::string_view name, ScopeId from) const {
  for (std::optional<ScopeId> s = from; s; s = scope(*s).parent) {
    for (ScopeId child : scope(*s).children) {
      const Scope& candidate = scope(child);
      if (candidate.kind == ScopeKind::Record && candidate.name == name) return child;
    }
  }
  return std::nullopt;
}

std::optional<NodeId> ScopeTree::resolve(std::string_view name, ScopeId from) const {
  scope(from);
  const auto dot = name.find('.');
  if (dot == std::string_view::npos) {
    for (std::optional<ScopeId> s = from; s; s = scope(*s).parent) {
      const auto& decls = scope(*s).declarations;
      if (auto it = decls.find(name); it != decls.end()) return it->second;
    }
    return std::nullopt;
  }

  auto record = find_record(name.substr(0, dot), from);
  std::string_view rest = name.substr(dot + 1);
  while (record) {
    const auto next = rest.find('.');
    if (next == std::string_view::npos) {
      const auto& decls = scope(*record).declarations;
      if (auto it = decls.find(rest); it != decls.end()) return it->second;
      return std::nullopt;
    }
    const std::string_view segment = rest.substr(0, next);
    std::optional<ScopeId> nested;
    for (ScopeId child : scope(*record).children) {
      if (scope(child).kind == ScopeKind::Record && scope(child).name == segment) nested = child;
    }
    record = nested;
    rest = rest.substr(next + 1);
  }
  return std::nullopt;
}

std::optional<NodeId> ScopeTree::jump_target(JumpKind kind, ScopeId from) const {
  for (std::optional<ScopeId> s = from; s; s = scope(*s).parent) {
    const Scope& current = scope(*s);
    if (current.kind == ScopeKind::Loop) {
      return kind == JumpKind::Break ? current.break_target : current.continue_target;
    }
    // Jumps never leave the enclosing function.
    if (current.kind == ScopeKind::Function) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<ScopeId> ScopeTree::scope_of(NodeId node) const {
  auto it = node_scope_.find(node);
  if (it == node_scope_.end()) return std::nullopt;
  return it->second;
}

ScopeManager::ScopeManager(NodeId translation_unit) : tree_(translation_unit) {
  stack_.push_back(tree_.root());
  tree_.node_scope_[translation_unit] = tree_.root();
}

ScopeId ScopeManager::enter_scope(ScopeKind kind, NodeId ast_node, std::string name) {
  if (kind == ScopeKind::Global) throw ScopeError("only the root scope may be GLOBAL");
  Scope scope;
  scope.id = ScopeId{static_cast<std::uint32_t>(tree_.scopes_.size())};
  scope.kind = kind;
  scope.ast_node = ast_node;
  scope.name = std::move(name);
  scope.parent = current();
  if (kind == ScopeKind::Loop) {
    scope.break_target = ast_node;
    scope.continue_target = ast_node;
  }
  const ScopeId id = scope.id;
  tree_.scopes_[raw(current())].children.push_back(id);
  tree_.scopes_.push_back(std::move(scope));
  stack_.push_back(id);
  return id;
}

ScopeId ScopeManager::leave_scope() {
  if (stack_.size() <= 1) throw ScopeError("scope stack underflow: cannot leave the global scope");
  const ScopeId left = stack_.back();
  stack_.pop_back();
  return left;
}

void ScopeManager::declare(std::string name, NodeId declaration) {
  Scope& scope = tree_.scopes_[raw(current())];
  auto [it, inserted] = scope.declarations.try_emplace(name, declaration);
  if (!inserted) {
    diagnostics_.push_back({scope.id, name, it->second, declaration,
                            "redeclaration of '" + name + "' in the same scope"});
    it->second = declaration;
  }
}

void ScopeManager::record(NodeId node) { tree_.node_scope_[node] = current(); }

ScopeTree ScopeManager::finish() && {
  if (stack_.size() != 1) throw ScopeError("unbalanced scope traversal");
  return std::move(tree_);
}

std::size_t ScopeForest::add(ScopeTree tree) {
  const std::size_t index = trees_.size();
  for (const auto& [node, scope] : tree.node_scopes()) tree_of_[node] = index;
  trees_.push_back(std::move(tree));
  return index;
}

std::optional<std::pair<std::size_t, ScopeId>> ScopeForest::locate(NodeId node) const {
  auto it = tree_of_.find(node);
  if (it == tree_of_.end()) return std::nullopt;
  return std::pair{it->second, *trees_[it->second].scope_of(node)};
}

std::optional<NodeId> ScopeForest::resolve_global(std::string_view name) const {
  for (const auto& tree : trees_) {
    if (auto hit = tree.resolve(name, tree.root())) return hit;
  }
  return std::nullopt;
}

std::optional<NodeId> ScopeForest::resolve(std::string_view name, NodeId at) const {
  if (auto where = locate(at)) {
    if (auto hit = trees_[where->first].resolve(name, where->second)) return hit;
  }
  return resolve_global(name);
}

std::optional<NodeId> ScopeForest::jump_target(JumpKind kind, NodeId at) const {
  auto where = locate(at);
  if (!where) return std::nullopt;
  return trees_[where->first].jump_target(kind, where->second);
}

void ScopeForest::declare_global(std::size_t index, std::string name, NodeId declaration) {
  ScopeTree& tree = trees_.at(index);
  tree.scopes_[raw(tree.root())].declarations[std::move(name)] = declaration;
  tree.node_scope_[declaration] = tree.root();
  tree_of_[declaration] = index;
}

}  // namespace cpg
