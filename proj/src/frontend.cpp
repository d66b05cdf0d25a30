#include "cpg/frontend.hpp"

#include <functional>

namespace cpg {

std::string_view to_string(FrontendKind kind) {
  switch (kind) {
    case FrontendKind::C: return "c";
    case FrontendKind::Generic: return "generic";
  }
  return "?";
}

FrontendKind dispatch(const std::filesystem::path& path) {
  const std::string name = path.filename().string();
  if (name.ends_with(".cpg.json")) return FrontendKind::Generic;
  const std::string extension = path.extension().string();
  if (extension == ".c" || extension == ".h") return FrontendKind::C;
  throw UnsupportedLanguageError(extension);
}

namespace {

class ScopeWalker {
 public:
  ScopeWalker(const Graph& graph, NodeId root) : graph_(graph), manager_(root) {}

  ScopeTree run(NodeId root, std::vector<std::string>* diagnostics) && {
    for (NodeId child : graph_.ast_children(root)) visit(child);
    if (diagnostics) {
      for (const auto& d : manager_.diagnostics()) diagnostics->push_back(d.message);
    }
    return std::move(manager_).finish();
  }

 private:
  void visit(NodeId id) {
    const Node& node = graph_.node(id);
    const auto& kinds = graph_.kinds();
    manager_.record(id);
    const std::string name = node.name.value_or("");

    std::optional<ScopeKind> opens;
    if (kinds.is_subkind(node.kind, kinds::FunctionDeclaration)) {
      if (!name.empty()) manager_.declare(name, id);
      opens = ScopeKind::Function;
    } else if (kinds.is_subkind(node.kind, kinds::RecordDeclaration) ||
               kinds.is_subkind(node.kind, kinds::NamespaceDeclaration)) {
      if (!name.empty()) manager_.declare(name, id);
      opens = ScopeKind::Record;
    } else if (kinds.is_subkind(node.kind, kinds::ValueDeclaration)) {
      if (!name.empty()) manager_.declare(name, id);
    } else if (kinds.is_subkind(node.kind, kinds::CompoundStatement)) {
      opens = ScopeKind::Block;
    } else if (kinds.is_subkind(node.kind, kinds::WhileStatement) ||
               kinds.is_subkind(node.kind, kinds::ForStatement)) {
      opens = ScopeKind::Loop;
    }

    if (opens) manager_.enter_scope(*opens, id, name);
    for (NodeId child : graph_.ast_children(id)) visit(child);
    if (opens) manager_.leave_scope();
  }

  const Graph& graph_;
  ScopeManager manager_;
};

}  // namespace

ScopeTree build_scopes(const Graph& graph, NodeId root, std::vector<std::string>* diagnostics) {
  return ScopeWalker(graph, root).run(root, diagnostics);
}

std::vector<CoverageRecord> collect_coverage(const Graph& graph, NodeId root) {
  std::vector<CoverageRecord> records;
  std::function<void(NodeId, std::optional<std::size_t>)> visit = [&](NodeId id,
                                                                     std::optional<std::size_t> parent) {
    const Node& node = graph.node(id);
    std::optional<std::size_t> self = parent;
    const bool synthetic = node.flags.implicit || node.flags.inferred;
    if (!synthetic) {
      CoverageRecord record;
      record.node = id;
      record.handled = !graph.kinds().is_subkind(node.kind, kinds::ProblemNode);
      if (node.location) {
        record.first_line = node.location->start_line;
        record.last_line = node.location->end_line;
        // An exclusive end at column 1 does not touch the end line.
        if (node.location->end_col == 1 && record.last_line > record.first_line) --record.last_line;
      }
      self = records.size();
      records.push_back(std::move(record));
      if (parent) records[*parent].children.push_back(*self);
    }
    for (NodeId child : graph.ast_children(id)) visit(child, self);
  };
  visit(root, std::nullopt);
  return records;
}

}  // namespace cpg
