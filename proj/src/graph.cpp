#include "cpg/graph.hpp"

#include <algorithm>
#include <tuple>

namespace cpg {

const KindRegistry& KindRegistry::builtin() {
  static const KindRegistry registry = [] {
    KindRegistry r;
    struct Row {
      const char* name;
      const char* parent;
    };
    static constexpr Row rows[] = {
#define CPG_KIND_ROW(name, parent) {#name, #parent},
        CPG_BUILTIN_KINDS(CPG_KIND_ROW)
#undef CPG_KIND_ROW
    };
    for (const auto& row : rows) {
      if (std::string_view(row.name) == row.parent) {
        r.add(row.name);
      } else {
        r.add(row.name, std::string_view(row.parent));
      }
    }
    return r;
  }();
  return registry;
}

KindId KindRegistry::add(std::string name, std::optional<KindId> parent) {
  if (name.empty()) throw TaxonomyError("kind name must not be empty");
  if (by_name_.contains(name)) throw TaxonomyError("kind already registered: " + name);
  if (parent && !contains(*parent)) throw TaxonomyError("unknown parent kind for " + name);
  const KindId id{static_cast<std::uint16_t>(entries_.size())};
  by_name_.emplace(name, id);
  entries_.push_back({std::move(name), parent});
  return id;
}

KindId KindRegistry::add(std::string name, std::string_view parent) {
  return add(std::move(name), at(parent));
}

std::optional<KindId> KindRegistry::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

KindId KindRegistry::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw TaxonomyError("unknown node kind: " + std::string(name));
}

const KindRegistry::Entry& KindRegistry::entry(KindId kind) const {
  if (!contains(kind)) throw TaxonomyError("unknown node kind id " + std::to_string(raw(kind)));
  return entries_[raw(kind)];
}

const std::string& KindRegistry::name(KindId kind) const { return entry(kind).name; }

std::optional<KindId> KindRegistry::parent(KindId kind) const { return entry(kind).parent; }

bool KindRegistry::is_subkind(KindId kind, KindId ancestor) const {
  entry(ancestor);
  for (std::optional<KindId> k = kind; k; k = entry(*k).parent) {
    if (*k == ancestor) return true;
  }
  return false;
}

std::vector<KindId> KindRegistry::ancestry(KindId kind) const {
  std::vector<KindId> chain;
  for (std::optional<KindId> k = kind; k; k = entry(*k).parent) chain.push_back(*k);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

const Scalar* Node::property(std::string_view key) const {
  auto it = properties.find(key);
  return it == properties.end() ? nullptr : &it->second;
}

std::optional<std::string> Node::string_property(std::string_view key) const {
  if (const auto* value = property(key); value && std::holds_alternative<std::string>(*value)) {
    return std::get<std::string>(*value);
  }
  return std::nullopt;
}

std::optional<std::int64_t> Node::int_property(std::string_view key) const {
  if (const auto* value = property(key); value && std::holds_alternative<std::int64_t>(*value)) {
    return std::get<std::int64_t>(*value);
  }
  return std::nullopt;
}

std::string_view to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::Ast: return "AST";
    case EdgeLabel::Eog: return "EOG";
    case EdgeLabel::Dfg: return "DFG";
    case EdgeLabel::RefersTo: return "REFERS_TO";
    case EdgeLabel::Invokes: return "INVOKES";
    case EdgeLabel::Supertype: return "SUPERTYPE";
  }
  return "?";
}

std::optional<EdgeLabel> parse_edge_label(std::string_view text) {
  for (EdgeLabel label : kAllEdgeLabels) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

std::string BranchValue::to_string() const {
  switch (kind) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Case: return "case:" + case_value;
    case Kind::Default: return "default";
  }
  return "?";
}

std::optional<BranchValue> BranchValue::parse(std::string_view text) {
  if (text == "true") return when(true);
  if (text == "false") return when(false);
  if (text == "default") return fallback();
  if (text.starts_with("case:")) return on_case(std::string(text.substr(5)));
  return std::nullopt;
}

Graph::Graph() : Graph(KindRegistry::builtin()) {}

Graph::Graph(KindRegistry registry) : registry_(std::move(registry)) {}

std::size_t Graph::slot(NodeId id) const {
  if (!contains(id)) throw IntegrityError("unknown node id " + std::to_string(raw(id)));
  return raw(id) - 1;
}

NodeId Graph::add_node(KindId kind, std::optional<std::string> name,
                       std::optional<SourceLocation> location, NodeFlags flags) {
  if (!registry_.contains(kind)) {
    throw TaxonomyError("unregistered node kind id " + std::to_string(raw(kind)));
  }
  const NodeId id{static_cast<std::uint32_t>(nodes_.size() + 1)};
  Node node;
  node.id = id;
  node.kind = kind;
  node.name = std::move(name);
  node.location = std::move(location);
  node.flags = flags;
  if (node.name) by_name_[*node.name].push_back(id);
  if (by_kind_.size() <= raw(kind)) by_kind_.resize(raw(kind) + 1);
  by_kind_[raw(kind)].push_back(id);
  nodes_.push_back(std::move(node));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

NodeId Graph::add_node(std::string_view kind, std::optional<std::string> name,
                       std::optional<SourceLocation> location, NodeFlags flags) {
  return add_node(registry_.at(kind), std::move(name), std::move(location), flags);
}

const Node& Graph::node(NodeId id) const { return nodes_[slot(id)]; }
Node& Graph::node(NodeId id) { return nodes_[slot(id)]; }

void Graph::set_name(NodeId id, std::optional<std::string> name) {
  Node& n = node(id);
  if (n.name) {
    auto& ids = by_name_[*n.name];
    std::erase(ids, id);
    if (ids.empty()) by_name_.erase(*n.name);
  }
  n.name = std::move(name);
  if (n.name) {
    auto& ids = by_name_[*n.name];
    ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
  }
}

Edge Graph::add_edge(NodeId from, NodeId to, EdgeLabel label, EdgeAttrs attrs) {
  if (!contains(from) || !contains(to)) {
    throw IntegrityError("edge endpoint does not exist: " + std::to_string(raw(from)) + " -> " +
                         std::to_string(raw(to)));
  }
  if (label != EdgeLabel::Ast && (attrs.role || attrs.index)) {
    throw AttributeError("role and index are only allowed on AST edges");
  }
  if (label != EdgeLabel::Eog && attrs.branch) {
    throw AttributeError("branch values are only allowed on EOG edges");
  }
  if (label == EdgeLabel::Ast) {
    if (ast_parent(to)) {
      throw IntegrityError("node " + std::to_string(raw(to)) + " already has an AST parent");
    }
    for (std::optional<NodeId> up = from; up; up = ast_parent(*up)) {
      if (*up == to) throw IntegrityError("AST edge would create a cycle");
    }
    if (attrs.role) {
      for (const Edge* e : edges_of(from, EdgeLabel::Ast, Direction::Out)) {
        if (e->role == attrs.role && e->index == attrs.index) {
          throw AttributeError("duplicate AST role/index '" + *attrs.role + "' under node " +
                               std::to_string(raw(from)));
        }
      }
    }
  }
  Edge edge{from, to, label, std::move(attrs.role), attrs.index, std::move(attrs.branch)};
  const auto index = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back(edge);
  out_[slot(from)].push_back(index);
  in_[slot(to)].push_back(index);
  return edge;
}

std::vector<const Edge*> Graph::edges_of(NodeId id, EdgeLabel label, Direction direction) const {
  const auto& list = direction == Direction::Out ? out_[slot(id)] : in_[slot(id)];
  std::vector<const Edge*> result;
  for (std::uint32_t index : list) {
    if (edges_[index].label == label) result.push_back(&edges_[index]);
  }
  return result;
}

std::vector<NodeId> Graph::neighbors(NodeId id, EdgeLabel label, Direction direction) const {
  auto edges = edges_of(id, label, direction);
  if (label == EdgeLabel::Ast) {
    std::stable_sort(edges.begin(), edges.end(), [](const Edge* a, const Edge* b) {
      return std::tie(a->role, a->index) < std::tie(b->role, b->index);
    });
  }
  std::vector<NodeId> result;
  result.reserve(edges.size());
  for (const Edge* e : edges) result.push_back(direction == Direction::Out ? e->to : e->from);
  return result;
}

std::vector<NodeId> Graph::nodes_by_kind(KindId kind, bool include_subkinds) const {
  if (!registry_.contains(kind)) throw TaxonomyError("unregistered node kind");
  std::vector<NodeId> result;
  for (std::size_t k = 0; k < by_kind_.size(); ++k) {
    const KindId candidate{static_cast<std::uint16_t>(k)};
    const bool match = include_subkinds ? registry_.is_subkind(candidate, kind) : candidate == kind;
    if (match) result.insert(result.end(), by_kind_[k].begin(), by_kind_[k].end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<NodeId> Graph::nodes_by_name(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? std::vector<NodeId>{} : it->second;
}

const Edge* Graph::ast_edge_to(NodeId id) const {
  for (std::uint32_t index : in_[slot(id)]) {
    if (edges_[index].label == EdgeLabel::Ast) return &edges_[index];
  }
  return nullptr;
}

std::optional<NodeId> Graph::ast_parent(NodeId id) const {
  if (const Edge* e = ast_edge_to(id)) return e->from;
  return std::nullopt;
}

std::optional<NodeId> Graph::ast_child(NodeId id, std::string_view role) const {
  for (const Edge* e : edges_of(id, EdgeLabel::Ast, Direction::Out)) {
    if (e->role && *e->role == role) return e->to;
  }
  return std::nullopt;
}

std::vector<NodeId> Graph::ast_children(NodeId id, std::string_view role) const {
  auto edges = edges_of(id, EdgeLabel::Ast, Direction::Out);
  std::erase_if(edges, [&](const Edge* e) { return !e->role || *e->role != role; });
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge* a, const Edge* b) { return a->index < b->index; });
  std::vector<NodeId> result;
  for (const Edge* e : edges) result.push_back(e->to);
  return result;
}

bool Graph::has_edge(NodeId from, NodeId to, EdgeLabel label) const {
  for (const Edge* e : edges_of(from, label, Direction::Out)) {
    if (e->to == to) return true;
  }
  return false;
}

}  // namespace cpg
