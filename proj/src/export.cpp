#include "cpg/export.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>

#include <json.hpp>

namespace cpg {
namespace {

using ordered = nlohmann::ordered_json;
using nlohmann::json;

auto edge_key(const Edge& e) { return std::tie(e.from, e.to, e.label, e.role, e.index, e.branch); }

std::vector<const Edge*> sorted_edges(const Graph& graph) {
  std::vector<const Edge*> edges;
  for (const Edge& e : graph.edges()) edges.push_back(&e);
  std::stable_sort(edges.begin(), edges.end(), [](const Edge* a, const Edge* b) { return edge_key(*a) < edge_key(*b); });
  return edges;
}

ordered scalar_json(const Scalar& value) {
  return std::visit(
      [](const auto& v) -> ordered {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          return nullptr;
        } else {
          return v;
        }
      },
      value);
}

std::vector<std::string> flag_names(const NodeFlags& flags) {
  std::vector<std::string> names;
  if (flags.implicit) names.emplace_back("IMPLICIT");
  if (flags.inferred) names.emplace_back("INFERRED");
  return names;
}

// --- reading ---------------------------------------------------------------

class Reader {
 public:
  explicit Reader(const KindRegistry& registry) : graph_(registry) {}

  Graph read(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("$", "expected an object");
    if (!doc.contains("cpgVersion") || !doc["cpgVersion"].is_string() ||
        doc["cpgVersion"].get<std::string>() != kCpgVersion) {
      throw SchemaError("$.cpgVersion", "expected \"" + std::string(kCpgVersion) + "\"");
    }
    const json& nodes = array(doc, "$", "nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) node(nodes[i], "$.nodes[" + std::to_string(i) + "]", i + 1);
    const json& edges = array(doc, "$", "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) edge(edges[i], "$.edges[" + std::to_string(i) + "]");
    return std::move(graph_);
  }

 private:
  static const json& array(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key) || !obj[key].is_array()) throw SchemaError(path + "." + key, "expected an array");
    return obj[key];
  }

  static std::int64_t integer(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
    return obj[key].get<std::int64_t>();
  }

  static std::string string(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key) || !obj[key].is_string()) throw SchemaError(path + "." + key, "expected a string");
    return obj[key].get<std::string>();
  }

  void node(const json& n, const std::string& path, std::size_t expected_id) {
    if (!n.is_object()) throw SchemaError(path, "expected an object");
    if (integer(n, path, "id") != static_cast<std::int64_t>(expected_id)) {
      throw SchemaError(path + ".id", "node ids must be 1..n in order");
    }
    const std::string kind = string(n, path, "kind");
    if (!graph_.kinds().find(kind)) throw TaxonomyError("unknown node kind '" + kind + "'");

    std::optional<std::string> name;
    if (n.contains("name")) name = string(n, path, "name");

    NodeFlags flags;
    for (const auto& f : array(n, path, "flags")) {
      if (f == "IMPLICIT") {
        flags.implicit = true;
      } else if (f == "INFERRED") {
        flags.inferred = true;
      } else {
        throw SchemaError(path + ".flags", "unknown flag " + f.dump());
      }
    }

    std::optional<SourceLocation> location;
    if (n.contains("location")) {
      const json& l = n["location"];
      const std::string lpath = path + ".location";
      if (!l.is_object()) throw SchemaError(lpath, "expected an object");
      location = SourceLocation{string(l, lpath, "file"), static_cast<int>(integer(l, lpath, "startLine")),
                                static_cast<int>(integer(l, lpath, "startCol")),
                                static_cast<int>(integer(l, lpath, "endLine")),
                                static_cast<int>(integer(l, lpath, "endCol"))};
    }

    const NodeId id = graph_.add_node(kind, std::move(name), std::move(location), flags);
    if (!n.contains("properties") || !n["properties"].is_object()) {
      throw SchemaError(path + ".properties", "expected an object");
    }
    for (const auto& [key, value] : n["properties"].items()) {
      const std::string vpath = path + ".properties." + key;
      Scalar scalar;
      if (value.is_null()) {
        scalar = nullptr;
      } else if (value.is_boolean()) {
        scalar = value.get<bool>();
      } else if (value.is_number_integer()) {
        scalar = value.get<std::int64_t>();
      } else if (value.is_string()) {
        scalar = value.get<std::string>();
      } else {
        throw SchemaError(vpath, "expected null, boolean, integer or string");
      }
      graph_.node(id).properties.emplace(key, std::move(scalar));
    }
  }

  void edge(const json& e, const std::string& path) {
    if (!e.is_object()) throw SchemaError(path, "expected an object");
    auto endpoint = [&](const char* key) {
      const std::int64_t raw_id = integer(e, path, key);
      if (raw_id < 1 || raw_id > static_cast<std::int64_t>(graph_.node_count())) {
        throw SchemaError(path + "." + key, "no node with id " + std::to_string(raw_id));
      }
      return NodeId{static_cast<std::uint32_t>(raw_id)};
    };
    const NodeId from = endpoint("from");
    const NodeId to = endpoint("to");
    const std::string label_text = string(e, path, "label");
    auto label = parse_edge_label(label_text);
    if (!label) throw SchemaError(path + ".label", "unknown edge label '" + label_text + "'");

    EdgeAttrs attrs;
    if (e.contains("role")) attrs.role = string(e, path, "role");
    if (e.contains("index")) {
      const std::int64_t index = integer(e, path, "index");
      if (index < 0 || index > std::numeric_limits<std::uint32_t>::max()) {
        throw SchemaError(path + ".index", "index out of range");
      }
      attrs.index = static_cast<std::uint32_t>(index);
    }
    if (e.contains("branch")) {
      attrs.branch = BranchValue::parse(string(e, path, "branch"));
      if (!attrs.branch) throw SchemaError(path + ".branch", "unknown branch value");
    }
    try {
      graph_.add_edge(from, to, *label, std::move(attrs));
    } catch (const Error& err) {
      throw SchemaError(path, err.what());
    }
  }

  Graph graph_;
};

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

bool plain_identifier(std::string_view key) {
  if (key.empty() || std::isdigit(static_cast<unsigned char>(key[0]))) return false;
  return std::all_of(key.begin(), key.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string cypher_key(std::string_view key) {
  if (plain_identifier(key)) return std::string(key);
  std::string out = "`";
  for (char c : key) {
    if (c == '`') out += '`';
    out += c;
  }
  return out + "`";
}

std::string cypher_value(const Scalar& value) { return scalar_json(value).dump(); }

}  // namespace

std::string to_json(const Graph& graph) {
  ordered doc;
  doc["cpgVersion"] = kCpgVersion;
  doc["nodes"] = ordered::array();
  for (const Node& n : graph.nodes()) {
    ordered node;
    node["id"] = raw(n.id);
    node["kind"] = graph.kinds().name(n.kind);
    if (n.name) node["name"] = *n.name;
    node["flags"] = flag_names(n.flags);
    if (n.location) {
      const SourceLocation& l = *n.location;
      node["location"] = {{"file", l.file},
                          {"startLine", l.start_line},
                          {"startCol", l.start_col},
                          {"endLine", l.end_line},
                          {"endCol", l.end_col}};
    }
    node["properties"] = ordered::object();
    for (const auto& [key, value] : n.properties) node["properties"][key] = scalar_json(value);
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = ordered::array();
  for (const Edge* e : sorted_edges(graph)) {
    ordered edge;
    edge["from"] = raw(e->from);
    edge["to"] = raw(e->to);
    edge["label"] = to_string(e->label);
    if (e->role) edge["role"] = *e->role;
    if (e->index) edge["index"] = *e->index;
    if (e->branch) edge["branch"] = e->branch->to_string();
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump();
}

Graph from_json(std::string_view text, const KindRegistry& registry) { return Reader(registry).read(text); }

std::string to_dot(const Graph& graph, const std::set<EdgeLabel>& labels) {
  std::string out = "digraph cpg {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const Node& n : graph.nodes()) {
    std::string label = graph.kinds().name(n.kind);
    if (n.name) label += "\n" + *n.name;
    out += "  n" + std::to_string(raw(n.id)) + " [label=\"" + dot_escape(label) + "\"];\n";
  }
  for (const Edge* e : sorted_edges(graph)) {
    if (!labels.contains(e->label)) continue;
    std::vector<std::string> attrs;
    switch (e->label) {
      case EdgeLabel::Ast: {
        std::string text = e->role.value_or("");
        if (e->index) text += "[" + std::to_string(*e->index) + "]";
        if (!text.empty()) attrs.push_back("label=\"" + dot_escape(text) + "\"");
        break;
      }
      case EdgeLabel::Eog:
        attrs.emplace_back("style=dashed");
        if (e->branch) attrs.push_back("label=\"" + dot_escape(e->branch->to_string()) + "\"");
        break;
      case EdgeLabel::Dfg:
        attrs.emplace_back("style=dotted");
        break;
      default:
        attrs.emplace_back("style=bold");
        attrs.push_back("label=\"" + std::string(to_string(e->label)) + "\"");
        break;
    }
    out += "  n" + std::to_string(raw(e->from)) + " -> n" + std::to_string(raw(e->to));
    if (!attrs.empty()) {
      out += " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out += (i ? ", " : "") + attrs[i];
      out += "]";
    }
    out += ";\n";
  }
  return out + "}\n";
}

std::string to_cypher(const Graph& graph) {
  std::string out;
  for (const Node& n : graph.nodes()) {
    std::string labels;
    for (KindId k : graph.kinds().ancestry(n.kind)) labels += ":" + cypher_key(graph.kinds().name(k));
    std::vector<std::string> props = {"id: " + std::to_string(raw(n.id))};
    if (n.name) props.push_back("name: " + json(*n.name).dump());
    if (n.flags.implicit) props.emplace_back("implicit: true");
    if (n.flags.inferred) props.emplace_back("inferred: true");
    if (n.location) {
      props.push_back("file: " + json(n.location->file).dump());
      props.push_back("startLine: " + std::to_string(n.location->start_line));
      props.push_back("startCol: " + std::to_string(n.location->start_col));
      props.push_back("endLine: " + std::to_string(n.location->end_line));
      props.push_back("endCol: " + std::to_string(n.location->end_col));
    }
    for (const auto& [key, value] : n.properties) {
      if (std::holds_alternative<std::nullptr_t>(value)) continue;
      props.push_back(cypher_key(key) + ": " + cypher_value(value));
    }
    out += "CREATE (" + labels + " {";
    for (std::size_t i = 0; i < props.size(); ++i) out += (i ? ", " : "") + props[i];
    out += "});\n";
  }
  for (const Edge* e : sorted_edges(graph)) {
    std::vector<std::string> props;
    if (e->role) props.push_back("role: " + json(*e->role).dump());
    if (e->index) props.push_back("index: " + std::to_string(*e->index));
    if (e->branch) props.push_back("branch: " + json(e->branch->to_string()).dump());
    out += "MATCH (a {id: " + std::to_string(raw(e->from)) + "}), (b {id: " + std::to_string(raw(e->to)) +
           "}) CREATE (a)-[:" + std::string(to_string(e->label));
    if (!props.empty()) {
      out += " {";
      for (std::size_t i = 0; i < props.size(); ++i) out += (i ? ", " : "") + props[i];
      out += "}";
    }
    out += "]->(b);\n";
  }
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    const Node& x = a.nodes()[i];
    const Node& y = b.nodes()[i];
    if (x.id != y.id || a.kinds().name(x.kind) != b.kinds().name(y.kind) || x.name != y.name ||
        x.flags != y.flags || x.location != y.location || x.properties != y.properties) {
      return false;
    }
  }
  auto ea = sorted_edges(a);
  auto eb = sorted_edges(b);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (!(*ea[i] == *eb[i])) return false;
  }
  return true;
}

}  // namespace cpg
