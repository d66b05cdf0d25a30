#include "cpg/generic_frontend.hpp"

#include <limits>
#include <set>
#include <tuple>

namespace cpg::generic {
namespace {

using nlohmann::json;

struct Position {
  int line;
  int col;
  friend auto operator<=>(const Position&, const Position&) = default;
};

struct Range {
  Position start;
  Position end;
};

class Validator {
 public:
  std::vector<Diagnostic> run(const json& doc) {
    if (!doc.is_object()) {
      error("$", "document must be an object");
      return std::move(diagnostics_);
    }
    if (!doc.contains("cpgAstVersion")) {
      error("$.cpgAstVersion", "missing required field");
    } else if (!doc["cpgAstVersion"].is_string() || doc["cpgAstVersion"].get<std::string>() != kAstVersion) {
      error("$.cpgAstVersion", "unsupported version, expected \"1\"");
    }
    require_string(doc, "$", "language");
    require_string(doc, "$", "file");
    if (!doc.contains("root")) {
      error("$.root", "missing required field");
    } else if (!doc["root"].is_object()) {
      error("$.root", "must be an object");
    } else {
      const json& root = doc["root"];
      if (root.contains("kind") && root["kind"].is_string() && root["kind"] != "TranslationUnitDeclaration") {
        error("$.root.kind", "root kind must be TranslationUnitDeclaration");
      }
      node(root, "$.root", std::nullopt);
    }
    return std::move(diagnostics_);
  }

 private:
  void error(std::string path, std::string message) { diagnostics_.push_back({std::move(path), std::move(message)}); }

  void require_string(const json& obj, const std::string& at, const char* key) {
    const std::string path = at + "." + key;
    if (!obj.contains(key)) {
      error(path, "missing required field");
    } else if (!obj[key].is_string()) {
      error(path, "must be a string");
    }
  }

  void optional_string(const json& obj, const std::string& at, const char* key) {
    if (obj.contains(key) && !obj[key].is_string()) error(at + "." + key, "must be a string");
  }

  std::optional<Range> location(const json& obj, const std::string& at) {
    if (!obj.contains("location")) return std::nullopt;
    const json& loc = obj["location"];
    const std::string path = at + ".location";
    if (!loc.is_object()) {
      error(path, "must be an object");
      return std::nullopt;
    }
    int values[4] = {0, 0, 0, 0};
    bool ok = true;
    const char* keys[4] = {"startLine", "startCol", "endLine", "endCol"};
    for (int i = 0; i < 4; ++i) {
      if (!loc.contains(keys[i])) {
        error(path + "." + keys[i], "missing required field");
        ok = false;
      } else if (!loc[keys[i]].is_number_integer() || loc[keys[i]].get<std::int64_t>() < 1 ||
                 loc[keys[i]].get<std::int64_t>() > std::numeric_limits<int>::max()) {
        error(path + "." + keys[i], "must be a positive integer");
        ok = false;
      } else {
        values[i] = loc[keys[i]].get<int>();
      }
    }
    if (!ok) return std::nullopt;
    Range range{{values[0], values[1]}, {values[2], values[3]}};
    if (range.end < range.start) {
      error(path, "start position is after end position");
      return std::nullopt;
    }
    return range;
  }

  void node(const json& obj, const std::string& at, std::optional<Range> parent) {
    if (!obj.is_object()) {
      error(at, "node must be an object");
      return;
    }
    if (!obj.contains("kind")) {
      error(at + ".kind", "missing required field");
    } else if (!obj["kind"].is_string() || obj["kind"].get_ref<const std::string&>().empty()) {
      error(at + ".kind", "must be a non-empty string");
    }
    optional_string(obj, at, "role");
    optional_string(obj, at, "name");
    optional_string(obj, at, "operator");
    if (obj.contains("index") &&
        (!obj["index"].is_number_integer() || obj["index"].get<std::int64_t>() < 0 ||
         obj["index"].get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max())) {
      error(at + ".index", "must be a non-negative integer");
    }
    if (obj.contains("value")) {
      const json& v = obj["value"];
      if (!(v.is_string() || v.is_number_integer() || v.is_boolean() || v.is_null())) {
        error(at + ".value", "must be a string, integer, boolean or null");
      }
    }
    const auto range = location(obj, at);
    if (range && parent && (range->start < parent->start || parent->end < range->end)) {
      error(at + ".location", "not nested within the parent's location");
    }
    if (!obj.contains("children")) return;
    const json& children = obj["children"];
    if (!children.is_array()) {
      error(at + ".children", "must be an array");
      return;
    }
    std::set<std::pair<std::string, std::optional<std::int64_t>>> seen;
    for (std::size_t i = 0; i < children.size(); ++i) {
      const std::string child_path = at + ".children[" + std::to_string(i) + "]";
      const json& child = children[i];
      if (child.is_object() && child.contains("role") && child["role"].is_string()) {
        std::optional<std::int64_t> index;
        if (child.contains("index") && child["index"].is_number_integer()) index = child["index"].get<std::int64_t>();
        if (!seen.emplace(child["role"].get<std::string>(), index).second) {
          error(child_path, "duplicate role/index among siblings");
        }
      }
      node(child, child_path, range ? range : parent);
    }
  }

  std::vector<Diagnostic> diagnostics_;
};

class Ingestor {
 public:
  Ingestor(Graph& graph, std::string file) : graph_(graph), file_(std::move(file)) {}

  NodeId node(const json& obj) {
    const std::string& kind_name = obj["kind"].get_ref<const std::string&>();
    std::optional<std::string> name;
    if (obj.contains("name")) name = obj["name"].get<std::string>();
    std::optional<SourceLocation> loc;
    if (obj.contains("location")) {
      const json& l = obj["location"];
      loc = SourceLocation{file_, l["startLine"].get<int>(), l["startCol"].get<int>(), l["endLine"].get<int>(),
                           l["endCol"].get<int>()};
    }
    const auto known = graph_.kinds().find(kind_name);
    const NodeId id = graph_.add_node(known.value_or(kinds::ProblemNode), std::move(name), std::move(loc));
    Node& n = graph_.node(id);
    if (!known) {
      n.properties["originalKind"] = kind_name;
      n.properties["message"] = "no handler for kind " + kind_name;
    }
    if (obj.contains("value")) {
      const json& v = obj["value"];
      if (v.is_string()) {
        n.properties["value"] = v.get<std::string>();
      } else if (v.is_boolean()) {
        n.properties["value"] = v.get<bool>();
      } else if (v.is_null()) {
        n.properties["value"] = nullptr;
      } else {
        n.properties["value"] = v.get<std::int64_t>();
      }
    }
    if (obj.contains("operator")) n.properties["operator"] = obj["operator"].get<std::string>();

    if (obj.contains("children")) {
      for (const json& child : obj["children"]) {
        const NodeId child_id = node(child);
        EdgeAttrs attrs;
        if (child.contains("role")) attrs.role = child["role"].get<std::string>();
        if (child.contains("index")) attrs.index = child["index"].get<std::uint32_t>();
        graph_.add_edge(id, child_id, EdgeLabel::Ast, std::move(attrs));
      }
    }
    return id;
  }

 private:
  Graph& graph_;
  std::string file_;
};

}  // namespace

std::vector<Diagnostic> validate(const nlohmann::json& document) { return Validator().run(document); }

TranslationResult ingest(Graph& graph, const nlohmann::json& document) {
  if (auto diagnostics = validate(document); !diagnostics.empty()) {
    throw IngestionError(diagnostics.front().path, diagnostics.front().message);
  }
  const std::string file = document["file"].get<std::string>();
  const NodeId root = Ingestor(graph, file).node(document["root"]);
  graph.node(root).properties["language"] = document["language"].get<std::string>();
  if (!graph.node(root).name) graph.set_name(root, file);
  std::vector<std::string> diagnostics;
  TranslationResult result{root, file, build_scopes(graph, root, &diagnostics), {}, {}};
  for (auto& d : diagnostics) result.diagnostics.push_back(file + ": " + d);
  result.coverage = collect_coverage(graph, root);
  return result;
}

TranslationResult ingest_text(Graph& graph, std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestionError("$", std::string("malformed JSON: ") + e.what());
  }
  return ingest(graph, document);
}

}  // namespace cpg::generic
