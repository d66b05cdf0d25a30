#pragma once

// Ingestion of language-neutral AST documents produced by external parsers.
//
//   { "cpgAstVersion": "1", "language": str, "file": str, "root": NodeObj }
//   NodeObj = { "kind": str, "role"?: str, "index"?: int, "name"?: str,
//               "value"?: str|int|bool|null, "operator"?: str,
//               "location"?: {"startLine","startCol","endLine","endCol"},
//               "children"?: [NodeObj...] }
//
// Kinds that are not registered become ProblemNodes (recorded as unhandled
// for coverage); their children are still ingested beneath them.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpg/frontend.hpp"
#include "cpg/graph.hpp"

namespace cpg::generic {

class IngestionError : public Error {
 public:
  IngestionError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct Diagnostic {
  std::string path;  // JSON path such as "$.root.children[0].kind"
  std::string message;
};

inline constexpr std::string_view kAstVersion = "1";

// Empty iff ingest() would not throw for `document`.
std::vector<Diagnostic> validate(const nlohmann::json& document);

TranslationResult ingest(Graph& graph, const nlohmann::json& document);
TranslationResult ingest_text(Graph& graph, std::string_view text);

}  // namespace cpg::generic
