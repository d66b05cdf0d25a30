#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cpg/graph.hpp"
#include "cpg/scopes.hpp"

namespace cpg {

class UnsupportedLanguageError : public Error {
 public:
  explicit UnsupportedLanguageError(std::string extension)
      : Error("unsupported language: no frontend for extension '" + extension + "'"),
        extension_(std::move(extension)) {}
  const std::string& extension() const { return extension_; }

 private:
  std::string extension_;
};

enum class FrontendKind : std::uint8_t { C, Generic };

std::string_view to_string(FrontendKind kind);

// `.c`/`.h` go to the C frontend, `.cpg.json` to the generic one.
FrontendKind dispatch(const std::filesystem::path& path);

/// One AST node as seen by the coverage metric: whether a handler existed
/// for it, the physical lines it spans, and its nearest recorded descendants.
struct CoverageRecord {
  NodeId node{};
  bool handled = true;
  // Empty span when first_line > last_line.
  int first_line = 1;
  int last_line = 0;
  std::vector<std::size_t> children;
};

struct TranslationResult {
  NodeId root{};
  std::string file;
  ScopeTree scopes;
  // Index 0 is the translation unit.
  std::vector<CoverageRecord> coverage;
  std::vector<std::string> diagnostics;
};

/// Walks the AST under `root` with a ScopeManager: declarations are bound in
/// the active scope and every node is associated with the scope it occurs in.
ScopeTree build_scopes(const Graph& graph, NodeId root, std::vector<std::string>* diagnostics = nullptr);

// Skips IMPLICIT and INFERRED nodes; their children attach to the nearest
// recorded ancestor.
std::vector<CoverageRecord> collect_coverage(const Graph& graph, NodeId root);

}  // namespace cpg
