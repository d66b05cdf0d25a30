#pragma once

// Graph queries, registered checks, the interactive session and the
// command-line driver.

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpg/analysis.hpp"
#include "cpg/graph.hpp"

namespace cpg::console {

// Unknown node ids and malformed query arguments.
class QueryError : public Error {
 public:
  using Error::Error;
};

struct Finding {
  std::string check;
  NodeId node{};
  std::optional<SourceLocation> location;
  std::string message;
  std::vector<NodeId> witness;
  std::set<EdgeLabel> witness_labels;
};

/// Shortest path from `from` to `to` over edges whose label is in `labels`
/// (BFS, ties broken by edge insertion order). `from == to` gives [from].
std::optional<std::vector<NodeId>> exists_path(const Graph& graph, NodeId from, NodeId to,
                                               const std::set<EdgeLabel>& labels);

// Consecutive witness nodes are joined by an edge with one of `labels`.
bool verify_witness(const Graph& graph, std::span<const NodeId> witness, const std::set<EdgeLabel>& labels);

/// For every dereference (`*e`, `e->f`) reached over DFG by a null literal,
/// one finding whose witness runs from the literal to `e`. Requires the
/// flow-sensitive DFG; throws ConfigurationError otherwise.
std::vector<Finding> check_null_deref(const Graph& graph, DfgMode mode);

using Check = std::function<std::vector<Finding>(const Analysis&)>;

class CheckRegistry {
 public:
  // Registry with the builtin checks (currently "null-deref").
  static CheckRegistry builtin();

  void add(std::string name, std::string description, Check check);
  const Check* find(std::string_view name) const;
  std::vector<std::pair<std::string, std::string>> list() const;  // (name, description)

 private:
  struct Entry {
    std::string description;
    Check check;
  };
  std::map<std::string, Entry, std::less<>> checks_;
};

// "<file>:<line>:<col>: <check>: <message>"
std::string format_finding(const Finding& finding);
nlohmann::ordered_json to_json(const std::vector<Finding>& findings);

/// REPL state. execute() never throws; errors come back as output text.
class Session {
 public:
  explicit Session(CheckRegistry checks = CheckRegistry::builtin());

  std::string execute(std::string_view line);
  bool finished() const { return finished_; }

  // Adds in-memory source as if it had been loaded from `file`.
  std::string load_source(std::string_view text, std::string file, FrontendKind frontend = FrontendKind::C);

  const Analysis* analysis() const { return analysis_.get(); }

 private:
  std::string dispatch(const std::vector<std::string>& words);
  Analysis& fresh_analysis(DfgMode mode);
  Analysis& ready_analysis();
  NodeId node_arg(const std::string& text) const;

  std::string load(const std::vector<std::string>& paths);
  std::string run_passes(const std::vector<std::string>& args);
  std::string nodes(const std::vector<std::string>& args) const;
  std::string show(const std::vector<std::string>& args) const;
  std::string neighbors(const std::vector<std::string>& args, Direction direction) const;
  std::string path(const std::vector<std::string>& args) const;
  std::string check(const std::vector<std::string>& args);
  std::string export_graph(const std::vector<std::string>& args) const;

  CheckRegistry checks_;
  std::unique_ptr<Analysis> analysis_;
  // Everything loaded so far, replayed when the analysis is rebuilt.
  struct Source {
    std::string file;
    std::optional<std::string> text;
    FrontendKind frontend = FrontendKind::C;
  };
  std::vector<Source> sources_;
  bool finished_ = false;
};

std::string help_text();

// Reads commands from `in` until EOF or quit.
void run_repl(Session& session, std::istream& in, std::ostream& out, bool prompt);

/// `cpg analyze ...` / `cpg console ...`. `args` excludes the program name.
/// Returns 0 (clean), 1 (findings) or 2 (errors).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cpg::console
