#pragma once

// End-to-end pipeline: frontends over a set of files, then the passes.

#include <chrono>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/frontend.hpp"
#include "cpg/graph.hpp"
#include "cpg/passes.hpp"
#include "cpg/scopes.hpp"

namespace cpg {

class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// Cooperative time limit, checked between files and between passes.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;  // never expires
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}

  bool expired() const { return end_ && Clock::now() >= *end_; }
  void check(std::string_view where) const {
    if (expired()) throw TimeoutError("time limit exceeded during " + std::string(where));
  }

 private:
  std::optional<Clock::time_point> end_;
};

struct Unit {
  TranslationResult result;
  FrontendKind frontend = FrontendKind::C;
  std::set<int> sloc;
  std::size_t scope_index = 0;
};

struct FileError {
  std::string file;
  std::string message;
};

class Analysis {
 public:
  explicit Analysis(DfgMode mode = DfgMode::FlowSensitive) : dfg_mode_(mode) {}
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  /// Reads and translates one file. Failures (unsupported extension,
  /// unreadable file, malformed document) are recorded in errors() and
  /// reported by returning false.
  bool add_file(const std::filesystem::path& path);

  // Throws on failure.
  const Unit& add_source(std::string_view text, std::string file, FrontendKind frontend);

  /// Runs the default passes. Can only run once per analysis.
  void run_passes(const Deadline& deadline = {});
  bool passes_done() const { return passes_done_; }

  Graph& graph() { return graph_; }
  const Graph& graph() const { return graph_; }
  ScopeForest& scopes() { return scopes_; }
  const std::vector<Unit>& units() const { return units_; }
  const std::vector<FileError>& errors() const { return errors_; }
  const std::vector<FixpointStats>& fixpoints() const { return fixpoints_; }
  DfgMode dfg_mode() const { return dfg_mode_; }

  double frontend_seconds() const { return frontend_seconds_; }
  double passes_seconds() const { return passes_seconds_; }

 private:
  Graph graph_;
  ScopeForest scopes_;
  std::vector<Unit> units_;
  std::vector<FileError> errors_;
  std::vector<FixpointStats> fixpoints_;
  DfgMode dfg_mode_;
  bool passes_done_ = false;
  double frontend_seconds_ = 0;
  double passes_seconds_ = 0;
};

}  // namespace cpg
