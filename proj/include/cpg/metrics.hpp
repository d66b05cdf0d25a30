#pragma once

// SLoC counting, the covered/uncovered/partial coverage metric and the
// execution-time benchmark harness.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpg/frontend.hpp"
#include "cpg/passes.hpp"

namespace cpg::metrics {

struct Sloc {
  std::size_t count = 0;
  std::set<int> lines;
};

/// Lines that are non-blank after removing `//` and `/* */` comments.
/// String and character literals are not scanned for comment markers.
Sloc sloc_count(std::string_view text);

// Union of the line spans of every record except the root; the SLoC
// substitute for documents that carry no source text.
std::set<int> spanned_lines(const std::vector<CoverageRecord>& records);

struct FileCoverage {
  std::string file;
  std::size_t sloc = 0;
  std::set<int> covered;
  std::set<int> uncovered;
  std::set<int> partial;

  double covered_percent() const;
  double uncovered_percent() const;
  double partial_percent() const;
};

/// Bottom-up classification over `records` (index 0 is the root). All spans
/// are clipped to `sloc` first; SLoC lines no node claimed end up uncovered.
FileCoverage coverage(const std::vector<CoverageRecord>& records, const std::set<int>& sloc,
                      std::string file = {});

struct CoverageReport {
  std::vector<FileCoverage> files;

  std::size_t sloc() const;
  std::size_t covered() const;
  std::size_t uncovered() const;
  std::size_t partial() const;
  // Over all SLoC; an empty report counts as fully covered.
  double covered_percent() const;
  double uncovered_percent() const;
  double partial_percent() const;
};

nlohmann::ordered_json to_json(const CoverageReport& report);
std::string format_coverage(const CoverageReport& report);

struct BenchOptions {
  double timeout_seconds = 300.0;
  int runs = 3;
  bool warmup = true;
  DfgMode dfg_mode = DfgMode::FlowSensitive;
};

struct TargetResult {
  std::string target;
  std::size_t files = 0;
  std::size_t sloc = 0;
  double frontend_seconds = 0;
  double passes_seconds = 0;
  double total_seconds = 0;
  double passes_share = 0;
  double et_per_sloc_ms = 0;
  double covered_percent = 0;
  double uncovered_percent = 0;
  double partial_percent = 0;
  bool timed_out = false;
  std::optional<std::string> error;
};

struct BenchAggregate {
  std::size_t targets = 0;  // completed, not timed out, no error
  double total_seconds = 0;
  double passes_share = 0;
  std::size_t sloc = 0;
  double et_per_sloc_ms = 0;
  double average_sloc = 0;
  double covered_percent = 0;
  double uncovered_percent = 0;
  double partial_percent = 0;
};

struct BenchReport {
  std::vector<TargetResult> targets;
  BenchAggregate aggregate;
};

// Published reference figures, printed for comparison only.
struct ReferenceRow {
  std::string_view language;
  int repos;
  double total_seconds;
  double passes_percent;
  long sloc;
  double et_per_sloc_ms;
  long average_sloc;
  double covered_percent;
  double uncovered_percent;
  double partial_percent;
};
std::span<const ReferenceRow> reference_rows();

/// Each target is a file or a directory (searched recursively for files a
/// frontend accepts). Per target: one warm-up run, then the median of
/// `runs` measured runs.
BenchReport bench(const std::vector<std::filesystem::path>& targets, const BenchOptions& options = {});

// Files under `target` that some frontend accepts, sorted.
std::vector<std::filesystem::path> collect_files(const std::filesystem::path& target);

nlohmann::ordered_json to_json(const BenchReport& report);
std::string format_table(const BenchReport& report);

}  // namespace cpg::metrics
