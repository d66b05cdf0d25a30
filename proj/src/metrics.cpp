#include "cpg/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "cpg/analysis.hpp"

namespace cpg::metrics {
namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::string grouped(long value) {
  std::string digits = std::to_string(value);
  for (int i = static_cast<int>(digits.size()) - 3; i > 0; i -= 3) digits.insert(static_cast<std::size_t>(i), ",");
  return digits;
}

double percent(std::size_t part, std::size_t whole, bool empty_full) {
  if (whole == 0) return empty_full ? 100.0 : 0.0;
  return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0;
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
}

}  // namespace

Sloc sloc_count(std::string_view text) {
  Sloc result;
  int line = 1;
  bool in_block = false;
  bool has_code = false;
  auto end_line = [&] {
    if (has_code) result.lines.insert(line);
    has_code = false;
    ++line;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (c == '\n') {
      end_line();
      continue;
    }
    if (in_block) {
      if (c == '*' && next == '/') {
        in_block = false;
        ++i;
      }
      continue;
    }
    if (c == '/' && next == '/') {
      while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
      continue;
    }
    if (c == '/' && next == '*') {
      in_block = true;
      ++i;
      continue;
    }
    if (c == '"' || c == '\'') {
      has_code = true;
      while (i + 1 < text.size() && text[i + 1] != '\n') {
        ++i;
        if (text[i] == '\\') {
          if (i + 1 < text.size() && text[i + 1] != '\n') ++i;
        } else if (text[i] == c) {
          break;
        }
      }
      continue;
    }
    if (c != ' ' && c != '\t' && c != '\r' && c != '\f' && c != '\v') has_code = true;
  }
  if (has_code) result.lines.insert(line);
  result.count = result.lines.size();
  return result;
}

std::set<int> spanned_lines(const std::vector<CoverageRecord>& records) {
  std::set<int> lines;
  for (std::size_t i = 1; i < records.size(); ++i) {
    for (int l = records[i].first_line; l <= records[i].last_line; ++l) lines.insert(l);
  }
  return lines;
}

double FileCoverage::covered_percent() const { return percent(covered.size(), sloc, true); }
double FileCoverage::uncovered_percent() const { return percent(uncovered.size(), sloc, false); }
double FileCoverage::partial_percent() const { return percent(partial.size(), sloc, false); }

FileCoverage coverage(const std::vector<CoverageRecord>& records, const std::set<int>& sloc, std::string file) {
  struct Sets {
    std::set<int> covered, uncovered, partial;
  };
  auto minus = [](std::set<int>& target, const std::set<int>& removed) {
    for (int l : removed) target.erase(l);
  };

  std::function<Sets(std::size_t)> visit = [&](std::size_t index) {
    const CoverageRecord& record = records[index];
    std::set<int> own;
    for (auto it = sloc.lower_bound(record.first_line); it != sloc.end() && *it <= record.last_line; ++it) {
      own.insert(*it);
    }
    std::set<int> u, c, p;
    for (std::size_t child : record.children) {
      Sets s = visit(child);
      u.merge(s.uncovered);
      c.merge(s.covered);
      p.merge(s.partial);
    }
    // A node without a handler contributes its whole span as uncovered.
    if (!record.handled) u.insert(own.begin(), own.end());

    Sets result;
    result.partial = p;
    std::set_intersection(u.begin(), u.end(), c.begin(), c.end(),
                          std::inserter(result.partial, result.partial.end()));
    result.uncovered = u;
    minus(result.uncovered, result.partial);
    result.covered = c;
    if (record.handled) result.covered.insert(own.begin(), own.end());
    minus(result.covered, result.uncovered);
    minus(result.covered, result.partial);
    return result;
  };

  FileCoverage out;
  out.file = std::move(file);
  out.sloc = sloc.size();
  if (!records.empty()) {
    Sets root = visit(0);
    out.covered = std::move(root.covered);
    out.uncovered = std::move(root.uncovered);
    out.partial = std::move(root.partial);
  }
  for (int l : sloc) {
    if (!out.covered.contains(l) && !out.partial.contains(l)) out.uncovered.insert(l);
  }
  return out;
}

std::size_t CoverageReport::sloc() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.sloc;
  return n;
}
std::size_t CoverageReport::covered() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.covered.size();
  return n;
}
std::size_t CoverageReport::uncovered() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.uncovered.size();
  return n;
}
std::size_t CoverageReport::partial() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.partial.size();
  return n;
}
double CoverageReport::covered_percent() const { return percent(covered(), sloc(), true); }
double CoverageReport::uncovered_percent() const { return percent(uncovered(), sloc(), false); }
double CoverageReport::partial_percent() const { return percent(partial(), sloc(), false); }

nlohmann::ordered_json to_json(const CoverageReport& report) {
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const auto& f : report.files) {
    files.push_back({{"file", f.file},
                     {"sloc", f.sloc},
                     {"covered", f.covered},
                     {"uncovered", f.uncovered},
                     {"partial", f.partial},
                     {"coveredPercent", f.covered_percent()},
                     {"uncoveredPercent", f.uncovered_percent()},
                     {"partialPercent", f.partial_percent()}});
  }
  return {{"perFile", files},
          {"totals",
           {{"sloc", report.sloc()},
            {"coveredPercent", report.covered_percent()},
            {"uncoveredPercent", report.uncovered_percent()},
            {"partialPercent", report.partial_percent()}}}};
}

std::string format_coverage(const CoverageReport& report) {
  std::string out = "file  SLoC  Cov.[%]  Uncov.[%]  Partial[%]\n";
  auto row = [&](const std::string& name, std::size_t sloc, double c, double u, double p) {
    out += name + "  " + std::to_string(sloc) + "  " + fixed(c, 2) + "  " + fixed(u, 2) + "  " + fixed(p, 2) + "\n";
  };
  for (const auto& f : report.files) {
    row(f.file, f.sloc, f.covered_percent(), f.uncovered_percent(), f.partial_percent());
  }
  row("total", report.sloc(), report.covered_percent(), report.uncovered_percent(), report.partial_percent());
  return out;
}

std::span<const ReferenceRow> reference_rows() {
  static constexpr ReferenceRow rows[] = {
      {"Java", 97, 1042.10, 37.5, 211541, 4.92, 2180, 99.16, 0.7, 0.12},
      {"C++", 88, 687.98, 46.0, 148036, 4.65, 1682, 96.10, 3.8, 0.05},
  };
  return rows;
}

std::vector<std::filesystem::path> collect_files(const std::filesystem::path& target) {
  auto accepted = [](const std::filesystem::path& p) {
    try {
      dispatch(p);
      return true;
    } catch (const UnsupportedLanguageError&) {
      return false;
    }
  };
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(target)) {
    for (const auto& entry : std::filesystem::recursive_directory_iterator(target)) {
      if (entry.is_regular_file() && accepted(entry.path())) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(target);
  }
  return files;
}

namespace {

struct Run {
  double frontend = 0;
  double passes = 0;
  std::size_t sloc = 0;
  CoverageReport coverage;
};

Run run_once(const std::vector<std::filesystem::path>& files, const BenchOptions& options) {
  const Deadline deadline(options.timeout_seconds);
  Analysis analysis(options.dfg_mode);
  for (const auto& file : files) {
    deadline.check("translation");
    if (!analysis.add_file(file)) throw Error(analysis.errors().back().message);
  }
  analysis.run_passes(deadline);
  deadline.check("passes");
  Run run{analysis.frontend_seconds(), analysis.passes_seconds(), 0, {}};
  for (const Unit& unit : analysis.units()) {
    run.sloc += unit.sloc.size();
    run.coverage.files.push_back(coverage(unit.result.coverage, unit.sloc, unit.result.file));
  }
  return run;
}

}  // namespace

BenchReport bench(const std::vector<std::filesystem::path>& targets, const BenchOptions& options) {
  BenchReport report;
  for (const auto& target : targets) {
    TargetResult result;
    result.target = target.string();
    try {
      if (!std::filesystem::exists(target)) throw Error("target does not exist");
      const auto files = collect_files(target);
      result.files = files.size();
      if (options.warmup) run_once(files, options);
      std::vector<double> frontend, passes;
      Run last;
      for (int i = 0; i < std::max(1, options.runs); ++i) {
        last = run_once(files, options);
        frontend.push_back(last.frontend);
        passes.push_back(last.passes);
      }
      result.sloc = last.sloc;
      result.frontend_seconds = median(frontend);
      result.passes_seconds = median(passes);
      result.total_seconds = result.frontend_seconds + result.passes_seconds;
      result.passes_share = result.total_seconds > 0 ? result.passes_seconds / result.total_seconds : 0;
      result.et_per_sloc_ms = result.sloc > 0 ? 1000.0 * result.total_seconds / static_cast<double>(result.sloc) : 0;
      result.covered_percent = last.coverage.covered_percent();
      result.uncovered_percent = last.coverage.uncovered_percent();
      result.partial_percent = last.coverage.partial_percent();
    } catch (const TimeoutError&) {
      result.timed_out = true;
    } catch (const std::exception& e) {
      result.error = e.what();
    }
    report.targets.push_back(std::move(result));
  }

  BenchAggregate& a = report.aggregate;
  double passes_seconds = 0, covered = 0, uncovered = 0, partial = 0;
  for (const auto& t : report.targets) {
    if (t.timed_out || t.error) continue;
    ++a.targets;
    a.total_seconds += t.total_seconds;
    passes_seconds += t.passes_seconds;
    a.sloc += t.sloc;
    // Coverage is weighted by SLoC.
    covered += t.covered_percent * static_cast<double>(t.sloc);
    uncovered += t.uncovered_percent * static_cast<double>(t.sloc);
    partial += t.partial_percent * static_cast<double>(t.sloc);
  }
  if (a.targets > 0) {
    a.passes_share = a.total_seconds > 0 ? passes_seconds / a.total_seconds : 0;
    a.average_sloc = static_cast<double>(a.sloc) / static_cast<double>(a.targets);
  }
  if (a.sloc > 0) {
    const auto sloc = static_cast<double>(a.sloc);
    a.et_per_sloc_ms = 1000.0 * a.total_seconds / sloc;
    a.covered_percent = covered / sloc;
    a.uncovered_percent = uncovered / sloc;
    a.partial_percent = partial / sloc;
  }
  return report;
}

nlohmann::ordered_json to_json(const BenchReport& report) {
  nlohmann::ordered_json targets = nlohmann::ordered_json::array();
  for (const auto& t : report.targets) {
    nlohmann::ordered_json row = {{"target", t.target},
                                  {"files", t.files},
                                  {"sloc", t.sloc},
                                  {"frontendEtSeconds", t.frontend_seconds},
                                  {"passesEtSeconds", t.passes_seconds},
                                  {"totalEtSeconds", t.total_seconds},
                                  {"passesEtShare", t.passes_share},
                                  {"etPerSlocMs", t.et_per_sloc_ms},
                                  {"coveredPercent", t.covered_percent},
                                  {"uncoveredPercent", t.uncovered_percent},
                                  {"partialPercent", t.partial_percent},
                                  {"timedOut", t.timed_out}};
    if (t.error) row["error"] = *t.error;
    targets.push_back(std::move(row));
  }
  const BenchAggregate& a = report.aggregate;
  nlohmann::ordered_json reference = nlohmann::ordered_json::array();
  for (const auto& r : reference_rows()) {
    reference.push_back({{"language", r.language},
                         {"repos", r.repos},
                         {"totalEtSeconds", r.total_seconds},
                         {"passesEtPercent", r.passes_percent},
                         {"sloc", r.sloc},
                         {"etPerSlocMs", r.et_per_sloc_ms},
                         {"averageSloc", r.average_sloc},
                         {"coveredPercent", r.covered_percent},
                         {"uncoveredPercent", r.uncovered_percent},
                         {"partialPercent", r.partial_percent}});
  }
  return {{"perTarget", targets},
          {"aggregate",
           {{"targets", a.targets},
            {"totalEtSeconds", a.total_seconds},
            {"passesEtShare", a.passes_share},
            {"sloc", a.sloc},
            {"etPerSlocMs", a.et_per_sloc_ms},
            {"averageSloc", a.average_sloc},
            {"coveredPercent", a.covered_percent},
            {"uncoveredPercent", a.uncovered_percent},
            {"partialPercent", a.partial_percent}}},
          {"reference", reference}};
}

std::string format_table(const BenchReport& report) {
  const std::vector<std::string> header = {"Target",       "Repos#",    "Total ET[s]", "ET Passes[%]",
                                           "Total SLoC#",  "ET/SLoC[ms]", "Avg SLoC#", "Cov.[%]",
                                           "Uncov.[%]",    "Partial[%]"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : report.targets) {
    if (t.timed_out || t.error) {
      rows.push_back({t.target, "0", t.timed_out ? "timeout" : "error: " + *t.error, "", "", "", "", "", "", ""});
      continue;
    }
    rows.push_back({t.target, "1", fixed(t.total_seconds, 3), fixed(100 * t.passes_share, 1), grouped(static_cast<long>(t.sloc)),
                    fixed(t.et_per_sloc_ms, 4), grouped(static_cast<long>(t.sloc)), fixed(t.covered_percent, 2),
                    fixed(t.uncovered_percent, 2), fixed(t.partial_percent, 2)});
  }
  const BenchAggregate& a = report.aggregate;
  rows.push_back({"all targets", std::to_string(a.targets), fixed(a.total_seconds, 3), fixed(100 * a.passes_share, 1),
                  grouped(static_cast<long>(a.sloc)), fixed(a.et_per_sloc_ms, 4),
                  grouped(static_cast<long>(a.average_sloc + 0.5)), fixed(a.covered_percent, 2),
                  fixed(a.uncovered_percent, 2), fixed(a.partial_percent, 2)});
  for (const auto& r : reference_rows()) {
    rows.push_back({std::string(r.language) + " (reference)", std::to_string(r.repos), fixed(r.total_seconds, 2),
                    fixed(r.passes_percent, 1), grouped(r.sloc), fixed(r.et_per_sloc_ms, 2), grouped(r.average_sloc),
                    fixed(r.covered_percent, 2), fixed(r.uncovered_percent, 1), fixed(r.partial_percent, 2)});
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      const std::string pad(width[c] - cell.size(), ' ');
      out += c == 0 ? cell + pad : pad + cell;
      out += c + 1 < cells.size() ? "  " : "\n";
    }
    return out;
  };
  std::string out = line(header);
  for (const auto& row : rows) out += line(row);
  out +=
      "Reference rows are published figures for other systems and are not measured here.\n"
      "Coverage is an upper bound: code a frontend drops without recording an\n"
      "unhandled node is still counted as covered.\n";
  return out;
}

}  // namespace cpg::metrics
