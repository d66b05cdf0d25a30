#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "cpg/metrics.hpp"
#include "support/support.hpp"

using namespace cpg;
using namespace cpg::metrics;

namespace {

CoverageRecord rec(int first, int last, bool handled, std::vector<std::size_t> children = {}) {
  CoverageRecord r;
  r.handled = handled;
  r.first_line = first;
  r.last_line = last;
  r.children = std::move(children);
  return r;
}

std::set<int> range(int a, int b) {
  std::set<int> out;
  for (int i = a; i <= b; ++i) out.insert(i);
  return out;
}

// Random record tree whose child spans nest inside their parent's span.
std::vector<CoverageRecord> random_records(std::mt19937& rng, int lines) {
  std::vector<CoverageRecord> records{rec(1, lines, true)};
  std::vector<std::size_t> open{0};
  const int n = 1 + static_cast<int>(rng() % 30);
  for (int i = 0; i < n; ++i) {
    const std::size_t parent = open[rng() % open.size()];
    const int lo = records[parent].first_line;
    const int hi = records[parent].last_line;
    if (hi < lo) continue;
    const int a = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    const int b = a + static_cast<int>(rng() % static_cast<unsigned>(hi - a + 1));
    records.push_back(rec(a, b, rng() % 4 != 0));
    records[parent].children.push_back(records.size() - 1);
    open.push_back(records.size() - 1);
  }
  return records;
}

std::set<int> random_sloc(std::mt19937& rng, int lines) {
  std::set<int> out;
  for (int l = 1; l <= lines; ++l) {
    if (rng() % 4 != 0) out.insert(l);
  }
  return out;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cpg_metrics_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, std::string_view text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("sloc examples") {
    CHECK(sloc_count("int x;\n\n// hi\n").lines == std::set<int>{1});
    CHECK(sloc_count("").count == 0);
    CHECK(sloc_count("/* a\nb */\nint y;").lines == std::set<int>{3});
    CHECK(sloc_count("int a; /* x\n y */ int b;\n").lines == std::set<int>{1, 2});
    CHECK(sloc_count("char *s = \"// not a comment\";\n").count == 1);
    CHECK(sloc_count("char *s = \"/*\";\nint z;\n// */\n").lines == std::set<int>{1, 2});
    CHECK(sloc_count("char c = '\"'; // x\n   \t\n").lines == std::set<int>{1});
    CHECK(sloc_count("x\r\n\r\ny").lines == std::set<int>{1, 3});
  }

  TEST_CASE("property: sloc matches a line-by-line oracle on comment-free text") {
    std::mt19937 rng(67);
    for (int round = 0; round < 200; ++round) {
      std::string text;
      std::set<int> expected;
      const int lines = static_cast<int>(rng() % 30);
      for (int l = 1; l <= lines; ++l) {
        switch (rng() % 3) {
          case 0: break;
          case 1: text += std::string(rng() % 4, ' ') + "\t"; break;
          default:
            text += "  int v" + std::to_string(l) + ";";
            expected.insert(l);
        }
        text += "\n";
      }
      CHECK(sloc_count(text).lines == expected);
      CHECK(sloc_count(text).count == expected.size());
    }
  }

  TEST_CASE("coverage rules") {
    const std::set<int> sloc = range(1, 5);
    SUBCASE("all handled") {
      auto c = coverage({rec(1, 5, true, {1, 2}), rec(1, 2, true), rec(3, 5, true)}, sloc);
      CHECK(c.covered == sloc);
      CHECK(c.uncovered.empty());
      CHECK(c.partial.empty());
      CHECK(c.covered_percent() == doctest::Approx(100.0));
    }
    SUBCASE("unhandled node") {
      auto c = coverage({rec(1, 5, true, {1, 2}), rec(1, 2, true), rec(3, 3, false)}, sloc);
      CHECK(c.uncovered == std::set<int>{3});
      CHECK(c.covered == std::set<int>{1, 2, 4, 5});
      CHECK(c.partial.empty());
    }
    SUBCASE("shared line") {
      auto c = coverage({rec(1, 5, true, {1, 2}), rec(2, 2, true), rec(2, 3, false)}, sloc);
      CHECK(c.partial == std::set<int>{2});
      CHECK(c.uncovered == std::set<int>{3});
      CHECK(c.covered == std::set<int>{1, 4, 5});
    }
    SUBCASE("partial propagates upwards") {
      auto c = coverage({rec(1, 5, true, {1}), rec(1, 3, true, {2, 3}), rec(2, 2, true), rec(2, 2, false)}, sloc);
      CHECK(c.partial == std::set<int>{2});
    }
    SUBCASE("lines outside every node are uncovered") {
      auto c = coverage({rec(1, 2, true)}, sloc);
      CHECK(c.uncovered == std::set<int>{3, 4, 5});
      CHECK(c.covered_percent() == doctest::Approx(40.0));
    }
    SUBCASE("spans are clipped to sloc") {
      auto c = coverage({rec(1, 9, true, {1}), rec(6, 9, false)}, sloc);
      CHECK(c.covered == sloc);
    }
    SUBCASE("empty file") {
      auto c = coverage({rec(1, 0, true)}, {});
      CHECK(c.covered_percent() == doctest::Approx(100.0));
      CHECK(c.uncovered_percent() == doctest::Approx(0.0));
    }
  }

  TEST_CASE("property: coverage sets are disjoint, complete and monotone") {
    std::mt19937 rng(71);
    for (int round = 0; round < 500; ++round) {
      const int lines = 1 + static_cast<int>(rng() % 40);
      auto records = random_records(rng, lines);
      const std::set<int> sloc = random_sloc(rng, lines);
      const FileCoverage c = coverage(records, sloc);

      std::set<int> all;
      for (const auto* s : {&c.covered, &c.uncovered, &c.partial}) {
        for (int l : *s) {
          CHECK(sloc.contains(l));
          CHECK(all.insert(l).second);
        }
      }
      CHECK(all == sloc);
      CHECK(c.covered_percent() + c.uncovered_percent() + c.partial_percent() == doctest::Approx(100.0).epsilon(1e-4));

      // An unhandled record's lines are never reported covered.
      for (const auto& r : records) {
        if (r.handled) continue;
        for (int l = r.first_line; l <= r.last_line; ++l) CHECK_FALSE(c.covered.contains(l));
      }

      const std::size_t flip = rng() % records.size();
      if (records[flip].handled) {
        records[flip].handled = false;
        CHECK(coverage(records, sloc).covered_percent() <= c.covered_percent() + 1e-9);
      }
    }
  }

  TEST_CASE("frontend coverage of a directive") {
    auto a = cpg::testing::translate("#include <stdio.h>\n\nint x;\n// c\nint f() { return x; }\n");
    const Unit& u = a->units().at(0);
    CHECK(u.sloc == std::set<int>{1, 3, 5});
    const FileCoverage c = coverage(u.result.coverage, u.sloc, u.result.file);
    CHECK(c.uncovered == std::set<int>{1});
    CHECK(c.covered == std::set<int>{3, 5});
  }

  TEST_CASE("report totals and json") {
    CoverageReport r;
    FileCoverage a;
    a.file = "a.c";
    a.sloc = 3;
    a.covered = {1, 2};
    a.uncovered = {3};
    FileCoverage b;
    b.file = "b.c";
    b.sloc = 1;
    b.partial = {1};
    r.files = {a, b};
    CHECK(r.sloc() == 4);
    CHECK(r.covered_percent() == doctest::Approx(50.0));
    CHECK(r.uncovered_percent() == doctest::Approx(25.0));
    CHECK(r.partial_percent() == doctest::Approx(25.0));
    const auto j = to_json(r);
    CHECK(j.dump().find("\"a.c\"") != std::string::npos);
    CHECK(CoverageReport{}.covered_percent() == doctest::Approx(100.0));
    CHECK_FALSE(format_coverage(r).empty());
  }

  TEST_CASE("reference figures are internally consistent") {
    const auto rows = reference_rows();
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].language == "Java");
    CHECK(rows[0].sloc == 211541);
    CHECK(rows[0].et_per_sloc_ms == doctest::Approx(4.92));
    CHECK(rows[0].passes_percent == doctest::Approx(37.5));
    CHECK(rows[0].covered_percent == doctest::Approx(99.16));
    CHECK(rows[1].language == "C++");
    CHECK(rows[1].sloc == 148036);
    for (const auto& r : rows) {
      // The published ms/SLoC agrees with total time over SLoC to within one
      // unit in the last printed digit (Java computes to 4.926).
      CHECK(std::abs(1000.0 * r.total_seconds / static_cast<double>(r.sloc) - r.et_per_sloc_ms) <= 0.01);
      // Average SLoC is truncated.
      CHECK(r.sloc / r.repos == r.average_sloc);
      CHECK(r.covered_percent + r.uncovered_percent + r.partial_percent <= 100.0);
    }
  }

  TEST_CASE("bench") {
    const auto dir = temp_dir("bench");
    write(dir / "p1" / "a.c", "int g;\nint f(int x) {\n  int y = x + g;\n  while (y) { y = y - 1; }\n  return y;\n}\n");
    write(dir / "p1" / "sub" / "b.c", "int h() { return f(1); }\n#include <x.h>\n");
    write(dir / "p1" / "notes.txt", "ignored\n");
    write(dir / "p2" / "c.c", "void k() { }\n");

    CHECK(collect_files(dir / "p1") == std::vector<std::filesystem::path>{dir / "p1" / "a.c", dir / "p1" / "sub" / "b.c"});

    SUBCASE("measured") {
      const BenchReport r = bench({dir / "p1", dir / "p2", dir / "missing"}, {.runs = 3});
      REQUIRE(r.targets.size() == 3);
      const TargetResult& t = r.targets[0];
      CHECK(t.files == 2);
      CHECK(t.sloc == 8);
      CHECK_FALSE(t.timed_out);
      CHECK(t.total_seconds > 0);
      CHECK(t.passes_share > 0);
      CHECK(t.passes_share < 1);
      CHECK(t.et_per_sloc_ms == doctest::Approx(1000.0 * t.total_seconds / 8.0));
      CHECK(t.uncovered_percent == doctest::Approx(100.0 / 8.0));
      CHECK(r.targets[2].error);
      CHECK(r.aggregate.targets == 2);
      CHECK(r.aggregate.sloc == 9);
      CHECK(r.aggregate.average_sloc == doctest::Approx(4.5));
      CHECK(r.aggregate.et_per_sloc_ms ==
            doctest::Approx(1000.0 * (t.total_seconds + r.targets[1].total_seconds) / 9.0));
      const std::string table = format_table(r);
      for (const char* col : {"Repos#", "Total ET[s]", "ET Passes[%]", "Total SLoC#", "ET/SLoC[ms]", "Avg SLoC#",
                              "Cov.[%]", "Uncov.[%]", "Partial[%]", "upper bound"}) {
        CHECK_MESSAGE(table.find(col) != std::string::npos, col);
      }
      const auto j = to_json(r);
      CHECK(j["perTarget"].size() == 3);
      CHECK(j["aggregate"]["sloc"] == 9);
      CHECK(j["reference"].size() == 2);
    }
    SUBCASE("zero timeout") {
      const BenchReport r = bench({dir / "p1", dir / "p2"}, {.timeout_seconds = 0});
      for (const auto& t : r.targets) CHECK(t.timed_out);
      CHECK(r.aggregate.targets == 0);
      CHECK(r.aggregate.sloc == 0);
      CHECK(r.aggregate.et_per_sloc_ms == 0);
    }
    std::filesystem::remove_all(dir);
  }
}
