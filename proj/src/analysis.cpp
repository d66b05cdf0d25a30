#include "cpg/analysis.hpp"

#include <fstream>
#include <sstream>

#include "cpg/c_frontend.hpp"
#include "cpg/generic_frontend.hpp"
#include "cpg/metrics.hpp"

namespace cpg {
namespace {

double seconds_since(Deadline::Clock::time_point start) {
  return std::chrono::duration<double>(Deadline::Clock::now() - start).count();
}

}  // namespace

bool Analysis::add_file(const std::filesystem::path& path) {
  try {
    const FrontendKind frontend = dispatch(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file");
    std::ostringstream text;
    text << in.rdbuf();
    add_source(text.str(), path.string(), frontend);
    return true;
  } catch (const Error& e) {
    errors_.push_back({path.string(), e.what()});
  } catch (const std::exception& e) {
    errors_.push_back({path.string(), e.what()});
  }
  return false;
}

const Unit& Analysis::add_source(std::string_view text, std::string file, FrontendKind frontend) {
  if (passes_done_) throw Error("cannot add files after the passes ran");
  const auto start = Deadline::Clock::now();
  Unit unit{frontend == FrontendKind::C ? c::translate_source(graph_, text, file)
                                        : generic::ingest_text(graph_, text),
            frontend, {}, 0};
  unit.sloc = frontend == FrontendKind::C ? metrics::sloc_count(text).lines
                                          : metrics::spanned_lines(unit.result.coverage);
  unit.scope_index = scopes_.add(unit.result.scopes);
  units_.push_back(std::move(unit));
  frontend_seconds_ += seconds_since(start);
  return units_.back();
}

void Analysis::run_passes(const Deadline& deadline) {
  if (passes_done_) throw ConfigurationError("passes already ran for this analysis");
  deadline.check("translation");
  const auto start = Deadline::Clock::now();
  PassContext context{graph_, scopes_, dfg_mode_, {}, {}, std::nullopt};
  const auto passes = default_passes();
  cpg::run_passes(context, passes, [&](const Pass& pass) { deadline.check("pass " + pass.name); });
  passes_done_ = true;
  fixpoints_ = std::move(context.fixpoints);
  passes_seconds_ += seconds_since(start);
}

}  // namespace cpg
