#include "cpg/console.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "cpg/export.hpp"
#include "cpg/metrics.hpp"

namespace cpg::console {

// --- queries ---------------------------------------------------------------

std::optional<std::vector<NodeId>> exists_path(const Graph& graph, NodeId from, NodeId to,
                                               const std::set<EdgeLabel>& labels) {
  for (NodeId id : {from, to}) {
    if (!graph.contains(id)) throw QueryError("no node with id " + std::to_string(raw(id)));
  }
  std::unordered_map<NodeId, NodeId> parent{{from, from}};
  std::deque<NodeId> queue{from};
  while (!queue.empty()) {
    const NodeId n = queue.front();
    queue.pop_front();
    if (n == to) break;
    for (EdgeLabel label : labels) {
      for (const Edge* e : graph.edges_of(n, label, Direction::Out)) {
        if (parent.try_emplace(e->to, n).second) queue.push_back(e->to);
      }
    }
  }
  if (!parent.contains(to)) return std::nullopt;
  std::vector<NodeId> path{to};
  while (path.back() != from) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

bool verify_witness(const Graph& graph, std::span<const NodeId> witness, const std::set<EdgeLabel>& labels) {
  if (witness.empty()) return false;
  for (NodeId id : witness) {
    if (!graph.contains(id)) return false;
  }
  for (std::size_t i = 0; i + 1 < witness.size(); ++i) {
    const bool linked = std::any_of(labels.begin(), labels.end(),
                                    [&](EdgeLabel l) { return graph.has_edge(witness[i], witness[i + 1], l); });
    if (!linked) return false;
  }
  return true;
}

// --- checks ----------------------------------------------------------------

namespace {

bool is_null_literal(const Graph& graph, const Node& node) {
  if (!graph.kinds().is_subkind(node.kind, kinds::Literal)) return false;
  if (auto kind = node.string_property("literalKind")) return *kind == "null";
  const Scalar* value = node.property("value");
  return value && std::holds_alternative<std::nullptr_t>(*value);
}

// Dereference site and the expression it dereferences.
std::optional<NodeId> dereferenced(const Graph& graph, const Node& node) {
  const std::string op = node.string_property("operator").value_or("");
  if (graph.kinds().is_subkind(node.kind, kinds::UnaryOperator) && op == "*") return graph.ast_child(node.id, "INPUT");
  if ((graph.kinds().is_subkind(node.kind, kinds::MemberExpression) ||
       graph.kinds().is_subkind(node.kind, kinds::MemberCallExpression)) &&
      op == "->") {
    return graph.ast_child(node.id, "BASE");
  }
  return std::nullopt;
}

}  // namespace

std::vector<Finding> check_null_deref(const Graph& graph, DfgMode mode) {
  if (mode != DfgMode::FlowSensitive) {
    throw ConfigurationError("null-deref needs the flow-sensitive DFG; run the passes with --dfg-mode flow");
  }
  // Multi-source BFS from every null literal.
  std::unordered_map<NodeId, NodeId> parent;
  std::deque<NodeId> queue;
  for (const Node& node : graph.nodes()) {
    if (is_null_literal(graph, node)) {
      parent.emplace(node.id, node.id);
      queue.push_back(node.id);
    }
  }
  while (!queue.empty()) {
    const NodeId n = queue.front();
    queue.pop_front();
    for (const Edge* e : graph.edges_of(n, EdgeLabel::Dfg, Direction::Out)) {
      if (parent.try_emplace(e->to, n).second) queue.push_back(e->to);
    }
  }

  std::vector<Finding> findings;
  for (const Node& node : graph.nodes()) {
    auto target = dereferenced(graph, node);
    if (!target || !parent.contains(*target)) continue;
    std::vector<NodeId> witness{*target};
    while (parent.at(witness.back()) != witness.back()) witness.push_back(parent.at(witness.back()));
    std::reverse(witness.begin(), witness.end());
    const Node& t = graph.node(*target);
    const std::string what = t.name ? "'" + *t.name + "'" : "expression";
    findings.push_back({"null-deref", node.id, node.location,
                        "possible null dereference of " + what + " (null assigned at node " +
                            std::to_string(raw(witness.front())) + ")",
                        std::move(witness),
                        {EdgeLabel::Dfg}});
  }
  return findings;
}

CheckRegistry CheckRegistry::builtin() {
  CheckRegistry registry;
  registry.add("null-deref", "dereferences reachable by a null literal over the data-flow graph",
               [](const Analysis& a) { return check_null_deref(a.graph(), a.dfg_mode()); });
  return registry;
}

void CheckRegistry::add(std::string name, std::string description, Check check) {
  if (checks_.contains(name)) throw ConfigurationError("check registered twice: " + name);
  checks_.emplace(std::move(name), Entry{std::move(description), std::move(check)});
}

const Check* CheckRegistry::find(std::string_view name) const {
  auto it = checks_.find(name);
  return it == checks_.end() ? nullptr : &it->second.check;
}

std::vector<std::pair<std::string, std::string>> CheckRegistry::list() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, entry] : checks_) out.emplace_back(name, entry.description);
  return out;
}

std::string format_finding(const Finding& f) {
  std::string where = "<unknown>:0:0";
  if (f.location) {
    where = f.location->file + ":" + std::to_string(f.location->start_line) + ":" +
            std::to_string(f.location->start_col);
  }
  return where + ": " + f.check + ": " + f.message;
}

nlohmann::ordered_json to_json(const std::vector<Finding>& findings) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Finding& f : findings) {
    nlohmann::ordered_json item = {{"check", f.check}, {"node", raw(f.node)}};
    if (f.location) {
      item["location"] = {{"file", f.location->file},
                          {"startLine", f.location->start_line},
                          {"startCol", f.location->start_col},
                          {"endLine", f.location->end_line},
                          {"endCol", f.location->end_col}};
    }
    item["message"] = f.message;
    std::vector<std::uint32_t> witness;
    for (NodeId id : f.witness) witness.push_back(raw(id));
    item["witness"] = witness;
    std::vector<std::string> labels;
    for (EdgeLabel l : f.witness_labels) labels.emplace_back(to_string(l));
    item["witnessLabels"] = labels;
    out.push_back(std::move(item));
  }
  return out;
}

// --- session ---------------------------------------------------------------

namespace {

std::vector<std::string> split(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string scalar_text(const Scalar& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          return "null";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return nlohmann::json(v).dump();
        }
      },
      value);
}

std::string location_text(const std::optional<SourceLocation>& l) {
  if (!l) return "-";
  return l->file + ":" + std::to_string(l->start_line) + ":" + std::to_string(l->start_col);
}

std::string node_line(const Graph& graph, NodeId id) {
  const Node& n = graph.node(id);
  std::string out = "#" + std::to_string(raw(id)) + " " + graph.kinds().name(n.kind);
  if (n.name) out += " '" + *n.name + "'";
  return out + " @ " + location_text(n.location);
}

std::set<EdgeLabel> parse_labels(const std::string& text) {
  std::set<EdgeLabel> labels;
  std::istringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    std::string upper = part;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    auto label = parse_edge_label(upper);
    if (!label) throw QueryError("unknown edge label '" + part + "'");
    labels.insert(*label);
  }
  if (labels.empty()) throw QueryError("no edge label given");
  return labels;
}

std::string edge_detail(const Edge& e) {
  std::string out;
  if (e.role) out += *e.role;
  if (e.index) out += "[" + std::to_string(*e.index) + "]";
  if (e.branch) out += (out.empty() ? "" : " ") + e.branch->to_string();
  return out.empty() ? out : " (" + out + ")";
}

std::string path_text(std::span<const NodeId> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? " -> " : "") + std::to_string(raw(path[i]));
  return out;
}

void write_file(const std::string& file, std::string_view text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file);
  out << text;
  if (!out) throw Error("cannot write " + file);
}

}  // namespace

std::string help_text() {
  return "commands:\n"
         "  load <path...>                     translate files or directories\n"
         "  run-passes [--dfg-mode flow|decl]  run the enrichment passes\n"
         "  nodes <kind> [--sub]               list nodes of a kind (with subkinds)\n"
         "  show <id>                          node details and edges\n"
         "  succ <id> <label> | pred <id> <label>\n"
         "  path <from> <to> <label[,label]>   shortest path witness\n"
         "  check <name>                       run a registered check\n"
         "  export <json|dot|cypher> <file>    write the graph\n"
         "  help | quit\n";
}

Session::Session(CheckRegistry checks) : checks_(std::move(checks)) {}

std::string Session::execute(std::string_view line) {
  try {
    const auto words = split(line);
    if (words.empty()) return "";
    return dispatch(words);
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what() + "\n";
  } catch (...) {
    return "error: unknown failure\n";
  }
}

std::string Session::dispatch(const std::vector<std::string>& words) {
  const std::string& command = words[0];
  const std::vector<std::string> args(words.begin() + 1, words.end());
  if (command == "quit" || command == "exit") {
    finished_ = true;
    return "";
  }
  if (command == "help") return help_text();
  if (command == "load") return load(args);
  if (command == "run-passes") return run_passes(args);
  if (command == "nodes") return nodes(args);
  if (command == "show") return show(args);
  if (command == "succ") return neighbors(args, Direction::Out);
  if (command == "pred") return neighbors(args, Direction::In);
  if (command == "path") return path(args);
  if (command == "check") return check(args);
  if (command == "export") return export_graph(args);
  return "unknown command '" + command + "'\n" + help_text();
}

Analysis& Session::fresh_analysis(DfgMode mode) {
  analysis_ = std::make_unique<Analysis>(mode);
  for (const Source& s : sources_) {
    if (s.text) {
      try {
        analysis_->add_source(*s.text, s.file, s.frontend);
      } catch (const std::exception&) {
        // Reported when the source was first loaded.
      }
    } else {
      analysis_->add_file(s.file);
    }
  }
  return *analysis_;
}

Analysis& Session::ready_analysis() {
  if (!analysis_) throw QueryError("nothing loaded; use 'load <path>' first");
  return *analysis_;
}

NodeId Session::node_arg(const std::string& text) const {
  if (!analysis_) throw QueryError("nothing loaded; use 'load <path>' first");
  std::uint32_t value = 0;
  const std::string digits = text.starts_with('#') ? text.substr(1) : text;
  try {
    std::size_t used = 0;
    const unsigned long parsed = std::stoul(digits, &used);
    if (used != digits.size() || parsed > std::numeric_limits<std::uint32_t>::max()) throw QueryError("");
    value = static_cast<std::uint32_t>(parsed);
  } catch (const std::exception&) {
    throw QueryError("not a node id: '" + text + "'");
  }
  const NodeId id{value};
  if (!analysis_->graph().contains(id)) throw QueryError("no node with id " + digits);
  return id;
}

std::string Session::load_source(std::string_view text, std::string file, FrontendKind frontend) {
  try {
    if (!analysis_ || analysis_->passes_done()) {
      fresh_analysis(analysis_ ? analysis_->dfg_mode() : DfgMode::FlowSensitive);
    }
    analysis_->add_source(text, file, frontend);
    sources_.push_back({file, std::string(text), frontend});
    return "loaded " + file + "\n";
  } catch (const std::exception& e) {
    return "error: " + file + ": " + e.what() + "\n";
  }
}

std::string Session::load(const std::vector<std::string>& paths) {
  if (paths.empty()) throw QueryError("usage: load <path...>");
  std::vector<std::string> files;
  std::string out;
  for (const auto& p : paths) {
    if (!std::filesystem::exists(p)) {
      out += "error: " + p + ": no such file or directory\n";
      continue;
    }
    for (const auto& f : metrics::collect_files(p)) files.push_back(f.string());
  }
  const bool rebuild = !analysis_ || analysis_->passes_done();
  const DfgMode mode = analysis_ ? analysis_->dfg_mode() : DfgMode::FlowSensitive;
  if (rebuild) {
    // Previously loaded sources come back through the replay; new files are
    // added below so their errors can be reported.
    fresh_analysis(mode);
  }
  for (const auto& f : files) {
    const std::size_t errors = analysis_->errors().size();
    if (analysis_->add_file(f)) {
      sources_.push_back({f, std::nullopt, FrontendKind::C});
      out += "loaded " + f + "\n";
      for (const auto& d : analysis_->units().back().result.diagnostics) out += "warning: " + d + "\n";
    } else {
      out += "error: " + analysis_->errors()[errors].file + ": " + analysis_->errors()[errors].message + "\n";
    }
  }
  out += std::to_string(analysis_->graph().node_count()) + " nodes\n";
  return out;
}

std::string Session::run_passes(const std::vector<std::string>& args) {
  DfgMode mode = DfgMode::FlowSensitive;
  if (!args.empty()) {
    if (args.size() != 2 || args[0] != "--dfg-mode" || (args[1] != "flow" && args[1] != "decl")) {
      throw QueryError("usage: run-passes [--dfg-mode flow|decl]");
    }
    mode = args[1] == "flow" ? DfgMode::FlowSensitive : DfgMode::DeclarationLink;
  }
  if (sources_.empty()) throw QueryError("nothing loaded; use 'load <path>' first");
  if (!analysis_ || analysis_->passes_done() || analysis_->dfg_mode() != mode) fresh_analysis(mode);
  analysis_->run_passes();
  const Graph& g = analysis_->graph();
  return "passes done (dfg mode " + std::string(to_string(mode)) + "): " + std::to_string(g.node_count()) +
         " nodes, " + std::to_string(g.edge_count()) + " edges\n";
}

std::string Session::nodes(const std::vector<std::string>& args) const {
  if (args.empty() || args.size() > 2 || (args.size() == 2 && args[1] != "--sub")) {
    throw QueryError("usage: nodes <kind> [--sub]");
  }
  if (!analysis_) throw QueryError("nothing loaded; use 'load <path>' first");
  const Graph& g = analysis_->graph();
  auto kind = g.kinds().find(args[0]);
  if (!kind) throw QueryError("unknown kind '" + args[0] + "'");
  std::string out;
  const auto found = g.nodes_by_kind(*kind, args.size() == 2);
  for (NodeId id : found) out += node_line(g, id) + "\n";
  return out + std::to_string(found.size()) + " node(s)\n";
}

std::string Session::show(const std::vector<std::string>& args) const {
  if (args.size() != 1) throw QueryError("usage: show <id>");
  const NodeId id = node_arg(args[0]);
  const Graph& g = analysis_->graph();
  const Node& n = g.node(id);
  std::string out = node_line(g, id) + "\n";
  if (n.location) {
    out += "  span " + std::to_string(n.location->start_line) + ":" + std::to_string(n.location->start_col) + "-" +
           std::to_string(n.location->end_line) + ":" + std::to_string(n.location->end_col) + "\n";
  }
  if (n.flags.implicit) out += "  IMPLICIT\n";
  if (n.flags.inferred) out += "  INFERRED\n";
  if (n.code) out += "  code " + nlohmann::json(*n.code).dump() + "\n";
  for (const auto& [key, value] : n.properties) out += "  " + key + " = " + scalar_text(value) + "\n";
  for (EdgeLabel label : kAllEdgeLabels) {
    for (const Edge* e : g.edges_of(id, label, Direction::Out)) {
      out += "  -" + std::string(to_string(label)) + "-> #" + std::to_string(raw(e->to)) + edge_detail(*e) + "\n";
    }
    for (const Edge* e : g.edges_of(id, label, Direction::In)) {
      out += "  <-" + std::string(to_string(label)) + "- #" + std::to_string(raw(e->from)) + edge_detail(*e) + "\n";
    }
  }
  return out;
}

std::string Session::neighbors(const std::vector<std::string>& args, Direction direction) const {
  if (args.size() != 2) throw QueryError(direction == Direction::Out ? "usage: succ <id> <label>" : "usage: pred <id> <label>");
  const NodeId id = node_arg(args[0]);
  const Graph& g = analysis_->graph();
  std::string out;
  for (EdgeLabel label : parse_labels(args[1])) {
    for (const Edge* e : g.edges_of(id, label, direction)) {
      out += node_line(g, direction == Direction::Out ? e->to : e->from) + edge_detail(*e) + "\n";
    }
  }
  return out.empty() ? "none\n" : out;
}

std::string Session::path(const std::vector<std::string>& args) const {
  if (args.size() != 3) throw QueryError("usage: path <from> <to> <label[,label]>");
  const NodeId from = node_arg(args[0]);
  const NodeId to = node_arg(args[1]);
  auto witness = exists_path(analysis_->graph(), from, to, parse_labels(args[2]));
  if (!witness) return "no path\n";
  return path_text(*witness) + "\n";
}

std::string Session::check(const std::vector<std::string>& args) {
  if (args.size() != 1) throw QueryError("usage: check <name>");
  const Check* check = checks_.find(args[0]);
  if (!check) {
    std::string names;
    for (const auto& [name, _] : checks_.list()) names += (names.empty() ? "" : ", ") + name;
    throw QueryError("unknown check '" + args[0] + "' (available: " + names + ")");
  }
  Analysis& a = ready_analysis();
  if (!a.passes_done()) a.run_passes();
  const auto findings = (*check)(a);
  std::string out;
  for (const Finding& f : findings) out += format_finding(f) + "\n  witness: " + path_text(f.witness) + "\n";
  return out + std::to_string(findings.size()) + " finding(s)\n";
}

std::string Session::export_graph(const std::vector<std::string>& args) const {
  if (args.size() != 2) throw QueryError("usage: export <json|dot|cypher> <file>");
  if (!analysis_) throw QueryError("nothing loaded; use 'load <path>' first");
  const Graph& g = analysis_->graph();
  std::string text;
  if (args[0] == "json") {
    text = to_json(g);
  } else if (args[0] == "dot") {
    text = to_dot(g);
  } else if (args[0] == "cypher") {
    text = to_cypher(g);
  } else {
    throw QueryError("unknown export format '" + args[0] + "'");
  }
  write_file(args[1], text);
  return "wrote " + args[1] + "\n";
}

void run_repl(Session& session, std::istream& in, std::ostream& out, bool prompt) {
  std::string line;
  while (!session.finished()) {
    if (prompt) out << "cpg> " << std::flush;
    if (!std::getline(in, line)) break;
    out << session.execute(line);
  }
}

// --- command line ----------------------------------------------------------

namespace {

struct AnalyzeOptions {
  std::vector<std::string> paths;
  std::string dfg_mode = "flow";
  std::vector<std::string> checks;
  std::string export_format;
  std::string out_file;
  bool coverage = false;
  bool bench = false;
  std::optional<double> timeout_seconds;
};

int analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  bool errors = false;
  const DfgMode mode = o.dfg_mode == "decl" ? DfgMode::DeclarationLink : DfgMode::FlowSensitive;
  const Deadline deadline = o.timeout_seconds ? Deadline(*o.timeout_seconds) : Deadline();

  Analysis analysis(mode);
  for (const auto& p : o.paths) {
    if (!std::filesystem::exists(p)) {
      // Unknown extensions are still diagnosed as unsupported.
      try {
        dispatch(p);
        err << p << ": error: no such file or directory\n";
      } catch (const UnsupportedLanguageError& e) {
        err << p << ": error: " << e.what() << "\n";
      }
      errors = true;
      continue;
    }
    for (const auto& file : metrics::collect_files(p)) {
      try {
        deadline.check("translation");
      } catch (const TimeoutError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
      analysis.add_file(file);
    }
  }
  for (const auto& e : analysis.errors()) {
    err << e.file << ": error: " << e.message << "\n";
    errors = true;
  }
  for (const auto& unit : analysis.units()) {
    for (const auto& d : unit.result.diagnostics) err << d << "\n";
  }

  try {
    analysis.run_passes(deadline);
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<Finding> findings;
  CheckRegistry registry = CheckRegistry::builtin();
  for (const auto& name : o.checks) {
    const Check* check = registry.find(name);
    if (!check) {
      err << "error: unknown check '" << name << "'\n";
      errors = true;
      continue;
    }
    try {
      auto found = (*check)(analysis);
      findings.insert(findings.end(), found.begin(), found.end());
    } catch (const Error& e) {
      err << "error: " << name << ": " << e.what() << "\n";
      errors = true;
    }
  }
  for (const Finding& f : findings) out << format_finding(f) << "\n";

  try {
    if (!o.export_format.empty()) {
      const Graph& g = analysis.graph();
      const std::string text = o.export_format == "json" ? to_json(g) + "\n"
                               : o.export_format == "dot" ? to_dot(g)
                                                          : to_cypher(g);
      if (o.out_file.empty()) {
        out << text;
      } else {
        write_file(o.out_file, text);
      }
    }
    if (!o.out_file.empty() && !o.checks.empty()) {
      write_file(o.out_file + ".findings.json", to_json(findings).dump(2) + "\n");
    }
    if (o.coverage) {
      metrics::CoverageReport report;
      for (const auto& unit : analysis.units()) {
        report.files.push_back(metrics::coverage(unit.result.coverage, unit.sloc, unit.result.file));
      }
      out << metrics::format_coverage(report);
      if (!o.out_file.empty()) write_file(o.out_file + ".coverage.json", metrics::to_json(report).dump(2) + "\n");
    }
    if (o.bench) {
      metrics::BenchOptions options;
      options.dfg_mode = mode;
      if (o.timeout_seconds) options.timeout_seconds = *o.timeout_seconds;
      std::vector<std::filesystem::path> targets(o.paths.begin(), o.paths.end());
      const auto report = metrics::bench(targets, options);
      out << metrics::format_table(report);
      if (!o.out_file.empty()) write_file(o.out_file + ".bench.json", metrics::to_json(report).dump(2) + "\n");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    errors = true;
  }

  if (errors) return 2;
  return findings.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"code property graph builder and analyzer", "cpg"};
  app.require_subcommand(1);

  AnalyzeOptions options;
  auto* analyze_cmd = app.add_subcommand("analyze", "translate, run passes, check, export and report");
  analyze_cmd->add_option("paths", options.paths, "source files or directories")->required();
  analyze_cmd->add_option("--dfg-mode", options.dfg_mode, "data-flow mode")
      ->check(CLI::IsMember({"flow", "decl"}));
  analyze_cmd->add_option("--check", options.checks, "check to run (repeatable)");
  analyze_cmd->add_option("--export", options.export_format, "graph export format")
      ->check(CLI::IsMember({"json", "dot", "cypher"}));
  analyze_cmd->add_option("--out", options.out_file, "export file; reports go next to it");
  analyze_cmd->add_flag("--coverage", options.coverage, "print the coverage report");
  analyze_cmd->add_flag("--bench", options.bench, "benchmark the given targets");
  analyze_cmd->add_option("--timeout-seconds", options.timeout_seconds, "time limit per target")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> console_paths;
  auto* console_cmd = app.add_subcommand("console", "interactive graph console");
  console_cmd->add_option("paths", console_paths, "files or directories to load");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*analyze_cmd) return analyze(options, out, err);
    Session session;
    if (!console_paths.empty()) {
      std::string command = "load";
      for (const auto& p : console_paths) command += " " + p;
      out << session.execute(command);
    }
    const bool interactive = &in == &std::cin && isatty(STDIN_FILENO);
    run_repl(session, in, out, interactive);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cpg::console
