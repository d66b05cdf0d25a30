#pragma once

#include <memory>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cpg/analysis.hpp"
#include "cpg/graph.hpp"

namespace cpg::testing {

// Translates `source` as a C file and runs the default passes.
std::unique_ptr<Analysis> analyze(std::string_view source, DfgMode mode = DfgMode::FlowSensitive,
                                  std::string file = "test.c");

// Only translation, no passes.
std::unique_ptr<Analysis> translate(std::string_view source, std::string file = "test.c");

// Nodes of `kind` (with subkinds) whose source text equals `code`.
std::vector<NodeId> by_code(const Graph& graph, KindId kind, std::string_view code);
NodeId one_by_code(const Graph& graph, KindId kind, std::string_view code);
NodeId one_by_name(const Graph& graph, KindId kind, std::string_view name);

// Node starting at line:col with `kind`.
std::optional<NodeId> at(const Graph& graph, KindId kind, int line, int col);

std::vector<NodeId> eog_succ(const Graph& graph, NodeId id);
std::optional<BranchValue> eog_branch(const Graph& graph, NodeId from, NodeId to);

// True iff every EOG path from `entry` to `b` visits `a` first.
bool dominates(const Graph& graph, NodeId entry, NodeId a, NodeId b);
bool eog_reachable(const Graph& graph, NodeId from, NodeId to);

// --- random loop-free programs --------------------------------------------

struct RandomProgram {
  std::string source;
  int branches = 0;
  // (definition key, read position "line:col") observed by the reference
  // interpreter over every combination of branch outcomes. Keys are
  // "decl:<name>" or "write:<line>:<col>".
  std::set<std::pair<std::string, std::string>> def_use;
};

RandomProgram random_program(std::uint32_t seed, int max_branches = 10);

// The same pairs read off the DFG of an analyzed program.
std::set<std::pair<std::string, std::string>> dfg_def_use(const Graph& graph);

// Random C-subset program text with loops, used for structural properties.
std::string random_structured_program(std::mt19937& rng);

// --- generic documents ----------------------------------------------------

// Renders the AST under `root` as a generic AST document.
nlohmann::json to_generic_document(const Graph& graph, NodeId root, std::string language = "C");

// Same kinds, names, roles, indices, operators, values and locations,
// compared structurally from the two roots.
bool same_ast(const Graph& a, NodeId root_a, const Graph& b, NodeId root_b, std::string* why = nullptr);

}  // namespace cpg::testing
