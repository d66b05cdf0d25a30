#pragma once

// Graph-enrichment passes and the dependency-ordered pipeline that runs them.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpg/graph.hpp"
#include "cpg/scopes.hpp"

namespace cpg {

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

enum class DfgMode : std::uint8_t { DeclarationLink, FlowSensitive };

std::string_view to_string(DfgMode mode);

struct FixpointStats {
  NodeId function{};
  std::size_t nodes = 0;
  std::size_t iterations = 0;
  // Every definition set only ever grew.
  bool monotone = true;
};

struct PassContext {
  Graph& graph;
  ScopeForest& scopes;
  DfgMode dfg_mode = DfgMode::FlowSensitive;
  std::vector<std::string> completed;
  std::vector<FixpointStats> fixpoints;
  // Index into `scopes` of the tree holding inferred declarations.
  std::optional<std::size_t> inferred_scope;

  bool done(std::string_view pass) const;
};

struct Pass {
  std::string name;
  std::vector<std::string> depends_on;
  std::function<void(PassContext&)> run;
};

/// Topological order over `depends_on`; among ready passes the earliest
/// registered runs first. Throws ConfigurationError for unknown dependencies
/// and for cycles (the message names the cycle).
std::vector<std::size_t> order_passes(std::span<const Pass> registered);

/// symbols, eog, calls, types, inference, dfg
std::vector<Pass> default_passes();

// Runs `passes` in dependency order. `between` is called before each pass.
void run_passes(PassContext& context, std::span<const Pass> passes,
                const std::function<void(const Pass&)>& between = {});

// REFERS_TO from each resolvable DeclaredReferenceExpression to its
// declaration; MemberExpressions to fields when the base type is known.
void symbol_pass(PassContext& context);

/// Evaluation order graph per function body. The FunctionDeclaration is the
/// entry; the exit is virtual (nodes without EOG successors).
void eog_pass(PassContext& context);

void call_pass(PassContext& context);
void type_pass(PassContext& context);
void inference_pass(PassContext& context);
void dfg_pass(PassContext& context);

// Type of an expression derived from literals, declarations and resolved
// calls; nullopt when unknown.
std::optional<std::string> derive_type(const Graph& graph, NodeId expression);

// True for a DeclaredReferenceExpression that is the LHS of an assignment.
bool is_write_reference(const Graph& graph, NodeId reference);

// Nodes of `function` without EOG successors.
std::vector<NodeId> eog_exits(const Graph& graph, NodeId function);

}  // namespace cpg
