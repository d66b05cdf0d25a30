#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "cpg/passes.hpp"
#include "detail.hpp"

namespace cpg {
namespace {

using Bits = boost::dynamic_bitset<>;

class DfgBuilder {
 public:
  explicit DfgBuilder(PassContext& context) : context_(context), graph_(context.graph) {}

  void run() {
    value_edges();
    std::set<NodeId> in_functions;
    if (context_.dfg_mode == DfgMode::FlowSensitive) {
      for (NodeId fn : graph_.nodes_by_kind(kinds::FunctionDeclaration, true)) {
        if (graph_.neighbors(fn, EdgeLabel::Eog, Direction::Out).empty()) continue;
        reaching_definitions(fn, in_functions);
      }
    }
    for (NodeId ref : graph_.nodes_by_kind(kinds::DeclaredReferenceExpression, true)) {
      if (in_functions.contains(ref)) continue;
      if (context_.dfg_mode == DfgMode::FlowSensitive) {
        // Unreachable code inside a function gets no reaching definitions.
        auto fn = detail::enclosing_function(graph_, ref);
        if (fn && !graph_.neighbors(*fn, EdgeLabel::Eog, Direction::Out).empty()) continue;
      }
      auto decl = detail::refers_to(graph_, ref);
      if (!decl) continue;
      if (is_write_reference(graph_, ref)) {
        flow(ref, *decl);
      } else {
        flow(*decl, ref);
      }
    }
  }

 private:
  void flow(NodeId from, NodeId to) {
    if (!graph_.has_edge(from, to, EdgeLabel::Dfg)) graph_.add_edge(from, to, EdgeLabel::Dfg);
  }

  void flow_from(NodeId node, std::string_view role, NodeId to) {
    for (NodeId child : graph_.ast_children(node, role)) flow(child, to);
  }

  // Edges that follow the AST and call graph, independent of the mode.
  void value_edges() {
    const KindRegistry& k = graph_.kinds();
    for (const Node& node : graph_.nodes()) {
      const NodeId id = node.id;
      if (k.is_subkind(node.kind, kinds::BinaryOperator)) {
        if (detail::operator_of(graph_, id) == "=") {
          auto lhs = graph_.ast_child(id, "LHS");
          for (NodeId rhs : graph_.ast_children(id, "RHS")) {
            if (lhs) flow(rhs, *lhs);
            flow(rhs, id);
          }
        } else {
          flow_from(id, "LHS", id);
          flow_from(id, "RHS", id);
        }
      } else if (k.is_subkind(node.kind, kinds::UnaryOperator)) {
        flow_from(id, "INPUT", id);
      } else if (k.is_subkind(node.kind, kinds::ConditionalExpression)) {
        flow_from(id, "THEN", id);
        flow_from(id, "ELSE", id);
      } else if (k.is_subkind(node.kind, kinds::MemberExpression)) {
        flow_from(id, "BASE", id);
      } else if (k.is_subkind(node.kind, kinds::VariableDeclaration)) {
        flow_from(id, "INITIALIZER", id);
      } else if (k.is_subkind(node.kind, kinds::ReturnStatement)) {
        flow_from(id, "RETURN_VALUE", id);
        if (!graph_.ast_children(id, "RETURN_VALUE").empty()) {
          if (auto fn = detail::enclosing_function(graph_, id)) flow(id, *fn);
        }
      } else if (k.is_subkind(node.kind, kinds::CallExpression)) {
        flow_from(id, "BASE", id);
        const auto args = graph_.ast_children(id, "ARGUMENT");
        for (NodeId target : graph_.neighbors(id, EdgeLabel::Invokes, Direction::Out)) {
          flow(target, id);
          const auto params = graph_.ast_children(target, "PARAMETER");
          for (std::size_t i = 0; i < args.size() && i < params.size(); ++i) flow(args[i], params[i]);
        }
      }
    }
  }

  struct Definition {
    NodeId point;   // EOG node where the definition takes effect
    NodeId source;  // DFG source of the value
    NodeId variable;
  };

  // Nodes reachable from `fn` in reverse postorder.
  std::vector<NodeId> order_from(NodeId fn) const {
    std::vector<NodeId> post;
    std::set<NodeId> seen{fn};
    std::vector<std::pair<NodeId, std::size_t>> stack{{fn, 0}};
    std::unordered_map<NodeId, std::vector<NodeId>> succ;
    while (!stack.empty()) {
      auto& [n, i] = stack.back();
      auto [it, fresh] = succ.try_emplace(n);
      if (fresh) it->second = graph_.neighbors(n, EdgeLabel::Eog, Direction::Out);
      if (i < it->second.size()) {
        const NodeId s = it->second[i++];
        if (seen.insert(s).second) stack.emplace_back(s, 0);
      } else {
        post.push_back(n);
        stack.pop_back();
      }
    }
    std::reverse(post.begin(), post.end());
    return post;
  }

  bool is_local(NodeId decl, NodeId fn) const {
    return graph_.is_a(decl, kinds::VariableDeclaration) && detail::enclosing_function(graph_, decl) == fn;
  }

  void reaching_definitions(NodeId fn, std::set<NodeId>& handled) {
    const std::vector<NodeId> order = order_from(fn);
    std::unordered_map<NodeId, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], i);

    std::vector<Definition> defs;
    std::vector<std::pair<NodeId, NodeId>> reads;  // (reference, variable)
    std::set<NodeId> seeded;
    for (NodeId n : order) {
      if (graph_.is_a(n, kinds::VariableDeclaration)) {
        defs.push_back({n, n, n});
      } else if (graph_.is_a(n, kinds::BinaryOperator) && detail::operator_of(graph_, n) == "=") {
        auto lhs = graph_.ast_child(n, "LHS");
        if (lhs && graph_.is_a(*lhs, kinds::DeclaredReferenceExpression)) {
          if (auto var = detail::refers_to(graph_, *lhs)) {
            defs.push_back({n, *lhs, *var});
            handled.insert(*lhs);
            // Other functions observe writes to non-locals through the declaration.
            if (!is_local(*var, fn)) flow(*lhs, *var);
          }
        }
      } else if (graph_.is_a(n, kinds::DeclaredReferenceExpression) && !is_write_reference(graph_, n)) {
        if (auto var = detail::refers_to(graph_, n)) {
          reads.emplace_back(n, *var);
          handled.insert(n);
          if (!is_local(*var, fn)) seeded.insert(*var);
        }
      }
    }
    for (NodeId var : seeded) defs.push_back({fn, var, var});

    const std::size_t n_defs = defs.size();
    std::map<NodeId, Bits> kill;
    std::vector<std::vector<std::size_t>> gen(order.size());
    for (std::size_t d = 0; d < n_defs; ++d) {
      auto [it, fresh] = kill.try_emplace(defs[d].variable, Bits(n_defs));
      it->second.set(d);
      gen[position.at(defs[d].point)].push_back(d);
    }

    std::vector<Bits> out(order.size(), Bits(n_defs));
    FixpointStats stats{fn, order.size(), 0, true};
    std::set<std::size_t> current;
    for (std::size_t i = 0; i < order.size(); ++i) current.insert(i);
    while (!current.empty()) {
      ++stats.iterations;
      std::set<std::size_t> next;
      while (!current.empty()) {
        const std::size_t i = *current.begin();
        current.erase(current.begin());
        Bits value(n_defs);
        for (NodeId p : graph_.neighbors(order[i], EdgeLabel::Eog, Direction::In)) {
          if (auto it = position.find(p); it != position.end()) value |= out[it->second];
        }
        for (std::size_t d : gen[i]) {
          value -= kill.at(defs[d].variable);
          value.set(d);
        }
        if (value == out[i]) continue;
        if (!out[i].is_subset_of(value)) stats.monotone = false;
        out[i] = std::move(value);
        for (NodeId s : graph_.neighbors(order[i], EdgeLabel::Eog, Direction::Out)) {
          const std::size_t j = position.at(s);
          // Later nodes are still ahead in this round.
          (j > i ? current : next).insert(j);
        }
      }
      current = std::move(next);
    }
    context_.fixpoints.push_back(stats);

    for (auto [ref, var] : reads) {
      const Bits& reaching = out[position.at(ref)];
      for (std::size_t d = reaching.find_first(); d != Bits::npos; d = reaching.find_next(d)) {
        if (defs[d].variable == var) flow(defs[d].source, ref);
      }
    }
  }

  PassContext& context_;
  Graph& graph_;
};

}  // namespace

void dfg_pass(PassContext& context) {
  if (context.dfg_mode == DfgMode::FlowSensitive && !context.done("eog")) {
    throw ConfigurationError("flow-sensitive data flow needs the eog pass to run first");
  }
  DfgBuilder(context).run();
}

}  // namespace cpg
