#include <doctest.h>

#include <algorithm>
#include <random>

#include "cpg/passes.hpp"
#include "support/support.hpp"

using namespace cpg;
using cpg::testing::eog_branch;
using cpg::testing::eog_succ;
using cpg::testing::one_by_code;
using cpg::testing::one_by_name;

namespace {

NodeId ref(const Graph& g, int line, int col) {
  auto id = cpg::testing::at(g, kinds::DeclaredReferenceExpression, line, col);
  REQUIRE_MESSAGE(id, "no reference at ", line, ":", col);
  return *id;
}

NodeId lit(const Graph& g, int line, int col) {
  auto id = cpg::testing::at(g, kinds::Literal, line, col);
  REQUIRE_MESSAGE(id, "no literal at ", line, ":", col);
  return *id;
}

using Ids = std::vector<NodeId>;

Ids sorted(Ids v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<NodeId> dfg_in(const Graph& g, NodeId n) { return sorted(g.neighbors(n, EdgeLabel::Dfg, Direction::In)); }
std::vector<NodeId> dfg_out(const Graph& g, NodeId n) { return sorted(g.neighbors(n, EdgeLabel::Dfg, Direction::Out)); }

std::optional<NodeId> function_of(const Graph& g, NodeId n) {
  for (std::optional<NodeId> cur = n; cur; cur = g.ast_parent(*cur)) {
    if (g.is_a(*cur, kinds::FunctionDeclaration)) return cur;
  }
  return std::nullopt;
}

bool is_branching(const Graph& g, NodeId n) {
  if (g.is_a(n, kinds::IfStatement) || g.is_a(n, kinds::WhileStatement) || g.is_a(n, kinds::ForStatement) ||
      g.is_a(n, kinds::ConditionalExpression)) {
    return true;
  }
  const auto op = g.node(n).string_property("operator");
  return g.is_a(n, kinds::BinaryOperator) && (op == "&&" || op == "||");
}

// Descendants that are evaluated on every path through `n`.
void unconditional_descendants(const Graph& g, NodeId n, Ids& out) {
  const bool ternary = g.is_a(n, kinds::ConditionalExpression);
  const auto op = g.node(n).string_property("operator");
  const bool short_circuit = g.is_a(n, kinds::BinaryOperator) && (op == "&&" || op == "||");
  for (const Edge* e : g.edges_of(n, EdgeLabel::Ast, Direction::Out)) {
    if (ternary && (e->role == "THEN" || e->role == "ELSE")) continue;
    if (short_circuit && e->role == "RHS") continue;
    out.push_back(e->to);
    unconditional_descendants(g, e->to, out);
  }
}

std::size_t inferred_count(const Graph& g) {
  std::size_t n = 0;
  for (const Node& node : g.nodes()) n += node.flags.inferred;
  return n;
}

Pass noop(std::string name, std::vector<std::string> deps = {}) {
  return {std::move(name), std::move(deps), [](PassContext&) {}};
}

}  // namespace

TEST_SUITE("passes") {
  TEST_CASE("pass ordering") {
    std::vector<Pass> forced{noop("dfg", {"eog"}), noop("eog")};
    CHECK(order_passes(forced) == std::vector<std::size_t>{1, 0});

    std::vector<Pass> free{noop("p"), noop("q")};
    CHECK(order_passes(free) == std::vector<std::size_t>{0, 1});

    std::vector<Pass> cycle{noop("a", {"b"}), noop("b", {"a"})};
    try {
      order_passes(cycle);
      FAIL("expected a cycle error");
    } catch (const ConfigurationError& e) {
      CHECK(std::string(e.what()).find("a -> b -> a") != std::string::npos);
    }

    std::vector<Pass> unknown{noop("a", {"zzz"})};
    CHECK_THROWS_AS(order_passes(unknown), ConfigurationError);
    std::vector<Pass> twice{noop("a"), noop("a")};
    CHECK_THROWS_AS(order_passes(twice), ConfigurationError);

    // Registration order breaks ties among ready passes.
    std::vector<Pass> diamond{noop("d", {"b", "c"}), noop("c", {"a"}), noop("b", {"a"}), noop("a")};
    CHECK(order_passes(diamond) == std::vector<std::size_t>{3, 1, 2, 0});
  }

  TEST_CASE("property: random dependency graphs order topologically") {
    std::mt19937 rng(41);
    for (int round = 0; round < 200; ++round) {
      const std::size_t n = 1 + rng() % 9;
      std::vector<std::size_t> rank(n);
      for (std::size_t i = 0; i < n; ++i) rank[i] = i;
      std::shuffle(rank.begin(), rank.end(), rng);
      std::vector<Pass> passes;
      for (std::size_t i = 0; i < n; ++i) passes.push_back(noop("p" + std::to_string(i)));
      // Dependencies only point to lower rank, so the graph is acyclic.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (rank[j] < rank[i] && rng() % 3 == 0) passes[i].depends_on.push_back(passes[j].name);
        }
      }
      const auto order = order_passes(passes);
      REQUIRE(order.size() == n);
      std::vector<std::size_t> pos(n);
      for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& dep : passes[i].depends_on) CHECK(pos[std::stoul(dep.substr(1))] < pos[i]);
      }
      // Adding a back edge from the lowest rank to the highest creates a cycle.
      if (n >= 2) {
        const auto lo = std::min_element(rank.begin(), rank.end()) - rank.begin();
        const auto hi = std::max_element(rank.begin(), rank.end()) - rank.begin();
        passes[hi].depends_on.push_back(passes[lo].name);
        passes[lo].depends_on.push_back(passes[hi].name);
        CHECK_THROWS_AS(order_passes(passes), ConfigurationError);
      }
    }
  }

  TEST_CASE("default pipeline runs in declared order") {
    auto a = cpg::testing::translate("int f() { return 0; }\n");
    PassContext ctx{a->graph(), a->scopes()};
    std::vector<std::string> seen;
    const auto passes = default_passes();
    run_passes(ctx, passes, [&](const Pass& p) { seen.push_back(p.name); });
    CHECK(seen == std::vector<std::string>{"symbols", "eog", "calls", "types", "inference", "dfg"});
    CHECK(ctx.completed == seen);
  }

  TEST_CASE("flow-sensitive data flow requires the eog") {
    auto a = cpg::testing::translate("int f() { return 0; }\n");
    PassContext ctx{a->graph(), a->scopes()};
    CHECK_THROWS_AS(dfg_pass(ctx), ConfigurationError);
    ctx.dfg_mode = DfgMode::DeclarationLink;
    CHECK_NOTHROW(dfg_pass(ctx));
  }

  TEST_CASE("symbols") {
    auto a = cpg::testing::translate(
        "int x;\n"
        "struct S { int f; };\n"
        "int g(struct S *p) {\n"
        "  x = 1;\n"
        "  { int x; x = 2; }\n"
        "  y = p->f;\n"
        "  return x;\n"
        "}\n");
    Graph& g = a->graph();
    PassContext ctx{g, a->scopes()};
    symbol_pass(ctx);
    const NodeId global = g.nodes_by_kind(kinds::VariableDeclaration, true).at(0);
    CHECK(g.neighbors(ref(g, 4, 3), EdgeLabel::RefersTo, Direction::Out) == Ids{global});
    const NodeId inner = *cpg::testing::at(g, kinds::VariableDeclaration, 5, 5);
    CHECK(g.neighbors(ref(g, 5, 12), EdgeLabel::RefersTo, Direction::Out) == Ids{inner});
    CHECK(g.neighbors(ref(g, 7, 10), EdgeLabel::RefersTo, Direction::Out) == Ids{global});
    CHECK(g.neighbors(ref(g, 6, 3), EdgeLabel::RefersTo, Direction::Out).empty());
    const NodeId member = one_by_code(g, kinds::MemberExpression, "p->f");
    CHECK(g.neighbors(member, EdgeLabel::RefersTo, Direction::Out) == Ids{one_by_name(g, kinds::FieldDeclaration, "f")});
    CHECK(is_write_reference(g, ref(g, 4, 3)));
    CHECK_FALSE(is_write_reference(g, ref(g, 7, 10)));
  }

  TEST_CASE("eog: operands before the operator") {
    auto a = cpg::testing::analyze("int a;\nint f() {\n  return a + 5;\n}\n");
    const Graph& g = a->graph();
    const NodeId fn = one_by_name(g, kinds::FunctionDeclaration, "f");
    const NodeId plus = one_by_code(g, kinds::BinaryOperator, "a + 5");
    const NodeId ret = one_by_code(g, kinds::ReturnStatement, "return a + 5;");
    CHECK(eog_succ(g, fn) == Ids{ref(g, 3, 10)});
    CHECK(eog_succ(g, ref(g, 3, 10)) == Ids{lit(g, 3, 14)});
    CHECK(eog_succ(g, lit(g, 3, 14)) == Ids{plus});
    CHECK(eog_succ(g, plus) == Ids{ret});
    CHECK(eog_succ(g, ret).empty());
    CHECK(eog_exits(g, fn) == Ids{ret});
  }

  TEST_CASE("eog: conditional expression") {
    auto a = cpg::testing::analyze("int f(int a) {\n  return a > 1 ? a : 0;\n}\n");
    const Graph& g = a->graph();
    const NodeId cmp = one_by_code(g, kinds::BinaryOperator, "a > 1");
    const NodeId cond = one_by_code(g, kinds::ConditionalExpression, "a > 1 ? a : 0");
    const NodeId ret = g.nodes_by_kind(kinds::ReturnStatement, true).at(0);
    CHECK(eog_succ(g, ref(g, 2, 10)) == Ids{lit(g, 2, 14)});
    CHECK(eog_succ(g, lit(g, 2, 14)) == Ids{cmp});
    CHECK(eog_succ(g, cmp) == Ids{cond});
    CHECK(sorted(eog_succ(g, cond)) == sorted({ref(g, 2, 18), lit(g, 2, 22)}));
    CHECK(eog_branch(g, cond, ref(g, 2, 18)) == BranchValue::when(true));
    CHECK(eog_branch(g, cond, lit(g, 2, 22)) == BranchValue::when(false));
    CHECK(eog_succ(g, ref(g, 2, 18)) == Ids{ret});
    CHECK(eog_succ(g, lit(g, 2, 22)) == Ids{ret});
  }

  TEST_CASE("eog: while loop") {
    auto a = cpg::testing::analyze("int f(int c, int b) {\n  while (c) { b; }\n  return 0;\n}\n");
    const Graph& g = a->graph();
    const NodeId loop = g.nodes_by_kind(kinds::WhileStatement, true).at(0);
    CHECK(eog_succ(g, ref(g, 2, 10)) == Ids{loop});
    CHECK(sorted(eog_succ(g, loop)) == sorted({ref(g, 2, 15), lit(g, 3, 10)}));
    CHECK(eog_branch(g, loop, ref(g, 2, 15)) == BranchValue::when(true));
    CHECK(eog_branch(g, loop, lit(g, 3, 10)) == BranchValue::when(false));
    CHECK(eog_succ(g, ref(g, 2, 15)) == Ids{ref(g, 2, 10)});
  }

  TEST_CASE("eog: for loop order") {
    auto a = cpg::testing::analyze(
        "int f(int n) {\n"
        "  int s = 0;\n"
        "  int i;\n"
        "  for (i = 0; i < n; i = i + 1) { s = s + i; }\n"
        "  return s;\n"
        "}\n");
    const Graph& g = a->graph();
    const NodeId loop = g.nodes_by_kind(kinds::ForStatement, true).at(0);
    const NodeId init = one_by_code(g, kinds::BinaryOperator, "i = 0");
    const NodeId cond = one_by_code(g, kinds::BinaryOperator, "i < n");
    const NodeId body = one_by_code(g, kinds::BinaryOperator, "s = s + i");
    const NodeId iter = one_by_code(g, kinds::BinaryOperator, "i = i + 1");
    CHECK(eog_succ(g, init) == Ids{ref(g, 4, 15)});
    CHECK(eog_succ(g, cond) == Ids{loop});
    CHECK(eog_branch(g, loop, ref(g, 4, 35)) == BranchValue::when(true));
    CHECK(eog_branch(g, loop, ref(g, 5, 10)) == BranchValue::when(false));
    CHECK(eog_succ(g, loop).size() == 2);
    CHECK(eog_succ(g, body) == Ids{ref(g, 4, 22)});
    CHECK(eog_succ(g, iter) == Ids{ref(g, 4, 15)});
    const NodeId fn = one_by_name(g, kinds::FunctionDeclaration, "f");
    CHECK(cpg::testing::dominates(g, fn, init, cond));
    CHECK(cpg::testing::dominates(g, fn, body, iter));
  }

  TEST_CASE("eog: break, continue, return and unreachable code") {
    auto a = cpg::testing::analyze(
        "int f(int c) {\n"
        "  while (c) {\n"
        "    if (c) break;\n"
        "    if (c) continue;\n"
        "    c = 0;\n"
        "  }\n"
        "  return 1;\n"
        "  f(c);\n"
        "}\n");
    const Graph& g = a->graph();
    const NodeId brk = g.nodes_by_kind(kinds::BreakStatement, true).at(0);
    const NodeId cont = g.nodes_by_kind(kinds::ContinueStatement, true).at(0);
    CHECK(eog_succ(g, brk) == Ids{lit(g, 7, 10)});
    CHECK(eog_succ(g, cont) == Ids{ref(g, 2, 10)});
    const NodeId call = g.nodes_by_kind(kinds::CallExpression, true).at(0);
    const NodeId fn = one_by_name(g, kinds::FunctionDeclaration, "f");
    CHECK_FALSE(cpg::testing::eog_reachable(g, fn, call));
    CHECK(g.neighbors(ref(g, 8, 5), EdgeLabel::Eog, Direction::In).empty());
  }

  TEST_CASE("eog: short-circuit operators branch") {
    auto a = cpg::testing::analyze("int f(int a, int b) {\n  return a && b;\n}\n");
    const Graph& g = a->graph();
    const NodeId op = one_by_code(g, kinds::BinaryOperator, "a && b");
    const NodeId ret = g.nodes_by_kind(kinds::ReturnStatement, true).at(0);
    CHECK(eog_succ(g, ref(g, 2, 10)) == Ids{op});
    CHECK(eog_branch(g, op, ref(g, 2, 15)) == BranchValue::when(true));
    CHECK(eog_branch(g, op, ret) == BranchValue::when(false));
    CHECK(eog_succ(g, ref(g, 2, 15)) == Ids{ret});
  }

  TEST_CASE("eog: problem nodes are opaque") {
    auto a = cpg::testing::analyze("int f(int x) {\n  x = ;\n  return x;\n}\n");
    const Graph& g = a->graph();
    const NodeId problem = g.nodes_by_kind(kinds::ProblemNode, true).at(0);
    CHECK(g.neighbors(problem, EdgeLabel::Eog, Direction::In).size() == 1);
    CHECK(eog_succ(g, problem) == Ids{ref(g, 3, 10)});
    CHECK(dfg_in(g, problem).empty());
    CHECK(dfg_out(g, problem).empty());
  }

  TEST_CASE("property: eog invariants on random programs") {
    std::mt19937 rng(43);
    for (int round = 0; round < 40; ++round) {
      const std::string src = cpg::testing::random_structured_program(rng);
      auto a = cpg::testing::analyze(src);
      const Graph& g = a->graph();
      for (const Edge& e : g.edges()) {
        if (e.label != EdgeLabel::Eog) continue;
        CHECK(function_of(g, e.from) == function_of(g, e.to));
      }
      for (const Node& n : g.nodes()) {
        const auto out = g.edges_of(n.id, EdgeLabel::Eog, Direction::Out);
        if (out.size() > 1) {
          std::vector<std::string> branches;
          for (const Edge* e : out) {
            REQUIRE(e->branch);
            branches.push_back(e->branch->to_string());
          }
          std::sort(branches.begin(), branches.end());
          CHECK(std::adjacent_find(branches.begin(), branches.end()) == branches.end());
          CHECK(is_branching(g, n.id));
        }
      }
      for (NodeId fn : g.nodes_by_kind(kinds::FunctionDeclaration, true)) {
        if (g.node(fn).flags.inferred) continue;
        for (NodeId expr : g.nodes_by_kind(kinds::Expression, true)) {
          if (is_branching(g, expr) || function_of(g, expr) != fn) continue;
          if (!cpg::testing::eog_reachable(g, fn, expr)) continue;
          Ids below;
          unconditional_descendants(g, expr, below);
          for (NodeId d : below) {
            CAPTURE(g.node(expr).code);
            CHECK(cpg::testing::dominates(g, fn, d, expr));
          }
        }
      }
    }
  }

  TEST_CASE("dfg: value and flow edges") {
    auto a = cpg::testing::analyze(
        "int use(int v) { return v; }\n"
        "int f(int c) {\n"
        "  int x;\n"
        "  int y;\n"
        "  x = 1;\n"
        "  y = x;\n"
        "  if (c) x = 1; else x = 2;\n"
        "  use(x);\n"
        "  return y;\n"
        "}\n");
    const Graph& g = a->graph();
    CHECK(dfg_out(g, lit(g, 5, 7)) == sorted({ref(g, 5, 3), *cpg::testing::at(g, kinds::BinaryOperator, 5, 3)}));
    CHECK(dfg_in(g, ref(g, 6, 7)) == Ids{ref(g, 5, 3)});
    CHECK(dfg_in(g, ref(g, 8, 7)) == sorted({ref(g, 7, 10), ref(g, 7, 22)}));
    const NodeId param = one_by_name(g, kinds::ParameterDeclaration, "v");
    const Ids into_param = dfg_in(g, param);
    CHECK(std::count(into_param.begin(), into_param.end(), ref(g, 8, 7)) == 1);
    const NodeId use = one_by_name(g, kinds::FunctionDeclaration, "use");
    const NodeId call = g.nodes_by_kind(kinds::CallExpression, true).at(0);
    CHECK(dfg_in(g, call) == Ids{use});
  }

  TEST_CASE("dfg: loops merge definitions") {
    auto a = cpg::testing::analyze(
        "int f() {\n"
        "  int x = 0;\n"
        "  while (x) { x = x + 1; }\n"
        "  return x;\n"
        "}\n");
    const Graph& g = a->graph();
    const NodeId decl = one_by_name(g, kinds::VariableDeclaration, "x");
    CHECK(dfg_in(g, ref(g, 4, 10)) == sorted({decl, ref(g, 3, 15)}));
    CHECK(dfg_in(g, ref(g, 3, 10)) == sorted({decl, ref(g, 3, 15)}));
    CHECK(dfg_in(g, ref(g, 3, 19)) == sorted({decl, ref(g, 3, 15)}));
  }

  TEST_CASE("dfg: declaration-link mode") {
    auto a = cpg::testing::analyze("int f() {\n  int x;\n  x = 1;\n  return x;\n}\n", DfgMode::DeclarationLink);
    const Graph& g = a->graph();
    const NodeId decl = one_by_name(g, kinds::VariableDeclaration, "x");
    CHECK(dfg_out(g, ref(g, 3, 3)) == Ids{decl});
    CHECK(dfg_in(g, ref(g, 4, 10)) == Ids{decl});
    CHECK(a->fixpoints().empty());
  }

  TEST_CASE("property: flow-sensitive pairs match the reference interpreter") {
    int checked = 0;
    for (std::uint32_t seed = 0; seed < 300; ++seed) {
      const auto program = cpg::testing::random_program(seed, 10);
      REQUIRE(program.branches <= 10);
      auto a = cpg::testing::analyze(program.source);
      const auto actual = cpg::testing::dfg_def_use(a->graph());
      CAPTURE(program.source);
      CHECK(actual == program.def_use);
      ++checked;
    }
    CHECK(checked == 300);
  }

  TEST_CASE("property: reaching definitions are monotone and bounded") {
    std::mt19937 rng(47);
    for (int round = 0; round < 60; ++round) {
      auto a = cpg::testing::analyze(cpg::testing::random_structured_program(rng));
      REQUIRE_FALSE(a->fixpoints().empty());
      for (const FixpointStats& s : a->fixpoints()) {
        CHECK(s.monotone);
        CHECK(s.iterations >= 1);
        CHECK(s.iterations <= s.nodes);
      }
    }
  }

  TEST_CASE("calls: arity, types, ambiguity and prototypes") {
    auto a = cpg::testing::analyze(
        "int one(int v) { return v; }\n"
        "int two(int v) { return v; }\n"
        "int two(int v, int w) { return v; }\n"
        "int ov(int v) { return v; }\n"
        "int ov(char v) { return v; }\n"
        "int amb(int *v) { return 0; }\n"
        "int amb(char *v) { return 0; }\n"
        "int pro(int v);\n"
        "int pro(int v) { return v; }\n"
        "int main() {\n"
        "  char c;\n"
        "  one(1);\n"
        "  two(1, 2);\n"
        "  ov(1);\n"
        "  ov(c);\n"
        "  amb(NULL);\n"
        "  pro(3);\n"
        "  return 0;\n"
        "}\n");
    const Graph& g = a->graph();
    auto targets = [&](int line) {
      const NodeId call = *cpg::testing::at(g, kinds::CallExpression, line, 3);
      Ids out;
      for (NodeId t : g.neighbors(call, EdgeLabel::Invokes, Direction::Out)) {
        out.push_back(NodeId{static_cast<std::uint32_t>(g.node(t).location->start_line)});
      }
      return sorted(out);
    };
    auto lines = [](std::initializer_list<std::uint32_t> ls) {
      Ids out;
      for (auto l : ls) out.push_back(NodeId{l});
      return out;
    };
    CHECK(targets(12) == lines({1}));
    CHECK(targets(13) == lines({3}));
    CHECK(targets(14) == lines({4}));
    CHECK(targets(15) == lines({5}));
    CHECK(targets(16) == lines({6, 7}));
    CHECK(targets(17) == lines({9}));
    CHECK(inferred_count(g) == 0);
  }

  TEST_CASE("types") {
    auto a = cpg::testing::analyze(
        "struct S { int f; };\n"
        "int f(int x, struct S *s) {\n"
        "  int *p;\n"
        "  return x + 1;\n"
        "}\n");
    const Graph& g = a->graph();
    auto type_node = [&](std::string_view name) { return one_by_name(g, kinds::TypeNode, name); };
    CHECK(g.node(one_by_name(g, kinds::ParameterDeclaration, "x")).string_property("type") == "int");
    const NodeId ip = type_node("int*");
    CHECK(g.node(ip).string_property("elementType") == "int");
    CHECK(g.node(ip).int_property("pointerDepth") == 1);
    CHECK(g.neighbors(ip, EdgeLabel::Supertype, Direction::Out) == Ids{type_node("void*")});
    CHECK(g.neighbors(type_node("struct S"), EdgeLabel::RefersTo, Direction::Out) ==
          Ids{g.nodes_by_kind(kinds::RecordDeclaration, true).at(0)});
    CHECK(g.node(type_node("struct S*")).string_property("elementType") == "struct S");
    const NodeId sum = one_by_code(g, kinds::BinaryOperator, "x + 1");
    CHECK(g.node(sum).string_property("type") == "int");
    CHECK(derive_type(g, sum) == "int");
    CHECK(derive_type(g, lit(g, 4, 14)) == "int");
  }

  TEST_CASE("inference") {
    auto a = cpg::testing::translate(
        "int g(char *m) {\n"
        "  log(m);\n"
        "  log(m);\n"
        "  return missing + 1;\n"
        "}\n");
    Graph& g = a->graph();
    PassContext ctx{g, a->scopes()};
    run_passes(ctx, default_passes());
    const NodeId log = one_by_name(g, kinds::FunctionDeclaration, "log");
    CHECK(g.node(log).flags.inferred);
    CHECK_FALSE(g.node(log).location);
    const auto params = g.ast_children(log, "PARAMETER");
    REQUIRE(params.size() == 1);
    CHECK(g.node(params[0]).string_property("type") == "char*");
    for (NodeId call : g.nodes_by_kind(kinds::CallExpression, true)) {
      CHECK(g.neighbors(call, EdgeLabel::Invokes, Direction::Out) == Ids{log});
    }
    const NodeId missing = one_by_name(g, kinds::VariableDeclaration, "missing");
    CHECK(g.node(missing).flags.inferred);
    CHECK(g.neighbors(ref(g, 4, 10), EdgeLabel::RefersTo, Direction::Out) == Ids{missing});
    const NodeId unit = *g.ast_parent(log);
    CHECK(g.node(unit).flags.inferred);

    const std::size_t nodes = g.node_count();
    const std::size_t edges = g.edge_count();
    inference_pass(ctx);
    CHECK(g.node_count() == nodes);
    CHECK(g.edge_count() == edges);
  }

  TEST_CASE("property: every reference resolves after all passes") {
    std::mt19937 rng(53);
    for (int round = 0; round < 40; ++round) {
      const std::string src = cpg::testing::random_structured_program(rng);
      auto a = cpg::testing::translate(src);
      Graph& g = a->graph();
      PassContext ctx{g, a->scopes()};
      run_passes(ctx, default_passes());
      for (NodeId r : g.nodes_by_kind(kinds::DeclaredReferenceExpression, true)) {
        CHECK(g.neighbors(r, EdgeLabel::RefersTo, Direction::Out).size() == 1);
      }
      for (NodeId c : g.nodes_by_kind(kinds::CallExpression, true)) {
        CHECK_FALSE(g.neighbors(c, EdgeLabel::Invokes, Direction::Out).empty());
      }
      const std::size_t nodes = g.node_count();
      inference_pass(ctx);
      CHECK(g.node_count() == nodes);
    }
  }
}
