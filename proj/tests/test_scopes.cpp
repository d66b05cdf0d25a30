#include <doctest.h>

#include "cpg/scopes.hpp"
#include "support/support.hpp"

using namespace cpg;
using cpg::testing::one_by_code;
using cpg::testing::one_by_name;

TEST_SUITE("scopes") {
  TEST_CASE("manager stack discipline") {
    ScopeManager m(NodeId{1});
    CHECK(m.depth() == 1);
    CHECK_THROWS_AS(m.leave_scope(), ScopeError);
    CHECK_THROWS_AS(m.enter_scope(ScopeKind::Global, NodeId{2}), ScopeError);

    const ScopeId fn = m.enter_scope(ScopeKind::Function, NodeId{2}, "f");
    const ScopeId loop = m.enter_scope(ScopeKind::Loop, NodeId{3});
    CHECK(m.current() == loop);
    CHECK(m.tree().scope(loop).parent == fn);
    CHECK(m.tree().scope(loop).break_target == NodeId{3});
    CHECK_THROWS_AS(std::move(m).finish(), ScopeError);
  }

  TEST_CASE("shadowing resolves to the innermost declaration") {
    ScopeManager m(NodeId{1});
    m.declare("x", NodeId{10});
    m.enter_scope(ScopeKind::Function, NodeId{2});
    m.declare("x", NodeId{11});
    const ScopeId block = m.enter_scope(ScopeKind::Block, NodeId{3});
    m.record(NodeId{20});
    m.leave_scope();
    m.record(NodeId{21});
    m.leave_scope();
    m.record(NodeId{22});
    const ScopeTree tree = std::move(m).finish();

    CHECK(tree.scope_of(NodeId{20}) == block);
    CHECK(tree.resolve("x", *tree.scope_of(NodeId{20})) == NodeId{11});
    CHECK(tree.resolve("x", *tree.scope_of(NodeId{22})) == NodeId{10});
    CHECK_FALSE(tree.resolve("y", block));
  }

  TEST_CASE("redeclaration is reported and the newer binding wins") {
    ScopeManager m(NodeId{1});
    m.declare("x", NodeId{10});
    m.declare("x", NodeId{11});
    REQUIRE(m.diagnostics().size() == 1);
    CHECK(m.diagnostics()[0].previous == NodeId{10});
    CHECK(std::move(m).finish().resolve("x", ScopeId{0}) == NodeId{11});
  }

  TEST_CASE("qualified names look inside records only") {
    ScopeManager m(NodeId{1});
    m.declare("f", NodeId{9});
    m.enter_scope(ScopeKind::Record, NodeId{2}, "S");
    m.declare("f", NodeId{10});
    m.enter_scope(ScopeKind::Record, NodeId{3}, "Inner");
    m.declare("g", NodeId{11});
    m.leave_scope();
    m.leave_scope();
    const ScopeTree tree = std::move(m).finish();
    CHECK(tree.resolve("S.f", tree.root()) == NodeId{10});
    CHECK(tree.resolve("S.Inner.g", tree.root()) == NodeId{11});
    CHECK_FALSE(tree.resolve("S.g", tree.root()));
    CHECK_FALSE(tree.resolve("T.f", tree.root()));
    CHECK(tree.resolve("f", tree.root()) == NodeId{9});
  }

  TEST_CASE("jumps never leave the function") {
    ScopeManager m(NodeId{1});
    m.enter_scope(ScopeKind::Loop, NodeId{2});
    const ScopeId fn = m.enter_scope(ScopeKind::Function, NodeId{3});
    m.leave_scope();
    m.leave_scope();
    const ScopeTree tree = std::move(m).finish();
    CHECK_FALSE(tree.jump_target(JumpKind::Break, fn));
  }

  TEST_CASE("frontend scopes: block shadowing and loops") {
    auto a = cpg::testing::translate(
        "int x;\n"
        "int f(int x) {\n"
        "  { int x = 1; x = 2; }\n"
        "  while (x) { break; }\n"
        "  return x;\n"
        "}\n");
    ScopeForest& forest = a->scopes();
    const Graph& g = a->graph();
    const NodeId inner_write = one_by_code(g, kinds::BinaryOperator, "x = 2");
    const NodeId inner_decl = one_by_code(g, kinds::VariableDeclaration, "int x = 1");
    CHECK(forest.resolve("x", inner_write) == inner_decl);
    const NodeId ret = one_by_code(g, kinds::ReturnStatement, "return x;");
    CHECK(forest.resolve("x", ret) == one_by_name(g, kinds::ParameterDeclaration, "x"));
    const NodeId brk = g.nodes_by_kind(kinds::BreakStatement, true).at(0);
    CHECK(forest.jump_target(JumpKind::Break, brk) == g.nodes_by_kind(kinds::WhileStatement, true).at(0));
    CHECK(forest.resolve("f", ret) == one_by_name(g, kinds::FunctionDeclaration, "f"));
  }

  TEST_CASE("forest falls back to other units") {
    Analysis a;
    a.add_source("int helper(int v) { return v; }\nint shared;\n", "a.c", FrontendKind::C);
    a.add_source("int main() { return helper(shared); }\n", "b.c", FrontendKind::C);
    const Graph& g = a.graph();
    const NodeId call = g.nodes_by_kind(kinds::CallExpression, true).at(0);
    CHECK(a.scopes().resolve("helper", call) == one_by_name(g, kinds::FunctionDeclaration, "helper"));
    CHECK(a.scopes().resolve("shared", call) == one_by_name(g, kinds::VariableDeclaration, "shared"));
    CHECK_FALSE(a.scopes().resolve("missing", call));
  }
}
