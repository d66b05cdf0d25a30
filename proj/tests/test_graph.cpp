#include <doctest.h>

#include <random>

#include "cpg/graph.hpp"

using namespace cpg;

TEST_SUITE("graph") {
  TEST_CASE("builtin taxonomy") {
    const auto& k = KindRegistry::builtin();
    CHECK(k.is_subkind(kinds::MemberCallExpression, kinds::CallExpression));
    CHECK(k.is_subkind(kinds::MemberCallExpression, kinds::Expression));
    CHECK_FALSE(k.is_subkind(kinds::CallExpression, kinds::MemberCallExpression));
    CHECK(k.is_subkind(kinds::ConstructorDeclaration, kinds::FunctionDeclaration));
    CHECK(k.is_subkind(kinds::ParameterDeclaration, kinds::ValueDeclaration));
    CHECK_FALSE(k.parent(kinds::Expression).has_value());

    const auto chain = k.ancestry(kinds::MemberCallExpression);
    REQUIRE(chain.size() == 3);
    CHECK(k.name(chain[0]) == "Expression");
    CHECK(k.name(chain[1]) == "CallExpression");
    CHECK(k.name(chain[2]) == "MemberCallExpression");
  }

  TEST_CASE("registry extension") {
    KindRegistry k = KindRegistry::builtin();
    const KindId lambda = k.add("LambdaExpression", "Expression");
    CHECK(k.is_subkind(lambda, kinds::Expression));
    CHECK(k.find("LambdaExpression") == lambda);
    CHECK_THROWS_AS(k.add("LambdaExpression", "Expression"), TaxonomyError);
    CHECK_THROWS_AS(k.add("Orphan", "NoSuchKind"), TaxonomyError);
    CHECK_THROWS_AS(k.at("NoSuchKind"), TaxonomyError);
    CHECK_FALSE(KindRegistry::builtin().find("LambdaExpression"));
  }

  TEST_CASE("taxonomy properties over random registries") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
      KindRegistry k = KindRegistry::builtin();
      std::vector<KindId> all;
      for (std::uint16_t i = 0; i < k.size(); ++i) all.push_back(KindId{i});
      for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, all.size());
        const std::size_t p = pick(rng);
        const std::string name = "K" + std::to_string(round) + "_" + std::to_string(i);
        all.push_back(p == all.size() ? k.add(name) : k.add(name, all[p]));
      }
      for (KindId a : all) {
        CHECK(k.is_subkind(a, a));
        const auto chain = k.ancestry(a);
        REQUIRE_FALSE(chain.empty());
        CHECK(chain.back() == a);
        CHECK_FALSE(k.parent(chain.front()).has_value());
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          CHECK(k.parent(chain[i + 1]) == chain[i]);
          CHECK(k.is_subkind(a, chain[i]));
        }
        for (KindId b : all) {
          if (a != b && k.is_subkind(a, b)) CHECK_FALSE(k.is_subkind(b, a));
        }
      }
    }
  }

  TEST_CASE("node ids are dense") {
    Graph g;
    CHECK(raw(g.add_node(kinds::Literal)) == 1);
    CHECK(raw(g.add_node("BinaryOperator")) == 2);
    CHECK(g.node_count() == 2);
    CHECK_THROWS_AS(g.add_node("Nonsense"), TaxonomyError);
    CHECK_THROWS_AS(g.node(NodeId{3}), IntegrityError);
  }

  TEST_CASE("edge attribute rules") {
    Graph g;
    const NodeId a = g.add_node(kinds::BinaryOperator);
    const NodeId b = g.add_node(kinds::Literal);
    const NodeId c = g.add_node(kinds::Literal);
    CHECK_THROWS_AS(g.add_edge(a, b, EdgeLabel::Eog, {.role = "LHS"}), AttributeError);
    CHECK_THROWS_AS(g.add_edge(a, b, EdgeLabel::Dfg, {.index = 0}), AttributeError);
    CHECK_THROWS_AS(g.add_edge(a, b, EdgeLabel::Ast, {.branch = BranchValue::when(true)}), AttributeError);
    CHECK_THROWS_AS(g.add_edge(a, NodeId{9}, EdgeLabel::Dfg), IntegrityError);

    g.add_edge(a, b, EdgeLabel::Ast, {.role = "LHS"});
    CHECK_THROWS_AS(g.add_edge(a, c, EdgeLabel::Ast, {.role = "LHS"}), AttributeError);
    g.add_edge(a, c, EdgeLabel::Ast, {.role = "RHS"});
    CHECK(g.ast_child(a, "RHS") == c);
    CHECK(g.ast_parent(b) == a);
    CHECK(g.edge_count() == 2);
  }

  TEST_CASE("AST stays a forest") {
    Graph g;
    const NodeId a = g.add_node(kinds::CompoundStatement);
    const NodeId b = g.add_node(kinds::CompoundStatement);
    const NodeId c = g.add_node(kinds::CompoundStatement);
    g.add_edge(a, b, EdgeLabel::Ast, {.role = "STATEMENT", .index = 0});
    g.add_edge(b, c, EdgeLabel::Ast, {.role = "STATEMENT", .index = 0});
    CHECK_THROWS_AS(g.add_edge(a, c, EdgeLabel::Ast, {.role = "STATEMENT", .index = 1}), IntegrityError);
    CHECK_THROWS_AS(g.add_edge(c, a, EdgeLabel::Ast, {.role = "STATEMENT", .index = 0}), IntegrityError);
    CHECK_THROWS_AS(g.add_edge(a, a, EdgeLabel::Ast), IntegrityError);
    // Other labels may form cycles.
    g.add_edge(c, a, EdgeLabel::Eog);
  }

  TEST_CASE("AST children come back ordered by role and index") {
    Graph g;
    const NodeId call = g.add_node(kinds::CallExpression, "f");
    const NodeId x = g.add_node(kinds::Literal);
    const NodeId y = g.add_node(kinds::Literal);
    const NodeId z = g.add_node(kinds::Literal);
    g.add_edge(call, z, EdgeLabel::Ast, {.role = "ARGUMENT", .index = 2});
    g.add_edge(call, x, EdgeLabel::Ast, {.role = "ARGUMENT", .index = 0});
    g.add_edge(call, y, EdgeLabel::Ast, {.role = "ARGUMENT", .index = 1});
    CHECK(g.ast_children(call, "ARGUMENT") == std::vector<NodeId>{x, y, z});
    CHECK(g.ast_children(call) == std::vector<NodeId>{x, y, z});
  }

  TEST_CASE("kind and name indexes") {
    Graph g;
    const NodeId call = g.add_node(kinds::CallExpression, "f");
    const NodeId member = g.add_node(kinds::MemberCallExpression, "f");
    g.add_node(kinds::Literal);
    CHECK(g.nodes_by_kind(kinds::CallExpression, false) == std::vector<NodeId>{call});
    CHECK(g.nodes_by_kind(kinds::CallExpression, true) == std::vector<NodeId>{call, member});
    CHECK(g.nodes_by_name("f").size() == 2);
    g.set_name(member, "g");
    CHECK(g.nodes_by_name("f") == std::vector<NodeId>{call});
    CHECK(g.nodes_by_name("g") == std::vector<NodeId>{member});
  }

  TEST_CASE("branch values") {
    for (const auto& b : {BranchValue::when(true), BranchValue::when(false), BranchValue::on_case("3"),
                          BranchValue::fallback()}) {
      CHECK(BranchValue::parse(b.to_string()) == b);
    }
    CHECK(BranchValue::when(true).to_string() == "true");
    CHECK(BranchValue::when(false).to_string() == "false");
    CHECK_FALSE(BranchValue::parse("maybe"));
  }

  TEST_CASE("edge labels") {
    for (EdgeLabel l : kAllEdgeLabels) CHECK(parse_edge_label(to_string(l)) == l);
    CHECK(to_string(EdgeLabel::RefersTo) == "REFERS_TO");
    CHECK_FALSE(parse_edge_label("CFG"));
  }
}
