#include "support.hpp"

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

#include "cpg/c_frontend.hpp"
#include "cpg/passes.hpp"

namespace cpg::testing {

std::unique_ptr<Analysis> translate(std::string_view source, std::string file) {
  auto analysis = std::make_unique<Analysis>();
  analysis->add_source(source, std::move(file), FrontendKind::C);
  return analysis;
}

std::unique_ptr<Analysis> analyze(std::string_view source, DfgMode mode, std::string file) {
  auto analysis = std::make_unique<Analysis>(mode);
  analysis->add_source(source, std::move(file), FrontendKind::C);
  analysis->run_passes();
  return analysis;
}

std::vector<NodeId> by_code(const Graph& graph, KindId kind, std::string_view code) {
  std::vector<NodeId> out;
  for (NodeId id : graph.nodes_by_kind(kind, true)) {
    if (graph.node(id).code == code) out.push_back(id);
  }
  return out;
}

NodeId one_by_code(const Graph& graph, KindId kind, std::string_view code) {
  auto found = by_code(graph, kind, code);
  if (found.size() != 1) {
    throw std::runtime_error("expected one " + graph.kinds().name(kind) + " with code '" + std::string(code) +
                             "', found " + std::to_string(found.size()));
  }
  return found.front();
}

NodeId one_by_name(const Graph& graph, KindId kind, std::string_view name) {
  std::vector<NodeId> found;
  for (NodeId id : graph.nodes_by_name(name)) {
    if (graph.is_a(id, kind)) found.push_back(id);
  }
  if (found.size() != 1) {
    throw std::runtime_error("expected one " + graph.kinds().name(kind) + " named '" + std::string(name) +
                             "', found " + std::to_string(found.size()));
  }
  return found.front();
}

std::optional<NodeId> at(const Graph& graph, KindId kind, int line, int col) {
  for (NodeId id : graph.nodes_by_kind(kind, true)) {
    const auto& loc = graph.node(id).location;
    if (loc && loc->start_line == line && loc->start_col == col) return id;
  }
  return std::nullopt;
}

std::vector<NodeId> eog_succ(const Graph& graph, NodeId id) {
  return graph.neighbors(id, EdgeLabel::Eog, Direction::Out);
}

std::optional<BranchValue> eog_branch(const Graph& graph, NodeId from, NodeId to) {
  for (const Edge* e : graph.edges_of(from, EdgeLabel::Eog, Direction::Out)) {
    if (e->to == to) return e->branch;
  }
  return std::nullopt;
}

namespace {

bool reachable_avoiding(const Graph& graph, NodeId from, NodeId to, std::optional<NodeId> avoid) {
  if (avoid && from == *avoid) return false;
  std::set<NodeId> seen{from};
  std::deque<NodeId> queue{from};
  while (!queue.empty()) {
    const NodeId n = queue.front();
    queue.pop_front();
    if (n == to) return true;
    for (NodeId s : eog_succ(graph, n)) {
      if (avoid && s == *avoid) continue;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return false;
}

}  // namespace

bool eog_reachable(const Graph& graph, NodeId from, NodeId to) {
  return reachable_avoiding(graph, from, to, std::nullopt);
}

bool dominates(const Graph& graph, NodeId entry, NodeId a, NodeId b) {
  if (a == b) return true;
  return eog_reachable(graph, entry, b) && !reachable_avoiding(graph, entry, b, a);
}

// --- random loop-free programs --------------------------------------------

namespace {

struct Expr {
  enum Kind { Lit, Ref, Bin, Tern, And, Or } kind = Lit;
  int value = 0;
  std::string name;
  std::string op;
  std::unique_ptr<Expr> a, b, c;
  int line = 0, col = 0;
  int branch = -1;
};

struct Stmt {
  enum Kind { Assign, Decl, If, Return } kind = Assign;
  std::string name;
  std::unique_ptr<Expr> expr;  // value, initializer or condition
  std::vector<Stmt> then_block, else_block;
  bool has_else = false;
  int line = 0, col = 0;
  int branch = -1;
};

class Generator {
 public:
  Generator(std::uint32_t seed, int max_branches) : rng_(seed), budget_(max_branches) {}

  RandomProgram run() {
    const int globals = pick(0, 2);
    const int params = pick(1, 3);
    std::vector<std::string> visible;
    for (int i = 0; i < globals; ++i) {
      globals_.push_back("g" + std::to_string(i));
      visible.push_back(globals_.back());
    }
    for (int i = 0; i < params; ++i) {
      params_.push_back("p" + std::to_string(i));
      visible.push_back(params_.back());
    }
    body_ = block(visible, 0, pick(3, 9));
    Stmt ret;
    ret.kind = Stmt::Return;
    ret.expr = expr(visible, 2);
    body_.push_back(std::move(ret));

    RandomProgram out;
    out.source = print();
    out.branches = used_branches_;
    const std::uint32_t outcomes = 1u << used_branches_;
    for (std::uint32_t mask = 0; mask < outcomes; ++mask) interpret(mask, out.def_use);
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return pick(1, 100) <= percent; }

  int take_branch() {
    if (used_branches_ >= budget_) return -1;
    return used_branches_++;
  }

  std::unique_ptr<Expr> expr(const std::vector<std::string>& visible, int depth) {
    auto e = std::make_unique<Expr>();
    const int roll = pick(0, 9);
    if (depth == 0 || roll < 4) {
      if (!visible.empty() && chance(70)) {
        e->kind = Expr::Ref;
        e->name = visible[static_cast<std::size_t>(pick(0, static_cast<int>(visible.size()) - 1))];
      } else {
        e->kind = Expr::Lit;
        e->value = pick(0, 9);
      }
      return e;
    }
    if (roll == 9 || roll == 8) {
      const int branch = take_branch();
      if (branch >= 0) {
        e->branch = branch;
        if (roll == 9) {
          e->kind = Expr::Tern;
          e->c = expr(visible, depth - 1);
          e->a = expr(visible, depth - 1);
          e->b = expr(visible, depth - 1);
        } else {
          e->kind = chance(50) ? Expr::And : Expr::Or;
          e->a = expr(visible, depth - 1);
          e->b = expr(visible, depth - 1);
        }
        return e;
      }
    }
    static const char* ops[] = {"+", "-", "*", "<", "=="};
    e->kind = Expr::Bin;
    e->op = ops[pick(0, 4)];
    e->a = expr(visible, depth - 1);
    e->b = expr(visible, depth - 1);
    return e;
  }

  std::vector<Stmt> block(std::vector<std::string> visible, int depth, int count) {
    std::vector<Stmt> out;
    for (int i = 0; i < count; ++i) {
      Stmt s;
      const int roll = pick(0, 9);
      if (roll < 3) {
        s.kind = Stmt::Decl;
        s.name = "v" + std::to_string(next_var_++);
        if (chance(80)) s.expr = expr(visible, 2);
        visible.push_back(s.name);
      } else if (roll < 7 || depth >= 3) {
        s.kind = Stmt::Assign;
        if (visible.empty()) continue;
        s.name = visible[static_cast<std::size_t>(pick(0, static_cast<int>(visible.size()) - 1))];
        s.expr = expr(visible, 2);
      } else {
        const int branch = take_branch();
        if (branch < 0) {
          s.kind = Stmt::Assign;
          s.name = visible[static_cast<std::size_t>(pick(0, static_cast<int>(visible.size()) - 1))];
          s.expr = expr(visible, 2);
        } else {
          s.kind = Stmt::If;
          s.branch = branch;
          s.expr = expr(visible, 1);
          s.then_block = block(visible, depth + 1, pick(0, 3));
          if (chance(20)) s.then_block.push_back(return_stmt(visible));
          s.has_else = chance(60);
          if (s.has_else) {
            s.else_block = block(visible, depth + 1, pick(0, 3));
            if (chance(15)) s.else_block.push_back(return_stmt(visible));
          }
        }
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  Stmt return_stmt(const std::vector<std::string>& visible) {
    Stmt r;
    r.kind = Stmt::Return;
    r.expr = expr(visible, 1);
    return r;
  }

  // --- printing ---

  void print_expr(Expr& e, std::string& line) {
    switch (e.kind) {
      case Expr::Lit:
        line += std::to_string(e.value);
        break;
      case Expr::Ref:
        e.line = line_no_;
        e.col = static_cast<int>(line.size()) + 1;
        line += e.name;
        break;
      case Expr::Bin:
        line += "(";
        print_expr(*e.a, line);
        line += " " + e.op + " ";
        print_expr(*e.b, line);
        line += ")";
        break;
      case Expr::Tern:
        line += "(";
        print_expr(*e.c, line);
        line += " ? ";
        print_expr(*e.a, line);
        line += " : ";
        print_expr(*e.b, line);
        line += ")";
        break;
      case Expr::And:
      case Expr::Or:
        line += "(";
        print_expr(*e.a, line);
        line += e.kind == Expr::And ? " && " : " || ";
        print_expr(*e.b, line);
        line += ")";
        break;
    }
  }

  void emit(std::string line) {
    text_ += line + "\n";
    ++line_no_;
  }

  void print_block(std::vector<Stmt>& stmts, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (Stmt& s : stmts) {
      std::string line = pad;
      switch (s.kind) {
        case Stmt::Decl:
          line += "int " + s.name;
          if (s.expr) {
            line += " = ";
            print_expr(*s.expr, line);
          }
          emit(line + ";");
          break;
        case Stmt::Assign:
          s.line = line_no_;
          s.col = static_cast<int>(line.size()) + 1;
          line += s.name + " = ";
          print_expr(*s.expr, line);
          emit(line + ";");
          break;
        case Stmt::Return:
          line += "return ";
          print_expr(*s.expr, line);
          emit(line + ";");
          break;
        case Stmt::If:
          line += "if (";
          print_expr(*s.expr, line);
          emit(line + ") {");
          print_block(s.then_block, indent + 1);
          if (s.has_else) {
            emit(pad + "} else {");
            print_block(s.else_block, indent + 1);
          }
          emit(pad + "}");
          break;
      }
    }
  }

  std::string print() {
    for (const auto& g : globals_) emit("int " + g + ";");
    std::string header = "int f(";
    for (std::size_t i = 0; i < params_.size(); ++i) header += (i ? ", int " : "int ") + params_[i];
    emit(header + ") {");
    print_block(body_, 1);
    emit("}");
    return text_;
  }

  // --- reference interpreter ---

  using State = std::map<std::string, std::string>;
  using Pairs = std::set<std::pair<std::string, std::string>>;

  void read_expr(const Expr& e, const State& state, std::uint32_t mask, Pairs& out) const {
    auto taken = [&](int branch) { return (mask >> branch) & 1u; };
    switch (e.kind) {
      case Expr::Lit:
        break;
      case Expr::Ref:
        out.emplace(state.at(e.name), std::to_string(e.line) + ":" + std::to_string(e.col));
        break;
      case Expr::Bin:
        read_expr(*e.a, state, mask, out);
        read_expr(*e.b, state, mask, out);
        break;
      case Expr::Tern:
        read_expr(*e.c, state, mask, out);
        read_expr(taken(e.branch) ? *e.a : *e.b, state, mask, out);
        break;
      case Expr::And:
        read_expr(*e.a, state, mask, out);
        if (taken(e.branch)) read_expr(*e.b, state, mask, out);
        break;
      case Expr::Or:
        read_expr(*e.a, state, mask, out);
        if (!taken(e.branch)) read_expr(*e.b, state, mask, out);
        break;
    }
  }

  // False once a return ran.
  bool exec(const std::vector<Stmt>& stmts, State& state, std::uint32_t mask, Pairs& out) const {
    for (const Stmt& s : stmts) {
      switch (s.kind) {
        case Stmt::Decl:
          if (s.expr) read_expr(*s.expr, state, mask, out);
          state[s.name] = "decl:" + s.name;
          break;
        case Stmt::Assign:
          read_expr(*s.expr, state, mask, out);
          state[s.name] = "write:" + std::to_string(s.line) + ":" + std::to_string(s.col);
          break;
        case Stmt::Return:
          read_expr(*s.expr, state, mask, out);
          return false;
        case Stmt::If:
          read_expr(*s.expr, state, mask, out);
          if ((mask >> s.branch) & 1u) {
            if (!exec(s.then_block, state, mask, out)) return false;
          } else if (s.has_else) {
            if (!exec(s.else_block, state, mask, out)) return false;
          }
          break;
      }
    }
    return true;
  }

  void interpret(std::uint32_t mask, Pairs& out) const {
    State state;
    for (const auto& g : globals_) state[g] = "decl:" + g;
    for (const auto& p : params_) state[p] = "decl:" + p;
    exec(body_, state, mask, out);
  }

  std::mt19937 rng_;
  int budget_;
  int used_branches_ = 0;
  int next_var_ = 0;
  std::vector<std::string> globals_, params_;
  std::vector<Stmt> body_;
  std::string text_;
  int line_no_ = 1;
};

}  // namespace

RandomProgram random_program(std::uint32_t seed, int max_branches) { return Generator(seed, max_branches).run(); }

std::set<std::pair<std::string, std::string>> dfg_def_use(const Graph& graph) {
  std::set<std::pair<std::string, std::string>> out;
  auto position = [&](NodeId id) {
    const auto& loc = graph.node(id).location;
    return loc ? std::to_string(loc->start_line) + ":" + std::to_string(loc->start_col) : std::string("?");
  };
  for (NodeId ref : graph.nodes_by_kind(kinds::DeclaredReferenceExpression, true)) {
    if (is_write_reference(graph, ref)) continue;
    for (NodeId source : graph.neighbors(ref, EdgeLabel::Dfg, Direction::In)) {
      std::string key;
      if (graph.is_a(source, kinds::DeclaredReferenceExpression)) {
        key = "write:" + position(source);
      } else if (graph.is_a(source, kinds::ValueDeclaration)) {
        key = "decl:" + graph.node(source).name.value_or("?");
      } else {
        key = "other:" + graph.kind_name(source);
      }
      out.emplace(key, position(ref));
    }
  }
  return out;
}

// --- structured random programs -------------------------------------------

namespace {

class StructuredGenerator {
 public:
  explicit StructuredGenerator(std::mt19937& rng) : rng_(rng) {}

  std::string run() {
    out_ += "struct node { int value; struct node *next; };\n";
    out_ += "int total;\n";
    const int functions = pick(1, 3);
    for (int f = 0; f < functions; ++f) {
      vars_ = {"a", "b", "total"};
      out_ += "int fn" + std::to_string(f) + "(int a, int b) {\n";
      out_ += "  int i = 0;\n  int j = 0;\n  int *p = NULL;\n  struct node *n = NULL;\n";
      vars_.insert(vars_.end(), {"i", "j"});
      block(1, pick(2, 6), 0);
      out_ += "  return " + expr(2) + ";\n}\n";
    }
    out_ += "void helper(struct node *n) {\n  while (n) {\n    total = total + n->value;\n    n = n->next;\n  }\n}\n";
    return out_;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string var() { return vars_[static_cast<std::size_t>(pick(0, static_cast<int>(vars_.size()) - 1))]; }

  std::string expr(int depth) {
    const int roll = pick(0, 9);
    if (depth == 0 || roll < 3) return pick(0, 1) ? var() : std::to_string(pick(0, 99));
    switch (roll) {
      case 3: return "(" + expr(depth - 1) + " ? " + expr(depth - 1) + " : " + expr(depth - 1) + ")";
      case 4: return "(" + expr(depth - 1) + " && " + expr(depth - 1) + ")";
      case 5: return "(" + expr(depth - 1) + " || " + expr(depth - 1) + ")";
      case 6: return "-" + expr(depth - 1);
      case 7: return "fn_ext(" + expr(depth - 1) + ", " + expr(depth - 1) + ")";
      default: {
        static const char* ops[] = {"+", "-", "*", "<", ">=", "==", "!="};
        return "(" + expr(depth - 1) + " " + ops[pick(0, 6)] + " " + expr(depth - 1) + ")";
      }
    }
  }

  void line(int indent, const std::string& text) { out_ += std::string(static_cast<std::size_t>(indent) * 2, ' ') + text + "\n"; }

  void block(int indent, int count, int loops) {
    for (int k = 0; k < count; ++k) {
      switch (pick(0, 9)) {
        case 0:
        case 1:
          line(indent, var() + " = " + expr(2) + ";");
          break;
        case 2:
          line(indent, "if (" + expr(1) + ") {");
          block(indent + 1, pick(0, 3), loops);
          line(indent, "} else {");
          block(indent + 1, pick(0, 2), loops);
          line(indent, "}");
          break;
        case 3:
          if (indent > 4) break;
          line(indent, "while (" + expr(1) + ") {");
          block(indent + 1, pick(1, 3), loops + 1);
          line(indent, "}");
          break;
        case 4: {
          if (indent > 4) break;
          const std::string v = var();
          line(indent, "for (" + v + " = 0; " + v + " < " + std::to_string(pick(1, 9)) + "; " + v + " = " + v +
                           " + 1) {");
          block(indent + 1, pick(1, 3), loops + 1);
          line(indent, "}");
          break;
        }
        case 5:
          if (loops > 0) line(indent, pick(0, 1) ? "break;" : "continue;");
          break;
        case 6:
          line(indent, "p = &" + var() + ";");
          line(indent, var() + " = *p;");
          break;
        case 7:
          line(indent, "if (n) " + var() + " = n->value;");
          break;
        case 8:
          line(indent, "for (;;) { " + var() + " = " + expr(1) + "; break; }");
          break;
        default:
          line(indent, "return " + expr(1) + ";");
          break;
      }
    }
  }

  std::mt19937& rng_;
  std::string out_;
  std::vector<std::string> vars_;
};

}  // namespace

std::string random_structured_program(std::mt19937& rng) { return StructuredGenerator(rng).run(); }

// --- generic documents ----------------------------------------------------

namespace {

nlohmann::json scalar_json(const Scalar& value) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::nullptr_t>) {
          return nullptr;
        } else {
          return v;
        }
      },
      value);
}

nlohmann::json generic_node(const Graph& graph, NodeId id, const Edge* via) {
  const Node& node = graph.node(id);
  nlohmann::json out;
  out["kind"] = graph.kind_name(id);
  if (via && via->role) out["role"] = *via->role;
  if (via && via->index) out["index"] = *via->index;
  if (node.name) out["name"] = *node.name;
  if (const Scalar* v = node.property("value")) out["value"] = scalar_json(*v);
  if (auto op = node.string_property("operator")) out["operator"] = *op;
  if (node.location) {
    out["location"] = {{"startLine", node.location->start_line},
                       {"startCol", node.location->start_col},
                       {"endLine", node.location->end_line},
                       {"endCol", node.location->end_col}};
  }
  nlohmann::json children = nlohmann::json::array();
  for (const Edge* e : graph.edges_of(id, EdgeLabel::Ast, Direction::Out)) {
    children.push_back(generic_node(graph, e->to, e));
  }
  if (!children.empty()) out["children"] = std::move(children);
  return out;
}

}  // namespace

nlohmann::json to_generic_document(const Graph& graph, NodeId root, std::string language) {
  const Node& node = graph.node(root);
  return {{"cpgAstVersion", "1"},
          {"language", std::move(language)},
          {"file", node.location ? node.location->file : node.name.value_or("unknown")},
          {"root", generic_node(graph, root, nullptr)}};
}

bool same_ast(const Graph& a, NodeId ra, const Graph& b, NodeId rb, std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message + " at node " + std::to_string(raw(ra)) + "/" + std::to_string(raw(rb));
    return false;
  };
  const Node& x = a.node(ra);
  const Node& y = b.node(rb);
  if (a.kind_name(ra) != b.kind_name(rb)) return fail("kind " + a.kind_name(ra) + " vs " + b.kind_name(rb));
  if (x.name != y.name) return fail("name");
  if (x.location != y.location) return fail("location");
  if (x.flags != y.flags) return fail("flags");
  for (const char* key : {"operator", "value"}) {
    const Scalar* px = x.property(key);
    const Scalar* py = y.property(key);
    if ((px == nullptr) != (py == nullptr) || (px && *px != *py)) return fail(std::string("property ") + key);
  }
  const auto ex = a.edges_of(ra, EdgeLabel::Ast, Direction::Out);
  const auto ey = b.edges_of(rb, EdgeLabel::Ast, Direction::Out);
  if (ex.size() != ey.size()) return fail("child count");
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (ex[i]->role != ey[i]->role || ex[i]->index != ey[i]->index) return fail("edge role/index");
    if (!same_ast(a, ex[i]->to, b, ey[i]->to, why)) return false;
  }
  return true;
}

}  // namespace cpg::testing
