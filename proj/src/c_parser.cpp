#include <charconv>

#include "cpg/c_syntax.hpp"

namespace cpg::c {

std::string_view to_string(SyntaxKind kind) {
  switch (kind) {
    case SyntaxKind::TranslationUnit: return "TranslationUnit";
    case SyntaxKind::Struct: return "Struct";
    case SyntaxKind::Field: return "Field";
    case SyntaxKind::Function: return "Function";
    case SyntaxKind::Param: return "Param";
    case SyntaxKind::VarDecl: return "VarDecl";
    case SyntaxKind::Compound: return "Compound";
    case SyntaxKind::If: return "If";
    case SyntaxKind::While: return "While";
    case SyntaxKind::For: return "For";
    case SyntaxKind::Return: return "Return";
    case SyntaxKind::Break: return "Break";
    case SyntaxKind::Continue: return "Continue";
    case SyntaxKind::DeclStmt: return "DeclStmt";
    case SyntaxKind::IntLit: return "IntLit";
    case SyntaxKind::CharLit: return "CharLit";
    case SyntaxKind::StringLit: return "StringLit";
    case SyntaxKind::NullLit: return "NullLit";
    case SyntaxKind::Ident: return "Ident";
    case SyntaxKind::Binary: return "Binary";
    case SyntaxKind::Unary: return "Unary";
    case SyntaxKind::Ternary: return "Ternary";
    case SyntaxKind::Call: return "Call";
    case SyntaxKind::MemberCall: return "MemberCall";
    case SyntaxKind::Member: return "Member";
    case SyntaxKind::Problem: return "Problem";
  }
  return "?";
}

namespace {

using NodePtr = std::unique_ptr<SyntaxNode>;

constexpr int kMaxDepth = 200;

struct SyntaxFailure {
  std::size_t token;
  std::string message;
};

// Decodes one escape sequence starting after the backslash.
char decode_escape(std::string_view body, std::size_t& i) {
  const char c = body[i++];
  switch (c) {
    case 'n': return '\n';
    case 't': return '\t';
    case 'r': return '\r';
    case 'a': return '\a';
    case 'b': return '\b';
    case 'f': return '\f';
    case 'v': return '\v';
    case 'x': {
      int value = 0;
      while (i < body.size() && std::isxdigit(static_cast<unsigned char>(body[i]))) {
        const char h = body[i++];
        value = value * 16 + (std::isdigit(static_cast<unsigned char>(h)) ? h - '0' : (std::tolower(h) - 'a' + 10));
      }
      return static_cast<char>(value);
    }
    default:
      if (c >= '0' && c <= '7') {
        int value = c - '0';
        for (int n = 0; n < 2 && i < body.size() && body[i] >= '0' && body[i] <= '7'; ++n) {
          value = value * 8 + (body[i++] - '0');
        }
        return static_cast<char>(value);
      }
      return c;
  }
}

std::string unescape(std::string_view body) {
  std::string out;
  for (std::size_t i = 0; i < body.size();) {
    if (body[i] == '\\' && i + 1 < body.size()) {
      ++i;
      out.push_back(decode_escape(body, i));
    } else {
      out.push_back(body[i++]);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : src_(source), tokens_(lex(source)) {}

  SyntaxTree run() {
    auto unit = make(SyntaxKind::TranslationUnit);
    unit->span = {0, src_.size()};
    while (!at_end()) {
      if (peek().kind == TokenKind::Directive) {
        unit->children.push_back(directive());
        continue;
      }
      const std::size_t start = pos_;
      try {
        for (auto& decl : external_declaration()) unit->children.push_back(std::move(decl));
      } catch (const SyntaxFailure& failure) {
        unit->children.push_back(recover(start, failure, /*in_block=*/false));
      }
    }
    return SyntaxTree{std::move(unit), std::move(errors_)};
  }

 private:
  // --- token helpers -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool check(std::string_view spelling) const { return peek().is(spelling); }

  const Token& advance() {
    const Token& token = tokens_[pos_];
    if (!at_end()) ++pos_;
    return token;
  }

  bool accept(std::string_view spelling) {
    if (!check(spelling)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(std::string message) const { throw SyntaxFailure{pos_, std::move(message)}; }

  const Token& expect(std::string_view spelling) {
    if (!check(spelling)) fail("expected '" + std::string(spelling) + "'");
    return advance();
  }

  std::string expect_identifier() {
    if (peek().kind != TokenKind::Identifier) fail("expected identifier");
    return std::string(advance().text);
  }

  std::size_t mark() const { return peek().offset; }

  std::size_t previous_end() const {
    if (pos_ == 0) return 0;
    const Token& last = tokens_[pos_ - 1];
    return last.offset + last.text.size();
  }

  NodePtr make(SyntaxKind kind) const {
    auto node = std::make_unique<SyntaxNode>();
    node->kind = kind;
    return node;
  }

  NodePtr finish(NodePtr node, std::size_t begin) const {
    node->span = {begin, std::max(begin, previous_end())};
    return node;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& parser) : parser(parser) {
      if (++parser.depth_ > kMaxDepth) {
        --parser.depth_;
        parser.fail("nesting too deep");
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  // --- recovery ------------------------------------------------------------

  void report(std::size_t token_index, std::string message) {
    const Token& t = tokens_[std::min(token_index, tokens_.size() - 1)];
    errors_.push_back({t.offset, t.line, t.col, std::move(message)});
  }

  /// Skips from `start` to the next ';' or '}' at the starting nesting level.
  /// Inside a block a bare '}' is left for the block to close.
  NodePtr recover(std::size_t start, const SyntaxFailure& failure, bool in_block) {
    report(failure.token, failure.message);
    pos_ = start;
    const std::size_t begin = mark();
    int depth = 0;
    while (!at_end()) {
      const Token& t = peek();
      if (t.is("{")) {
        ++depth;
      } else if (t.is("}")) {
        if (depth == 0) {
          if (!in_block || pos_ == start) advance();
          break;
        }
        if (--depth == 0) {
          advance();
          break;
        }
      } else if (t.is(";") && depth == 0) {
        advance();
        break;
      }
      advance();
    }
    auto problem = make(SyntaxKind::Problem);
    problem->message = failure.message;
    return finish(std::move(problem), begin);
  }

  NodePtr directive() {
    const std::size_t begin = mark();
    report(pos_, "preprocessor directives are not supported");
    advance();
    auto problem = make(SyntaxKind::Problem);
    problem->message = "preprocessor directive";
    return finish(std::move(problem), begin);
  }

  // --- declarations --------------------------------------------------------

  bool at_type() const {
    return check("int") || check("char") || check("void") || check("struct");
  }

  std::string base_type() {
    if (accept("struct")) return "struct " + expect_identifier();
    if (check("int") || check("char") || check("void")) return std::string(advance().text);
    fail("expected type");
  }

  std::string pointer_suffix() {
    std::string stars;
    while (accept("*")) stars += '*';
    return stars;
  }

  std::vector<NodePtr> external_declaration() {
    const std::size_t begin = mark();
    if (check("struct") && peek(1).kind == TokenKind::Identifier && peek(2).is("{")) {
      std::vector<NodePtr> result;
      result.push_back(struct_declaration());
      return result;
    }
    const std::string base = base_type();
    const std::string type = base + pointer_suffix();
    const std::string name = expect_identifier();
    if (check("(")) {
      std::vector<NodePtr> result;
      result.push_back(function(begin, type, name));
      return result;
    }
    auto decls = declarators(begin, base, type, name);
    expect(";");
    return decls;
  }

  NodePtr struct_declaration() {
    const std::size_t begin = mark();
    expect("struct");
    auto record = make(SyntaxKind::Struct);
    record->text = expect_identifier();
    expect("{");
    while (!check("}")) {
      if (at_end()) fail("unterminated struct");
      const std::size_t field_begin = mark();
      const std::string base = base_type();
      bool first = true;
      do {
        const std::size_t declarator_begin = first ? field_begin : mark();
        first = false;
        auto field = make(SyntaxKind::Field);
        field->type = base + pointer_suffix();
        field->text = expect_identifier();
        record->children.push_back(finish(std::move(field), declarator_begin));
      } while (accept(","));
      expect(";");
    }
    expect("}");
    expect(";");
    return finish(std::move(record), begin);
  }

  std::vector<NodePtr> declarators(std::size_t begin, const std::string& base, std::string type,
                                   std::string name) {
    std::vector<NodePtr> result;
    while (true) {
      auto var = make(SyntaxKind::VarDecl);
      var->type = std::move(type);
      var->text = std::move(name);
      var->children.emplace_back();
      if (accept("=")) var->children[0] = assignment();
      result.push_back(finish(std::move(var), begin));
      if (!accept(",")) break;
      begin = mark();
      type = base + pointer_suffix();
      name = expect_identifier();
    }
    return result;
  }

  NodePtr function(std::size_t begin, const std::string& type, const std::string& name) {
    auto fn = make(SyntaxKind::Function);
    fn->type = type;
    fn->text = name;
    fn->children.emplace_back();  // body slot
    expect("(");
    if (check("void") && peek(1).is(")")) {
      advance();
    } else if (!check(")")) {
      do {
        const std::size_t param_begin = mark();
        auto param = make(SyntaxKind::Param);
        param->type = base_type();
        param->type += pointer_suffix();
        if (peek().kind == TokenKind::Identifier) param->text = std::string(advance().text);
        fn->children.push_back(finish(std::move(param), param_begin));
      } while (accept(","));
    }
    expect(")");
    if (!accept(";")) fn->children[0] = block();
    return finish(std::move(fn), begin);
  }

  // --- statements ----------------------------------------------------------

  NodePtr block() {
    const std::size_t begin = mark();
    expect("{");
    auto compound = make(SyntaxKind::Compound);
    while (!check("}")) {
      if (at_end()) {
        report(pos_, "expected '}' before end of input");
        return finish(std::move(compound), begin);
      }
      compound->children.push_back(statement_or_problem());
    }
    expect("}");
    return finish(std::move(compound), begin);
  }

  NodePtr statement_or_problem() {
    const std::size_t start = pos_;
    try {
      return statement();
    } catch (const SyntaxFailure& failure) {
      return recover(start, failure, /*in_block=*/true);
    }
  }

  NodePtr statement() {
    DepthGuard guard(*this);
    const std::size_t begin = mark();
    if (peek().kind == TokenKind::Directive) return directive();
    if (check("{")) return block();
    if (accept(";")) return finish(make(SyntaxKind::Compound), begin);
    if (accept("if")) {
      auto node = make(SyntaxKind::If);
      expect("(");
      node->children.push_back(expression());
      expect(")");
      node->children.push_back(statement());
      node->children.emplace_back();
      if (accept("else")) node->children[2] = statement();
      return finish(std::move(node), begin);
    }
    if (accept("while")) {
      auto node = make(SyntaxKind::While);
      expect("(");
      node->children.push_back(expression());
      expect(")");
      node->children.push_back(statement());
      return finish(std::move(node), begin);
    }
    if (accept("for")) {
      auto node = make(SyntaxKind::For);
      node->children.resize(4);
      expect("(");
      if (at_type()) {
        node->children[0] = declaration_statement();
      } else if (!accept(";")) {
        node->children[0] = expression();
        expect(";");
      }
      if (!check(";")) node->children[1] = expression();
      expect(";");
      if (!check(")")) node->children[2] = expression();
      expect(")");
      node->children[3] = statement();
      return finish(std::move(node), begin);
    }
    if (accept("return")) {
      auto node = make(SyntaxKind::Return);
      node->children.emplace_back();
      if (!check(";")) node->children[0] = expression();
      expect(";");
      return finish(std::move(node), begin);
    }
    if (accept("break")) {
      expect(";");
      return finish(make(SyntaxKind::Break), begin);
    }
    if (accept("continue")) {
      expect(";");
      return finish(make(SyntaxKind::Continue), begin);
    }
    if (at_type()) return declaration_statement();
    auto expr = expression();
    expect(";");
    return expr;
  }

  NodePtr declaration_statement() {
    const std::size_t begin = mark();
    auto stmt = make(SyntaxKind::DeclStmt);
    const std::string base = base_type();
    const std::size_t first_begin = begin;
    const std::string type = base + pointer_suffix();
    const std::string name = expect_identifier();
    for (auto& var : declarators(first_begin, base, type, name)) stmt->children.push_back(std::move(var));
    expect(";");
    return finish(std::move(stmt), begin);
  }

  // --- expressions ---------------------------------------------------------

  NodePtr expression() { return assignment(); }

  NodePtr binary(NodePtr lhs, std::string op, NodePtr rhs, std::size_t begin) {
    auto node = make(SyntaxKind::Binary);
    node->text = std::move(op);
    node->children.push_back(std::move(lhs));
    node->children.push_back(std::move(rhs));
    return finish(std::move(node), begin);
  }

  NodePtr assignment() {
    DepthGuard guard(*this);
    const std::size_t begin = mark();
    auto lhs = conditional();
    if (accept("=")) return binary(std::move(lhs), "=", assignment(), begin);
    return lhs;
  }

  NodePtr conditional() {
    const std::size_t begin = mark();
    auto cond = binary_level(0);
    if (!accept("?")) return cond;
    auto node = make(SyntaxKind::Ternary);
    node->children.push_back(std::move(cond));
    node->children.push_back(expression());
    expect(":");
    {
      DepthGuard guard(*this);
      node->children.push_back(conditional());
    }
    return finish(std::move(node), begin);
  }

  static int precedence_of(const Token& t, int level) {
    static constexpr std::string_view levels[][4] = {
        {"||"}, {"&&"}, {"==", "!="}, {"<", ">", "<=", ">="}, {"+", "-"}, {"*", "/", "%"}};
    if (t.kind != TokenKind::Punct) return -1;
    for (auto op : levels[level]) {
      if (!op.empty() && t.text == op) return level;
    }
    return -1;
  }

  NodePtr binary_level(int level) {
    if (level == 6) return unary();
    const std::size_t begin = mark();
    auto lhs = binary_level(level + 1);
    while (precedence_of(peek(), level) == level) {
      std::string op(advance().text);
      auto rhs = binary_level(level + 1);
      lhs = binary(std::move(lhs), std::move(op), std::move(rhs), begin);
    }
    return lhs;
  }

  NodePtr unary() {
    DepthGuard guard(*this);
    const std::size_t begin = mark();
    if (check("-") || check("!") || check("*") || check("&")) {
      auto node = make(SyntaxKind::Unary);
      node->text = std::string(advance().text);
      node->children.push_back(unary());
      return finish(std::move(node), begin);
    }
    return postfix();
  }

  NodePtr arguments(NodePtr call) {
    expect("(");
    if (!check(")")) {
      do {
        call->children.push_back(assignment());
      } while (accept(","));
    }
    expect(")");
    return call;
  }

  NodePtr postfix() {
    const std::size_t begin = mark();
    auto expr = primary();
    while (true) {
      if (check("(")) {
        if (expr->kind != SyntaxKind::Ident) fail("only named functions can be called");
        auto call = make(SyntaxKind::Call);
        call->text = std::move(expr->text);
        expr = finish(arguments(std::move(call)), begin);
      } else if (check(".") || check("->")) {
        std::string access(advance().text);
        std::string member = expect_identifier();
        if (check("(")) {
          auto call = make(SyntaxKind::MemberCall);
          call->text = std::move(member);
          call->access = std::move(access);
          call->children.push_back(std::move(expr));
          expr = finish(arguments(std::move(call)), begin);
        } else {
          auto node = make(SyntaxKind::Member);
          node->text = std::move(member);
          node->access = std::move(access);
          node->children.push_back(std::move(expr));
          expr = finish(std::move(node), begin);
        }
      } else {
        return expr;
      }
    }
  }

  NodePtr primary() {
    const std::size_t begin = mark();
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier: {
        auto node = make(SyntaxKind::Ident);
        node->text = std::string(advance().text);
        return finish(std::move(node), begin);
      }
      case TokenKind::Integer: {
        auto node = make(SyntaxKind::IntLit);
        std::string_view digits = advance().text;
        while (!digits.empty() && (digits.back() == 'u' || digits.back() == 'U' || digits.back() == 'l' ||
                                   digits.back() == 'L')) {
          digits.remove_suffix(1);
        }
        int base = 10;
        if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
          digits.remove_prefix(2);
          base = 16;
        } else if (digits.size() > 1 && digits[0] == '0') {
          base = 8;
        }
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), node->int_value, base);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) fail("malformed integer literal");
        return finish(std::move(node), begin);
      }
      case TokenKind::Char: {
        auto node = make(SyntaxKind::CharLit);
        const std::string value = unescape(advance().text.substr(1, t.text.size() - 2));
        if (value.size() != 1) fail("malformed character literal");
        node->int_value = static_cast<unsigned char>(value[0]);
        return finish(std::move(node), begin);
      }
      case TokenKind::String: {
        auto node = make(SyntaxKind::StringLit);
        node->string_value = unescape(advance().text.substr(1, t.text.size() - 2));
        return finish(std::move(node), begin);
      }
      case TokenKind::Keyword:
        if (t.is("NULL")) {
          advance();
          return finish(make(SyntaxKind::NullLit), begin);
        }
        break;
      case TokenKind::Punct:
        if (t.is("(")) {
          advance();
          auto inner = expression();
          expect(")");
          return inner;
        }
        break;
      default:
        break;
    }
    fail("unexpected token '" + std::string(t.text) + "'");
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<SyntaxError> errors_;
};

}  // namespace

SyntaxTree parse(std::string_view source) { return Parser(source).run(); }

}  // namespace cpg::c
