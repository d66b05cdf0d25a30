#pragma once

// Lexer and recursive-descent parser for the supported C subset.
//
// Grammar (informal):
//   unit      := (struct-decl | function | globals | directive)*
//   struct    := 'struct' ID '{' (type declarator (',' declarator)* ';')* '}' ';'
//   type      := ('int' | 'char' | 'void' | 'struct' ID) '*'*
//   function  := type ID '(' params ')' (block | ';')
//   globals   := type declarator ('=' expr)? (',' declarator ('=' expr)?)* ';'
//   stmt      := block | if | while | for | return | break | continue
//              | declaration | expr ';' | ';'
//   expr      := assignment with C precedence for
//                '?:' '||' '&&' '== !=' '< > <= >=' '+ -' '* / %'
//                unary '- ! * &', postfix call / '.' / '->'
//
// Syntax errors are recovered in panic mode: the parser skips to the next ';'
// or '}' and records a Problem node spanning what it skipped.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cpg::c {

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  Integer,
  Char,
  String,
  Punct,
  Directive,
  Invalid,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  std::size_t offset = 0;
  int line = 1;
  int col = 1;

  bool is(std::string_view spelling) const {
    return (kind == TokenKind::Punct || kind == TokenKind::Keyword) && text == spelling;
  }
};

// Comments are dropped; the End token sits one past the last character.
std::vector<Token> lex(std::string_view source);

enum class SyntaxKind : std::uint8_t {
  TranslationUnit,
  Struct,
  Field,
  Function,
  Param,
  VarDecl,
  Compound,
  If,
  While,
  For,
  Return,
  Break,
  Continue,
  DeclStmt,
  IntLit,
  CharLit,
  StringLit,
  NullLit,
  Ident,
  Binary,
  Unary,
  Ternary,
  Call,
  MemberCall,
  Member,
  Problem,
};

std::string_view to_string(SyntaxKind kind);

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Concrete parse node. Child layout by kind (null entries mark absent
/// optional parts):
///   Function   [body, params...]      VarDecl [initializer]
///   If         [cond, then, else]     While   [cond, body]
///   For        [init, cond, iter, body]
///   Return     [value]                Binary  [lhs, rhs]
///   Unary      [operand]              Ternary [cond, then, else]
///   Call       [args...]              MemberCall [base, args...]
///   Member     [base]                 others  children in source order
struct SyntaxNode {
  SyntaxKind kind = SyntaxKind::Problem;
  Span span;
  // Identifier, operator symbol or member name.
  std::string text;
  // Declared type spelled as "int", "char*", "struct S*".
  std::string type;
  // "." or "->" for member access.
  std::string access;
  std::int64_t int_value = 0;
  std::string string_value;
  std::string message;
  std::vector<std::unique_ptr<SyntaxNode>> children;

  const SyntaxNode* child(std::size_t i) const { return i < children.size() ? children[i].get() : nullptr; }
};

struct SyntaxError {
  std::size_t offset = 0;
  int line = 1;
  int col = 1;
  std::string message;
};

struct SyntaxTree {
  std::unique_ptr<SyntaxNode> root;
  std::vector<SyntaxError> errors;
};

SyntaxTree parse(std::string_view source);

}  // namespace cpg::c
