#include <cctype>

#include "cpg/c_syntax.hpp"

namespace cpg::c {
namespace {

constexpr std::string_view kKeywords[] = {
    "int", "char", "void", "struct", "if", "else", "while", "for", "return", "break", "continue", "NULL"};

// Longest spellings first.
constexpr std::string_view kPunctuators[] = {
    "<<=", ">>=", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "+=",
    "-=",  "*=",  "/=",  "%=", "&=", "|=", "^=", "(",  ")",  "{",  "}",  "[",  "]",  ";",  ",",
    ".",   "+",   "-",   "*",  "/",  "%",  "=",  "<",  ">",  "!",  "&",  "?",  ":",  "~",  "^",  "|"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_part(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    bool line_start = true;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        bump();
        line_start = true;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
        continue;
      }
      if (starts_with("//")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        continue;
      }
      if (starts_with("/*")) {
        const Token start = here(TokenKind::Invalid);
        bump(2);
        bool closed = false;
        while (pos_ < src_.size()) {
          if (starts_with("*/")) {
            bump(2);
            closed = true;
            break;
          }
          bump();
        }
        if (!closed) tokens.push_back(finish(start));
        continue;
      }
      if (c == '#' && line_start) {
        Token token = here(TokenKind::Directive);
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          if (src_[pos_] == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') bump();
          bump();
        }
        tokens.push_back(finish(token));
        continue;
      }
      line_start = false;
      tokens.push_back(next_token());
    }
    Token end = here(TokenKind::End);
    tokens.push_back(end);
    return tokens;
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  void bump(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  Token here(TokenKind kind) const { return Token{kind, {}, pos_, line_, col_}; }

  Token finish(Token token) const {
    token.text = src_.substr(token.offset, pos_ - token.offset);
    return token;
  }

  Token next_token() {
    Token token = here(TokenKind::Invalid);
    const char c = src_[pos_];
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_part(src_[pos_])) bump();
      token = finish(token);
      token.kind = TokenKind::Identifier;
      for (auto keyword : kKeywords) {
        if (token.text == keyword) token.kind = TokenKind::Keyword;
      }
      return token;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && ident_part(src_[pos_])) bump();
      token.kind = TokenKind::Integer;
      return finish(token);
    }
    if (c == '\'' || c == '"') {
      bump();
      bool closed = false;
      while (pos_ < src_.size() && src_[pos_] != '\n') {
        if (src_[pos_] == '\\') {
          bump(2);
          continue;
        }
        if (src_[pos_] == c) {
          bump();
          closed = true;
          break;
        }
        bump();
      }
      token.kind = closed ? (c == '"' ? TokenKind::String : TokenKind::Char) : TokenKind::Invalid;
      return finish(token);
    }
    for (auto punct : kPunctuators) {
      if (starts_with(punct)) {
        bump(punct.size());
        token.kind = TokenKind::Punct;
        return finish(token);
      }
    }
    // One whole UTF-8 sequence.
    bump();
    while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) bump();
    return finish(token);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace cpg::c
