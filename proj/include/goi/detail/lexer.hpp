#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "goi/error.hpp"

namespace goi::detail {

enum class TokenKind { ident, lambda, dot, lparen, rparen, arrow, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

inline const char* describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::ident: return "identifier";
    case TokenKind::lambda: return "'\\'";
    case TokenKind::dot: return "'.'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::arrow: return "'->'";
    case TokenKind::end: return "end of input";
  }
  return "?";
}

// Identifiers are a letter followed by letters or digits. Trailing primes are
// accepted so that names produced by capture-avoiding renaming read back.
inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (c == '\\') {
      out.push_back({TokenKind::lambda, "\\", i});
      ++i;
    } else if (src.substr(i, 2) == "\xCE\xBB") {  // UTF-8 lambda
      out.push_back({TokenKind::lambda, "\\", i});
      i += 2;
    } else if (c == '.') {
      out.push_back({TokenKind::dot, ".", i});
      ++i;
    } else if (c == '(') {
      out.push_back({TokenKind::lparen, "(", i});
      ++i;
    } else if (c == ')') {
      out.push_back({TokenKind::rparen, ")", i});
      ++i;
    } else if (src.substr(i, 2) == "->") {
      out.push_back({TokenKind::arrow, "->", i});
      i += 2;
    } else if (std::isalpha(c)) {
      const std::size_t start = i;
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
      while (i < src.size() && src[i] == '\'') ++i;
      out.push_back({TokenKind::ident, std::string(src.substr(start, i - start)), start});
    } else {
      throw ParseError(i, std::string("unexpected character '") + src[i] + "'");
    }
  }
  out.push_back({TokenKind::end, "", src.size()});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::string_view src) : tokens_(tokenize(src)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }

  Token take() {
    Token t = tokens_[pos_];
    if (t.kind != TokenKind::end) ++pos_;
    return t;
  }

  Token expect(TokenKind kind) {
    if (!at(kind)) {
      throw ParseError(peek().position, std::string("expected ") + describe(kind) +
                                            ", found " + describe(peek().kind));
    }
    return take();
  }

  void expect_end() { expect(TokenKind::end); }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace goi::detail
