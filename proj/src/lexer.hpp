#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "bindlog/error.hpp"

namespace bindlog::detail {

enum class Tok { Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> tokenize(std::string_view src, int first_line = 1);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  explicit TokenStream(std::string_view src, int first_line = 1) : toks_(tokenize(src, first_line)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is(std::string_view punct, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Punct && t.text == punct;
  }
  bool is_ident(std::size_t ahead = 0) const { return peek(ahead).kind == Tok::Ident; }
  bool is_word(std::string_view w, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Ident && t.text == w;
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(std::string_view punct) {
    if (!is(punct)) return false;
    next();
    return true;
  }
  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
  }
  std::string ident(std::string_view what = "identifier") {
    if (!is_ident()) fail("expected " + std::string(what));
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const;

  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_ident_byte(unsigned char c);
bool all_digits(std::string_view s);

}  // namespace bindlog::detail
