#include "lexer.hpp"

#include <array>

namespace bindlog::detail {

bool is_ident_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '\'' || c == '?' || c >= 0x80;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::vector<Token> tokenize(std::string_view src, int first_line) {
  static constexpr std::array<std::string_view, 7> two = {"=>", "->", "|-", "/\\", "\\/", "::", ":="};
  std::vector<Token> out;
  int line = first_line, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok{Tok::Punct, {}, line, col};
    if (is_ident_byte(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_byte(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Tok::Ident;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }
    bool matched = false;
    for (auto op : two) {
      if (src.substr(i, op.size()) == op) {
        tok.text = std::string(op);
        advance(op.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      static constexpr std::string_view single = "()[],.=@;:<>{}|*+-";
      if (single.find(static_cast<char>(c)) == std::string_view::npos)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ", col " + std::to_string(col) + ": unexpected character '" +
                        std::string(1, static_cast<char>(c)) + "'");
      tok.text = std::string(1, static_cast<char>(c));
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, {}, line, col});
  return out;
}

void TokenStream::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) + ": " + msg + ", found " + found);
}

}  // namespace bindlog::detail
