#include "lexer.hpp"

#include <cctype>
#include <cstdlib>

namespace cpslint {

namespace {

bool word_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

} // namespace

std::vector<Token> lex(const std::string &src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < src.size()) {
    char c = src[i];
    Pos pos{line, col};

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n')
        advance(1);
      continue;
    }
    if (word_start(c)) {
      size_t start = i;
      while (i < src.size() && word_char(src[i]))
        advance(1);
      out.push_back({Token::Kind::Word, src.substr(start, i - start), 0, pos});
      continue;
    }
    if (digit(c) || c == '.' ||
        ((c == '+' || c == '-') && i + 1 < src.size() &&
         (digit(src[i + 1]) || src[i + 1] == '.'))) {
      size_t start = i;
      if (c == '+' || c == '-')
        advance(1);
      bool any_digit = false;
      while (i < src.size() && digit(src[i])) {
        advance(1);
        any_digit = true;
      }
      if (i < src.size() && src[i] == '.') {
        advance(1);
        while (i < src.size() && digit(src[i])) {
          advance(1);
          any_digit = true;
        }
      }
      if (!any_digit)
        throw CpsError(ErrorKind::Syntax, "malformed number", pos);
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        size_t mark = i;
        advance(1);
        if (i < src.size() && (src[i] == '+' || src[i] == '-'))
          advance(1);
        if (i < src.size() && digit(src[i])) {
          while (i < src.size() && digit(src[i]))
            advance(1);
        } else {
          // not an exponent after all; 'e' belongs to the next token
          col -= static_cast<int>(i - mark);
          i = mark;
        }
      }
      std::string text = src.substr(start, i - start);
      Token tok{Token::Kind::Number, text, std::strtod(text.c_str(), nullptr),
                pos};
      out.push_back(std::move(tok));
      continue;
    }
    if (c == '"' || c == '\'') {
      char quote = c;
      advance(1);
      std::string value;
      bool closed = false;
      while (i < src.size()) {
        char d = src[i];
        if (d == '\\') {
          if (i + 1 >= src.size())
            break;
          char e = src[i + 1];
          if (e == '\\' || e == '\'' || e == '"') {
            value += e;
            advance(2);
            continue;
          }
          throw CpsError(ErrorKind::Syntax,
                         std::string("unknown escape '\\") + e +
                             "' in string literal",
                         pos);
        }
        if (d == quote) {
          advance(1);
          closed = true;
          break;
        }
        if (d == '\n')
          break;
        value += d;
        advance(1);
      }
      if (!closed)
        throw CpsError(ErrorKind::Syntax, "unterminated string literal", pos);
      out.push_back({Token::Kind::String, std::move(value), 0, pos});
      continue;
    }
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == '(' ||
        c == ')' || c == ',') {
      out.push_back({Token::Kind::Punct, std::string(1, c), 0, pos});
      advance(1);
      continue;
    }
    if (c == '=' || c == '!' || c == '<' || c == '>') {
      bool has_eq = i + 1 < src.size() && src[i + 1] == '=';
      if (c == '=' || c == '!') {
        if (!has_eq)
          throw CpsError(ErrorKind::Syntax,
                         std::string("unexpected character '") + c + "'", pos);
        out.push_back({Token::Kind::Cmp, std::string(1, c) + "=", 0, pos});
        advance(2);
        continue;
      }
      std::string text(1, c);
      advance(1);
      if (has_eq) {
        text += '=';
        advance(1);
      }
      out.push_back({Token::Kind::Cmp, std::move(text), 0, pos});
      continue;
    }
    throw CpsError(ErrorKind::Syntax,
                   "unexpected character (byte " +
                       std::to_string(static_cast<unsigned char>(c)) + ")",
                   pos);
  }
  out.push_back({Token::Kind::End, "", 0, {line, col}});
  return out;
}

} // namespace cpslint
