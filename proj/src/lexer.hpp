#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace cpslint {

struct Token {
  enum class Kind {
    Word,    // bare keyword such as import, skip, real
    String,  // quoted literal, text unescaped
    Number,  // signed decimal, value in num
    Punct,   // one of { } [ ] ( ) ,
    Cmp,     // == != < <= > >=
    End,
  };
  Kind kind = Kind::End;
  std::string text;
  double num = 0.0;
  Pos pos;
};

// Tokenises a whole script. '#' starts a comment running to end of line.
// Throws CpsError{Syntax} on unterminated strings or bytes outside the
// language's alphabet; never crashes on arbitrary input.
std::vector<Token> lex(const std::string &source);

} // namespace cpslint
