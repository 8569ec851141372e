#include "parser.hpp"

#include <regex>

#include "lexer.hpp"

namespace cpslint {

namespace {

constexpr int kMaxNestingDepth = 64;

class Parser {
public:
  explicit Parser(const std::string &source) : tokens_(lex(source)) {}

  Script parse() {
    Script script;
    bool seen_import = false;
    bool seen_inspect = false;
    while (!at_end()) {
      const Token &tok = peek();
      if (tok.kind != Token::Kind::Word)
        fail("expected an action (inspect, import or export)");
      if (tok.text == "inspect") {
        if (seen_inspect)
          throw CpsError(ErrorKind::Structure,
                         "at most one inspect action per script", tok.pos);
        seen_inspect = true;
        script.actions.push_back({parse_inspect()});
      } else if (tok.text == "import") {
        if (seen_import)
          throw CpsError(ErrorKind::Structure,
                         "at most one import action per script", tok.pos);
        seen_import = true;
        script.actions.push_back({parse_import()});
      } else if (tok.text == "export") {
        if (!seen_import)
          throw CpsError(ErrorKind::Structure,
                         "export requires an import earlier in the script",
                         tok.pos);
        script.actions.push_back({parse_export()});
      } else {
        fail("expected an action (inspect, import or export)");
      }
    }
    if (script.actions.empty())
      fail("empty script: expected at least one action");
    return script;
  }

private:
  std::vector<Token> tokens_;
  size_t idx_ = 0;

  const Token &peek(size_t ahead = 0) const {
    size_t i = idx_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token &advance() { return tokens_[idx_ < tokens_.size() - 1 ? idx_++ : idx_]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  [[noreturn]] void fail(const std::string &expected) const {
    const Token &tok = peek();
    std::string got;
    switch (tok.kind) {
    case Token::Kind::End:
      got = "end of input";
      break;
    case Token::Kind::String:
      got = "string literal";
      break;
    case Token::Kind::Number:
      got = "number";
      break;
    default:
      got = "'" + tok.text + "'";
      break;
    }
    throw CpsError(ErrorKind::Syntax, expected + ", found " + got, tok.pos);
  }

  bool peek_word(const char *w, size_t ahead = 0) const {
    const Token &tok = peek(ahead);
    return tok.kind == Token::Kind::Word && tok.text == w;
  }

  Token expect_word(const char *w) {
    if (!peek_word(w))
      fail(std::string("expected '") + w + "'");
    return advance();
  }

  Token expect_string(const char *what) {
    if (peek().kind != Token::Kind::String)
      fail(std::string("expected ") + what + " (a string literal)");
    return advance();
  }

  Token expect_number() {
    if (peek().kind != Token::Kind::Number)
      fail("expected a number");
    return advance();
  }

  Token expect_punct(char c) {
    if (peek().kind != Token::Kind::Punct || peek().text[0] != c)
      fail(std::string("expected '") + c + "'");
    return advance();
  }

  void check_regex(const std::string &pattern, Pos pos) {
    try {
      std::regex re(pattern);
    } catch (const std::regex_error &e) {
      throw CpsError(ErrorKind::Regex,
                     "regular expression does not compile: " +
                         std::string(e.what()),
                     pos);
    }
  }

  InspectAction parse_inspect() {
    Pos pos = peek().pos;
    expect_word("inspect");
    Token in = expect_string("an input path");
    if (in.text.empty())
      throw CpsError(ErrorKind::Syntax, "inspect input path is empty", in.pos);
    expect_word("into");
    Token out = expect_string("an output path");
    if (out.text.empty())
      throw CpsError(ErrorKind::Syntax, "inspect output path is empty",
                     out.pos);
    return {pos, in.text, out.text};
  }

  ImportAction parse_import() {
    Pos pos = peek().pos;
    expect_word("import");
    Token path = expect_string("an input path");
    expect_punct('{');
    ImportAction action{pos, path.text, {}};
    while (!(peek().kind == Token::Kind::Punct && peek().text == "}")) {
      if (at_end())
        fail("expected '}' closing the import block");
      action.global_filters.push_back(parse_global_filter());
    }
    expect_punct('}');
    return action;
  }

  GlobalFilter parse_global_filter() {
    Pos pos = peek().pos;
    expect_word("skip");
    if (peek_word("empty")) {
      advance();
      expect_word("rows");
      return {pos, SkipEmptyRows{}};
    }
    if (peek_word("malformed")) {
      advance();
      expect_word("rows");
      return {pos, SkipMalformedRows{}};
    }
    if (peek_word("regex")) {
      advance();
      Token pat = expect_string("a regex pattern");
      check_regex(pat.text, pat.pos);
      return {pos, SkipRegex{pat.text}};
    }
    Token lit = expect_string("a substring to skip");
    if (lit.text.empty())
      throw CpsError(ErrorKind::Syntax, "skip substring is empty", lit.pos);
    return {pos, SkipLiteral{lit.text}};
  }

  ExportAction parse_export() {
    Pos pos = peek().pos;
    expect_word("export");
    Token path = expect_string("an output path");
    expect_punct('{');
    ExportAction action;
    action.pos = pos;
    action.output_path = path.text;
    while (!(peek().kind == Token::Kind::Punct && peek().text == "}")) {
      if (at_end())
        fail("expected '}' closing the export block");
      if (peek_word("column")) {
        action.mappings.push_back(parse_column_mapping());
      } else if (peek_word("sort")) {
        action.row_rules.push_back(parse_sort());
      } else if (peek_word("skip")) {
        action.row_rules.push_back(parse_skip_out_of_order());
      } else if (peek_word("cut")) {
        CutRule cut = parse_cut();
        if (action.cut)
          throw CpsError(ErrorKind::Structure,
                         "an export allows at most one cut rule", cut.pos);
        action.cut = std::move(cut);
      } else {
        fail("expected a column mapping, row rule or cut rule");
      }
    }
    expect_punct('}');
    return action;
  }

  ColumnMapping parse_column_mapping() {
    Pos pos = peek().pos;
    expect_word("column");
    Token source = expect_string("a source column name");
    std::string target = source.text;
    if (peek_word("as")) {
      advance();
      target = expect_string("a target column name").text;
    }
    expect_punct('{');
    ColumnMapping mapping{pos, source.text, std::move(target), {}};
    while (!(peek().kind == Token::Kind::Punct && peek().text == "}")) {
      if (at_end())
        fail("expected '}' closing the column block");
      mapping.rules.push_back(parse_column_rule(0));
    }
    expect_punct('}');
    return mapping;
  }

  ColumnRule parse_column_rule(int depth) {
    Pos pos = peek().pos;
    if (peek_word("enforce")) {
      advance();
      expect_word("type");
      const Token &t = peek();
      if (t.kind != Token::Kind::Word)
        fail("expected a data type (int, bool, real, uart, text)");
      auto type = data_type_from_name(t.text);
      if (!type)
        fail("expected a data type (int, bool, real, uart, text)");
      advance();
      return {pos, EnforceType{*type}};
    }
    if (peek_word("valid")) {
      advance();
      expect_word("range");
      return {pos, ValidRange{parse_range()}};
    }
    if (peek_word("impute")) {
      advance();
      return {pos, Impute{parse_strategy()}};
    }
    if (peek_word("skip")) {
      advance();
      if (peek_word("regex")) {
        advance();
        Token pat = expect_string("a regex pattern");
        check_regex(pat.text, pat.pos);
        return {pos, StripRegex{pat.text}};
      }
      Token lit = expect_string("a substring to skip");
      if (lit.text.empty())
        throw CpsError(ErrorKind::Syntax, "skip substring is empty", lit.pos);
      return {pos, StripLiteral{lit.text}};
    }
    if (peek_word("when")) {
      if (depth + 1 > kMaxNestingDepth)
        throw CpsError(ErrorKind::Syntax, "conditional nesting too deep", pos);
      advance();
      Conditional cond;
      cond.cond = parse_condition();
      expect_punct('{');
      while (!(peek().kind == Token::Kind::Punct && peek().text == "}")) {
        if (at_end())
          fail("expected '}' closing the when block");
        cond.rules.push_back(parse_column_rule(depth + 1));
      }
      expect_punct('}');
      return {pos, std::move(cond)};
    }
    fail("expected a column rule (enforce, valid, impute, skip or when)");
  }

  RangeSpec parse_range() {
    RangeSpec range;
    const Token &open = peek();
    if (open.kind != Token::Kind::Punct ||
        (open.text != "[" && open.text != "("))
      fail("expected '[' or '(' opening a range");
    range.low_inclusive = open.text == "[";
    advance();
    range.low = expect_number().num;
    expect_punct(',');
    range.high = expect_number().num;
    const Token &close = peek();
    if (close.kind != Token::Kind::Punct ||
        (close.text != "]" && close.text != ")"))
      fail("expected ']' or ')' closing a range");
    range.high_inclusive = close.text == "]";
    advance();
    return range;
  }

  ImputeStrategy parse_strategy() {
    ImputeStrategy s;
    if (peek_word("mean")) {
      advance();
      s.method = ImputeStrategy::Method::Mean;
      return s;
    }
    if (peek_word("last")) {
      advance();
      s.method = ImputeStrategy::Method::Last;
      return s;
    }
    if (peek_word("next")) {
      advance();
      s.method = ImputeStrategy::Method::Next;
      return s;
    }
    if (peek_word("interpolation")) {
      advance();
      s.method = ImputeStrategy::Method::Interpolation;
      s.kind = ImputeStrategy::Interp::Linear;
      if (peek_word("linear")) {
        advance();
      } else if (peek_word("nearest")) {
        advance();
        s.kind = ImputeStrategy::Interp::Nearest;
      }
      return s;
    }
    fail("expected an imputation strategy (mean, last, next, interpolation)");
  }

  Condition parse_condition() {
    Condition cond;
    Token col = expect_string("a column name");
    cond.pos = col.pos;
    cond.column = col.text;
    const Token &op = peek();
    if (op.kind == Token::Kind::Cmp) {
      if (op.text == "==")
        cond.cmp = Comparator::Eq;
      else if (op.text == "!=")
        cond.cmp = Comparator::Ne;
      else if (op.text == "<")
        cond.cmp = Comparator::Lt;
      else if (op.text == "<=")
        cond.cmp = Comparator::Le;
      else if (op.text == ">")
        cond.cmp = Comparator::Gt;
      else if (op.text == ">=")
        cond.cmp = Comparator::Ge;
      advance();
    } else if (peek_word("contains")) {
      cond.cmp = Comparator::Contains;
      advance();
    } else {
      fail("expected a comparator (==, !=, <, <=, >, >=, contains)");
    }
    const Token &lit = peek();
    if (lit.kind == Token::Kind::String) {
      cond.literal = lit.text;
      advance();
    } else if (lit.kind == Token::Kind::Number) {
      cond.literal = lit.num;
      advance();
    } else {
      fail("expected a string or number literal");
    }
    return cond;
  }

  RowRule parse_sort() {
    Pos pos = peek().pos;
    expect_word("sort");
    expect_word("by");
    Token col = expect_string("a column name");
    SortBy sort{col.text, true};
    if (peek_word("ascending")) {
      advance();
    } else if (peek_word("descending")) {
      advance();
      sort.ascending = false;
    }
    return {pos, std::move(sort)};
  }

  RowRule parse_skip_out_of_order() {
    Pos pos = peek().pos;
    expect_word("skip");
    expect_word("out");
    expect_word("of");
    expect_word("order");
    expect_word("by");
    Token col = expect_string("a column name");
    return {pos, SkipOutOfOrder{col.text}};
  }

  CutRule parse_cut() {
    Pos pos = peek().pos;
    expect_word("cut");
    expect_word("on");
    expect_word("column");
    Token col = expect_string("a column name");
    expect_word("contains");
    Token marker = expect_string("a marker substring");
    if (marker.text.empty())
      throw CpsError(ErrorKind::Syntax, "cut marker is empty", marker.pos);
    expect_word("into");
    Token prefix = expect_string("an output file prefix");
    return {pos, col.text, marker.text, prefix.text};
  }
};

} // namespace

Script parse_script(const std::string &source) {
  return Parser(source).parse();
}

const char *comparator_text(Comparator c) {
  switch (c) {
  case Comparator::Eq:
    return "==";
  case Comparator::Ne:
    return "!=";
  case Comparator::Lt:
    return "<";
  case Comparator::Le:
    return "<=";
  case Comparator::Gt:
    return ">";
  case Comparator::Ge:
    return ">=";
  case Comparator::Contains:
    return "contains";
  }
  return "?";
}

} // namespace cpslint
