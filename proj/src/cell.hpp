#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cpslint {

enum class DataType { Int, Bool, Real, Uart, Text };

const char *data_type_name(DataType t);
std::optional<DataType> data_type_from_name(const std::string &name);

// One table cell: Missing | Text | Number | Boolean.
//
// Missing is distinct from empty text. Numbers are always finite. Number and
// Boolean cells produced by parsing keep the original lexeme so that cells a
// script never modifies round-trip byte-for-byte through write_csv.
class Cell {
public:
  enum class Kind : uint8_t { Missing, Text, Number, Boolean };

  Cell() = default; // Missing

  static Cell missing() { return Cell(); }
  static Cell text(std::string v);
  static Cell number(double v);
  static Cell number(double v, std::string lexeme);
  static Cell boolean(bool v);
  static Cell boolean(bool v, std::string lexeme);

  Kind kind() const { return kind_; }
  bool is_missing() const { return kind_ == Kind::Missing; }
  bool is_text() const { return kind_ == Kind::Text; }
  bool is_number() const { return kind_ == Kind::Number; }
  bool is_boolean() const { return kind_ == Kind::Boolean; }

  const std::string &text_value() const { return text_; }
  double number_value() const { return number_; }
  bool boolean_value() const { return flag_; }

  // Field text as written to CSV: lexeme when preserved, canonical otherwise.
  std::string to_field() const;

  bool operator==(const Cell &other) const;
  bool operator!=(const Cell &other) const { return !(*this == other); }

private:
  Kind kind_ = Kind::Missing;
  std::string text_; // Text content, or preserved lexeme for Number/Boolean
  double number_ = 0.0;
  bool flag_ = false;
  bool has_lexeme_ = false;
};

// Shortest decimal form that round-trips; integral values keep a ".0" tail
// so numeric output stays visually distinct from integer text.
std::string format_number(double v);

// Strict lexers. No surrounding whitespace, no locale, '.' separator only.
std::optional<double> parse_int_text(const std::string &s);
std::optional<double> parse_real_text(const std::string &s);
std::optional<bool> parse_bool_text(const std::string &s); // true/false, any case

// Data type enforcement on a single cell. Missing stays Missing; Uart and
// Text accept anything. Returns nullopt when the cell is not parsable as t.
std::optional<Cell> parse_cell(const Cell &c, DataType t);

} // namespace cpslint
