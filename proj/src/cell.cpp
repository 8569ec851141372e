#include "cell.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace cpslint {

const char *data_type_name(DataType t) {
  switch (t) {
  case DataType::Int:
    return "int";
  case DataType::Bool:
    return "bool";
  case DataType::Real:
    return "real";
  case DataType::Uart:
    return "uart";
  case DataType::Text:
    return "text";
  }
  return "?";
}

std::optional<DataType> data_type_from_name(const std::string &name) {
  if (name == "int")
    return DataType::Int;
  if (name == "bool")
    return DataType::Bool;
  if (name == "real")
    return DataType::Real;
  if (name == "uart")
    return DataType::Uart;
  if (name == "text")
    return DataType::Text;
  return std::nullopt;
}

Cell Cell::text(std::string v) {
  Cell c;
  c.kind_ = Kind::Text;
  c.text_ = std::move(v);
  return c;
}

Cell Cell::number(double v) {
  Cell c;
  c.kind_ = Kind::Number;
  c.number_ = v;
  return c;
}

Cell Cell::number(double v, std::string lexeme) {
  Cell c;
  c.kind_ = Kind::Number;
  c.number_ = v;
  c.text_ = std::move(lexeme);
  c.has_lexeme_ = true;
  return c;
}

Cell Cell::boolean(bool v) {
  Cell c;
  c.kind_ = Kind::Boolean;
  c.flag_ = v;
  return c;
}

Cell Cell::boolean(bool v, std::string lexeme) {
  Cell c;
  c.kind_ = Kind::Boolean;
  c.flag_ = v;
  c.text_ = std::move(lexeme);
  c.has_lexeme_ = true;
  return c;
}

std::string Cell::to_field() const {
  switch (kind_) {
  case Kind::Missing:
    return "";
  case Kind::Text:
    return text_;
  case Kind::Number:
    return has_lexeme_ ? text_ : format_number(number_);
  case Kind::Boolean:
    return has_lexeme_ ? text_ : (flag_ ? "true" : "false");
  }
  return "";
}

bool Cell::operator==(const Cell &other) const {
  if (kind_ != other.kind_)
    return false;
  switch (kind_) {
  case Kind::Missing:
    return true;
  case Kind::Text:
    return text_ == other.text_;
  case Kind::Number:
    return number_ == other.number_ && to_field() == other.to_field();
  case Kind::Boolean:
    return flag_ == other.flag_ && to_field() == other.to_field();
  }
  return false;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eE") == std::string::npos)
    s += ".0";
  return s;
}

std::optional<double> parse_int_text(const std::string &s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-'))
    ++i;
  if (i == s.size())
    return std::nullopt;
  for (size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      return std::nullopt;
  double v = std::strtod(s.c_str(), nullptr);
  if (!std::isfinite(v))
    return std::nullopt;
  return v;
}

std::optional<double> parse_real_text(const std::string &s) {
  // [+-]? ( digits [ '.' digits? ] | '.' digits ) ( [eE] [+-]? digits )?
  size_t i = 0;
  const size_t n = s.size();
  if (i < n && (s[i] == '+' || s[i] == '-'))
    ++i;
  size_t int_digits = 0;
  while (i < n && s[i] >= '0' && s[i] <= '9') {
    ++i;
    ++int_digits;
  }
  size_t frac_digits = 0;
  if (i < n && s[i] == '.') {
    ++i;
    while (i < n && s[i] >= '0' && s[i] <= '9') {
      ++i;
      ++frac_digits;
    }
  }
  if (int_digits == 0 && frac_digits == 0)
    return std::nullopt;
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < n && (s[i] == '+' || s[i] == '-'))
      ++i;
    size_t exp_digits = 0;
    while (i < n && s[i] >= '0' && s[i] <= '9') {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0)
      return std::nullopt;
  }
  if (i != n)
    return std::nullopt;
  double v = std::strtod(s.c_str(), nullptr);
  if (!std::isfinite(v))
    return std::nullopt;
  return v;
}

std::optional<bool> parse_bool_text(const std::string &s) {
  auto eq_ci = [](const std::string &a, const char *b) {
    size_t i = 0;
    for (; i < a.size() && b[i]; ++i) {
      char c = a[i] >= 'A' && a[i] <= 'Z' ? char(a[i] - 'A' + 'a') : a[i];
      if (c != b[i])
        return false;
    }
    return i == a.size() && b[i] == '\0';
  };
  if (eq_ci(s, "true"))
    return true;
  if (eq_ci(s, "false"))
    return false;
  return std::nullopt;
}

std::optional<Cell> parse_cell(const Cell &c, DataType t) {
  if (c.is_missing())
    return c;
  if (t == DataType::Uart || t == DataType::Text)
    return c;
  switch (t) {
  case DataType::Real: {
    if (c.is_number())
      return c;
    if (c.is_text()) {
      if (auto v = parse_real_text(c.text_value()))
        return Cell::number(*v, c.text_value());
    }
    return std::nullopt;
  }
  case DataType::Int: {
    if (c.is_number()) {
      if (c.number_value() == std::trunc(c.number_value()))
        return c;
      return std::nullopt;
    }
    if (c.is_text()) {
      if (auto v = parse_int_text(c.text_value()))
        return Cell::number(*v, c.text_value());
    }
    return std::nullopt;
  }
  case DataType::Bool: {
    if (c.is_boolean())
      return c;
    if (c.is_text()) {
      if (auto v = parse_bool_text(c.text_value()))
        return Cell::boolean(*v, c.text_value());
    }
    return std::nullopt;
  }
  default:
    return std::nullopt;
  }
}

} // namespace cpslint
