#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cell.hpp"
#include "errors.hpp"

namespace cpslint {

// AST for the sanitisation language. Every node carries a source position
// for diagnostics; positions are ignored by structural equality.

struct SkipEmptyRows {
  bool operator==(const SkipEmptyRows &) const { return true; }
};
struct SkipMalformedRows {
  bool operator==(const SkipMalformedRows &) const { return true; }
};
struct SkipLiteral {
  std::string text;
  bool operator==(const SkipLiteral &o) const { return text == o.text; }
};
struct SkipRegex {
  std::string pattern;
  bool operator==(const SkipRegex &o) const { return pattern == o.pattern; }
};

struct GlobalFilter {
  Pos pos;
  std::variant<SkipEmptyRows, SkipMalformedRows, SkipLiteral, SkipRegex> v;
  bool operator==(const GlobalFilter &o) const { return v == o.v; }
};

struct RangeSpec {
  double low = 0.0;
  bool low_inclusive = true;
  double high = 0.0;
  bool high_inclusive = true;
  bool operator==(const RangeSpec &o) const {
    return low == o.low && high == o.high && low_inclusive == o.low_inclusive &&
           high_inclusive == o.high_inclusive;
  }
  bool contains(double v) const {
    if (v < low || (v == low && !low_inclusive))
      return false;
    if (v > high || (v == high && !high_inclusive))
      return false;
    return true;
  }
};

struct ImputeStrategy {
  enum class Method { Mean, Last, Next, Interpolation };
  enum class Interp { Linear, Nearest };
  Method method = Method::Mean;
  Interp kind = Interp::Linear; // meaningful for Interpolation only
  bool operator==(const ImputeStrategy &o) const {
    if (method != o.method)
      return false;
    return method != Method::Interpolation || kind == o.kind;
  }
};

enum class Comparator { Eq, Ne, Lt, Le, Gt, Ge, Contains };

struct Condition {
  Pos pos;
  std::string column; // target name
  Comparator cmp = Comparator::Eq;
  std::variant<std::string, double> literal;
  bool operator==(const Condition &o) const {
    return column == o.column && cmp == o.cmp && literal == o.literal;
  }
};

struct ColumnRule;

struct EnforceType {
  DataType type = DataType::Text;
  bool operator==(const EnforceType &o) const { return type == o.type; }
};
struct ValidRange {
  RangeSpec range;
  bool operator==(const ValidRange &o) const { return range == o.range; }
};
struct Impute {
  ImputeStrategy strategy;
  bool operator==(const Impute &o) const { return strategy == o.strategy; }
};
struct StripLiteral {
  std::string text;
  bool operator==(const StripLiteral &o) const { return text == o.text; }
};
struct StripRegex {
  std::string pattern;
  bool operator==(const StripRegex &o) const { return pattern == o.pattern; }
};
struct Conditional {
  Condition cond;
  std::vector<ColumnRule> rules;
  bool operator==(const Conditional &o) const;
};

struct ColumnRule {
  Pos pos;
  std::variant<EnforceType, ValidRange, Impute, StripLiteral, StripRegex,
               Conditional>
      v;
  bool operator==(const ColumnRule &o) const { return v == o.v; }
};

inline bool Conditional::operator==(const Conditional &o) const {
  return cond == o.cond && rules == o.rules;
}

struct ColumnMapping {
  Pos pos;
  std::string source_name;
  std::string target_name;
  std::vector<ColumnRule> rules;
  bool operator==(const ColumnMapping &o) const {
    return source_name == o.source_name && target_name == o.target_name &&
           rules == o.rules;
  }
};

struct SortBy {
  std::string column;
  bool ascending = true;
  bool operator==(const SortBy &o) const {
    return column == o.column && ascending == o.ascending;
  }
};
struct SkipOutOfOrder {
  std::string column;
  bool operator==(const SkipOutOfOrder &o) const { return column == o.column; }
};
struct RowRule {
  Pos pos;
  std::variant<SortBy, SkipOutOfOrder> v;
  bool operator==(const RowRule &o) const { return v == o.v; }
};

struct CutRule {
  Pos pos;
  std::string column;
  std::string marker;
  std::string prefix;
  bool operator==(const CutRule &o) const {
    return column == o.column && marker == o.marker && prefix == o.prefix;
  }
};

struct InspectAction {
  Pos pos;
  std::string input_path;
  std::string output_path;
  bool operator==(const InspectAction &o) const {
    return input_path == o.input_path && output_path == o.output_path;
  }
};

struct ImportAction {
  Pos pos;
  std::string input_path;
  std::vector<GlobalFilter> global_filters;
  bool operator==(const ImportAction &o) const {
    return input_path == o.input_path && global_filters == o.global_filters;
  }
};

struct ExportAction {
  Pos pos;
  std::string output_path;
  std::vector<ColumnMapping> mappings;
  std::vector<RowRule> row_rules;
  std::optional<CutRule> cut;
  bool operator==(const ExportAction &o) const {
    return output_path == o.output_path && mappings == o.mappings &&
           row_rules == o.row_rules && cut == o.cut;
  }
};

struct Action {
  std::variant<InspectAction, ImportAction, ExportAction> v;
  bool operator==(const Action &o) const { return v == o.v; }
};

struct Script {
  std::vector<Action> actions;
  bool operator==(const Script &o) const { return actions == o.actions; }
};

const char *comparator_text(Comparator c);

} // namespace cpslint
