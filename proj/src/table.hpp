#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cell.hpp"

namespace cpslint {

struct ColumnSchema {
  std::string name;
  DataType declared_type = DataType::Text;
  std::optional<std::string> unit_hint; // parsed from a header "(V)" tail
};

// In-memory columnar dataset. Row order is meaningful (time-series).
// Operations never mutate a table in place; they build new ones.
struct Table {
  std::vector<ColumnSchema> schema;
  std::vector<std::vector<Cell>> rows;

  size_t column_count() const { return schema.size(); }
  size_t row_count() const { return rows.size(); }

  std::optional<size_t> find_column(const std::string &name) const;
  std::vector<Cell> column(size_t index) const;

  // Same schema names and same written field texts.
  bool same_content(const Table &other) const;
};

enum class MalformedPolicy { Skip, Error };

struct ReadOptions {
  char delimiter = ',';
  bool has_header = true;
  MalformedPolicy on_malformed = MalformedPolicy::Error;
};

struct ReadReport {
  size_t rows_read = 0;
  size_t malformed_dropped = 0;
  std::vector<size_t> malformed_lines; // 1-based file line of each dropped record
  std::string to_text() const;
};

// Reads a CSV file or text. Header row becomes the schema; every cell comes
// back as Text or Missing (empty field -> Missing), no coercion. A completely
// empty record is expanded to a full row of Missing cells. A UTF-8 BOM is
// stripped; CRLF input is tolerated.
Table read_csv(const std::string &path, const ReadOptions &opts,
               ReadReport *report = nullptr);
Table read_csv_text(const std::string &text, const ReadOptions &opts,
                    ReadReport *report = nullptr);

// Canonical CSV output: comma delimiter, '\n' line endings, header line,
// fields quoted only when they contain a delimiter, quote or newline,
// Missing written as the empty field.
void write_csv(const Table &t, const std::string &path);
std::string write_csv_text(const Table &t);
std::string csv_escape_field(const std::string &field);

std::string read_file_text(const std::string &path);
void write_file_text(const std::string &path, const std::string &text);

} // namespace cpslint
