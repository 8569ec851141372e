#include "table.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace cpslint {

std::optional<size_t> Table::find_column(const std::string &name) const {
  for (size_t i = 0; i < schema.size(); ++i)
    if (schema[i].name == name)
      return i;
  return std::nullopt;
}

std::vector<Cell> Table::column(size_t index) const {
  std::vector<Cell> out;
  out.reserve(rows.size());
  for (const auto &row : rows)
    out.push_back(row[index]);
  return out;
}

bool Table::same_content(const Table &other) const {
  if (schema.size() != other.schema.size() ||
      rows.size() != other.rows.size())
    return false;
  for (size_t c = 0; c < schema.size(); ++c)
    if (schema[c].name != other.schema[c].name)
      return false;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < schema.size(); ++c)
      if (rows[r][c].to_field() != other.rows[r][c].to_field() ||
          rows[r][c].is_missing() != other.rows[r][c].is_missing())
        return false;
  return true;
}

std::string ReadReport::to_text() const {
  std::ostringstream os;
  os << "rows read: " << rows_read << "\n";
  os << "rows dropped (malformed): " << malformed_dropped << "\n";
  if (!malformed_lines.empty()) {
    os << "dropped at lines:";
    size_t shown = 0;
    for (size_t line : malformed_lines) {
      if (shown++ == 20) {
        os << " ...";
        break;
      }
      os << " " << line;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::optional<std::string> header_unit_hint(const std::string &name) {
  if (name.empty() || name.back() != ')')
    return std::nullopt;
  size_t open = name.rfind('(');
  if (open == std::string::npos)
    return std::nullopt;
  return name.substr(open + 1, name.size() - open - 2);
}

// One logical CSV record. Quoted fields may contain delimiters and newlines;
// "" inside quotes is a literal quote. Returns false at end of input.
bool next_record(const std::string &text, size_t &pos, char delim,
                 std::vector<std::string> &fields, bool &all_empty,
                 size_t &line, size_t &record_line) {
  if (pos >= text.size())
    return false;
  record_line = line;
  fields.clear();
  all_empty = true;
  std::string field;
  bool in_quotes = false;
  bool quoted_field = false;

  auto push_field = [&] {
    if (!field.empty() || quoted_field)
      all_empty = false;
    fields.push_back(std::move(field));
    field.clear();
    quoted_field = false;
  };

  while (pos < text.size()) {
    char c = text[pos];
    if (in_quotes) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          pos += 2;
        } else {
          in_quotes = false;
          ++pos;
        }
      } else {
        if (c == '\n')
          ++line;
        field += c;
        ++pos;
      }
      continue;
    }
    if (c == '"' && field.empty() && !quoted_field) {
      in_quotes = true;
      quoted_field = true;
      ++pos;
      continue;
    }
    if (c == delim) {
      push_field();
      ++pos;
      continue;
    }
    if (c == '\n' || (c == '\r' && pos + 1 < text.size() &&
                      text[pos + 1] == '\n')) {
      pos += (c == '\r') ? 2 : 1;
      ++line;
      push_field();
      return true;
    }
    field += c;
    ++pos;
  }
  push_field();
  return true;
}

} // namespace

Table read_csv_text(const std::string &text, const ReadOptions &opts,
                    ReadReport *report) {
  if (opts.delimiter == '"' || opts.delimiter == '\n' ||
      opts.delimiter == '\r')
    throw CpsError(ErrorKind::Runtime, "invalid CSV delimiter");

  size_t pos = 0;
  if (text.size() >= 3 && (unsigned char)text[0] == 0xEF &&
      (unsigned char)text[1] == 0xBB && (unsigned char)text[2] == 0xBF)
    pos = 3;

  Table t;
  ReadReport local;
  ReadReport &rep = report ? *report : local;
  rep = ReadReport{};

  std::vector<std::string> fields;
  bool all_empty = false;
  size_t line = 1;
  size_t record_line = 1;

  if (opts.has_header) {
    if (!next_record(text, pos, opts.delimiter, fields, all_empty, line,
                     record_line))
      throw CpsError(ErrorKind::CsvFormat, "empty input: no header row");
    for (auto &name : fields) {
      ColumnSchema col;
      col.unit_hint = header_unit_hint(name);
      col.name = std::move(name);
      t.schema.push_back(std::move(col));
    }
  }

  const size_t width = t.schema.size();
  while (next_record(text, pos, opts.delimiter, fields, all_empty, line,
                     record_line)) {
    if (all_empty && fields.size() == 1) {
      // blank line: a full row of Missing cells
      t.rows.emplace_back(width, Cell::missing());
      ++rep.rows_read;
      continue;
    }
    if (!opts.has_header && t.schema.empty()) {
      for (size_t i = 0; i < fields.size(); ++i)
        t.schema.push_back({"column_" + std::to_string(i), DataType::Text,
                            std::nullopt});
    }
    if (fields.size() != t.schema.size()) {
      if (opts.on_malformed == MalformedPolicy::Error)
        throw CpsError(ErrorKind::CsvFormat,
                       "line " + std::to_string(record_line) + ": expected " +
                           std::to_string(t.schema.size()) +
                           " fields, found " +
                           std::to_string(fields.size()));
      ++rep.malformed_dropped;
      rep.malformed_lines.push_back(record_line);
      continue;
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (auto &f : fields)
      row.push_back(f.empty() ? Cell::missing() : Cell::text(std::move(f)));
    t.rows.push_back(std::move(row));
    ++rep.rows_read;
  }
  return t;
}

Table read_csv(const std::string &path, const ReadOptions &opts,
               ReadReport *report) {
  return read_csv_text(read_file_text(path), opts, report);
}

std::string csv_escape_field(const std::string &field) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes)
    return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string write_csv_text(const Table &t) {
  std::string out;
  for (size_t c = 0; c < t.schema.size(); ++c) {
    if (c)
      out += ',';
    out += csv_escape_field(t.schema[c].name);
  }
  out += '\n';
  for (const auto &row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c)
        out += ',';
      out += csv_escape_field(row[c].to_field());
    }
    out += '\n';
  }
  return out;
}

void write_csv(const Table &t, const std::string &path) {
  write_file_text(path, write_csv_text(t));
}

std::string read_file_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CpsError(ErrorKind::Io, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    throw CpsError(ErrorKind::Io, "read failure: " + path);
  return ss.str();
}

void write_file_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw CpsError(ErrorKind::Io, "cannot open file for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out)
    throw CpsError(ErrorKind::Io, "write failure: " + path);
}

} // namespace cpslint
