#include "printer.hpp"

#include <sstream>

namespace cpslint {

namespace {

struct Printer {
  std::ostringstream out;

  void indent(int depth) {
    for (int i = 0; i < depth; ++i)
      out << "  ";
  }

  void print_global_filter(const GlobalFilter &f) {
    if (std::holds_alternative<SkipEmptyRows>(f.v)) {
      out << "skip empty rows";
    } else if (std::holds_alternative<SkipMalformedRows>(f.v)) {
      out << "skip malformed rows";
    } else if (auto *re = std::get_if<SkipRegex>(&f.v)) {
      out << "skip regex " << quote_string(re->pattern);
    } else if (auto *lit = std::get_if<SkipLiteral>(&f.v)) {
      out << "skip " << quote_string(lit->text);
    }
  }

  void print_strategy(const ImputeStrategy &s) {
    switch (s.method) {
    case ImputeStrategy::Method::Mean:
      out << "mean";
      break;
    case ImputeStrategy::Method::Last:
      out << "last";
      break;
    case ImputeStrategy::Method::Next:
      out << "next";
      break;
    case ImputeStrategy::Method::Interpolation:
      out << "interpolation "
          << (s.kind == ImputeStrategy::Interp::Linear ? "linear" : "nearest");
      break;
    }
  }

  void print_condition(const Condition &c) {
    out << quote_string(c.column) << " " << comparator_text(c.cmp) << " ";
    if (auto *text = std::get_if<std::string>(&c.literal))
      out << quote_string(*text);
    else
      out << format_number(std::get<double>(c.literal));
  }

  void print_column_rule(const ColumnRule &r, int depth) {
    indent(depth);
    if (auto *et = std::get_if<EnforceType>(&r.v)) {
      out << "enforce type " << data_type_name(et->type);
    } else if (auto *vr = std::get_if<ValidRange>(&r.v)) {
      out << "valid range " << render_range(vr->range);
    } else if (auto *im = std::get_if<Impute>(&r.v)) {
      out << "impute ";
      print_strategy(im->strategy);
    } else if (auto *sl = std::get_if<StripLiteral>(&r.v)) {
      out << "skip " << quote_string(sl->text);
    } else if (auto *sr = std::get_if<StripRegex>(&r.v)) {
      out << "skip regex " << quote_string(sr->pattern);
    } else if (auto *cond = std::get_if<Conditional>(&r.v)) {
      out << "when ";
      print_condition(cond->cond);
      out << " {\n";
      for (const auto &inner : cond->rules) {
        print_column_rule(inner, depth + 1);
        out << "\n";
      }
      indent(depth);
      out << "}";
    }
  }

  void print_action(const Action &a) {
    if (auto *inspect = std::get_if<InspectAction>(&a.v)) {
      out << "inspect " << quote_string(inspect->input_path) << " into "
          << quote_string(inspect->output_path) << "\n";
      return;
    }
    if (auto *import = std::get_if<ImportAction>(&a.v)) {
      out << "import " << quote_string(import->input_path) << " {\n";
      for (const auto &f : import->global_filters) {
        indent(1);
        print_global_filter(f);
        out << "\n";
      }
      out << "}\n";
      return;
    }
    const auto &exp = std::get<ExportAction>(a.v);
    out << "export " << quote_string(exp.output_path) << " {\n";
    for (const auto &m : exp.mappings) {
      indent(1);
      out << "column " << quote_string(m.source_name);
      if (m.target_name != m.source_name)
        out << " as " << quote_string(m.target_name);
      out << " {\n";
      for (const auto &r : m.rules) {
        print_column_rule(r, 2);
        out << "\n";
      }
      indent(1);
      out << "}\n";
    }
    for (const auto &r : exp.row_rules) {
      indent(1);
      if (auto *sort = std::get_if<SortBy>(&r.v)) {
        out << "sort by " << quote_string(sort->column)
            << (sort->ascending ? " ascending" : " descending");
      } else if (auto *skip = std::get_if<SkipOutOfOrder>(&r.v)) {
        out << "skip out of order by " << quote_string(skip->column);
      }
      out << "\n";
    }
    if (exp.cut) {
      indent(1);
      out << "cut on column " << quote_string(exp.cut->column) << " contains "
          << quote_string(exp.cut->marker) << " into "
          << quote_string(exp.cut->prefix) << "\n";
    }
    out << "}\n";
  }
};

} // namespace

std::string quote_string(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_range(const RangeSpec &range) {
  std::string out;
  out += range.low_inclusive ? '[' : '(';
  out += format_number(range.low);
  out += ", ";
  out += format_number(range.high);
  out += range.high_inclusive ? ']' : ')';
  return out;
}

std::string render_script(const Script &s) {
  Printer p;
  for (const auto &a : s.actions)
    p.print_action(a);
  return p.out.str();
}

} // namespace cpslint
