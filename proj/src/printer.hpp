#pragma once

#include <string>

#include "ast.hpp"

namespace cpslint {

// Canonical script text: one clause per line, two-space indent, double-quoted
// strings, explicit interpolation kind and sort direction. Re-parsing the
// output yields a structurally equal script.
std::string render_script(const Script &s);

std::string render_range(const RangeSpec &range);
std::string quote_string(const std::string &s);

} // namespace cpslint
