#pragma once

#include <string>

#include "ast.hpp"

namespace cpslint {

// Parses a full script source. Throws CpsError with kind Syntax (malformed
// text), Regex (a skip-regex pattern that does not compile) or Structure
// (export before import, duplicate import/inspect). Every error carries a
// source position.
Script parse_script(const std::string &source);

} // namespace cpslint
