#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsv/polynomial.hpp"

namespace gsv {

/// Parses an expression over `variables` into an expanded polynomial.
///
/// Grammar: integer and `p/q` literals, binary `+ - *`, unary `-`/`+`,
/// `^` with a non-negative integer exponent, parentheses. Multiplication
/// must be written explicitly. Throws ParseError (with position) for syntax
/// errors, unknown variables and negative exponents.
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// Checks `[a-zA-Z][a-zA-Z0-9_]*`.
bool is_valid_variable_name(std::string_view name);

}  // namespace gsv
