#pragma once

#include <string_view>

#include "boolfrac/lang.hpp"

namespace boolfrac::detail {

/// parse_expr with positions reported relative to a location in a larger
/// document.
Expr parse_expr_at(std::string_view text, std::size_t line, std::size_t first_column);

}  // namespace boolfrac::detail
