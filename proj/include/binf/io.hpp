#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "binf/tableau.hpp"

namespace binf {

/// Rows of signed integer letters. Rows are separated by newlines, ';' or
/// '/'; entries by commas or blanks. Brackets are ignored, '#' starts a
/// comment and "*" denotes an empty row. Blank lines are skipped.
std::vector<Row> parse_rows(std::string_view text);

/// "3,2,3" or "3 2 3" or "[3,2,3]".
std::vector<int> parse_int_list(std::string_view text);

/// "1,1,2,-3"; "*" for an empty row.
std::string format_row(const Row& row);
/// One row per line.
std::string format_rows(const std::vector<Row>& rows);
/// Reduced form on one line with rows joined by "/", e.g. "2,2/*/*".
std::string reduced_label(const TInfinity& crystal, const Tableau& t);

}  // namespace binf
