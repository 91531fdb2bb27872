#include "binf/io.hpp"

#include <charconv>

#include "binf/error.hpp"

namespace binf {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == '\n' || text[k] == ';' || text[k] == '/') {
      out.push_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '[' || c == ']'; }

std::vector<int> parse_ints(std::string_view line, std::string_view where) {
  std::vector<int> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (is_separator(line[k])) {
      ++k;
      continue;
    }
    int v = 0;
    const char* begin = line.data() + k;
    const char* end = line.data() + line.size();
    if (*begin == '+') ++begin;
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || (p != end && !is_separator(*p)))
      throw Error(ErrorCode::InvalidArgument,
                  "cannot parse '" + std::string(line) + "'" + std::string(where) + ": expected integers");
    out.push_back(v);
    k = static_cast<std::size_t>(p - line.data());
  }
  return out;
}

}  // namespace

std::vector<Row> parse_rows(std::string_view text) {
  std::vector<Row> rows;
  for (auto raw : split_lines(text)) {
    auto line = strip_comment(raw);
    auto first = line.find_first_not_of(" \t\r,[]");
    if (first == std::string_view::npos) continue;
    auto last = line.find_last_not_of(" \t\r,[]");
    auto body = line.substr(first, last - first + 1);
    Row row;
    if (body != "*") {
      for (int v : parse_ints(body, " in row " + std::to_string(rows.size() + 1))) row.push_back(Letter{v});
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "no tableau rows found");
  return rows;
}

std::vector<int> parse_int_list(std::string_view text) {
  auto out = parse_ints(text, "");
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer list");
  return out;
}

std::string format_row(const Row& row) {
  if (row.empty()) return "*";
  std::string s;
  for (Letter x : row) s += (s.empty() ? "" : ",") + x.to_string();
  return s;
}

std::string format_rows(const std::vector<Row>& rows) {
  std::string s;
  for (const auto& row : rows) s += format_row(row) + "\n";
  return s;
}

std::string reduced_label(const TInfinity& crystal, const Tableau& t) {
  std::string s;
  for (const auto& row : crystal.reduced_form(t)) s += (s.empty() ? "" : "/") + format_row(row);
  return s;
}

}  // namespace binf
