#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rtv::csv {

struct Row {
    std::vector<std::string> cells;
    std::size_t line = 0;   // 1-based line where the row starts
    std::string error;      // non-empty when the row is malformed
};

/// RFC-4180 reader: comma delimiter, double-quote quoting with "" escapes,
/// CRLF or LF line endings. Blank lines are skipped.
std::vector<Row> read(std::string_view text);

/// Quotes a cell only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view cell);

std::string join_row(const std::vector<std::string>& cells);

} // namespace rtv::csv
