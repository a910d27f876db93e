#include "rtv/csv.hpp"

namespace rtv::csv {

std::vector<Row> read(std::string_view text) {
    std::vector<Row> rows;
    std::size_t i = 0;
    std::size_t line = 1;
    const std::size_t n = text.size();

    while (i < n) {
        Row row;
        row.line = line;
        std::string cell;
        bool row_done = false;
        bool blank = true;

        while (!row_done) {
            cell.clear();
            if (i < n && text[i] == '"') {
                blank = false;
                ++i;
                bool closed = false;
                while (i < n) {
                    char c = text[i];
                    if (c == '"') {
                        if (i + 1 < n && text[i + 1] == '"') {
                            cell.push_back('"');
                            i += 2;
                            continue;
                        }
                        ++i;
                        closed = true;
                        break;
                    }
                    if (c == '\n') ++line;
                    cell.push_back(c);
                    ++i;
                }
                if (!closed) {
                    row.error = "unterminated quoted field";
                    i = n;
                }
                // Anything other than a delimiter or line end after the closing quote is malformed.
                while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    if (row.error.empty()) row.error = "unexpected character after closing quote";
                    ++i;
                }
            } else {
                while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    cell.push_back(text[i]);
                    ++i;
                }
                if (!cell.empty()) blank = false;
            }
            row.cells.push_back(cell);

            if (i >= n) {
                row_done = true;
            } else if (text[i] == ',') {
                blank = false;
                ++i;
            } else {
                if (text[i] == '\r') ++i;
                if (i < n && text[i] == '\n') ++i;
                ++line;
                row_done = true;
            }
        }
        if (!blank) rows.push_back(std::move(row));
    }
    return rows;
}

std::string escape(std::string_view cell) {
    if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
    std::string out;
    out.reserve(cell.size() + 2);
    out.push_back('"');
    for (char c : cell) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(cells[i]);
    }
    return out;
}

} // namespace rtv::csv
