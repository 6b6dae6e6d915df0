#include "cayrec/text_io.hpp"

#include <cctype>
#include <unordered_map>

namespace cayrec {

namespace {

struct Token {
    std::string text;
    int line;    // 1-based
    int column;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;  // comment until end of line
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

PartialMatrix parse_grid(std::string_view text) {
    // Split into physical lines, keeping 1-based numbering.
    std::vector<std::vector<Token>> rows;
    std::vector<int> row_lines;
    int declared_n = -1;
    int header_line = -1;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string line(text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                              : eol - pos));
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        auto tokens = tokenize_line(line, line_no);
        if (tokens.empty()) continue;
        if (rows.empty() && declared_n < 0 && tokens[0].text.rfind("n=", 0) == 0) {
            if (tokens.size() > 1) {
                throw ParseError(line_no, tokens[1].column, "unexpected token after header");
            }
            const std::string num = tokens[0].text.substr(2);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError(line_no, tokens[0].column, "malformed header '" + tokens[0].text +
                                                                "', expected n=<int>");
            }
            declared_n = std::stoi(num);
            if (declared_n < 1) throw ParseError(line_no, tokens[0].column, "order must be >= 1");
            header_line = line_no;
            continue;
        }
        rows.push_back(std::move(tokens));
        row_lines.push_back(line_no);
    }

    if (rows.empty()) {
        throw ParseError(header_line > 0 ? header_line : 1, 1, "no grid rows found");
    }
    const int n = declared_n > 0 ? declared_n : static_cast<int>(rows.size());
    if (static_cast<int>(rows.size()) != n) {
        throw ParseError(row_lines.back(), 1,
                         "expected " + std::to_string(n) + " rows, got " +
                             std::to_string(rows.size()));
    }

    const auto universe = decimal_universe(n);
    std::unordered_map<std::string, int> index_of;
    for (int i = 0; i < n; ++i) index_of.emplace(universe[i], i);

    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        const auto& row = rows[r];
        if (static_cast<int>(row.size()) != n) {
            const Token& at = row.size() > static_cast<std::size_t>(n) ? row[n] : row.back();
            throw ParseError(at.line, at.column,
                             "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                 " of " + std::to_string(n) + " entries");
        }
        for (const Token& tok : row) {
            if (tok.text == ".") {
                cells.push_back(PartialMatrix::kHole);
                continue;
            }
            if (tok.text[0] == '.') {
                throw ParseError(tok.line, tok.column, "bad hole token '" + tok.text + "'");
            }
            auto it = index_of.find(tok.text);
            if (it == index_of.end()) {
                throw ParseError(tok.line, tok.column,
                                 "symbol '" + tok.text + "' outside the declared universe");
            }
            cells.push_back(it->second);
        }
    }
    return PartialMatrix(n, std::move(cells), universe);
}

std::string serialize_grid(const PartialMatrix& p) {
    std::string out = "n=" + std::to_string(p.n()) + "\n";
    for (int r = 0; r < p.n(); ++r) {
        for (int c = 0; c < p.n(); ++c) {
            if (c > 0) out += ' ';
            out += p.filled(r, c) ? p.universe()[p.at(r, c)] : std::string(".");
        }
        out += '\n';
    }
    return out;
}

std::string serialize_grid(const Matrix& m) { return serialize_grid(PartialMatrix::of(m)); }

}  // namespace cayrec
