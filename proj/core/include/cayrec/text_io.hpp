#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cayrec/grid.hpp"

namespace cayrec {

/// Grid parse failure with a 1-based input position.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Parses the grid text format:
///
///   n=3
///   0 1 2
///   . 2 0
///   2 . 1
///
/// Values are universe names separated by spaces, "." is a hole, lines end
/// with "\n", the "n=<int>" header is optional (defaults to the row count)
/// and "#" starts a comment. Ragged rows, symbols outside the universe and
/// malformed hole tokens raise ParseError with the offending position.
PartialMatrix parse_grid(std::string_view text);

/// Canonical form: "n=<n>" header, single spaces, "." holes, "\n" line ends.
/// parse_grid(serialize_grid(p)) == p.
std::string serialize_grid(const PartialMatrix& p);
std::string serialize_grid(const Matrix& m);

}  // namespace cayrec
