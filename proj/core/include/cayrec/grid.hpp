#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cayrec {

/// A cell position in an n x n grid, 0-indexed, row first.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// Full n x n matrix of element indices in [0, n).
///
/// Nothing more is promised by construction; whether the value grid is Latin,
/// a Cayley matrix, etc. is established on demand by the checks in checks.hpp.
class Matrix {
  public:
    Matrix(int n, std::vector<int> values);
    static Matrix from_rows(const std::vector<std::vector<int>>& rows);

    int n() const { return n_; }
    int at(int row, int col) const { return values_[static_cast<std::size_t>(row) * n_ + col]; }
    int at(Cell c) const { return at(c.row, c.col); }
    std::vector<int> row(int r) const;
    std::vector<int> column(int c) const;
    const std::vector<int>& values() const { return values_; }
    Matrix transposed() const;

    bool operator==(const Matrix&) const = default;

  private:
    int n_;
    std::vector<int> values_;
};

/// An n x n grid whose cells are either filled with an element index or empty
/// ("holes"), plus the universe of element names the values are drawn from.
///
/// Universe names default to the decimal spelling of each index; they are
/// presentation-only and never affect value matching.
class PartialMatrix {
  public:
    static constexpr int kHole = -1;

    /// All-holes grid over the default decimal universe.
    explicit PartialMatrix(int n);
    PartialMatrix(int n, std::vector<int> cells, std::vector<std::string> universe = {});
    /// Hole-free grid mirroring m.
    static PartialMatrix of(const Matrix& m);

    int n() const { return n_; }
    /// kHole or the element index at (row, col).
    int at(int row, int col) const { return cells_[static_cast<std::size_t>(row) * n_ + col]; }
    int at(Cell c) const { return at(c.row, c.col); }
    bool filled(int row, int col) const { return at(row, col) != kHole; }
    bool filled(Cell c) const { return filled(c.row, c.col); }
    bool is_hole(Cell c) const { return !filled(c); }

    void set(Cell c, int value);
    void clear(Cell c);

    /// Holes in row-major order.
    std::vector<Cell> holes() const;
    int hole_count() const;
    bool complete() const { return hole_count() == 0; }
    const std::vector<std::string>& universe() const { return universe_; }

    /// Requires complete().
    Matrix to_matrix() const;

    bool operator==(const PartialMatrix&) const = default;

  private:
    int n_;
    std::vector<int> cells_;
    std::vector<std::string> universe_;
};

std::vector<std::string> decimal_universe(int n);

/// Copy of m with the listed cells deleted.
PartialMatrix punch(const Matrix& m, const std::vector<Cell>& holes);

}  // namespace cayrec
