#include "cayrec/grid.hpp"

#include <stdexcept>
#include <string>

namespace cayrec {

namespace {

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("matrix order must be at least 1, got " + std::to_string(n));
}

void check_value(int v, int n) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument("value " + std::to_string(v) + " outside universe [0, " +
                                    std::to_string(n) + ")");
    }
}

}  // namespace

Matrix::Matrix(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    check_order(n);
    if (values_.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("matrix of order " + std::to_string(n) + " needs " +
                                    std::to_string(n * n) + " values, got " +
                                    std::to_string(values_.size()));
    }
    for (int v : values_) check_value(v, n);
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw std::invalid_argument("matrix rows must form a square");
        values.insert(values.end(), row.begin(), row.end());
    }
    return Matrix(n, std::move(values));
}

std::vector<int> Matrix::row(int r) const {
    return {values_.begin() + static_cast<std::ptrdiff_t>(r) * n_,
            values_.begin() + static_cast<std::ptrdiff_t>(r + 1) * n_};
}

std::vector<int> Matrix::column(int c) const {
    std::vector<int> out(n_);
    for (int r = 0; r < n_; ++r) out[r] = at(r, c);
    return out;
}

Matrix Matrix::transposed() const {
    std::vector<int> values(values_.size());
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) values[static_cast<std::size_t>(c) * n_ + r] = at(r, c);
    return Matrix(n_, std::move(values));
}

std::vector<std::string> decimal_universe(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

PartialMatrix::PartialMatrix(int n)
    : n_(n), cells_(static_cast<std::size_t>(n) * n, kHole), universe_(decimal_universe(n)) {
    check_order(n);
}

PartialMatrix::PartialMatrix(int n, std::vector<int> cells, std::vector<std::string> universe)
    : n_(n), cells_(std::move(cells)), universe_(std::move(universe)) {
    check_order(n);
    if (cells_.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("partial matrix of order " + std::to_string(n) + " needs " +
                                    std::to_string(n * n) + " cells");
    }
    for (int v : cells_) {
        if (v != kHole) check_value(v, n);
    }
    if (universe_.empty()) {
        universe_ = decimal_universe(n);
    } else if (universe_.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("universe must name exactly n elements");
    }
}

PartialMatrix PartialMatrix::of(const Matrix& m) { return PartialMatrix(m.n(), m.values()); }

namespace {

void check_cell(Cell c, int n) {
    if (c.row < 0 || c.row >= n || c.col < 0 || c.col >= n) {
        throw std::invalid_argument("cell (" + std::to_string(c.row) + "," +
                                    std::to_string(c.col) + ") out of bounds");
    }
}

}  // namespace

void PartialMatrix::set(Cell c, int value) {
    check_cell(c, n_);
    check_value(value, n_);
    cells_[static_cast<std::size_t>(c.row) * n_ + c.col] = value;
}

void PartialMatrix::clear(Cell c) {
    check_cell(c, n_);
    cells_[static_cast<std::size_t>(c.row) * n_ + c.col] = kHole;
}

std::vector<Cell> PartialMatrix::holes() const {
    std::vector<Cell> out;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (!filled(r, c)) out.push_back({r, c});
    return out;
}

int PartialMatrix::hole_count() const {
    int count = 0;
    for (int v : cells_) count += (v == kHole);
    return count;
}

Matrix PartialMatrix::to_matrix() const {
    if (!complete()) throw std::invalid_argument("matrix still has holes");
    return Matrix(n_, cells_);
}

PartialMatrix punch(const Matrix& m, const std::vector<Cell>& holes) {
    PartialMatrix p = PartialMatrix::of(m);
    for (Cell c : holes) {
        if (c.row < 0 || c.row >= m.n() || c.col < 0 || c.col >= m.n()) {
            throw std::invalid_argument("hole (" + std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ") out of bounds");
        }
        p.clear(c);
    }
    return p;
}

}  // namespace cayrec
