#include "cayrec/quadrangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cayrec {

namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

Quadrangle::Quadrangle(Cell a, Cell b, Cell c, Cell d) : cells_{a, b, c, d} {
    if (a.row == c.row || a.col == c.col) {
        throw std::invalid_argument("degenerate quadrangle: positions 1 and 3 must span two rows "
                                    "and two columns, got " + cell_str(a) + " and " + cell_str(c));
    }
    // b and d must be exactly the two remaining corners of a's and c's block.
    const Cell x{a.row, c.col};
    const Cell y{c.row, a.col};
    const bool ok = (b == x && d == y) || (b == y && d == x);
    if (!ok) {
        throw std::invalid_argument("cells " + cell_str(a) + cell_str(b) + cell_str(c) +
                                    cell_str(d) + " are not a role-ordered quadrangle");
    }
}

Quadrangle Quadrangle::from_block(int r1, int r2, int c1, int c2) {
    const int top = std::min(r1, r2), bottom = std::max(r1, r2);
    const int left = std::min(c1, c2), right = std::max(c1, c2);
    if (top == bottom || left == right) {
        throw std::invalid_argument("degenerate block: needs two distinct rows and columns");
    }
    return Quadrangle({bottom, left}, {top, left}, {top, right}, {bottom, right});
}

std::array<Quadrangle, 8> writings_of(const Quadrangle& q) {
    const Quadrangle base = canonical_writing(q);
    const Cell a = base.a(), b = base.b(), c = base.c(), d = base.d();
    // Perimeter traversals: 4 rotations of (a,b,c,d) and 4 of the reversal.
    return {
        Quadrangle(a, b, c, d), Quadrangle(b, c, d, a), Quadrangle(c, d, a, b),
        Quadrangle(d, a, b, c), Quadrangle(a, d, c, b), Quadrangle(d, c, b, a),
        Quadrangle(c, b, a, d), Quadrangle(b, a, d, c),
    };
}

Quadrangle canonical_writing(const Quadrangle& q) {
    const auto& cs = q.cells();
    return Quadrangle::from_block(cs[0].row, cs[2].row, cs[0].col, cs[2].col);
}

}  // namespace cayrec
