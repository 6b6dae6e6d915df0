#pragma once

#include <array>

#include "cayrec/grid.hpp"

namespace cayrec {

/// Four corner cells of a non-degenerate rectangular block (at least two rows
/// and two columns), role-ordered so that positions 1 and 3 (a, c) occupy one
/// diagonal of the block and positions 2 and 4 (b, d) the other.
///
/// Each geometric quadrangle admits exactly 8 such orderings ("writings");
/// writings_of enumerates them and canonical_writing picks a fixed
/// representative.
class Quadrangle {
  public:
    /// Validates the role structure; throws std::invalid_argument otherwise.
    Quadrangle(Cell a, Cell b, Cell c, Cell d);

    /// Canonical writing of the block spanned by rows {r1, r2} and columns
    /// {c1, c2}: a bottom-left, b top-left, c top-right, d bottom-right.
    static Quadrangle from_block(int r1, int r2, int c1, int c2);

    Cell a() const { return cells_[0]; }
    Cell b() const { return cells_[1]; }
    Cell c() const { return cells_[2]; }
    Cell d() const { return cells_[3]; }
    const std::array<Cell, 4>& cells() const { return cells_; }

    /// True when positions 1 and 2 share a row; they share a column otherwise.
    /// Writings of the two orientations are never value-matched against each
    /// other (matching role triples across orientations is vacuous).
    bool row_oriented() const { return cells_[0].row == cells_[1].row; }

    bool operator==(const Quadrangle&) const = default;

  private:
    std::array<Cell, 4> cells_;
};

/// The 8 writings of q's block, in a fixed deterministic order (perimeter
/// traversals starting from each corner, both directions). Every corner
/// appears in position 4 exactly twice.
std::array<Quadrangle, 8> writings_of(const Quadrangle& q);

/// The canonical representative among writings_of(q): identical for all 8
/// writings of the same block, and idempotent.
Quadrangle canonical_writing(const Quadrangle& q);

}  // namespace cayrec
