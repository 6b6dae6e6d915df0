#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayrec/grid.hpp"
#include "cayrec/quadrangle.hpp"

namespace cayrec {

/// A value occurring twice in one row or column.
struct DuplicateWitness {
    Cell first;
    Cell second;
    int value = 0;
};

/// Two quadrangle writings agreeing in the values of positions 1-3 but
/// disagreeing at position 4.
struct QuadrangleConflict {
    Quadrangle first;
    Quadrangle second;
    int first_value = 0;
    int second_value = 0;
};

/// A violated group axiom with the offending elements.
struct AxiomViolation {
    std::string axiom;
    std::vector<int> elements;
};

using CheckWitness = std::variant<DuplicateWitness, QuadrangleConflict, AxiomViolation>;

/// Pass/fail verdict; on failure carries the violation found first.
struct CheckVerdict {
    bool pass = true;
    std::optional<CheckWitness> witness;

    static CheckVerdict ok() { return {}; }
    static CheckVerdict fail(CheckWitness w) { return {false, std::move(w)}; }
    explicit operator bool() const { return pass; }
};

/// Serialized form: {"pass": bool, "witness": {...}} with witness omitted on
/// pass.
std::string to_json(const CheckVerdict& v);

/// No value twice in any row or column among filled cells. For complete
/// matrices this is the exact Latin-square test.
CheckVerdict is_latin(const PartialMatrix& p);
CheckVerdict is_latin(const Matrix& m);

/// Direct quadrangle-criterion check: enumerates all writings of all
/// quadrangles and requires, per orientation, that the values of positions
/// 1-3 determine the value of position 4. O(n^4); intended for n <= 32 (use
/// is_cayley for the O(n^3) equivalent on Latin inputs).
CheckVerdict check_quadrangle_criterion(const Matrix& m);

/// Latin and, bordering m with row 0 as headline and column 0 as sideline,
/// the induced operation is associative (an associative quasigroup is a
/// group). Agrees with check_quadrangle_criterion on Latin inputs.
CheckVerdict is_cayley(const Matrix& m);

/// True Cayley matrix whose row and column enumerations can be made to
/// coincide: some index k has row k equal to column k and bordering with that
/// row/column pair induces a group.
CheckVerdict is_balanced_cayley(const Matrix& m);

/// Labels m's columns by headline and rows by sideline and checks that the
/// induced operation on the labels is a group.
CheckVerdict check_labeled_table(const Matrix& m, const std::vector<int>& headline,
                                 const std::vector<int>& sideline);

/// A Cayley matrix together with column labels (headline) and row labels
/// (sideline).
struct CayleyTable {
    Matrix matrix;
    std::vector<int> headline;
    std::vector<int> sideline;
};

/// Chooses row headline_row as the headline and column sideline_col as the
/// sideline. Requires is_cayley(m); the induced identity is the label at the
/// crossing, m[headline_row][sideline_col].
CayleyTable border(const Matrix& m, int headline_row, int sideline_col);

}  // namespace cayrec
