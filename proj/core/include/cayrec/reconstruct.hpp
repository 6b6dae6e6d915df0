#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayrec/grid.hpp"
#include "cayrec/quadrangle.hpp"

namespace cayrec {

enum class FillStatus { kFilled, kStuck, kContradiction };

/// One quadrangle-criterion deduction: the hole is position 4 of `target`,
/// `witness` is a fully filled writing matching target's positions 1-3 in
/// value, and `value` is the witness's position-4 value.
struct FillDeduction {
    Cell cell;
    int value = 0;
    Quadrangle target;
    Quadrangle witness;
};

/// Outcome of trying to fill one hole. kFilled carries the deduction;
/// kContradiction carries two deductions proposing different values (the
/// filled part already violates the criterion); kStuck carries nothing.
struct FillResult {
    FillStatus status = FillStatus::kStuck;
    std::optional<FillDeduction> fill;
    std::optional<FillDeduction> conflict;
};

/// Attempts to fill hole d of p by quadrangle criterion: enumerates the
/// writings through d whose positions 1-3 are filled and searches for a fully
/// filled witness writing with matching values. Deterministic first-match
/// scan (targets by row-major diagonal partner, witnesses by row-major
/// position-2 anchor); with paranoid set, all candidates are compared and
/// disagreements reported as kContradiction.
FillResult find_fill(const PartialMatrix& p, Cell d, bool paranoid = false);

enum class ReconstructionMode { kQuadrangleOnly, kQuadranglePlusLatin };
enum class ReconstructionStatus { kComplete, kStuck, kContradiction };

/// A fill order: every hole of the matrix exactly once. Validated by
/// reconstruct.
using HoleOrder = std::vector<Cell>;

/// One executed fill. target/witness are empty for last-missing-symbol
/// inferences, which only occur in kQuadranglePlusLatin mode.
struct ReportFill {
    Cell cell;
    int value = 0;
    std::optional<Quadrangle> target;
    std::optional<Quadrangle> witness;
};

/// Ordered log of a reconstruction run plus the final grid state.
struct ReconstructionReport {
    ReconstructionReport(ReconstructionMode mode_, PartialMatrix initial)
        : mode(mode_), result(std::move(initial)) {}

    ReconstructionStatus status = ReconstructionStatus::kComplete;
    ReconstructionMode mode = ReconstructionMode::kQuadrangleOnly;
    std::optional<Cell> at;  // hole that got stuck / contradicted
    std::vector<ReportFill> fills;
    PartialMatrix result;
};

/// Fills p's holes strictly in the given order (which must enumerate exactly
/// the holes, each once). kQuadrangleOnly uses find_fill alone;
/// kQuadranglePlusLatin additionally fills a hole whose row or column already
/// contains the other n-1 values (comparison mode only).
ReconstructionReport reconstruct(const PartialMatrix& p, const HoleOrder& order,
                                 ReconstructionMode mode, bool paranoid = false);

std::string to_json(const ReconstructionReport& report);

/// Proof-level accounting for one hole d of a hole set, measured against the
/// full ground-truth matrix.
struct HoleAnalysis {
    int n = 0;
    Cell d;
    int t = 0;   // total holes
    int t0 = 0;  // holes sharing neither d's row nor column
    int tx = 0;  // other holes in d's column
    int ty = 0;  // other holes in d's row
    int tau_bound = 0;
    int count_c1c3 = 0;    // quadrangles through d with distinct diagonal values
    int count_c1c2c3 = 0;  // ... whose positions 1-3 are also hole-free
};

/// Counts geometric quadrangles through d, each once, in the writing with d
/// at position 4 and position 1 sharing d's row. C3 compares values in the
/// ground-truth matrix; C2 requires positions 1-3 outside the hole set.
/// tau_bound = (n-1)(n-3) - t0 - (tx+ty)(n-2).
HoleAnalysis analyze_hole(const Matrix& truth, const std::vector<Cell>& holes, Cell d);

std::string to_json(const HoleAnalysis& analysis);

}  // namespace cayrec
