#include "cayrec/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayrec {

namespace {

// Per-line positions of each value: where v sits in row r / column c, or -1.
// Kept incrementally up to date while a reconstruction fills holes.
struct LineIndex {
    int n;
    std::vector<int> row_pos;
    std::vector<int> col_pos;

    explicit LineIndex(const PartialMatrix& p)
        : n(p.n()),
          row_pos(static_cast<std::size_t>(n) * n, -1),
          col_pos(static_cast<std::size_t>(n) * n, -1) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const int v = p.at(r, c);
                if (v == PartialMatrix::kHole) continue;
                // First occurrence wins on (invalid) duplicated lines.
                if (in_row(r, v) < 0) row_pos[static_cast<std::size_t>(r) * n + v] = c;
                if (in_column(c, v) < 0) col_pos[static_cast<std::size_t>(c) * n + v] = r;
            }
    }

    int in_row(int r, int v) const { return row_pos[static_cast<std::size_t>(r) * n + v]; }
    int in_column(int c, int v) const { return col_pos[static_cast<std::size_t>(c) * n + v]; }

    void place(Cell c, int v) {
        row_pos[static_cast<std::size_t>(c.row) * n + v] = c.col;
        col_pos[static_cast<std::size_t>(c.col) * n + v] = c.row;
    }
};

struct WitnessHit {
    Quadrangle writing;
    int value;
};

// Enumerates the fully filled witness writings matching the target triple
// (v1, v2, v3) in the given orientation, scanning position-2 anchors in
// row-major order (at most one anchor per row). fn returns false to stop.
template <typename Fn>
void scan_witnesses(const PartialMatrix& p, const LineIndex& idx, int v1, int v2, int v3,
                    bool row_oriented, Fn&& fn) {
    const int n = p.n();
    for (int row = 0; row < n; ++row) {
        const int col = idx.in_row(row, v2);
        if (col < 0) continue;
        if (row_oriented) {
            const int c1_col = idx.in_row(row, v1);
            const int c3_row = idx.in_column(col, v3);
            if (c1_col < 0 || c3_row < 0 || c1_col == col || c3_row == row) continue;
            const Cell fourth{c3_row, c1_col};
            if (!p.filled(fourth)) continue;
            if (!fn(WitnessHit{Quadrangle({row, c1_col}, {row, col}, {c3_row, col}, fourth),
                               p.at(fourth)})) {
                return;
            }
        } else {
            const int c1_row = idx.in_column(col, v1);
            const int c3_col = idx.in_row(row, v3);
            if (c1_row < 0 || c3_col < 0 || c1_row == row || c3_col == col) continue;
            const Cell fourth{c1_row, c3_col};
            if (!p.filled(fourth)) continue;
            if (!fn(WitnessHit{Quadrangle({c1_row, col}, {row, col}, {row, c3_col}, fourth),
                               p.at(fourth)})) {
                return;
            }
        }
    }
}

FillResult find_fill_indexed(const PartialMatrix& p, const LineIndex& idx, Cell d, bool paranoid) {
    if (d.row < 0 || d.row >= p.n() || d.col < 0 || d.col >= p.n() || !p.is_hole(d)) {
        throw std::invalid_argument("find_fill target must be a hole of the matrix");
    }
    const int n = p.n();
    FillResult out{FillStatus::kStuck, std::nullopt, std::nullopt};
    bool done = false;
    // Targets: writings through d (position 4), enumerated by the row-major
    // position of the diagonal partner (position 2), row orientation first.
    // Non-paranoid runs return the first match; paranoid runs compare every
    // match and report the first disagreement.
    for (int r = 0; r < n && !done; ++r) {
        if (r == d.row) continue;
        for (int c = 0; c < n && !done; ++c) {
            if (c == d.col || !p.filled(r, c)) continue;
            const Cell partner{r, c};
            const Cell row_mate{r, d.col};  // shares partner's row
            const Cell col_mate{d.row, c};  // shares partner's column
            if (!p.filled(row_mate) || !p.filled(col_mate)) continue;
            const int v2 = p.at(partner);
            for (const bool row_oriented : {true, false}) {
                if (done) break;
                const Cell d1 = row_oriented ? row_mate : col_mate;
                const Cell d3 = row_oriented ? col_mate : row_mate;
                const Quadrangle target(d1, partner, d3, d);
                scan_witnesses(p, idx, p.at(d1), v2, p.at(d3), row_oriented,
                               [&](const WitnessHit& hit) {
                                   FillDeduction ded{d, hit.value, target, hit.writing};
                                   if (!out.fill) {
                                       out = FillResult{FillStatus::kFilled, ded, std::nullopt};
                                       done = !paranoid;
                                   } else if (out.fill->value != ded.value) {
                                       out = FillResult{FillStatus::kContradiction, out.fill, ded};
                                       done = true;
                                   }
                                   return !done;
                               });
            }
        }
    }
    return out;
}

// Last-missing-symbol inference: the unique absent value when the row or
// column of `cell` has its other n-1 cells filled with distinct values.
std::optional<int> latin_inference(const PartialMatrix& p, Cell cell) {
    const int n = p.n();
    for (const bool by_row : {true, false}) {
        std::vector<char> seen(n, 0);
        int filled = 0;
        bool duplicate = false;
        for (int i = 0; i < n; ++i) {
            const int v = by_row ? p.at(cell.row, i) : p.at(i, cell.col);
            if (v == PartialMatrix::kHole) continue;
            if (seen[v]) duplicate = true;
            seen[v] = 1;
            ++filled;
        }
        if (duplicate || filled != n - 1) continue;
        for (int v = 0; v < n; ++v)
            if (!seen[v]) return v;
    }
    return std::nullopt;
}

}  // namespace

FillResult find_fill(const PartialMatrix& p, Cell d, bool paranoid) {
    const LineIndex idx(p);
    return find_fill_indexed(p, idx, d, paranoid);
}

ReconstructionReport reconstruct(const PartialMatrix& p, const HoleOrder& order,
                                 ReconstructionMode mode, bool paranoid) {
    // The order must enumerate exactly the holes, each once.
    std::vector<Cell> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != p.holes()) {
        throw std::invalid_argument("fill order must list exactly the holes, each once");
    }

    ReconstructionReport report(mode, p);
    LineIndex idx(report.result);
    for (Cell cell : order) {
        const FillResult res = find_fill_indexed(report.result, idx, cell, paranoid);
        if (res.status == FillStatus::kContradiction) {
            report.status = ReconstructionStatus::kContradiction;
            report.at = cell;
            return report;
        }
        if (res.status == FillStatus::kFilled) {
            report.result.set(cell, res.fill->value);
            idx.place(cell, res.fill->value);
            report.fills.push_back(
                {cell, res.fill->value, res.fill->target, res.fill->witness});
            continue;
        }
        if (mode == ReconstructionMode::kQuadranglePlusLatin) {
            if (const auto v = latin_inference(report.result, cell)) {
                report.result.set(cell, *v);
                idx.place(cell, *v);
                report.fills.push_back({cell, *v, std::nullopt, std::nullopt});
                continue;
            }
        }
        report.status = ReconstructionStatus::kStuck;
        report.at = cell;
        return report;
    }
    report.status = ReconstructionStatus::kComplete;
    return report;
}

HoleAnalysis analyze_hole(const Matrix& truth, const std::vector<Cell>& holes, Cell d) {
    const int n = truth.n();
    std::vector<char> is_hole(static_cast<std::size_t>(n) * n, 0);
    for (Cell h : holes) {
        if (h.row < 0 || h.row >= n || h.col < 0 || h.col >= n) {
            throw std::invalid_argument("hole out of bounds");
        }
        auto& flag = is_hole[static_cast<std::size_t>(h.row) * n + h.col];
        if (flag) throw std::invalid_argument("duplicate hole in set");
        flag = 1;
    }
    if (!is_hole[static_cast<std::size_t>(d.row) * n + d.col]) {
        throw std::invalid_argument("analyzed cell must belong to the hole set");
    }
    auto hole_at = [&](int r, int c) {
        return is_hole[static_cast<std::size_t>(r) * n + c] != 0;
    };

    HoleAnalysis out;
    out.n = n;
    out.d = d;
    out.t = static_cast<int>(holes.size());
    for (Cell h : holes) {
        if (h == d) continue;
        if (h.col == d.col) {
            ++out.tx;
        } else if (h.row == d.row) {
            ++out.ty;
        } else {
            ++out.t0;
        }
    }
    out.tau_bound = (n - 1) * (n - 3) - out.t0 - (out.tx + out.ty) * (n - 2);

    // One writing per geometric quadrangle through d: position 4 at d,
    // position 1 sharing d's row.
    const int vd = truth.at(d);
    for (int r = 0; r < n; ++r) {
        if (r == d.row) continue;
        for (int c = 0; c < n; ++c) {
            if (c == d.col) continue;
            const int va = truth.at(d.row, c);
            const int vb = truth.at(r, c);
            const int vc = truth.at(r, d.col);
            if (va == vc || vb == vd) continue;  // C3
            ++out.count_c1c3;
            if (!hole_at(d.row, c) && !hole_at(r, c) && !hole_at(r, d.col)) {  // C2
                ++out.count_c1c2c3;
            }
        }
    }
    return out;
}

}  // namespace cayrec
