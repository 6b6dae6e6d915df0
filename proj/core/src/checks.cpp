#include "cayrec/checks.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace cayrec {

namespace {

// Duplicate scan shared by the Matrix and PartialMatrix overloads.
CheckVerdict latin_scan(const PartialMatrix& p) {
    const int n = p.n();
    std::vector<int> seen(n);
    for (int r = 0; r < n; ++r) {
        seen.assign(n, -1);
        for (int c = 0; c < n; ++c) {
            const int v = p.at(r, c);
            if (v == PartialMatrix::kHole) continue;
            if (seen[v] >= 0) return CheckVerdict::fail(DuplicateWitness{{r, seen[v]}, {r, c}, v});
            seen[v] = c;
        }
    }
    for (int c = 0; c < n; ++c) {
        seen.assign(n, -1);
        for (int r = 0; r < n; ++r) {
            const int v = p.at(r, c);
            if (v == PartialMatrix::kHole) continue;
            if (seen[v] >= 0) return CheckVerdict::fail(DuplicateWitness{{seen[v], c}, {r, c}, v});
            seen[v] = r;
        }
    }
    return CheckVerdict::ok();
}

// Position of each value in one row/column of a Latin matrix.
std::vector<int> positions_in_row(const Matrix& m, int r) {
    std::vector<int> pos(m.n(), -1);
    for (int c = 0; c < m.n(); ++c) pos[m.at(r, c)] = c;
    return pos;
}

std::vector<int> positions_in_column(const Matrix& m, int c) {
    std::vector<int> pos(m.n(), -1);
    for (int r = 0; r < m.n(); ++r) pos[m.at(r, c)] = r;
    return pos;
}

// Associativity of the operation induced by bordering: op(x, y) =
// m[row_of[x]][col_of[y]]. Assumes m is Latin and row_of/col_of are complete.
CheckVerdict associativity_of_bordering(const Matrix& m, const std::vector<int>& row_of,
                                        const std::vector<int>& col_of) {
    const int n = m.n();
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            op[static_cast<std::size_t>(x) * n + y] = m.at(row_of[x], col_of[y]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = op[static_cast<std::size_t>(x) * n + y];
            for (int z = 0; z < n; ++z) {
                const int yz = op[static_cast<std::size_t>(y) * n + z];
                if (op[static_cast<std::size_t>(xy) * n + z] !=
                    op[static_cast<std::size_t>(x) * n + yz]) {
                    return CheckVerdict::fail(AxiomViolation{"associativity", {x, y, z}});
                }
            }
        }
    return CheckVerdict::ok();
}

}  // namespace

CheckVerdict is_latin(const PartialMatrix& p) { return latin_scan(p); }

CheckVerdict is_latin(const Matrix& m) { return latin_scan(PartialMatrix::of(m)); }

CheckVerdict check_quadrangle_criterion(const Matrix& m) {
    const int n = m.n();
    // Key: first three values of a writing, per orientation. Role triples of
    // opposite orientations are geometrically incomparable, so each
    // orientation keeps its own table (nonabelian groups would otherwise be
    // rejected).
    struct Entry {
        int fourth;
        Quadrangle writing;
    };
    std::unordered_map<std::uint64_t, Entry> table;
    table.reserve(static_cast<std::size_t>(n) * n * n);
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1 + 1; r2 < n; ++r2)
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = c1 + 1; c2 < n; ++c2) {
                    const auto writings = writings_of(Quadrangle::from_block(r1, r2, c1, c2));
                    for (const Quadrangle& w : writings) {
                        const std::uint64_t key =
                            ((static_cast<std::uint64_t>(m.at(w.a())) * n + m.at(w.b())) * n +
                             m.at(w.c())) * 2 + (w.row_oriented() ? 1 : 0);
                        const int fourth = m.at(w.d());
                        auto [it, inserted] = table.try_emplace(key, Entry{fourth, w});
                        if (!inserted && it->second.fourth != fourth) {
                            return CheckVerdict::fail(QuadrangleConflict{
                                it->second.writing, w, it->second.fourth, fourth});
                        }
                    }
                }
    return CheckVerdict::ok();
}

CheckVerdict is_cayley(const Matrix& m) {
    if (CheckVerdict latin = is_latin(m); !latin) return latin;
    // Row 0 as headline, column 0 as sideline.
    return associativity_of_bordering(m, positions_in_column(m, 0), positions_in_row(m, 0));
}

CheckVerdict is_balanced_cayley(const Matrix& m) {
    if (CheckVerdict latin = is_latin(m); !latin) return latin;
    const int n = m.n();
    for (int k = 0; k < n; ++k) {
        bool symmetric_line = true;
        for (int i = 0; i < n; ++i) {
            if (m.at(k, i) != m.at(i, k)) {
                symmetric_line = false;
                break;
            }
        }
        if (!symmetric_line) continue;
        if (associativity_of_bordering(m, positions_in_column(m, k), positions_in_row(m, k))) {
            return CheckVerdict::ok();
        }
    }
    return CheckVerdict::fail(AxiomViolation{"balanced", {}});
}

CheckVerdict check_labeled_table(const Matrix& m, const std::vector<int>& headline,
                                 const std::vector<int>& sideline) {
    const int n = m.n();
    if (headline.size() != static_cast<std::size_t>(n) ||
        sideline.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("headline/sideline must have length n");
    }
    std::vector<int> col_of(n, -1), row_of(n, -1);
    for (int j = 0; j < n; ++j) {
        const int v = headline[j];
        if (v < 0 || v >= n || col_of[v] >= 0)
            throw std::invalid_argument("headline is not a permutation of the universe");
        col_of[v] = j;
    }
    for (int i = 0; i < n; ++i) {
        const int v = sideline[i];
        if (v < 0 || v >= n || row_of[v] >= 0)
            throw std::invalid_argument("sideline is not a permutation of the universe");
        row_of[v] = i;
    }
    if (CheckVerdict latin = is_latin(m); !latin) return latin;
    return associativity_of_bordering(m, row_of, col_of);
}

CayleyTable border(const Matrix& m, int headline_row, int sideline_col) {
    if (headline_row < 0 || headline_row >= m.n() || sideline_col < 0 || sideline_col >= m.n()) {
        throw std::invalid_argument("bordering row/column out of range");
    }
    if (!is_cayley(m)) {
        throw std::invalid_argument("cannot border: matrix is not a Cayley matrix");
    }
    return CayleyTable{m, m.row(headline_row), m.column(sideline_col)};
}

}  // namespace cayrec
