#include "cayrec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cayrec/checks.hpp"
#include "cayrec/rand.hpp"
#include "cayrec/reconstruct.hpp"
#include "cayrec/text_io.hpp"

namespace cayrec {

namespace {

struct Searcher {
    PartialMatrix work;
    std::vector<Cell> holes;
    std::vector<std::vector<char>> row_used;
    std::vector<std::vector<char>> col_used;
    std::uint64_t budget;
    bool budget_hit = false;
    bool limit_hit = false;
    // Returns false once the caller has seen enough completions.
    std::function<bool(const Matrix&)> emit;

    explicit Searcher(const PartialMatrix& p, std::uint64_t budget_, std::function<bool(const Matrix&)> emit_)
        : work(p), holes(p.holes()), budget(budget_), emit(std::move(emit_)) {
        const int n = p.n();
        row_used.assign(n, std::vector<char>(n, 0));
        col_used.assign(n, std::vector<char>(n, 0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const int v = p.at(r, c);
                if (v == PartialMatrix::kHole) continue;
                row_used[r][v] = 1;
                col_used[c][v] = 1;
            }
    }

    // True when the already-filled part duplicates a value on some line; no
    // Latin completion exists then.
    bool seed_invalid() const { return !is_latin(work).pass; }

    void dfs(std::size_t i) {
        if (i == holes.size()) {
            if (!emit(work.to_matrix())) limit_hit = true;
            return;
        }
        const auto [r, c] = holes[i];
        for (int v = 0; v < work.n(); ++v) {
            if (row_used[r][v] || col_used[c][v]) continue;
            if (budget == 0) {
                budget_hit = true;
                return;
            }
            --budget;
            row_used[r][v] = col_used[c][v] = 1;
            work.set({r, c}, v);
            dfs(i + 1);
            work.clear({r, c});
            row_used[r][v] = col_used[c][v] = 0;
            if (budget_hit || limit_hit) return;
        }
    }
};

std::function<bool(const Matrix&)> checker_for(const CompletionQuery& q) {
    switch (q.mode) {
        case CompletionMode::kLatin:
            return [](const Matrix& m) { return is_latin(m).pass; };
        case CompletionMode::kCayley:
            return [](const Matrix& m) { return is_cayley(m).pass; };
        case CompletionMode::kBalancedCayley:
            return [](const Matrix& m) { return is_balanced_cayley(m).pass; };
        case CompletionMode::kLabeledTable: {
            const auto headline = q.headline;
            const auto sideline = q.sideline;
            return [headline, sideline](const Matrix& m) {
                return check_labeled_table(m, headline, sideline).pass;
            };
        }
    }
    throw std::invalid_argument("unknown completion mode");
}

void validate_query(const CompletionQuery& q) {
    if (q.limit < 1) throw std::invalid_argument("completion limit must be >= 1");
    if (q.budget < 1) throw std::invalid_argument("search budget must be >= 1");
    if (q.mode == CompletionMode::kLabeledTable) {
        if (q.headline.empty() || q.sideline.empty()) {
            throw std::invalid_argument("labeled-table mode needs headline and sideline");
        }
    } else if (!q.headline.empty() || !q.sideline.empty()) {
        throw std::invalid_argument("headline/sideline only apply to labeled-table mode");
    }
}

// Saturation pass: repeat find_fill over all remaining holes until no
// progress. Completion then is order-independent; a stall means no fill
// order can complete the matrix by quadrangle criterion alone.
bool saturates(const PartialMatrix& punched) {
    PartialMatrix work = punched;
    std::vector<Cell> remaining = work.holes();
    bool progress = true;
    while (progress && !remaining.empty()) {
        progress = false;
        std::vector<Cell> next;
        for (Cell hole : remaining) {
            const FillResult res = find_fill(work, hole);
            if (res.status == FillStatus::kFilled) {
                work.set(hole, res.fill->value);
                progress = true;
            } else {
                next.push_back(hole);
            }
        }
        remaining = std::move(next);
    }
    return remaining.empty();
}

// True when C(n, k) <= cap. Conservatively false when the running product
// would overflow; such counts are far beyond any usable budget anyway.
bool combination_count_fits(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return true;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t factor = n - k + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / factor) return false;
        result = result * factor / i;
        if (result > cap) return false;
    }
    return true;
}

}  // namespace

CompletionSet complete_all(const CompletionQuery& q) {
    validate_query(q);
    CompletionSet out;
    const auto check = checker_for(q);
    Searcher s(q.partial, q.budget, [&](const Matrix& m) {
        if (check(m)) out.completions.push_back(m);
        return out.completions.size() < q.limit;
    });
    if (s.seed_invalid()) {
        out.exhausted = true;
        return out;
    }
    s.dfs(0);
    out.exhausted = !s.budget_hit && !s.limit_hit;
    return out;
}

CompletionCount count_completions(const CompletionQuery& q) {
    validate_query(q);
    CompletionCount out;
    const auto check = checker_for(q);
    Searcher s(q.partial, q.budget, [&](const Matrix& m) {
        if (check(m)) ++out.count;
        return true;
    });
    if (s.seed_invalid()) {
        out.exhausted = true;
        return out;
    }
    s.dfs(0);
    out.exhausted = !s.budget_hit;
    return out;
}

std::string serialize_completions(const CompletionSet& s) {
    std::string out = "count=" + std::to_string(s.completions.size()) +
                      " exhausted=" + (s.exhausted ? "true" : "false") + "\n";
    for (std::size_t i = 0; i < s.completions.size(); ++i) {
        if (i > 0) out += "\n";
        out += serialize_grid(s.completions[i]);
    }
    return out;
}

StuckHoleSets find_stuck_hole_sets(const Matrix& m, int k, std::uint64_t budget,
                                   std::uint64_t seed) {
    const int n = m.n();
    const std::uint64_t cell_count = static_cast<std::uint64_t>(n) * n;
    if (k < 1 || static_cast<std::uint64_t>(k) > cell_count) {
        throw std::invalid_argument("hole count out of range");
    }
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");

    auto cells_of = [&](const std::vector<int>& flat) {
        std::vector<Cell> cells;
        cells.reserve(flat.size());
        for (int idx : flat) cells.push_back({idx / n, idx % n});
        return cells;
    };

    StuckHoleSets out;
    auto examine = [&](const std::vector<int>& subset) {
        const auto cells = cells_of(subset);
        if (!saturates(punch(m, cells))) out.stuck_sets.push_back(cells);
    };

    if (combination_count_fits(cell_count, k, budget)) {
        // Exhaustive lexicographic enumeration of k-combinations.
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i) subset[i] = i;
        while (true) {
            examine(subset);
            int i = k - 1;
            while (i >= 0 && subset[i] == static_cast<int>(cell_count) - k + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
        out.exhausted = true;
        return out;
    }

    // Too many subsets: examine `budget` seeded random samples instead.
    std::mt19937_64 rng(seed);
    std::vector<int> all(cell_count);
    for (std::uint64_t i = 0; i < cell_count; ++i) all[i] = static_cast<int>(i);
    std::vector<int> subset(k);
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        for (int i = 0; i < k; ++i) {
            const auto j = i + bounded(rng, cell_count - i);
            std::swap(all[i], all[j]);
            subset[i] = all[i];
        }
        std::sort(subset.begin(), subset.end());
        examine(subset);
    }
    out.exhausted = false;
    return out;
}

}  // namespace cayrec
