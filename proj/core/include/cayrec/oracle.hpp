#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cayrec/grid.hpp"

namespace cayrec {

/// Which structure a completion must satisfy.
enum class CompletionMode { kLatin, kCayley, kBalancedCayley, kLabeledTable };

/// Brute-force completion query. The search is a depth-first backtrack over
/// holes in row-major order, branching on values in ascending order, pruning
/// by the partial-Latin constraint only; full candidates are then filtered by
/// the mode's checker. Budget is counted in value placements.
struct CompletionQuery {
    PartialMatrix partial;
    CompletionMode mode = CompletionMode::kLatin;
    // kLabeledTable only: the fixed column and row labels.
    std::vector<int> headline;
    std::vector<int> sideline;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t budget = 10'000'000;

    explicit CompletionQuery(PartialMatrix p) : partial(std::move(p)) {}
};

/// exhausted is true only when the search ran to completion within budget and
/// below limit; the completions are then the entire solution set.
struct CompletionSet {
    std::vector<Matrix> completions;
    bool exhausted = false;
};

CompletionSet complete_all(const CompletionQuery& q);

struct CompletionCount {
    std::uint64_t count = 0;
    bool exhausted = false;
};

/// complete_all with unlimited limit, counting instead of storing.
CompletionCount count_completions(const CompletionQuery& q);

/// Count header line plus the completions in grid format separated by blank
/// lines.
std::string serialize_completions(const CompletionSet& s);

/// Hole sets of size k on which quadrangle-only reconstruction stalls: a
/// saturation pass (repeat find_fill over all holes until no progress) fails
/// to complete the matrix, so no fill order can succeed.
struct StuckHoleSets {
    std::vector<std::vector<Cell>> stuck_sets;
    bool exhausted = false;
};

/// Enumerates k-subsets of m's cells in lexicographic order when their count
/// fits the budget (budget is in subsets examined); otherwise examines
/// `budget` seeded random samples and reports exhausted = false.
StuckHoleSets find_stuck_hole_sets(const Matrix& m, int k, std::uint64_t budget,
                                   std::uint64_t seed = 0);

}  // namespace cayrec
