#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cayrec/group.hpp"

namespace cayrec {

/// Element pair (g, h) of G x G, i.e. a cell of the abstract multiplication
/// table addressed by elements instead of enumeration positions.
using ElementPair = std::pair<int, int>;

/// Witness for the group-theoretic reconstruction statement: together with a
/// pivot (g1, h1) it describes two disjoint 2x2 product patterns with equal
/// products,
///
///   (i)   g1 != g2, h1 != h2, g1' != g2', h1' != h2',
///   (ii)  gi * hj == gi' * hj'  for all i, j in {1, 2},
///   (iii) of the eight (pairwise distinct) cells {(gi, hj), (gi', hj')},
///         only the pivot lies in the excluded set T.
struct Prop3Witness {
    int g2 = 0;
    int h2 = 0;
    int g1p = 0;
    int g2p = 0;
    int h1p = 0;
    int h2p = 0;
};

/// Exhaustive deterministic search: lexicographic over (g2, h2, g1'); h1',
/// g2', h2' are then forced by (ii) via inverses, and the first candidate
/// satisfying (i)-(iii) is returned.
///
/// Preconditions (|t| <= |G|-1, pivot in t) are enforced; returns nullopt
/// when no witness exists.
std::optional<Prop3Witness> prop3_witness(const GroupTable& g, const std::vector<ElementPair>& t,
                                          ElementPair pivot);

/// Validates (i)-(iii) directly from the definitions; independent of the
/// search above (all four products of each pattern are recomputed literally).
bool validate_prop3_witness(const GroupTable& g, const std::vector<ElementPair>& t,
                            ElementPair pivot, const Prop3Witness& w);

}  // namespace cayrec
