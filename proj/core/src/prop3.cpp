#include "cayrec/prop3.hpp"

#include <array>
#include <stdexcept>

namespace cayrec {

namespace {

std::vector<char> membership(const GroupTable& g, const std::vector<ElementPair>& t) {
    const int n = g.order();
    std::vector<char> in_t(static_cast<std::size_t>(n) * n, 0);
    for (auto [a, b] : t) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("element pair outside the group");
        in_t[static_cast<std::size_t>(a) * n + b] = 1;
    }
    return in_t;
}

}  // namespace

std::optional<Prop3Witness> prop3_witness(const GroupTable& g, const std::vector<ElementPair>& t,
                                          ElementPair pivot) {
    const int n = g.order();
    if (static_cast<int>(t.size()) > n - 1) {
        throw std::invalid_argument("excluded set may have at most n-1 pairs");
    }
    const auto in_t = membership(g, t);
    const auto [g1, h1] = pivot;
    if (g1 < 0 || g1 >= n || h1 < 0 || h1 >= n || !in_t[static_cast<std::size_t>(g1) * n + h1]) {
        throw std::invalid_argument("pivot must belong to the excluded set");
    }

    for (int g2 = 0; g2 < n; ++g2) {
        if (g2 == g1) continue;
        for (int h2 = 0; h2 < n; ++h2) {
            if (h2 == h1) continue;
            // The three non-pivot cells of the unprimed pattern must avoid T.
            if (in_t[static_cast<std::size_t>(g1) * n + h2] ||
                in_t[static_cast<std::size_t>(g2) * n + h1] ||
                in_t[static_cast<std::size_t>(g2) * n + h2]) {
                continue;
            }
            for (int g1p = 0; g1p < n; ++g1p) {
                // (ii) forces the rest once g1' is chosen.
                const int h1p = g.op(g.inverse(g1p), g.op(g1, h1));
                const int g2p = g.op(g.op(g2, h1), g.inverse(h1p));
                const int h2p = g.op(g.inverse(g1p), g.op(g1, h2));
                if (g.op(g2p, h2p) != g.op(g2, h2)) continue;
                if (g1p == g2p || h1p == h2p) continue;  // rest of (i)
                // (iii): primed cells avoid T entirely...
                if (in_t[static_cast<std::size_t>(g1p) * n + h1p] ||
                    in_t[static_cast<std::size_t>(g1p) * n + h2p] ||
                    in_t[static_cast<std::size_t>(g2p) * n + h1p] ||
                    in_t[static_cast<std::size_t>(g2p) * n + h2p]) {
                    continue;
                }
                // ... and the two patterns share no cell, so all eight cells
                // are pairwise distinct.
                bool overlap = false;
                for (int gp : {g1p, g2p}) {
                    if (gp != g1 && gp != g2) continue;
                    for (int hp : {h1p, h2p}) {
                        if (hp == h1 || hp == h2) overlap = true;
                    }
                }
                if (overlap) continue;
                return Prop3Witness{g2, h2, g1p, g2p, h1p, h2p};
            }
        }
    }
    return std::nullopt;
}

bool validate_prop3_witness(const GroupTable& g, const std::vector<ElementPair>& t,
                            ElementPair pivot, const Prop3Witness& w) {
    const int n = g.order();
    const auto in_t = membership(g, t);
    const auto [g1, h1] = pivot;
    const std::array<int, 2> gs{g1, w.g2}, hs{h1, w.h2};
    const std::array<int, 2> gps{w.g1p, w.g2p}, hps{w.h1p, w.h2p};
    for (int v : {g1, h1, w.g2, w.h2, w.g1p, w.g2p, w.h1p, w.h2p}) {
        if (v < 0 || v >= n) return false;
    }
    // (i)
    if (g1 == w.g2 || h1 == w.h2 || w.g1p == w.g2p || w.h1p == w.h2p) return false;
    // (ii): all four products, recomputed literally.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (g.op(gs[i], hs[j]) != g.op(gps[i], hps[j])) return false;
    // (iii): eight pairwise distinct cells meeting T exactly in the pivot.
    std::vector<ElementPair> cells;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cells.emplace_back(gs[i], hs[j]);
            cells.emplace_back(gps[i], hps[j]);
        }
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i] == cells[j]) return false;
    for (const auto& cell : cells) {
        const bool excluded = in_t[static_cast<std::size_t>(cell.first) * n + cell.second];
        if (excluded && cell != pivot) return false;
    }
    return true;
}

}  // namespace cayrec
