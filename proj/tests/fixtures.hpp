#ifndef TILING_TESTS_FIXTURES_HPP
#define TILING_TESTS_FIXTURES_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <vector>

#include "tiling/convert.hpp"
#include "tiling/diagram.hpp"

namespace fixtures {

using tiling::Diagram;
using tiling::EdgePair;
using tiling::EdgeRef;

inline EdgePair pr(int la, int ta, int lb, int tb, int sign) {
    return EdgePair(EdgeRef{la, ta}, EdgeRef{lb, tb}, sign);
}

// The worked 7-pair double planar diagram on two heptagons whose surface is
// 3P2: ((0_1 3_1)+, (6_2 2_2)+, (2_1 0_2)-, (4_1 3_2)+, (6_1 4_2)-,
// (1_1 1_2)-, (5_1 5_2)+).
inline Diagram dpd1() {
    return Diagram::make(7, 2,
                         {pr(0, 1, 3, 1, +1), pr(6, 2, 2, 2, +1), pr(2, 1, 0, 2, -1),
                          pr(4, 1, 3, 2, +1), pr(6, 1, 4, 2, -1), pr(1, 1, 1, 2, -1),
                          pr(5, 1, 5, 2, +1)});
}

inline int split_sign(int ta, int tb, int s) {
    return ((ta <= s) == (tb <= s)) ? +1 : -1;
}

inline Diagram with_split(int n, const std::vector<std::array<int, 4>>& unsigned_pairs,
                          int split) {
    std::vector<EdgePair> pairs;
    for (const auto& [la, ta, lb, tb] : unsigned_pairs)
        pairs.push_back(pr(la, ta, lb, tb, split_sign(ta, tb, split)));
    return Diagram::make(n, 2, std::move(pairs));
}

// The orientable double planar diagram (0_1 2_1, 4_1 6_1, 0_2 2_2, 4_2 6_2,
// 1_1 1_2, 3_1 3_2, 5_1 5_2), signed by the orientation split.
inline Diagram eq2(int split) {
    return with_split(7,
                      {{{0, 1, 2, 1}},
                       {{4, 1, 6, 1}},
                       {{0, 2, 2, 2}},
                       {{4, 2, 6, 2}},
                       {{1, 1, 1, 2}},
                       {{3, 1, 3, 2}},
                       {{5, 1, 5, 2}}},
                      split);
}

// The companion pairing whose two split versions land on different
// surfaces: (0_1 2_1, 1_1 4_1, 0_2 3_2, 1_2 5_2, 3_1 2_2, 5_1 4_2,
// 6_1 6_2).
inline Diagram eq3(int split) {
    return with_split(7,
                      {{{0, 1, 2, 1}},
                       {{1, 1, 4, 1}},
                       {{0, 2, 3, 2}},
                       {{1, 2, 5, 2}},
                       {{3, 1, 2, 2}},
                       {{5, 1, 4, 2}},
                       {{6, 1, 6, 2}}},
                      split);
}

// The boxed all-opposing diagram whose angle sums force a negative angle:
// (0_1 3_1, 3_2 6_2, 1_1 1_2, 2_1 2_2, 4_1 4_2, 5_1 5_2, 6_1 0_2), s=2.
inline Diagram boxed() {
    return with_split(7,
                      {{{0, 1, 3, 1}},
                       {{3, 2, 6, 2}},
                       {{1, 1, 1, 2}},
                       {{2, 1, 2, 2}},
                       {{4, 1, 4, 2}},
                       {{5, 1, 5, 2}},
                       {{6, 1, 0, 2}}},
                      2);
}

inline tiling::Vertex vx(std::vector<tiling::SignedCorner> cyc) {
    return tiling::Vertex(std::move(cyc));
}

inline tiling::SignedCorner sc(int label, int tile, int sign) {
    return tiling::SignedCorner{label, tile, sign};
}

// Rejection-samples a random signed perfect matching that passes the pair
// conditions. nf must be even.
inline std::optional<Diagram> random_valid_diagram(std::mt19937& rng, int n, int f) {
    const int E = n * f;
    std::vector<int> edges(E);
    for (int i = 0; i < E; ++i) edges[i] = i;
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::shuffle(edges.begin(), edges.end(), rng);
        std::vector<EdgePair> pairs;
        for (int i = 0; i < E; i += 2) {
            int sign = (rng() & 1) ? +1 : -1;
            pairs.push_back(EdgePair(tiling::edge_from_index(edges[i], n),
                                     tiling::edge_from_index(edges[i + 1], n), sign));
        }
        Diagram d = Diagram::make(n, f, std::move(pairs));
        if (tiling::check_pair_conditions(d).ok()) return d;
    }
    return std::nullopt;
}

}  // namespace fixtures

#endif
