#ifndef TILING_DIAGRAM_HPP
#define TILING_DIAGRAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tiling/error.hpp"

namespace tiling {

// An edge of a labeled tile: edge `label` of tile `tile` joins corners
// `label` and `label+1` (mod n). Labels are 0-based, tiles 1-based,
// matching the worked examples exactly.
struct EdgeRef {
    int label = 0;
    int tile = 1;

    friend bool operator==(const EdgeRef& x, const EdgeRef& y) {
        return x.label == y.label && x.tile == y.tile;
    }
    friend bool operator!=(const EdgeRef& x, const EdgeRef& y) { return !(x == y); }
    // Total order: tile first, then label.
    friend bool operator<(const EdgeRef& x, const EdgeRef& y) {
        if (x.tile != y.tile) return x.tile < y.tile;
        return x.label < y.label;
    }
};

struct CornerRef {
    int label = 0;
    int tile = 1;

    friend bool operator==(const CornerRef& x, const CornerRef& y) {
        return x.label == y.label && x.tile == y.tile;
    }
    friend bool operator<(const CornerRef& x, const CornerRef& y) {
        if (x.tile != y.tile) return x.tile < y.tile;
        return x.label < y.label;
    }
};

// An unordered glued edge pair with its decoration: sign +1 glues the edges
// the opposing way, -1 the twisted way. Stored with the smaller EdgeRef
// first.
struct EdgePair {
    EdgeRef a;
    EdgeRef b;
    int sign = +1;

    EdgePair() = default;
    EdgePair(EdgeRef x, EdgeRef y, int s) : a(x), b(y), sign(s) {
        if (b < a) std::swap(a, b);
    }

    friend bool operator==(const EdgePair& x, const EdgePair& y) {
        return x.a == y.a && x.b == y.b && x.sign == y.sign;
    }
    friend bool operator<(const EdgePair& x, const EdgePair& y);
};

// Comparison key for a sign: opposing sorts before twisted.
inline int sign_key(int sign) { return sign > 0 ? 0 : 1; }

inline bool operator<(const EdgePair& x, const EdgePair& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    if (!(x.b == y.b)) return x.b < y.b;
    return sign_key(x.sign) < sign_key(y.sign);
}

// Dense index of an edge: tile-major, so index order equals EdgeRef order.
inline int edge_index(const EdgeRef& e, int n) { return (e.tile - 1) * n + e.label; }
inline EdgeRef edge_from_index(int idx, int n) { return EdgeRef{idx % n, idx / n + 1}; }

// A signed perfect matching on the n*f edges of f congruent n-gons.
// Construction checks only the matching structure; connectivity and the
// degree conditions are separate predicates (see convert / topology).
class Diagram {
  public:
    Diagram() = default;

    // Validates ranges, a != b, and that every edge occurs in exactly one
    // pair. Normalizes pair order and sorts the pair list.
    static Diagram make(int n, int f, std::vector<EdgePair> pairs);

    int n() const { return n_; }
    int f() const { return f_; }
    const std::vector<EdgePair>& pairs() const& { return pairs_; }
    std::vector<EdgePair> pairs() && { return std::move(pairs_); }

    // Packed encoding: one uint32 per pair, (a_idx, b_idx, sign_key),
    // sorted. Two diagrams are equal iff their encodings are equal.
    std::vector<std::uint32_t> encoding() const;

    friend bool operator==(const Diagram& x, const Diagram& y) {
        return x.n_ == y.n_ && x.f_ == y.f_ && x.pairs_ == y.pairs_;
    }
    friend bool operator!=(const Diagram& x, const Diagram& y) { return !(x == y); }
    friend bool operator<(const Diagram& x, const Diagram& y) {
        return x.encoding() < y.encoding();
    }

  private:
    int n_ = 0;
    int f_ = 0;
    std::vector<EdgePair> pairs_;
};

enum class Mode { general, orientable };

// A relabeling of the prototile combined with a relabeling of the tiles.
// Rotation (reflect=false): corner i -> shift+i, edge i -> shift+i.
// Reflection (reflect=true): corner i -> shift-i, edge i -> shift-i-1.
// Signs are preserved. group_swap marks the orientable-mode elements that
// exchange the two orientation groups (only valid when 2s = f).
struct SymmetryElement {
    int shift = 0;
    bool reflect = false;
    std::vector<int> tile_perm;  // tile p -> tile_perm[p-1], 1-based images
    bool group_swap = false;
};

Diagram apply_symmetry(const Diagram& d, const SymmetryElement& g);

// The full relabeling group: 2n prototile relabelings x f! tile
// permutations.
std::vector<SymmetryElement> symmetry_group(int n, int f);

// The orientable-mode group for a split with |T+| = s: tile permutations
// preserve {1..s} and {s+1..f}, plus the exchanging permutations when
// 2s = f.
std::vector<SymmetryElement> symmetry_group_orientable(int n, int f, int s);

// Dense edge-index map of a symmetry element (tile-major indexing).
std::vector<std::uint8_t> edge_map(const SymmetryElement& g, int n, int f);

// Inverse of Diagram::encoding().
Diagram diagram_from_encoding(const std::vector<std::uint32_t>& enc, int n, int f);

// Minimum of the orbit of d under the mode's group, by the packed pair-list
// encoding. split is only used in orientable mode.
Diagram canonical_form(const Diagram& d, Mode mode = Mode::general, int split = -1);

// Same, over a precomputed group (cheaper in bulk use).
Diagram canonical_form(const Diagram& d, const std::vector<SymmetryElement>& group);

}  // namespace tiling

#endif
