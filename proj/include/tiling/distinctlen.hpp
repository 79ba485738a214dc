#ifndef TILING_DISTINCTLEN_HPP
#define TILING_DISTINCTLEN_HPP

#include <vector>

#include "tiling/convert.hpp"
#include "tiling/topology.hpp"

namespace tiling {

// The positions of the twisted pairs in a two-tile diagram whose pairs are
// all (i_1 i_2): cyclically non-adjacent indices in Z_n.
struct TwistedIndexSet {
    int n = 0;
    std::vector<int> indices;  // strictly increasing, gaps >= 2 cyclically
    int tau() const { return static_cast<int>(indices.size()); }
};

// Necessary conditions for all n edge lengths distinct. Passes iff the
// edge-class partition has n classes; in that case f even, every pair of
// shape (i_p i_q) with p != q, and no degree-3 vertex must follow, and a
// failure of any of those is an internal error.
ValidityReport check_distinct_necessary(const Diagram& d);

struct FamilyMember {
    TwistedIndexSet twisted;
    Diagram diagram;
    SurfaceClass surface;
};

// The complete two-tile all-distinct-lengths family for n >= 7, one member
// per equivalence class: pairs (i_1 i_2), twisted exactly on a cyclically
// non-adjacent index set. tau >= 1 gives chi = tau - n + 2, non-orientable;
// tau = 0 (odd n) gives chi = 3 - n, orientable. Both facts are re-checked
// against the classifier.
std::vector<FamilyMember> two_tile_distinct_family(int n);

// The surfaces admitting a two-tile tiling with all n lengths distinct:
// n = 2m even: gP2 for m <= g <= 2m-1;
// n = 2m-1 odd: gP2 for m <= g <= 2m-2, plus (m-1)T2.
std::vector<SurfaceClass> admissible_surfaces(int n);

}  // namespace tiling

#endif
