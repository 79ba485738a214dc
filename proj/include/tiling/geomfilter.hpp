#ifndef TILING_GEOMFILTER_HPP
#define TILING_GEOMFILTER_HPP

#include <vector>

#include "tiling/convert.hpp"
#include "tiling/rational_lp.hpp"

namespace tiling {

// The angle-sum equalities: one row per vertex, coefficient c[i] counting
// how often corner label i (over all tiles) occurs at that vertex, each row
// summing to one full turn (2pi is normalized to 1).
struct AngleSystem {
    int n = 0;
    std::vector<std::vector<int>> rows;
};

AngleSystem build_angle_system(const VertexSet& v);

struct FeasibilityVerdict {
    bool feasible = false;
    std::vector<Rational> witness;  // strictly positive, exact, in units of 2pi
};

// Decides exactly whether the system admits a strictly positive solution:
// maximize t subject to Ax = 1, x_i >= t; feasible iff the optimum is
// positive. The returned witness re-satisfies every row with zero residue.
FeasibilityVerdict check_positive_solution(const AngleSystem& sys);

// The partition of the n edge labels generated by "paired edges have equal
// length": congruence makes length a function of the label alone, and a
// pair (i_p, j_q) forces labels i and j equal.
struct EdgeClassPartition {
    int n = 0;
    std::vector<int> class_of;  // label -> class id (smallest member)
    int count = 0;
    std::vector<std::vector<int>> classes() const;
};

EdgeClassPartition edge_classes(const Diagram& d);

}  // namespace tiling

#endif
