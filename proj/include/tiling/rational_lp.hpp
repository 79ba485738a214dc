#ifndef TILING_RATIONAL_LP_HPP
#define TILING_RATIONAL_LP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tiling {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" with the denominator always written, e.g. "1/6", "0/1".
std::string rational_to_string(const Rational& q);

struct LpSolution {
    enum class Status { infeasible, optimal, unbounded };
    Status status = Status::infeasible;
    Rational value;            // objective at optimum
    std::vector<Rational> z;   // primal solution (optimal only)
};

// Maximize c.z subject to M z = b, z >= 0, in exact rational arithmetic.
// Two-phase simplex with Bland's rule, so it always terminates. Requires
// b >= 0 componentwise.
LpSolution solve_lp_max(const std::vector<std::vector<Rational>>& M,
                        const std::vector<Rational>& b,
                        const std::vector<Rational>& c);

}  // namespace tiling

#endif
