#ifndef TILING_TOPOLOGY_HPP
#define TILING_TOPOLOGY_HPP

#include <optional>
#include <string>

#include "tiling/convert.hpp"
#include "tiling/diagram.hpp"

namespace tiling {

// A closed surface up to homeomorphism: (chi, orientability) suffices.
struct SurfaceClass {
    bool connected = true;
    int chi = 0;
    bool orientable = false;

    // "gT2" with g = (2-chi)/2, or "gP2" with g = 2-chi.
    std::string name() const;
    static std::optional<SurfaceClass> from_name(const std::string& name);

    friend bool operator==(const SurfaceClass& x, const SurfaceClass& y) {
        return x.connected == y.connected && x.chi == y.chi && x.orientable == y.orientable;
    }
    friend bool operator<(const SurfaceClass& x, const SurfaceClass& y) {
        if (x.orientable != y.orientable) return x.orientable < y.orientable;
        return x.chi > y.chi;  // larger genus later
    }
};

// True iff the tile graph (tiles joined by cross-tile pairs) is connected.
bool connectivity(const Diagram& d);

// chi = v - nf/2 + f with v from the vertex set. Orientable iff the tiles
// admit a 2-coloring eps with eps_p * eps_q = sign for every pair; a
// twisted pair inside one tile forces non-orientable. Throws on
// disconnected input.
SurfaceClass classify_surface(const Diagram& d);

// Which of the admissibility inequalities hold for (n, f, chi).
struct ParamReport {
    bool f_above_lower = false;     // f > -2chi/(n-2)
    bool f_within_upper = false;    // f <= -6chi/(n-6)
    bool n_bound = false;           // n <= 3(2-chi) odd, n <= 6(1-chi) even
    bool distinct_impossible = false;  // f > -4chi/(n-4): no all-distinct lengths
    bool admissible() const { return f_above_lower && f_within_upper && n_bound; }
};

// Preconditions n >= 7, chi < 0, f >= 1; throws std::domain_error outside.
ParamReport validate_params(int n, int f, int chi);

}  // namespace tiling

#endif
