#include "tiling/distinctlen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tiling/geomfilter.hpp"

namespace tiling {

ValidityReport check_distinct_necessary(const Diagram& d) {
    ValidityReport report;
    const EdgeClassPartition part = edge_classes(d);
    if (part.count < d.n()) {
        std::ostringstream os;
        os << part.count << " edge classes < " << d.n();
        report.violations.push_back({"edge-classes", os.str()});
    }

    bool f_even = d.f() % 2 == 0;
    bool shape_ok = true;
    for (const auto& p : d.pairs())
        if (p.a.tile == p.b.tile || p.a.label != p.b.label) shape_ok = false;
    int min_degree = d.n() * d.f();
    for (const auto& v : diagram_to_vertexset(d).vertices())
        min_degree = std::min(min_degree, v.degree());

    if (part.count == d.n()) {
        // These follow whenever the class count is full; a failure here
        // means the invariants themselves are broken.
        if (!f_even) throw std::logic_error("distinct lengths with odd f");
        if (!shape_ok) throw std::logic_error("distinct lengths with a label-merging pair");
        if (min_degree == 3) throw std::logic_error("distinct lengths with a degree-3 vertex");
    } else {
        if (!f_even) report.violations.push_back({"f-even", "f = " + std::to_string(d.f())});
        if (!shape_ok)
            report.violations.push_back({"pair-shape", "a pair merges two edge labels"});
        if (min_degree == 3)
            report.violations.push_back({"degree-3", "a degree-3 vertex forces equal lengths"});
    }
    return report;
}

namespace {

std::uint32_t rotate_mask(std::uint32_t mask, int by, int n) {
    by %= n;
    return ((mask << by) | (mask >> (n - by))) & ((1u << n) - 1);
}

std::uint32_t reflect_mask(std::uint32_t mask, int n) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) out |= 1u << (n - 1 - i);
    return out;
}

// Least rotation/reflection image; the diagram group acts on twisted index
// sets exactly as the dihedral group of Z_n.
std::uint32_t dihedral_min(std::uint32_t mask, int n) {
    std::uint32_t best = mask;
    std::uint32_t refl = reflect_mask(mask, n);
    for (int c = 0; c < n; ++c) {
        best = std::min(best, rotate_mask(mask, c, n));
        best = std::min(best, rotate_mask(refl, c, n));
    }
    return best;
}

}  // namespace

std::vector<FamilyMember> two_tile_distinct_family(int n) {
    if (n < 7) throw error("two_tile_distinct_family: n must be >= 7");
    if (n > 30) throw error("two_tile_distinct_family: n too large");
    const std::uint32_t all = (1u << n) - 1;
    std::vector<FamilyMember> out;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        // Twisted pairs may not be cyclically adjacent.
        if (mask & rotate_mask(mask, 1, n)) continue;
        if (mask == 0 && n % 2 == 0) continue;  // orientable case exists only for odd n
        if (dihedral_min(mask, n) != mask) continue;

        FamilyMember m;
        m.twisted.n = n;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) m.twisted.indices.push_back(i);
        std::vector<EdgePair> pairs;
        for (int i = 0; i < n; ++i)
            pairs.emplace_back(EdgeRef{i, 1}, EdgeRef{i, 2}, (mask & (1u << i)) ? -1 : +1);
        m.diagram = canonical_form(Diagram::make(n, 2, std::move(pairs)));
        m.surface = classify_surface(m.diagram);

        const int tau = m.twisted.tau();
        if (tau > 0) {
            if (m.surface.chi != tau - n + 2 || m.surface.orientable)
                throw std::logic_error("family member disagrees with chi = tau - n + 2");
        } else {
            if (m.surface.chi != 3 - n || !m.surface.orientable)
                throw std::logic_error("family member disagrees with chi = 3 - n");
        }
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const FamilyMember& x, const FamilyMember& y) {
        if (x.twisted.tau() != y.twisted.tau()) return x.twisted.tau() < y.twisted.tau();
        return x.twisted.indices < y.twisted.indices;
    });
    return out;
}

std::vector<SurfaceClass> admissible_surfaces(int n) {
    if (n < 7) throw error("admissible_surfaces: n must be >= 7");
    std::vector<SurfaceClass> out;
    auto cross_caps = [](int g) { return SurfaceClass{true, 2 - g, false}; };
    if (n % 2 == 0) {
        int m = n / 2;
        for (int g = m; g <= 2 * m - 1; ++g) out.push_back(cross_caps(g));
    } else {
        int m = (n + 1) / 2;
        for (int g = m; g <= 2 * m - 2; ++g) out.push_back(cross_caps(g));
        out.push_back(SurfaceClass{true, 2 - 2 * (m - 1), true});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tiling
