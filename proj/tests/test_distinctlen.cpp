#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "tiling/distinctlen.hpp"
#include "tiling/enumerate.hpp"
#include "tiling/geomfilter.hpp"

using namespace tiling;

namespace {

std::set<std::string> surface_names(const std::vector<SurfaceClass>& list) {
    std::set<std::string> out;
    for (const auto& s : list) out.insert(s.name());
    return out;
}

std::set<std::string> family_surfaces(int n) {
    std::set<std::string> out;
    for (const auto& m : two_tile_distinct_family(n)) out.insert(m.surface.name());
    return out;
}

}  // namespace

TEST_CASE("the orientable example fails the distinct-length conditions") {
    auto report = check_distinct_necessary(fixtures::eq2(2));
    CHECK_FALSE(report.ok());
    bool classes = false;
    for (const auto& v : report.violations) classes |= v.condition == "edge-classes";
    CHECK(classes);
}

TEST_CASE("the all-opposing cross pairing passes for n = 7") {
    std::vector<EdgePair> pairs;
    for (int i = 0; i < 7; ++i) pairs.push_back(fixtures::pr(i, 1, i, 2, +1));
    Diagram d = Diagram::make(7, 2, pairs);
    CHECK(check_distinct_necessary(d).ok());
    for (const auto& v : diagram_to_vertexset(d).vertices()) CHECK(v.degree() >= 4);
}

TEST_CASE("single-tile diagrams always fail") {
    Diagram d = Diagram::make(8, 1,
                              {fixtures::pr(0, 1, 2, 1, 1), fixtures::pr(1, 1, 4, 1, 1),
                               fixtures::pr(3, 1, 6, 1, -1), fixtures::pr(5, 1, 7, 1, 1)});
    auto report = check_distinct_necessary(d);
    CHECK_FALSE(report.ok());
    bool f_even = false;
    for (const auto& v : report.violations) f_even |= v.condition == "f-even";
    CHECK(f_even);
}

TEST_CASE("heptagon family: tau = 0 gives the orientable 3T2") {
    auto family = two_tile_distinct_family(7);
    int tau0 = 0;
    for (const auto& m : family) {
        if (m.twisted.tau() == 0) {
            ++tau0;
            CHECK(m.surface.chi == -4);
            CHECK(m.surface.orientable);
            CHECK(m.surface.name() == "3T2");
        }
    }
    CHECK(tau0 == 1);
}

TEST_CASE("heptagon family: tau = 1 gives 6P2, tau = 3 gives 4P2") {
    for (const auto& m : two_tile_distinct_family(7)) {
        if (m.twisted.tau() == 1) {
            CHECK(m.surface.chi == -4);
            CHECK_FALSE(m.surface.orientable);
            CHECK(m.surface.name() == "6P2");
        }
        if (m.twisted.tau() == 3) {
            CHECK(m.surface.chi == -2);
            CHECK(m.surface.name() == "4P2");
        }
    }
}

TEST_CASE("admissible surfaces for n = 7, 8, 9") {
    CHECK(surface_names(admissible_surfaces(7)) ==
          std::set<std::string>{"4P2", "5P2", "6P2", "3T2"});
    CHECK(surface_names(admissible_surfaces(8)) ==
          std::set<std::string>{"4P2", "5P2", "6P2", "7P2"});
    CHECK(surface_names(admissible_surfaces(9)) ==
          std::set<std::string>{"5P2", "6P2", "7P2", "8P2", "4T2"});
}

TEST_CASE("family surfaces equal the admissible list for n = 7..12") {
    for (int n = 7; n <= 12; ++n)
        CHECK(family_surfaces(n) == surface_names(admissible_surfaces(n)));
}

TEST_CASE("every family member satisfies the stated invariants") {
    for (int n = 7; n <= 12; ++n) {
        std::set<std::vector<std::uint32_t>> canon;
        for (const auto& m : two_tile_distinct_family(n)) {
            CHECK(edge_classes(m.diagram).count == n);
            CHECK(check_pair_conditions(m.diagram).ok());
            CHECK(check_distinct_necessary(m.diagram).ok());
            CHECK(m.diagram.f() == 2);
            int min_degree = 2 * n;
            for (const auto& v : diagram_to_vertexset(m.diagram).vertices())
                min_degree = std::min(min_degree, v.degree());
            CHECK(min_degree >= 4);
            // f <= -4chi/(n-4)
            CHECK(2 * (n - 4) <= -4 * m.surface.chi);
            // one member per equivalence class
            CHECK(canon.insert(m.diagram.encoding()).second);
            CHECK(canonical_form(m.diagram) == m.diagram);
        }
    }
}

TEST_CASE("vertex degrees match twice the gaps between twisted pairs") {
    for (const auto& m : two_tile_distinct_family(9)) {
        if (m.twisted.tau() == 0) continue;
        const auto& k = m.twisted.indices;
        std::multiset<int> expected;
        for (size_t p = 0; p < k.size(); ++p) {
            int next = (p + 1 < k.size()) ? k[p + 1] : k[0] + 9;
            expected.insert(2 * (next - k[p]));
        }
        std::multiset<int> got;
        for (const auto& v : diagram_to_vertexset(m.diagram).vertices())
            got.insert(v.degree());
        CHECK(got == expected);
        CHECK(static_cast<int>(got.size()) == m.twisted.tau());
    }
}

TEST_CASE("enumerated full-length records coincide with the family, n = 7") {
    // every admissible surface yields at least one n-class record and every
    // such record is one of the family diagrams
    std::set<std::vector<std::uint32_t>> family;
    for (const auto& m : two_tile_distinct_family(7)) family.insert(m.diagram.encoding());
    std::set<std::vector<std::uint32_t>> enumerated;
    for (const char* surface : {"4P2", "5P2", "6P2", "3T2"}) {
        EnumSpec spec;
        spec.n = 7;
        spec.f = 2;
        spec.target = surface;
        if (std::string(surface) == "3T2") {
            spec.mode = Mode::orientable;
            spec.split = 2;  // all-opposing diagrams have both tiles aligned
        }
        int full_len = 0;
        for (const auto& r : enumerate(spec)) {
            if (r.edge_class_count == 7) {
                ++full_len;
                enumerated.insert(canonical_form(r.diagram).encoding());
            }
        }
        CHECK(full_len >= 1);
    }
    CHECK(enumerated == family);
}

TEST_CASE("family members are angle-feasible") {
    for (const auto& m : two_tile_distinct_family(8)) {
        auto verdict =
            check_positive_solution(build_angle_system(diagram_to_vertexset(m.diagram)));
        CHECK(verdict.feasible);
    }
}
