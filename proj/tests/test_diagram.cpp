#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "tiling/diagram.hpp"
#include "tiling/json_io.hpp"

using namespace tiling;
using fixtures::pr;

TEST_CASE("identity rotation fixes any diagram") {
    Diagram d = fixtures::dpd1();
    SymmetryElement id{0, false, {1, 2}, false};
    CHECK(apply_symmetry(d, id) == d);
}

TEST_CASE("reflection applied twice is the identity") {
    Diagram d = fixtures::dpd1();
    for (int c = 0; c < 7; ++c) {
        SymmetryElement refl{c, true, {1, 2}, false};
        CHECK(apply_symmetry(apply_symmetry(d, refl), refl) == d);
    }
}

TEST_CASE("tile swap fixes the symmetric orientable example") {
    Diagram d = fixtures::eq2(2);
    SymmetryElement swap{0, false, {2, 1}, false};
    CHECK(apply_symmetry(d, swap) == d);
}

TEST_CASE("apply_symmetry rejects a wrong-sized permutation") {
    Diagram d = fixtures::dpd1();
    SymmetryElement bad{0, false, {1}, false};
    CHECK_THROWS_AS(apply_symmetry(d, bad), std::invalid_argument);
    SymmetryElement notperm{0, false, {1, 1}, false};
    CHECK_THROWS_AS(apply_symmetry(d, notperm), std::invalid_argument);
}

TEST_CASE("the relabelings form a group acting on diagrams") {
    std::mt19937 rng(20240811);
    auto group = symmetry_group(8, 2);
    for (int trial = 0; trial < 12; ++trial) {
        auto d = fixtures::random_valid_diagram(rng, 8, 2);
        REQUIRE(d.has_value());
        const auto& g1 = group[rng() % group.size()];
        const auto& g2 = group[rng() % group.size()];
        // closure: g2 after g1 equals some single element of the group
        Diagram composed = apply_symmetry(apply_symmetry(*d, g1), g2);
        bool closed = false;
        for (const auto& h : group) {
            if (apply_symmetry(*d, h) == composed) {
                closed = true;
                break;
            }
        }
        CHECK(closed);
        // inverses: some element maps the image back
        bool inverted = false;
        Diagram img = apply_symmetry(*d, g1);
        for (const auto& h : group) {
            if (apply_symmetry(img, h) == *d) {
                inverted = true;
                break;
            }
        }
        CHECK(inverted);
    }
}

TEST_CASE("canonical form is invariant under every group element") {
    std::mt19937 rng(7);
    auto group = symmetry_group(7, 2);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = fixtures::random_valid_diagram(rng, 7, 2);
        REQUIRE(d.has_value());
        Diagram canon = canonical_form(*d);
        for (const auto& g : group) CHECK(canonical_form(apply_symmetry(*d, g)) == canon);
        CHECK(canonical_form(canon) == canon);  // idempotent
    }
}

TEST_CASE("diagrams differing only by a tile swap share a canonical form") {
    Diagram d = fixtures::dpd1();
    SymmetryElement swap{0, false, {2, 1}, false};
    CHECK(canonical_form(apply_symmetry(d, swap)) == canonical_form(d));
}

TEST_CASE("orbit of the orientable example divides the group order bound") {
    Diagram d = fixtures::eq2(2);
    std::set<std::vector<std::uint32_t>> orbit;
    for (const auto& g : symmetry_group(7, 2)) orbit.insert(apply_symmetry(d, g).encoding());
    CHECK(56 % orbit.size() == 0);
}

TEST_CASE("serialize then parse is the identity on the worked diagram") {
    Diagram d = fixtures::dpd1();
    CHECK(parse_diagram(serialize_diagram(d)) == d);
    // and the serialized form has the documented keys in order
    std::string s = serialize_diagram(d);
    CHECK(s.substr(0, 16) == std::string("{\"n\":7,\"f\":2,\"pa"));
}

TEST_CASE("parse rejects an empty pair list") {
    CHECK_THROWS_AS(parse_diagram("{\"n\":7,\"f\":2,\"pairs\":[]}"), parse_error);
}

TEST_CASE("parse rejects an out-of-range label") {
    std::string text =
        "{\"n\":7,\"f\":1,\"pairs\":[{\"a\":[7,1],\"b\":[0,1],\"sign\":1}]}";
    CHECK_THROWS_AS(parse_diagram(text), parse_error);
}

TEST_CASE("parse rejects malformed JSON and double-matched edges") {
    CHECK_THROWS_AS(parse_diagram("{\"n\":7"), parse_error);
    std::string text =
        "{\"n\":4,\"f\":1,\"pairs\":[{\"a\":[0,1],\"b\":[2,1],\"sign\":1},"
        "{\"a\":[0,1],\"b\":[3,1],\"sign\":1}]}";
    CHECK_THROWS_AS(parse_diagram(text), parse_error);
}

TEST_CASE("pairs always store the smaller edge first") {
    Diagram d = Diagram::make(4, 1, {pr(2, 1, 0, 1, 1), pr(3, 1, 1, 1, -1)});
    for (const auto& p : d.pairs()) CHECK(p.a < p.b);
}
