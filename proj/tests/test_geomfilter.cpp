#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "tiling/geomfilter.hpp"

using namespace tiling;

namespace {

// rows sorted for comparison, ignoring vertex order
std::vector<std::vector<int>> sorted_rows(const AngleSystem& sys) {
    auto rows = sys.rows;
    std::sort(rows.begin(), rows.end());
    return rows;
}

bool satisfies(const AngleSystem& sys, const std::vector<Rational>& x) {
    for (const auto& row : sys.rows) {
        Rational sum = 0;
        for (int i = 0; i < sys.n; ++i) sum += row[i] * x[i];
        if (sum != 1) return false;
    }
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v > 0; });
}

}  // namespace

TEST_CASE("angle system of the orientable example") {
    AngleSystem sys = build_angle_system(diagram_to_vertexset(fixtures::eq2(2)));
    std::vector<std::vector<int>> expected = {
        {2, 0, 0, 2, 2, 0, 0}, {0, 2, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 2, 2}};
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_rows(sys) == expected);
}

TEST_CASE("angle system of the boxed diagram") {
    AngleSystem sys = build_angle_system(diagram_to_vertexset(fixtures::boxed()));
    std::vector<std::vector<int>> expected = {
        {2, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1}};
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_rows(sys) == expected);
}

TEST_CASE("row sums equal vertex degrees and columns sum to f") {
    for (const Diagram& d : {fixtures::dpd1(), fixtures::eq2(1), fixtures::eq3(1)}) {
        VertexSet vs = diagram_to_vertexset(d);
        AngleSystem sys = build_angle_system(vs);
        REQUIRE(sys.rows.size() == vs.vertices().size());
        std::vector<int> colsum(sys.n, 0);
        for (size_t i = 0; i < sys.rows.size(); ++i) {
            int sum = 0;
            for (int j = 0; j < sys.n; ++j) {
                sum += sys.rows[i][j];
                colsum[j] += sys.rows[i][j];
            }
            CHECK(sum == vs.vertices()[i].degree());
        }
        for (int j = 0; j < sys.n; ++j) CHECK(colsum[j] == d.f());
    }
}

TEST_CASE("the published witness satisfies the orientable example") {
    AngleSystem sys = build_angle_system(diagram_to_vertexset(fixtures::eq2(2)));
    std::vector<Rational> x = {Rational(1, 6), Rational(1, 4), Rational(1, 4), Rational(1, 6),
                               Rational(1, 6), Rational(1, 4), Rational(1, 4)};
    CHECK(satisfies(sys, x));
}

TEST_CASE("solver finds a positive solution for the orientable example") {
    AngleSystem sys = build_angle_system(diagram_to_vertexset(fixtures::eq2(2)));
    FeasibilityVerdict v = check_positive_solution(sys);
    REQUIRE(v.feasible);
    CHECK(satisfies(sys, v.witness));
}

TEST_CASE("the boxed system is infeasible") {
    AngleSystem sys = build_angle_system(diagram_to_vertexset(fixtures::boxed()));
    FeasibilityVerdict v = check_positive_solution(sys);
    CHECK_FALSE(v.feasible);
    CHECK(v.witness.empty());
}

TEST_CASE("a single uniform row is feasible with x_i = 1/n") {
    AngleSystem sys;
    sys.n = 9;
    sys.rows = {std::vector<int>(9, 1)};
    FeasibilityVerdict v = check_positive_solution(sys);
    REQUIRE(v.feasible);
    CHECK(satisfies(sys, v.witness));
    // max-min solution is exactly uniform here
    for (const auto& x : v.witness) CHECK(x == Rational(1, 9));
}

TEST_CASE("a row forcing a zero angle is infeasible") {
    // x0 + x1 = 1 and x1 = 1 force x0 = 0, not strictly positive
    AngleSystem sys;
    sys.n = 2;
    sys.rows = {{1, 1}, {0, 1}};
    CHECK_FALSE(check_positive_solution(sys).feasible);
}

TEST_CASE("an inconsistent system is infeasible") {
    AngleSystem sys;
    sys.n = 3;
    sys.rows = {{1, 1, 1}, {2, 2, 2}};  // would need sum = 1 and = 1/2
    CHECK_FALSE(check_positive_solution(sys).feasible);
}

TEST_CASE("feasibility is invariant under row order and relabeling") {
    std::mt19937 rng(2718);
    auto group = symmetry_group(7, 2);
    int seen = 0;
    for (int trial = 0; trial < 60 && seen < 25; ++trial) {
        auto d = fixtures::random_valid_diagram(rng, 7, 2);
        if (!d) continue;
        ++seen;
        bool base = check_positive_solution(build_angle_system(diagram_to_vertexset(*d))).feasible;
        const auto& g = group[rng() % group.size()];
        Diagram img = apply_symmetry(*d, g);
        bool mapped =
            check_positive_solution(build_angle_system(diagram_to_vertexset(img))).feasible;
        CHECK(base == mapped);
    }
    CHECK(seen >= 25);
}

TEST_CASE("witnesses re-verify and sum to v/f") {
    std::mt19937 rng(13);
    int feasible_seen = 0;
    for (int trial = 0; trial < 80 && feasible_seen < 20; ++trial) {
        auto d = fixtures::random_valid_diagram(rng, 7 + static_cast<int>(rng() % 3), 2);
        if (!d) continue;
        VertexSet vs = diagram_to_vertexset(*d);
        AngleSystem sys = build_angle_system(vs);
        FeasibilityVerdict v = check_positive_solution(sys);
        if (!v.feasible) continue;
        ++feasible_seen;
        CHECK(satisfies(sys, v.witness));
        Rational total = 0;
        for (const auto& x : v.witness) total += x;
        CHECK(total * 2 == Rational(static_cast<int>(vs.vertices().size())));
    }
    CHECK(feasible_seen >= 20);
}

TEST_CASE("edge classes of the orientable example") {
    EdgeClassPartition p = edge_classes(fixtures::eq2(2));
    CHECK(p.count == 5);
    auto classes = p.classes();
    std::sort(classes.begin(), classes.end());
    std::vector<std::vector<int>> expected = {{0, 2}, {1}, {3}, {4, 6}, {5}};
    CHECK(classes == expected);
}

TEST_CASE("cross-tile identical labels keep all lengths free") {
    std::vector<EdgePair> pairs;
    for (int i = 0; i < 7; ++i) pairs.push_back(fixtures::pr(i, 1, i, 2, i == 0 ? -1 : +1));
    CHECK(edge_classes(Diagram::make(7, 2, pairs)).count == 7);
}

TEST_CASE("consecutive single-tile pairs give n/2 classes") {
    std::vector<EdgePair> pairs;
    for (int i = 0; i < 8; i += 2) pairs.push_back(fixtures::pr(i, 1, i + 1, 1, -1));
    CHECK(edge_classes(Diagram::make(8, 1, pairs)).count == 4);
}

TEST_CASE("class-size multiset is invariant under the group") {
    std::mt19937 rng(606);
    auto group = symmetry_group(8, 2);
    auto sizes = [](const Diagram& d) {
        std::vector<int> out;
        for (const auto& c : edge_classes(d).classes()) out.push_back(static_cast<int>(c.size()));
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int trial = 0; trial < 15; ++trial) {
        auto d = fixtures::random_valid_diagram(rng, 8, 2);
        REQUIRE(d.has_value());
        auto base = sizes(*d);
        const auto& g = group[rng() % group.size()];
        CHECK(sizes(apply_symmetry(*d, g)) == base);
    }
}

TEST_CASE("the worked diagram has three edge classes") {
    // union-find over its pairs: {0,3}+{2,6}+{2,0}+{4,3}+{6,4} merge into
    // one class, 1 and 5 stay alone
    CHECK(edge_classes(fixtures::dpd1()).count == 3);
}
