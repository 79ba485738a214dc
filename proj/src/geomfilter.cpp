#include "tiling/geomfilter.hpp"

#include <numeric>
#include <stdexcept>

namespace tiling {

AngleSystem build_angle_system(const VertexSet& v) {
    AngleSystem sys;
    sys.n = v.n();
    for (const auto& vert : v.vertices()) {
        std::vector<int> row(sys.n, 0);
        for (const auto& c : vert.cycle()) row[c.label] += 1;
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

FeasibilityVerdict check_positive_solution(const AngleSystem& sys) {
    const int n = sys.n;
    const int m = static_cast<int>(sys.rows.size());
    // Maximize t subject to Ax = 1, x_i >= t, with the harmless extra bound
    // t <= 1 to keep the program bounded. Substituting y_i = x_i - t >= 0
    // and t = u - w with u, w >= 0:
    //   A y + deg_r (u - w) = 1   for each row r (deg_r = row sum)
    //   u - w + s0 = 1
    // over nonnegative y, u, w, s0; maximize u - w.
    const int nv = n + 3;  // y_0..y_{n-1}, u, w, s0
    std::vector<std::vector<Rational>> M(m + 1, std::vector<Rational>(nv, Rational(0)));
    std::vector<Rational> b(m + 1, Rational(1));
    std::vector<Rational> c(nv, Rational(0));
    for (int r = 0; r < m; ++r) {
        int deg = 0;
        for (int j = 0; j < n; ++j) {
            M[r][j] = sys.rows[r][j];
            deg += sys.rows[r][j];
        }
        M[r][n] = deg;
        M[r][n + 1] = -deg;
    }
    M[m][n] = 1;
    M[m][n + 1] = -1;
    M[m][n + 2] = 1;
    c[n] = 1;
    c[n + 1] = -1;

    FeasibilityVerdict verdict;
    LpSolution lp = solve_lp_max(M, b, c);
    if (lp.status != LpSolution::Status::optimal || lp.value <= 0) return verdict;

    verdict.feasible = true;
    Rational t = lp.value;
    verdict.witness.resize(n);
    for (int i = 0; i < n; ++i) verdict.witness[i] = lp.z[i] + t;
    // The witness must re-satisfy the system exactly.
    for (int r = 0; r < m; ++r) {
        Rational sum = 0;
        for (int j = 0; j < n; ++j) sum += sys.rows[r][j] * verdict.witness[j];
        if (sum != 1) throw std::logic_error("angle witness fails a row exactly");
    }
    for (const auto& x : verdict.witness)
        if (x <= 0) throw std::logic_error("angle witness not strictly positive");
    return verdict;
}

std::vector<std::vector<int>> EdgeClassPartition::classes() const {
    std::vector<std::vector<int>> out;
    std::vector<int> slot(n, -1);
    for (int i = 0; i < n; ++i) {
        int c = class_of[i];
        if (slot[c] < 0) {
            slot[c] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[c]].push_back(i);
    }
    return out;
}

EdgeClassPartition edge_classes(const Diagram& d) {
    const int n = d.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : d.pairs()) {
        int ra = find(p.a.label), rb = find(p.b.label);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    EdgeClassPartition part;
    part.n = n;
    part.class_of.resize(n);
    for (int i = 0; i < n; ++i) part.class_of[i] = find(i);
    part.count = 0;
    for (int i = 0; i < n; ++i)
        if (part.class_of[i] == i) ++part.count;
    return part;
}

}  // namespace tiling
