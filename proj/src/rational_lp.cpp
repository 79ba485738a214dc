#include "tiling/rational_lp.hpp"

#include <sstream>
#include <stdexcept>

namespace tiling {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

namespace {

// Simplex tableau. t[r][0..cols-1] holds the constraint coefficients,
// t[r][cols] the right-hand side, basis[r] the basic variable of row r.
// The objective row keeps the invariant: current value = -obj[cols],
// reduced cost of variable j = obj[j].
struct Tableau {
    int rows = 0, cols = 0;
    std::vector<std::vector<Rational>> t;
    std::vector<int> basis;
    std::vector<Rational> obj;

    void pivot(int pr, int pc) {
        Rational inv = 1 / t[pr][pc];
        for (auto& x : t[pr]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || t[r][pc] == 0) continue;
            Rational factor = t[r][pc];
            for (int c = 0; c <= cols; ++c) t[r][c] -= factor * t[pr][c];
        }
        if (obj[pc] != 0) {
            Rational factor = obj[pc];
            for (int c = 0; c <= cols; ++c) obj[c] -= factor * t[pr][c];
        }
        basis[pr] = pc;
    }

    // Maximizes the objective with Bland's rule (lowest eligible index
    // enters, lowest basic index leaves on ties), which rules out cycling.
    // Returns false if unbounded.
    bool run() {
        for (;;) {
            int pc = -1;
            for (int c = 0; c < cols; ++c) {
                if (obj[c] > 0) {
                    pc = c;
                    break;
                }
            }
            if (pc < 0) return true;
            int pr = -1;
            Rational best;
            for (int r = 0; r < rows; ++r) {
                if (t[r][pc] <= 0) continue;
                Rational ratio = t[r][cols] / t[r][pc];
                if (pr < 0 || ratio < best || (ratio == best && basis[r] < basis[pr])) {
                    pr = r;
                    best = ratio;
                }
            }
            if (pr < 0) return false;
            pivot(pr, pc);
        }
    }
};

}  // namespace

LpSolution solve_lp_max(const std::vector<std::vector<Rational>>& M,
                        const std::vector<Rational>& b,
                        const std::vector<Rational>& c) {
    const int m = static_cast<int>(M.size());
    const int nv = static_cast<int>(c.size());
    for (const auto& bi : b)
        if (bi < 0) throw std::invalid_argument("solve_lp_max: rhs must be nonnegative");

    LpSolution sol;

    // Phase 1: artificial variables nv..nv+m-1 start basic; maximize minus
    // their sum. Feasible iff the optimum is zero.
    Tableau tab;
    tab.rows = m;
    tab.cols = nv + m;
    tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
    tab.basis.resize(m);
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < nv; ++j) tab.t[r][j] = M[r][j];
        tab.t[r][nv + r] = 1;
        tab.t[r][tab.cols] = b[r];
        tab.basis[r] = nv + r;
    }
    tab.obj.assign(tab.cols + 1, Rational(0));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < nv; ++j) tab.obj[j] += tab.t[r][j];
        tab.obj[tab.cols] += tab.t[r][tab.cols];
    }
    tab.run();
    if (tab.obj[tab.cols] != 0) {
        sol.status = LpSolution::Status::infeasible;
        return sol;
    }

    // Make every artificial nonbasic: pivot it out on any nonzero real
    // entry, or drop the (redundant) row.
    for (int r = 0; r < tab.rows; ++r) {
        if (tab.basis[r] < nv) continue;
        int pc = -1;
        for (int j = 0; j < nv; ++j) {
            if (tab.t[r][j] != 0) {
                pc = j;
                break;
            }
        }
        if (pc >= 0) {
            tab.pivot(r, pc);
        } else {
            tab.t.erase(tab.t.begin() + r);
            tab.basis.erase(tab.basis.begin() + r);
            --tab.rows;
            --r;
        }
    }

    // Drop the artificial columns (all nonbasic now) and install the real
    // objective, eliminating the basic columns to restore the invariant.
    for (auto& row : tab.t) {
        row[nv] = row[tab.cols];
        row.resize(nv + 1);
    }
    tab.cols = nv;
    tab.obj.assign(nv + 1, Rational(0));
    for (int j = 0; j < nv; ++j) tab.obj[j] = c[j];
    for (int r = 0; r < tab.rows; ++r) {
        Rational factor = c[tab.basis[r]];
        if (factor == 0) continue;
        for (int j = 0; j <= nv; ++j) tab.obj[j] -= factor * tab.t[r][j];
    }

    if (!tab.run()) {
        sol.status = LpSolution::Status::unbounded;
        return sol;
    }
    sol.status = LpSolution::Status::optimal;
    sol.z.assign(nv, Rational(0));
    for (int r = 0; r < tab.rows; ++r) sol.z[tab.basis[r]] = tab.t[r][nv];
    sol.value = -tab.obj[nv];
    return sol;
}

}  // namespace tiling
