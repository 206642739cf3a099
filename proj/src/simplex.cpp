#include "loomlab/simplex.hpp"

#include <cassert>

namespace loomlab {

namespace {

struct Tableau {
    int m, nv, cols;             // rows, structural vars, total columns
    std::vector<std::vector<Rational>> T;  // m rows of cols+1 (rhs last)
    std::vector<Rational> z;               // reduced-cost row, cols entries
    std::vector<int> basis;                // basic column per row
    std::vector<bool> barred;              // columns forbidden from entering
    uint64_t pivots = 0;

    void pivot(int r, int c) {
        ++pivots;
        Rational p = T[r][c];
        for (auto& x : T[r]) x /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            Rational f = T[i][c];
            if (f == 0) continue;
            for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[r][j];
        }
        Rational fz = z[c];
        if (fz != 0)
            for (int j = 0; j < (int)z.size(); ++j) z[j] -= fz * T[r][j];
        basis[r] = c;
    }

    // Bland: entering = lowest-index improving column; leaving = min ratio,
    // ties broken by lowest basic-variable index.
    bool run(LpStatus& status) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (!barred[j] && z[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) {
                status = LpStatus::Optimal;
                return true;
            }
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m; ++i) {
                if (T[i][enter] <= 0) continue;
                Rational ratio = T[i][cols] / T[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave < 0) {
                status = LpStatus::Unbounded;
                return false;
            }
            pivot(leave, enter);
        }
    }

    void load_objective(const std::vector<Rational>& c) {
        // z_j = c_j - c_B · B^{-1} A_j  given the current tableau
        z.assign(cols, Rational(0));
        for (int j = 0; j < (int)c.size(); ++j) z[j] = c[j];
        for (int i = 0; i < m; ++i) {
            Rational cb = basis[i] < (int)c.size() ? c[basis[i]] : Rational(0);
            if (cb == 0) continue;
            for (int j = 0; j < cols; ++j) z[j] -= cb * T[i][j];
        }
    }

    Rational objective_value(const std::vector<Rational>& c) const {
        Rational v = 0;
        for (int i = 0; i < m; ++i)
            if (basis[i] < (int)c.size()) v += c[basis[i]] * T[i][cols];
        return v;
    }
};

}  // namespace

LpResult simplex_max(const LinearProgram& lp) {
    const int m = (int)lp.rows.size();
    const int nv = lp.num_vars;
    for (const auto& b : lp.rhs) assert(b >= 0);

    Tableau t;
    t.m = m;
    t.nv = nv;
    t.cols = nv + m;  // one slack or artificial per row
    t.T.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
    t.basis.resize(m);
    t.barred.assign(t.cols, false);
    bool any_artificial = false;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nv; ++j) t.T[i][j] = lp.rows[i][j];
        t.T[i][nv + i] = 1;
        t.T[i][t.cols] = lp.rhs[i];
        t.basis[i] = nv + i;
        if (lp.sense[i] == RowSense::EQ) any_artificial = true;
    }

    LpResult res;
    if (any_artificial) {
        // phase 1: drive the artificial (EQ-row) variables to zero
        std::vector<Rational> c1(t.cols, Rational(0));
        for (int i = 0; i < m; ++i)
            if (lp.sense[i] == RowSense::EQ) c1[nv + i] = -1;
        t.load_objective(c1);
        LpStatus st;
        t.run(st);
        Rational v1 = t.objective_value(c1);
        if (v1 != 0) {
            res.status = LpStatus::Infeasible;
            res.pivots = t.pivots;
            return res;
        }
        for (int i = 0; i < m; ++i)
            if (lp.sense[i] == RowSense::EQ) t.barred[nv + i] = true;
        // drive basic artificials (at value zero) out of the basis so they
        // cannot re-increase in phase 2; an all-zero row is redundant and
        // its artificial stays pinned at zero
        for (int i = 0; i < m; ++i) {
            if (!t.barred[t.basis[i]]) continue;
            for (int j = 0; j < t.cols; ++j) {
                if (t.barred[j]) continue;
                if (t.T[i][j] != 0) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<Rational> c2(t.cols, Rational(0));
    for (int j = 0; j < nv; ++j) c2[j] = lp.objective[j];
    t.load_objective(c2);
    LpStatus st;
    if (!t.run(st)) {
        res.status = LpStatus::Unbounded;
        res.pivots = t.pivots;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.pivots = t.pivots;
    res.x.assign(nv, Rational(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < nv) res.x[t.basis[i]] = t.T[i][t.cols];
    res.value = t.objective_value(c2);
    // y = c_B B^{-1}, read through each row's unit column
    res.y.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        Rational yi = 0;
        for (int k = 0; k < m; ++k) {
            Rational cb = t.basis[k] < nv ? c2[t.basis[k]] : Rational(0);
            if (cb != 0) yi += cb * t.T[k][nv + i];
        }
        res.y[i] = yi;
    }
    return res;
}

}  // namespace loomlab
