#include "logtb/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace logtb::lp {

bool satisfies(const System& sys, const std::vector<Rational>& point) {
    if (int(point.size()) != sys.num_vars) return false;
    for (const auto& row : sys.rows) {
        Rational lhs(0);
        for (int j = 0; j < sys.num_vars; ++j) lhs += row.coeffs[j] * point[j];
        if (row.kind == RowKind::equal ? lhs != row.rhs : lhs < row.rhs) return false;
    }
    return true;
}

bool farkas_valid(const System& sys, const FarkasWitness& witness) {
    if (witness.multipliers.size() != sys.rows.size()) return false;
    std::vector<Rational> combo(sys.num_vars, Rational(0));
    Rational rhs(0);
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        const Rational& m = witness.multipliers[r];
        if (sys.rows[r].kind == RowKind::greater_equal && m.sign() < 0) return false;
        if (m.is_zero()) continue;
        for (int j = 0; j < sys.num_vars; ++j) combo[j] += m * sys.rows[r].coeffs[j];
        rhs += m * sys.rows[r].rhs;
    }
    for (const auto& c : combo)
        if (!c.is_zero()) return false;
    return rhs.sign() > 0;
}

namespace {

/**
 * Phase-1 tableau. Unknowns are split x = xp - xm with xp, xm >= 0; each
 * inequality row gets a surplus variable; every row gets an artificial
 * variable that starts basic. Rows are sign-normalized so the rhs is >= 0.
 * Minimizing the sum of artificials decides feasibility, and the dual values
 * read off the artificial columns give the Farkas combination.
 */
struct Tableau {
    int nvars;                     // original free unknowns
    int n_ineq = 0;
    std::vector<int> surplus_col;  // per row, -1 for equalities
    std::vector<int> row_sign;     // +1 kept, -1 flipped during normalization
    int cols = 0;                  // xp, xm, surplus, artificials
    int art0 = 0;                  // first artificial column
    std::vector<std::vector<Rational>> a;  // m rows * cols
    std::vector<Rational> rhs;
    std::vector<int> basis;        // basic column per row
    std::vector<Rational> zrow;    // reduced costs per column
    Rational zval;                 // current objective (sum of artificials)

    explicit Tableau(const System& sys) : nvars(sys.num_vars) {
        const int m = int(sys.rows.size());
        surplus_col.assign(m, -1);
        row_sign.assign(m, 1);
        int next_surplus = 2 * nvars;
        for (int r = 0; r < m; ++r)
            if (sys.rows[r].kind == RowKind::greater_equal) {
                surplus_col[r] = next_surplus++;
                ++n_ineq;
            }
        art0 = 2 * nvars + n_ineq;
        cols = art0 + m;

        a.assign(m, std::vector<Rational>(cols, Rational(0)));
        rhs.assign(m, Rational(0));
        basis.resize(m);
        for (int r = 0; r < m; ++r) {
            const Row& row = sys.rows[r];
            const int s = row.rhs.sign() < 0 ? -1 : 1;
            row_sign[r] = s;
            for (int j = 0; j < nvars; ++j) {
                a[r][j] = s * row.coeffs[j];
                a[r][nvars + j] = -a[r][j];
            }
            if (surplus_col[r] >= 0) a[r][surplus_col[r]] = Rational(-s);
            a[r][art0 + r] = 1;
            rhs[r] = s * row.rhs;
            basis[r] = art0 + r;
        }

        // z-row for min sum(artificials): reduced cost c_j - y.A_j with the
        // artificial basis gives  -sum of column entries  on non-artificials.
        zrow.assign(cols, Rational(0));
        zval = 0;
        for (int r = 0; r < m; ++r) {
            for (int j = 0; j < cols; ++j)
                if (j != art0 + r) zrow[j] -= a[r][j];
            zval += rhs[r];
        }
    }

    void pivot(int prow, int pcol) {
        const Rational piv = a[prow][pcol];
        assert(!piv.is_zero());
        const Rational inv = Rational(1) / piv;
        for (auto& v : a[prow]) v *= inv;
        rhs[prow] *= inv;
        for (int r = 0; r < int(a.size()); ++r) {
            if (r == prow || a[r][pcol].is_zero()) continue;
            const Rational f = a[r][pcol];
            for (int j = 0; j < cols; ++j) a[r][j] -= f * a[prow][j];
            rhs[r] -= f * rhs[prow];
        }
        if (!zrow[pcol].is_zero()) {
            const Rational f = zrow[pcol];
            for (int j = 0; j < cols; ++j) zrow[j] -= f * a[prow][j];
            zval -= f * rhs[prow];
        }
        basis[prow] = pcol;
    }

    // Bland's rule: entering = lowest-index improving column; leaving =
    // min-ratio row, ties broken by lowest basic column index.
    void run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (zrow[j].sign() < 0) { enter = j; break; }
            if (enter < 0) return;
            int leave = -1;
            Rational best;
            for (int r = 0; r < int(a.size()); ++r) {
                if (a[r][enter].sign() <= 0) continue;
                Rational ratio = rhs[r] / a[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0) throw std::logic_error("phase-1 objective unbounded below");
            pivot(leave, enter);
        }
    }
};

}  // namespace

FeasibilityResult solve_feasibility(const System& sys) {
    for (const auto& row : sys.rows)
        if (int(row.coeffs.size()) != sys.num_vars)
            throw std::invalid_argument("lp row width mismatch");

    FeasibilityResult out;
    if (sys.rows.empty()) {
        out.feasible = true;
        out.point.assign(sys.num_vars, Rational(0));
        return out;
    }

    Tableau t(sys);
    t.run();

    if (t.zval.is_zero()) {
        std::vector<Rational> split(t.cols, Rational(0));
        for (size_t r = 0; r < t.basis.size(); ++r) split[t.basis[r]] = t.rhs[r];
        out.feasible = true;
        out.point.resize(sys.num_vars);
        for (int j = 0; j < sys.num_vars; ++j)
            out.point[j] = split[j] - split[sys.num_vars + j];
        if (!satisfies(sys, out.point))
            throw std::logic_error("simplex produced an invalid feasible point");
        return out;
    }

    // Infeasible: dual value on row r is 1 - (reduced cost of its artificial);
    // undo the row normalization to get multipliers for the original rows.
    out.feasible = false;
    out.farkas.multipliers.resize(sys.rows.size());
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        const Rational y = Rational(1) - t.zrow[t.art0 + int(r)];
        out.farkas.multipliers[r] = t.row_sign[r] < 0 ? -y : y;
    }
    if (!farkas_valid(sys, out.farkas))
        throw std::logic_error("simplex produced an invalid Farkas witness");
    return out;
}

}  // namespace logtb::lp
