#pragma once

#include <vector>

#include "logtb/numbers.hpp"

namespace logtb::lp {

enum class RowKind { equal, greater_equal };

/// One constraint  coeffs . x  (= | >=)  rhs  over free rational unknowns.
struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
    RowKind kind = RowKind::greater_equal;
};

struct System {
    int num_vars = 0;
    std::vector<Row> rows;

    Row& add(RowKind kind) {
        rows.push_back(Row{std::vector<Rational>(num_vars), Rational(0), kind});
        return rows.back();
    }
};

/// Infeasibility certificate: one multiplier per row, nonnegative on
/// inequality rows, with  sum_r m_r * row_r.coeffs = 0  and
/// sum_r m_r * row_r.rhs > 0.
struct FarkasWitness {
    std::vector<Rational> multipliers;
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> point;   // when feasible
    FarkasWitness farkas;          // when infeasible
};

/// Exact phase-1 simplex with Bland's rule; always terminates. The returned
/// point or witness is re-checkable by plain substitution via the checkers
/// below (and internally asserted before returning).
FeasibilityResult solve_feasibility(const System& sys);

bool satisfies(const System& sys, const std::vector<Rational>& point);
bool farkas_valid(const System& sys, const FarkasWitness& witness);

}  // namespace logtb::lp
