#pragma once

#include <optional>
#include <vector>

#include "logtb/int_matrix.hpp"
#include "logtb/laurent.hpp"

namespace logtb::chartcalc {

enum class Frame { ordinary, log };

/// Vector field on a chart C^n with boundary divisor prod_{i in D} z_i.
/// Coefficients are against d/dz_i (ordinary frame) or against the T(-log D)
/// frame z_i d/dz_i (i in D), d/dz_i (i not in D).
struct ChartVectorField {
    Frame frame = Frame::ordinary;
    int n = 0;
    std::vector<LaurentPoly> coefficients;  // length n
    std::vector<int> divisor_indices;       // sorted subset of 0..n-1
};

void require_well_formed(const ChartVectorField& v);
bool is_divisor_index(const ChartVectorField& v, int i);

/// Divide the i-th coefficient by z_i for divisor indices; NotLogarithmic when
/// some divisor coefficient is not divisible (the field is not a section of
/// T(-log D)).
ChartVectorField to_log_frame(const ChartVectorField& v);

/// Inverse of to_log_frame; exact round trip.
ChartVectorField from_log_frame(const ChartVectorField& v);

/// Monomial coordinate change w -> z with z_j = prod_k w_k^(A[j][k]).
/// Invertible on the torus exactly when |det A| = 1.
struct MonomialMap {
    exact::IntMatrix exponent_matrix;
};

/// Transform a log-frame field through a monomial map: on all-log (torus)
/// coefficients the rule is c'(w) = A^-1 * c(z(w)). The optional target
/// divisor set names the divisors of the destination chart (defaults to the
/// source's set); the result is in log frame with respect to it.
ChartVectorField pushforward(const ChartVectorField& v, const MonomialMap& map,
                             std::optional<std::vector<int>> target_divisor = std::nullopt);

/// Minimum z_i exponent over all coefficient entries, in the requested frame.
/// nullopt encodes +infinity (the zero field). NotLogarithmic when the log
/// order of a non-logarithmic field is requested.
std::optional<std::int64_t> vanishing_order(const ChartVectorField& v, int divisor_index,
                                            Frame in_frame);

/// Logarithmic one-form  sum_{i in D} f_i dz_i/z_i + sum_i g_i dz_i.
/// Each f_i must have nonnegative z_i exponents (at most a first-order pole).
struct LogOneForm {
    int n = 0;
    std::vector<int> divisor_indices;
    std::vector<LaurentPoly> log_parts;      // f_i, forced zero off the divisor set
    std::vector<LaurentPoly> regular_parts;  // g_i
};

void require_well_formed(const LogOneForm& w);

/// One obstruction coefficient of the exterior derivative against the basis
/// two-form eta_i ^ eta_j (i < j), where eta_i = dz_i/z_i on divisor indices
/// and dz_i otherwise.
struct Obstruction2Form {
    int i = 0;
    int j = 0;
    bool i_log = false;  // basis factor is dz_i/z_i rather than dz_i
    bool j_log = false;
    LaurentPoly coefficient;
};

struct ClosednessReport {
    bool closed = false;
    std::vector<Obstruction2Form> obstructions;  // only nonzero entries
};

/// Symbolic exterior derivative; closed iff every obstruction vanishes.
ClosednessReport d_closed(const LogOneForm& w);

/// Coefficient of dz_i/z_i restricted to z_i = 0, in units of 2*pi*i.
LaurentPoly residue(const LogOneForm& w, int i);

}  // namespace logtb::chartcalc
