#include "logtb/chartcalc.hpp"

#include <algorithm>

#include "logtb/errors.hpp"

namespace logtb::chartcalc {

namespace {

void require_divisor_set(int n, const std::vector<int>& divisor) {
    for (size_t k = 0; k < divisor.size(); ++k) {
        if (divisor[k] < 0 || divisor[k] >= n)
            throw DimensionMismatch("divisor index out of range");
        if (k > 0 && divisor[k] <= divisor[k - 1])
            throw DimensionMismatch("divisor indices must be strictly increasing");
    }
}

ExactComplex scalar(const Int& v) { return ExactComplex(exact::QuadExt(Rational(v))); }

}  // namespace

void require_well_formed(const ChartVectorField& v) {
    if (int(v.coefficients.size()) != v.n)
        throw DimensionMismatch("field needs one coefficient per variable");
    for (const auto& c : v.coefficients)
        if (c.nvars() != v.n) throw DimensionMismatch("coefficient arity mismatch");
    require_divisor_set(v.n, v.divisor_indices);
}

bool is_divisor_index(const ChartVectorField& v, int i) {
    return std::binary_search(v.divisor_indices.begin(), v.divisor_indices.end(), i);
}

ChartVectorField to_log_frame(const ChartVectorField& v) {
    require_well_formed(v);
    if (v.frame != Frame::ordinary)
        throw PreconditionFailed("to_log_frame expects an ordinary-frame field");
    ChartVectorField out = v;
    out.frame = Frame::log;
    for (int i : v.divisor_indices) {
        if (!v.coefficients[i].divisible_by_var(i))
            throw NotLogarithmic("coefficient of d/dz_" + std::to_string(i) +
                                 " is not divisible by z_" + std::to_string(i));
        out.coefficients[i] = v.coefficients[i].shifted(i, -1);
    }
    return out;
}

ChartVectorField from_log_frame(const ChartVectorField& v) {
    require_well_formed(v);
    if (v.frame != Frame::log)
        throw PreconditionFailed("from_log_frame expects a log-frame field");
    ChartVectorField out = v;
    out.frame = Frame::ordinary;
    for (int i : v.divisor_indices)
        out.coefficients[i] = v.coefficients[i].shifted(i, 1);
    return out;
}

ChartVectorField pushforward(const ChartVectorField& v, const MonomialMap& map,
                             std::optional<std::vector<int>> target_divisor) {
    require_well_formed(v);
    if (v.frame != Frame::log)
        throw PreconditionFailed("pushforward expects a log-frame field");
    const auto& a = map.exponent_matrix;
    if (!a.is_square() || a.rows() != v.n)
        throw DimensionMismatch("monomial map shape");
    const Int det = exact::determinant(a);
    if (det != 1 && det != -1)
        throw NonUnimodularMap("monomial map determinant " + det.str());
    const exact::IntMatrix inv = exact::invert_unimodular(a);

    const std::vector<int> target =
        target_divisor ? std::move(*target_divisor) : v.divisor_indices;
    require_divisor_set(v.n, target);

    // all-coordinates torus coefficients of the source field
    std::vector<LaurentPoly> torus(v.n);
    for (int j = 0; j < v.n; ++j)
        torus[j] = is_divisor_index(v, j) ? v.coefficients[j]
                                          : v.coefficients[j].shifted(j, -1);

    // substitute z = z(w), then mix by A^-1
    std::vector<LaurentPoly> substituted(v.n);
    for (int j = 0; j < v.n; ++j) substituted[j] = torus[j].substituted(a);

    ChartVectorField out;
    out.frame = Frame::log;
    out.n = v.n;
    out.divisor_indices = target;
    out.coefficients.assign(v.n, LaurentPoly(v.n));
    for (int j = 0; j < v.n; ++j) {
        LaurentPoly acc(v.n);
        for (int k = 0; k < v.n; ++k) {
            if (inv.at(j, k).is_zero()) continue;
            acc = acc + substituted[k] * scalar(inv.at(j, k));
        }
        out.coefficients[j] =
            std::binary_search(target.begin(), target.end(), j) ? acc : acc.shifted(j, 1);
    }
    return out;
}

std::optional<std::int64_t> vanishing_order(const ChartVectorField& v, int divisor_index,
                                            Frame in_frame) {
    require_well_formed(v);
    if (!is_divisor_index(v, divisor_index))
        throw PreconditionFailed("vanishing_order: not a divisor index");
    ChartVectorField w = v;
    if (in_frame == Frame::log && v.frame == Frame::ordinary) w = to_log_frame(v);
    if (in_frame == Frame::ordinary && v.frame == Frame::log) w = from_log_frame(v);

    std::optional<std::int64_t> order;
    for (const auto& c : w.coefficients) {
        const auto m = c.min_exponent(divisor_index);
        if (!m) continue;  // zero entry contributes +infinity
        if (!order || *m < *order) order = m;
    }
    return order;
}

void require_well_formed(const LogOneForm& w) {
    if (int(w.log_parts.size()) != w.n || int(w.regular_parts.size()) != w.n)
        throw DimensionMismatch("form needs n log and n regular parts");
    require_divisor_set(w.n, w.divisor_indices);
    for (int i = 0; i < w.n; ++i) {
        if (w.log_parts[i].nvars() != w.n || w.regular_parts[i].nvars() != w.n)
            throw DimensionMismatch("coefficient arity mismatch");
        const bool on_divisor =
            std::binary_search(w.divisor_indices.begin(), w.divisor_indices.end(), i);
        if (!on_divisor && !w.log_parts[i].is_zero())
            throw ValidationError("log part off the divisor set must vanish");
        const auto m = w.log_parts[i].min_exponent(i);
        if (m && *m < 0)
            throw ValidationError("log part has a pole of order > 1 along its divisor");
    }
}

namespace {

bool on_divisor(const LogOneForm& w, int i) {
    return std::binary_search(w.divisor_indices.begin(), w.divisor_indices.end(), i);
}

/// Combined coefficient against eta_i (dz_i/z_i on divisors, dz_i otherwise).
LaurentPoly eta_coefficient(const LogOneForm& w, int i) {
    if (on_divisor(w, i)) return w.log_parts[i] + w.regular_parts[i].shifted(i, 1);
    return w.regular_parts[i];
}

/// The derivation pairing with eta_j: z_j d/dz_j on divisors, d/dz_j otherwise.
LaurentPoly eta_derivative(const LogOneForm& w, const LaurentPoly& p, int j) {
    return on_divisor(w, j) ? p.log_derivative(j) : p.derivative(j);
}

}  // namespace

ClosednessReport d_closed(const LogOneForm& w) {
    require_well_formed(w);
    std::vector<LaurentPoly> phi(w.n);
    for (int i = 0; i < w.n; ++i) phi[i] = eta_coefficient(w, i);

    ClosednessReport report;
    report.closed = true;
    for (int i = 0; i < w.n; ++i)
        for (int j = i + 1; j < w.n; ++j) {
            const LaurentPoly c = eta_derivative(w, phi[j], i) - eta_derivative(w, phi[i], j);
            if (c.is_zero()) continue;
            report.closed = false;
            report.obstructions.push_back({i, j, on_divisor(w, i), on_divisor(w, j), c});
        }
    return report;
}

LaurentPoly residue(const LogOneForm& w, int i) {
    require_well_formed(w);
    if (!on_divisor(w, i)) throw PreconditionFailed("residue: not a divisor index");
    // the regular part contributes through z_i * g_i when it hides a pole
    return eta_coefficient(w, i).restricted_to_zero(i);
}

}  // namespace logtb::chartcalc
