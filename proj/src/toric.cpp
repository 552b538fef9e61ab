#include "logtb/toric.hpp"

#include <algorithm>
#include <sstream>

#include "logtb/errors.hpp"

namespace logtb::toric {

using exact::IntMatrix;

namespace {

std::string snf_diagonal_string(const exact::SmithDecomposition& snf) {
    std::ostringstream os;
    os << "diag(";
    const int k = std::min(snf.s.rows(), snf.s.cols());
    for (int i = 0; i < k; ++i) os << (i ? "," : "") << snf.s.at(i, i).str();
    os << ")";
    return os.str();
}

/// Sorted maximal-cone indices in canonical order together with their cones.
std::vector<int> canonical_order(const Fan& f) { return fans::canonical_cone_order(f); }

}  // namespace

Chart chart(const Fan& f, const Cone& cone) {
    const int n = f.n;
    const int k = cone.dim();
    const IntMatrix rays = f.ray_matrix(cone);
    const auto snf = exact::smith_normal_form(rays);
    const auto factors = snf.invariant_factors();
    const bool smooth = int(factors.size()) == k &&
                        std::all_of(factors.begin(), factors.end(),
                                    [](const Int& d) { return d == 1; });
    if (!smooth)
        throw NonSmoothCone("cone has Smith normal form " + snf_diagonal_string(snf));

    Chart ch;
    ch.cone = cone;
    ch.dim = k;
    ch.completed = k < n;
    ch.ray_matrix = IntMatrix(n, n);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r) ch.ray_matrix.at(r, c) = rays.at(r, c);
    if (k < n) {
        // U A V = [I_k; 0]; the trailing columns of U^-1 complete the rays to
        // a lattice basis, deterministically.
        const IntMatrix u_inv = exact::invert_unimodular(snf.u);
        for (int c = k; c < n; ++c)
            for (int r = 0; r < n; ++r) ch.ray_matrix.at(r, c) = u_inv.at(r, c);
    }
    ch.dual_basis = exact::invert_unimodular(ch.ray_matrix);
    for (int i = 0; i < k; ++i) ch.divisor_indices.push_back(i);
    return ch;
}

std::vector<Int> fundamental_field(const Chart& ch, const std::vector<Int>& a) {
    if (int(a.size()) != ch.ray_matrix.rows())
        throw DimensionMismatch("fundamental_field: lattice vector length");
    return ch.dual_basis.apply(a);
}

IntMatrix log_transition(const Fan& f, const Cone& sigma, const Cone& sigma_prime) {
    const Chart a = chart(f, sigma);
    const Chart b = chart(f, sigma_prime);
    return a.dual_basis * b.ray_matrix;
}

TrivialityCertificate triviality_certificate(const Fan& f) {
    fans::require_valid(f);
    TrivialityCertificate cert;
    cert.frame = IntMatrix::identity(f.n);

    for (int idx : canonical_order(f)) {
        const Cone& cone = f.max_cones[idx];
        if (!fans::cone_is_smooth(f, cone)) {
            cert.trivial = false;
            cert.charts.clear();
            cert.failure_cone = cone;
            cert.failure_invariants =
                exact::smith_normal_form(f.ray_matrix(cone)).invariant_factors();
            return cert;
        }
        cert.charts.push_back({cone, chart(f, cone).dual_basis});
    }
    cert.trivial = true;
    return cert;
}

bool verify_triviality_certificate(const Fan& f, const TrivialityCertificate& cert) {
    if (!cert.trivial) {
        // failure site must be the first non-smooth cone in canonical order
        for (int idx : canonical_order(f)) {
            const Cone& cone = f.max_cones[idx];
            if (!fans::cone_is_smooth(f, cone)) return cone == cert.failure_cone;
        }
        return false;
    }
    if (!cert.frame.is_square() || cert.frame.rows() != f.n) return false;
    try {
        exact::invert_unimodular(cert.frame);
    } catch (const NotUnimodular&) {
        return false;
    }
    const auto order = canonical_order(f);
    if (cert.charts.size() != order.size()) return false;
    for (size_t k = 0; k < order.size(); ++k) {
        const Cone& cone = f.max_cones[order[k]];
        if (!(cert.charts[k].cone == cone)) return false;
        if (cert.charts[k].matrix.rows() != f.n || cert.charts[k].matrix.cols() != f.n)
            return false;
        Chart ch;
        try {
            ch = chart(f, cone);
        } catch (const NonSmoothCone&) {
            return false;
        }
        // C = R^-1 * frame, checked multiplicatively
        if (!(ch.ray_matrix * cert.charts[k].matrix == cert.frame)) return false;
    }
    return true;
}

IntMatrix residue_matrix(const Chart& ch, const std::vector<std::vector<Int>>& m_list) {
    const int n = ch.ray_matrix.rows();
    IntMatrix out(ch.dim, int(m_list.size()));
    for (int j = 0; j < int(m_list.size()); ++j) {
        if (int(m_list[j].size()) != n)
            throw DimensionMismatch("residue_matrix: character length");
        for (int i = 0; i < ch.dim; ++i) {
            Int v = 0;
            for (int r = 0; r < n; ++r) v += m_list[j][r] * ch.ray_matrix.at(r, i);
            out.at(i, j) = v;
        }
    }
    return out;
}

IsotropyReport isotropy(const Fan& f, const Cone& cone) {
    IsotropyReport report;
    report.cone = cone;
    report.rank = cone.dim();
    report.saturation_index = 1;
    if (cone.dim() == 0) {
        report.is_semi_torus = true;
        return report;
    }
    const auto snf = exact::smith_normal_form(f.ray_matrix(cone));
    const auto factors = snf.invariant_factors();
    if (int(factors.size()) != cone.dim())
        throw PreconditionFailed("isotropy: degenerate cone rays");
    for (const auto& d : factors) report.saturation_index *= d;
    // saturation basis: leading columns of U^-1
    const IntMatrix u_inv = exact::invert_unimodular(snf.u);
    for (int c = 0; c < cone.dim(); ++c) report.sublattice_basis.push_back(u_inv.column(c));
    report.is_semi_torus = report.saturation_index == 1;
    return report;
}

StrataCensus strata_census(const Fan& f) {
    fans::require_valid(f);
    StrataCensus census;
    int maxdim = 0;
    for (const auto& cone : f.max_cones) maxdim = std::max(maxdim, cone.dim());
    for (int k = 0; k <= maxdim; ++k)
        census.counts[k] = long(fans::cones_of_dim(f, k).size());
    census.closed_stratum_dim = maxdim;
    return census;
}

std::vector<Int> betti_numbers(const Fan& f) {
    if (!fans::is_smooth(f).smooth)
        throw PreconditionFailed("betti_numbers: fan is not smooth");
    if (!fans::is_complete(f).complete)
        throw PreconditionFailed("betti_numbers: fan is not complete");

    const int n = f.n;
    std::vector<Int> d(n + 1);  // d[j] = number of j-dimensional cones
    for (int j = 0; j <= n; ++j) d[j] = Int(fans::cones_of_dim(f, j).size());

    auto binom = [](int a, int b) {
        Int v = 1;
        for (int i = 0; i < b; ++i) v = v * (a - i) / (i + 1);
        return v;
    };
    std::vector<Int> betti(2 * n + 1);
    for (int k = 0; k <= n; ++k) {
        Int b = 0;
        for (int i = k; i <= n; ++i) {
            const Int term = binom(i, k) * d[n - i];
            b += (i - k) % 2 == 0 ? term : -term;
        }
        betti[2 * k] = b;
    }
    return betti;
}

Int d_invariant(const Fan& f) {
    const auto betti = betti_numbers(f);  // carries the preconditions
    return Int(f.n) - betti[1] / 2;
}

SncCertificate snc_certificate(const Fan& f) {
    fans::require_valid(f);
    SncCertificate cert;
    for (int idx : canonical_order(f)) {
        const Cone& cone = f.max_cones[idx];
        if (!fans::cone_is_smooth(f, cone)) {
            cert.snc = false;
            cert.charts.clear();
            cert.failure_cone = cone;
            return cert;
        }
        const Chart ch = chart(f, cone);
        cert.charts.push_back({cone, ch.divisor_indices});
    }
    cert.snc = true;
    return cert;
}

bool verify_snc_certificate(const Fan& f, const SncCertificate& cert) {
    const auto order = canonical_order(f);
    if (!cert.snc) {
        for (int idx : order) {
            const Cone& cone = f.max_cones[idx];
            if (!fans::cone_is_smooth(f, cone)) return cone == cert.failure_cone;
        }
        return false;
    }
    if (cert.charts.size() != order.size()) return false;
    for (size_t k = 0; k < order.size(); ++k) {
        const Cone& cone = f.max_cones[order[k]];
        if (!(cert.charts[k].cone == cone)) return false;
        if (!fans::cone_is_smooth(f, cone)) return false;
        std::vector<int> expected;
        for (int i = 0; i < cone.dim(); ++i) expected.push_back(i);
        if (cert.charts[k].divisor_indices != expected) return false;
    }
    return true;
}

}  // namespace logtb::toric
