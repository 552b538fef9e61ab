#pragma once

#include <map>
#include <vector>

#include "logtb/fan.hpp"
#include "logtb/int_matrix.hpp"

namespace logtb::toric {

using fans::Cone;
using fans::Fan;

/// Local coordinates attached to a smooth maximal cone: the ray matrix
/// completed to a unimodular matrix when the cone is not full-dimensional,
/// its inverse rows as the dual basis, and the boundary equation z_1...z_k.
struct Chart {
    Cone cone;
    int dim = 0;                    // number of actual rays
    bool completed = false;         // true when completion columns were added
    exact::IntMatrix ray_matrix;    // n x n, first `dim` columns are the rays
    exact::IntMatrix dual_basis;    // = ray_matrix^-1; rows pair to delta_ij
    std::vector<int> divisor_indices;  // 0..dim-1
};

/// Throws NonSmoothCone (with the Smith diagonal in the message) otherwise.
Chart chart(const Fan& f, const Cone& cone);

/// Log-frame coefficients of the fundamental vector field of lattice vector a:
/// constant coefficients c = R^-1 a against z_i d/dz_i.
std::vector<Int> fundamental_field(const Chart& ch, const std::vector<Int>& a);

/// Constant transition matrix between the log frames of two smooth charts:
/// T = R_sigma^-1 * R_sigma'; satisfies the cocycle identity.
exact::IntMatrix log_transition(const Fan& f, const Cone& sigma, const Cone& sigma_prime);

struct TrivialityCertificate {
    bool trivial = false;
    exact::IntMatrix frame;  // lattice basis as columns (identity here)
    struct ChartMatrix {
        Cone cone;
        exact::IntMatrix matrix;  // columns = log-frame coefficients of the frame fields
    };
    std::vector<ChartMatrix> charts;      // canonical cone order; empty when nontrivial
    Cone failure_cone;                    // first non-smooth cone, canonical order
    std::vector<Int> failure_invariants;  // its Smith diagonal
};

/// Global triviality of the log tangent bundle over the fan: holds exactly
/// when every maximal cone is smooth, witnessed by the per-chart frame
/// matrices R^-1 glued by constant transitions.
TrivialityCertificate triviality_certificate(const Fan& f);

/// Re-check a certificate against a fan by substitution (frame unimodular,
/// R_sigma * C_sigma = frame per chart, failure cone genuinely non-smooth).
bool verify_triviality_certificate(const Fan& f, const TrivialityCertificate& cert);

/// Residues, in units of 2*pi*i, of the invariant log one-forms of the
/// characters m_list along the chart's divisors: entry (i, j) = <m_j, v_i>.
exact::IntMatrix residue_matrix(const Chart& ch, const std::vector<std::vector<Int>>& m_list);

struct IsotropyReport {
    Cone cone;
    int rank = 0;
    Int saturation_index;                    // [N cap span : Z-span of rays]
    std::vector<std::vector<Int>> sublattice_basis;  // basis of N cap span(cone)
    bool is_semi_torus = false;              // saturation index 1
};

IsotropyReport isotropy(const Fan& f, const Cone& cone);

struct StrataCensus {
    std::map<int, long> counts;   // codimension k -> number of strata
    int closed_stratum_dim = 0;   // largest k with a stratum
};

StrataCensus strata_census(const Fan& f);

/// b_0 .. b_{2n}; odd entries vanish. PreconditionFailed unless the fan is
/// smooth and complete.
std::vector<Int> betti_numbers(const Fan& f);

/// n - b_1/2, computed with b_1 of the compactification (so = n here).
Int d_invariant(const Fan& f);

struct SncCertificate {
    bool snc = false;
    struct ChartEquation {
        Cone cone;
        std::vector<int> divisor_indices;  // local equation is the product of these coordinates
    };
    std::vector<ChartEquation> charts;
    Cone failure_cone;
};

/// Per-chart local boundary equations; succeeds exactly when the fan is
/// smooth. Throwing variant of the failure: snc == false carries the cone.
SncCertificate snc_certificate(const Fan& f);

bool verify_snc_certificate(const Fan& f, const SncCertificate& cert);

}  // namespace logtb::toric
