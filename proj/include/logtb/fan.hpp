#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logtb/int_matrix.hpp"
#include "logtb/lp.hpp"

namespace logtb::fans {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Primitive nonzero lattice vector spanning a one-dimensional cone.
struct Ray {
    std::vector<Int> generator;
};

/// Simplicial cone given by sorted indices into the fan's ray list. The empty
/// set is the zero cone.
struct Cone {
    std::vector<int> ray_indices;

    int dim() const { return int(ray_indices.size()); }
    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ray_indices == b.ray_indices;
    }
    friend bool operator<(const Cone& a, const Cone& b) {
        return a.ray_indices < b.ray_indices;
    }
};

struct Fan {
    int n = 0;  // lattice rank
    std::vector<Ray> rays;
    std::vector<Cone> max_cones;

    /// n x dim(cone) matrix whose columns are the cone's ray generators.
    exact::IntMatrix ray_matrix(const Cone& cone) const;
};

enum class ViolationKind {
    ray_dimension,
    ray_zero,
    ray_not_primitive,
    ray_duplicate,
    cone_bad_index,
    cone_duplicate_index,
    cone_duplicate,
    cone_nested,
    cone_not_strongly_convex,
    cone_not_simplicial,
    intersection_not_face,
    no_max_cones,
};

struct Violation {
    ViolationKind kind;
    std::string where;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

std::string violation_kind_name(ViolationKind kind);

ValidationReport validate_fan(const Fan& f);

/// Throws ValidationError listing all violations when the fan is invalid.
void require_valid(const Fan& f);

struct ConeSmoothnessWitness {
    int cone_index;                     // position in f.max_cones
    std::vector<Int> invariant_factors; // Smith normal form diagonal of the ray matrix
};

struct SmoothnessReport {
    bool smooth = true;
    std::vector<ConeSmoothnessWitness> failures;
};

/// A cone is smooth when its ray generators extend to a lattice basis, i.e.
/// all Smith invariant factors of the ray matrix are 1.
SmoothnessReport is_smooth(const Fan& f);
bool cone_is_smooth(const Fan& f, const Cone& cone);

struct WallInfo {
    Cone wall;                       // the (n-1)-dimensional face
    std::vector<int> incident;       // 1 or 2 maximal cone indices
    std::vector<int> opposite_ray;   // per incident cone, its ray not in the wall
};

/// Codimension-one faces of the maximal cones of a pure fan, each listed once,
/// in canonical (sorted ray tuple) order. Throws NotPure on non-pure input.
std::vector<WallInfo> walls(const Fan& f);

struct CompletenessReport {
    bool complete = false;
    bool wall_pairing_ok = false;
    bool sampling_ok = false;
    int samples = 0;
    std::optional<std::vector<Rational>> uncovered_point;
};

/// Wall-pairing criterion plus a seeded exact point-location sweep.
CompletenessReport is_complete(const Fan& f, std::uint64_t seed = kDefaultSeed);

/// Exact membership test: is p a nonnegative combination of the cone's rays?
bool cone_contains(const Fan& f, const Cone& cone, const std::vector<Rational>& p);

struct ProjectivityCertificate {
    bool feasible = false;
    // feasible: one rational n-vector per maximal cone, in canonical cone order
    std::vector<std::vector<Rational>> support;   // indexed like canonical_cone_order
    std::vector<int> cone_order;                  // canonical order as fan indices
    // infeasible: multipliers for the deterministically enumerated constraints
    lp::FarkasWitness farkas;
};

/// Strictly convex support function existence, decided by exact LP over the
/// homogenized strict system (every wall gap >= 1). PreconditionFailed unless
/// the fan is valid, smooth and complete.
ProjectivityCertificate is_projective(const Fan& f);

/// The LP rows behind is_projective, in the deterministic order used by both
/// the solver and the certificate re-verifier.
lp::System projectivity_system(const Fan& f);

/// Substitution-only re-check of a certificate (no solver involved).
bool verify_projectivity_certificate(const Fan& f, const ProjectivityCertificate& cert);

std::vector<int> canonical_cone_order(const Fan& f);

Fan projective_space_fan(int n);
Fan product_p1_fan(int n);
Fan hirzebruch_fan(int a);
Fan affine_space_fan(int n);

/// All distinct k-dimensional faces, canonically ordered. Faces of simplicial
/// cones are exactly the ray subsets.
std::vector<Cone> cones_of_dim(const Fan& f, int k);

/// Star subdivision of a two-dimensional maximal cone at the sum of its rays
/// (the corner cut). Smoothness and completeness are preserved.
Fan corner_cut(const Fan& f, int max_cone_index);

/// Iterated random corner cuts of the projective plane fan; always smooth and
/// complete by construction.
Fan random_corner_cut_fan(std::uint64_t seed, int cuts);

}  // namespace logtb::fans
