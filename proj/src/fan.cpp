#include "logtb/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "logtb/errors.hpp"
#include "logtb/linalg.hpp"

namespace logtb::fans {

using exact::IntMatrix;

exact::IntMatrix Fan::ray_matrix(const Cone& cone) const {
    IntMatrix m(n, cone.dim());
    for (int c = 0; c < cone.dim(); ++c) {
        const auto& gen = rays[cone.ray_indices[c]].generator;
        for (int r = 0; r < n; ++r) m.at(r, c) = gen[r];
    }
    return m;
}

std::string violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::ray_dimension: return "ray_dimension";
        case ViolationKind::ray_zero: return "ray_zero";
        case ViolationKind::ray_not_primitive: return "ray_not_primitive";
        case ViolationKind::ray_duplicate: return "ray_duplicate";
        case ViolationKind::cone_bad_index: return "cone_bad_index";
        case ViolationKind::cone_duplicate_index: return "cone_duplicate_index";
        case ViolationKind::cone_duplicate: return "cone_duplicate";
        case ViolationKind::cone_nested: return "cone_nested";
        case ViolationKind::cone_not_strongly_convex: return "cone_not_strongly_convex";
        case ViolationKind::cone_not_simplicial: return "cone_not_simplicial";
        case ViolationKind::intersection_not_face: return "intersection_not_face";
        case ViolationKind::no_max_cones: return "no_max_cones";
    }
    return "unknown";
}

namespace {

std::string cone_label(int index, const Cone& cone) {
    std::ostringstream os;
    os << "max cone " << index << " (rays";
    for (int r : cone.ray_indices) os << ' ' << r;
    os << ')';
    return os.str();
}

Int gcd_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

std::vector<std::vector<Rational>> rational_rows_of_rays(const Fan& f, const Cone& cone) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(cone.dim());
    for (int idx : cone.ray_indices) {
        std::vector<Rational> row;
        row.reserve(f.n);
        for (const auto& x : f.rays[idx].generator) row.emplace_back(x);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Is the cone pointed? Equivalent to: no nontrivial nonnegative combination
/// of the generators is zero.
bool cone_is_pointed(const Fan& f, const Cone& cone) {
    const int k = cone.dim();
    if (k == 0) return true;
    lp::System sys;
    sys.num_vars = k;
    for (int j = 0; j < f.n; ++j) {
        auto& row = sys.add(lp::RowKind::equal);
        for (int i = 0; i < k; ++i)
            row.coeffs[i] = Rational(f.rays[cone.ray_indices[i]].generator[j]);
    }
    auto& one = sys.add(lp::RowKind::equal);
    for (int i = 0; i < k; ++i) one.coeffs[i] = 1;
    one.rhs = 1;
    for (int i = 0; i < k; ++i) {
        auto& pos = sys.add(lp::RowKind::greater_equal);
        pos.coeffs[i] = 1;
    }
    return !lp::solve_feasibility(sys).feasible;
}

/// Strict separation: a functional vanishing on the common rays, >= 1 on the
/// remaining rays of `a`, <= -1 on the remaining rays of `b`. Feasible exactly
/// when cone(common) is the intersection of the two cones and a face of each.
bool cones_meet_in_common_face(const Fan& f, const Cone& a, const Cone& b) {
    std::vector<int> common;
    std::set_intersection(a.ray_indices.begin(), a.ray_indices.end(),
                          b.ray_indices.begin(), b.ray_indices.end(),
                          std::back_inserter(common));
    lp::System sys;
    sys.num_vars = f.n;
    auto add_row = [&](int ray, lp::RowKind kind, int sign, bool strict) {
        auto& row = sys.add(kind);
        for (int j = 0; j < f.n; ++j)
            row.coeffs[j] = Rational(sign * f.rays[ray].generator[j]);
        row.rhs = strict ? 1 : 0;
    };
    for (int r : common) add_row(r, lp::RowKind::equal, 1, false);
    for (int r : a.ray_indices)
        if (!std::binary_search(common.begin(), common.end(), r))
            add_row(r, lp::RowKind::greater_equal, 1, true);
    for (int r : b.ray_indices)
        if (!std::binary_search(common.begin(), common.end(), r))
            add_row(r, lp::RowKind::greater_equal, -1, true);
    return lp::solve_feasibility(sys).feasible;
}

}  // namespace

ValidationReport validate_fan(const Fan& f) {
    ValidationReport report;
    auto flag = [&](ViolationKind kind, std::string where) {
        report.valid = false;
        report.violations.push_back({kind, std::move(where)});
    };

    if (f.n < 0) flag(ViolationKind::ray_dimension, "negative lattice rank");

    std::set<std::vector<Int>> seen_rays;
    for (size_t i = 0; i < f.rays.size(); ++i) {
        const auto& g = f.rays[i].generator;
        const std::string where = "ray " + std::to_string(i);
        if (int(g.size()) != f.n) {
            flag(ViolationKind::ray_dimension, where);
            continue;
        }
        const Int g0 = gcd_of(g);
        if (g0.is_zero())
            flag(ViolationKind::ray_zero, where);
        else if (g0 != 1)
            flag(ViolationKind::ray_not_primitive, where);
        if (!seen_rays.insert(g).second) flag(ViolationKind::ray_duplicate, where);
    }
    if (f.max_cones.empty()) flag(ViolationKind::no_max_cones, "fan");
    if (!report.valid) return report;  // cone checks need sane rays

    std::set<std::vector<int>> seen_cones;
    std::vector<char> cone_ok(f.max_cones.size(), 1);
    for (size_t i = 0; i < f.max_cones.size(); ++i) {
        const Cone& cone = f.max_cones[i];
        const std::string where = cone_label(int(i), cone);
        bool indices_ok = true;
        for (int r : cone.ray_indices)
            if (r < 0 || r >= int(f.rays.size())) {
                flag(ViolationKind::cone_bad_index, where);
                indices_ok = false;
            }
        if (indices_ok) {
            auto sorted = cone.ray_indices;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                flag(ViolationKind::cone_duplicate_index, where);
                indices_ok = false;
            } else if (!seen_cones.insert(sorted).second) {
                flag(ViolationKind::cone_duplicate, where);
            }
        }
        if (!indices_ok) {
            cone_ok[i] = 0;
            continue;
        }
        if (!cone_is_pointed(f, cone)) {
            flag(ViolationKind::cone_not_strongly_convex, where);
            cone_ok[i] = 0;
            continue;
        }
        if (exact::row_rank(rational_rows_of_rays(f, cone)) != cone.dim()) {
            flag(ViolationKind::cone_not_simplicial, where);
            cone_ok[i] = 0;
        }
    }

    for (size_t i = 0; i < f.max_cones.size(); ++i)
        for (size_t j = i + 1; j < f.max_cones.size(); ++j) {
            if (!cone_ok[i] || !cone_ok[j]) continue;
            const auto& a = f.max_cones[i].ray_indices;
            const auto& b = f.max_cones[j].ray_indices;
            const std::string where =
                "max cones " + std::to_string(i) + " and " + std::to_string(j);
            if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
                std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                flag(ViolationKind::cone_nested, where);
                continue;
            }
            if (!cones_meet_in_common_face(f, f.max_cones[i], f.max_cones[j]))
                flag(ViolationKind::intersection_not_face, where);
        }
    return report;
}

void require_valid(const Fan& f) {
    const auto report = validate_fan(f);
    if (report.valid) return;
    std::ostringstream os;
    os << "invalid fan:";
    for (const auto& v : report.violations)
        os << ' ' << violation_kind_name(v.kind) << " at " << v.where << ';';
    throw ValidationError(os.str());
}

bool cone_is_smooth(const Fan& f, const Cone& cone) {
    if (cone.dim() == 0) return true;
    const auto snf = exact::smith_normal_form(f.ray_matrix(cone));
    const auto factors = snf.invariant_factors();
    if (int(factors.size()) != cone.dim()) return false;  // degenerate rays
    return std::all_of(factors.begin(), factors.end(),
                       [](const Int& d) { return d == 1; });
}

SmoothnessReport is_smooth(const Fan& f) {
    require_valid(f);
    SmoothnessReport report;
    for (size_t i = 0; i < f.max_cones.size(); ++i) {
        const Cone& cone = f.max_cones[i];
        if (cone.dim() == 0) continue;
        const auto snf = exact::smith_normal_form(f.ray_matrix(cone));
        auto factors = snf.invariant_factors();
        const bool ok = int(factors.size()) == cone.dim() &&
                        std::all_of(factors.begin(), factors.end(),
                                    [](const Int& d) { return d == 1; });
        if (!ok) {
            report.smooth = false;
            report.failures.push_back({int(i), std::move(factors)});
        }
    }
    return report;
}

std::vector<WallInfo> walls(const Fan& f) {
    require_valid(f);
    for (const auto& cone : f.max_cones)
        if (cone.dim() != f.n)
            throw NotPure("walls: maximal cone of dimension " +
                          std::to_string(cone.dim()) + " in a rank-" +
                          std::to_string(f.n) + " fan");

    std::map<std::vector<int>, WallInfo> by_face;
    for (size_t i = 0; i < f.max_cones.size(); ++i) {
        const auto& idx = f.max_cones[i].ray_indices;
        for (int drop = 0; drop < int(idx.size()); ++drop) {
            std::vector<int> face;
            face.reserve(idx.size() - 1);
            for (int k = 0; k < int(idx.size()); ++k)
                if (k != drop) face.push_back(idx[k]);
            auto& info = by_face[face];
            if (info.incident.empty()) info.wall = Cone{face};
            info.incident.push_back(int(i));
            info.opposite_ray.push_back(idx[drop]);
        }
    }
    std::vector<WallInfo> out;
    out.reserve(by_face.size());
    for (auto& [face, info] : by_face) {
        if (info.incident.size() > 2)
            throw ValidationError("wall shared by more than two maximal cones");
        out.push_back(std::move(info));
    }
    return out;
}

bool cone_contains(const Fan& f, const Cone& cone, const std::vector<Rational>& p) {
    if (int(p.size()) != f.n) throw DimensionMismatch("point dimension");
    // rows of the system are the n coordinates, unknowns the cone coefficients
    std::vector<std::vector<Rational>> a(f.n, std::vector<Rational>(cone.dim()));
    for (int c = 0; c < cone.dim(); ++c)
        for (int r = 0; r < f.n; ++r)
            a[r][c] = Rational(f.rays[cone.ray_indices[c]].generator[r]);
    auto sol = exact::solve_linear(std::move(a), p);
    if (!sol) return false;
    return std::all_of(sol->begin(), sol->end(),
                       [](const Rational& x) { return x.sign() >= 0; });
}

CompletenessReport is_complete(const Fan& f, std::uint64_t seed) {
    require_valid(f);
    for (const auto& cone : f.max_cones)
        if (cone.dim() != f.n)
            throw NotPure("is_complete: maximal cone of dimension " +
                          std::to_string(cone.dim()) + " in a rank-" +
                          std::to_string(f.n) + " fan");

    CompletenessReport report;
    report.wall_pairing_ok = true;
    for (const auto& wall : walls(f))
        if (wall.incident.size() != 2) report.wall_pairing_ok = false;

    report.sampling_ok = true;
    report.samples = 32;
    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
        return lo + std::int64_t(rng() % std::uint64_t(hi - lo + 1));
    };
    for (int s = 0; s < report.samples && report.sampling_ok; ++s) {
        std::vector<Rational> p(f.n);
        bool zero = true;
        for (auto& x : p) {
            x = Rational(Int(draw(-20, 20)), Int(draw(1, 20)));
            zero = zero && x.is_zero();
        }
        if (zero && f.n > 0) { --s; continue; }
        bool covered = f.n == 0;
        for (const auto& cone : f.max_cones)
            if (cone_contains(f, cone, p)) { covered = true; break; }
        if (!covered) {
            report.sampling_ok = false;
            report.uncovered_point = p;
        }
    }
    report.complete = report.wall_pairing_ok && report.sampling_ok;
    return report;
}

std::vector<int> canonical_cone_order(const Fan& f) {
    std::vector<int> order(f.max_cones.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return f.max_cones[a].ray_indices < f.max_cones[b].ray_indices ||
               (f.max_cones[a].ray_indices == f.max_cones[b].ray_indices && a < b);
    });
    return order;
}

lp::System projectivity_system(const Fan& f) {
    lp::System sys;
    sys.num_vars = f.n * int(f.max_cones.size());
    for (const auto& wall : walls(f)) {
        if (wall.incident.size() != 2) continue;  // precondition guards this
        const int ca = wall.incident[0];
        const int cb = wall.incident[1];
        auto fill = [&](lp::Row& row, int ray) {
            for (int j = 0; j < f.n; ++j) {
                const Rational v(f.rays[ray].generator[j]);
                row.coeffs[ca * f.n + j] += v;
                row.coeffs[cb * f.n + j] -= v;
            }
        };
        for (int ray : wall.wall.ray_indices) fill(sys.add(lp::RowKind::equal), ray);
        auto& gap = sys.add(lp::RowKind::greater_equal);
        fill(gap, wall.opposite_ray[1]);  // the ray of cb outside the wall
        gap.rhs = 1;
    }
    return sys;
}

ProjectivityCertificate is_projective(const Fan& f) {
    require_valid(f);
    if (!is_smooth(f).smooth)
        throw PreconditionFailed("is_projective: fan is not smooth");
    if (!is_complete(f).complete)
        throw PreconditionFailed("is_projective: fan is not complete");

    const auto sys = projectivity_system(f);
    const auto result = lp::solve_feasibility(sys);

    ProjectivityCertificate cert;
    cert.cone_order = canonical_cone_order(f);
    cert.feasible = result.feasible;
    if (result.feasible) {
        cert.support.reserve(f.max_cones.size());
        for (int cone_index : cert.cone_order) {
            std::vector<Rational> m(f.n);
            for (int j = 0; j < f.n; ++j) m[j] = result.point[cone_index * f.n + j];
            cert.support.push_back(std::move(m));
        }
    } else {
        cert.farkas = result.farkas;
    }
    return cert;
}

bool verify_projectivity_certificate(const Fan& f, const ProjectivityCertificate& cert) {
    const auto order = canonical_cone_order(f);
    if (cert.cone_order != order) return false;
    if (!cert.feasible) return lp::farkas_valid(projectivity_system(f), cert.farkas);

    if (cert.support.size() != f.max_cones.size()) return false;
    std::vector<std::vector<Rational>> m_of(f.max_cones.size());
    for (size_t k = 0; k < order.size(); ++k) {
        if (int(cert.support[k].size()) != f.n) return false;
        m_of[order[k]] = cert.support[k];
    }
    auto pairing = [&](const std::vector<Rational>& m, int ray) {
        Rational v(0);
        for (int j = 0; j < f.n; ++j) v += m[j] * Rational(f.rays[ray].generator[j]);
        return v;
    };
    for (const auto& wall : walls(f)) {
        if (wall.incident.size() != 2) return false;
        const auto& ma = m_of[wall.incident[0]];
        const auto& mb = m_of[wall.incident[1]];
        for (int ray : wall.wall.ray_indices)
            if (pairing(ma, ray) != pairing(mb, ray)) return false;
        const int v = wall.opposite_ray[1];
        if (pairing(ma, v) <= pairing(mb, v)) return false;  // strictness
    }
    return true;
}

Fan projective_space_fan(int n) {
    if (n < 1) throw PreconditionFailed("projective_space_fan: n >= 1");
    Fan f;
    f.n = n;
    for (int i = 0; i < n; ++i) {
        Ray r{std::vector<Int>(n)};
        r.generator[i] = 1;
        f.rays.push_back(std::move(r));
    }
    f.rays.push_back(Ray{std::vector<Int>(n, Int(-1))});
    for (int drop = n; drop >= 0; --drop) {
        Cone c;
        for (int i = 0; i <= n; ++i)
            if (i != drop) c.ray_indices.push_back(i);
        f.max_cones.push_back(std::move(c));
    }
    return f;
}

Fan product_p1_fan(int n) {
    if (n < 1) throw PreconditionFailed("product_p1_fan: n >= 1");
    Fan f;
    f.n = n;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 2; ++s) {
            Ray r{std::vector<Int>(n)};
            r.generator[i] = s == 0 ? 1 : -1;
            f.rays.push_back(std::move(r));  // ray 2i = +e_i, 2i+1 = -e_i
        }
    for (int mask = 0; mask < (1 << n); ++mask) {
        Cone c;
        for (int i = 0; i < n; ++i)
            c.ray_indices.push_back(2 * i + ((mask >> i) & 1));
        std::sort(c.ray_indices.begin(), c.ray_indices.end());
        f.max_cones.push_back(std::move(c));
    }
    return f;
}

Fan hirzebruch_fan(int a) {
    if (a < 0) throw PreconditionFailed("hirzebruch_fan: a >= 0");
    Fan f;
    f.n = 2;
    f.rays = {Ray{{1, 0}}, Ray{{0, 1}}, Ray{{-1, Int(a)}}, Ray{{0, -1}}};
    f.max_cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 3}}, Cone{{0, 3}}};
    return f;
}

Fan affine_space_fan(int n) {
    if (n < 1) throw PreconditionFailed("affine_space_fan: n >= 1");
    Fan f;
    f.n = n;
    for (int i = 0; i < n; ++i) {
        Ray r{std::vector<Int>(n)};
        r.generator[i] = 1;
        f.rays.push_back(std::move(r));
    }
    Cone c;
    for (int i = 0; i < n; ++i) c.ray_indices.push_back(i);
    f.max_cones.push_back(std::move(c));
    return f;
}

std::vector<Cone> cones_of_dim(const Fan& f, int k) {
    require_valid(f);
    if (k < 0 || k > f.n) return {};
    std::set<std::vector<int>> faces;
    for (const auto& cone : f.max_cones) {
        const auto& idx = cone.ray_indices;
        if (int(idx.size()) < k) continue;
        // enumerate k-subsets of the sorted index list
        std::vector<int> pick(k);
        std::vector<int> stack;
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == k) {
                faces.insert(pick);
                return;
            }
            for (int i = start; i <= int(idx.size()) - (k - depth); ++i) {
                pick[depth] = idx[i];
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    std::vector<Cone> out;
    out.reserve(faces.size());
    for (const auto& face : faces) out.push_back(Cone{face});
    return out;
}

Fan corner_cut(const Fan& f, int max_cone_index) {
    require_valid(f);
    if (f.n != 2) throw PreconditionFailed("corner_cut: surface fans only");
    if (max_cone_index < 0 || max_cone_index >= int(f.max_cones.size()))
        throw PreconditionFailed("corner_cut: cone index out of range");
    const Cone cone = f.max_cones[max_cone_index];
    if (cone.dim() != 2) throw PreconditionFailed("corner_cut: cone must be 2-dimensional");

    const auto& u = f.rays[cone.ray_indices[0]].generator;
    const auto& v = f.rays[cone.ray_indices[1]].generator;
    std::vector<Int> w{u[0] + v[0], u[1] + v[1]};
    const Int g = gcd(w[0], w[1]);
    if (g != 1) throw PreconditionFailed("corner_cut: cone is not smooth");

    Fan out = f;
    const int w_index = int(out.rays.size());
    out.rays.push_back(Ray{w});
    out.max_cones.erase(out.max_cones.begin() + max_cone_index);
    Cone left{{cone.ray_indices[0], w_index}};
    Cone right{{cone.ray_indices[1], w_index}};
    out.max_cones.push_back(left);
    out.max_cones.push_back(right);
    return out;
}

Fan random_corner_cut_fan(std::uint64_t seed, int cuts) {
    Fan f = projective_space_fan(2);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cuts; ++i)
        f = corner_cut(f, int(rng() % f.max_cones.size()));
    return f;
}

}  // namespace logtb::fans
