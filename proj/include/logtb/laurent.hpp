#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logtb/exact_complex.hpp"

namespace logtb::chartcalc {

using exact::ExactComplex;

/// Sparse Laurent polynomial in n variables over Q(sqrt d)(i). Terms are kept
/// in lexicographic exponent order (the std::map order), zero coefficients are
/// never stored.
class LaurentPoly {
public:
    using Exponents = std::vector<std::int64_t>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, ExactComplex c);
    /// The monomial c * z^exponents.
    static LaurentPoly monomial(int nvars, Exponents exponents, ExactComplex c);
    /// The single variable z_i.
    static LaurentPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, ExactComplex>& terms() const { return terms_; }

    bool is_constant() const;
    ExactComplex constant_value() const;  // 0 for the zero polynomial

    void add_term(const Exponents& e, const ExactComplex& c);

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x);
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    LaurentPoly operator*(const ExactComplex& c) const;

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
        return x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

    /// Multiply by z_i^power (power may be negative).
    LaurentPoly shifted(int var, std::int64_t power) const;

    /// Formal partial derivative d/dz_i.
    LaurentPoly derivative(int var) const;

    /// z_i * d/dz_i; multiplies each term by its z_i exponent.
    LaurentPoly log_derivative(int var) const;

    /// Smallest z_i exponent over all terms; nullopt for the zero polynomial.
    std::optional<std::int64_t> min_exponent(int var) const;

    bool divisible_by_var(int var) const;  // all z_i exponents >= 1

    /// Keep only the terms with z_i exponent zero (formal restriction to z_i = 0).
    LaurentPoly restricted_to_zero(int var) const;

    /// Substitute z_j = prod_k w_k^(A[j][k]): exponents transform by A^T.
    LaurentPoly substituted(const exact::IntMatrix& a) const;

    std::string to_string() const;  // for diagnostics

private:
    int nvars_ = 0;
    std::map<Exponents, ExactComplex> terms_;
};

}  // namespace logtb::chartcalc
