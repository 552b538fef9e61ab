#include "logtb/laurent.hpp"

#include <sstream>

#include "logtb/errors.hpp"
#include "logtb/int_matrix.hpp"

namespace logtb::chartcalc {

LaurentPoly LaurentPoly::constant(int nvars, ExactComplex c) {
    LaurentPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponents exponents, ExactComplex c) {
    if (int(exponents.size()) != nvars) throw DimensionMismatch("monomial exponent length");
    LaurentPoly p(nvars);
    p.add_term(exponents, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, std::move(e), ExactComplex(1));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

ExactComplex LaurentPoly::constant_value() const {
    if (terms_.empty()) return ExactComplex(0);
    if (!is_constant()) throw PreconditionFailed("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exponents& e, const ExactComplex& c) {
    if (int(e.size()) != nvars_) throw DimensionMismatch("exponent vector length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.nvars_ != y.nvars_) throw DimensionMismatch("adding polynomials of different arity");
    LaurentPoly out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

LaurentPoly operator-(const LaurentPoly& x) {
    LaurentPoly out(x.nvars_);
    for (const auto& [e, c] : x.terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.nvars_ != y.nvars_)
        throw DimensionMismatch("multiplying polynomials of different arity");
    LaurentPoly out(x.nvars_);
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            LaurentPoly::Exponents e(x.nvars_);
            for (int i = 0; i < x.nvars_; ++i) e[i] = ex[i] + ey[i];
            out.add_term(e, cx * cy);
        }
    return out;
}

LaurentPoly LaurentPoly::operator*(const ExactComplex& c) const {
    LaurentPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

LaurentPoly LaurentPoly::shifted(int var, std::int64_t power) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents shifted = e;
        shifted.at(var) += power;
        out.terms_.emplace(std::move(shifted), c);
    }
    return out;
}

LaurentPoly LaurentPoly::derivative(int var) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0) continue;
        Exponents d = e;
        const std::int64_t k = d[var]--;
        out.add_term(d, c * ExactComplex(Rational(k)));
    }
    return out;
}

LaurentPoly LaurentPoly::log_derivative(int var) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0) continue;
        out.add_term(e, c * ExactComplex(Rational(e[var])));
    }
    return out;
}

std::optional<std::int64_t> LaurentPoly::min_exponent(int var) const {
    std::optional<std::int64_t> best;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (!best || e.at(var) < *best) best = e.at(var);
    }
    return best;
}

bool LaurentPoly::divisible_by_var(int var) const {
    const auto m = min_exponent(var);
    return !m || *m >= 1;
}

LaurentPoly LaurentPoly::restricted_to_zero(int var) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (e.at(var) == 0) out.terms_.emplace(e, c);
    return out;
}

LaurentPoly LaurentPoly::substituted(const exact::IntMatrix& a) const {
    if (a.rows() != nvars_) throw DimensionMismatch("substitution matrix shape");
    LaurentPoly out(a.cols());
    for (const auto& [e, c] : terms_) {
        Exponents trans(a.cols(), 0);
        for (int k = 0; k < a.cols(); ++k) {
            Int acc = 0;
            for (int j = 0; j < nvars_; ++j) acc += a.at(j, k) * Int(e[j]);
            trans[k] = to_int64_checked(acc);
        }
        out.add_term(trans, c);
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) os << "*z" << i << "^" << e[i];
    }
    return os.str();
}

}  // namespace logtb::chartcalc
