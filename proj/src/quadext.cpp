#include "logtb/quadext.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace logtb::exact {

namespace {

std::atomic<std::int64_t> g_quad_d{2};

bool is_perfect_square(std::int64_t d) {
    const auto r = std::int64_t(std::sqrt(double(d)));
    for (std::int64_t s = r > 1 ? r - 1 : 0; s <= r + 1; ++s)
        if (s * s == d) return true;
    return false;
}

}  // namespace

std::int64_t quad_discriminant() { return g_quad_d.load(std::memory_order_relaxed); }

void set_quad_discriminant(std::int64_t d) {
    if (d < 2 || is_perfect_square(d))
        throw std::invalid_argument("quadratic discriminant must be >= 2 and not a square");
    g_quad_d.store(d, std::memory_order_relaxed);
}

int QuadExt::sign() const {
    if (b_.is_zero()) return sign_of(a_);
    if (a_.is_zero()) return sign_of(b_);
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b|*sqrt(d) decides; equality would make sqrt(d) rational
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * quad_discriminant();
    if (lhs == rhs) throw std::logic_error("quadratic discriminant is a rational square");
    return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::inverse() const {
    // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - d b^2)
    const Rational denom = a_ * a_ - b_ * b_ * quad_discriminant();
    if (denom.is_zero()) {
        if (is_zero()) throw std::domain_error("division by zero in Q(sqrt d)");
        throw std::logic_error("quadratic discriminant is a rational square");
    }
    return {a_ / denom, -b_ / denom};
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Rational d(quad_discriminant());
    return {x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

std::string QuadExt::to_string() const {
    if (b_.is_zero()) return format_rational(a_);
    return format_rational(a_) + "+" + format_rational(b_) + "*sqrt(" +
           std::to_string(quad_discriminant()) + ")";
}

}  // namespace logtb::exact
