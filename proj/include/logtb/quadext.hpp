#pragma once

#include <cstdint>
#include <string>

#include "logtb/numbers.hpp"

namespace logtb::exact {

/// The integer d of the real-quadratic extension Q(sqrt d). Process-wide,
/// default 2; must be >= 2 and not a perfect square. Set it before creating
/// values with a nonzero sqrt part.
std::int64_t quad_discriminant();
void set_quad_discriminant(std::int64_t d);

/// Element a + b*sqrt(d) of Q(sqrt d). Plain rationals are b = 0, so the
/// extension costs nothing unless an input actually mentions sqrt(d).
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational rational_part) : a_(std::move(rational_part)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int v) : a_(v) {}                                          // NOLINT(google-explicit-constructor)
    QuadExt(Rational rational_part, Rational sqrt_part)
        : a_(std::move(rational_part)), b_(std::move(sqrt_part)) {}

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Exact sign of the real number a + b*sqrt(d).
    int sign() const;

    QuadExt inverse() const;  // throws std::domain_error on zero

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    std::string to_string() const;

private:
    Rational a_;
    Rational b_;
};

}  // namespace logtb::exact
