#pragma once

#include <string>

#include "logtb/quadext.hpp"

namespace logtb::exact {

/// Element of Q(sqrt d)(i). Equality and squared modulus are exact.
class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(QuadExt real) : re_(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(int v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
    ExactComplex(QuadExt real, QuadExt imag) : re_(std::move(real)), im_(std::move(imag)) {}

    static ExactComplex i() { return {QuadExt(0), QuadExt(1)}; }

    const QuadExt& re() const { return re_; }
    const QuadExt& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_rational() const { return im_.is_zero() && re_.is_rational(); }

    /// |z|^2 = re^2 + im^2, an exact element of Q(sqrt d).
    QuadExt norm_squared() const { return re_ * re_ + im_ * im_; }

    ExactComplex conj() const { return {re_, -im_}; }
    ExactComplex inverse() const;  // throws std::domain_error on zero

    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
        return {x.re_ + y.re_, x.im_ + y.im_};
    }
    friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
        return {x.re_ - y.re_, x.im_ - y.im_};
    }
    friend ExactComplex operator-(const ExactComplex& x) { return {-x.re_, -x.im_}; }
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
        return x * y.inverse();
    }

    ExactComplex& operator+=(const ExactComplex& y) { return *this = *this + y; }
    ExactComplex& operator-=(const ExactComplex& y) { return *this = *this - y; }
    ExactComplex& operator*=(const ExactComplex& y) { return *this = *this * y; }
    ExactComplex& operator/=(const ExactComplex& y) { return *this = *this / y; }

    friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

    std::string to_string() const;

private:
    QuadExt re_;
    QuadExt im_;
};

}  // namespace logtb::exact
